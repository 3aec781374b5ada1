/*
   Copyright 2026 The asgenus authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Shared deterministic generators for the test suites.

#ifndef ASGENUS_TESTS_HELPERS_HPP
#define ASGENUS_TESTS_HELPERS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include <asgenus/asgenus.hpp>

namespace asgenus::testing {

using Rng = std::mt19937_64;

inline Fq::Elem random_elem(const Fq& f, Rng& rng) {
    return f.from_index(static_cast<int64_t>(rng() % static_cast<std::uint64_t>(f.q())));
}

inline Poly random_poly(const Fq& f, int max_deg, Rng& rng) {
    int deg = static_cast<int>(rng() % static_cast<std::uint64_t>(max_deg + 2)) - 1;  // -1 = zero poly
    if (deg < 0) return Poly::zero(f);
    std::vector<Fq::Elem> cs;
    cs.reserve(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i) cs.push_back(random_elem(f, rng));
    while (f.is_zero(cs.back())) cs.back() = random_elem(f, rng);
    return Poly(f, std::move(cs));
}

inline Poly random_monic(const Fq& f, int deg, Rng& rng) {
    std::vector<Fq::Elem> cs;
    cs.reserve(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i < deg; ++i) cs.push_back(random_elem(f, rng));
    cs.push_back(f.one());
    return Poly(f, std::move(cs));
}

inline Poly random_nonzero_poly(const Fq& f, int max_deg, Rng& rng) {
    while (true) {
        Poly p = random_poly(f, max_deg, rng);
        if (!p.is_zero()) return p;
    }
}

inline RationalFunction random_ratfunc(const Fq& f, int max_num_deg, int max_den_deg, Rng& rng) {
    Poly num = random_poly(f, max_num_deg, rng);
    Poly den = random_monic(f, static_cast<int>(rng() % static_cast<std::uint64_t>(max_den_deg + 1)), rng);
    return RationalFunction::make(std::move(num), std::move(den));
}

inline RationalFunction random_nonzero_ratfunc(const Fq& f, int max_num_deg, int max_den_deg, Rng& rng) {
    while (true) {
        RationalFunction r = random_ratfunc(f, max_num_deg, max_den_deg, rng);
        if (!r.is_zero()) return r;
    }
}

}  // namespace asgenus::testing

#endif  // ASGENUS_TESTS_HELPERS_HPP
