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

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace asgenus;
using asgenus::testing::Rng;

namespace {

RationalFunction regular_at(const Fq& f, const Poly& P, int max_deg, Rng& rng) {
    while (true) {
        RationalFunction D = asgenus::testing::random_ratfunc(f, max_deg, max_deg, rng);
        if (pole_order(D, P) == 0) return D;
    }
}

}  // namespace

TEST_CASE("Hasse symbols match the worked examples on both paths") {
    Fq f2 = Fq::make(2, 1);
    Poly t = Poly::t(f2);
    Poly one = Poly::one(f2);

    RationalFunction inv_t = RationalFunction::make(one, t);
    RationalFunction inv_t1 = RationalFunction::make(one, t + one);
    Poly P3 = t.pow(3) + t + one;

    CHECK(hasse_symbol(inv_t, t + one) == 1);
    CHECK(hasse_symbol(inv_t, t * t + t + one) == 1);
    CHECK(hasse_symbol(inv_t1, P3) == 0);

    CHECK(hasse_symbol_powersum(inv_t, t + one) == 1);
    CHECK(hasse_symbol_powersum(inv_t, t * t + t + one) == 1);
    CHECK(hasse_symbol_powersum(inv_t1, P3) == 0);
}

TEST_CASE("splitting oracle matches the worked examples") {
    Fq f2 = Fq::make(2, 1);
    Poly t = Poly::t(f2);
    Poly one = Poly::one(f2);

    CHECK(splitting_oracle(RationalFunction::make(one, t), t + one) == SplitType::Inert);
    CHECK(splitting_oracle(RationalFunction::make(one, t + one), t.pow(3) + t + one) ==
          SplitType::SplitsCompletely);
    // D congruent to 0 mod P splits
    CHECK(splitting_oracle(RationalFunction::from_poly(t * t + t), t + one) == SplitType::SplitsCompletely);
}

TEST_CASE("symbol errors: ramified place and oversized residue field") {
    Fq f2 = Fq::make(2, 1);
    Poly t = Poly::t(f2);
    Poly one = Poly::one(f2);
    RationalFunction D = RationalFunction::make(one, t);

    CHECK_THROWS_AS(hasse_symbol(D, t), RamifiedPlaceError);
    CHECK_THROWS_AS(hasse_symbol_powersum(D, t), RamifiedPlaceError);
    CHECK_THROWS_AS(splitting_oracle(D, t), RamifiedPlaceError);
    CHECK_THROWS_AS(splitting_oracle(D, t.pow(3) + t + one, 4), ResidueFieldTooLargeError);
}

TEST_CASE("zero and p-shifted arguments have zero symbol") {
    Rng rng(40);
    for (auto [p, n] : std::vector<std::pair<int64_t, int>>{{2, 1}, {3, 1}, {2, 2}}) {
        Fq f = Fq::make(p, n);
        for (const Poly& P : irreducibles_up_to(f, 2)) {
            CHECK(hasse_symbol(RationalFunction::zero(f), P) == 0);
            CHECK(hasse_symbol_powersum(RationalFunction::zero(f), P) == 0);
            for (int it = 0; it < 20; ++it) {
                RationalFunction B = regular_at(f, P, 4, rng);
                RationalFunction shifted = B.pow(p) - B;
                CHECK(hasse_symbol(shifted, P) == 0);
                CHECK(hasse_symbol_powersum(shifted, P) == 0);
            }
        }
    }
}

TEST_CASE("the symbol is additive and F_p-scaling-equivariant") {
    Rng rng(41);
    for (auto [p, n] : std::vector<std::pair<int64_t, int>>{{2, 1}, {3, 1}, {5, 1}, {2, 2}}) {
        Fq f = Fq::make(p, n);
        for (const Poly& P : irreducibles_up_to(f, 2)) {
            for (int it = 0; it < 15; ++it) {
                RationalFunction a = regular_at(f, P, 4, rng);
                RationalFunction b = regular_at(f, P, 4, rng);
                CHECK(hasse_symbol(a + b, P) == (hasse_symbol(a, P) + hasse_symbol(b, P)) % p);
                for (int64_t x = 1; x < p; ++x) {
                    RationalFunction xa = RationalFunction::from_poly(Poly::constant(f, x)) * a;
                    CHECK(hasse_symbol(xa, P) == (x * hasse_symbol(a, P)) % p);
                }
            }
        }
    }
}

TEST_CASE("the two symbol paths and the oracle agree everywhere") {
    Rng rng(42);
    for (auto [p, n] : std::vector<std::pair<int64_t, int>>{{2, 1}, {3, 1}, {2, 2}}) {
        Fq f = Fq::make(p, n);
        for (const Poly& P : irreducibles_up_to(f, 2)) {
            for (int it = 0; it < 25; ++it) {
                RationalFunction D = regular_at(f, P, 5, rng);
                SymbolValue s = hasse_symbol(D, P);
                CHECK(s == hasse_symbol_powersum(D, P));
                CHECK((s == 0) == (splitting_oracle(D, P) == SplitType::SplitsCompletely));
            }
        }
    }
}
