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

/**
 * @file invariants.hpp
 *
 * Genus-theory invariants of K = k(y), y^p - y = D:
 *
 *   - lambda1 = dim_{F_p} Cl(K)^G: m - 1 when K is real, m when imaginary;
 *   - the genus field G(K), generated over k by y_i with y_i^p - y_i = D_i
 *     (plus z with z^p - z = f when K is imaginary), of degree p^{lambda1}
 *     over K;
 *   - the Redei matrix R over F_p, off-diagonals {D_j/P_i}, diagonals
 *     forced by the row-sum condition sum_j R_ij + {f/P_i} = 0;
 *   - lambda2 = m - rank(R) (imaginary) or m - 1 - rank(R) (real).
 */

#ifndef ASGENUS_INVARIANTS_HPP
#define ASGENUS_INVARIANTS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "asnorm.hpp"
#include "symbols.hpp"

namespace asgenus {

/// dim_{F_p} of the ambiguous ideal classes Cl(K)^G.
inline int64_t lambda1(const NormalizedAS& norm) {
    return norm.classification == Classification::Real ? norm.m() - 1 : norm.m();
}

/// The genus field, recorded by the defining right-hand sides of its
/// generators; no splitting-field arithmetic is performed.
struct GenusFieldDescription {
    std::vector<LocalPart> local_generators;  // y_i^p - y_i = Q_i/P_i^{e_i}
    std::optional<Poly> f_generator;          // z^p - z = f, present iff K imaginary
    int64_t relative_degree;                  // [G(K):K] = p^{lambda1}

    int generator_count() const {
        return static_cast<int>(local_generators.size()) + (f_generator ? 1 : 0);
    }
};

inline GenusFieldDescription genus_field(const NormalizedAS& norm) {
    int64_t deg = detail::checked_pow(norm.field().p(), static_cast<int>(lambda1(norm)));
    if (deg < 0) throw InternalError("genus-field degree overflow");
    GenusFieldDescription out{norm.parts, std::nullopt, deg};
    if (norm.classification != Classification::Real) out.f_generator = norm.f;
    return out;
}

/// m x m matrix over F_p with row/column labels in the canonical P_i order.
struct RedeiMatrix {
    int64_t p;
    std::vector<Poly> places;
    std::vector<std::vector<int64_t>> entries;

    int m() const { return static_cast<int>(places.size()); }
};

inline RedeiMatrix redei_matrix(const NormalizedAS& norm) {
    const int m = norm.m();
    const int64_t p = norm.field().p();
    RedeiMatrix R{p, {}, std::vector<std::vector<int64_t>>(static_cast<std::size_t>(m),
                                                           std::vector<int64_t>(static_cast<std::size_t>(m), 0))};
    R.places.reserve(static_cast<std::size_t>(m));
    for (const auto& part : norm.parts) R.places.push_back(part.P);

    RationalFunction f_rat = RationalFunction::from_poly(norm.f);
    for (int i = 0; i < m; ++i) {
        int64_t row_sum = 0;
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            int64_t v = hasse_symbol(norm.parts[static_cast<std::size_t>(j)].to_ratfunc(),
                                     norm.parts[static_cast<std::size_t>(i)].P);
            R.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            row_sum += v;
        }
        // {f/P_i} is 0 in the real case (f = 0), so one rule covers both:
        // R_ii makes the row sum plus {f/P_i} vanish
        int64_t fs = hasse_symbol(f_rat, norm.parts[static_cast<std::size_t>(i)].P);
        R.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
            detail::mod_reduce(-(row_sum + fs), p);
    }
    return R;
}

/// Row rank over F_p by Gaussian elimination.
inline int rank_mod_p(std::vector<std::vector<int64_t>> rows, int64_t p) {
    const int m = static_cast<int>(rows.size());
    const int ncols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    int rank = 0;
    for (int col = 0; col < ncols && rank < m; ++col) {
        int pivot = -1;
        for (int r = rank; r < m; ++r)
            if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] % p != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
        int64_t inv = detail::mod_inv(detail::mod_reduce(rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)], p), p);
        for (int r = rank + 1; r < m; ++r) {
            int64_t factor = detail::mod_reduce(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] * inv, p);
            if (factor == 0) continue;
            for (int c = col; c < ncols; ++c)
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = detail::mod_reduce(
                    rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -
                        factor * rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)],
                    p);
        }
        ++rank;
    }
    return rank;
}

inline int rank_mod_p(const RedeiMatrix& R) { return rank_mod_p(R.entries, R.p); }

inline int64_t lambda2(const NormalizedAS& norm) {
    RedeiMatrix R = redei_matrix(norm);
    int rank = rank_mod_p(R);
    int64_t l2 = norm.classification == Classification::Real ? norm.m() - 1 - rank : norm.m() - rank;
    if (l2 < 0) throw InternalError("lambda2 formula went negative");
    return l2;
}

/// The full invariant set; equality is used by the representative-
/// independence tests (D vs x*D vs D + (B^p - B)).
struct InvariantsReport {
    Classification classification;
    int m;
    int64_t lambda1;
    int rank;
    int64_t lambda2;

    friend bool operator==(const InvariantsReport&, const InvariantsReport&) = default;
};

inline InvariantsReport analyze(const NormalizedAS& norm) {
    RedeiMatrix R = redei_matrix(norm);
    int rank = rank_mod_p(R);
    int64_t l1 = lambda1(norm);
    int64_t l2 = norm.classification == Classification::Real ? norm.m() - 1 - rank : norm.m() - rank;
    if (l2 < 0) throw InternalError("lambda2 formula went negative");
    return InvariantsReport{norm.classification, norm.m(), l1, rank, l2};
}

}  // namespace asgenus

#endif  // ASGENUS_INVARIANTS_HPP
