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
 * @file symbols.hpp
 *
 * The Hasse symbol {D/P} at a finite place P unramified for D: the Artin
 * symbol acts by y -> y + {D/P}, and {D/P} = 0 exactly when P splits
 * completely. Three routes are provided:
 *
 *   - hasse_symbol: absolute trace of D mod P through the residue tower
 *     (O_K/P over F_q over F_p),
 *   - hasse_symbol_powersum: the congruence
 *       {D/P} = D + D^p + ... + D^{N(P)/p} mod P,  N(P) = q^{deg P},
 *     evaluated by repeated Frobenius in the quotient ring F_q[t]/(P),
 *   - splitting_oracle: brute-force root search of T^p - T = D mod P
 *     over the residue field.
 *
 * The three must always agree; the tests hold them against each other.
 */

#ifndef ASGENUS_SYMBOLS_HPP
#define ASGENUS_SYMBOLS_HPP

#include <cstdint>

#include "ratfunc.hpp"

namespace asgenus {

/// A symbol value: the residue in [0, p) identifying the Artin-symbol
/// translate y -> y + {D/P}.
using SymbolValue = int64_t;

enum class SplitType { SplitsCompletely, Inert };

namespace detail {

/// D mod P as an element of the residue field; requires P not dividing den.
inline ExtFq::Elem reduce_ratfunc(const ResidueField& R, const RationalFunction& D) {
    ExtFq::Elem den = R.reduce(D.den());
    if (R.field().is_zero(den)) throw RamifiedPlaceError("D has a pole at P");
    return R.field().div(R.reduce(D.num()), den);
}

}  // namespace detail

/// {D/P} by the double-trace formula tr_{F_q/F_p} tr_{(O_K/P)/F_q} (D mod P).
inline SymbolValue hasse_symbol(const RationalFunction& D, const Poly& P) {
    if (pole_order(D, P) != 0) throw RamifiedPlaceError("Hasse symbol requested at a pole of D");
    ResidueField R(P);
    return R.field().absolute_trace(detail::reduce_ratfunc(R, D));
}

/// {D/P} by the power-sum congruence, computed entirely inside the
/// quotient ring F_q[t]/(P). Independent of hasse_symbol's residue-tower
/// path; used to cross-check it.
inline SymbolValue hasse_symbol_powersum(const RationalFunction& D, const Poly& P) {
    if (pole_order(D, P) != 0) throw RamifiedPlaceError("Hasse symbol requested at a pole of D");
    const Fq& F = P.field();
    using PA = PolyAlg<Fq>;

    auto [g, s, t] = PA::egcd(F, D.den().coeffs(), P.coeffs());
    (void)t;
    if (PA::deg(g) != 0) throw InternalError("denominator not invertible mod P");
    auto r = PA::mulmod(F, D.num().coeffs(), s, P.coeffs());

    // D + D^p + D^{p^2} + ... with N(P)/p = p^{n deg P - 1}
    const int steps = F.n() * P.degree();
    auto acc = PA::zero();
    auto x = r;
    for (int j = 0; j < steps; ++j) {
        acc = PA::add(F, acc, x);
        x = PA::powmod(F, x, F.p(), P.coeffs());
    }
    if (PA::deg(acc) > 0) throw InternalError("power sum not constant mod P");
    Fq::Elem c = acc.empty() ? F.zero() : acc[0];
    for (int i = 1; i < F.n(); ++i)
        if (c[static_cast<std::size_t>(i)] != 0) throw InternalError("power sum not in the prime field");
    return c[0];
}

/// Decide the unramified behavior of P by exhaustive root search of
/// T^p - T = D mod P over the residue field (at most max_field_size
/// elements). In a degree-p cyclic extension an unramified place either
/// splits completely or is inert.
inline SplitType splitting_oracle(const RationalFunction& D, const Poly& P,
                                  int64_t max_field_size = int64_t(1) << 20) {
    if (pole_order(D, P) != 0) throw RamifiedPlaceError("splitting oracle requested at a pole of D");
    ResidueField R(P);
    const ExtFq& E = R.field();
    int64_t size = E.size();
    if (size < 0 || size > max_field_size)
        throw ResidueFieldTooLargeError("residue field exceeds the search bound");
    ExtFq::Elem c = detail::reduce_ratfunc(R, D);
    for (int64_t i = 0; i < size; ++i) {
        ExtFq::Elem x = E.from_index(i);
        if (E.eq(E.sub(E.frobenius(x), x), c)) return SplitType::SplitsCompletely;
    }
    return SplitType::Inert;
}

}  // namespace asgenus

#endif  // ASGENUS_SYMBOLS_HPP
