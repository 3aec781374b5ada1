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
 * @file asnorm.hpp
 *
 * Normal form of the Artin-Schreier right-hand side. Adding elements of
 * the form B^p - B does not change the extension K = k(y), y^p - y = D,
 * so D is reduced until
 *
 *   - every finite pole order e_i is prime to p,
 *   - the polynomial part f is zero, a constant of nonzero absolute
 *     trace, or has degree prime to p,
 *
 * and the applied shift is returned as an explicit witness B with
 * D_in = D_out + (B^p - B). The infinite place splits, is inert, or
 * ramifies according to f, which classifies K as real, inertial
 * imaginary, or ramified imaginary.
 */

#ifndef ASGENUS_ASNORM_HPP
#define ASGENUS_ASNORM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratfunc.hpp"

namespace asgenus {

enum class Classification { Real, InertialImaginary, RamifiedImaginary };

inline const char* to_string(Classification c) {
    switch (c) {
        case Classification::Real:
            return "real";
        case Classification::InertialImaginary:
            return "inertial-imaginary";
        case Classification::RamifiedImaginary:
            return "ramified-imaginary";
    }
    return "?";
}

/// Behavior of the infinite place (1/t) read off the normalized polynomial
/// part: split (f = 0, or a constant that x^p - x reaches in F_q), inert
/// (a constant of nonzero trace), or ramified (nonconstant f).
inline Classification classify_infinity(const Poly& f) {
    if (f.is_zero()) return Classification::Real;
    if (f.is_constant())
        return f.field().absolute_trace(f.constant_term()) != 0 ? Classification::InertialImaginary
                                                                : Classification::Real;
    return Classification::RamifiedImaginary;
}

/// D in normal form: the local parts D_i = Q_i/P_i^{e_i} with p not
/// dividing e_i, the polynomial part f, the infinite-place classification,
/// and the witness of the shift that was applied.
struct NormalizedAS {
    std::vector<LocalPart> parts;
    Poly f;
    Classification classification;
    RationalFunction witness;

    const Fq& field() const { return f.field(); }
    int m() const { return static_cast<int>(parts.size()); }

    RationalFunction recombined() const {
        RationalFunction r = RationalFunction::from_poly(f);
        for (const auto& part : parts) r = r + part.to_ratfunc();
        return r;
    }

    /// Same normal form (witness excluded; a re-normalization always has
    /// witness 0).
    bool same_form(const NormalizedAS& o) const {
        return parts == o.parts && f == o.f && classification == o.classification;
    }
};

/// A place of k = F_q(t): a monic irreducible polynomial or the place at
/// infinity.
struct Place {
    std::optional<Poly> prime;  // disengaged for the infinite place

    static Place finite(Poly P) { return Place{std::move(P)}; }
    static Place infinity() { return Place{std::nullopt}; }
    bool is_infinite() const { return !prime.has_value(); }
    std::string to_string() const { return prime ? prime->to_string() : std::string("infinity"); }
    friend bool operator==(const Place& a, const Place& b) { return a.prime == b.prime; }
};

namespace detail {

/// Lift a residue-field element back to the polynomial of degree < deg P
/// representing it.
inline Poly lift(const ResidueField& R, const ExtFq::Elem& x) {
    return Poly(R.modulus().field(), x);
}

/// x in F_q with x^p - x = c, if one exists (exactly when the absolute
/// trace of c vanishes); found by enumeration.
inline std::optional<Fq::Elem> solve_artin_schreier_constant(const Fq& F, const Fq::Elem& c) {
    for (int64_t i = 0; i < F.q(); ++i) {
        Fq::Elem x = F.from_index(i);
        if (F.eq(F.sub(F.frobenius(x), x), c)) return x;
    }
    return std::nullopt;
}

}  // namespace detail

/**
 * Reduce D to normal form. Deterministic order: finite places by
 * (degree, lex), each by repeated leading-residue p-th-root subtraction;
 * then the leading monomials of the polynomial part; finally the constant
 * term, removed whenever x^p - x = c is solvable in F_q.
 *
 * Throws TrivialExtensionError when D = B^p - B (the extension is k
 * itself) and NonGeometricError when D reduces to a trace-nonzero
 * constant with no finite poles (a constant-field extension).
 */
inline NormalizedAS normalize(const RationalFunction& D, std::uint64_t seed = kDefaultFactorSeed) {
    const Fq& F = D.field();
    const int64_t p = F.p();

    PFDecomposition pf = partial_fractions(D, seed);
    RationalFunction B = RationalFunction::zero(F);
    std::vector<LocalPart> parts;

    for (const LocalPart& part : pf.parts) {
        if (part.e % p != 0) {
            parts.push_back(part);
            continue;
        }
        ResidueField R(part.P);
        RationalFunction L = part.to_ratfunc();
        int e = part.e;
        while (e > 0 && e % p == 0) {
            // subtract (C/P^mu)^p - C/P^mu where C^p matches the leading residue
            int mu = e / static_cast<int>(p);
            if (!(L.den() == part.P.pow(e))) throw InternalError("local fraction lost its prime-power shape");
            Poly C = detail::lift(R, R.field().pth_root(R.reduce(L.num())));
            RationalFunction T = RationalFunction::make(C, part.P.pow(mu));
            B = B + T;
            L = L - (T.pow(p) - T);
            e = L.is_zero() ? 0 : pole_order(L, part.P);
        }
        if (e > 0) {
            if (!(L.den() == part.P.pow(e))) throw InternalError("local fraction lost its prime-power shape");
            parts.push_back(LocalPart{part.P, e, L.num()});
        }
    }

    // infinite place: kill leading monomials c*t^{pe}
    Poly f = pf.f;
    while (f.degree() >= 1 && f.degree() % p == 0) {
        int e = f.degree() / static_cast<int>(p);
        Poly mono(F, PolyAlg<Fq>::shift(F, {F.pth_root(f.leading())}, e));
        B = B + RationalFunction::from_poly(mono);
        f = f - (mono.pow(static_cast<int>(p)) - mono);
    }

    // constant term: remove whenever x^p - x = c is solvable in F_q
    if (!f.is_zero() && !F.is_zero(f.constant_term())) {
        if (auto x = detail::solve_artin_schreier_constant(F, f.constant_term())) {
            B = B + RationalFunction::from_poly(Poly::constant(F, *x));
            f = f - Poly::constant(F, f.constant_term());
        }
    }

    if (parts.empty() && f.is_zero()) throw TrivialExtensionError("D = B^p - B defines the trivial extension");
    if (parts.empty() && f.is_constant())
        throw NonGeometricError("D defines a constant-field extension, not a geometric one");

    Classification cls = classify_infinity(f);
    NormalizedAS out{std::move(parts), std::move(f), cls, B};
    if (!(out.recombined() + (B.pow(p) - B) == D)) throw InternalError("witness identity violated");
    return out;
}

/// The places of k ramified in K: the P_i, plus infinity in the ramified
/// imaginary case.
inline std::vector<Place> ramified_places(const NormalizedAS& norm) {
    std::vector<Place> out;
    out.reserve(norm.parts.size() + 1);
    for (const auto& part : norm.parts) out.push_back(Place::finite(part.P));
    if (norm.classification == Classification::RamifiedImaginary) out.push_back(Place::infinity());
    return out;
}

}  // namespace asgenus

#endif  // ASGENUS_ASNORM_HPP
