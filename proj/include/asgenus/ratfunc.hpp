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
 * @file ratfunc.hpp
 *
 * Rational functions D in F_q(t), kept reduced with a monic denominator,
 * and their exact partial-fraction decomposition
 *
 *     D = sum_i Q_i / P_i^{e_i} + f(t),   gcd(P_i, Q_i) = 1,
 *                                         deg Q_i < deg P_i^{e_i}.
 */

#ifndef ASGENUS_RATFUNC_HPP
#define ASGENUS_RATFUNC_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polyring.hpp"

namespace asgenus {

/// A reduced fraction num/den with den monic and nonzero.
class RationalFunction {
   public:
    static RationalFunction make(Poly num, Poly den) {
        if (den.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
        if (!(num.field() == den.field())) throw FieldMismatchError("numerator and denominator over different fields");
        Poly g = gcd(num, den);
        num = div_exact(num, g);
        den = div_exact(den, g);
        const Fq& f = den.field();
        Fq::Elem il = f.inv(den.leading());
        return RationalFunction(num.scaled(il), den.scaled(il));
    }
    static RationalFunction from_poly(Poly f) {
        Poly one = Poly::one(f.field());
        return RationalFunction(std::move(f), std::move(one));
    }
    static RationalFunction zero(const Fq& f) { return from_poly(Poly::zero(f)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const Fq& field() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return make(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return make(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw DivisionByZeroError("division by the zero rational function");
        return make(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction operator-() const { return RationalFunction(-num_, den_); }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction pow(int64_t e) const {
        RationalFunction r = from_poly(Poly::one(field())), b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

   private:
    RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}

    Poly num_;
    Poly den_;
};

/// One pole term Q/P^e: P monic irreducible, e the exact pole order,
/// gcd(P, Q) = 1 and deg Q < deg P^e.
struct LocalPart {
    Poly P;
    int e;
    Poly Q;

    RationalFunction to_ratfunc() const { return RationalFunction::make(Q, P.pow(e)); }
    friend bool operator==(const LocalPart& a, const LocalPart& b) { return a.P == b.P && a.e == b.e && a.Q == b.Q; }
};

/// Partial-fraction shape of a rational function; parts sorted by
/// (deg P, lex P), with the polynomial part split off.
struct PFDecomposition {
    std::vector<LocalPart> parts;
    Poly f;

    RationalFunction recombined() const {
        RationalFunction r = RationalFunction::from_poly(f);
        for (const auto& part : parts) r = r + part.to_ratfunc();
        return r;
    }
};

/// Exact pole order of D at the finite place P (0 if D is regular there).
inline int pole_order(const RationalFunction& D, const Poly& P) {
    if (!P.is_monic() || !is_irreducible(P)) throw NotIrreducibleError("place must be a monic irreducible polynomial");
    int e = 0;
    Poly d = D.den();
    while (divides(P, d)) {
        d = div_exact(d, P);
        ++e;
    }
    return e;
}

/// Pole order at the infinite place (1/t): max(0, deg num - deg den).
inline int pole_order_at_infinity(const RationalFunction& D) {
    if (D.is_zero()) return 0;
    int d = D.num().degree() - D.den().degree();
    return d > 0 ? d : 0;
}

/// Exact partial fractions: polynomial part by long division, then one
/// proper fraction per prime power via extended-gcd cofactors.
inline PFDecomposition partial_fractions(const RationalFunction& D, std::uint64_t seed = kDefaultFactorSeed) {
    const Fq& F = D.field();
    auto [f, r] = divmod(D.num(), D.den());
    PFDecomposition out{{}, std::move(f)};
    if (r.is_zero()) return out;

    Factorization fac = factorize(D.den(), seed);
    for (const auto& [P, e] : fac.factors) {
        Poly Pe = P.pow(e);
        Poly M = div_exact(D.den(), Pe);
        // s*M + t*Pe = 1, so Q = r*s mod Pe is the residue of r/den at P
        auto [g, s, t] = PolyAlg<Fq>::egcd(F, M.coeffs(), Pe.coeffs());
        (void)t;
        if (PolyAlg<Fq>::deg(g) != 0) throw InternalError("cofactor not coprime to prime power");
        Poly Q = (r * Poly(F, std::move(s))) % Pe;
        out.parts.push_back(LocalPart{P, e, std::move(Q)});
    }
    // factorize already sorts by (degree, lex); parts inherit that order
    return out;
}

}  // namespace asgenus

#endif  // ASGENUS_RATFUNC_HPP
