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
 * @file polyring.hpp
 *
 * Dense univariate polynomials over F_q: arithmetic, gcd, irreducibility,
 * full factorization (squarefree / distinct-degree / equal-degree), and
 * residue-field construction F_q[t]/(P).
 *
 * Polynomials print and sort canonically: coefficients constant term
 * first, factor lists ordered by (degree, coefficient-lex).
 */

#ifndef ASGENUS_POLYRING_HPP
#define ASGENUS_POLYRING_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gf.hpp"

namespace asgenus {

/// Seed of the PRNG used by equal-degree splitting; fixed so factorization
/// is reproducible run to run (the sorted output is canonical regardless).
inline constexpr std::uint64_t kDefaultFactorSeed = 0x243F6A8885A308D3ull;

/// A dense polynomial in F_q[t]. The empty coefficient vector is the zero
/// polynomial; otherwise the leading coefficient is nonzero.
class Poly {
   public:
    explicit Poly(Fq field) : field_(std::move(field)) {}
    Poly(Fq field, std::vector<Fq::Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
        for (const auto& e : c_)
            if (static_cast<int>(e.size()) != field_.n()) throw FieldMismatchError("coefficient has wrong length for field");
        PolyAlg<Fq>::trim(field_, c_);
    }

    static Poly zero(const Fq& f) { return Poly(f); }
    static Poly one(const Fq& f) { return Poly(f, {f.one()}); }
    static Poly t(const Fq& f) { return Poly(f, {f.zero(), f.one()}); }
    static Poly constant(const Fq& f, Fq::Elem c) { return Poly(f, {std::move(c)}); }
    static Poly constant(const Fq& f, int64_t c) { return Poly(f, {f.from_int(c)}); }
    /// Convenience for prime-coefficient literals: ints constant term first.
    static Poly from_ints(const Fq& f, const std::vector<int64_t>& ints) {
        std::vector<Fq::Elem> cs;
        cs.reserve(ints.size());
        for (auto v : ints) cs.push_back(f.from_int(v));
        return Poly(f, std::move(cs));
    }

    const Fq& field() const { return field_; }
    const std::vector<Fq::Elem>& coeffs() const { return c_; }
    int degree() const { return PolyAlg<Fq>::deg(c_); }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && field_.eq(c_[0], field_.one()); }
    bool is_monic() const { return !c_.empty() && field_.eq(c_.back(), field_.one()); }
    Fq::Elem coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : field_.zero();
    }
    Fq::Elem leading() const { return c_.empty() ? field_.zero() : c_.back(); }
    Fq::Elem constant_term() const { return coeff(0); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        check(a, b);
        return Poly(a.field_, PolyAlg<Fq>::add(a.field_, a.c_, b.c_), raw{});
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        check(a, b);
        return Poly(a.field_, PolyAlg<Fq>::sub(a.field_, a.c_, b.c_), raw{});
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        check(a, b);
        return Poly(a.field_, PolyAlg<Fq>::mul(a.field_, a.c_, b.c_), raw{});
    }
    Poly operator-() const { return Poly(field_, PolyAlg<Fq>::neg(field_, c_), raw{}); }
    friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

    Poly scaled(const Fq::Elem& c) const { return Poly(field_, PolyAlg<Fq>::scale(field_, c_, c), raw{}); }
    Poly monic() const { return Poly(field_, PolyAlg<Fq>::monic(field_, c_), raw{}); }
    Poly derivative() const { return Poly(field_, PolyAlg<Fq>::derivative(field_, c_), raw{}); }
    Poly pow(int e) const {
        Poly r = one(field_), b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }
    Fq::Elem eval(const Fq::Elem& x) const { return PolyAlg<Fq>::eval(field_, c_, x); }

    std::string to_string() const;

   private:
    struct raw {};
    Poly(Fq field, std::vector<Fq::Elem> coeffs, raw) : field_(std::move(field)), c_(std::move(coeffs)) {}
    static void check(const Poly& a, const Poly& b) {
        if (!(a.field_ == b.field_)) throw FieldMismatchError("polynomials over different fields");
    }
    friend std::pair<Poly, Poly> divmod(const Poly&, const Poly&);
    friend Poly gcd(const Poly&, const Poly&);

    Fq field_;
    std::vector<Fq::Elem> c_;
};

inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    Poly::check(a, b);
    auto [q, r] = PolyAlg<Fq>::divmod(a.field_, a.c_, b.c_);
    return {Poly(a.field_, std::move(q), Poly::raw{}), Poly(a.field_, std::move(r), Poly::raw{})};
}

inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

inline Poly div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InternalError("polynomial division expected to be exact");
    return q;
}

inline bool divides(const Poly& d, const Poly& a) { return (a % d).is_zero(); }

/// Monic gcd; gcd(a, 0) = monic(a).
inline Poly gcd(const Poly& a, const Poly& b) {
    Poly::check(a, b);
    return Poly(a.field_, PolyAlg<Fq>::gcd(a.field_, a.c_, b.c_), Poly::raw{});
}

/// Canonical order: by degree, then coefficient-lex from the constant term
/// up, coefficients compared by their element index.
inline bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const Fq& f = a.field();
    for (int i = 0; i <= a.degree(); ++i) {
        int64_t ia = f.index_of(a.coeff(i)), ib = f.index_of(b.coeff(i));
        if (ia != ib) return ia < ib;
    }
    return false;
}

// ---------------------------------------------------------------------------
// canonical text form ("c*t^k" terms, '+'-separated; 'g' is the F_q generator)

/// One additive term c * g^j * t^k with c in [1, p).
inline std::string term_to_string(int64_t c, int j, int k) {
    std::string s;
    auto append = [&s](const std::string& part) {
        if (!s.empty()) s += "*";
        s += part;
    };
    if (c != 1) append(std::to_string(c));
    if (j == 1) append("g");
    if (j > 1) append("g^" + std::to_string(j));
    if (k == 1) append("t");
    if (k > 1) append("t^" + std::to_string(k));
    if (s.empty()) s = "1";
    return s;
}

/// An F_q element as a sum of g-powers, e.g. "g^2 + 2".
inline std::string elem_to_string(const Fq& f, const Fq::Elem& e) {
    std::string s;
    for (int j = f.n() - 1; j >= 0; --j) {
        if (e[j] == 0) continue;
        if (!s.empty()) s += " + ";
        s += term_to_string(e[j], j, 0);
    }
    return s.empty() ? "0" : s;
}

inline std::string Poly::to_string() const {
    std::string s;
    for (int k = degree(); k >= 0; --k) {
        const Fq::Elem e = coeff(k);
        for (int j = field_.n() - 1; j >= 0; --j) {
            if (e[j] == 0) continue;
            if (!s.empty()) s += " + ";
            s += term_to_string(e[j], j, k);
        }
    }
    return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------
// factorization

/// f = unit * prod factors[i].first ^ factors[i].second, with pairwise
/// distinct monic irreducible factors sorted by (degree, coefficient-lex).
struct Factorization {
    FieldElem unit;
    std::vector<std::pair<Poly, int>> factors;
};

/// Monic irreducibility over F_q (Rabin's test).
inline bool is_irreducible(const Poly& f) {
    if (!f.is_monic()) return false;
    return detail::is_irreducible(f.field(), f.coeffs(), f.field().q());
}

namespace detail {

/// Inverse of h -> h^p on polynomials: input must have nonzero terms only at
/// exponents divisible by p.
inline Poly poly_pth_root(const Poly& g) {
    const Fq& f = g.field();
    const auto p = static_cast<int>(f.p());
    std::vector<Fq::Elem> out;
    out.reserve(g.degree() / p + 1);
    for (int k = 0; k <= g.degree(); ++k) {
        if (k % p == 0) {
            out.push_back(f.pth_root(g.coeff(k)));
        } else if (!f.is_zero(g.coeff(k))) {
            throw InternalError("polynomial is not a p-th power");
        }
    }
    return Poly(f, std::move(out));
}

inline Poly random_poly_below(const Fq& f, int deg_bound, std::mt19937_64& rng) {
    std::vector<Fq::Elem> cs(static_cast<std::size_t>(deg_bound), f.zero());
    for (auto& c : cs) c = f.from_index(static_cast<int64_t>(rng() % static_cast<std::uint64_t>(f.q())));
    return Poly(f, std::move(cs));
}

/// Cantor-Zassenhaus split of a monic product of irreducibles of degree d.
inline void equal_degree_split(const Poly& h, int d, std::vector<Poly>& out, std::mt19937_64& rng) {
    const Fq& f = h.field();
    if (h.degree() == d) {
        out.push_back(h);
        return;
    }
    using PA = PolyAlg<Fq>;
    const auto& m = h.coeffs();
    Poly one = Poly::one(f);
    while (true) {
        Poly a = random_poly_below(f, h.degree(), rng);
        if (a.is_zero()) continue;
        Poly g = gcd(a, h);
        if (g.degree() == 0) {
            if (f.p() == 2) {
                // trace map to F_2: sum of a^{2^i} over the residue tower
                auto cur = PA::mod(f, a.coeffs(), m);
                auto acc = PA::zero();
                for (int i = 0; i < f.n() * d; ++i) {
                    acc = PA::add(f, acc, cur);
                    cur = PA::mulmod(f, cur, cur, m);
                }
                g = gcd(Poly(f, std::move(acc)), h);
            } else {
                // a^{(q^d-1)/2} via the Frobenius product c^{1+q+...+q^{d-1}}
                auto c = PA::powmod(f, a.coeffs(), (f.q() - 1) / 2, m);
                auto acc = c;
                auto b = c;
                for (int i = 1; i < d; ++i) {
                    b = PA::powmod(f, b, f.q(), m);
                    acc = PA::mulmod(f, acc, b, m);
                }
                g = gcd(Poly(f, std::move(acc)) - one, h);
            }
        }
        if (g.degree() > 0 && g.degree() < h.degree()) {
            equal_degree_split(g, d, out, rng);
            equal_degree_split(div_exact(h, g), d, out, rng);
            return;
        }
    }
}

/// Distinct-degree + equal-degree factorization of a monic squarefree input.
inline std::vector<Poly> split_squarefree(Poly s, std::mt19937_64& rng) {
    const Fq& f = s.field();
    using PA = PolyAlg<Fq>;
    std::vector<Poly> out;
    std::vector<Fq::Elem> x{f.zero(), f.one()};
    auto h = PA::mod(f, x, s.coeffs());
    for (int d = 1; s.degree() >= 1; ++d) {
        if (2 * d > s.degree()) {  // what is left is irreducible
            out.push_back(s);
            break;
        }
        h = PA::powmod(f, h, f.q(), s.coeffs());  // h = t^{q^d} mod s
        Poly g = gcd(Poly(f, PA::sub(f, h, x)), s);
        if (g.degree() > 0) {
            equal_degree_split(g, d, out, rng);
            s = div_exact(s, g);
            h = PA::mod(f, h, s.coeffs());
        }
    }
    return out;
}

inline void factor_monic(const Poly& g, int mult, std::vector<std::pair<Poly, int>>& out, std::mt19937_64& rng) {
    const Fq& f = g.field();
    if (g.degree() == 0) return;
    Poly gp = g.derivative();
    if (gp.is_zero()) {  // g = h^p
        factor_monic(poly_pth_root(g), mult * static_cast<int>(f.p()), out, rng);
        return;
    }
    // squarefree part carrying every irreducible whose multiplicity is prime to p
    Poly s = div_exact(g, gcd(g, gp));
    Poly rem = g;
    for (const Poly& r : split_squarefree(s, rng)) {
        int k = 0;
        while (divides(r, rem)) {
            rem = div_exact(rem, r);
            ++k;
        }
        out.emplace_back(r, mult * k);
    }
    if (rem.degree() > 0) factor_monic(rem, mult, out, rng);  // p-th power leftover
}

}  // namespace detail

inline Factorization factorize(const Poly& f, std::uint64_t seed = kDefaultFactorSeed) {
    if (f.is_zero()) throw Error("cannot factor the zero polynomial");
    std::mt19937_64 rng(seed);
    Factorization res{FieldElem(f.field(), f.leading()), {}};
    detail::factor_monic(f.monic(), 1, res.factors, rng);
    std::sort(res.factors.begin(), res.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return res;
}

/// All monic irreducibles of degree <= max_degree, sorted by (degree, lex).
inline std::vector<Poly> irreducibles_up_to(const Fq& f, int max_degree) {
    if (max_degree < 1) throw Error("max_degree must be >= 1");
    std::vector<Poly> out;
    for (int d = 1; d <= max_degree; ++d) {
        int64_t count = detail::checked_pow(f.q(), d, int64_t(1) << 24);
        if (count < 0) throw BudgetExceededError("irreducible enumeration too large");
        // scan with c_0 as the most significant digit so output is lex-sorted
        std::vector<int64_t> idx(static_cast<std::size_t>(d), 0);
        while (true) {
            std::vector<Fq::Elem> cs(static_cast<std::size_t>(d + 1));
            for (int i = 0; i < d; ++i) cs[static_cast<std::size_t>(i)] = f.from_index(idx[static_cast<std::size_t>(i)]);
            cs[static_cast<std::size_t>(d)] = f.one();
            Poly cand(f, std::move(cs));
            if (is_irreducible(cand)) out.push_back(std::move(cand));
            int pos = d - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == f.q() - 1) idx[static_cast<std::size_t>(pos--)] = 0;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// residue fields

/// The residue field F_q[t]/(P) of a monic irreducible P, with the quotient
/// map from polynomials. reduce is a ring homomorphism with kernel (P),
/// and reduce(t) is a root of P.
class ResidueField {
   public:
    explicit ResidueField(Poly P)
        : P_(std::move(P)), field_(make_ext(P_)) {}

    const Poly& modulus() const { return P_; }
    const ExtFq& field() const { return field_; }

    ExtFq::Elem reduce(const Poly& g) const {
        if (!(g.field() == P_.field())) throw FieldMismatchError("polynomial over a different coefficient field");
        auto r = PolyAlg<Fq>::mod(P_.field(), g.coeffs(), P_.coeffs());
        r.resize(static_cast<std::size_t>(field_.d()), P_.field().zero());
        return r;
    }

   private:
    static ExtFq make_ext(const Poly& P) {
        if (P.is_zero() || P.degree() < 1) throw NotIrreducibleError("residue field needs a nonconstant modulus");
        if (!P.is_monic()) throw NotIrreducibleError("residue field modulus must be monic");
        if (!is_irreducible(P)) throw NotIrreducibleError("residue field modulus must be irreducible");
        return ExtFq(P.field(), P.coeffs());
    }

    Poly P_;
    ExtFq field_;
};

inline ResidueField residue_field(const Poly& P) { return ResidueField(P); }

}  // namespace asgenus

#endif  // ASGENUS_POLYRING_HPP
