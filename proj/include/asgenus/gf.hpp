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
 * @file gf.hpp
 *
 * Exact arithmetic in two-level finite field towers
 *
 *     F_p  ⊆  F_q = F_p[u]/(m_u)  ⊆  F_{q^d} = F_q[v]/(m_v)
 *
 * with Frobenius, p-th roots, and absolute traces down to F_p.
 * Field descriptors are immutable values; elements are coefficient
 * vectors (constant term first). Every operation is a pure function,
 * so concurrent use needs no synchronization.
 */

#ifndef ASGENUS_GF_HPP
#define ASGENUS_GF_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace asgenus {

using std::int64_t;

namespace detail {

inline int64_t mod_reduce(int64_t a, int64_t p) {
    int64_t r = a % p;
    return r < 0 ? r + p : r;
}

inline bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// p^n with overflow detection; returns -1 on overflow past `limit`.
inline int64_t checked_pow(int64_t p, int n, int64_t limit = (int64_t(1) << 62)) {
    int64_t r = 1;
    for (int i = 0; i < n; ++i) {
        if (r > limit / p) return -1;
        r *= p;
    }
    return r;
}

inline int64_t mod_inv(int64_t a, int64_t p) {
    // extended Euclid; p prime, 0 < a < p
    int64_t old_r = a, r = p, old_s = 1, s = 0;
    while (r != 0) {
        int64_t qt = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - qt * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - qt * s);
    }
    return mod_reduce(old_s, p);
}

}  // namespace detail

/// The prime field F_p. Elements are residues in [0, p).
class PrimeField {
   public:
    using Elem = int64_t;

    explicit PrimeField(int64_t p) : p_(p) {
        if (!detail::is_prime(p)) throw InvalidFieldError("characteristic must be prime, got " + std::to_string(p));
        if (p >= (int64_t(1) << 31)) throw InvalidFieldError("characteristic too large for this tool");
    }

    int64_t p() const { return p_; }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(int64_t a) const { return detail::mod_reduce(a, p_); }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    Elem add(Elem a, Elem b) const { return (a + b) % p_; }
    Elem sub(Elem a, Elem b) const { return detail::mod_reduce(a - b, p_); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
    Elem inv(Elem a) const {
        if (a == 0) throw DivisionByZeroError("inverse of zero in F_p");
        return detail::mod_inv(a, p_);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    bool operator==(const PrimeField&) const = default;

   private:
    int64_t p_;
};

/// Dense univariate polynomial algorithms over an arbitrary field context F.
/// Polynomials are coefficient vectors, constant term first, no trailing zeros
/// (the empty vector is the zero polynomial).
template <class F>
struct PolyAlg {
    using E = typename F::Elem;
    using V = std::vector<E>;

    static void trim(const F& f, V& v) {
        while (!v.empty() && f.is_zero(v.back())) v.pop_back();
    }
    static bool is_zero(const V& v) { return v.empty(); }
    static int deg(const V& v) { return static_cast<int>(v.size()) - 1; }  // zero -> -1
    static V zero() { return {}; }
    static V one(const F& f) { return {f.one()}; }
    static V constant(const F& f, const E& c) {
        V v{c};
        trim(f, v);
        return v;
    }
    static bool eq(const F& f, const V& a, const V& b) {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!f.eq(a[i], b[i])) return false;
        return true;
    }

    static V add(const F& f, const V& a, const V& b) {
        V r(std::max(a.size(), b.size()), f.zero());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
        trim(f, r);
        return r;
    }
    static V sub(const F& f, const V& a, const V& b) {
        V r(std::max(a.size(), b.size()), f.zero());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
        trim(f, r);
        return r;
    }
    static V neg(const F& f, V a) {
        for (auto& c : a) c = f.neg(c);
        return a;
    }
    static V scale(const F& f, V a, const E& c) {
        if (f.is_zero(c)) return {};
        for (auto& x : a) x = f.mul(x, c);
        trim(f, a);
        return a;
    }
    static V mul(const F& f, const V& a, const V& b) {
        if (a.empty() || b.empty()) return {};
        V r(a.size() + b.size() - 1, f.zero());
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
        trim(f, r);
        return r;
    }
    /// a * x^k
    static V shift(const F& f, const V& a, int k) {
        if (a.empty()) return {};
        V r(a.size() + k, f.zero());
        std::copy(a.begin(), a.end(), r.begin() + k);
        return r;
    }

    static V monic(const F& f, V a) {
        if (a.empty()) return a;
        E lc = a.back();
        if (f.eq(lc, f.one())) return a;
        E il = f.inv(lc);
        for (auto& c : a) c = f.mul(c, il);
        return a;
    }

    static std::pair<V, V> divmod(const F& f, V a, const V& b) {
        if (b.empty()) throw DivisionByZeroError("polynomial division by zero");
        if (a.size() < b.size()) return {V{}, std::move(a)};
        E ilc = f.inv(b.back());
        V q(a.size() - b.size() + 1, f.zero());
        for (int i = static_cast<int>(a.size()) - static_cast<int>(b.size()); i >= 0; --i) {
            E c = f.mul(a[i + b.size() - 1], ilc);
            if (f.is_zero(c)) continue;
            q[i] = c;
            for (std::size_t j = 0; j < b.size(); ++j) a[i + j] = f.sub(a[i + j], f.mul(c, b[j]));
        }
        trim(f, a);
        trim(f, q);
        return {std::move(q), std::move(a)};
    }
    static V mod(const F& f, V a, const V& b) { return divmod(f, std::move(a), b).second; }
    static V div_exact(const F& f, V a, const V& b) {
        auto [q, r] = divmod(f, std::move(a), b);
        if (!r.empty()) throw InternalError("polynomial division expected to be exact");
        return q;
    }

    /// Monic gcd; gcd(a, 0) = monic(a).
    static V gcd(const F& f, V a, V b) {
        while (!b.empty()) {
            V r = mod(f, std::move(a), b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(f, std::move(a));
    }

    /// Returns (g, s, t) with s*a + t*b = g and g = monic gcd(a, b).
    static std::tuple<V, V, V> egcd(const F& f, V a, V b) {
        V old_s = one(f), s = zero();
        V old_t = zero(), t = one(f);
        while (!b.empty()) {
            auto [q, r] = divmod(f, std::move(a), b);
            a = std::move(b);
            b = std::move(r);
            V ns = sub(f, old_s, mul(f, q, s));
            old_s = std::move(s);
            s = std::move(ns);
            V nt = sub(f, old_t, mul(f, q, t));
            old_t = std::move(t);
            t = std::move(nt);
        }
        if (!a.empty() && !f.eq(a.back(), f.one())) {
            E il = f.inv(a.back());
            a = scale(f, std::move(a), il);
            old_s = scale(f, std::move(old_s), il);
            old_t = scale(f, std::move(old_t), il);
        }
        return {std::move(a), std::move(old_s), std::move(old_t)};
    }

    static E eval(const F& f, const V& a, const E& x) {
        E r = f.zero();
        for (auto it = a.rbegin(); it != a.rend(); ++it) r = f.add(f.mul(r, x), *it);
        return r;
    }

    static V mulmod(const F& f, const V& a, const V& b, const V& m) { return mod(f, mul(f, a, b), m); }

    static V powmod(const F& f, V base, int64_t e, const V& m) {
        V r = mod(f, one(f), m);
        base = mod(f, std::move(base), m);
        while (e > 0) {
            if (e & 1) r = mulmod(f, r, base, m);
            base = mulmod(f, base, base, m);
            e >>= 1;
        }
        return r;
    }

    /// Formal derivative; coefficient k maps through f.from_int(k mod p).
    static V derivative(const F& f, const V& a) {
        if (a.size() <= 1) return {};
        V r(a.size() - 1, f.zero());
        for (std::size_t k = 1; k < a.size(); ++k) r[k - 1] = f.mul(a[k], f.from_int(static_cast<int64_t>(k)));
        trim(f, r);
        return r;
    }
};

namespace detail {

/// Rabin irreducibility test for a monic polynomial over the field context F.
/// `qsize` is the cardinality of F (assumed to fit an int64).
template <class F>
bool is_irreducible(const F& f, const typename PolyAlg<F>::V& m, int64_t qsize) {
    using PA = PolyAlg<F>;
    int d = PA::deg(m);
    if (d < 1) return false;
    if (f.is_zero(m[0]) && d > 1) return false;  // divisible by x
    if (d == 1) return true;
    typename PA::V x{f.zero(), f.one()};
    // Frobenius chain: frob[j] = x^{q^j} mod m
    typename PA::V h = PA::mod(f, x, m);
    std::vector<typename PA::V> frob{h};
    for (int j = 1; j <= d; ++j) frob.push_back(PA::powmod(f, frob.back(), qsize, m));
    if (!PA::eq(f, frob[d], PA::mod(f, x, m))) return false;
    for (int r = 2; r <= d; ++r) {
        if (d % r != 0 || !is_prime(static_cast<int64_t>(r))) continue;
        auto g = PA::gcd(f, PA::sub(f, frob[d / r], x), m);
        if (PA::deg(g) != 0) return false;
    }
    return true;
}

/// Lexicographically smallest monic irreducible of degree d over F
/// (coefficients compared from the constant term up; elements ordered by
/// their index under `from_index`). Degree 1 yields x itself.
template <class F>
typename PolyAlg<F>::V lex_min_irreducible(const F& f, int d, int64_t qsize) {
    using PA = PolyAlg<F>;
    if (d < 1) throw InvalidFieldError("extension degree must be >= 1");
    if (d == 1) return {f.zero(), f.one()};
    // scan (c_0, ..., c_{d-1}) with c_0 most significant; c_0 = 0 is always reducible
    std::vector<int64_t> idx(d, 0);
    idx[0] = 1;
    while (true) {
        typename PA::V cand(d + 1, f.zero());
        cand[d] = f.one();
        for (int i = 0; i < d; ++i) cand[i] = f.from_index(idx[i]);
        if (is_irreducible(f, cand, qsize)) return cand;
        int pos = d - 1;  // least significant digit last
        while (pos >= 0 && idx[pos] == qsize - 1) idx[pos--] = 0;
        if (pos < 0) throw InternalError("no irreducible polynomial found");
        ++idx[pos];
    }
}

}  // namespace detail

/**
 * The field F_q = F_p[u]/(m_u), q = p^n. This is the coefficient field of
 * everything downstream; elements are vectors of n residues mod p,
 * constant term first.
 *
 * The default modulus is the lexicographically smallest monic irreducible
 * of degree n over F_p, so field construction is reproducible without
 * external tables.
 */
class Fq {
   public:
    using Elem = std::vector<int64_t>;

    /// F_{p^n} with the default (lex-min) modulus.
    static Fq make(int64_t p, int n) {
        PrimeField fp(p);
        if (n < 1) throw InvalidFieldError("extension degree must be >= 1");
        if (detail::checked_pow(p, n, int64_t(1) << 40) < 0)
            throw InvalidFieldError("field too large for this tool");
        auto m = detail::lex_min_irreducible(FpIndexed{fp}, n, p);
        return Fq(p, n, std::move(m));
    }

    /// F_{p^n} with an explicit monic irreducible modulus (constant term first,
    /// length n+1).
    static Fq with_modulus(int64_t p, std::vector<int64_t> modulus) {
        PrimeField fp(p);
        for (auto& c : modulus) c = fp.from_int(c);
        PolyAlg<PrimeField>::trim(fp, modulus);
        int n = static_cast<int>(modulus.size()) - 1;
        if (n < 1) throw InvalidFieldError("modulus must have degree >= 1");
        if (modulus.back() != 1) throw InvalidFieldError("modulus must be monic");
        if (!detail::is_irreducible(FpIndexed{fp}, modulus, p))
            throw InvalidFieldError("modulus is not irreducible over F_p");
        if (detail::checked_pow(p, n, int64_t(1) << 40) < 0)
            throw InvalidFieldError("field too large for this tool");
        return Fq(p, n, std::move(modulus));
    }

    int64_t p() const { return p_; }
    int n() const { return n_; }
    int64_t q() const { return q_; }
    const std::vector<int64_t>& modulus() const { return modulus_; }

    // --- field context interface (over raw coefficient vectors) ---
    Elem zero() const { return Elem(n_, 0); }
    Elem one() const {
        Elem e(n_, 0);
        e[0] = 1;
        return e;
    }
    Elem from_int(int64_t a) const {
        Elem e(n_, 0);
        e[0] = detail::mod_reduce(a, p_);
        return e;
    }
    /// The residue class of u (only a generator of F_q over F_p, not
    /// necessarily of the multiplicative group).
    Elem gen() const {
        if (n_ == 1) return from_int(detail::mod_reduce(-modulus_[0], p_));
        Elem e(n_, 0);
        e[1] = 1;
        return e;
    }
    bool is_zero(const Elem& a) const {
        return std::all_of(a.begin(), a.end(), [](int64_t c) { return c == 0; });
    }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const {
        Elem r(n_);
        for (int i = 0; i < n_; ++i) r[i] = (a[i] + b[i]) % p_;
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r(n_);
        for (int i = 0; i < n_; ++i) r[i] = detail::mod_reduce(a[i] - b[i], p_);
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r(n_);
        for (int i = 0; i < n_; ++i) r[i] = a[i] == 0 ? 0 : p_ - a[i];
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        PrimeField fp(p_);
        auto prod = PolyAlg<PrimeField>::mul(fp, strip(a), strip(b));
        return pad(PolyAlg<PrimeField>::mod(fp, std::move(prod), modulus_));
    }
    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw DivisionByZeroError("inverse of zero in F_q");
        PrimeField fp(p_);
        auto [g, s, t] = PolyAlg<PrimeField>::egcd(fp, strip(a), modulus_);
        (void)t;
        if (PolyAlg<PrimeField>::deg(g) != 0) throw InternalError("modulus not coprime to unit");
        return pad(PolyAlg<PrimeField>::scale(fp, std::move(s), fp.inv(g[0])));
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, int64_t e) const {
        Elem r = one();
        while (e > 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    /// Frobenius x -> x^p (an F_p-automorphism).
    Elem frobenius(const Elem& a) const { return pow(a, p_); }
    /// Inverse of Frobenius: the unique y with y^p = x.
    Elem pth_root(const Elem& a) const {
        Elem r = a;
        for (int i = 0; i < n_ - 1; ++i) r = frobenius(r);
        return r;
    }
    /// tr_{F_q/F_p}(x) = x + x^p + ... + x^{p^{n-1}}, as a residue in [0, p).
    int64_t absolute_trace(const Elem& a) const {
        Elem s = zero(), x = a;
        for (int i = 0; i < n_; ++i) {
            s = add(s, x);
            x = frobenius(x);
        }
        for (int i = 1; i < n_; ++i)
            if (s[i] != 0) throw InternalError("trace not in prime field");
        return s[0];
    }

    // --- element enumeration (index = sum c_i p^i) ---
    int64_t index_of(const Elem& a) const {
        int64_t idx = 0;
        for (int i = n_ - 1; i >= 0; --i) idx = idx * p_ + a[i];
        return idx;
    }
    Elem from_index(int64_t idx) const {
        Elem e(n_);
        for (int i = 0; i < n_; ++i) {
            e[i] = idx % p_;
            idx /= p_;
        }
        return e;
    }

    bool operator==(const Fq&) const = default;

   private:
    Fq(int64_t p, int n, std::vector<int64_t> modulus)
        : p_(p), n_(n), q_(detail::checked_pow(p, n)), modulus_(std::move(modulus)) {}

    // PrimeField plus the from_index hook lex_min_irreducible needs
    struct FpIndexed : PrimeField {
        explicit FpIndexed(PrimeField f) : PrimeField(f) {}
        Elem from_index(int64_t i) const { return i; }
    };

    static std::vector<int64_t> strip(Elem a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
        return a;
    }
    std::vector<int64_t> pad(std::vector<int64_t> a) const {
        a.resize(n_, 0);
        return a;
    }

    int64_t p_;
    int n_;
    int64_t q_;
    std::vector<int64_t> modulus_;
};

/**
 * A relative extension F_{q^d} = F_q[v]/(m_v) over a base Fq. Used for the
 * residue fields O_K/P and for the constant-field extensions F_{q^k} that
 * point counting enumerates. Elements are vectors of d base-field elements.
 */
class ExtFq {
   public:
    using Elem = std::vector<Fq::Elem>;

    ExtFq(Fq base, std::vector<Fq::Elem> modulus) : base_(std::move(base)) {
        for (auto& c : modulus)
            if (static_cast<int>(c.size()) != base_.n()) throw FieldMismatchError("modulus coefficient has wrong base field");
        PolyAlg<Fq>::trim(base_, modulus);
        d_ = PolyAlg<Fq>::deg(modulus);
        if (d_ < 1) throw InvalidFieldError("relative degree must be >= 1");
        if (!base_.eq(modulus.back(), base_.one())) throw NotIrreducibleError("extension modulus must be monic");
        if (!detail::is_irreducible(base_, modulus, base_.q()))
            throw NotIrreducibleError("extension modulus is not irreducible over the base field");
        modulus_ = std::move(modulus);
    }

    /// F_{q^d} with the default (lex-min) modulus over the base field.
    static ExtFq make(const Fq& base, int d) {
        if (d < 1) throw InvalidFieldError("relative degree must be >= 1");
        auto m = detail::lex_min_irreducible(base, d, base.q());
        return ExtFq(base, std::move(m));
    }

    const Fq& base() const { return base_; }
    int d() const { return d_; }
    int64_t p() const { return base_.p(); }
    /// Total degree over F_p.
    int abs_degree() const { return base_.n() * d_; }
    /// q^d, or -1 if it does not fit the guard limit.
    int64_t size() const { return detail::checked_pow(base_.q(), d_); }
    const std::vector<Fq::Elem>& modulus() const { return modulus_; }

    Elem zero() const { return Elem(d_, base_.zero()); }
    Elem one() const {
        Elem e(d_, base_.zero());
        e[0] = base_.one();
        return e;
    }
    /// The residue class of v.
    Elem gen() const {
        if (d_ == 1) return Elem{base_.neg(modulus_[0])};
        Elem e(d_, base_.zero());
        e[1] = base_.one();
        return e;
    }
    /// Constant embedding of the base field; a ring homomorphism.
    Elem embed(const Fq::Elem& a) const {
        Elem e(d_, base_.zero());
        e[0] = a;
        return e;
    }
    bool is_zero(const Elem& a) const {
        return std::all_of(a.begin(), a.end(), [&](const Fq::Elem& c) { return base_.is_zero(c); });
    }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const {
        Elem r(d_);
        for (int i = 0; i < d_; ++i) r[i] = base_.add(a[i], b[i]);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r(d_);
        for (int i = 0; i < d_; ++i) r[i] = base_.sub(a[i], b[i]);
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r(d_);
        for (int i = 0; i < d_; ++i) r[i] = base_.neg(a[i]);
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        auto prod = PolyAlg<Fq>::mul(base_, strip(a), strip(b));
        return pad(PolyAlg<Fq>::mod(base_, std::move(prod), modulus_));
    }
    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw DivisionByZeroError("inverse of zero in F_{q^d}");
        auto [g, s, t] = PolyAlg<Fq>::egcd(base_, strip(a), modulus_);
        (void)t;
        if (PolyAlg<Fq>::deg(g) != 0) throw InternalError("modulus not coprime to unit");
        return pad(PolyAlg<Fq>::scale(base_, std::move(s), base_.inv(g[0])));
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, int64_t e) const {
        Elem r = one();
        while (e > 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    Elem frobenius(const Elem& a) const { return pow(a, p()); }
    Elem pth_root(const Elem& a) const {
        Elem r = a;
        for (int i = 0; i < abs_degree() - 1; ++i) r = frobenius(r);
        return r;
    }

    /// tr_{F_{q^d}/F_q}(x) = x + x^q + ... + x^{q^{d-1}}.
    Fq::Elem relative_trace(const Elem& a) const {
        Elem s = zero(), x = a;
        for (int i = 0; i < d_; ++i) {
            s = add(s, x);
            x = pow(x, base_.q());
        }
        for (int i = 1; i < d_; ++i)
            if (!base_.is_zero(s[i])) throw InternalError("relative trace not in base field");
        return s[0];
    }
    /// Absolute trace to F_p, composed through the base field.
    int64_t absolute_trace(const Elem& a) const { return base_.absolute_trace(relative_trace(a)); }

    int64_t index_of(const Elem& a) const {
        int64_t idx = 0;
        for (int i = d_ - 1; i >= 0; --i) idx = idx * base_.q() + base_.index_of(a[i]);
        return idx;
    }
    Elem from_index(int64_t idx) const {
        Elem e(d_);
        for (int i = 0; i < d_; ++i) {
            e[i] = base_.from_index(idx % base_.q());
            idx /= base_.q();
        }
        return e;
    }

    bool operator==(const ExtFq&) const = default;

   private:
    static Elem strip(Elem a) {
        while (!a.empty() && std::all_of(a.back().begin(), a.back().end(), [](int64_t c) { return c == 0; }))
            a.pop_back();
        return a;
    }
    Elem pad(Elem a) const {
        a.resize(d_, base_.zero());
        return a;
    }

    Fq base_;
    int d_;
    std::vector<Fq::Elem> modulus_;
};

/**
 * Value-semantic F_q element carrying its owning field, for use at API
 * boundaries. Arithmetic between elements of different fields throws.
 */
class FieldElem {
   public:
    FieldElem(Fq field, int64_t value) : field_(std::move(field)), c_(field_.from_int(value)) {}
    FieldElem(Fq field, Fq::Elem coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
        if (static_cast<int>(c_.size()) != field_.n()) throw FieldMismatchError("coefficient vector has wrong length");
        for (auto& x : c_) x = detail::mod_reduce(x, field_.p());
    }

    static FieldElem zero(const Fq& f) { return FieldElem(f, f.zero()); }
    static FieldElem one(const Fq& f) { return FieldElem(f, f.one()); }
    static FieldElem generator(const Fq& f) { return FieldElem(f, f.gen()); }

    const Fq& field() const { return field_; }
    const Fq::Elem& coeffs() const { return c_; }
    bool is_zero() const { return field_.is_zero(c_); }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
        check(a, b);
        return FieldElem(a.field_, a.field_.add(a.c_, b.c_), tag{});
    }
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b) {
        check(a, b);
        return FieldElem(a.field_, a.field_.sub(a.c_, b.c_), tag{});
    }
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
        check(a, b);
        return FieldElem(a.field_, a.field_.mul(a.c_, b.c_), tag{});
    }
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b) {
        check(a, b);
        return FieldElem(a.field_, a.field_.div(a.c_, b.c_), tag{});
    }
    FieldElem operator-() const { return FieldElem(field_, field_.neg(c_), tag{}); }
    friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

    FieldElem pow(int64_t e) const { return FieldElem(field_, field_.pow(c_, e), tag{}); }

   private:
    struct tag {};
    FieldElem(Fq field, Fq::Elem coeffs, tag) : field_(std::move(field)), c_(std::move(coeffs)) {}
    static void check(const FieldElem& a, const FieldElem& b) {
        if (!(a.field_ == b.field_)) throw FieldMismatchError("operands belong to different fields");
    }

    Fq field_;
    Fq::Elem c_;
};

inline int64_t absolute_trace(const FieldElem& x) { return x.field().absolute_trace(x.coeffs()); }
inline FieldElem pth_root(const FieldElem& x) { return FieldElem(x.field(), x.field().pth_root(x.coeffs())); }

/// Constant embedding F_q -> F_{q^d}; requires ext.base() == x.field().
inline ExtFq::Elem embed(const FieldElem& x, const ExtFq& ext) {
    if (!(ext.base() == x.field())) throw FieldMismatchError("element does not live in the base field of the extension");
    return ext.embed(x.coeffs());
}

}  // namespace asgenus

#endif  // ASGENUS_GF_HPP
