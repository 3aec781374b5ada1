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
 * @file parse.hpp
 *
 * Text front end: field specifications ("2", "3^2", "4:1,1,1") and
 * rational-function expressions over F_q(t) with the grammar
 *
 *   expr   := term (('+'|'-') term)*
 *   term   := factor (('*'|'/') factor)*
 *   factor := primary ('^' uint)*
 *   primary:= 't' | uint | 'g' | '(' expr ')'
 *
 * where 'g' is the generator of F_q over F_p (rejected when q is prime).
 * Whitespace is insignificant. Syntax errors carry the byte offset.
 */

#ifndef ASGENUS_PARSE_HPP
#define ASGENUS_PARSE_HPP

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ratfunc.hpp"

namespace asgenus {

struct FieldSpec {
    int64_t p;
    int n;
    std::optional<std::vector<int64_t>> modulus;  // constant term first, length n+1
};

namespace detail {

class Cursor {
   public:
    explicit Cursor(const std::string& src) : src_(src) {}
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= src_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) fail(std::string("expected ") + what);
    }
    std::size_t pos() {
        skip_ws();
        return pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at position " + std::to_string(pos_), pos_);
    }
    int64_t parse_uint(int64_t cap, const char* what) {
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) fail(std::string("expected ") + what);
        int64_t v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + (src_[pos_] - '0');
            if (v > cap) fail(std::string(what) + " too large");
            ++pos_;
        }
        return v;
    }

   private:
    const std::string& src_;
    std::size_t pos_ = 0;
};

class ExprParser {
   public:
    ExprParser(const std::string& src, const Fq& field) : cur_(src), field_(field) {}

    RationalFunction parse() {
        RationalFunction v = expr();
        if (!cur_.at_end()) cur_.fail("unexpected trailing input");
        return v;
    }

   private:
    RationalFunction expr() {
        RationalFunction v = term();
        while (true) {
            if (cur_.accept('+'))
                v = v + term();
            else if (cur_.accept('-'))
                v = v - term();
            else
                return v;
        }
    }
    RationalFunction term() {
        RationalFunction v = factor();
        while (true) {
            if (cur_.accept('*')) {
                v = v * factor();
            } else if (cur_.accept('/')) {
                std::size_t at = cur_.pos();
                RationalFunction d = factor();
                if (d.is_zero()) throw DivisionByZeroError("division by zero at position " + std::to_string(at));
                v = v / d;
            } else {
                return v;
            }
        }
    }
    RationalFunction factor() {
        RationalFunction v = primary();
        while (cur_.accept('^')) v = v.pow(cur_.parse_uint(100000, "exponent"));
        return v;
    }
    RationalFunction primary() {
        std::size_t at = cur_.pos();
        if (cur_.accept('t')) return RationalFunction::from_poly(Poly::t(field_));
        if (cur_.accept('g')) {
            if (field_.n() == 1)
                throw GeneratorUnavailableError("'g' needs an extension field (n > 1) at position " + std::to_string(at), at);
            return RationalFunction::from_poly(Poly::constant(field_, field_.gen()));
        }
        if (cur_.accept('(')) {
            RationalFunction v = expr();
            cur_.expect(')', "')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(cur_.peek()))) {
            int64_t v = cur_.parse_uint(int64_t(1) << 60, "integer");
            return RationalFunction::from_poly(Poly::constant(field_, field_.from_int(v)));
        }
        cur_.fail("expected 't', 'g', an integer, or '('");
    }

    Cursor cur_;
    const Fq& field_;
};

inline bool factor_prime_power(int64_t q, int64_t& p, int& n) {
    if (q < 2) return false;
    int64_t base = q;
    for (int64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            base = d;
            break;
        }
    p = base;
    n = 0;
    while (q > 1) {
        if (q % base != 0) return false;
        q /= base;
        ++n;
    }
    return true;
}

}  // namespace detail

/// "p^n", a plain prime power "q", optionally with an explicit modulus
/// ":c0,c1,...,1" (constant term first).
inline FieldSpec parse_field_spec(const std::string& src) {
    detail::Cursor cur(src);
    int64_t base = cur.parse_uint(int64_t(1) << 40, "field size");
    FieldSpec spec{};
    if (cur.accept('^')) {
        spec.p = base;
        spec.n = static_cast<int>(cur.parse_uint(64, "extension degree"));
        if (spec.n < 1) cur.fail("extension degree must be >= 1");
        if (!detail::is_prime(spec.p)) cur.fail("base of p^n must be prime");
    } else {
        if (!detail::factor_prime_power(base, spec.p, spec.n)) cur.fail("field size must be a prime power");
    }
    if (cur.accept(':')) {
        std::vector<int64_t> mod;
        mod.push_back(cur.parse_uint(int64_t(1) << 40, "modulus coefficient"));
        while (cur.accept(',')) mod.push_back(cur.parse_uint(int64_t(1) << 40, "modulus coefficient"));
        if (static_cast<int>(mod.size()) != spec.n + 1) cur.fail("modulus must list n+1 coefficients");
        spec.modulus = std::move(mod);
    }
    if (!cur.at_end()) cur.fail("unexpected trailing input");
    return spec;
}

inline Fq make_field(const FieldSpec& spec) {
    if (spec.modulus) {
        Fq f = Fq::with_modulus(spec.p, *spec.modulus);
        if (f.n() != spec.n) throw InvalidFieldError("modulus degree does not match the field specification");
        return f;
    }
    return Fq::make(spec.p, spec.n);
}

/// Parse a rational-function expression over the given field.
inline RationalFunction parse_expression(const std::string& src, const Fq& field) {
    return detail::ExprParser(src, field).parse();
}

}  // namespace asgenus

#endif  // ASGENUS_PARSE_HPP
