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

TEST_CASE("expressions match the worked examples") {
    Fq f2 = Fq::make(2, 1);
    Poly t = Poly::t(f2);
    Poly one = Poly::one(f2);

    RationalFunction a = parse_expression("1/t + t", f2);
    CHECK(a.num() == t * t + one);
    CHECK(a.den() == t);

    CHECK(parse_expression("(t^3+1)/t", f2) == parse_expression("t^2 + 1/t", f2));
    CHECK_THROWS_AS(parse_expression("1/0", f2), DivisionByZeroError);
}

TEST_CASE("the grammar handles precedence, powers, and whitespace") {
    Fq f3 = Fq::make(3, 1);
    Poly t = Poly::t(f3);

    CHECK(parse_expression("2*t^2 + t", f3) == parse_expression("t+t^2+t^2", f3));
    CHECK(parse_expression("  1 / ( t + 2 ) ", f3) ==
          RationalFunction::make(Poly::one(f3), t + Poly::constant(f3, 2)));
    CHECK(parse_expression("(t+1)^3", f3) == parse_expression("(t+1)*(t+1)*(t+1)", f3));
    CHECK(parse_expression("t^2^3", f3) == parse_expression("t^6", f3));  // left-assoc powers
    CHECK(parse_expression("2^3", f3) == parse_expression("2", f3));      // 8 mod 3
    CHECK(parse_expression("t^0", f3) == parse_expression("1", f3));
    CHECK(parse_expression("1/t/t", f3) == parse_expression("1/t^2", f3));
    CHECK(parse_expression("t - t", f3).is_zero());
    CHECK(parse_expression("7", f3) == parse_expression("1", f3));
}

TEST_CASE("syntax errors carry positions") {
    Fq f2 = Fq::make(2, 1);
    auto pos_of = [&](const std::string& src) {
        try {
            parse_expression(src, f2);
        } catch (const ParseError& e) {
            return e.position();
        }
        return static_cast<std::size_t>(-1);
    };
    CHECK(pos_of("t + ") == 4);
    CHECK(pos_of("t t") == 2);
    CHECK(pos_of("(t+1") == 4);
    CHECK(pos_of("t + *") == 4);
    CHECK(pos_of("x") == 0);
    CHECK_THROWS_AS(parse_expression("", f2), ParseError);
}

TEST_CASE("the generator is rejected over prime fields and parsed over extensions") {
    Fq f2 = Fq::make(2, 1);
    CHECK_THROWS_AS(parse_expression("g + t", f2), GeneratorUnavailableError);

    Fq f4 = Fq::make(2, 2);
    RationalFunction v = parse_expression("g^2 + g", f4);
    // u^2 + u = 1 for the F_4 modulus u^2 + u + 1
    CHECK(v == parse_expression("1", f4));
    CHECK(parse_expression("g*t + g^2", f4).num().coeff(1) == f4.gen());
}

TEST_CASE("printed polynomials and rationals parse back to themselves") {
    Rng rng(70);
    for (auto [p, n] : std::vector<std::pair<int64_t, int>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {5, 1}}) {
        Fq f = Fq::make(p, n);
        for (int it = 0; it < 120; ++it) {
            Poly a = asgenus::testing::random_poly(f, 8, rng);
            CHECK(parse_expression(a.to_string(), f) == RationalFunction::from_poly(a));
            RationalFunction r = asgenus::testing::random_ratfunc(f, 6, 6, rng);
            CHECK(parse_expression(r.to_string(), f) == r);
        }
    }
}

TEST_CASE("field specifications parse and validate") {
    FieldSpec a = parse_field_spec("2");
    CHECK(a.p == 2);
    CHECK(a.n == 1);
    FieldSpec b = parse_field_spec("4");
    CHECK(b.p == 2);
    CHECK(b.n == 2);
    FieldSpec c = parse_field_spec("3^2");
    CHECK(c.p == 3);
    CHECK(c.n == 2);
    FieldSpec d = parse_field_spec("9:2,2,1");
    REQUIRE(d.modulus.has_value());
    CHECK(make_field(d).modulus() == std::vector<int64_t>{2, 2, 1});

    CHECK(make_field(parse_field_spec("2^3")).q() == 8);
    CHECK_THROWS_AS(parse_field_spec("6"), ParseError);
    CHECK_THROWS_AS(parse_field_spec("4^2"), ParseError);
    CHECK_THROWS_AS(parse_field_spec("0"), ParseError);
    CHECK_THROWS_AS(parse_field_spec("9:2,2"), ParseError);
    CHECK_THROWS_AS(parse_field_spec("9 junk"), ParseError);
    CHECK_THROWS_AS(make_field(parse_field_spec("9:2,0,1")), InvalidFieldError);  // u^2+2 = (u+1)(u+2)
}
