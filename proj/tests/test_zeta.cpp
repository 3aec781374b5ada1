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

Fq f2() { return Fq::make(2, 1); }

RationalFunction parse2(const std::string& s) { return parse_expression(s, f2()); }

// Independent point counter: enumerate pairs (t0, y) directly, with no
// trace shortcut, then add the ramified and infinite points.
int64_t brute_count(const NormalizedAS& norm, int k) {
    const Fq& F = norm.field();
    ExtFq E = ExtFq::make(F, k);
    RationalFunction D = norm.recombined();
    int64_t cnt = 0;
    for (int64_t i = 0; i < E.size(); ++i) {
        ExtFq::Elem x = E.from_index(i);
        ExtFq::Elem dv = E.zero();
        for (int c = D.den().degree(); c >= 0; --c) dv = E.add(E.mul(dv, x), E.embed(D.den().coeff(c)));
        if (E.is_zero(dv)) continue;
        ExtFq::Elem nv = E.zero();
        for (int c = D.num().degree(); c >= 0; --c) nv = E.add(E.mul(nv, x), E.embed(D.num().coeff(c)));
        ExtFq::Elem v = E.div(nv, dv);
        for (int64_t j = 0; j < E.size(); ++j) {
            ExtFq::Elem y = E.from_index(j);
            if (E.eq(E.sub(E.pow(y, F.p()), y), v)) ++cnt;
        }
    }
    for (const auto& part : norm.parts)
        if (k % part.P.degree() == 0) cnt += part.P.degree();
    if (norm.classification == Classification::RamifiedImaginary) cnt += 1;
    return cnt;
}

// N_k recovered from the L-polynomial's power sums (Newton, forward).
std::vector<int64_t> counts_from_l(const LPolynomial& L, int64_t q, int kmax) {
    int twog = static_cast<int>(L.coeffs.size()) - 1;
    std::vector<int64_t> S(static_cast<std::size_t>(kmax) + 1, 0), N(static_cast<std::size_t>(kmax) + 1, 0);
    for (int k = 1; k <= kmax; ++k) {
        int64_t acc = k <= twog ? k * L.coeffs[static_cast<std::size_t>(k)] : 0;
        for (int i = 1; i < k && i <= twog; ++i) acc += L.coeffs[static_cast<std::size_t>(i)] * S[static_cast<std::size_t>(k - i)];
        S[static_cast<std::size_t>(k)] = -acc;
        N[static_cast<std::size_t>(k)] = detail::checked_pow(q, k) + 1 - S[static_cast<std::size_t>(k)];
    }
    return N;
}

}  // namespace

TEST_CASE("genus matches the worked examples") {
    CHECK(genus(normalize(parse2("1/t + t"))) == 1);
    CHECK(genus(normalize(parse2("1/(t^2+t)"))) == 1);
    CHECK(genus(normalize(parse2("1/t"))) == 0);
    CHECK(genus(normalize(parse2("1/t + 1"))) == 0);  // inertial imaginary
    CHECK(genus(normalize(parse2("1/t + t^3"))) == 2);
    CHECK(genus(normalize(parse2("t^3"))) == 1);
}

TEST_CASE("point counts match the worked examples") {
    NormalizedAS n = normalize(parse2("1/t + t"));
    CHECK(point_count(n, 1) == 4);
    CHECK(point_count(n, 2) == 8);

    // the real instance 1/t only supports affine-only counting: the lone
    // affine point lies over the ramified place t
    NormalizedAS real = normalize(parse2("1/t"));
    CHECK_THROWS_AS(point_count(real, 1), UnsupportedClassificationError);
    ZetaOptions affine;
    affine.affine_only = true;
    CHECK(point_count(real, 1, affine) == 1);

    NormalizedAS tcase = normalize(parse2("t"));
    CHECK(point_count(tcase, 1) == 3);  // q + 1 on the genus-0 curve
    CHECK(point_count(tcase, 2) == 5);
}

TEST_CASE("point counts agree with the brute-force pair enumeration") {
    for (const char* expr : {"1/t + t", "t^3", "1/t + t^3", "t^3 + t"}) {
        NormalizedAS n = normalize(parse2(expr));
        int64_t g = genus(n);
        for (int k = 1; k <= std::min<int64_t>(2 * g + 2, 6); ++k) CHECK(point_count(n, k) == brute_count(n, k));
    }
    Fq f3 = Fq::make(3, 1);
    NormalizedAS n3 = normalize(parse_expression("1/t + t", f3));
    for (int k = 1; k <= 4; ++k) CHECK(point_count(n3, k) == brute_count(n3, k));
}

TEST_CASE("L-polynomials match the worked examples") {
    LPolynomial L = l_polynomial(normalize(parse2("1/t + t")));
    CHECK(L.g == 1);
    CHECK(L.coeffs == std::vector<int64_t>{1, 1, 2});
    CHECK(L.coeffs[2] == 2 * L.coeffs[0]);  // functional equation a_2 = q a_0

    LPolynomial L0 = l_polynomial(normalize(parse2("t")));
    CHECK(L0.g == 0);
    CHECK(L0.coeffs == std::vector<int64_t>{1});
}

TEST_CASE("class numbers match the worked examples and the brute oracle") {
    CHECK(class_number(normalize(parse2("1/t + t"))) == 4);
    CHECK(class_number(normalize(parse2("t"))) == 1);

    // y^2 + y = t^3: freeze h from the brute-force counts
    NormalizedAS cubic = normalize(parse2("t^3"));
    REQUIRE(genus(cubic) == 1);
    int64_t n1 = brute_count(cubic, 1), n2 = brute_count(cubic, 2);
    CHECK(n1 == 3);
    CHECK(n2 == 9);
    // S_1 = 3 - n1 = 0, S_2 = 5 - n2 = -4 force L = 1 + 2T^2, so h = 3
    LPolynomial L = l_polynomial(cubic);
    CHECK(L.coeffs == std::vector<int64_t>{1, 0, 2});
    CHECK(class_number(cubic) == 3);
}

TEST_CASE("counts recomputed from the L-polynomial overdetermine the enumeration") {
    for (const char* expr : {"1/t + t", "t^3", "1/t + t^3"}) {
        NormalizedAS n = normalize(parse2(expr));
        LPolynomial L = l_polynomial(n);
        int kmax = static_cast<int>(2 * L.g + 2);
        auto N = counts_from_l(L, n.field().q(), kmax);
        for (int k = 1; k <= kmax; ++k) CHECK(N[static_cast<std::size_t>(k)] == point_count(n, k));
    }
}

TEST_CASE("divisibility checks match the worked examples") {
    DivisibilityCheck a = genus_divisibility_check(normalize(parse2("1/t + t")));
    CHECK(a.pass);
    CHECK(a.lambda1 == 1);
    CHECK(a.class_number == 4);
    CHECK(a.p_power == 2);

    DivisibilityCheck b = genus_divisibility_check(normalize(parse2("t")));
    CHECK(b.pass);
    CHECK(b.lambda1 == 0);
    CHECK(b.class_number == 1);

    DivisibilityCheck c = genus_divisibility_check(normalize(parse2("1/t + 1/(t+1) + t")));
    CHECK(c.lambda1 == 2);
    CHECK(c.p_power == 4);
    CHECK(c.pass);
    CHECK(c.class_number % 4 == 0);
}

TEST_CASE("lambda2 cross-validation on the worked genus-1 instance") {
    // h = 4 with lambda1 = 1 forces the 2-part of Cl(K) cyclic of order 4,
    // consistent with lambda2 = 1 from the Redei matrix
    NormalizedAS n = normalize(parse2("1/t + t"));
    InvariantsReport rep = analyze(n);
    CHECK(rep.lambda1 == 1);
    CHECK(rep.lambda2 == 1);
    CHECK(rep.rank == 0);
    CHECK(class_number(n) == 4);
}

TEST_CASE("unsupported classifications and budget overruns are rejected") {
    NormalizedAS real = normalize(parse2("1/(t^2+t)"));
    CHECK_THROWS_AS(point_count(real, 1), UnsupportedClassificationError);
    CHECK_THROWS_AS(l_polynomial(real), UnsupportedClassificationError);
    CHECK_THROWS_AS(class_number(real), UnsupportedClassificationError);

    NormalizedAS inert = normalize(parse2("1/t + 1"));
    CHECK(inert.classification == Classification::InertialImaginary);
    CHECK_THROWS_AS(class_number(inert), UnsupportedClassificationError);

    NormalizedAS ram = normalize(parse2("1/t + t"));
    ZetaOptions tiny;
    tiny.budget = 1;
    CHECK_THROWS_AS(point_count(ram, 1, tiny), BudgetExceededError);
    CHECK_THROWS_AS(l_polynomial(ram, tiny), BudgetExceededError);
}

TEST_CASE("every computed L-polynomial satisfies the functional equation") {
    Rng rng(60);
    for (auto q : {2, 3}) {
        Fq f = Fq::make(q, 1);
        int done = 0;
        while (done < 15) {
            RationalFunction D = asgenus::testing::random_nonzero_ratfunc(f, 4, 3, rng);
            std::optional<NormalizedAS> norm;
            try {
                norm = normalize(D);
            } catch (const Error&) {
                continue;
            }
            if (norm->classification != Classification::RamifiedImaginary) continue;
            int64_t g = genus(*norm);
            if (g > 3) continue;
            LPolynomial L = l_polynomial(*norm);  // throws on any FE violation
            REQUIRE(static_cast<int64_t>(L.coeffs.size()) == 2 * g + 1);
            for (int64_t i = 0; i <= g; ++i)
                CHECK(L.coeffs[static_cast<std::size_t>(2 * g - i)] ==
                      detail::checked_pow(f.q(), static_cast<int>(g - i)) * L.coeffs[static_cast<std::size_t>(i)]);
            CHECK(L.value_at_one() >= 1);
            ++done;
        }
    }
}
