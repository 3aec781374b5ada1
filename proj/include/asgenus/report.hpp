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
 * @file report.hpp
 *
 * The end-to-end pipeline behind the CLI: parse field and D, normalize,
 * compute all invariants (optionally the zeta verification block), and
 * render the result as text or as a single JSON document with schema
 * "as-genus/1". Reports are fully recomputable from the input and
 * serialize byte-identically across runs.
 */

#ifndef ASGENUS_REPORT_HPP
#define ASGENUS_REPORT_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "invariants.hpp"
#include "parse.hpp"
#include "zeta.hpp"

namespace asgenus {

struct RunOptions {
    bool with_zeta = false;
    int64_t budget = int64_t(1) << 22;
    std::uint64_t seed = kDefaultFactorSeed;
};

struct ZetaBlock {
    int64_t genus;
    bool supported;                    // class-number path available
    std::vector<int64_t> point_counts; // N_1..N_{2g}
    std::vector<int64_t> l_coeffs;     // a_0..a_{2g}
    int64_t class_number = 0;
    bool divisibility_pass = false;
    int64_t lambda1 = 0;
    int64_t p_power = 0;
};

struct Report {
    std::string field_spec;
    std::string d_expr;
    FieldSpec spec;
    Fq field;
    RationalFunction d_reduced;
    NormalizedAS norm;
    std::vector<Place> ramified;
    GenusFieldDescription genus_fld;
    int64_t lambda1;
    RedeiMatrix redei;
    int rank;
    int64_t lambda2;
    std::optional<ZetaBlock> zeta;
};

/// Run the whole pipeline. Throws the library's error types; the CLI maps
/// them to exit codes.
inline Report run(const std::string& field_spec, const std::string& d_expr, const RunOptions& opts = {}) {
    FieldSpec spec = parse_field_spec(field_spec);
    Fq field = make_field(spec);
    RationalFunction D = parse_expression(d_expr, field);
    if (D.is_zero()) throw TrivialExtensionError("D = 0 defines the trivial extension");

    NormalizedAS norm = normalize(D, opts.seed);
    RedeiMatrix R = redei_matrix(norm);
    int rank = rank_mod_p(R);
    int64_t l1 = lambda1(norm);
    int64_t l2 = norm.classification == Classification::Real ? norm.m() - 1 - rank : norm.m() - rank;
    if (l2 < 0) throw InternalError("lambda2 formula went negative");

    Report rep{field_spec, d_expr,     spec, field, D,  norm, ramified_places(norm),
               genus_field(norm),      l1,   R,     rank, l2, std::nullopt};

    if (opts.with_zeta) {
        ZetaOptions zopts{opts.budget, false};
        ZetaBlock z{};
        z.genus = genus(norm);
        z.supported = norm.classification == Classification::RamifiedImaginary;
        if (z.supported) {
            for (int k = 1; k <= 2 * z.genus; ++k) z.point_counts.push_back(point_count(norm, k, zopts));
            LPolynomial L = l_polynomial(norm, zopts);
            z.l_coeffs = L.coeffs;
            DivisibilityCheck dc = genus_divisibility_check(norm, zopts);
            z.class_number = dc.class_number;
            z.divisibility_pass = dc.pass;
            z.lambda1 = dc.lambda1;
            z.p_power = dc.p_power;
        }
        rep.zeta = std::move(z);
    }
    return rep;
}

namespace detail {

inline nlohmann::json local_part_json(const LocalPart& part) {
    return {{"P", part.P.to_string()}, {"e", part.e}, {"Q", part.Q.to_string()}};
}

}  // namespace detail

/// Single JSON document; nlohmann::json keeps keys sorted, so serialization
/// is canonical.
inline std::string render_json(const Report& rep) {
    nlohmann::json j;
    j["schema"] = "as-genus/1";
    j["input"] = {{"field", rep.field_spec}, {"d", rep.d_expr}};
    j["field"] = {{"p", rep.field.p()}, {"n", rep.field.n()}, {"q", rep.field.q()}, {"modulus", rep.field.modulus()}};
    j["d_reduced"] = rep.d_reduced.to_string();

    nlohmann::json parts = nlohmann::json::array();
    for (const auto& part : rep.norm.parts) parts.push_back(detail::local_part_json(part));
    j["normalized"] = {{"parts", parts},
                       {"f", rep.norm.f.to_string()},
                       {"witness", rep.norm.witness.to_string()},
                       {"m", rep.norm.m()}};
    j["classification"] = to_string(rep.norm.classification);

    nlohmann::json places = nlohmann::json::array();
    for (const auto& pl : rep.ramified) places.push_back(pl.to_string());
    j["ramified_places"] = places;

    nlohmann::json gens = nlohmann::json::array();
    for (const auto& part : rep.genus_fld.local_generators)
        gens.push_back(part.to_ratfunc().to_string());
    if (rep.genus_fld.f_generator) gens.push_back(rep.genus_fld.f_generator->to_string());
    j["genus_field"] = {{"generators", gens}, {"relative_degree", rep.genus_fld.relative_degree}};

    j["lambda1"] = rep.lambda1;
    nlohmann::json labels = nlohmann::json::array();
    for (const auto& P : rep.redei.places) labels.push_back(P.to_string());
    j["redei_matrix"] = {{"places", labels}, {"entries", rep.redei.entries}};
    j["rank"] = rep.rank;
    j["lambda2"] = rep.lambda2;

    if (rep.zeta) {
        nlohmann::json z;
        z["genus"] = rep.zeta->genus;
        z["supported"] = rep.zeta->supported;
        if (rep.zeta->supported) {
            z["point_counts"] = rep.zeta->point_counts;
            z["l_coefficients"] = rep.zeta->l_coeffs;
            z["class_number"] = rep.zeta->class_number;
            z["divisibility"] = {{"pass", rep.zeta->divisibility_pass},
                                 {"lambda1", rep.zeta->lambda1},
                                 {"p_power", rep.zeta->p_power}};
        } else {
            z["note"] = "point counts and class number are computed only for ramified imaginary K";
        }
        j["zeta"] = z;
    }
    return j.dump(2) + "\n";
}

inline std::string render_text(const Report& rep) {
    std::ostringstream os;
    os << "field           F_" << rep.field.q() << " (p = " << rep.field.p() << ", n = " << rep.field.n() << ")\n";
    os << "D               " << rep.d_reduced.to_string() << "\n";
    os << "normalized D    ";
    {
        bool first = true;
        for (const auto& part : rep.norm.parts) {
            if (!first) os << " + ";
            os << part.to_ratfunc().to_string();
            first = false;
        }
        if (!rep.norm.f.is_zero() || first) {
            if (!first) os << " + ";
            os << rep.norm.f.to_string();
        }
        os << "\n";
    }
    os << "witness B       " << rep.norm.witness.to_string() << "\n";
    os << "classification  " << to_string(rep.norm.classification) << "\n";
    os << "m               " << rep.norm.m() << "\n";
    os << "ramified places ";
    for (std::size_t i = 0; i < rep.ramified.size(); ++i) os << (i ? ", " : "") << rep.ramified[i].to_string();
    os << "\n";
    os << "genus field     generators";
    for (const auto& part : rep.genus_fld.local_generators) os << "  " << part.to_ratfunc().to_string();
    if (rep.genus_fld.f_generator) os << "  " << rep.genus_fld.f_generator->to_string();
    os << "\n                [G(K):K] = " << rep.genus_fld.relative_degree << "\n";
    os << "lambda1         " << rep.lambda1 << "\n";
    os << "Redei matrix    (rows/cols: ";
    for (std::size_t i = 0; i < rep.redei.places.size(); ++i) os << (i ? ", " : "") << rep.redei.places[i].to_string();
    os << ")\n";
    for (const auto& row : rep.redei.entries) {
        os << "                [";
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
        os << "]\n";
    }
    os << "rank            " << rep.rank << "\n";
    os << "lambda2         " << rep.lambda2 << "\n";
    if (rep.zeta) {
        os << "genus           " << rep.zeta->genus << "\n";
        if (rep.zeta->supported) {
            os << "point counts    ";
            for (std::size_t i = 0; i < rep.zeta->point_counts.size(); ++i)
                os << (i ? ", " : "") << "N_" << (i + 1) << " = " << rep.zeta->point_counts[i];
            os << "\n";
            os << "L-polynomial    ";
            for (std::size_t i = 0; i < rep.zeta->l_coeffs.size(); ++i) {
                if (i) os << " + ";
                os << rep.zeta->l_coeffs[i];
                if (i == 1) os << "*T";
                if (i > 1) os << "*T^" << i;
            }
            os << "\n";
            os << "class number    " << rep.zeta->class_number << "\n";
            os << "divisibility    " << rep.zeta->p_power << " | " << rep.zeta->class_number << " : "
               << (rep.zeta->divisibility_pass ? "pass" : "FAIL") << "\n";
        } else {
            os << "zeta            class number available only for ramified imaginary K\n";
        }
    }
    return os.str();
}

}  // namespace asgenus

#endif  // ASGENUS_REPORT_HPP
