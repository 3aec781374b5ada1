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

// CLI for the Artin-Schreier genus calculator. Exit codes:
//   0 ok, 2 parse/field error, 3 trivial extension, 4 non-geometric,
//   5 enumeration budget exceeded, 1 anything else.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <asgenus/asgenus.hpp>

int main(int argc, char** argv) {
    CLI::App app{"Genus theory of Artin-Schreier extensions K = F_q(t)(y), y^p - y = D"};

    std::string field_spec;
    std::string d_expr;
    std::string modulus_csv;
    bool with_zeta = false;
    bool as_json = false;
    bool as_text = false;
    std::int64_t budget = std::int64_t(1) << 22;
    std::uint64_t seed = asgenus::kDefaultFactorSeed;

    app.add_option("--field,-f", field_spec, "Field spec: 'p^n', a prime power 'q', or 'p^n:c0,c1,...,1'")
        ->required();
    app.add_option("--d,-d", d_expr, "Rational function D over F_q(t), e.g. '1/(t^2+t)' or '1/t + t'")->required();
    app.add_option("--modulus", modulus_csv, "Override the default F_q modulus: 'c0,c1,...,1' (constant first)");
    app.add_flag("--zeta", with_zeta, "Also run the point-counting verification block");
    app.add_option("--budget", budget, "Enumeration budget: cap on q^k point-count loops (default 2^22)");
    app.add_flag("--json", as_json, "Emit the machine-readable JSON report");
    app.add_flag("--text", as_text, "Emit the human-readable text report (default)");
    app.add_option("--seed", seed, "PRNG seed for equal-degree splitting (output is canonical regardless)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (!modulus_csv.empty()) {
            if (field_spec.find(':') != std::string::npos)
                throw asgenus::ParseError("--modulus conflicts with a ':' modulus in --field", 0);
            field_spec += ":" + modulus_csv;
        }
        asgenus::RunOptions opts;
        opts.with_zeta = with_zeta;
        opts.budget = budget;
        opts.seed = seed;
        asgenus::Report rep = asgenus::run(field_spec, d_expr, opts);
        std::cout << (as_json && !as_text ? asgenus::render_json(rep) : asgenus::render_text(rep));
        return 0;
    } catch (const asgenus::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const asgenus::InvalidFieldError& e) {
        std::cerr << "field error: " << e.what() << "\n";
        return 2;
    } catch (const asgenus::DivisionByZeroError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const asgenus::TrivialExtensionError& e) {
        std::cerr << "trivial extension: " << e.what() << "\n";
        return 3;
    } catch (const asgenus::NonGeometricError& e) {
        std::cerr << "non-geometric: " << e.what() << "\n";
        return 4;
    } catch (const asgenus::BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
