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

// End-to-end checks of the installed binary: exit codes and flag handling.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "helpers.hpp"

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    std::string path = "cli_test_out_" + std::to_string(counter++) + ".txt";
    std::string cmd = std::string("\"") + ASGENUS_CLI_PATH + "\" " + args + " > " + path + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::remove(path.c_str());
    return {WEXITSTATUS(rc), ss.str()};
}

}  // namespace

TEST_CASE("the CLI maps outcomes to the documented exit codes") {
    CHECK(run_cli("--field 2 --d \"1/(t^2+t)\"").exit_code == 0);
    CHECK(run_cli("--field 2 --d \"1/(t+\"").exit_code == 2);
    CHECK(run_cli("--field 6 --d t").exit_code == 2);
    CHECK(run_cli("--field 2 --d \"1/0\"").exit_code == 2);
    CHECK(run_cli("--field 2 --d \"g + t\"").exit_code == 2);
    CHECK(run_cli("--field 2 --d \"t^2 + t\"").exit_code == 3);  // trivial extension
    CHECK(run_cli("--field 4 --d g").exit_code == 4);            // constant-field extension
    CHECK(run_cli("--field 2 --d \"1/t + t\" --zeta --budget 1").exit_code == 5);
    CHECK(run_cli("--field 2").exit_code == 2);  // missing required --d
}

TEST_CASE("the CLI accepts modulus overrides consistently") {
    CliResult ok = run_cli("--field 9 --modulus 2,2,1 --d \"g*t\" --json");
    CHECK(ok.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(ok.out);
    CHECK(j["field"]["modulus"] == nlohmann::json::array({2, 2, 1}));

    CliResult same = run_cli("--field \"9:2,2,1\" --d \"g*t\" --json");
    CHECK(same.exit_code == 0);
    CHECK(same.out == ok.out);

    CHECK(run_cli("--field \"9:2,2,1\" --modulus 2,2,1 --d t").exit_code == 2);  // conflicting overrides
    CHECK(run_cli("--field \"9:2,0,1\" --d t").exit_code == 2);                  // reducible modulus
}

TEST_CASE("JSON and text outputs select correctly and stay stable") {
    CliResult json = run_cli("--field 2 --d \"1/t + t\" --zeta --json");
    REQUIRE(json.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(json.out);
    CHECK(j["schema"] == "as-genus/1");
    CHECK(j["zeta"]["class_number"] == 4);

    CliResult text = run_cli("--field 2 --d \"1/t + t\" --zeta");
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("class number    4") != std::string::npos);
    CHECK(text.out.find("divisibility    2 | 4 : pass") != std::string::npos);

    CliResult seeded = run_cli("--field 2 --d \"1/t + t\" --zeta --json --seed 7");
    CHECK(seeded.exit_code == 0);
    CHECK(seeded.out == json.out);  // seed never changes canonical output
}
