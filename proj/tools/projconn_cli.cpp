/*
   Copyright 2026 The projconn Authors

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

#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "projconn/errors.hpp"
#include "projconn/report.hpp"

namespace {

using namespace projconn;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

bool color_enabled() {
    const char* no_color = std::getenv("NO_COLOR");
    if (no_color != nullptr && *no_color != '\0') return false;
    return isatty(STDOUT_FILENO) != 0;
}

std::vector<std::string> split_names(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(item);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Connections and curvature on projective modules over hypersurface rings"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "projconn 1.0.0");

    std::string example;
    Params params;
    int max = 0;
    bool as_json = false;
    bool timing = false;
    unsigned parallel = 1;

    auto* verify_cmd = app.add_subcommand("verify", "Run the full check list for one example instance");
    verify_cmd->add_option("example", example, "ellipsoid | sphere")->required()->check(CLI::IsMember(example_names()));
    verify_cmd->add_option("--p", params.p, "First exponent")->required();
    verify_cmd->add_option("--q", params.q, "Second exponent")->required();
    verify_cmd->add_option("--r", params.r, "Third exponent")->required();

    auto* sweep_cmd = app.add_subcommand("sweep", "Verify every (p,q,r) up to --max");
    sweep_cmd->add_option("example", example, "ellipsoid | sphere")->required()->check(CLI::IsMember(example_names()));
    sweep_cmd->add_option("--max", max, "Largest exponent")->required();

    for (auto* cmd : {verify_cmd, sweep_cmd}) {
        cmd->add_flag("--json", as_json, "Emit a JSON report");
        cmd->add_option("--parallel", parallel, "Worker threads")->check(CLI::Range(1u, 256u));
        cmd->add_flag("--timing", timing, "Include per-check timings");
    }

    std::string expression, modulus, vars = "x,y,z";
    auto* eval_cmd = app.add_subcommand("eval", "Print the normal form of an expression modulo a hypersurface");
    eval_cmd->add_option("expression", expression, "Polynomial expression")->required();
    eval_cmd->add_option("--mod,modulus", modulus, "Defining polynomial f")->required();
    eval_cmd->add_option("--vars", vars, "Comma-separated variable names, highest first");

    bool list = false;
    std::string list_example;
    auto* report_cmd = app.add_subcommand("report", "Describe the verification suite");
    report_cmd->add_flag("--list-checks", list, "List every check name")->required();
    report_cmd->add_option("--example", list_example, "Restrict to one example")
        ->check(CLI::IsMember(example_names()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    RenderOptions options{timing, color_enabled()};
    try {
        if (*verify_cmd) {
            VerificationReport report = verify(example, params, parallel);
            if (as_json)
                std::cout << to_json(report, options).dump(2) << '\n';
            else
                std::cout << render_text(report, options);
            return report.passed() ? kOk : kFail;
        }
        if (*sweep_cmd) {
            SweepReport report = sweep(example, max, parallel);
            if (as_json)
                std::cout << to_json(report, options).dump(2) << '\n';
            else
                std::cout << render_text(report, options);
            return report.passed() ? kOk : kFail;
        }
        if (*eval_cmd) {
            QuotientRing ring = QuotientRing::from_text(modulus, split_names(vars));
            std::cout << ring.element(expression).to_string() << '\n';
            return kOk;
        }
        if (*report_cmd) {
            for (const auto& name : example_names()) {
                if (!list_example.empty() && name != list_example) continue;
                for (const auto& check : list_checks(name)) std::cout << check << '\n';
            }
            return kOk;
        }
    } catch (const InvalidParameters& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}
