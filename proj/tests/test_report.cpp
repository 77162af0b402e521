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

#include <doctest.h>

#include "projconn/report.hpp"

using namespace projconn;

TEST_SUITE("cli.report") {
    TEST_CASE("verification JSON layout") {
        auto j = to_json(verify("sphere", {1, 1, 1}));
        std::vector<std::string> keys;
        for (const auto& [k, _] : j.items()) keys.push_back(k);
        CHECK(keys == std::vector<std::string>{"example", "parameters", "module", "passed", "checks", "curvature",
                                               "summary"});
        CHECK(j["parameters"]["p"] == 1);
        CHECK(j["checks"][0].contains("seconds") == false);
        CHECK(j["curvature"][0]["pair"] == nlohmann::ordered_json::array({"D1", "D2"}));
        CHECK(j["curvature"][0]["commutator"].size() == 2);
        CHECK(j["curvature"][0]["commutator"][0][0] == "1/2*i*y^2+1/2*i*z^2-1/2*i");
        CHECK(j["curvature"][0]["kernel_annihilated"].is_null());
        CHECK(j["summary"]["discrepancy"] == 6);
        CHECK(j["summary"]["fail"] == 0);

        auto timed = to_json(verify("sphere", {1, 1, 1}), RenderOptions{true, false});
        CHECK(timed["checks"][0].contains("seconds"));
    }

    TEST_CASE("sweep JSON layout") {
        auto j = to_json(sweep("ellipsoid", 2));
        CHECK(j["summary"]["triples"] == 1);
        CHECK(j["summary"]["triples_passed"] == 1);
        CHECK(j["reports"].size() == 1);
        CHECK(j["passed"] == true);
    }

    TEST_CASE("text rendering") {
        auto r = verify("sphere", {1, 1, 1});
        std::string plain = render_text(r);
        CHECK(plain.find("\x1b[") == std::string::npos);
        CHECK(plain.find("DISCREPANCY sphere.D3(M).display") != std::string::npos);
        CHECK(plain.find("summary: 31 checks, 25 pass, 0 fail, 6 discrepancy") != std::string::npos);
        std::string colored = render_text(r, RenderOptions{false, true});
        CHECK(colored.find("\x1b[32m") != std::string::npos);
        CHECK(colored.find("\x1b[33m") != std::string::npos);
        std::string sw = render_text(sweep("sphere", 1));
        CHECK(sw.find("summary: sphere 1 triples, 1 passed") != std::string::npos);
    }
}

TEST_SUITE("cli.report") {
    TEST_CASE("a failing check flips passed; discrepancies do not") {
        VerificationReport r{"ellipsoid", {2, 2, 2}, "m", {}, {}};
        r.checks.push_back({"ellipsoid.a", CheckStatus::Pass, "0", 0.0});
        r.checks.push_back({"ellipsoid.b", CheckStatus::Discrepancy, "sign", 0.0});
        CHECK(r.passed());
        CHECK(to_json(r)["passed"] == true);

        r.checks.push_back({"ellipsoid.c", CheckStatus::Fail, "x", 0.0});
        CHECK_FALSE(r.passed());
        auto j = to_json(r);
        CHECK(j["passed"] == false);
        CHECK(j["summary"]["fail"] == 1);
        CHECK(j["summary"]["discrepancy"] == 1);

        SweepReport s{"ellipsoid", 2, {r}};
        CHECK_FALSE(s.passed());
        CHECK(render_text(r, RenderOptions{false, false}).find("1 fail") != std::string::npos);
    }
}
