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

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "projconn/report.hpp"

namespace projconn {

namespace {

using json = nlohmann::ordered_json;

json summary(const std::vector<const VerificationReport*>& reports) {
    std::size_t total = 0, pass = 0, fail = 0, disc = 0;
    for (const auto* r : reports) {
        total += r->checks.size();
        pass += r->count(CheckStatus::Pass);
        fail += r->count(CheckStatus::Fail);
        disc += r->count(CheckStatus::Discrepancy);
    }
    return json{{"checks", total}, {"pass", pass}, {"fail", fail}, {"discrepancy", disc}};
}

std::string colored(std::string_view word, CheckStatus s, bool color) {
    std::string padded(word);
    padded.resize(12, ' ');
    if (!color) return padded;
    const char* code = s == CheckStatus::Pass ? "32" : s == CheckStatus::Fail ? "31" : "33";
    return "\x1b[" + std::string(code) + "m" + padded + "\x1b[0m";
}

std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

std::string params_text(const Params& p) {
    return "p=" + std::to_string(p.p) + " q=" + std::to_string(p.q) + " r=" + std::to_string(p.r);
}

std::string seconds_text(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3fs", s);
    return buf;
}

void write_body(std::ostringstream& os, const VerificationReport& r, const RenderOptions& o) {
    std::size_t width = 0;
    for (const auto& c : r.checks) width = std::max(width, c.name.size());
    for (const auto& c : r.checks) {
        std::string name = c.name;
        name.resize(width, ' ');
        os << colored(upper(to_string(c.status)), c.status, o.color) << name << "  " << c.witness;
        if (o.timing) os << "  (" << seconds_text(c.seconds) << ")";
        os << '\n';
    }
    for (const auto& cv : r.curvature) {
        os << "curvature " << cv.first << "^" << cv.second << ": flat=" << (cv.flat ? "true" : "false")
           << " trace_image=" << cv.trace_image << " trace_kernel=" << cv.trace_kernel;
        if (cv.kernel_annihilated) os << " kernel_annihilated=" << (*cv.kernel_annihilated ? "true" : "false");
        os << '\n';
    }
}

}  // namespace

json to_json(const VerificationReport& r, const RenderOptions& o) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json j{{"name", c.name}, {"status", to_string(c.status)}, {"witness", c.witness}};
        if (o.timing) j["seconds"] = c.seconds;
        checks.push_back(std::move(j));
    }
    json curvature = json::array();
    for (const auto& cv : r.curvature) {
        curvature.push_back(json{{"pair", {cv.first, cv.second}},
                                 {"commutator", cv.commutator},
                                 {"trace_image", cv.trace_image},
                                 {"trace_kernel", cv.trace_kernel},
                                 {"flat", cv.flat},
                                 {"kernel_annihilated", cv.kernel_annihilated ? json(*cv.kernel_annihilated) : json()}});
    }
    return json{{"example", r.example},
                {"parameters", {{"p", r.params.p}, {"q", r.params.q}, {"r", r.params.r}}},
                {"module", r.module},
                {"passed", r.passed()},
                {"checks", std::move(checks)},
                {"curvature", std::move(curvature)},
                {"summary", summary({&r})}};
}

json to_json(const SweepReport& s, const RenderOptions& o) {
    json reports = json::array();
    std::vector<const VerificationReport*> ptrs;
    std::size_t passed = 0;
    for (const auto& r : s.reports) {
        reports.push_back(to_json(r, o));
        ptrs.push_back(&r);
        passed += r.passed();
    }
    json sum = summary(ptrs);
    json out{{"example", s.example}, {"max", s.max}, {"passed", s.passed()}, {"reports", std::move(reports)}};
    out["summary"] = json{{"triples", s.reports.size()}, {"triples_passed", passed}};
    out["summary"].update(sum);
    return out;
}

std::string render_text(const VerificationReport& r, const RenderOptions& o) {
    std::ostringstream os;
    os << "example " << r.example << "  " << params_text(r.params) << "\n";
    os << "module  " << r.module << "\n";
    write_body(os, r, o);
    os << "summary: " << r.checks.size() << " checks, " << r.count(CheckStatus::Pass) << " pass, "
       << r.count(CheckStatus::Fail) << " fail, " << r.count(CheckStatus::Discrepancy) << " discrepancy\n";
    return os.str();
}

std::string render_text(const SweepReport& s, const RenderOptions& o) {
    std::ostringstream os;
    std::size_t checks = 0, fail = 0, disc = 0, passed = 0;
    for (const auto& r : s.reports) {
        CheckStatus st = r.passed() ? CheckStatus::Pass : CheckStatus::Fail;
        os << colored(upper(to_string(st)), st, o.color) << params_text(r.params) << "  " << r.checks.size()
           << " checks, " << r.count(CheckStatus::Fail) << " fail, " << r.count(CheckStatus::Discrepancy)
           << " discrepancy\n";
        for (const auto& c : r.checks)
            if (c.status == CheckStatus::Fail) os << "    " << c.name << "  " << c.witness << "\n";
        checks += r.checks.size();
        fail += r.count(CheckStatus::Fail);
        disc += r.count(CheckStatus::Discrepancy);
        passed += r.passed();
    }
    os << "summary: " << s.example << " " << s.reports.size() << " triples, " << passed << " passed; " << checks
       << " checks, " << fail << " fail, " << disc << " discrepancy\n";
    return os.str();
}

}  // namespace projconn
