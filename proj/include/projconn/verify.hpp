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

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "projconn/catalog.hpp"

namespace projconn {

enum class CheckStatus { Pass, Fail, Discrepancy };

std::string_view to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Fail;
    std::string witness;
    double seconds = 0.0;
};

struct CurvatureSummary {
    std::string first;
    std::string second;
    std::vector<std::vector<std::string>> commutator;  // entry text by row
    std::string trace_image;
    std::string trace_kernel;
    bool flat = false;
    std::optional<bool> kernel_annihilated;
};

struct VerificationReport {
    std::string example;
    Params params;
    std::string module;  // which presentation the curvature entries refer to
    std::vector<CheckResult> checks;
    std::vector<CurvatureSummary> curvature;

    std::size_t count(CheckStatus s) const;
    bool passed() const { return count(CheckStatus::Fail) == 0; }
};

struct SweepReport {
    std::string example;
    int max = 0;
    std::vector<VerificationReport> reports;

    bool passed() const;
};

const std::vector<std::string>& example_names();

/// Every check name `verify` can emit for an example, in emission order.
std::vector<std::string> list_checks(std::string_view example);

/// Throws InvalidParameters / UnknownCheck for bad input; per-check failures
/// (including exceptions raised inside a check) are recorded, not thrown.
VerificationReport verify(std::string_view example, const Params& params, unsigned parallelism = 1);

/// All (p, q, r) in [lo, max]^3, in lexicographic order; lo is the family minimum.
SweepReport sweep(std::string_view example, int max, unsigned parallelism = 1);

/// Runs tasks 0..n-1 on up to `parallelism` threads. Exceptions propagate
/// after all workers finish (the first one, by index).
void run_indexed(std::size_t n, unsigned parallelism, const std::function<void(std::size_t)>& task);

}  // namespace projconn
