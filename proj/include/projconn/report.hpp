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

#include <string>

#include <json.hpp>

#include "projconn/verify.hpp"

namespace projconn {

struct RenderOptions {
    bool timing = false;  // include per-check seconds (breaks byte-determinism)
    bool color = false;   // ANSI status colors in text output
};

nlohmann::ordered_json to_json(const VerificationReport& report, const RenderOptions& options = {});
nlohmann::ordered_json to_json(const SweepReport& report, const RenderOptions& options = {});

std::string render_text(const VerificationReport& report, const RenderOptions& options = {});
std::string render_text(const SweepReport& report, const RenderOptions& options = {});

}  // namespace projconn
