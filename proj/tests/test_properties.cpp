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

#include "support/properties.hpp"

TEST_SUITE("properties") {
    TEST_CASE("exact property suites, 100 cases each") {
        for (const auto& p : projconn::testing::run_property_suites()) {
            INFO(p.name << ": " << p.first_failure);
            CHECK(p.cases == projconn::testing::kCases);
            CHECK(p.failures == 0);
        }
    }
}
