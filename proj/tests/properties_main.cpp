/*
 * Copyright 2026 The qrloop Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "property_checks.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char **argv) {
    const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20260417;
    long failures = 0;
    for (const auto &r : props::run_all(seed)) {
        std::printf("%-60s %6ld cases %4ld failures\n", r.suite.c_str(), r.cases, r.failures);
        for (const auto &m : r.messages)
            std::printf("  %s\n", m.c_str());
        failures += r.failures;
    }
    return failures == 0 ? 0 : 1;
}
