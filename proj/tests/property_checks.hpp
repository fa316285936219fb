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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace props {

struct Report {
    std::string suite;
    long cases = 0;
    long failures = 0;
    std::vector<std::string> messages; // first few failures
};

Report normalize_laws(std::uint64_t seed, int cases);
Report exponent_laws(std::uint64_t seed, int cases);
Report rho_laws(std::uint64_t seed, int cases);
Report ring_laws(std::uint64_t seed, int cases);
Report symmetric_identity();

std::vector<Report> run_all(std::uint64_t seed = 20260417);

} // namespace props
