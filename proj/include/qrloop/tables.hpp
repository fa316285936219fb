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

#include <json.hpp>

#include <string>

namespace qrloop {

struct SweepOptions {
    int max_n = 6;
    int max_prime = 13;
};

// One row per exceptional case with its printed prime bands, joined by <br>.
std::string exceptional_table_markdown();
nlohmann::json exceptional_table_json();

// Every classical case for n <= max_n, all valid m and primes 5 <= p <= max_prime.
std::string classical_table_markdown(const SweepOptions &opts = {});
nlohmann::json classical_table_json(const SweepOptions &opts = {});

} // namespace qrloop
