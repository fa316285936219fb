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

#include <qrloop/error.hpp>

namespace qrloop {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::validation: return "validation";
    case Errc::contract: return "contract";
    case Errc::out_of_range: return "out-of-range";
    case Errc::not_applicable: return "not-applicable";
    case Errc::excluded_case: return "excluded-case";
    case Errc::not_quasi_regular: return "not-quasi-regular";
    case Errc::parameter: return "parameter";
    case Errc::prime: return "prime";
    case Errc::undetermined: return "undetermined";
    case Errc::unsupported: return "unsupported";
    case Errc::configuration: return "configuration";
    case Errc::parse: return "parse";
    case Errc::slot: return "slot";
    case Errc::dimension_limit: return "dimension-limit";
    }
    return "unknown";
}

bool is_prime(int n) noexcept {
    if (n < 2)
        return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

void require_prime(int p) {
    if (!is_prime(p) || p < 5)
        fail(Errc::prime, "prime must be a prime p >= 5, got " + std::to_string(p));
}

} // namespace qrloop
