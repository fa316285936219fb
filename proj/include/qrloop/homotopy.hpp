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

#include <qrloop/space.hpp>

#include <string_view>

namespace qrloop {

enum class GroupDesc { zero, z_mod_p, z_mod_p2, z_local };

// "0", "Z/p", "Z/p^2", "Z_(p)"
std::string_view to_string(GroupDesc g) noexcept;

struct RangeQuery {
    int m = 2; // bottom cell 2m-1
    int t = 1; // offset: the group is π_{2m-1+t}
    int p = 5;
};

// Upper end of the offset window in which the sphere and B tables are valid.
constexpr int toda_window(int p) noexcept { return 2 * p * (p - 1) - 3; }

GroupDesc pi_sphere(const RangeQuery &q);
GroupDesc pi_B(const RangeQuery &q);

/**
 * @brief Decides whether every map from source into target is null, for the
 * atoms sitting in different slots m != n.
 *
 * The answer is computed from pi_sphere / pi_B on the cells of the source.
 * Throws Errc::not_applicable when m == n and Errc::excluded_case for
 * A(2p-1,4p-3) into S^3.
 */
bool maps_vanish(const Atom &source, const Atom &target, int p);

} // namespace qrloop
