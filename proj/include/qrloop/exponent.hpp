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

#include <qrloop/fibre.hpp>
#include <qrloop/space.hpp>

#include <string>

namespace qrloop {

// p^lo <= exp_p <= p^hi
struct ExponentInterval {
    int lo = 0;
    int hi = 0;

    bool exact() const noexcept { return lo == hi; }
    friend bool operator==(const ExponentInterval &, const ExponentInterval &) = default;
};

ExponentInterval exponent_atom(const Atom &atom, bool looped, int p);
ExponentInterval exponent(const SpaceExpr &expr, int p);

struct ExponentReport {
    ExponentInterval interval;
    bool exact = false;
    int top_degree = 0; // largest rational sphere dimension 2m+1 among the factors
};

ExponentReport exponent_report(const LoopResult &r);
ExponentReport exponent_report(const CaseRecord &c);

// "exp = p^11" or "p^11 ≤ exp ≤ p^12"
std::string render(const ExponentInterval &e);

} // namespace qrloop
