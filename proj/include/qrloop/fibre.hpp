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

#include <qrloop/catalog.hpp>
#include <qrloop/space.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qrloop {

enum class QClass {
    v1, // equivalence
    v2, // bottom cell inclusion
    v3, // pinch to the top cell
    v4, // pinch then include
    v5,
    v6,
    v7,
    v8,
    null_map,
    domain_empty,
    codomain_empty,
    undetermined,
};

std::string_view to_string(QClass c) noexcept;

struct SlotAssignment {
    int slot = 0;
    std::vector<Atom> domain;        // A-skeleta from the H side, at most two
    std::optional<Atom> codomain;    // A-skeleton from the G side
};

QClass classify_q(const SlotAssignment &s, const std::vector<int> &d, int p);

// Degrees cancelled by the map: both cells of an equivalence of A atoms, the shared degree otherwise.
std::vector<int> consumed_degrees(QClass c, const SlotAssignment &s);

// Throws Errc::undetermined for QClass::undetermined.
SpaceExpr fibre(QClass c, const SlotAssignment &s, int p);

struct SlotReport {
    SlotAssignment assignment;
    QClass cls = QClass::undetermined;
    SpaceExpr fibre;
};

struct LoopResult {
    std::string type;
    CaseParams params;
    int prime = 0;
    std::string space;
    Recipe recipe = Recipe::slot_match;
    SpaceExpr expr;
    std::vector<SlotReport> slots;
    std::vector<int> consumed;       // with multiplicity, sorted
    std::vector<std::string> citations;

    // Rational bookkeeping over the part of H and G the recipe matched.
    std::vector<int> h_type;
    std::vector<int> g_type;
    SpaceExpr matched;
};

/**
 * @brief Computes Ω(G/H) for a catalogued case.
 *
 * Throws Errc::undetermined when a slot cannot be classified or the case is a
 * known obstruction, and Errc::not_quasi_regular when a group cannot be
 * decomposed at the prime.
 */
LoopResult loop_decomposition(const CaseRecord &c);
LoopResult loop_decomposition(std::string_view type, const CaseParams &params, int p);

// Degrees of π_*(G/H) ⊗ Q, with multiplicity.
std::vector<int> rational_homotopy_degrees(const LoopResult &r);

struct BalanceReport {
    bool ok = false;
    std::string diff; // empty when ok
};

BalanceReport verify_rational_balance(const LoopResult &r);
BalanceReport verify_rational_balance(const CaseRecord &c);

} // namespace qrloop
