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
#include <string_view>
#include <vector>

namespace qrloop {

enum class AtomKind { point, circle, sphere, a_cell, b_cell };

/**
 * @brief An opaque p-local building block: a point, the circle, a sphere, or a
 * few-cell complex A(...) / sphere bundle B(...) described by its cells.
 *
 * Atoms are not validated on construction; validate() checks them against a prime.
 * Even-dimensional spheres are representable so that recipe text like ΩS^{2n}
 * can be parsed before normalization splits it.
 */
class Atom {
public:
    static Atom point();
    static Atom circle();
    static Atom sphere(int dim);
    static Atom a_cell(std::vector<int> cells);
    static Atom b_cell(std::vector<int> cells);

    AtomKind kind() const noexcept { return kind_; }
    const std::vector<int> &cells() const noexcept { return cells_; }
    int bottom() const noexcept { return cells_.empty() ? 0 : cells_.front(); }
    int top() const noexcept { return cells_.empty() ? 0 : cells_.back(); }
    bool is_complex() const noexcept { return kind_ == AtomKind::a_cell || kind_ == AtomKind::b_cell; }

    // Throws Errc::validation naming the atom.
    void validate(int p) const;

    Atom as_b() const;
    Atom as_a() const;

    friend bool operator==(const Atom &, const Atom &) = default;

private:
    Atom(AtomKind kind, std::vector<int> cells) : kind_(kind), cells_(std::move(cells)) {}

    AtomKind kind_;
    std::vector<int> cells_;
};

struct Factor {
    Atom atom;
    bool looped = false;

    friend bool operator==(const Factor &, const Factor &) = default;
};

// Sort key of the canonical form: bottom cell, atom kind, looped flag, then cells.
bool canonical_less(const Factor &a, const Factor &b);

class SpaceExpr {
public:
    SpaceExpr() = default;
    explicit SpaceExpr(int prime, std::vector<Factor> factors = {});

    static SpaceExpr point(int prime) { return SpaceExpr(prime); }
    static SpaceExpr of(int prime, const Atom &atom, bool looped = false);

    int prime() const noexcept { return prime_; }
    const std::vector<Factor> &factors() const noexcept { return factors_; }
    bool is_point() const noexcept { return factors_.empty(); }

    friend bool operator==(const SpaceExpr &, const SpaceExpr &) = default;

private:
    int prime_ = 0;
    std::vector<Factor> factors_;
};

struct TypeList {
    std::vector<int> degrees; // sorted ascending, with multiplicity

    friend bool operator==(const TypeList &, const TypeList &) = default;
};

SpaceExpr normalize(const SpaceExpr &expr);
SpaceExpr product(const SpaceExpr &a, const SpaceExpr &b);
SpaceExpr loop(const SpaceExpr &expr);
Atom skeleton(const Atom &atom);
TypeList rational_type(const SpaceExpr &expr);

// Degrees k with π_k(X)⊗Q nonzero, with multiplicity, sorted.
std::vector<int> rational_degrees(const SpaceExpr &expr);

enum class Style {
    plain,    // S^3 x ΩS^11
    markdown, // S^3 × ΩS^11
    ascii,    // S^3 x OmegaS^11
};

std::string render(const Atom &atom, Style style = Style::plain);
std::string render(const SpaceExpr &expr, Style style = Style::plain);

nlohmann::json to_json(const SpaceExpr &expr);
SpaceExpr space_from_json(const nlohmann::json &j);

// Accepts "S^3 x ΩS^11", "S^{3} × OmegaB(15,23)", "*" (point); result is normalized.
SpaceExpr parse_space(std::string_view text, int prime);
Atom parse_atom(std::string_view text);

} // namespace qrloop
