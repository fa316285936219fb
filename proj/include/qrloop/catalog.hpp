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

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qrloop {

enum class Family { su, u, sp, so, spin, ss, psp, su_mod_center, g2, f4, e6, e7, e8, torus, product };

struct GroupId {
    Family family = Family::su;
    int rank = 0;                  // n in SU(n), Sp(n), SO(n), ...; unused for exceptional groups
    std::vector<GroupId> factors;  // Family::product only
    bool central = false;          // product written K·L rather than K x L

    friend bool operator==(const GroupId &, const GroupId &) = default;
};

/**
 * @brief Parses "SU(8)", "Spin(9)", "SU(8)/{±I}", "SU(2)·Sp(3)", "T1·Spin(10)",
 * "SO(4) x SO(5)" and the exceptional names G2, F4, E6, E7, E8.
 *
 * Arguments in parentheses may be integer expressions over n and m when
 * params are given, e.g. "SO(2*(n-m)+1)".
 */
GroupId parse_group(std::string_view text);

struct CaseParams {
    std::optional<int> n;
    std::optional<int> m;

    friend bool operator==(const CaseParams &, const CaseParams &) = default;
};

GroupId parse_group(std::string_view text, const CaseParams &params);
std::string to_string(const GroupId &g);

// Generator degrees of the group, independent of any prime.
TypeList reference_type(const GroupId &g);

struct Decomposition {
    SpaceExpr expr;
    std::vector<std::string> citations;
    bool extension = false; // not quasi-p-regular; multi-cell data for the one prime listed
};

Decomposition decompose(const GroupId &g, int p);
SpaceExpr qr_decomposition(const GroupId &g, int p);

int slot_index(const Atom &atom, int p);

enum class Recipe {
    slot_match,
    slot_match_with_s1,
    harris_complement,
    product_split,
    reduction,
    assembly,
    extension_p7,
    undetermined_p7,
};

std::string_view to_string(Recipe r) noexcept;

struct ExtensionMap {
    std::vector<Atom> domain;
    Atom codomain = Atom::point();
};

struct CaseRecord {
    std::string type;         // FII, CII, BDI2, ...
    std::string label;        // Cartan label as printed, e.g. "BDI"
    std::string space;        // instantiated G/H, e.g. "Sp(5)/Sp(2)·Sp(3)"
    CaseParams params;
    int prime = 0;
    std::string prime_condition; // as printed in the tables
    GroupId g;
    GroupId h;
    std::vector<int> d;       // degrees where Qφ* is nonzero, ascending
    std::string d_citation;
    Recipe recipe = Recipe::slot_match;
    std::optional<GroupId> split;   // PRODUCT_SPLIT / REDUCTION: factor of H split off unlooped
    std::optional<GroupId> core_g;  // slot-matched core
    std::optional<GroupId> core_h;
    std::optional<std::string> reduce_to_type;
    CaseParams reduce_to_params;
    std::vector<std::string> assembly;
    std::vector<Atom> pinched;
    std::vector<ExtensionMap> maps;
    std::string obstruction;
    std::vector<std::string> citations;
};

struct CaseInfo {
    std::string type;
    std::string label;
    std::string space_template;   // e.g. "Sp(n)/Sp(m)·Sp(n-m)"
    std::vector<std::string> params;
    std::string side_condition;
    int n_min = 0;
    std::string prime_condition;
    std::vector<std::string> bands; // prime bands printed in the table, exceptional cases only
};

class Catalog {
public:
    static const Catalog &instance();

    // Record whose prime condition holds at p (main entry or the p=7 extension entry).
    CaseRecord case_record(std::string_view type, const CaseParams &params, int p) const;

    std::vector<CaseInfo> exceptional_cases() const;
    std::vector<CaseInfo> classical_cases() const;
    std::optional<CaseInfo> info(std::string_view type) const;

    bool params_valid(const CaseInfo &info, const CaseParams &params) const;
    bool prime_valid(const CaseInfo &info, const CaseParams &params, int p) const;

    Decomposition group_decomposition(const GroupId &g, int p) const;

    Catalog(const Catalog &) = delete;
    Catalog &operator=(const Catalog &) = delete;
    ~Catalog();

private:
    Catalog();
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Smallest prime >= 5 satisfying a band condition such as "p>=13".
int least_prime_in_band(std::string_view band);
std::string render_band(std::string_view band);

} // namespace qrloop
