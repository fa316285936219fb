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

// Test-side oracles: the printed table rows evaluated directly, independent of
// the catalog data and the fibre engine.

#pragma once

#include <qrloop/space.hpp>

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

namespace oracle {

using qrloop::Atom;
using qrloop::Factor;
using qrloop::SpaceExpr;

inline Factor sphere(int d, bool looped) {
    return Factor{d == 1 ? Atom::circle() : Atom::sphere(d), looped};
}

inline int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

struct Builder {
    int p;
    std::vector<Factor> f;

    void s(int d, bool looped = false) { f.push_back(sphere(d, looped)); }
    void os(int d) { s(d, true); }
    void ob(int a, int b) { f.push_back({Atom::b_cell({a, b}), true}); }
    SpaceExpr done() const { return qrloop::normalize(SpaceExpr(p, f)); }
};

struct ClassicalRow {
    std::string type;
    bool has_m;
    int side; // 0 none, 1: 2m <= n, 2: 2m <= n+1
    int n_min;
    std::function<bool(int n, int p)> prime_ok;
};

inline const std::vector<ClassicalRow> &classical_rows() {
    static const std::vector<ClassicalRow> rows{
        {"AI1", false, 0, 1, [](int n, int p) { return p > n; }},
        {"AI2", false, 0, 2, [](int n, int p) { return p == 2 * n + 1; }},
        {"AI3", false, 0, 2, [](int n, int p) { return p > 2 * n; }},
        {"AII", false, 0, 2, [](int n, int p) { return p > n; }},
        {"AIII", true, 1, 2, [](int n, int p) { return 2 * p > n; }},
        {"BDI1", true, 1, 2, [](int n, int p) { return p > n; }},
        {"BDI2", true, 2, 2, [](int n, int p) { return p > n; }},
        {"BDI3", true, 1, 2, [](int n, int p) { return p > n; }},
        {"BDI4", true, 2, 2, [](int n, int p) { return p > n - 1; }},
        {"CI", false, 0, 1, [](int n, int p) { return p > n; }},
        {"CII", true, 1, 2, [](int n, int p) { return p > n; }},
        {"DIII", false, 0, 2, [](int n, int p) { return p > n - 1; }},
    };
    return rows;
}

// The printed row, with the AI lower limit min(1, .) read as max(1, .) and
// ΩS^{2n} split by normalize.
inline SpaceExpr classical_printed(const std::string &type, int n, int m, int p) {
    Builder b{p, {}};
    const int h = (p - 1) / 2;
    if (type == "AI1") {
        for (int i = 1; i <= n - h; ++i)
            b.ob(4 * i + 1, 4 * i + 2 * p - 1);
        for (int j = std::max(1, n - (p - 3) / 2); j <= std::min(n, h); ++j)
            b.os(4 * j + 1);
    } else if (type == "AI2") {
        for (int i = 1; i <= n - 1; ++i)
            b.ob(4 * i + 1, 4 * i + 2 * p - 1);
        b.os(8 * n + 1);
        b.os(8 * n + 3);
    } else if (type == "AI3") {
        b.os(2 * n);
        for (int i = 1; i <= n - (p + 1) / 2; ++i)
            b.ob(4 * i + 1, 4 * i + 2 * p - 1);
        for (int j = std::max(1, n - h); j <= std::min(n - 1, h); ++j)
            b.os(4 * j + 1);
    } else if (type == "AII") {
        for (int i = 1; i <= n - (p + 1) / 2; ++i)
            b.ob(4 * i + 1, 4 * i + 2 * p - 1);
        for (int j = std::max(1, n - h); j <= std::min(n - 1, h); ++j)
            b.os(4 * j + 1);
    } else if (type == "AIII") {
        for (int j = 1; j <= m; ++j)
            b.s(2 * j - 1);
        for (int j = n - m + 1; j <= n; ++j)
            b.os(2 * j - 1);
    } else if (type == "BDI1" || type == "BDI2" || type == "BDI3" || type == "BDI4") {
        const int top = type == "BDI3" ? m : m - 1;
        for (int j = 1; j <= top; ++j)
            b.s(4 * j - 1);
        if (type == "BDI1" || type == "BDI4")
            b.s(2 * m - 1);
        if (type == "BDI2" || type == "BDI4")
            b.s(2 * (n - m) + 1);
        if (type == "BDI3" || type == "BDI4")
            b.os(2 * n + 1);
        for (int j = n - m + 1; j <= n; ++j)
            b.os(4 * j - 1);
    } else if (type == "CI") {
        for (int j = 0; j <= floor_div(n - 1, 2); ++j)
            b.s(4 * j + 1);
        for (int j = floor_div(n + 2, 2); j <= n; ++j)
            b.os(4 * j - 1);
    } else if (type == "CII") {
        for (int j = 1; j <= m; ++j)
            b.s(4 * j - 1);
        for (int j = n - m + 1; j <= n; ++j)
            b.os(4 * j - 1);
    } else if (type == "DIII") {
        for (int j = 0; j <= floor_div(n - 2, 2); ++j)
            b.s(4 * j + 1);
        for (int j = floor_div(n + 1, 2); j <= n - 1; ++j)
            b.os(4 * j - 1);
    }
    return b.done();
}

struct PrintedBand {
    const char *type;
    int prime;       // listed prime, 0 for a generic band
    int from;        // least prime of a generic band
    const char *expr;
    int exp_k;
    bool exact;
};

// The exceptional table as printed; the EII "Ω^{15}" entry is read as ΩS^15.
inline const std::vector<PrintedBand> &exceptional_printed() {
    static const std::vector<PrintedBand> rows{
        {"G", 0, 5, "S^3 x ΩS^11", 5, true},
        {"FI", 5, 0, "S^3 x S^7 x ΩB(15,23)", 12, false},
        {"FI", 0, 7, "S^3 x S^7 x ΩS^15 x ΩS^23", 11, true},
        {"FII", 0, 5, "S^7 x ΩS^23", 11, true},
        {"EI", 5, 0, "S^7 x ΩB(9,17) x ΩS^23", 11, true},
        {"EI", 0, 7, "S^7 x ΩS^9 x ΩS^17 x ΩS^23", 11, true},
        {"EII", 5, 0, "S^3 x S^5 x S^7 x ΩS^17 x ΩB(15,23)", 12, false},
        {"EII", 0, 7, "S^3 x S^5 x S^7 x ΩS^15 x ΩS^17 x ΩS^23", 11, true},
        {"EIII", 0, 5, "S^1 x S^7 x ΩS^17 x ΩS^23", 11, true},
        {"EIV", 5, 0, "ΩB(9,17)", 9, false},
        {"EIV", 0, 7, "ΩS^9 x ΩS^17", 8, true},
        {"EV", 0, 11, "S^5 x S^7 x S^9 x S^13 x ΩS^19 x ΩS^23 x ΩS^27 x ΩS^35", 17, true},
        {"EVI", 0, 11, "S^3 x S^7 x S^11 x ΩS^23 x ΩS^27 x ΩS^35", 17, true},
        {"EVII", 0, 11, "S^1 x S^9 x S^17 x ΩS^19 x ΩS^27 x ΩS^35", 17, true},
        {"EVIII", 11, 0, "S^7 x S^11 x S^15 x S^19 x ΩS^35 x ΩB(39,59) x ΩS^47", 30, false},
        {"EVIII", 13, 0, "S^7 x S^11 x S^15 x S^19 x ΩB(35,59) x ΩS^39 x ΩS^47", 30, false},
        {"EVIII", 0, 17, "S^7 x S^11 x S^15 x S^19 x ΩS^35 x ΩS^39 x ΩS^47 x ΩS^59", 29, true},
        {"EIX", 11, 0, "S^3 x S^11 x S^19 x ΩB(39,59) x ΩS^47", 30, false},
        {"EIX", 0, 13, "S^3 x S^11 x S^19 x ΩS^39 x ΩS^47 x ΩS^59", 29, true},
    };
    return rows;
}

struct ExtensionResult {
    const char *type;
    const char *expr;
};

// The three E7 decompositions at p=7, factor order as displayed.
inline const std::vector<ExtensionResult> &extension_printed() {
    static const std::vector<ExtensionResult> rows{
        {"EV", "S^5 x S^7 x S^9 x S^13 x ΩS^27 x ΩB(23,35) x ΩS^19"},
        {"EVI", "S^3 x ΩS^27 x S^11 x ΩB(23,35) x S^7"},
        {"EVII", "S^1 x ΩS^27 x ΩS^35 x S^9 x S^17 x ΩS^19"},
    };
    return rows;
}

// Toda-range tables by direct enumeration of the printed families.
// 0 zero, 1 Z/p, 2 Z/p^2, 3 Z_(p)
inline int sphere_group(int m, int t, int p) {
    for (int i = 1; i <= p - 1; ++i)
        if (t == 2 * i * (p - 1) - 1)
            return 1;
    for (int i = m; i <= p - 1; ++i)
        if (t == 2 * i * (p - 1) - 2)
            return 1;
    return 0;
}

inline int b_group(int m, int t, int p) {
    for (int i = 2; i <= p - 1; ++i)
        if (t == 2 * i * (p - 1) - 1)
            return 2;
    if (t == 2 * p - 2)
        return 3;
    if (m > 2)
        for (int i = m; i <= p - 1; ++i)
            if (t == 2 * i * (p - 1) - 2)
                return 1;
    return 0;
}

// π_k of a sphere or two-cell B with bottom cell 2m-1; t <= 0 handled by connectivity.
inline int group_at(bool is_b, int bottom, int k, int p) {
    const int t = k - bottom;
    if (t < 0)
        return 0;
    if (t == 0)
        return 3;
    const int m = (bottom + 1) / 2;
    return is_b ? b_group(m, t, p) : sphere_group(m, t, p);
}

} // namespace oracle
