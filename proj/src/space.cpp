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
#include <qrloop/space.hpp>

#include <algorithm>
#include <charconv>
#include <tuple>

namespace qrloop {

namespace {

int kind_rank(AtomKind k) {
    switch (k) {
    case AtomKind::point: return 0;
    case AtomKind::circle: return 1;
    case AtomKind::sphere: return 2;
    case AtomKind::a_cell: return 3;
    case AtomKind::b_cell: return 4;
    }
    return 5;
}

std::string cell_list(const std::vector<int> &cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(cells[i]);
    }
    return s;
}

} // namespace

Atom Atom::point() { return Atom(AtomKind::point, {}); }
Atom Atom::circle() { return Atom(AtomKind::circle, {1}); }
Atom Atom::sphere(int dim) { return Atom(AtomKind::sphere, {dim}); }
Atom Atom::a_cell(std::vector<int> cells) { return Atom(AtomKind::a_cell, std::move(cells)); }
Atom Atom::b_cell(std::vector<int> cells) { return Atom(AtomKind::b_cell, std::move(cells)); }

Atom Atom::as_b() const { return kind_ == AtomKind::a_cell ? b_cell(cells_) : *this; }
Atom Atom::as_a() const { return kind_ == AtomKind::b_cell ? a_cell(cells_) : *this; }

void Atom::validate(int p) const {
    auto bad = [&](const std::string &why) { fail(Errc::validation, "malformed atom " + render(*this) + ": " + why); };
    switch (kind_) {
    case AtomKind::point:
    case AtomKind::circle:
        return;
    case AtomKind::sphere:
        if (bottom() < 3 || bottom() % 2 == 0)
            bad("sphere dimension must be odd and >= 3");
        return;
    case AtomKind::a_cell:
    case AtomKind::b_cell:
        if (cells_.size() < 2)
            bad("needs at least two cells");
        if (bottom() < 3 || bottom() % 2 == 0)
            bad("bottom cell must be odd and >= 3");
        for (std::size_t i = 1; i < cells_.size(); ++i)
            if (cells_[i] - cells_[i - 1] != 2 * (p - 1))
                bad("cells must differ by 2(p-1) = " + std::to_string(2 * (p - 1)));
        return;
    }
}

bool canonical_less(const Factor &a, const Factor &b) {
    return std::tuple(a.atom.bottom(), kind_rank(a.atom.kind()), a.looped, a.atom.cells()) <
           std::tuple(b.atom.bottom(), kind_rank(b.atom.kind()), b.looped, b.atom.cells());
}

SpaceExpr::SpaceExpr(int prime, std::vector<Factor> factors) : prime_(prime), factors_(std::move(factors)) {}

SpaceExpr SpaceExpr::of(int prime, const Atom &atom, bool looped) {
    return normalize(SpaceExpr(prime, {Factor{atom, looped}}));
}

SpaceExpr normalize(const SpaceExpr &expr) {
    const int p = expr.prime();
    require_prime(p);
    std::vector<Factor> out;
    for (const auto &f : expr.factors()) {
        const Atom &a = f.atom;
        switch (a.kind()) {
        case AtomKind::point:
            break;
        case AtomKind::circle:
            if (!f.looped)
                out.push_back(f);
            break;
        case AtomKind::sphere: {
            const int d = a.bottom();
            if (d == 1) {
                if (!f.looped)
                    out.push_back({Atom::circle(), false});
            } else if (d >= 2 && d % 2 == 0) {
                if (!f.looped)
                    fail(Errc::validation, "malformed atom " + render(a) + ": even sphere must be looped");
                // ΩS^{2n} ≃ S^{2n-1} × ΩS^{4n-1} at odd primes.
                out.push_back({d == 2 ? Atom::circle() : Atom::sphere(d - 1), false});
                out.push_back({Atom::sphere(2 * d - 1), true});
            } else {
                a.validate(p);
                out.push_back(f);
            }
            break;
        }
        case AtomKind::a_cell:
        case AtomKind::b_cell:
            a.validate(p);
            out.push_back(f);
            break;
        }
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return SpaceExpr(p, std::move(out));
}

SpaceExpr product(const SpaceExpr &a, const SpaceExpr &b) {
    if (a.prime() != b.prime())
        fail(Errc::contract, "product of expressions at different primes");
    std::vector<Factor> fs = a.factors();
    fs.insert(fs.end(), b.factors().begin(), b.factors().end());
    return normalize(SpaceExpr(a.prime(), std::move(fs)));
}

SpaceExpr loop(const SpaceExpr &expr) {
    std::vector<Factor> fs;
    for (const auto &f : expr.factors()) {
        if (f.looped)
            fail(Errc::contract, "double looping of " + render(f.atom));
        fs.push_back({f.atom, true});
    }
    return normalize(SpaceExpr(expr.prime(), std::move(fs)));
}

Atom skeleton(const Atom &atom) {
    if (atom.kind() == AtomKind::a_cell)
        fail(Errc::contract, "skeleton expects a B atom, sphere or circle, got " + render(atom));
    return atom.as_a();
}

TypeList rational_type(const SpaceExpr &expr) {
    TypeList t;
    for (const auto &f : expr.factors()) {
        if (f.looped)
            fail(Errc::contract, "rational_type of an expression with looped factor " + render(f.atom));
        t.degrees.insert(t.degrees.end(), f.atom.cells().begin(), f.atom.cells().end());
    }
    std::sort(t.degrees.begin(), t.degrees.end());
    return t;
}

std::vector<int> rational_degrees(const SpaceExpr &expr) {
    std::vector<int> out;
    for (const auto &f : expr.factors()) {
        const Atom &a = f.atom;
        if (a.kind() == AtomKind::point)
            continue;
        if (a.kind() == AtomKind::circle) {
            if (!f.looped)
                out.push_back(1);
            continue;
        }
        if (a.kind() == AtomKind::sphere && a.bottom() % 2 == 0) {
            const int d = a.bottom();
            const int shift = f.looped ? 1 : 0;
            out.push_back(d - shift);
            out.push_back(2 * d - 1 - shift);
            continue;
        }
        for (int c : a.cells())
            out.push_back(f.looped ? c - 1 : c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string render(const Atom &atom, Style) {
    switch (atom.kind()) {
    case AtomKind::point: return "*";
    case AtomKind::circle: return "S^1";
    case AtomKind::sphere: return "S^" + std::to_string(atom.bottom());
    case AtomKind::a_cell: return "A(" + cell_list(atom.cells()) + ")";
    case AtomKind::b_cell: return "B(" + cell_list(atom.cells()) + ")";
    }
    return "?";
}

std::string render(const SpaceExpr &expr, Style style) {
    if (expr.is_point())
        return "*";
    const char *sep = style == Style::markdown ? " × " : " x ";
    const char *omega = style == Style::ascii ? "Omega" : "Ω";
    std::string s;
    for (std::size_t i = 0; i < expr.factors().size(); ++i) {
        const auto &f = expr.factors()[i];
        if (i)
            s += sep;
        if (f.looped)
            s += omega;
        s += render(f.atom, style);
    }
    return s;
}

nlohmann::json to_json(const SpaceExpr &expr) {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto &f : expr.factors()) {
        const char *kind = "S";
        switch (f.atom.kind()) {
        case AtomKind::circle: kind = "S1"; break;
        case AtomKind::a_cell: kind = "A"; break;
        case AtomKind::b_cell: kind = "B"; break;
        default: break;
        }
        factors.push_back({{"kind", kind}, {"cells", f.atom.cells()}, {"looped", f.looped}});
    }
    return {{"prime", expr.prime()}, {"factors", factors}};
}

SpaceExpr space_from_json(const nlohmann::json &j) {
    try {
        const int p = j.at("prime").get<int>();
        std::vector<Factor> fs;
        for (const auto &f : j.at("factors")) {
            const auto kind = f.at("kind").get<std::string>();
            auto cells = f.at("cells").get<std::vector<int>>();
            const bool looped = f.at("looped").get<bool>();
            Atom a = Atom::point();
            if (kind == "S1")
                a = Atom::circle();
            else if (kind == "S" && cells.size() == 1)
                a = Atom::sphere(cells[0]);
            else if (kind == "A")
                a = Atom::a_cell(std::move(cells));
            else if (kind == "B")
                a = Atom::b_cell(std::move(cells));
            else
                fail(Errc::parse, "unknown factor kind '" + kind + "'");
            fs.push_back({std::move(a), looped});
        }
        return normalize(SpaceExpr(p, std::move(fs)));
    } catch (const nlohmann::json::exception &e) {
        fail(Errc::parse, std::string("bad SpaceExpr JSON: ") + e.what());
    }
}

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t'))
            ++i_;
    }
    bool done() {
        skip_ws();
        return i_ >= s_.size();
    }
    bool accept(std::string_view tok) {
        skip_ws();
        if (s_.substr(i_, tok.size()) == tok) {
            i_ += tok.size();
            return true;
        }
        return false;
    }
    void expect(std::string_view tok) {
        if (!accept(tok))
            error("expected '" + std::string(tok) + "'");
    }
    int integer() {
        skip_ws();
        int v = 0;
        auto [ptr, ec] = std::from_chars(s_.data() + i_, s_.data() + s_.size(), v);
        if (ec != std::errc())
            error("expected integer");
        i_ = static_cast<std::size_t>(ptr - s_.data());
        return v;
    }
    [[noreturn]] void error(const std::string &why) const {
        fail(Errc::parse, "cannot parse '" + std::string(s_) + "' at offset " + std::to_string(i_) + ": " + why);
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;
};

Atom scan_atom(Scanner &sc) {
    if (sc.accept("*") || sc.accept("pt"))
        return Atom::point();
    if (sc.accept("S^")) {
        int d = 0;
        if (sc.accept("{")) {
            d = sc.integer();
            sc.expect("}");
        } else {
            d = sc.integer();
        }
        return d == 1 ? Atom::circle() : Atom::sphere(d);
    }
    bool is_a = false;
    if (sc.accept("A("))
        is_a = true;
    else if (!sc.accept("B("))
        sc.error("expected an atom");
    std::vector<int> cells{sc.integer()};
    while (sc.accept(","))
        cells.push_back(sc.integer());
    sc.expect(")");
    return is_a ? Atom::a_cell(std::move(cells)) : Atom::b_cell(std::move(cells));
}

} // namespace

Atom parse_atom(std::string_view text) {
    Scanner sc(text);
    Atom a = scan_atom(sc);
    if (!sc.done())
        sc.error("trailing input");
    return a;
}

SpaceExpr parse_space(std::string_view text, int prime) {
    Scanner sc(text);
    std::vector<Factor> fs;
    do {
        const bool looped = sc.accept("Ω") || sc.accept("Omega");
        fs.push_back({scan_atom(sc), looped});
    } while (sc.accept("×") || sc.accept("x"));
    if (!sc.done())
        sc.error("trailing input");
    return normalize(SpaceExpr(prime, std::move(fs)));
}

} // namespace qrloop
