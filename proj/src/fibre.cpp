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
#include <qrloop/fibre.hpp>
#include <qrloop/homotopy.hpp>

#include <algorithm>
#include <map>

namespace qrloop {

std::string_view to_string(QClass c) noexcept {
    switch (c) {
    case QClass::v1: return "V1";
    case QClass::v2: return "V2";
    case QClass::v3: return "V3";
    case QClass::v4: return "V4";
    case QClass::v5: return "V5";
    case QClass::v6: return "V6";
    case QClass::v7: return "V7";
    case QClass::v8: return "V8";
    case QClass::null_map: return "NullMap";
    case QClass::domain_empty: return "DomainEmpty";
    case QClass::codomain_empty: return "CodomainEmpty";
    case QClass::undetermined: return "Undetermined";
    }
    return "?";
}

namespace {

bool in(const std::vector<int> &d, int x) { return std::find(d.begin(), d.end(), x) != d.end(); }

bool is_sphere(const Atom &a) { return a.kind() == AtomKind::sphere; }
bool is_two_cell(const Atom &a) { return a.is_complex() && a.cells().size() == 2; }

// Domain summands ordered sphere first so the wedge shapes read as in the tables.
std::vector<Atom> ordered(std::vector<Atom> v) {
    std::sort(v.begin(), v.end(), [](const Atom &a, const Atom &b) {
        return std::pair(a.is_complex(), a.cells()) < std::pair(b.is_complex(), b.cells());
    });
    return v;
}

std::string describe(const SlotAssignment &s) {
    std::string d;
    for (const auto &a : s.domain)
        d += (d.empty() ? "" : " v ") + render(a);
    return "slot " + std::to_string(s.slot) + ": " + (d.empty() ? "*" : d) + " -> " +
           (s.codomain ? render(*s.codomain) : std::string("*"));
}

} // namespace

QClass classify_q(const SlotAssignment &s, const std::vector<int> &d, int p) {
    require_prime(p);
    if (s.domain.size() > 2)
        fail(Errc::contract, "more than two domain summands in " + describe(s));
    if (s.domain.empty())
        return s.codomain ? QClass::domain_empty : QClass::v1;
    if (!s.codomain)
        return QClass::codomain_empty;
    const Atom &y = *s.codomain;
    const auto dom = ordered(s.domain);

    int top = 0;
    for (const auto &x : dom)
        top = std::max(top, x.top());
    if (y.bottom() > top)
        return QClass::null_map;

    if (dom.size() == 1) {
        const Atom &x = dom.front();
        if (x == y) {
            if (in(d, x.bottom()) || in(d, x.top()))
                return QClass::v1;
            return is_sphere(x) ? QClass::null_map : QClass::undetermined;
        }
        const bool a_to_b = is_two_cell(x) || is_sphere(x);
        if (!a_to_b)
            return QClass::undetermined;
        if (is_sphere(x) && is_two_cell(y) && y.bottom() == x.bottom())
            return in(d, x.bottom()) ? QClass::v2 : QClass::null_map;
        if (is_two_cell(x) && is_sphere(y) && y.bottom() == x.top())
            return in(d, x.top()) ? QClass::v3 : QClass::null_map;
        if (is_two_cell(x) && is_two_cell(y) && y.bottom() == x.top())
            return in(d, x.top()) ? QClass::v4 : QClass::null_map;
        return QClass::undetermined;
    }

    const Atom &x1 = dom[0];
    const Atom &x2 = dom[1];
    if (is_sphere(x1) && x1 == x2) {
        if (y == x1)
            return in(d, x1.bottom()) ? QClass::v5 : QClass::null_map;
        if (is_two_cell(y) && y.bottom() == x1.bottom())
            return in(d, x1.bottom()) ? QClass::v6 : QClass::null_map;
        return QClass::undetermined;
    }
    if (is_sphere(x1) && is_two_cell(x2) && x2 == y && x1.bottom() == y.bottom())
        return in(d, y.bottom()) || in(d, y.top()) ? QClass::v7 : QClass::undetermined;
    if (is_two_cell(x1) && x1 == x2 && x1 == y)
        return in(d, y.bottom()) || in(d, y.top()) ? QClass::v8 : QClass::undetermined;
    return QClass::undetermined;
}

std::vector<int> consumed_degrees(QClass c, const SlotAssignment &s) {
    const auto dom = ordered(s.domain);
    switch (c) {
    case QClass::v1:
        return s.codomain ? s.codomain->cells() : std::vector<int>{};
    case QClass::v2:
    case QClass::v5:
    case QClass::v6: return {dom.front().bottom()};
    case QClass::v3:
    case QClass::v4: return {dom.front().top()};
    case QClass::v7:
    case QClass::v8: return s.codomain->cells();
    default: return {};
    }
}

SpaceExpr fibre(QClass c, const SlotAssignment &s, int p) {
    std::vector<Factor> fs;
    const auto dom = ordered(s.domain);
    auto unlooped_domain = [&] {
        for (const auto &a : dom)
            fs.push_back({a.as_b(), false});
    };
    switch (c) {
    case QClass::v1: break;
    case QClass::v2: fs.push_back({Atom::sphere(s.codomain->top()), true}); break;
    case QClass::v3:
    case QClass::v5:
    case QClass::v7: fs.push_back({Atom::sphere(dom.front().bottom()), false}); break;
    case QClass::v4:
    case QClass::v6:
        fs.push_back({Atom::sphere(dom.front().bottom()), false});
        fs.push_back({Atom::sphere(s.codomain->top()), true});
        break;
    case QClass::v8: fs.push_back({s.codomain->as_b(), false}); break;
    case QClass::domain_empty: fs.push_back({s.codomain->as_b(), true}); break;
    case QClass::codomain_empty: unlooped_domain(); break;
    case QClass::null_map:
        unlooped_domain();
        fs.push_back({s.codomain->as_b(), true});
        break;
    case QClass::undetermined:
        fail(Errc::undetermined, "cannot identify the map in " + describe(s) +
                                     ": both sides are nontrivial and D neither confirms nor forces nullity");
    }
    return normalize(SpaceExpr(p, std::move(fs)));
}

namespace {

using AtomBag = std::vector<Atom>;

AtomBag atoms_of(const SpaceExpr &e) {
    AtomBag out;
    for (const auto &f : e.factors())
        out.push_back(f.atom);
    return out;
}

// a minus b as multisets; throws when b is not contained in a.
AtomBag minus(AtomBag a, const AtomBag &b, const std::string &what) {
    for (const auto &x : b) {
        auto it = std::find(a.begin(), a.end(), x);
        if (it == a.end())
            fail(Errc::configuration, what + ": " + render(x) + " is not a factor");
        a.erase(it);
    }
    return a;
}

SpaceExpr from_bag(int p, const AtomBag &bag, bool looped) {
    std::vector<Factor> fs;
    for (const auto &a : bag)
        fs.push_back({a.as_b(), looped});
    return normalize(SpaceExpr(p, std::move(fs)));
}

std::vector<int> cells_without_circle(const AtomBag &bag) {
    std::vector<int> out;
    for (const auto &a : bag)
        if (a.kind() != AtomKind::circle)
            out.insert(out.end(), a.cells().begin(), a.cells().end());
    std::sort(out.begin(), out.end());
    return out;
}

void add_citations(LoopResult &r, const std::vector<std::string> &cs) {
    for (const auto &c : cs)
        if (std::find(r.citations.begin(), r.citations.end(), c) == r.citations.end())
            r.citations.push_back(c);
}

void add_consumed(LoopResult &r, const std::vector<int> &d) {
    r.consumed.insert(r.consumed.end(), d.begin(), d.end());
    std::sort(r.consumed.begin(), r.consumed.end());
}

void append_sorted(std::vector<int> &into, const std::vector<int> &d) {
    into.insert(into.end(), d.begin(), d.end());
    std::sort(into.begin(), into.end());
}

// Hypothesis of the slot-wise factorisation: maps from each lower domain
// atom into every other-slot factor of G vanish.
void check_cross_slots(const AtomBag &h, const AtomBag &g, int p) {
    for (const auto &x0 : h) {
        const Atom x = x0.as_a();
        const bool lower = (is_sphere(x) && x.bottom() <= 2 * p - 1) || is_two_cell(x);
        if (!lower)
            continue;
        for (const auto &y : g) {
            if (!(is_sphere(y) || is_two_cell(y)))
                continue;
            if (slot_index(x, p) == slot_index(y, p))
                continue;
            const Atom target = y.as_b();
            bool vanish = false;
            try {
                vanish = maps_vanish(x, target, p);
            } catch (const Error &e) {
                if (e.code() == Errc::excluded_case)
                    fail(Errc::configuration, std::string("cross-slot check hit the excluded pair: ") + e.what());
                throw;
            }
            if (!vanish)
                fail(Errc::configuration, "maps " + render(x) + " -> " + render(target) + " need not vanish at p=" +
                                              std::to_string(p));
        }
    }
}

// Pairs H atoms with G atoms slot by slot; circles are kept unlooped when allowed.
SpaceExpr slot_match(const SpaceExpr &hdec, const SpaceExpr &gdec, const std::vector<int> &d, int p, bool keep_circle,
                     LoopResult &r) {
    AtomBag h, g;
    std::vector<Factor> circles;
    for (const auto &a : atoms_of(hdec)) {
        if (a.kind() == AtomKind::circle) {
            if (!keep_circle)
                fail(Errc::configuration, "circle factor in H needs the S^1 recipe");
            circles.push_back({a, false});
            continue;
        }
        h.push_back(a);
    }
    for (const auto &a : atoms_of(gdec)) {
        if (a.kind() == AtomKind::circle)
            fail(Errc::configuration, "G has a circle factor; G must be simply connected");
        g.push_back(a);
    }
    check_cross_slots(h, g, p);

    std::map<int, SlotAssignment> slots;
    for (const auto &a : h) {
        const int m = slot_index(a.as_a(), p);
        slots[m].slot = m;
        slots[m].domain.push_back(a.as_a());
    }
    for (const auto &a : g) {
        const int m = slot_index(a.as_a(), p);
        auto &s = slots[m];
        s.slot = m;
        if (s.codomain)
            fail(Errc::configuration, "two factors of G share slot " + std::to_string(m));
        s.codomain = a.as_a();
    }

    SpaceExpr out(p, circles);
    out = normalize(out);
    SpaceExpr matched = SpaceExpr::point(p);
    for (const auto &[m, s] : slots) {
        const QClass c = classify_q(s, d, p);
        const SpaceExpr f = fibre(c, s, p);
        r.slots.push_back({s, c, f});
        add_consumed(r, consumed_degrees(c, s));
        out = product(out, f);
        matched = product(matched, f);
    }
    append_sorted(r.h_type, cells_without_circle(h));
    append_sorted(r.g_type, cells_without_circle(g));
    r.matched = product(r.matched, matched);
    return out;
}

LoopResult start(const CaseRecord &c) {
    LoopResult r;
    r.type = c.type;
    r.params = c.params;
    r.prime = c.prime;
    r.space = c.space;
    r.recipe = c.recipe;
    r.expr = SpaceExpr::point(c.prime);
    r.matched = SpaceExpr::point(c.prime);
    return r;
}

Decomposition decomp(const GroupId &g, int p, LoopResult &r) {
    Decomposition d = decompose(g, p);
    add_citations(r, d.citations);
    return d;
}

// H = split x core_H x extras_H and G = core_G x extras_G, the extra factors
// coming from the Harris splittings of even orthogonal groups and from U(n).
void split_and_match(const CaseRecord &c, LoopResult &r) {
    const int p = c.prime;
    if (!c.split || !c.core_g || !c.core_h)
        fail(Errc::configuration, c.type + ": split recipe needs split, core_G and core_H");
    const AtomBag split = atoms_of(decomp(*c.split, p, r).expr);
    const AtomBag core_h = atoms_of(decomp(*c.core_h, p, r).expr);
    const AtomBag core_g = atoms_of(decomp(*c.core_g, p, r).expr);
    AtomBag extra_h = minus(minus(atoms_of(decomp(c.h, p, r).expr), split, c.type + " split"), core_h, c.type + " core");
    AtomBag extra_g = minus(atoms_of(decomp(c.g, p, r).expr), core_g, c.type + " core of G");
    // The circle of U(n-m) maps isomorphically on π_1 to the circle of U(n).
    for (auto it = extra_h.begin(); it != extra_h.end();) {
        auto jt = std::find(extra_g.begin(), extra_g.end(), Atom::circle());
        if (it->kind() == AtomKind::circle && jt != extra_g.end()) {
            extra_g.erase(jt);
            it = extra_h.erase(it);
        } else {
            ++it;
        }
    }
    const SpaceExpr core = slot_match(from_bag(p, core_h, false), from_bag(p, core_g, false), c.d, p, false, r);
    r.expr = product(product(from_bag(p, split, false), core),
                     product(from_bag(p, extra_h, false), from_bag(p, extra_g, true)));
}

AtomBag primary_cells(const std::vector<int> &cells) {
    if (cells.empty())
        return {};
    if (cells.size() == 1)
        return {cells[0] == 1 ? Atom::circle() : Atom::sphere(cells[0])};
    return {Atom::b_cell(cells)};
}

std::vector<int> intersect(const std::vector<int> &a, const std::vector<int> &b) {
    std::vector<int> out;
    for (int x : a)
        if (in(b, x))
            out.push_back(x);
    return out;
}

std::vector<int> without(const std::vector<int> &a, const std::vector<int> &b) {
    std::vector<int> out;
    for (int x : a)
        if (!in(b, x))
            out.push_back(x);
    return out;
}

// Non-quasi-regular targets at p=7: each listed map lifts through the skeleton of
// one multi-cell factor of G; matched cells cancel and the rest is split off.
void extension(const CaseRecord &c, LoopResult &r) {
    const int p = c.prime;
    AtomBag h, g = atoms_of(decomp(c.g, p, r).expr);
    std::vector<Factor> out;
    for (const auto &a : atoms_of(decomp(c.h, p, r).expr)) {
        if (a.kind() == AtomKind::circle)
            out.push_back({a, false});
        else
            h.push_back(a.as_a());
    }
    AtomBag listed = c.pinched;
    for (const auto &m : c.maps)
        listed.insert(listed.end(), m.domain.begin(), m.domain.end());
    AtomBag rest = minus(h, listed, c.type + " extension data");
    if (!rest.empty())
        fail(Errc::configuration, c.type + ": factor " + render(rest.front()) + " of H is neither mapped nor pinched");

    AtomBag g_skel;
    for (const auto &a : g)
        g_skel.push_back(a.as_a());
    AtomBag codomains;
    for (const auto &m : c.maps)
        codomains.push_back(m.codomain);
    const AtomBag unmapped = minus(g_skel, codomains, c.type + " extension codomain");

    for (const auto &a : c.pinched)
        out.push_back({a.as_b(), false});
    for (const auto &m : c.maps) {
        std::size_t best = 0;
        std::vector<int> best_m;
        for (std::size_t i = 0; i < m.domain.size(); ++i) {
            auto mi = intersect(intersect(m.domain[i].cells(), m.codomain.cells()), c.d);
            if (mi.size() > best_m.size()) {
                best = i;
                best_m = std::move(mi);
            }
        }
        if (best_m.empty())
            fail(Errc::configuration, c.type + ": map into " + render(m.codomain) + " matches no degree of D");
        add_consumed(r, best_m);
        for (std::size_t i = 0; i < m.domain.size(); ++i) {
            if (i == best) {
                for (const auto &a : primary_cells(without(m.domain[i].cells(), best_m)))
                    out.push_back({a, false});
            } else {
                out.push_back({m.domain[i].as_b(), false});
            }
        }
        for (const auto &a : primary_cells(without(m.codomain.cells(), best_m)))
            out.push_back({a, true});
    }
    for (const auto &a : unmapped)
        out.push_back({a.as_b(), true});

    r.expr = normalize(SpaceExpr(p, out));
    r.matched = r.expr;
    append_sorted(r.h_type, cells_without_circle(h));
    append_sorted(r.g_type, cells_without_circle(g));
}

} // namespace

LoopResult loop_decomposition(const CaseRecord &c) {
    const int p = c.prime;
    LoopResult r = start(c);
    switch (c.recipe) {
    case Recipe::slot_match:
    case Recipe::slot_match_with_s1: {
        const SpaceExpr h = decomp(c.h, p, r).expr;
        const SpaceExpr g = decomp(c.g, p, r).expr;
        r.expr = slot_match(h, g, c.d, p, c.recipe == Recipe::slot_match_with_s1, r);
        break;
    }
    case Recipe::harris_complement: {
        const AtomBag h = atoms_of(decomp(c.h, p, r).expr);
        const AtomBag g = atoms_of(decomp(c.g, p, r).expr);
        const AtomBag rest = minus(g, h, c.type + " Harris complement");
        r.expr = from_bag(p, rest, true);
        r.matched = r.expr;
        add_consumed(r, cells_without_circle(h));
        r.h_type = cells_without_circle(h);
        r.g_type = cells_without_circle(g);
        break;
    }
    case Recipe::product_split: split_and_match(c, r); break;
    case Recipe::reduction:
        if (c.reduce_to_type) {
            const CaseRecord inner = Catalog::instance().case_record(*c.reduce_to_type, c.reduce_to_params, p);
            LoopResult sub = loop_decomposition(inner);
            sub.type = r.type;
            sub.params = r.params;
            sub.space = r.space;
            sub.recipe = r.recipe;
            r = std::move(sub);
        } else {
            split_and_match(c, r);
        }
        break;
    case Recipe::assembly:
        for (const auto &t : c.assembly) {
            LoopResult part = loop_decomposition(Catalog::instance().case_record(t, {}, p));
            r.expr = product(r.expr, part.expr);
            r.matched = product(r.matched, part.matched);
            r.slots.insert(r.slots.end(), part.slots.begin(), part.slots.end());
            add_consumed(r, part.consumed);
            append_sorted(r.h_type, part.h_type);
            append_sorted(r.g_type, part.g_type);
            add_citations(r, part.citations);
        }
        break;
    case Recipe::extension_p7: extension(c, r); break;
    case Recipe::undetermined_p7:
        fail(Errc::undetermined, c.space + " at p=" + std::to_string(p) + " is undetermined: " + c.obstruction);
    }
    add_citations(r, c.citations);
    if (!c.d_citation.empty())
        add_citations(r, {c.d_citation});
    return r;
}

LoopResult loop_decomposition(std::string_view type, const CaseParams &params, int p) {
    return loop_decomposition(Catalog::instance().case_record(type, params, p));
}

std::vector<int> rational_homotopy_degrees(const LoopResult &r) {
    std::vector<int> out;
    for (const auto &f : r.expr.factors()) {
        for (int c : f.atom.cells())
            out.push_back(f.looped ? c : c + 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::string list(const std::vector<int> &v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

} // namespace

BalanceReport verify_rational_balance(const LoopResult &r) {
    std::vector<int> unlooped, looped;
    for (const auto &f : r.matched.factors()) {
        if (f.atom.kind() == AtomKind::circle)
            continue;
        auto &into = f.looped ? looped : unlooped;
        into.insert(into.end(), f.atom.cells().begin(), f.atom.cells().end());
    }
    std::vector<int> lhs_h = r.consumed, lhs_g = r.consumed;
    append_sorted(lhs_h, unlooped);
    append_sorted(lhs_g, looped);
    BalanceReport b;
    if (lhs_h != r.h_type)
        b.diff += "consumed+unlooped " + list(lhs_h) + " != type(H) " + list(r.h_type) + "; ";
    if (lhs_g != r.g_type)
        b.diff += "consumed+looped " + list(lhs_g) + " != type(G) " + list(r.g_type) + "; ";
    b.ok = b.diff.empty();
    return b;
}

BalanceReport verify_rational_balance(const CaseRecord &c) { return verify_rational_balance(loop_decomposition(c)); }

} // namespace qrloop
