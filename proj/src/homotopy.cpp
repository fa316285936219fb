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

#include <qrloop/catalog.hpp>
#include <qrloop/error.hpp>
#include <qrloop/homotopy.hpp>

namespace qrloop {

std::string_view to_string(GroupDesc g) noexcept {
    switch (g) {
    case GroupDesc::zero: return "0";
    case GroupDesc::z_mod_p: return "Z/p";
    case GroupDesc::z_mod_p2: return "Z/p^2";
    case GroupDesc::z_local: return "Z_(p)";
    }
    return "?";
}

namespace {

void check_query(const RangeQuery &q) {
    require_prime(q.p);
    if (q.m < 2)
        fail(Errc::contract, "homotopy query needs m >= 2, got " + std::to_string(q.m));
    if (q.t < 1 || q.t > toda_window(q.p))
        fail(Errc::out_of_range, "offset t=" + std::to_string(q.t) + " outside the window 1.." +
                                     std::to_string(toda_window(q.p)) + " at p=" + std::to_string(q.p));
}

// t = 2i(p-1) - shift for some i in [lo, p-1]
bool in_family(int t, int p, int shift, int lo) {
    const int step = 2 * (p - 1);
    if ((t + shift) % step != 0)
        return false;
    const int i = (t + shift) / step;
    return i >= lo && i <= p - 1;
}

} // namespace

GroupDesc pi_sphere(const RangeQuery &q) {
    check_query(q);
    if (in_family(q.t, q.p, 1, 1) || in_family(q.t, q.p, 2, q.m))
        return GroupDesc::z_mod_p;
    return GroupDesc::zero;
}

GroupDesc pi_B(const RangeQuery &q) {
    check_query(q);
    if (in_family(q.t, q.p, 1, 2))
        return GroupDesc::z_mod_p2;
    if (q.t == 2 * q.p - 2)
        return GroupDesc::z_local;
    if (q.m > 2 && in_family(q.t, q.p, 2, q.m))
        return GroupDesc::z_mod_p;
    return GroupDesc::zero;
}

namespace {

// Group π_dim(target) for a sphere or two-cell B target.
GroupDesc group_of(const Atom &target, int dim, int p) {
    const int t = dim - target.bottom();
    if (t < 0)
        return GroupDesc::zero;
    if (t == 0)
        fail(Errc::contract, "cell of the source coincides with the bottom cell of " + render(target));
    const RangeQuery q{(target.bottom() + 1) / 2, t, p};
    return target.kind() == AtomKind::sphere ? pi_sphere(q) : pi_B(q);
}

} // namespace

bool maps_vanish(const Atom &source, const Atom &target, int p) {
    require_prime(p);
    if (source.kind() == AtomKind::point || target.kind() == AtomKind::point)
        return true;
    const bool src_ok = (source.kind() == AtomKind::sphere && source.bottom() <= 2 * p - 1) ||
                        (source.kind() == AtomKind::a_cell && source.cells().size() == 2);
    const bool tgt_ok = target.kind() == AtomKind::sphere ||
                        (target.kind() == AtomKind::b_cell && target.cells().size() == 2);
    if (!src_ok || !tgt_ok)
        fail(Errc::contract, "maps_vanish expects a sphere or A source and a sphere or B target, got " +
                                 render(source) + " -> " + render(target));
    source.validate(p);
    target.validate(p);
    const int m = slot_index(source, p);
    const int n = slot_index(target, p);
    if (m == n)
        fail(Errc::not_applicable, "source " + render(source) + " and target " + render(target) +
                                       " share slot " + std::to_string(m));
    if (source == Atom::a_cell({2 * p - 1, 4 * p - 3}) && target == Atom::sphere(3))
        fail(Errc::excluded_case, "maps " + render(source) + " -> S^3 are the excluded case at p=" +
                                      std::to_string(p));
    for (int c : source.cells())
        if (group_of(target, c, p) != GroupDesc::zero)
            return false;
    return true;
}

} // namespace qrloop
