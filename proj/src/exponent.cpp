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
#include <qrloop/exponent.hpp>

#include <algorithm>

namespace qrloop {

ExponentInterval exponent_atom(const Atom &atom, bool /*looped*/, int p) {
    require_prime(p);
    switch (atom.kind()) {
    case AtomKind::point:
    case AtomKind::circle: return {0, 0};
    case AtomKind::sphere: {
        const int d = atom.bottom();
        if (d % 2 == 0)
            fail(Errc::unsupported, "no exponent rule for the even sphere " + render(atom));
        return {(d - 1) / 2, (d - 1) / 2};
    }
    case AtomKind::a_cell:
    case AtomKind::b_cell: {
        if (atom.cells().size() != 2)
            fail(Errc::unsupported, "no exponent bound for the multi-cell atom " + render(atom));
        atom.validate(p);
        const int m = (atom.bottom() + 1) / 2;
        if (m == 2)
            return {p + 1, p + 1};
        return {m + p - 2, m + p - 1};
    }
    }
    fail(Errc::unsupported, "unknown atom");
}

ExponentInterval exponent(const SpaceExpr &expr, int p) {
    ExponentInterval e;
    for (const auto &f : expr.factors()) {
        const auto a = exponent_atom(f.atom, f.looped, p);
        e.lo = std::max(e.lo, a.lo);
        e.hi = std::max(e.hi, a.hi);
    }
    return e;
}

ExponentReport exponent_report(const LoopResult &r) {
    ExponentReport rep;
    rep.interval = exponent(r.expr, r.prime);
    rep.exact = rep.interval.exact();
    for (const auto &f : r.expr.factors())
        rep.top_degree = std::max(rep.top_degree, f.atom.top());
    return rep;
}

ExponentReport exponent_report(const CaseRecord &c) { return exponent_report(loop_decomposition(c)); }

std::string render(const ExponentInterval &e) {
    if (e.exact())
        return "exp = p^" + std::to_string(e.lo);
    return "p^" + std::to_string(e.lo) + " ≤ exp ≤ p^" + std::to_string(e.hi);
}

} // namespace qrloop
