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

#include "property_checks.hpp"

#include <qrloop/exponent.hpp>
#include <qrloop/space.hpp>
#include <qrloop/weyl.hpp>

#include <algorithm>
#include <random>

namespace props {
namespace {

using namespace qrloop;

constexpr int kPrimes[] = {5, 7, 11, 13};
constexpr int kWeylPrimes[] = {7, 11, 13};

void check(Report &r, bool ok, const std::string &what) {
    ++r.cases;
    if (ok)
        return;
    ++r.failures;
    if (r.messages.size() < 5)
        r.messages.push_back(what);
}

template <class Rng>
int pick(Rng &rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random factors at p, optionally with even looped spheres awaiting the split.
template <class Rng>
std::vector<Factor> random_factors(Rng &rng, int p, bool allow_even, bool allow_loops) {
    std::vector<Factor> f;
    const int k = pick(rng, 0, 6);
    for (int i = 0; i < k; ++i) {
        const bool looped = allow_loops && pick(rng, 0, 1) == 1;
        switch (pick(rng, 0, allow_even ? 3 : 2)) {
        case 0:
            if (!looped)
                f.push_back({Atom::circle(), false});
            break;
        case 1: f.push_back({Atom::sphere(2 * pick(rng, 2, 30) - 1), looped}); break;
        case 2: {
            const int m = pick(rng, 2, 12);
            f.push_back({Atom::b_cell({2 * m - 1, 2 * m + 2 * p - 3}), looped});
            break;
        }
        default: f.push_back({Atom::sphere(2 * pick(rng, 1, 15)), true}); break;
        }
    }
    return f;
}

// π_*⊗Q degrees read straight off the factors, even spheres included.
std::vector<int> raw_degrees(const std::vector<Factor> &fs) {
    std::vector<int> d;
    for (const auto &f : fs) {
        const int shift = f.looped ? 1 : 0;
        if (f.atom.kind() == AtomKind::sphere && f.atom.bottom() % 2 == 0) {
            const int n2 = f.atom.bottom();
            d.push_back(n2 - shift);
            d.push_back(2 * n2 - 1 - shift);
            continue;
        }
        for (int c : f.atom.cells())
            d.push_back(c - shift);
    }
    std::sort(d.begin(), d.end());
    return d;
}

template <class Rng>
Polynomial random_homogeneous(Rng &rng, int p, int degree, int terms) {
    Polynomial f(p, kTorusRank);
    for (int t = 0; t < terms; ++t) {
        Exponents e{};
        for (int k = 0; k < degree; ++k)
            ++e[pick(rng, 0, kTorusRank - 1)];
        Polynomial mono = Polynomial::constant(p, kTorusRank, pick(rng, 1, p - 1));
        for (int v = 0; v < kTorusRank; ++v)
            if (e[v])
                mono = mono * Polynomial::variable(p, kTorusRank, v).pow(e[v]);
        f = f + mono;
    }
    return f;
}

} // namespace

Report normalize_laws(std::uint64_t seed, int cases) {
    Report r{"normalize idempotence, order insensitivity, rational degrees"};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < cases; ++i) {
        const int p = kPrimes[pick(rng, 0, 3)];
        auto fs = random_factors(rng, p, true, true);
        const SpaceExpr n1 = normalize(SpaceExpr(p, fs));
        check(r, normalize(n1) == n1, "not idempotent: " + render(n1));
        std::shuffle(fs.begin(), fs.end(), rng);
        check(r, normalize(SpaceExpr(p, fs)) == n1, "order sensitive: " + render(n1));
        check(r, rational_degrees(n1) == raw_degrees(fs), "degrees changed: " + render(n1));
        check(r, std::is_sorted(n1.factors().begin(), n1.factors().end(), canonical_less),
              "not sorted: " + render(n1));
    }
    return r;
}

Report exponent_laws(std::uint64_t seed, int cases) {
    Report r{"exponent interval laws"};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < cases; ++i) {
        const int p = kPrimes[pick(rng, 0, 3)];
        const SpaceExpr a = normalize(SpaceExpr(p, random_factors(rng, p, false, false)));
        const SpaceExpr b = normalize(SpaceExpr(p, random_factors(rng, p, false, true)));
        const ExponentInterval ea = exponent(a, p), eb = exponent(b, p), eab = exponent(product(a, b), p);
        check(r, ea.lo <= ea.hi && eb.lo <= eb.hi, "lo > hi");
        check(r, eab.lo == std::max(ea.lo, eb.lo) && eab.hi == std::max(ea.hi, eb.hi),
              "product rule: " + render(a) + " | " + render(b));
        check(r, exponent(product(a, SpaceExpr::point(p)), p) == ea, "point factor changed exponent");
        check(r, exponent(loop(a), p) == ea, "loop changed exponent: " + render(a));
    }
    return r;
}

Report rho_laws(std::uint64_t seed, int cases) {
    Report r{"reflection involution and algebra map"};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < cases; ++i) {
        const int p = kWeylPrimes[pick(rng, 0, 2)];
        const int df = pick(rng, 1, 3), dg = pick(rng, 1, 3);
        const Polynomial f = random_homogeneous(rng, p, df, pick(rng, 1, 5));
        const Polynomial g = random_homogeneous(rng, p, dg, pick(rng, 1, 5));
        const Polynomial rf = reflection_rho(f, p), rg = reflection_rho(g, p);
        check(r, reflection_rho(rf, p) == f, "rho^2 != id");
        check(r, reflection_rho(f * g, p) == rf * rg, "rho(fg) != rho(f)rho(g)");
        check(r, reflection_rho(f + g, p) == rf + rg, "rho(f+g) != rho(f)+rho(g)");
        check(r, rf.homogeneous() && (rf.is_zero() || rf.total_degree() == df), "rho changed the degree");
    }
    return r;
}

Report ring_laws(std::uint64_t seed, int cases) {
    Report r{"polynomial ring laws"};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < cases; ++i) {
        const int p = kWeylPrimes[pick(rng, 0, 2)];
        const int da = pick(rng, 0, 3), db = pick(rng, 0, 3);
        const Polynomial a = random_homogeneous(rng, p, da, pick(rng, 1, 4));
        const Polynomial b = random_homogeneous(rng, p, db, pick(rng, 1, 4));
        const Polynomial c = random_homogeneous(rng, p, pick(rng, 0, 3), pick(rng, 1, 4));
        check(r, a + b == b + a && a * b == b * a, "commutativity");
        check(r, (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c), "associativity");
        check(r, a * (b + c) == a * b + a * c, "distributivity");
        check(r, (a - a).is_zero(), "a - a != 0");
        if (!a.is_zero() && !b.is_zero())
            check(r, (a * b).total_degree() == da + db, "degree not additive");
    }
    return r;
}

Report symmetric_identity() {
    Report r{"c_i = sum a_j b_k"};
    for (int p : kWeylPrimes) {
        const SymbolTable s = make_symbols(p);
        for (int i = 0; i <= 8; ++i) {
            Polynomial sum(p, kTorusRank);
            for (int j = 0; j <= 4; ++j)
                if (i - j >= 0 && i - j <= 4)
                    sum = sum + s.a[j] * s.b[i - j];
            check(r, sum == s.c[i], "p=" + std::to_string(p) + " i=" + std::to_string(i));
        }
    }
    return r;
}

std::vector<Report> run_all(std::uint64_t seed) {
    return {normalize_laws(seed, 2000), exponent_laws(seed + 1, 2000), rho_laws(seed + 2, 1000),
            ring_laws(seed + 3, 500), symmetric_identity()};
}

} // namespace props
