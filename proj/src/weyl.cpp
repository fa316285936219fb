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
#include <qrloop/weyl.hpp>

#include <algorithm>
#include <functional>
#include <map>

namespace qrloop {
namespace {

void require_weyl_prime(int p) {
    if (!is_prime(p) || p < 7)
        fail(Errc::prime, "the reflection computation needs a prime p >= 7, got " + std::to_string(p));
}

Polynomial var(int p, int i) { return Polynomial::variable(p, kTorusRank, i); }

Polynomial frac(const Polynomial &f, long num, long den) {
    return f.scaled(static_cast<long>(mod_reduce(num, f.prime()) * static_cast<std::uint64_t>(mod_inverse(den, f.prime())) %
                                      f.prime()));
}

Polynomial sum_vars(int p, std::initializer_list<int> idx) {
    Polynomial s(p, kTorusRank);
    for (int i : idx)
        s = s + var(p, i);
    return s;
}

const std::vector<std::string> &coordinate_names(bool free_ring, Complement basis) {
    static const std::vector<std::string> mod_c1_first{"s", "t2", "t3", "t4", "t5", "t6", "t7"};
    static const std::vector<std::string> mod_c1_second{"s", "t1", "t3", "t4", "t5", "t6", "t7"};
    static const std::vector<std::string> free_first{"s", "t2", "t3", "t4", "t6", "t7", "t8"};
    static const std::vector<std::string> free_second{"s", "t1", "t3", "t4", "t5", "t7", "t8"};
    if (free_ring)
        return basis == Complement::first ? free_first : free_second;
    return basis == Complement::first ? mod_c1_first : mod_c1_second;
}

// Images of t1..t8 in coordinates (s, u1..u6) with s = tau and c1 = 0.
std::vector<Polynomial> mod_c1_coordinates(int p, Complement basis) {
    const Polynomial s = var(p, 0);
    std::vector<Polynomial> img(kTorusRank, Polynomial(p, kTorusRank));
    if (basis == Complement::first) {
        for (int i = 1; i <= 6; ++i)
            img[i] = var(p, i); // t2..t7
        img[0] = s.scaled(2) - sum_vars(p, {1, 2, 3});
    } else {
        img[0] = var(p, 1);
        for (int i = 2; i <= 6; ++i)
            img[i] = var(p, i); // t3..t7
        img[1] = s.scaled(2) - sum_vars(p, {1, 2, 3});
    }
    img[7] = s.scaled(-2) - sum_vars(p, {4, 5, 6});
    return img;
}

// Images of t1..t8 in coordinates (s, u1..u6) with s = tau and a1 = 0.
std::vector<Polynomial> mod_a1_coordinates(int p, Complement basis) {
    const Polynomial s = var(p, 0);
    std::vector<Polynomial> img(kTorusRank, Polynomial(p, kTorusRank));
    if (basis == Complement::first) {
        img[1] = var(p, 1), img[2] = var(p, 2), img[3] = var(p, 3);
        img[5] = var(p, 4), img[6] = var(p, 5), img[7] = var(p, 6);
        img[0] = -sum_vars(p, {1, 2, 3});
        img[4] = s.scaled(-4) - sum_vars(p, {4, 5, 6});
    } else {
        img[0] = var(p, 1), img[2] = var(p, 2), img[3] = var(p, 3);
        img[4] = var(p, 4), img[6] = var(p, 5), img[7] = var(p, 6);
        img[1] = -sum_vars(p, {1, 2, 3});
        img[5] = s.scaled(-4) - sum_vars(p, {4, 5, 6});
    }
    return img;
}

// e_0..e_k of a list of linear forms.
std::vector<Polynomial> elem_sym_forms(int k, const std::vector<Polynomial> &forms) {
    const Polynomial &f0 = forms.front();
    std::vector<Polynomial> e(k + 1, Polynomial(f0.prime(), f0.nvars()));
    e[0] = Polynomial::constant(f0.prime(), f0.nvars(), 1);
    for (const auto &x : forms)
        for (int j = k; j >= 1; --j)
            e[j] = e[j] + x * e[j - 1];
    return e;
}

// Symbols evaluated at the given images of t1..t8.
SymbolTable symbols_at(int p, const std::vector<Polynomial> &t) {
    const std::vector<Polynomial> lo(t.begin(), t.begin() + 4), hi(t.begin() + 4, t.end());
    std::vector<Polynomial> a = elem_sym_forms(4, lo), b = elem_sym_forms(4, hi), c = elem_sym_forms(8, t);
    Polynomial tau = frac(a[1] - b[1], 1, 4);
    Polynomial x4 = c[2];
    Polynomial x12 = c[6] - frac(c[2] * c[4], 1, 6) + frac(c[3] * c[3], 1, 8);
    Polynomial x16 =
        c[8] - frac(c[2] * c[6], 1, 4) - frac(c[3] * c[5], 1, 8) + frac(c[4] * c[4], 1, 12);
    return SymbolTable{p, std::move(a), std::move(b), std::move(c), tau, x4, x12, x16};
}

// Images of t1..t8 under the reflection, given images of t1..t8 and of tau.
std::vector<Polynomial> reflected(const std::vector<Polynomial> &t, const Polynomial &tau) {
    std::vector<Polynomial> img;
    for (int i = 0; i < kTorusRank; ++i)
        img.push_back(i < 4 ? t[i] - tau : t[i] + tau);
    return img;
}

// r is already expressed in coordinates where variable 0 is tau.
IdentityCheck tau_check(std::string name, const Polynomial &r, int required, bool free_ring,
                        Complement basis) {
    IdentityCheck ch;
    ch.name = std::move(name);
    ch.required = required;
    ch.tau_order = r.min_degree_in(0);
    ch.ok = r.is_zero() || (required > 0 && ch.tau_order >= required);
    if (!ch.ok)
        ch.residual = r.to_string(coordinate_names(free_ring, basis));
    return ch;
}

VerifyReport summarize(std::vector<IdentityCheck> checks) {
    VerifyReport rep;
    rep.ok = std::all_of(checks.begin(), checks.end(), [](const IdentityCheck &c) { return c.ok; });
    rep.checks = std::move(checks);
    return rep;
}

} // namespace

Polynomial elem_sym(int k, const std::vector<int> &vars, int p, int nvars) {
    if (k < 0 || k > static_cast<int>(vars.size()))
        fail(Errc::out_of_range, "elementary symmetric index " + std::to_string(k) + " out of range");
    // e_j over the first i variables, built up by e_j += x_i * e_{j-1}.
    std::vector<Polynomial> e(k + 1, Polynomial(p, nvars));
    e[0] = Polynomial::constant(p, nvars, 1);
    for (int v : vars) {
        const Polynomial x = Polynomial::variable(p, nvars, v);
        for (int j = k; j >= 1; --j)
            e[j] = e[j] + x * e[j - 1];
    }
    return e[k];
}

SymbolTable make_symbols(int p) {
    require_weyl_prime(p);
    std::vector<Polynomial> t;
    for (int i = 0; i < kTorusRank; ++i)
        t.push_back(var(p, i));
    return symbols_at(p, t);
}

Polynomial reflection_rho(const Polynomial &f, int p) {
    require_weyl_prime(p);
    if (f.prime() != p || f.nvars() != kTorusRank)
        fail(Errc::contract, "reflection acts on F_p[t1..t8]");
    Polynomial tau(p, kTorusRank);
    for (int i = 0; i < kTorusRank; ++i)
        tau = tau + var(p, i).scaled(i < 4 ? 1 : -1);
    tau = frac(tau, 1, 4);
    std::vector<Polynomial> img;
    for (int i = 0; i < kTorusRank; ++i)
        img.push_back(i < 4 ? var(p, i) - tau : var(p, i) + tau);
    return f.substitute(img);
}

VerifyReport verify_appendix_table(int p, Complement basis) {
    require_weyl_prime(p);
    // In these coordinates tau is the variable s, so rho shifts the linear forms by s.
    const auto coords = mod_c1_coordinates(p, basis);
    const SymbolTable s = symbols_at(p, coords);
    const SymbolTable r = symbols_at(p, reflected(coords, s.tau));
    const auto &a = s.a;
    const auto &b = s.b;
    const auto &c = s.c;
    const Polynomial t = s.tau, t2 = t * t, t3 = t2 * t;

    std::vector<IdentityCheck> checks;
    auto check = [&](const char *name, int i, const Polynomial &rhs, int required) {
        checks.push_back(tau_check(name, r.c[i] - rhs, required, false, basis));
    };
    check("rho(c2) = c2", 2, c[2], 0);
    check("rho(c3) = c3 + 2(a2-b2)tau", 3, c[3] + (a[2] - b[2]).scaled(2) * t, 0);
    check("rho(c4) = c4 + 3(a3-b3)tau - 3(a2+b2)tau^2 mod tau^4", 4,
          c[4] + (a[3] - b[3]).scaled(3) * t - (a[2] + b[2]).scaled(3) * t2, 4);
    check("rho(c5) = c5 + 4(a4-b4)tau - 2(a3+b3)tau^2 mod tau^4", 5,
          c[5] + (a[4] - b[4]).scaled(4) * t - (a[3] + b[3]).scaled(2) * t2, 4);
    check("rho(c6) = c6 + (a3b2-a2b3)tau - 2a2b2 tau^2 - 2(a3-b3)tau^3 mod tau^4", 6,
          c[6] + (a[3] * b[2] - a[2] * b[3]) * t - (a[2] * b[2]).scaled(2) * t2 -
              (a[3] - b[3]).scaled(2) * t3,
          4);
    check("rho(c8) = c8 + (a4b3-a3b4)tau + (a4b2+a2b4-a3b3)tau^2 - (a3b2-a2b3)tau^3 mod tau^4", 8,
          c[8] + (a[4] * b[3] - a[3] * b[4]) * t + (a[4] * b[2] + a[2] * b[4] - a[3] * b[3]) * t2 -
              (a[3] * b[2] - a[2] * b[3]) * t3,
          4);
    return summarize(std::move(checks));
}

IdentityCheck first_order_invariance(const std::string &name, const Polynomial &x, int p,
                                     Complement basis) {
    const auto coords = mod_a1_coordinates(p, basis);
    const Polynomial diff = reflection_rho(x, p) - x;
    return tau_check(name, diff.substitute(coords), 2, true, basis);
}

VerifyReport verify_generator_formulas(int p, Complement basis) {
    require_weyl_prime(p);
    const auto coords = mod_a1_coordinates(p, basis);
    const SymbolTable s = symbols_at(p, coords);
    const SymbolTable r = symbols_at(p, reflected(coords, s.tau));
    std::vector<IdentityCheck> checks;
    // x4 is fixed on the nose.
    checks.push_back(tau_check("x4 = c2", r.x4 - s.x4, 0, true, basis));
    checks.push_back(tau_check("x12 = c6 - c2c4/6 + c3^2/8", r.x12 - s.x12, 2, true, basis));
    checks.push_back(
        tau_check("x16 = c8 - c2c6/4 - c3c5/8 + c4^2/12", r.x16 - s.x16, 2, true, basis));
    return summarize(std::move(checks));
}

OracleResult invariant_generator_oracle(int p, int degree, std::size_t monomial_limit) {
    require_weyl_prime(p);
    if (degree != 4 && degree != 12 && degree != 16)
        fail(Errc::out_of_range, "oracle degrees are 4, 12 and 16");
    const int k = degree / 2;

    // Monomials of t-degree k in the seven coordinates left after eliminating t8.
    std::size_t dim = 1;
    for (int i = 1; i <= 6; ++i)
        dim = dim * (k + i) / i;
    if (dim > monomial_limit)
        fail(Errc::dimension_limit, "degree " + std::to_string(degree) + " needs " +
                                        std::to_string(dim) + " monomials, limit " +
                                        std::to_string(monomial_limit));

    std::vector<Polynomial> to_quotient;
    for (int i = 0; i < 7; ++i)
        to_quotient.push_back(var(p, i));
    to_quotient.push_back(-sum_vars(p, {0, 1, 2, 3, 4, 5, 6}));
    const SymbolTable s = symbols_at(p, to_quotient);
    const SymbolTable rs = symbols_at(p, reflected(to_quotient, s.tau));

    // Partitions of k into parts 2..8, largest part first.
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    std::function<void(int, int)> gen = [&](int rest, int max_part) {
        if (rest == 0) {
            parts.push_back(cur);
            return;
        }
        for (int q = std::min(rest, max_part); q >= 2; --q) {
            cur.push_back(q);
            gen(rest - q, q);
            cur.pop_back();
        }
    };
    gen(k, 8);

    OracleResult res;
    res.degree = degree;
    res.basis_size = parts.size();
    std::map<std::uint64_t, std::size_t> row_of;
    std::vector<std::vector<Polynomial::Term>> columns;
    const auto &c_q = s.c;
    const auto &rho_c = rs.c;
    for (const auto &part : parts) {
        Polynomial m = Polynomial::constant(p, kTorusRank, 1), rm = m;
        std::string name;
        for (int q : part) {
            m = m * c_q[q];
            rm = rm * rho_c[q];
            name += (name.empty() ? "c" : "*c") + std::to_string(q);
        }
        res.basis.push_back(name);
        const Polynomial d = rm - m;
        for (const auto &[mono, v] : d.terms())
            row_of.emplace(mono, 0);
        columns.push_back(d.terms());
    }
    std::size_t r = 0;
    for (auto &[mono, idx] : row_of)
        idx = r++;
    res.monomials = row_of.size();

    // Dense matrix rows x cols, reduced row echelon form with left-to-right pivots.
    const std::size_t ncols = columns.size();
    std::vector<std::vector<std::uint32_t>> mat(row_of.size(), std::vector<std::uint32_t>(ncols, 0));
    for (std::size_t j = 0; j < ncols; ++j)
        for (const auto &[mono, v] : columns[j])
            mat[row_of[mono]][j] = v;
    std::vector<int> pivot_col;
    std::size_t prow = 0;
    for (std::size_t j = 0; j < ncols && prow < mat.size(); ++j) {
        std::size_t sel = prow;
        while (sel < mat.size() && mat[sel][j] == 0)
            ++sel;
        if (sel == mat.size())
            continue;
        std::swap(mat[sel], mat[prow]);
        const std::uint64_t inv = mod_inverse(mat[prow][j], p);
        for (auto &x : mat[prow])
            x = static_cast<std::uint32_t>(x * inv % p);
        for (std::size_t i = 0; i < mat.size(); ++i) {
            if (i == prow || mat[i][j] == 0)
                continue;
            const std::uint64_t f = mat[i][j];
            for (std::size_t c = 0; c < ncols; ++c)
                mat[i][c] = static_cast<std::uint32_t>((mat[i][c] + (p - f) * mat[prow][c]) % p);
        }
        pivot_col.push_back(static_cast<int>(j));
        ++prow;
    }
    std::vector<bool> is_pivot(ncols, false);
    for (int j : pivot_col)
        is_pivot[j] = true;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<std::uint32_t> v(ncols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = mod_reduce(-static_cast<long>(mat[i][f]), p);
        res.kernel.push_back(std::move(v));
    }
    res.kernel_dim = res.kernel.size();
    // parts[0] is the single part {k}, i.e. c2, c6 or c8.
    res.hits_generator = std::any_of(res.kernel.begin(), res.kernel.end(),
                                     [](const auto &v) { return v[0] != 0; });
    return res;
}

FiReport verify_fi_no_splitting() {
    constexpr int p = 5;
    FiReport rep;
    const Polynomial f4 = Polynomial::variable(p, 2, 0), f8p = Polynomial::variable(p, 2, 1);
    const std::vector<std::string> names{"f4", "f8'"};
    rep.ok = true;
    for (int a = 1; a < p; ++a)
        for (int b = 0; b < p; ++b) {
            const Polynomial f8 = f8p.scaled(a) + (f4 * f4).scaled(b);
            const Polynomial rel = f4.pow(4) - (f4 * f4 * f8).scaled(2) - f8 * f8;
            FiSubstitution sub;
            sub.a = a;
            sub.b = b;
            sub.splits = !(rel.involves(0) && rel.involves(1));
            sub.mixed = std::any_of(rel.terms().begin(), rel.terms().end(), [](const auto &t) {
                const auto e = Polynomial::unpack(t.first);
                return e[0] > 0 && e[1] > 0;
            });
            sub.result = rel.to_string(names);
            rep.ok = rep.ok && !sub.splits;
            rep.cases.push_back(std::move(sub));
        }

    // f12 = 3f4^3 - f4f8 from f4^3 - 2f4f8 - 2f12, then 2(f4f12 - 3f8^2) is the relation above.
    const Polynomial g4 = Polynomial::variable(p, 3, 0), g8 = Polynomial::variable(p, 3, 1),
                     g12 = Polynomial::variable(p, 3, 2);
    const Polynomial r12 = g4.pow(3) - (g4 * g8).scaled(2) - g12.scaled(2);
    const Polynomial r16 = g4 * g12 - (g8 * g8).scaled(3);
    const Polynomial f12 = g4.pow(3).scaled(3) - g4 * g8;
    const std::vector<Polynomial> solve{g4, g8, f12};
    const Polynomial target = g4.pow(4) - (g4 * g4 * g8).scaled(2) - g8 * g8;
    rep.relations_ok = r12.substitute(solve).is_zero() && r16.substitute(solve).scaled(2) == target;
    rep.ok = rep.ok && rep.relations_ok;
    return rep;
}

} // namespace qrloop
