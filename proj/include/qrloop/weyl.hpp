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

#include <qrloop/polynomial.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace qrloop {

// Polynomials in t1..t8 (variables 0..7) over F_p.
constexpr int kTorusRank = 8;

Polynomial elem_sym(int k, const std::vector<int> &vars, int p, int nvars = kTorusRank);

struct SymbolTable {
    int p = 0;
    std::vector<Polynomial> a; // a[0..4], elementary symmetric in t1..t4
    std::vector<Polynomial> b; // b[0..4], in t5..t8
    std::vector<Polynomial> c; // c[0..8], in t1..t8
    Polynomial tau;            // (a1 - b1) / 4
    Polynomial x4;
    Polynomial x12;
    Polynomial x16;
};

// Requires p >= 7.
SymbolTable make_symbols(int p);

// t_i -> t_i - tau for i <= 4, t_i -> t_i + tau for i >= 5.
Polynomial reflection_rho(const Polynomial &f, int p);

// Two complementary coordinate systems in which tau is a coordinate.
enum class Complement { first, second };

struct IdentityCheck {
    std::string name;
    bool ok = false;
    int tau_order = -1; // -1 when the difference vanishes
    int required = 0;   // 0 means exact
    std::string residual;
};

struct VerifyReport {
    bool ok = false;
    std::vector<IdentityCheck> checks;
};

// The displayed expansions of rho(c_i), in the ring modulo c1.
VerifyReport verify_appendix_table(int p, Complement basis = Complement::first);

// rho(x) - x in (a1) + (tau^2) for x4, x12 and x16.
VerifyReport verify_generator_formulas(int p, Complement basis = Complement::first);

// Same membership test for an arbitrary candidate in the free ring.
IdentityCheck first_order_invariance(const std::string &name, const Polynomial &x, int p,
                                     Complement basis = Complement::first);

struct OracleResult {
    int degree = 0;
    bool hits_generator = false;
    std::size_t basis_size = 0;
    std::size_t kernel_dim = 0;
    std::size_t monomials = 0;
    std::vector<std::string> basis;            // c-monomials, e.g. "c2*c4"
    std::vector<std::vector<std::uint32_t>> kernel;
};

constexpr std::size_t kOracleMonomialLimit = 20000;

/**
 * @brief Kernel of (rho - id) on the degree-d part of F_p[c2..c8] modulo c1.
 *
 * degree is the cohomological degree, one of 4, 12, 16. Throws
 * Errc::dimension_limit when the t-degree piece exceeds monomial_limit.
 */
OracleResult invariant_generator_oracle(int p, int degree,
                                        std::size_t monomial_limit = kOracleMonomialLimit);

struct FiSubstitution {
    int a = 0;
    int b = 0;
    bool splits = false; // result lies in F5[f4] or in F5[f8']
    bool mixed = false;  // some monomial involves both variables
    std::string result;
};

struct FiReport {
    bool ok = false;
    bool relations_ok = false;
    std::vector<FiSubstitution> cases;
};

FiReport verify_fi_no_splitting();

} // namespace qrloop
