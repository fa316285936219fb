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

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qrloop {

constexpr int kMaxVars = 8;

using Exponents = std::array<int, kMaxVars>;

/**
 * @brief Sparse polynomial over F_p in at most eight variables.
 *
 * Monomials are packed one byte per variable, so each exponent must stay
 * below 256. Terms are kept sorted by packed monomial with no zero coefficients.
 */
class Polynomial {
public:
    using Term = std::pair<std::uint64_t, std::uint32_t>;

    Polynomial(int prime, int nvars);

    static Polynomial constant(int prime, int nvars, long c);
    static Polynomial variable(int prime, int nvars, int index);

    int prime() const noexcept { return p_; }
    int nvars() const noexcept { return n_; }
    const std::vector<Term> &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    static Exponents unpack(std::uint64_t mono);
    static std::uint64_t pack(const Exponents &e);

    Polynomial operator+(const Polynomial &o) const;
    Polynomial operator-(const Polynomial &o) const;
    Polynomial operator*(const Polynomial &o) const;
    Polynomial operator-() const;
    Polynomial scaled(long c) const;
    Polynomial pow(int k) const;

    // -1 for the zero polynomial.
    int total_degree() const;
    bool homogeneous() const;
    // Smallest exponent of the variable over all terms; -1 for zero.
    int min_degree_in(int var) const;
    bool involves(int var) const;

    // Ring map sending variable i to images[i]; images share a target ring.
    Polynomial substitute(const std::vector<Polynomial> &images) const;

    std::string to_string(const std::vector<std::string> &names) const;

    friend bool operator==(const Polynomial &a, const Polynomial &b) {
        return a.p_ == b.p_ && a.n_ == b.n_ && a.terms_ == b.terms_;
    }

private:
    static Polynomial from_unsorted(int p, int n, std::vector<Term> terms);
    void check_compatible(const Polynomial &o) const;

    int p_;
    int n_;
    std::vector<Term> terms_;
};

std::uint32_t mod_inverse(long a, int p);
std::uint32_t mod_reduce(long a, int p);

} // namespace qrloop
