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
#include <qrloop/polynomial.hpp>

#include <algorithm>
#include <unordered_map>

namespace qrloop {

std::uint32_t mod_reduce(long a, int p) {
    long r = a % p;
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

std::uint32_t mod_inverse(long a, int p) {
    const std::uint32_t x = mod_reduce(a, p);
    if (x == 0)
        fail(Errc::contract, std::to_string(a) + " is not invertible mod " + std::to_string(p));
    // Fermat: x^(p-2)
    std::uint64_t result = 1, base = x;
    for (int e = p - 2; e > 0; e >>= 1) {
        if (e & 1)
            result = result * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

Polynomial::Polynomial(int prime, int nvars) : p_(prime), n_(nvars) {
    if (nvars < 1 || nvars > kMaxVars)
        fail(Errc::contract, "polynomials support 1..8 variables");
    if (!is_prime(prime))
        fail(Errc::prime, "coefficient field needs a prime, got " + std::to_string(prime));
}

Polynomial Polynomial::constant(int prime, int nvars, long c) {
    Polynomial f(prime, nvars);
    if (const auto v = mod_reduce(c, prime))
        f.terms_.push_back({0, v});
    return f;
}

Polynomial Polynomial::variable(int prime, int nvars, int index) {
    if (index < 0 || index >= nvars)
        fail(Errc::contract, "variable index out of range");
    Polynomial f(prime, nvars);
    f.terms_.push_back({std::uint64_t{1} << (8 * index), 1});
    return f;
}

Exponents Polynomial::unpack(std::uint64_t mono) {
    Exponents e{};
    for (int i = 0; i < kMaxVars; ++i)
        e[i] = static_cast<int>((mono >> (8 * i)) & 0xff);
    return e;
}

std::uint64_t Polynomial::pack(const Exponents &e) {
    std::uint64_t m = 0;
    for (int i = 0; i < kMaxVars; ++i) {
        if (e[i] < 0 || e[i] > 255)
            fail(Errc::contract, "exponent out of range");
        m |= static_cast<std::uint64_t>(e[i]) << (8 * i);
    }
    return m;
}

Polynomial Polynomial::from_unsorted(int p, int n, std::vector<Term> terms) {
    Polynomial f(p, n);
    std::sort(terms.begin(), terms.end());
    for (const auto &t : terms) {
        if (!f.terms_.empty() && f.terms_.back().first == t.first)
            f.terms_.back().second = (f.terms_.back().second + t.second) % p;
        else
            f.terms_.push_back(t);
        if (f.terms_.back().second == 0)
            f.terms_.pop_back();
    }
    return f;
}

void Polynomial::check_compatible(const Polynomial &o) const {
    if (p_ != o.p_ || n_ != o.n_)
        fail(Errc::contract, "polynomials from different rings");
}

Polynomial Polynomial::operator+(const Polynomial &o) const {
    check_compatible(o);
    Polynomial f(p_, n_);
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
            f.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
            f.terms_.push_back(o.terms_[j++]);
        } else {
            const auto c = (terms_[i].second + o.terms_[j].second) % p_;
            if (c)
                f.terms_.push_back({terms_[i].first, c});
            ++i;
            ++j;
        }
    }
    return f;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::operator-(const Polynomial &o) const { return *this + (-o); }

Polynomial Polynomial::scaled(long c) const {
    const std::uint64_t k = mod_reduce(c, p_);
    Polynomial f(p_, n_);
    if (k == 0)
        return f;
    f.terms_.reserve(terms_.size());
    for (const auto &[m, v] : terms_)
        f.terms_.push_back({m, static_cast<std::uint32_t>(v * k % p_)});
    return f;
}

Polynomial Polynomial::operator*(const Polynomial &o) const {
    check_compatible(o);
    std::unordered_map<std::uint64_t, std::uint64_t> acc;
    acc.reserve(terms_.size() * o.terms_.size() / 2 + 1);
    for (const auto &[ma, va] : terms_)
        for (const auto &[mb, vb] : o.terms_) {
            auto &slot = acc[ma + mb];
            slot = (slot + static_cast<std::uint64_t>(va) * vb) % p_;
        }
    std::vector<Term> ts;
    ts.reserve(acc.size());
    for (const auto &[m, v] : acc)
        if (v)
            ts.push_back({m, static_cast<std::uint32_t>(v)});
    std::sort(ts.begin(), ts.end());
    Polynomial f(p_, n_);
    f.terms_ = std::move(ts);
    return f;
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0)
        fail(Errc::contract, "negative power");
    Polynomial result = constant(p_, n_, 1), base = *this;
    for (; k > 0; k >>= 1) {
        if (k & 1)
            result = result * base;
        if (k > 1)
            base = base * base;
    }
    return result;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto &[m, v] : terms_) {
        const auto e = unpack(m);
        int s = 0;
        for (int x : e)
            s += x;
        d = std::max(d, s);
    }
    return d;
}

bool Polynomial::homogeneous() const {
    int d = -1;
    for (const auto &[m, v] : terms_) {
        int s = 0;
        for (int x : unpack(m))
            s += x;
        if (d >= 0 && s != d)
            return false;
        d = s;
    }
    return true;
}

int Polynomial::min_degree_in(int var) const {
    int d = -1;
    for (const auto &[m, v] : terms_) {
        const int e = unpack(m)[var];
        d = d < 0 ? e : std::min(d, e);
    }
    return d;
}

bool Polynomial::involves(int var) const {
    for (const auto &[m, v] : terms_)
        if (unpack(m)[var] > 0)
            return true;
    return false;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial> &images) const {
    if (static_cast<int>(images.size()) != n_)
        fail(Errc::contract, "substitution needs one image per variable");
    const int tp = images.front().prime();
    const int tn = images.front().nvars();
    if (tp != p_)
        fail(Errc::contract, "substitution across coefficient fields");
    // Cache powers of each image.
    std::vector<std::vector<Polynomial>> powers(n_);
    std::vector<Term> acc;
    for (const auto &[m, v] : terms_) {
        const auto e = unpack(m);
        Polynomial term = constant(tp, tn, v);
        for (int i = 0; i < n_; ++i) {
            if (e[i] == 0)
                continue;
            auto &pw = powers[i];
            if (pw.empty())
                pw.push_back(constant(tp, tn, 1));
            while (static_cast<int>(pw.size()) <= e[i])
                pw.push_back(pw.back() * images[i]);
            term = term * pw[e[i]];
        }
        acc.insert(acc.end(), term.terms_.begin(), term.terms_.end());
    }
    return from_unsorted(tp, tn, std::move(acc));
}

std::string Polynomial::to_string(const std::vector<std::string> &names) const {
    if (terms_.empty())
        return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto e = unpack(it->first);
        if (!s.empty())
            s += " + ";
        std::string mono;
        for (int i = 0; i < n_; ++i) {
            if (!e[i])
                continue;
            if (!mono.empty())
                mono += "*";
            mono += i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i);
            if (e[i] > 1)
                mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            s += std::to_string(it->second);
        else if (it->second == 1)
            s += mono;
        else
            s += std::to_string(it->second) + "*" + mono;
    }
    return s;
}

} // namespace qrloop
