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

#include "int_expr.hpp"

#include <qrloop/error.hpp>

#include <cctype>

namespace qrloop {

namespace {

class Parser {
public:
    Parser(std::string_view s, const IntEnv &env) : s_(s), env_(env) {}

    long run() {
        long v = logical_or();
        skip();
        if (i_ != s_.size())
            error("trailing input");
        return v;
    }

private:
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }
    bool accept(std::string_view tok) {
        skip();
        if (s_.substr(i_, tok.size()) == tok) {
            i_ += tok.size();
            return true;
        }
        return false;
    }
    [[noreturn]] void error(const std::string &why) const {
        fail(Errc::parse, "bad integer expression '" + std::string(s_) + "': " + why);
    }

    long logical_or() {
        long v = logical_and();
        while (accept("||")) {
            long r = logical_and();
            v = (v || r) ? 1 : 0;
        }
        return v;
    }
    long logical_and() {
        long v = comparison();
        while (accept("&&")) {
            long r = comparison();
            v = (v && r) ? 1 : 0;
        }
        return v;
    }
    long comparison() {
        long v = additive();
        for (;;) {
            if (accept("<="))
                v = v <= additive();
            else if (accept(">="))
                v = v >= additive();
            else if (accept("=="))
                v = v == additive();
            else if (accept("!="))
                v = v != additive();
            else if (accept("<"))
                v = v < additive();
            else if (accept(">"))
                v = v > additive();
            else
                return v;
        }
    }
    long additive() {
        long v = term();
        for (;;) {
            if (accept("+"))
                v += term();
            else if (accept("-"))
                v -= term();
            else
                return v;
        }
    }
    long term() {
        long v = unary();
        for (;;) {
            if (accept("*")) {
                v *= unary();
            } else if (accept("/")) {
                long d = unary();
                if (d == 0)
                    error("division by zero");
                long q = v / d;
                if ((v % d != 0) && ((v < 0) != (d < 0)))
                    --q;
                v = q;
            } else {
                return v;
            }
        }
    }
    long unary() {
        if (accept("-"))
            return -unary();
        return primary();
    }
    long primary() {
        skip();
        if (accept("(")) {
            long v = logical_or();
            if (!accept(")"))
                error("expected ')'");
            return v;
        }
        if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            long v = 0;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                v = v * 10 + (s_[i_++] - '0');
            return v;
        }
        std::size_t start = i_;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
            ++i_;
        if (start == i_)
            error("expected a value");
        auto name = s_.substr(start, i_ - start);
        auto it = env_.find(name);
        if (it == env_.end())
            error("unbound variable '" + std::string(name) + "'");
        return it->second;
    }

    std::string_view s_;
    const IntEnv &env_;
    std::size_t i_ = 0;
};

} // namespace

long eval_int(std::string_view text, const IntEnv &env) { return Parser(text, env).run(); }

bool eval_condition(std::string_view text, const IntEnv &env) { return eval_int(text, env) != 0; }

} // namespace qrloop
