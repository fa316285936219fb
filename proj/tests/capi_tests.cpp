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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qrloop.h>

#include <json.hpp>

#include <string>
#include <thread>
#include <vector>

namespace {

struct Call {
    qrl_context *ctx = nullptr;
    qrl_result *result = nullptr;
    qrl_status status = QRL_INTERNAL;

    Call() { REQUIRE(qrl_context_new(&ctx) == QRL_OK); }
    ~Call() {
        qrl_result_free(result);
        qrl_context_free(ctx);
    }
    std::string text() const { return result ? qrl_result_text(result) : ""; }
    std::string first_line() const {
        const std::string t = text();
        return t.substr(0, t.find('\n'));
    }
};

} // namespace

TEST_CASE("status names and version") {
    CHECK(std::string(qrl_status_name(QRL_OK)) == "ok");
    CHECK(std::string(qrl_version()).size() > 0);
}

TEST_CASE("group decomposition through the C API") {
    Call c;
    c.status = qrl_decompose_group(c.ctx, "F4", 7, QRL_FORMAT_PLAIN, &c.result);
    CHECK(c.status == QRL_OK);
    CHECK(c.first_line() == "B(3,15) x B(11,23)");
}

TEST_CASE("not quasi-regular leaves no result") {
    Call c;
    c.status = qrl_decompose_group(c.ctx, "E8", 5, QRL_FORMAT_PLAIN, &c.result);
    CHECK(c.status == QRL_NOT_QUASI_REGULAR);
    CHECK(c.result == nullptr);
    CHECK(std::string(qrl_last_error(c.ctx)).find("not quasi-regular") != std::string::npos);
}

TEST_CASE("loop space plain and json") {
    Call c;
    c.status = qrl_loop_space(c.ctx, "FII", nullptr, 5, QRL_FORMAT_PLAIN, &c.result);
    CHECK(c.status == QRL_OK);
    CHECK(c.first_line() == "S^7 x ΩS^23 | exp = p^11");

    Call j;
    j.status = qrl_loop_space(j.ctx, "CII", "n=5,m=2", 7, QRL_FORMAT_JSON, &j.result);
    REQUIRE(j.status == QRL_OK);
    const auto doc = nlohmann::json::parse(j.text());
    CHECK(doc["status"] == "ok");
    CHECK(doc["space"].is_string());
    CHECK(doc["rational_degrees"] == nlohmann::json::array({4, 8, 15, 19}));
}

TEST_CASE("undetermined carries the obstruction") {
    Call c;
    c.status = qrl_loop_space(c.ctx, "EIX", "", 7, QRL_FORMAT_PLAIN, &c.result);
    CHECK(c.status == QRL_UNDETERMINED);
    CHECK(c.text().find("π_27(S^18) ≅ Z/7Z") != std::string::npos);
}

TEST_CASE("invalid input") {
    Call c;
    CHECK(qrl_loop_space(c.ctx, "XYZ", "", 7, QRL_FORMAT_PLAIN, &c.result) == QRL_INVALID_INPUT);
    CHECK(qrl_loop_space(c.ctx, "CII", "n=5", 7, QRL_FORMAT_PLAIN, &c.result) == QRL_INVALID_INPUT);
    CHECK(qrl_exponent_expr(c.ctx, "S^3 x", 5, QRL_FORMAT_PLAIN, &c.result) == QRL_INVALID_INPUT);
    CHECK(qrl_loop_space(c.ctx, "FII", "", 4, QRL_FORMAT_PLAIN, &c.result) == QRL_INVALID_INPUT);
    CHECK(qrl_loop_space(nullptr, "FII", "", 5, QRL_FORMAT_PLAIN, &c.result) == QRL_INVALID_INPUT);
    CHECK(qrl_loop_space(c.ctx, "FII", "", 5, QRL_FORMAT_PLAIN, nullptr) == QRL_INVALID_INPUT);
    CHECK(c.result == nullptr);
}

TEST_CASE("pi and exponent") {
    Call a;
    CHECK(qrl_pi(a.ctx, "sphere", 2, 7, 5, QRL_FORMAT_PLAIN, &a.result) == QRL_OK);
    CHECK(a.first_line() == "π_10(S^3) = Z/p");
    Call b;
    CHECK(qrl_exponent_expr(b.ctx, "S^3 x S^7 x ΩB(15,23)", 5, QRL_FORMAT_JSON, &b.result) == QRL_OK);
    const auto doc = nlohmann::json::parse(b.text());
    CHECK(doc["exponent"]["lo"] == 11);
    CHECK(doc["exponent"]["hi"] == 12);
}

TEST_CASE("verifications") {
    Call fi;
    CHECK(qrl_verify_fi(fi.ctx, QRL_FORMAT_PLAIN, &fi.result) == QRL_OK);
    Call e7;
    CHECK(qrl_verify_appendix(e7.ctx, 11, QRL_FORMAT_JSON, &e7.result) == QRL_OK);
    Call bad;
    CHECK(qrl_verify_appendix(bad.ctx, 5, QRL_FORMAT_PLAIN, &bad.result) == QRL_INVALID_INPUT);
}

TEST_CASE("concurrent calls on separate contexts") {
    const std::vector<std::pair<const char *, int>> cases{{"FII", 5}, {"EV", 11}, {"EVIII", 13}, {"G", 7},
                                                          {"EVII", 11}, {"EI", 5}, {"FI", 7}, {"EIX", 7}};
    std::vector<std::string> serial;
    for (const auto &[type, p] : cases) {
        Call c;
        c.status = qrl_loop_space(c.ctx, type, "", p, QRL_FORMAT_JSON, &c.result);
        serial.push_back(c.text());
    }

    constexpr int kThreads = 8;
    constexpr int kRounds = 25;
    std::vector<int> mismatches(kThreads, 0);
    std::vector<std::thread> pool;
    for (int t = 0; t < kThreads; ++t)
        pool.emplace_back([&, t] {
            qrl_context *ctx = nullptr;
            qrl_context_new(&ctx);
            for (int r = 0; r < kRounds; ++r)
                for (std::size_t i = 0; i < cases.size(); ++i) {
                    const std::size_t k = (i + t) % cases.size();
                    qrl_result *res = nullptr;
                    qrl_loop_space(ctx, cases[k].first, "", cases[k].second, QRL_FORMAT_JSON, &res);
                    if (!res || serial[k] != qrl_result_text(res))
                        ++mismatches[t];
                    qrl_result_free(res);
                }
            qrl_context_free(ctx);
        });
    for (auto &th : pool)
        th.join();
    for (int t = 0; t < kThreads; ++t)
        CHECK(mismatches[t] == 0);
}
