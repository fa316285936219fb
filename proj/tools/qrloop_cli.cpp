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

#include <qrloop.h>

#include <CLI11.hpp>

#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <string>

namespace {

struct ContextDeleter {
    void operator()(qrl_context *c) const { qrl_context_free(c); }
};
struct ResultDeleter {
    void operator()(qrl_result *r) const { qrl_result_free(r); }
};

int exit_code(qrl_status s) {
    switch (s) {
    case QRL_OK: return 0;
    case QRL_UNDETERMINED: return 2;
    case QRL_INVALID_INPUT:
    case QRL_NOT_QUASI_REGULAR: return 3;
    default: return 1;
    }
}

int finish(qrl_context *ctx, qrl_status s, qrl_result *raw) {
    std::unique_ptr<qrl_result, ResultDeleter> r(raw);
    if (r) {
        std::string text = qrl_result_text(r.get());
        if (!text.empty() && text.back() != '\n')
            text += '\n';
        std::fputs(text.c_str(), stdout);
    }
    if (s != QRL_OK && !r)
        std::fprintf(stderr, "error: %s\n", qrl_last_error(ctx));
    else if (s == QRL_VERIFICATION_FAILED)
        std::fprintf(stderr, "error: %s\n", qrl_last_error(ctx));
    return exit_code(s);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"p-local loop space decompositions of symmetric spaces"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", qrl_version());

    const std::map<std::string, qrl_format> formats{
        {"plain", QRL_FORMAT_PLAIN}, {"markdown", QRL_FORMAT_MARKDOWN}, {"json", QRL_FORMAT_JSON}};
    qrl_format format = QRL_FORMAT_PLAIN;
    app.add_option("--format", format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->default_str("plain");

    qrl_context *raw_ctx = nullptr;
    if (qrl_context_new(&raw_ctx) != QRL_OK) {
        std::fprintf(stderr, "error: cannot create context\n");
        return 1;
    }
    std::unique_ptr<qrl_context, ContextDeleter> holder(raw_ctx);
    qrl_context *ctx = holder.get();
    std::function<int()> action;

    std::string group, case_type, params, expr, space, which;
    int prime = 0, m = 2, t = 1, max_n = 6;

    auto *dg = app.add_subcommand("decompose-group", "p-local decomposition of a Lie group");
    dg->add_option("group", group, "e.g. SU(8), Spin(9), E7")->required();
    dg->add_option("--prime", prime)->required();
    dg->callback([&] {
        action = [&] {
            qrl_result *r = nullptr;
            const qrl_status s = qrl_decompose_group(ctx, group.c_str(), prime, format, &r);
            return finish(ctx, s, r);
        };
    });

    auto case_command = [&](const char *name, const char *help, auto fn) {
        auto *sc = app.add_subcommand(name, help);
        sc->add_option("case", case_type, "Case type, e.g. FII, CII, AI1")->required();
        sc->add_option("--params", params, "Parameters, e.g. n=5,m=2");
        sc->add_option("--prime", prime)->required();
        sc->callback([&, fn] {
            action = [&, fn] {
                qrl_result *r = nullptr;
                const qrl_status s = fn(ctx, case_type.c_str(), params.c_str(), prime, format, &r);
            return finish(ctx, s, r);
            };
        });
        return sc;
    };
    case_command("loop-space", "Homotopy type of the loop space of G/H", qrl_loop_space);
    case_command("rational", "Rational homotopy degrees of G/H", qrl_rational);

    auto *ex = app.add_subcommand("exponent", "p-primary homotopy exponent bounds");
    ex->add_option("case", case_type, "Case type");
    ex->add_option("--params", params);
    ex->add_option("--expr", expr, "Space expression instead of a case, e.g. \"S^3 x ΩS^11\"");
    ex->add_option("--prime", prime)->required();
    ex->callback([&] {
        action = [&] {
            qrl_result *r = nullptr;
            if (!expr.empty() && !case_type.empty()) {
                std::fprintf(stderr, "error: give either a case or --expr\n");
                return 3;
            }
            if (!expr.empty()) {
                const qrl_status s = qrl_exponent_expr(ctx, expr.c_str(), prime, format, &r);
                return finish(ctx, s, r);
            }
            if (case_type.empty()) {
                std::fprintf(stderr, "error: a case or --expr is required\n");
                return 3;
            }
            const qrl_status s = qrl_exponent(ctx, case_type.c_str(), params.c_str(), prime, format, &r);
            return finish(ctx, s, r);
        };
    });

    auto *pi = app.add_subcommand("pi", "Unstable homotopy groups of S^{2m-1} and B(2m-1,2m+2p-3)");
    pi->add_option("space", space)->required()->check(CLI::IsMember({"sphere", "B"}));
    pi->add_option("--m", m)->required();
    pi->add_option("--t", t, "Offset above the bottom cell")->required();
    pi->add_option("--prime", prime)->required();
    pi->callback([&] {
        action = [&] {
            qrl_result *r = nullptr;
            const qrl_status s = qrl_pi(ctx, space.c_str(), m, t, prime, format, &r);
            return finish(ctx, s, r);
        };
    });

    auto *tb = app.add_subcommand("tables", "Emit the classical sweep or the exceptional table");
    tb->add_option("which", which)->required()->check(CLI::IsMember({"classical", "exceptional"}));
    tb->add_option("--max-n", max_n, "Largest n in the classical sweep")->default_val(6);
    tb->callback([&] {
        action = [&] {
            qrl_result *r = nullptr;
            const qrl_status s = qrl_tables(ctx, which.c_str(), max_n, format, &r);
            return finish(ctx, s, r);
        };
    });

    auto *vf = app.add_subcommand("verify", "Exact polynomial verifications");
    vf->require_subcommand(1);
    auto *ap = vf->add_subcommand("appendix-e7", "Reflection expansions and invariant generators for E7");
    ap->add_option("--prime", prime)->required();
    ap->callback([&] {
        action = [&] {
            qrl_result *r = nullptr;
            const qrl_status s = qrl_verify_appendix(ctx, prime, format, &r);
            return finish(ctx, s, r);
        };
    });
    auto *fi = vf->add_subcommand("fi-nonsplit", "Non-splitting check for FI at p=5");
    fi->callback([&] {
        action = [&] {
            qrl_result *r = nullptr;
            const qrl_status s = qrl_verify_fi(ctx, format, &r);
            return finish(ctx, s, r);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }
    return action ? action() : 3;
}
