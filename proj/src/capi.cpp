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

#include <qrloop/catalog.hpp>
#include <qrloop/error.hpp>
#include <qrloop/exponent.hpp>
#include <qrloop/fibre.hpp>
#include <qrloop/homotopy.hpp>
#include <qrloop/tables.hpp>
#include <qrloop/weyl.hpp>

#include <charconv>
#include <new>
#include <sstream>

struct qrl_context {
    std::string last_error;
};

struct qrl_result {
    std::string text;
};

namespace {

using nlohmann::json;
using namespace qrloop;

// Output of an operation, possibly alongside a non-OK status.
struct Outcome {
    qrl_status status = QRL_OK;
    std::string text;
    std::string message;
};

qrl_status status_of(Errc code) {
    switch (code) {
    case Errc::undetermined: return QRL_UNDETERMINED;
    case Errc::not_quasi_regular: return QRL_NOT_QUASI_REGULAR;
    case Errc::contract:
    case Errc::configuration: return QRL_INTERNAL;
    default: return QRL_INVALID_INPUT;
    }
}

Style style_of(qrl_format f) { return f == QRL_FORMAT_MARKDOWN ? Style::markdown : Style::plain; }

std::string join(const std::vector<int> &v, const char *sep = " ") {
    std::string s;
    for (int x : v)
        s += (s.empty() ? "" : sep) + std::to_string(x);
    return s;
}

CaseParams parse_params(const char *text) {
    CaseParams params;
    if (!text)
        return params;
    std::string_view rest(text);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos)
            fail(Errc::parse, "parameter '" + std::string(item) + "' is not of the form key=value");
        const auto key = item.substr(0, eq);
        const auto value = item.substr(eq + 1);
        int v = 0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
        if (ec != std::errc{} || ptr != value.data() + value.size())
            fail(Errc::parse, "parameter value '" + std::string(value) + "' is not an integer");
        if (key == "n")
            params.n = v;
        else if (key == "m")
            params.m = v;
        else
            fail(Errc::parse, "unknown parameter '" + std::string(key) + "'");
    }
    return params;
}

std::string params_text(const CaseParams &p) {
    std::string s;
    if (p.n)
        s += "n=" + std::to_string(*p.n);
    if (p.m)
        s += (s.empty() ? "" : ",") + std::string("m=") + std::to_string(*p.m);
    return s;
}

json exponent_json(const ExponentInterval &e) {
    return {{"lo", e.lo}, {"hi", e.hi}, {"exact", e.exact()}, {"text", render(e)}};
}

json case_header(const char *type, const CaseParams &params, int prime) {
    return {{"case", type ? type : ""}, {"params", params_text(params)}, {"prime", prime}};
}

template <class F>
qrl_status run(qrl_context *ctx, qrl_result **out, F &&body) {
    if (!ctx || !out)
        return QRL_INVALID_INPUT;
    *out = nullptr;
    ctx->last_error.clear();
    try {
        Outcome o = body();
        if (!o.message.empty())
            ctx->last_error = o.message;
        *out = new qrl_result{std::move(o.text)};
        return o.status;
    } catch (const Error &e) {
        ctx->last_error = std::string(errc_name(e.code())) + ": " + e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc &) {
        ctx->last_error = "out of memory";
    } catch (const std::exception &e) {
        ctx->last_error = std::string("internal: ") + e.what();
    }
    return QRL_INTERNAL;
}

// Loop-space style operations turn undetermined cases into a reported outcome.
template <class F>
Outcome with_undetermined(const char *type, const CaseParams &params, int prime, qrl_format format, F &&body) {
    try {
        return body();
    } catch (const Error &e) {
        if (e.code() != Errc::undetermined)
            throw;
        Outcome o{QRL_UNDETERMINED, {}, e.what()};
        if (format == QRL_FORMAT_JSON) {
            json j = case_header(type, params, prime);
            j["status"] = "undetermined";
            j["message"] = e.what();
            o.text = j.dump(2);
        } else {
            o.text = std::string("undetermined: ") + e.what();
        }
        return o;
    }
}

std::string loop_text(const LoopResult &r, const ExponentReport &e, qrl_format format) {
    if (format == QRL_FORMAT_JSON) {
        json j = case_header(r.type.c_str(), r.params, r.prime);
        j["status"] = "ok";
        j["space"] = r.space;
        j["recipe"] = std::string(to_string(r.recipe));
        j["expression"] = to_json(r.expr);
        j["text"] = render(r.expr, Style::ascii);
        j["exponent"] = exponent_json(e.interval);
        j["top_degree"] = e.top_degree;
        j["rational_degrees"] = rational_homotopy_degrees(r);
        j["consumed"] = r.consumed;
        j["citations"] = r.citations;
        return j.dump(2);
    }
    std::ostringstream os;
    os << render(r.expr, style_of(format)) << " | " << render(e.interval) << "\n";
    os << "space: " << r.space << "\n";
    os << "recipe: " << to_string(r.recipe) << "\n";
    os << "rational degrees: " << join(rational_homotopy_degrees(r)) << "\n";
    os << "consumed degrees: " << join(r.consumed) << "\n";
    for (std::size_t i = 0; i < r.citations.size(); ++i)
        os << "[" << i + 1 << "] " << r.citations[i] << "\n";
    return os.str();
}

std::string check_lines(const VerifyReport &rep, const char *prefix) {
    std::string s;
    for (const auto &c : rep.checks) {
        s += std::string(c.ok ? "PASS " : "FAIL ") + prefix + c.name;
        if (c.tau_order >= 0)
            s += "  (tau order " + std::to_string(c.tau_order) + ")";
        s += "\n";
        if (!c.ok)
            s += "  residual: " + c.residual + "\n";
    }
    return s;
}

json check_json(const VerifyReport &rep) {
    json arr = json::array();
    for (const auto &c : rep.checks) {
        json j = {{"name", c.name}, {"ok", c.ok}, {"tau_order", c.tau_order}, {"required", c.required}};
        if (!c.ok)
            j["residual"] = c.residual;
        arr.push_back(std::move(j));
    }
    return arr;
}

} // namespace

extern "C" {

const char *qrl_version(void) { return "0.1.0"; }

const char *qrl_status_name(qrl_status status) {
    switch (status) {
    case QRL_OK: return "ok";
    case QRL_INTERNAL: return "internal";
    case QRL_UNDETERMINED: return "undetermined";
    case QRL_INVALID_INPUT: return "invalid-input";
    case QRL_NOT_QUASI_REGULAR: return "not-quasi-regular";
    case QRL_VERIFICATION_FAILED: return "verification-failed";
    }
    return "unknown";
}

qrl_status qrl_context_new(qrl_context **out) {
    if (!out)
        return QRL_INVALID_INPUT;
    *out = new (std::nothrow) qrl_context{};
    return *out ? QRL_OK : QRL_INTERNAL;
}

void qrl_context_free(qrl_context *ctx) { delete ctx; }

const char *qrl_last_error(const qrl_context *ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

const char *qrl_result_text(const qrl_result *result) { return result ? result->text.c_str() : ""; }

void qrl_result_free(qrl_result *result) { delete result; }

qrl_status qrl_decompose_group(qrl_context *ctx, const char *group, int prime, qrl_format format,
                               qrl_result **out) {
    return run(ctx, out, [&] {
        if (!group)
            fail(Errc::parse, "missing group");
        require_prime(prime);
        const GroupId g = parse_group(group);
        const Decomposition d = Catalog::instance().group_decomposition(g, prime);
        Outcome o;
        if (format == QRL_FORMAT_JSON) {
            o.text = json{{"group", to_string(g)},
                          {"prime", prime},
                          {"status", "ok"},
                          {"expression", to_json(d.expr)},
                          {"text", render(d.expr, Style::ascii)},
                          {"extension", d.extension},
                          {"citations", d.citations}}
                         .dump(2);
        } else {
            o.text = render(d.expr, style_of(format)) + "\n";
            for (std::size_t i = 0; i < d.citations.size(); ++i)
                o.text += "[" + std::to_string(i + 1) + "] " + d.citations[i] + "\n";
        }
        return o;
    });
}

qrl_status qrl_loop_space(qrl_context *ctx, const char *case_type, const char *params, int prime,
                          qrl_format format, qrl_result **out) {
    return run(ctx, out, [&] {
        const CaseParams cp = parse_params(params);
        return with_undetermined(case_type, cp, prime, format, [&] {
            if (!case_type)
                fail(Errc::parse, "missing case");
            const LoopResult r = loop_decomposition(case_type, cp, prime);
            return Outcome{QRL_OK, loop_text(r, exponent_report(r), format), {}};
        });
    });
}

qrl_status qrl_exponent(qrl_context *ctx, const char *case_type, const char *params, int prime, qrl_format format,
                        qrl_result **out) {
    return run(ctx, out, [&] {
        const CaseParams cp = parse_params(params);
        return with_undetermined(case_type, cp, prime, format, [&] {
            if (!case_type)
                fail(Errc::parse, "missing case");
            const LoopResult r = loop_decomposition(case_type, cp, prime);
            const ExponentReport e = exponent_report(r);
            Outcome o;
            if (format == QRL_FORMAT_JSON) {
                json j = case_header(case_type, cp, prime);
                j["status"] = "ok";
                j["exponent"] = exponent_json(e.interval);
                j["top_degree"] = e.top_degree;
                o.text = j.dump(2);
            } else {
                o.text = render(e.interval) + "\ntop degree: " + std::to_string(e.top_degree) + "\n";
            }
            return o;
        });
    });
}

qrl_status qrl_exponent_expr(qrl_context *ctx, const char *expression, int prime, qrl_format format,
                             qrl_result **out) {
    return run(ctx, out, [&] {
        if (!expression)
            fail(Errc::parse, "missing expression");
        require_prime(prime);
        const SpaceExpr x = parse_space(expression, prime);
        const ExponentInterval e = exponent(x, prime);
        Outcome o;
        if (format == QRL_FORMAT_JSON)
            o.text = json{{"expression", to_json(x)},
                          {"text", render(x, Style::ascii)},
                          {"prime", prime},
                          {"status", "ok"},
                          {"exponent", exponent_json(e)}}
                         .dump(2);
        else
            o.text = render(e) + "\n";
        return o;
    });
}

qrl_status qrl_rational(qrl_context *ctx, const char *case_type, const char *params, int prime, qrl_format format,
                        qrl_result **out) {
    return run(ctx, out, [&] {
        const CaseParams cp = parse_params(params);
        return with_undetermined(case_type, cp, prime, format, [&] {
            if (!case_type)
                fail(Errc::parse, "missing case");
            const LoopResult r = loop_decomposition(case_type, cp, prime);
            const auto degrees = rational_homotopy_degrees(r);
            const BalanceReport bal = verify_rational_balance(r);
            Outcome o;
            if (format == QRL_FORMAT_JSON) {
                json j = case_header(case_type, cp, prime);
                j["status"] = "ok";
                j["rational_degrees"] = degrees;
                j["balanced"] = bal.ok;
                if (!bal.ok)
                    j["balance_diff"] = bal.diff;
                o.text = j.dump(2);
            } else {
                o.text = join(degrees) + "\n";
                o.text += bal.ok ? "balance: ok\n" : "balance: FAILED " + bal.diff + "\n";
            }
            return o;
        });
    });
}

qrl_status qrl_pi(qrl_context *ctx, const char *space, int m, int t, int prime, qrl_format format,
                  qrl_result **out) {
    return run(ctx, out, [&] {
        const std::string which = space ? space : "";
        if (which != "sphere" && which != "B")
            fail(Errc::parse, "space must be 'sphere' or 'B'");
        if (m < 2)
            fail(Errc::out_of_range, "m must be at least 2");
        const RangeQuery q{m, t, prime};
        const GroupDesc g = which == "sphere" ? pi_sphere(q) : pi_B(q);
        const int bottom = 2 * m - 1;
        const std::string target = which == "sphere"
                                       ? "S^" + std::to_string(bottom)
                                       : "B(" + std::to_string(bottom) + "," + std::to_string(bottom + 2 * prime - 2) + ")";
        Outcome o;
        if (format == QRL_FORMAT_JSON)
            o.text = json{{"space", target}, {"degree", bottom + t}, {"prime", prime}, {"group", std::string(to_string(g))}}
                         .dump(2);
        else
            o.text = "π_" + std::to_string(bottom + t) + "(" + target + ") = " + std::string(to_string(g)) + "\n";
        return o;
    });
}

qrl_status qrl_tables(qrl_context *ctx, const char *which, int max_n, qrl_format format, qrl_result **out) {
    return run(ctx, out, [&] {
        const std::string w = which ? which : "";
        Outcome o;
        if (w == "exceptional") {
            o.text = format == QRL_FORMAT_JSON ? exceptional_table_json().dump(2) : exceptional_table_markdown();
        } else if (w == "classical") {
            if (max_n < 1 || max_n > 12)
                fail(Errc::out_of_range, "max-n must be in 1..12");
            SweepOptions opts;
            opts.max_n = max_n;
            o.text = format == QRL_FORMAT_JSON ? classical_table_json(opts).dump(2) : classical_table_markdown(opts);
        } else {
            fail(Errc::parse, "table must be 'classical' or 'exceptional'");
        }
        return o;
    });
}

qrl_status qrl_verify_appendix(qrl_context *ctx, int prime, qrl_format format, qrl_result **out) {
    return run(ctx, out, [&] {
        const VerifyReport t1 = verify_appendix_table(prime, Complement::first);
        const VerifyReport t2 = verify_appendix_table(prime, Complement::second);
        const VerifyReport g1 = verify_generator_formulas(prime, Complement::first);
        const VerifyReport g2 = verify_generator_formulas(prime, Complement::second);
        std::vector<OracleResult> oracle;
        for (int d : {4, 12, 16})
            oracle.push_back(invariant_generator_oracle(prime, d));
        bool ok = t1.ok && t2.ok && g1.ok && g2.ok;
        for (const auto &r : oracle)
            ok = ok && r.hits_generator;

        Outcome o;
        o.status = ok ? QRL_OK : QRL_VERIFICATION_FAILED;
        if (!ok)
            o.message = "E7 reflection verification failed at p=" + std::to_string(prime);
        if (format == QRL_FORMAT_JSON) {
            json orc = json::array();
            for (const auto &r : oracle)
                orc.push_back({{"degree", r.degree},
                               {"hits_generator", r.hits_generator},
                               {"basis", r.basis},
                               {"kernel_dim", r.kernel_dim},
                               {"monomials", r.monomials}});
            o.text = json{{"prime", prime},
                          {"ok", ok},
                          {"table", {{"first", check_json(t1)}, {"second", check_json(t2)}}},
                          {"generators", {{"first", check_json(g1)}, {"second", check_json(g2)}}},
                          {"oracle", orc}}
                         .dump(2);
        } else {
            o.text = check_lines(t1, "") + check_lines(t2, "[second basis] ") + check_lines(g1, "") +
                     check_lines(g2, "[second basis] ");
            for (const auto &r : oracle)
                o.text += std::string(r.hits_generator ? "PASS " : "FAIL ") + "oracle degree " +
                          std::to_string(r.degree) + ": kernel dim " + std::to_string(r.kernel_dim) + " of " +
                          std::to_string(r.basis_size) + "\n";
            o.text += ok ? "appendix-e7: ok\n" : "appendix-e7: FAILED\n";
        }
        return o;
    });
}

qrl_status qrl_verify_fi(qrl_context *ctx, qrl_format format, qrl_result **out) {
    return run(ctx, out, [&] {
        const FiReport rep = verify_fi_no_splitting();
        Outcome o;
        o.status = rep.ok ? QRL_OK : QRL_VERIFICATION_FAILED;
        if (!rep.ok)
            o.message = "FI non-splitting check failed";
        if (format == QRL_FORMAT_JSON) {
            json cases = json::array();
            for (const auto &c : rep.cases)
                cases.push_back({{"a", c.a}, {"b", c.b}, {"splits", c.splits}, {"mixed", c.mixed}, {"result", c.result}});
            o.text = json{{"ok", rep.ok}, {"relations_ok", rep.relations_ok}, {"substitutions", cases}}.dump(2);
        } else {
            for (const auto &c : rep.cases)
                o.text += "a=" + std::to_string(c.a) + " b=" + std::to_string(c.b) + ": " + c.result +
                          (c.splits ? "  SPLITS\n" : "  does not split\n");
            o.text += std::string("relations: ") + (rep.relations_ok ? "ok" : "FAILED") + "\n";
            o.text += rep.ok ? "fi-nonsplit: ok\n" : "fi-nonsplit: FAILED\n";
        }
        return o;
    });
}

} // extern "C"
