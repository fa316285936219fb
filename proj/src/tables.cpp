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

#include <qrloop/catalog.hpp>
#include <qrloop/error.hpp>
#include <qrloop/exponent.hpp>
#include <qrloop/fibre.hpp>
#include <qrloop/tables.hpp>

#include <sstream>

namespace qrloop {
namespace {

using nlohmann::json;

struct BandRow {
    std::string band;
    int prime = 0;
    bool generic = false;
    LoopResult result;
    ExponentReport exponent;
};

std::vector<BandRow> band_rows(const CaseInfo &info) {
    std::vector<BandRow> rows;
    for (const auto &band : info.bands) {
        BandRow r;
        r.band = band;
        r.prime = least_prime_in_band(band);
        r.generic = band.find("==") == std::string::npos;
        r.result = loop_decomposition(info.type, {}, r.prime);
        r.exponent = exponent_report(r.result);
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string exponent_cell(const BandRow &r) {
    const std::string base = r.generic ? "p" : std::to_string(r.prime);
    const auto &e = r.exponent.interval;
    return (e.exact() ? "= " : "≤ ") + base + "^" + std::to_string(e.hi);
}

json exponent_json(const ExponentInterval &e) { return {{"lo", e.lo}, {"hi", e.hi}, {"exact", e.exact()}}; }

std::string params_text(const CaseParams &p) {
    std::string s;
    if (p.n)
        s += "n=" + std::to_string(*p.n);
    if (p.m)
        s += (s.empty() ? "" : ",") + std::string("m=") + std::to_string(*p.m);
    return s;
}

// Parameter sets for one classical case in the sweep.
std::vector<CaseParams> sweep_params(const Catalog &cat, const CaseInfo &info, int max_n) {
    std::vector<CaseParams> out;
    const bool wants_m = std::count(info.params.begin(), info.params.end(), "m") > 0;
    for (int n = std::max(1, info.n_min); n <= max_n; ++n) {
        if (!wants_m) {
            if (cat.params_valid(info, {n, std::nullopt}))
                out.push_back({n, std::nullopt});
            continue;
        }
        for (int m = 1; m <= n; ++m)
            if (cat.params_valid(info, {n, m}))
                out.push_back({n, m});
    }
    return out;
}

struct SweepEntry {
    std::string type;
    std::string space;
    CaseParams params;
    int prime = 0;
    std::string status; // ok, undetermined, not-quasi-regular, ...
    std::string message;
    std::optional<LoopResult> result;
    ExponentReport exponent;
};

std::vector<SweepEntry> classical_sweep(const SweepOptions &opts) {
    const Catalog &cat = Catalog::instance();
    std::vector<SweepEntry> out;
    for (const auto &info : cat.classical_cases())
        for (const auto &params : sweep_params(cat, info, opts.max_n))
            for (int p = 5; p <= opts.max_prime; ++p) {
                if (!is_prime(p) || !cat.prime_valid(info, params, p))
                    continue;
                SweepEntry e;
                e.type = info.type;
                e.params = params;
                e.prime = p;
                try {
                    e.space = cat.case_record(info.type, params, p).space;
                    e.result = loop_decomposition(info.type, params, p);
                    e.exponent = exponent_report(*e.result);
                    e.status = "ok";
                } catch (const Error &err) {
                    e.status = std::string(errc_name(err.code()));
                    e.message = err.what();
                }
                out.push_back(std::move(e));
            }
    return out;
}

} // namespace

std::string exceptional_table_markdown() {
    std::ostringstream os;
    os << "| Type | G/H | Homotopy type of Ω(G/H) | Exponent |\n";
    os << "|---|---|---|---|\n";
    for (const auto &info : Catalog::instance().exceptional_cases()) {
        std::string types, exps;
        for (const auto &r : band_rows(info)) {
            if (!types.empty()) {
                types += "<br>";
                exps += "<br>";
            }
            types += render(r.result.expr, Style::markdown) + " (" + render_band(r.band) + ")";
            exps += exponent_cell(r);
        }
        os << "| " << info.label << " | " << info.space_template << " | " << types << " | " << exps << " |\n";
    }
    return os.str();
}

json exceptional_table_json() {
    json rows = json::array();
    for (const auto &info : Catalog::instance().exceptional_cases()) {
        json bands = json::array();
        for (const auto &r : band_rows(info))
            bands.push_back({{"band", r.band},
                             {"prime", r.prime},
                             {"expression", render(r.result.expr, Style::ascii)},
                             {"space", to_json(r.result.expr)},
                             {"exponent", exponent_json(r.exponent.interval)}});
        rows.push_back({{"type", info.type}, {"space", info.space_template}, {"bands", bands}});
    }
    return rows;
}

std::string classical_table_markdown(const SweepOptions &opts) {
    std::ostringstream os;
    os << "| Type | G/H | Parameters | p | Homotopy type of Ω(G/H) | Exponent |\n";
    os << "|---|---|---|---|---|---|\n";
    for (const auto &e : classical_sweep(opts)) {
        os << "| " << e.type << " | " << e.space << " | " << params_text(e.params) << " | " << e.prime << " | ";
        if (e.result)
            os << render(e.result->expr, Style::markdown) << " | " << render(e.exponent.interval);
        else
            os << e.status << " | ";
        os << " |\n";
    }
    return os.str();
}

json classical_table_json(const SweepOptions &opts) {
    json rows = json::array();
    for (const auto &e : classical_sweep(opts)) {
        json row = {{"type", e.type}, {"params", params_text(e.params)}, {"prime", e.prime}, {"status", e.status}};
        if (e.result) {
            row["space"] = e.space;
            row["expression"] = render(e.result->expr, Style::ascii);
            row["exponent"] = exponent_json(e.exponent.interval);
        } else {
            row["message"] = e.message;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace qrloop
