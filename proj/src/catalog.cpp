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

#include <qrloop/catalog.hpp>
#include <qrloop/error.hpp>

#include <algorithm>
#include <cctype>
#include <regex>

extern const char *const qrloop_catalog_json;

namespace qrloop {

using nlohmann::json;

namespace {

IntEnv env_of(const CaseParams &params, int p = 0) {
    IntEnv env;
    if (params.n)
        env["n"] = *params.n;
    if (params.m)
        env["m"] = *params.m;
    if (p)
        env["p"] = p;
    return env;
}

struct NamedFamily {
    std::string_view name;
    Family family;
};

constexpr NamedFamily kRanked[] = {
    {"SU", Family::su},   {"U", Family::u},   {"Sp", Family::sp},    {"SO", Family::so},
    {"Spin", Family::spin}, {"Ss", Family::ss}, {"PSp", Family::psp},
};

constexpr NamedFamily kExceptional[] = {
    {"G2", Family::g2}, {"F4", Family::f4}, {"E6", Family::e6}, {"E7", Family::e7}, {"E8", Family::e8},
};

class GroupParser {
public:
    GroupParser(std::string_view s, const IntEnv &env) : s_(s), env_(env) {}

    GroupId run() {
        GroupId g = product();
        skip();
        if (i_ != s_.size())
            error("trailing input");
        return g;
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
        fail(Errc::parse, "cannot parse group '" + std::string(s_) + "': " + why);
    }

    // "x" is a separator only when surrounded by spaces.
    bool accept_times() {
        skip();
        if (accept("×"))
            return true;
        if (i_ + 1 < s_.size() && s_[i_] == 'x' && i_ > 0 && s_[i_ - 1] == ' ' && s_[i_ + 1] == ' ') {
            ++i_;
            return true;
        }
        return false;
    }

    GroupId product() {
        std::vector<GroupId> fs{factor()};
        bool central = false, direct = false;
        for (;;) {
            if (accept("·")) {
                central = true;
            } else if (accept_times()) {
                direct = true;
            } else {
                break;
            }
            fs.push_back(factor());
        }
        if (fs.size() == 1)
            return fs.front();
        if (central && direct)
            error("mixed · and x products");
        GroupId g;
        g.family = Family::product;
        g.factors = std::move(fs);
        g.central = central;
        return g;
    }

    GroupId factor() {
        skip();
        if (accept("(")) {
            GroupId g = product();
            if (!accept(")"))
                error("missing ')'");
            return g;
        }
        const std::size_t start = i_;
        while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_])))
            ++i_;
        std::string_view name = s_.substr(start, i_ - start);
        if (name.empty())
            error("expected a group name");
        for (const auto &e : kExceptional)
            if (name == e.name)
                return GroupId{e.family, 0, {}, false};
        if (name == "T1" || (name == "T" && accept("^1")))
            return GroupId{Family::torus, 1, {}, false};
        for (const auto &r : kRanked) {
            if (name != r.name)
                continue;
            if (!accept("("))
                error("expected '(' after " + std::string(name));
            const int rank = static_cast<int>(eval_int(balanced(), env_));
            GroupId g{r.family, rank, {}, false};
            if (accept("/{±I}") || accept("/{+-I}")) {
                if (g.family != Family::su)
                    error("only SU(n)/{±I} is supported");
                g.family = Family::su_mod_center;
            }
            if (rank < 0)
                error("negative rank");
            return g;
        }
        error("unknown group '" + std::string(name) + "'");
    }

    // Text up to the matching ')', which is consumed.
    std::string balanced() {
        int depth = 1;
        const std::size_t start = i_;
        for (; i_ < s_.size(); ++i_) {
            if (s_[i_] == '(')
                ++depth;
            else if (s_[i_] == ')' && --depth == 0)
                break;
        }
        if (i_ >= s_.size())
            error("unbalanced parentheses");
        std::string inner(s_.substr(start, i_ - start));
        ++i_;
        return inner;
    }

    std::string_view s_;
    const IntEnv &env_;
    std::size_t i_ = 0;
};

std::vector<int> odd_range(int from, int to, int step) {
    std::vector<int> v;
    for (int d = from; d <= to; d += step)
        v.push_back(d);
    return v;
}

std::vector<Factor> sp_factors(int n, int p) {
    // Sp(n), SO(2n+1), Spin(2n+1) at p > n.
    std::vector<Factor> fs;
    const int h = (p - 1) / 2;
    for (int i = 1; i <= n - h; ++i)
        fs.push_back({Atom::b_cell({4 * i - 1, 4 * i + 2 * p - 3}), false});
    for (int j = std::max(1, n - (p - 3) / 2); j <= std::min(n, h); ++j)
        fs.push_back({Atom::sphere(4 * j - 1), false});
    return fs;
}

std::vector<Factor> su_factors(int n, int p) {
    std::vector<Factor> fs;
    for (int i = 2; i <= n - p + 1; ++i)
        fs.push_back({Atom::b_cell({2 * i - 1, 2 * i + 2 * p - 3}), false});
    for (int j = std::max(2, n - p + 2); j <= std::min(n, p); ++j)
        fs.push_back({Atom::sphere(2 * j - 1), false});
    return fs;
}

[[noreturn]] void not_qr(const GroupId &g, int p, const std::string &cond) {
    fail(Errc::not_quasi_regular, to_string(g) + " is not quasi-regular at p=" + std::to_string(p) + " (needs " +
                                      cond + "); no extension entry");
}

std::string_view family_name(Family f) {
    for (const auto &r : kRanked)
        if (r.family == f)
            return r.name;
    for (const auto &e : kExceptional)
        if (e.family == f)
            return e.name;
    return "?";
}

} // namespace

GroupId parse_group(std::string_view text) { return GroupParser(text, IntEnv{}).run(); }

GroupId parse_group(std::string_view text, const CaseParams &params) {
    return GroupParser(text, env_of(params)).run();
}

std::string to_string(const GroupId &g) {
    switch (g.family) {
    case Family::product: {
        std::string s;
        for (std::size_t i = 0; i < g.factors.size(); ++i) {
            if (i)
                s += g.central ? "·" : "×";
            const bool paren = g.factors[i].family == Family::su_mod_center;
            s += paren ? "(" + to_string(g.factors[i]) + ")" : to_string(g.factors[i]);
        }
        return s;
    }
    case Family::su_mod_center: return "SU(" + std::to_string(g.rank) + ")/{±I}";
    case Family::torus: return "T1";
    case Family::g2:
    case Family::f4:
    case Family::e6:
    case Family::e7:
    case Family::e8: return std::string(family_name(g.family));
    default: return std::string(family_name(g.family)) + "(" + std::to_string(g.rank) + ")";
    }
}

TypeList reference_type(const GroupId &g) {
    std::vector<int> d;
    const int n = g.rank;
    switch (g.family) {
    case Family::su:
    case Family::su_mod_center: d = odd_range(3, 2 * n - 1, 2); break;
    case Family::u: d = odd_range(1, 2 * n - 1, 2); break;
    case Family::sp: d = odd_range(3, 4 * n - 1, 4); break;
    case Family::so:
    case Family::spin:
        if (n % 2 == 1) {
            d = odd_range(3, 2 * n - 3, 4);
        } else if (n == 2) {
            d = {1};
        } else if (n > 0) {
            d = odd_range(3, 2 * n - 5, 4);
            d.push_back(n - 1);
        }
        break;
    case Family::ss:
        d = odd_range(3, 2 * n - 5, 4);
        d.push_back(n - 1);
        break;
    case Family::psp: d = odd_range(3, 4 * n - 1, 4); break;
    case Family::g2: d = {3, 11}; break;
    case Family::f4: d = {3, 11, 15, 23}; break;
    case Family::e6: d = {3, 9, 11, 15, 17, 23}; break;
    case Family::e7: d = {3, 11, 15, 19, 23, 27, 35}; break;
    case Family::e8: d = {3, 15, 23, 27, 35, 39, 47, 59}; break;
    case Family::torus: d = {1}; break;
    case Family::product:
        for (const auto &f : g.factors) {
            auto t = reference_type(f).degrees;
            d.insert(d.end(), t.begin(), t.end());
        }
        break;
    }
    std::sort(d.begin(), d.end());
    return TypeList{d};
}

struct Catalog::Impl {
    struct Band {
        std::string primes;
        std::string decomposition;
    };
    struct Exceptional {
        std::string citation;
        std::vector<Band> bands;
    };
    struct Extension {
        std::string group;
        int prime;
        std::string decomposition;
        std::string citation;
    };

    std::map<std::string, Exceptional, std::less<>> exceptional;
    std::vector<Extension> extensions;
    std::vector<json> cases;

    const Extension *extension(const GroupId &g, int p) const {
        const std::string name = to_string(g);
        for (const auto &e : extensions)
            if (e.group == name && e.prime == p)
                return &e;
        return nullptr;
    }

    Decomposition decompose(const GroupId &g, int p) const;
};

namespace {

Decomposition leaf(int p, std::vector<Factor> fs, std::string citation) {
    return Decomposition{normalize(SpaceExpr(p, std::move(fs))), {std::move(citation)}, false};
}

void append(Decomposition &into, const Decomposition &d) {
    into.expr = product(into.expr, d.expr);
    for (const auto &c : d.citations)
        if (std::find(into.citations.begin(), into.citations.end(), c) == into.citations.end())
            into.citations.push_back(c);
    into.extension = into.extension || d.extension;
}

} // namespace

Decomposition Catalog::Impl::decompose(const GroupId &g, int p) const {
    const int n = g.rank;
    switch (g.family) {
    case Family::su:
    case Family::su_mod_center: {
        if (n <= 1)
            return leaf(p, {}, "SU(1) is a point");
        if (2 * p <= n)
            not_qr(g, p, "p > " + std::to_string(n) + "/2");
        Decomposition d = leaf(p, su_factors(n, p), "Mimura-Toda: quasi-p-regular decomposition of SU(n)");
        if (g.family == Family::su_mod_center)
            d.citations.push_back("SU(n)/{±I} = SU(n) at odd primes");
        return d;
    }
    case Family::u: {
        Decomposition d = leaf(p, {{Atom::circle(), false}}, "U(n) = S^1 x SU(n)");
        append(d, decompose(GroupId{Family::su, n, {}, false}, p));
        return d;
    }
    case Family::sp:
        if (n == 0)
            return leaf(p, {}, "Sp(0) is a point");
        if (p <= n) {
            if (const Extension *e = extension(g, p))
                return Decomposition{parse_space(e->decomposition, p), {e->citation}, true};
            not_qr(g, p, "p > " + std::to_string(n));
        }
        return leaf(p, sp_factors(n, p), "Mimura-Toda: quasi-p-regular decomposition of Sp(n)");
    case Family::so:
    case Family::spin: {
        if (n <= 1)
            return leaf(p, {}, "SO(1) is a point");
        if (n == 2)
            return leaf(p, {{Atom::circle(), false}}, "SO(2) = S^1");
        const int k = n / 2;
        if (n % 2 == 1) {
            if (p <= k)
                not_qr(g, p, "p > " + std::to_string(k));
            Decomposition d = decompose(GroupId{Family::sp, k, {}, false}, p);
            d.citations.insert(d.citations.begin(), "Harris: SO(2n+1) = Spin(2n+1) = Sp(n) at odd primes");
            return d;
        }
        if (p <= k - 1)
            not_qr(g, p, "p > " + std::to_string(k - 1));
        Decomposition d = leaf(p, {{Atom::sphere(2 * k - 1), false}},
                               "Harris: SO(2n) = Spin(2n-1) x S^(2n-1) at odd primes");
        append(d, decompose(GroupId{Family::sp, k - 1, {}, false}, p));
        return d;
    }
    case Family::ss: {
        if (n != 16)
            fail(Errc::unsupported, "only Ss(16) is catalogued");
        Decomposition d = leaf(p, {{Atom::sphere(15), false}}, "Ss(16) = Spin(16) = S^15 x Sp(7) at odd primes");
        append(d, decompose(GroupId{Family::sp, 7, {}, false}, p));
        return d;
    }
    case Family::psp: {
        if (n != 4)
            fail(Errc::unsupported, "only PSp(4) is catalogued");
        Decomposition d = decompose(GroupId{Family::spin, 9, {}, false}, p);
        d.citations.insert(d.citations.begin(), "PSp(4) = Spin(9) at odd primes");
        return d;
    }
    case Family::torus: return leaf(p, {{Atom::circle(), false}}, "T1 = S^1");
    case Family::g2:
    case Family::f4:
    case Family::e6:
    case Family::e7:
    case Family::e8: {
        const auto it = exceptional.find(family_name(g.family));
        if (it == exceptional.end())
            fail(Errc::configuration, "catalog has no entry for " + to_string(g));
        for (const auto &b : it->second.bands)
            if (eval_condition(b.primes, IntEnv{{"p", p}}))
                return Decomposition{parse_space(b.decomposition, p), {it->second.citation}, false};
        if (const Extension *e = extension(g, p))
            return Decomposition{parse_space(e->decomposition, p), {e->citation}, true};
        std::string conds;
        for (const auto &b : it->second.bands)
            conds += (conds.empty() ? "" : " or ") + b.primes;
        not_qr(g, p, conds);
    }
    case Family::product: {
        Decomposition d{SpaceExpr::point(p), {}, false};
        for (const auto &f : g.factors)
            append(d, decompose(f, p));
        if (g.central)
            d.citations.push_back("central products K·L = K x L at odd primes");
        return d;
    }
    }
    fail(Errc::unsupported, "unsupported group");
}

Decomposition decompose(const GroupId &g, int p) {
    require_prime(p);
    return Catalog::instance().group_decomposition(g, p);
}

SpaceExpr qr_decomposition(const GroupId &g, int p) { return decompose(g, p).expr; }

int slot_index(const Atom &atom, int p) {
    const int b = atom.bottom();
    if (b % 2 == 0 || b < 3 || b > 4 * p - 3)
        fail(Errc::slot, "atom " + render(atom) + " has no slot at p=" + std::to_string(p));
    const int m = (b + 1) / 2;
    return m <= p ? m : m - (p - 1);
}

std::string_view to_string(Recipe r) noexcept {
    switch (r) {
    case Recipe::slot_match: return "SLOT_MATCH";
    case Recipe::slot_match_with_s1: return "SLOT_MATCH_WITH_S1";
    case Recipe::harris_complement: return "HARRIS_COMPLEMENT";
    case Recipe::product_split: return "PRODUCT_SPLIT";
    case Recipe::reduction: return "REDUCTION";
    case Recipe::assembly: return "ASSEMBLY";
    case Recipe::extension_p7: return "EXTENSION_P7";
    case Recipe::undetermined_p7: return "UNDETERMINED_P7";
    }
    return "?";
}

namespace {

Recipe recipe_from(const std::string &s) {
    for (Recipe r : {Recipe::slot_match, Recipe::slot_match_with_s1, Recipe::harris_complement,
                     Recipe::product_split, Recipe::reduction, Recipe::assembly, Recipe::extension_p7,
                     Recipe::undetermined_p7})
        if (to_string(r) == s)
            return r;
    fail(Errc::configuration, "unknown recipe '" + s + "'");
}

bool is_classical(const json &e) { return e.contains("params"); }

CaseInfo info_of(const json &e) {
    CaseInfo i;
    i.type = e.at("type").get<std::string>();
    i.label = e.at("label").get<std::string>();
    i.space_template = e.at("space").get<std::string>();
    if (e.contains("params"))
        i.params = e.at("params").get<std::vector<std::string>>();
    i.side_condition = e.value("side_condition", "");
    i.n_min = e.value("n_min", 0);
    i.prime_condition = e.value("prime_text", e.at("prime_condition").get<std::string>());
    if (e.contains("bands"))
        i.bands = e.at("bands").get<std::vector<std::string>>();
    return i;
}

std::string display_space(const GroupId &g, const GroupId &h) {
    const bool paren = h.family == Family::su_mod_center;
    return to_string(g) + "/" + (paren ? "(" + to_string(h) + ")" : to_string(h));
}

} // namespace

Catalog::Catalog() : impl_(std::make_unique<Impl>()) {
    json root;
    try {
        root = json::parse(qrloop_catalog_json);
        for (const auto &[name, entry] : root.at("exceptional_groups").items()) {
            Impl::Exceptional ex;
            ex.citation = entry.at("citation").get<std::string>();
            for (const auto &b : entry.at("bands"))
                ex.bands.push_back({b.at("primes").get<std::string>(), b.at("decomposition").get<std::string>()});
            impl_->exceptional.emplace(name, std::move(ex));
        }
        for (const auto &e : root.at("extensions"))
            impl_->extensions.push_back({e.at("group").get<std::string>(), e.at("prime").get<int>(),
                                         e.at("decomposition").get<std::string>(),
                                         e.at("citation").get<std::string>()});
        for (const auto &c : root.at("cases"))
            impl_->cases.push_back(c);
    } catch (const json::exception &e) {
        fail(Errc::configuration, std::string("embedded catalog is malformed: ") + e.what());
    }
}

Catalog::~Catalog() = default;

const Catalog &Catalog::instance() {
    static const Catalog catalog;
    return catalog;
}

Decomposition Catalog::group_decomposition(const GroupId &g, int p) const { return impl_->decompose(g, p); }

std::optional<CaseInfo> Catalog::info(std::string_view type) const {
    for (const auto &e : impl_->cases)
        if (e.at("type").get<std::string>() == type)
            return info_of(e);
    return std::nullopt;
}

std::vector<CaseInfo> Catalog::exceptional_cases() const {
    std::vector<CaseInfo> out;
    for (const auto &e : impl_->cases)
        if (!is_classical(e) && e.contains("bands"))
            out.push_back(info_of(e));
    return out;
}

std::vector<CaseInfo> Catalog::classical_cases() const {
    std::vector<CaseInfo> out;
    for (const auto &e : impl_->cases)
        if (is_classical(e))
            out.push_back(info_of(e));
    return out;
}

bool Catalog::params_valid(const CaseInfo &info, const CaseParams &params) const {
    const bool wants_n = std::count(info.params.begin(), info.params.end(), "n") > 0;
    const bool wants_m = std::count(info.params.begin(), info.params.end(), "m") > 0;
    if (wants_n != params.n.has_value() || wants_m != params.m.has_value())
        return false;
    if (wants_n && *params.n < info.n_min)
        return false;
    if (!info.side_condition.empty() && !eval_condition(info.side_condition, env_of(params)))
        return false;
    return true;
}

bool Catalog::prime_valid(const CaseInfo &info, const CaseParams &params, int p) const {
    if (p < 5 || !is_prime(p))
        return false;
    for (const auto &e : impl_->cases)
        if (e.at("type").get<std::string>() == info.type &&
            eval_condition(e.at("prime_condition").get<std::string>(), env_of(params, p)))
            return true;
    return false;
}

CaseRecord Catalog::case_record(std::string_view type, const CaseParams &params, int p) const {
    const auto inf = info(type);
    if (!inf)
        fail(Errc::unsupported, "unknown case '" + std::string(type) + "'");
    require_prime(p);
    if (!params_valid(*inf, params)) {
        std::string need = inf->params.empty() ? "no parameters" : "parameters";
        for (const auto &v : inf->params)
            need += " " + v;
        if (inf->n_min)
            need += ", n >= " + std::to_string(inf->n_min);
        if (!inf->side_condition.empty())
            need += ", " + inf->side_condition;
        fail(Errc::parameter, "invalid parameters for " + inf->type + ": needs " + need);
    }
    const IntEnv env = env_of(params, p);
    const json *entry = nullptr;
    for (const auto &e : impl_->cases)
        if (e.at("type").get<std::string>() == type && eval_condition(e.at("prime_condition").get<std::string>(), env)) {
            entry = &e;
            break;
        }
    if (!entry)
        fail(Errc::prime, inf->type + " needs " + inf->prime_condition + ", got p=" + std::to_string(p));
    const json &e = *entry;

    CaseRecord r;
    try {
        r.type = inf->type;
        r.label = inf->label;
        r.params = params;
        r.prime = p;
        r.prime_condition = e.value("prime_text", e.at("prime_condition").get<std::string>());
        r.g = parse_group(e.at("G").get<std::string>(), params);
        r.h = parse_group(e.at("H").get<std::string>(), params);
        r.space = display_space(r.g, r.h);
        r.recipe = recipe_from(e.at("recipe").get<std::string>());
        if (e.contains("split"))
            r.split = parse_group(e.at("split").get<std::string>(), params);
        if (e.contains("core_G"))
            r.core_g = parse_group(e.at("core_G").get<std::string>(), params);
        if (e.contains("core_H"))
            r.core_h = parse_group(e.at("core_H").get<std::string>(), params);

        const json &d = e.at("D");
        if (d.is_array()) {
            r.d = d.get<std::vector<int>>();
        } else if (d.is_object()) {
            const long from = eval_int(d.at("from").get<std::string>(), env);
            const long to = eval_int(d.at("to").get<std::string>(), env);
            const int step = d.at("step").get<int>();
            r.d = odd_range(static_cast<int>(from), static_cast<int>(to), step);
        } else if (d.get<std::string>() == "type(H)") {
            r.d = reference_type(r.h).degrees;
        } else if (d.get<std::string>() == "type(core_H)") {
            if (!r.core_h)
                fail(Errc::configuration, r.type + ": D refers to a missing core_H");
            r.d = reference_type(*r.core_h).degrees;
        } else if (d.get<std::string>() != "none") {
            fail(Errc::configuration, r.type + ": unknown D form");
        }
        std::sort(r.d.begin(), r.d.end());
        r.d.erase(std::unique(r.d.begin(), r.d.end()), r.d.end());
        r.d_citation = e.at("D_citation").get<std::string>();

        if (e.contains("reduce_to")) {
            const json &t = e.at("reduce_to");
            r.reduce_to_type = t.at("type").get<std::string>();
            if (t.contains("n"))
                r.reduce_to_params.n = static_cast<int>(eval_int(t.at("n").get<std::string>(), env));
            if (t.contains("m"))
                r.reduce_to_params.m = static_cast<int>(eval_int(t.at("m").get<std::string>(), env));
        }
        if (e.contains("assembly"))
            r.assembly = e.at("assembly").get<std::vector<std::string>>();
        if (e.contains("pinched"))
            for (const auto &a : e.at("pinched"))
                r.pinched.push_back(parse_atom(a.get<std::string>()));
        if (e.contains("maps"))
            for (const auto &m : e.at("maps")) {
                ExtensionMap em;
                for (const auto &a : m.at("domain"))
                    em.domain.push_back(parse_atom(a.get<std::string>()));
                em.codomain = parse_atom(m.at("codomain").get<std::string>());
                r.maps.push_back(std::move(em));
            }
        r.obstruction = e.value("obstruction", "");
        r.citations = e.at("citations").get<std::vector<std::string>>();
    } catch (const json::exception &ex) {
        fail(Errc::configuration, "catalog entry " + std::string(type) + " is malformed: " + ex.what());
    }
    return r;
}

int least_prime_in_band(std::string_view band) {
    for (int p = 5; p < 1000; ++p)
        if (is_prime(p) && eval_condition(band, IntEnv{{"p", p}}))
            return p;
    fail(Errc::configuration, "no prime satisfies '" + std::string(band) + "'");
}

std::string render_band(std::string_view band) {
    std::string s(band);
    if (s == "2*p>n")
        s = "p>n/2";
    s = std::regex_replace(s, std::regex(">="), "≥");
    s = std::regex_replace(s, std::regex("<="), "≤");
    s = std::regex_replace(s, std::regex("=="), "=");
    return std::regex_replace(s, std::regex("(≥|≤|=|>|<)"), " $1 ");
}

} // namespace qrloop
