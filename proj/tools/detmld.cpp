// detmld: command line front end. Every command prints one JSON document.

#include "detmld/forms.hpp"
#include "detmld/mld.hpp"
#include "detmld/oracle.hpp"
#include "detmld/orbit.hpp"
#include "detmld/tableaux.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using json = nlohmann::json;
using namespace detmld;

namespace {

/// Malformed flag values; reported with exit code 2 like CLI11 errors.
struct ArgumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text) {
    std::vector<std::string> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

std::vector<Rational> parse_alphas(const std::string& text) {
    std::vector<Rational> out;
    for (const auto& s : split(text)) {
        try {
            out.push_back(parse_rational(s));
        } catch (const Rejected& e) {
            throw ArgumentError("--alphas: " + std::string(e.what()));
        }
    }
    return out;
}

std::vector<ExtNat> parse_lambda(const std::string& text) {
    std::vector<ExtNat> out;
    for (auto s : split(text)) {
        s.erase(0, s.find_first_not_of(" \t"));
        s.erase(s.find_last_not_of(" \t") + 1);
        if (s == "inf" || s == "INF") {
            out.push_back(INF);
            continue;
        }
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw ArgumentError("--lambda: expected a natural number or inf, got '" + s + "'");
        out.emplace_back(std::stoull(s));
    }
    return out;
}

json to_json(const Rational& r) { return to_string(r); }
json to_json(const MldValue& v) { return v.to_string(); }
json to_json(ExtNat n) { return n.is_inf() ? json("inf") : json(n.value()); }

json to_json(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(to_json(r));
    return a;
}

json to_json(const MultiPoly& p) {
    json a = json::array();
    for (const auto& [e, c] : p.terms()) a.push_back({{"exp", e}, {"coef", to_string(c)}});
    return a;
}

json to_json(const tableaux::Tableau& t) { return {{"shape", t.shape().rows()}, {"rows", t.rows()}}; }
json to_json(const tableaux::DoubleTableau& dt) { return {{"left", to_json(dt.left)}, {"right", to_json(dt.right)}}; }

json to_json(const tableaux::StandardExpansion& e) {
    json a = json::array();
    for (const auto& t : e.terms) a.push_back({{"coef", to_string(t.coefficient)}, {"tableau", to_json(t.tableau)}});
    return a;
}

tableaux::Tableau tableau_from_json(const json& j) {
    const json& rows = j.is_object() ? j.at("rows") : j;
    auto t = tableaux::Tableau(rows.get<std::vector<std::vector<int>>>());
    if (j.is_object() && j.contains("shape") && j.at("shape").get<std::vector<int>>() != t.shape().rows())
        throw Rejected("tableau shape does not match its rows");
    return t;
}

json oracle_json(const oracle::OracleResult& r) {
    return {{"minimum", to_json(r.minimum)},     {"box_minimum", to_json(r.box_minimum)},
            {"argmin", r.argmin},                {"at_boundary", r.at_boundary},
            {"prefix_unbounded", r.prefix_unbounded}, {"visited", r.visited}};
}

json violation_json(const std::optional<mld::LcViolation>& v) {
    if (!v) return nullptr;
    return {{"j", v->j}, {"prefix_sum", to_json(v->prefix_sum)}, {"bound", to_json(v->bound)}};
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

/// Aligned "key  value" rows; nested arrays of objects become indented tables.
void print_pretty(const json& doc, std::ostream& os, int indent = 0) {
    std::size_t width = 0;
    for (const auto& [key, v] : doc.items()) width = std::max(width, key.size());
    for (const auto& [key, v] : doc.items()) {
        os << std::string(static_cast<std::size_t>(indent), ' ') << std::left << std::setw(static_cast<int>(width) + 2)
           << key;
        if (v.is_object()) {
            os << '\n';
            print_pretty(v, os, indent + 2);
        } else if (v.is_array() && !v.empty() && v.front().is_object()) {
            os << '\n';
            for (const auto& item : v) {
                os << std::string(static_cast<std::size_t>(indent + 2), ' ');
                bool first = true;
                for (const auto& [k2, v2] : item.items()) {
                    os << (first ? "" : "  ") << k2 << '=' << scalar_text(v2);
                    first = false;
                }
                os << '\n';
            }
        } else {
            os << scalar_text(v) << '\n';
        }
    }
}

unsigned resolve_threads(int flag) {
    if (flag > 0) return static_cast<unsigned>(flag);
    if (const char* env = std::getenv("DETMLD_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

struct Options {
    int m = 0, k = 0, q = -1, j = -1, s = 0, N = 0, threads = 0;
    std::uint64_t oracle_bound = 0;
    int kbound = 0;
    std::string alphas, lambda, file;
    std::vector<std::uint64_t> seeds;
    bool pretty = false;
};

json cmd_mld(const Options& o, bool point) {
    DeterminantalPair pair(o.m, o.k, parse_alphas(o.alphas));
    json out{{"m", o.m}, {"k", o.k}, {"alphas", to_json(pair.alphas())}};
    oracle::Target target = point ? oracle::Target::point(o.q) : oracle::Target::locus(o.j);
    if (point) {
        out["q"] = o.q;
        out["mld"] = to_json(mld::mld_at_rank(pair, o.q));
        out["lc"] = mld::is_lc_at_rank(pair, o.q);
        out["beta"] = to_json(mld::beta_coefficients(pair, o.k - o.q));
        out["violation"] = violation_json(mld::first_lc_violation(pair, o.k - o.q));
    } else {
        out["j"] = o.j;
        out["mld"] = to_json(mld::mld_along(pair, o.j));
        out["lc"] = mld::is_lc_along(pair, o.j);
        out["beta"] = to_json(mld::beta_coefficients(pair, o.k));
        out["violation"] = violation_json(mld::first_lc_violation(pair, o.k));
    }
    if (o.oracle_bound > 0) {
        auto cmp = oracle::mld_via_oracle(pair, target, o.oracle_bound);
        out["oracle"] = oracle_json(cmp.oracle);
        out["oracle"]["L"] = o.oracle_bound;
        out["closed_form"] = to_json(cmp.closed_form);
        out["agree"] = cmp.agree;
    }
    return out;
}

json cmd_lc(const Options& o) {
    if ((o.q >= 0) == (o.j >= 0)) throw ArgumentError("lc check needs exactly one of --q or --j");
    DeterminantalPair pair(o.m, o.k, parse_alphas(o.alphas));
    json out{{"m", o.m}, {"k", o.k}, {"alphas", to_json(pair.alphas())}};
    if (o.q >= 0) {
        out["q"] = o.q;
        out["lc"] = mld::is_lc_at_rank(pair, o.q);
        out["violation"] = violation_json(mld::first_lc_violation(pair, o.k - o.q));
    } else {
        out["j"] = o.j;
        out["lc"] = mld::is_lc_along(pair, o.j);
        out["violation"] = violation_json(mld::first_lc_violation(pair, o.k));
    }
    return out;
}

json cmd_orbit(const Options& o) {
    DeterminantalPair pair(o.m, o.k);
    ExtendedPartition lambda(parse_lambda(o.lambda));
    json out{{"m", o.m}, {"k", o.k}, {"lambda", json::array()}};
    for (auto v : lambda.entries()) out["lambda"].push_back(to_json(v));
    out["in_jet_space"] = orbit::in_jet_space(lambda, pair);
    out["finite_codim"] = orbit::has_finite_codim(lambda, pair);
    out["codim"] = orbit::codim(lambda, pair);
    if (o.q >= 0) {
        out["q"] = o.q;
        out["meets_point_fiber"] = orbit::meets_point_fiber(lambda, pair, o.q);
        out["codim_point"] = orbit::codim_point(lambda, pair, o.q);
    }
    json w = json::array();
    for (int i = 1; i <= o.k; ++i) w.push_back(to_json(orbit::contact_order_subvariety(lambda, pair, i)));
    out["w"] = w;
    out["nash"] = to_json(orbit::nash_contact_order(lambda, pair));
    return out;
}

json cmd_ord(const Options& o) {
    auto lambda = parse_lambda(o.lambda);
    auto show = [](const std::optional<std::uint64_t>& v) { return v ? json(*v) : json("above_truncation"); };
    json out{{"lambda", json::array()}, {"m", o.m}, {"s", o.s}, {"N", o.N}};
    for (auto v : lambda) out["lambda"].push_back(to_json(v));
    out["order"] = show(oracle::ord_ideal_powerseries(lambda, o.m, o.s, o.N));
    if (!o.seeds.empty()) {
        json runs = json::array();
        for (auto seed : o.seeds)
            runs.push_back({{"seed", seed},
                            {"order", show(oracle::ord_ideal_powerseries(lambda, o.m, o.s, o.N, {seed}))}});
        out["conjugated"] = runs;
    }
    return out;
}

json cmd_straighten(const Options& o) {
    std::ifstream in(o.file);
    if (!in) throw ArgumentError("cannot open " + o.file);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ArgumentError(o.file + ": " + e.what());
    }
    tableaux::DoubleTableau dt(tableau_from_json(doc.at("left")), tableau_from_json(doc.at("right")));
    int m = o.m > 0 ? o.m : std::max({1, dt.left.max_entry(), dt.right.max_entry()});
    std::optional<int> kbound;
    if (o.kbound > 0) kbound = o.kbound;
    auto expansion = tableaux::straighten(dt, m, kbound);
    MultiPoly input = tableaux::bideterminant(dt, m);
    MultiPoly back = tableaux::reexpand(expansion, m);
    bool sound = kbound ? tableaux::reduce_mod_minors(input - back, *kbound).is_zero() : input == back;
    json out{{"m", m}, {"input", to_json(dt)}, {"standard", tableaux::is_standard(dt)},
             {"terms", to_json(expansion)}, {"reexpansion_matches", sound}};
    out["kbound"] = kbound ? json(*kbound) : json(nullptr);
    return out;
}

json cmd_nash(const Options& o) {
    forms::NashOptions options;
    options.threads = resolve_threads(o.threads);
    auto report = forms::verify_nash(o.m, o.k, options);
    json entries = json::array();
    for (const auto& e : report.entries) {
        json vars = json::array();
        for (int v : e.indices) {
            auto [i, j] = forms::var_position(o.m, v);
            vars.push_back({i, j});
        }
        auto cert = tableaux::subalgebra_membership(e.f, o.m, o.k);
        entries.push_back({{"differentials", vars},
                           {"f", to_json(e.f)},
                           {"member", e.member},
                           {"certificate", to_json(cert.expansion)},
                           {"order_independent", e.order_independent},
                           {"chart_consistent", e.chart_consistent},
                           {"micros", e.micros}});
    }
    json charts = json::array();
    for (const auto& rows : k_subsets(o.m, o.k))
        for (const auto& cols : k_subsets(o.m, o.k))
            charts.push_back({{"rows", rows}, {"cols", cols}, {"sign", forms::chart_form(rows, cols, o.m, o.k).sign}});
    return {{"m", o.m},
            {"k", o.k},
            {"passed", report.passed()},
            {"all_members", report.all_members},
            {"order_independent", report.order_independent},
            {"charts_consistent", report.charts_consistent},
            {"powers_realized", report.powers_realized},
            {"transitions_ok", report.transitions_ok},
            {"transitions_checked", report.transitions_checked},
            {"charts", charts},
            {"entries", entries}};
}

json cmd_semicontinuity(const Options& o) {
    DeterminantalPair pair(o.m, o.k, parse_alphas(o.alphas));
    auto profile = mld::semicontinuity_profile(pair);
    json values = json::array();
    for (const auto& v : profile.values) values.push_back(to_json(v));
    json steps = json::array();
    for (const auto& s : profile.steps)
        steps.push_back({{"q", s.q},
                         {"difference", to_json(s.difference)},
                         {"expected", to_json(s.expected)},
                         {"holds", s.holds}});
    return {{"m", o.m},         {"k", o.k},         {"alphas", to_json(pair.alphas())},
            {"values", values}, {"steps", steps}, {"strictly_increasing", profile.strictly_increasing}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal log discrepancies of determinantal varieties"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--pretty", o.pretty, "Aligned table output instead of JSON");
    app.add_option("--threads", o.threads, "Worker threads (default: DETMLD_THREADS or 1)")->check(CLI::PositiveNumber);

    auto add_pair = [&](CLI::App* c, bool with_alphas) {
        c->add_option("--m", o.m, "Matrix size")->required();
        c->add_option("--k", o.k, "Rank bound")->required();
        if (with_alphas) c->add_option("--alphas", o.alphas, "Comma separated rationals, e.g. 1,1/2");
    };

    auto* mld_cmd = app.add_subcommand("mld", "Minimal log discrepancies")->require_subcommand(1);
    auto* mld_point = mld_cmd->add_subcommand("point", "mld at a matrix of rank q");
    add_pair(mld_point, true);
    mld_point->add_option("--q", o.q, "Rank of the point")->required();
    mld_point->add_option("--oracle", o.oracle_bound, "Also run the enumeration oracle with bound L")
        ->check(CLI::PositiveNumber);
    auto* mld_locus = mld_cmd->add_subcommand("locus", "mld along D^{k-j}");
    add_pair(mld_locus, true);
    mld_locus->add_option("--j", o.j, "Codimension index of the locus")->required();
    mld_locus->add_option("--oracle", o.oracle_bound, "Also run the enumeration oracle with bound L")
        ->check(CLI::PositiveNumber);

    auto* lc_cmd = app.add_subcommand("lc", "Log canonicity")->require_subcommand(1);
    auto* lc_check = lc_cmd->add_subcommand("check", "Check the lc inequalities");
    add_pair(lc_check, true);
    lc_check->add_option("--q", o.q, "Rank of the point");
    lc_check->add_option("--j", o.j, "Codimension index of the locus");

    auto* orbit_cmd = app.add_subcommand("orbit", "Orbit calculus")->require_subcommand(1);
    auto* orbit_codim = orbit_cmd->add_subcommand("codim", "Codimension and contact orders of an orbit");
    add_pair(orbit_codim, false);
    orbit_codim->add_option("--lambda", o.lambda, "Extended partition, e.g. inf,2,1")->required();
    orbit_codim->add_option("--q", o.q, "Also compute the codimension over a rank-q point");

    auto* ord_cmd = app.add_subcommand("ord", "Power-series contact order oracle");
    ord_cmd->add_option("--lambda", o.lambda, "Diagonal exponents, inf allowed")->required();
    ord_cmd->add_option("--m", o.m, "Matrix size")->required();
    ord_cmd->add_option("--s", o.s, "Minor size")->required();
    ord_cmd->add_option("--N", o.N, "Truncation order")->required();
    ord_cmd->add_option("--seed", o.seeds, "Random conjugation seed (repeatable)");

    auto* straighten_cmd = app.add_subcommand("straighten", "Straighten a double tableau");
    straighten_cmd->add_option("--file", o.file, "JSON double tableau {left, right}")->required();
    straighten_cmd->add_option("--kbound", o.kbound, "Work modulo (k+1)-minors")->check(CLI::PositiveNumber);
    straighten_cmd->add_option("--m", o.m, "Matrix size (default: largest entry)");

    auto* nash_cmd = app.add_subcommand("nash", "Nash ideal")->require_subcommand(1);
    auto* nash_verify = nash_cmd->add_subcommand("verify", "Exhaustive top-form reduction");
    add_pair(nash_verify, false);

    auto* semi_cmd = app.add_subcommand("semicontinuity", "q-profile of point mlds");
    add_pair(semi_cmd, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        json out;
        if (mld_point->parsed())
            out = cmd_mld(o, true);
        else if (mld_locus->parsed())
            out = cmd_mld(o, false);
        else if (lc_check->parsed())
            out = cmd_lc(o);
        else if (orbit_codim->parsed())
            out = cmd_orbit(o);
        else if (ord_cmd->parsed())
            out = cmd_ord(o);
        else if (straighten_cmd->parsed())
            out = cmd_straighten(o);
        else if (nash_verify->parsed())
            out = cmd_nash(o);
        else
            out = cmd_semicontinuity(o);
        if (o.pretty)
            print_pretty(out, std::cout);
        else
            std::cout << out.dump() << '\n';
    } catch (const ArgumentError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Rejected& e) {
        std::cerr << "rejected: " << e.what() << '\n';
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed input: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
