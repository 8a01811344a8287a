#include "acceptance_paths.hpp"
#include "substitution_oracle.hpp"

#include "detmld/forms.hpp"
#include "detmld/mld.hpp"
#include "detmld/oracle.hpp"
#include "detmld/tableaux.hpp"

#include <json.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace detmld;
using json = nlohmann::json;
using oracle::Target;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

struct Run {
    int code;
    std::string out;
};

Run run_command(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json cli(const std::string& args) {
    auto r = run_command(std::string(kCliPath) + " " + args + " 2>/dev/null");
    if (r.code != 0) return json{{"exit", r.code}};
    return json::parse(r.out, nullptr, false);
}

std::string alpha_arg(const std::vector<Rational>& a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + a[i].get_str();
    return s;
}

Rational quarter(std::mt19937_64& rng) {
    Rational r(static_cast<long>(rng() % 13), 4);
    r.canonicalize();
    return r;
}

std::vector<Rational> random_alphas(std::mt19937_64& rng, int k) {
    std::vector<Rational> a;
    for (int i = 0; i < k; ++i) a.push_back(quarter(rng));
    return a;
}

bool all_nonnegative(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (x < 0) return false;
    return true;
}

bool some_prefix_negative(const std::vector<Rational>& v) {
    Rational sum = 0;
    for (const auto& x : v) {
        sum += x;
        if (sum < 0) return true;
    }
    return false;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1: q(m-k)+km at alpha = 0 through the CLI.
Outcome headline_sweep() {
    Outcome o;
    for (int m = 1; m <= 6; ++m)
        for (int k = 1; k <= m; ++k)
            for (int q = 0; q <= k; ++q) {
                std::string zeros = alpha_arg(std::vector<Rational>(static_cast<std::size_t>(k), Rational(0)));
                auto j = cli("mld point --m " + std::to_string(m) + " --k " + std::to_string(k) + " --alphas " + zeros +
                             " --q " + std::to_string(q));
                const int value = q * (m - k) + k * m;
                const std::string expected = std::to_string(value);
                std::ostringstream where;
                where << "m=" << m << " k=" << k << " q=" << q;
                o.require(j.contains("mld") && j["mld"] == expected, "mld point mismatch at " + where.str());
                o.require(mld::mld_at_rank(DeterminantalPair(m, k), q) == MldValue::finite(value),
                          "library mismatch at " + where.str());
            }
    return o;
}

// 2: mld along the singular locus and terminality.
Outcome singular_locus() {
    Outcome o;
    for (int m = 2; m <= 6; ++m)
        for (int k = 1; k < m; ++k) {
            std::string zeros = alpha_arg(std::vector<Rational>(static_cast<std::size_t>(k), Rational(0)));
            auto j = cli("mld locus --m " + std::to_string(m) + " --k " + std::to_string(k) + " --alphas " + zeros +
                         " --j 1");
            std::string where = "m=" + std::to_string(m) + " k=" + std::to_string(k);
            o.require(j.contains("mld") && j["mld"] == std::to_string(m - k + 1), "mld locus mismatch at " + where);
            o.require(mld::is_terminal(m, k), "not terminal at " + where);
        }
    return o;
}

// 3: oracle with L = 2 against the closed form, and the analytic -inf certificate.
Outcome oracle_agreement(std::size_t& agreed, std::size_t& certified) {
    Outcome o;
    std::mt19937_64 rng(2024);
    const int per_case = 100, max_attempts = 20000;
    for (int m = 1; m <= 5; ++m)
        for (int k = 1; k <= m; ++k)
            for (int q = 0; q <= k; ++q) {
                int good = 0, bad = 0;
                for (int attempt = 0; attempt < max_attempts && (good < per_case || bad < per_case); ++attempt) {
                    DeterminantalPair pair(m, k, random_alphas(rng, k));
                    auto beta = mld::beta_coefficients(pair, k - q);
                    std::string where = "m=" + std::to_string(m) + " k=" + std::to_string(k) +
                                        " q=" + std::to_string(q) + " alphas=" + alpha_arg(pair.alphas());
                    if (all_nonnegative(beta) && good < per_case) {
                        ++good;
                        auto c = oracle::mld_via_oracle(pair, Target::point(q), 2);
                        o.require(c.agree && c.oracle.minimum == c.closed_form, "disagreement at " + where);
                    } else if (some_prefix_negative(beta) && bad < per_case) {
                        ++bad;
                        auto c = oracle::mld_via_oracle(pair, Target::point(q), 2);
                        o.require(c.oracle.prefix_unbounded && c.oracle.minimum == MldValue::neg_infinity() &&
                                      c.closed_form == MldValue::neg_infinity(),
                                  "missing -inf certificate at " + where);
                    }
                }
                // Every case admits lc alphas (alpha = 0 is one), so the sampler must find them.
                o.require(good == per_case, "too few lc samples");
                agreed += static_cast<std::size_t>(good);
                certified += static_cast<std::size_t>(bad);
            }
    o.require(certified >= 100, "fewer than 100 samples with a negative beta prefix");
    return o;
}

// 4: the (3, 2, (1, 7/2), q = 0) divergence.
Outcome divergence() {
    Outcome o;
    DeterminantalPair pair(3, 2, {1, Rational(7, 2)});
    auto c = oracle::mld_via_oracle(pair, Target::point(0), 6);
    o.require(c.closed_form == MldValue::neg_infinity(), "closed form is finite");
    o.require(c.oracle.minimum.is_finite(), "oracle is not finite");
    o.require(!c.oracle.at_boundary, "oracle minimum sits on the box boundary");
    o.require(!c.agree, "library reports agreement");
    auto j = cli("mld point --m 3 --k 2 --alphas 1,7/2 --q 0 --oracle 6");
    o.require(j.contains("agree") && j["agree"] == false, "CLI does not report agree=false");
    o.require(j.contains("mld") && j["mld"] == "-inf", "CLI closed form is not -inf");
    return o;
}

// 5: t-order of I_s on diagonal arcs, plain and conjugated.
Outcome contact_orders() {
    Outcome o;
    for (int m = 1; m <= 4; ++m) {
        std::vector<ExtNat> lambda(static_cast<std::size_t>(m));
        std::function<void(int, std::uint64_t)> rec = [&](int pos, std::uint64_t cap) {
            if (pos == m) {
                for (int s = 1; s <= m; ++s) {
                    std::uint64_t expected = 0;
                    for (int i = m - s; i < m; ++i) expected += lambda[static_cast<std::size_t>(i)].value();
                    const int N = 3 * m + 1;
                    std::string where = "m=" + std::to_string(m) + " s=" + std::to_string(s);
                    o.require(oracle::ord_ideal_powerseries(lambda, m, s, N) == std::optional(expected),
                              "order mismatch at " + where);
                    for (std::uint64_t seed = 1; seed <= 5; ++seed)
                        o.require(oracle::ord_ideal_powerseries(lambda, m, s, N, {seed}) == std::optional(expected),
                                  "conjugated order mismatch at " + where);
                }
                return;
            }
            for (std::uint64_t v = 0; v <= cap; ++v) {
                lambda[static_cast<std::size_t>(pos)] = ExtNat(v);
                rec(pos + 1, v);
            }
        };
        rec(0, 3);
    }
    return o;
}

// 6: strict increase of mld in q with the exact step sizes.
Outcome semicontinuity(std::size_t& profiles, std::size_t& strict_profiles) {
    Outcome o;
    std::mt19937_64 rng(77);
    for (int m = 1; m <= 5; ++m)
        for (int k = 1; k <= m; ++k) {
            int done = 0;
            for (int attempt = 0; attempt < 100000 && done < 50; ++attempt) {
                DeterminantalPair pair(m, k, random_alphas(rng, k));
                // Steps are only defined between finite values.
                if (!mld::is_lc_at_rank(pair, 0)) continue;
                ++done;
                auto p = mld::semicontinuity_profile(pair);
                std::string where = "m=" + std::to_string(m) + " k=" + std::to_string(k) +
                                    " alphas=" + alpha_arg(pair.alphas());
                // With k = m and alpha_1 = 0 every step is exactly zero.
                const bool strict = m > k || pair.alpha(1) > 0;
                if (strict) {
                    o.require(p.strictly_increasing, "not strictly increasing at " + where);
                    ++strict_profiles;
                }
                for (int q = 1; q <= k; ++q) {
                    Rational expected = m - k;
                    for (int i = 1; i <= k - q + 1; ++i) expected += pair.alpha(i);
                    auto diff = p.values[static_cast<std::size_t>(q)].value() -
                                p.values[static_cast<std::size_t>(q - 1)].value();
                    o.require(diff == expected && (!strict || diff > 0), "wrong step at " + where + " q=" + std::to_string(q));
                    o.require(p.values[static_cast<std::size_t>(q)] == mld::mld_at_rank(pair, q),
                              "profile differs from mld_at_rank at " + where);
                }
            }
            o.require(done == 50, "too few lc samples");
            profiles += static_cast<std::size_t>(done);
        }
    return o;
}

std::vector<tableaux::YoungDiagram> shapes_of_size(int n) {
    std::vector<tableaux::YoungDiagram> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<tableaux::Tableau> all_fillings(const tableaux::YoungDiagram& shape, int m) {
    std::vector<tableaux::Tableau> out;
    std::vector<std::vector<int>> rows;
    for (int r : shape.rows()) rows.emplace_back(static_cast<std::size_t>(r), 1);
    for (;;) {
        out.emplace_back(rows);
        std::size_t r = 0, c = 0;
        for (;;) {
            if (r == rows.size()) return out;
            if (rows[r][c] < m) {
                ++rows[r][c];
                break;
            }
            rows[r][c] = 1;
            if (++c == rows[r].size()) {
                c = 0;
                ++r;
            }
        }
    }
}

bool rows_distinct(const tableaux::Tableau& t) {
    for (const auto& r : t.rows())
        if (std::set<int>(r.begin(), r.end()).size() != r.size()) return false;
    return true;
}

// 7: straightening soundness and the standard basis.
Outcome straightening(std::size_t& checked) {
    using namespace tableaux;
    Outcome o;
    for (int m = 1; m <= 3; ++m)
        for (int degree = 1; degree <= 3; ++degree) {
            for (const auto& shape : shapes_of_size(degree)) {
                if (shape.row(0) > m) continue;
                // Rows index minors, so their entries must be distinct.
                std::vector<Tableau> fills;
                for (auto& t : all_fillings(shape, m))
                    if (rows_distinct(t)) fills.push_back(t);
                for (const auto& l : fills)
                    for (const auto& r : fills) {
                        DoubleTableau input(l, r);
                        MultiPoly poly = bideterminant(input, m);
                        for (std::optional<int> kb : {std::optional<int>{}, std::optional<int>(1), std::optional<int>(2)}) {
                            if (kb && *kb > m) continue;
                            ++checked;
                            auto e = straighten(input, m, kb);
                            MultiPoly back = reexpand(e, m);
                            bool same = kb ? reduce_mod_minors(poly - back, *kb).is_zero() : poly == back;
                            o.require(same, "re-expansion differs");
                            for (const auto& t : e.terms) {
                                o.require(is_standard(t.tableau), "non-standard term");
                                o.require(dominance_leq(input.shape(), t.tableau.shape()), "shape not dominating");
                                o.require(t.tableau.left.content(m) == input.left.content(m) &&
                                              t.tableau.right.content(m) == input.right.content(m),
                                          "content changed");
                                o.require(!kb || t.tableau.shape().row(0) <= *kb, "row longer than k_bound");
                            }
                        }
                    }
            }
            auto basis = check_standard_basis(m, degree);
            o.require(basis.rank == basis.standard, "standard bideterminants are dependent");
            o.require(basis.standard == basis.monomials, "standard bideterminants do not span");
        }
    return o;
}

// 8: Nash ideal verification, with the substitution check for D^1 in 2 x 2.
Outcome nash() {
    Outcome o;
    for (auto [m, k] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}}) {
        auto report = forms::verify_nash(m, k);
        std::string where = "m=" + std::to_string(m) + " k=" + std::to_string(k);
        o.require(report.passed(), "verify_nash failed at " + where);
        for (const auto& e : report.entries) {
            o.require(e.member, "non-member F at " + where);
            o.require(e.f.is_zero() || e.f.homogeneous_degree() == std::optional<int>(k * (m - k)),
                      "wrong degree at " + where);
        }
        if (m == 2 && k == 1)
            for (const auto& e : report.entries)
                o.require(test_oracle::matches_substitution(e.indices, e.f) ||
                              test_oracle::matches_substitution(e.indices, -e.f),
                          "substitution oracle mismatch");
    }
    return o;
}

// 9: every property suite passes.
Outcome property_suites() {
    Outcome o;
    for (const char* path : kSuitePaths) {
        auto r = run_command(std::string(path) + " >/dev/null 2>&1");
        o.require(r.code == 0, std::string("suite failed: ") + path);
    }
    return o;
}

}  // namespace

int main() {
    bool all = true;
    auto report = [&](int id, const std::string& name, const Outcome& o, double secs, double limit,
                      const std::string& extra = "") {
        bool pass = o.ok && (limit <= 0 || secs < limit);
        all = all && pass;
        std::printf("%s criterion %d (%s): %.3f s", pass ? "PASS" : "FAIL", id, name.c_str(), secs);
        if (limit > 0) std::printf(" [limit %.0f s]", limit);
        if (!extra.empty()) std::printf(" %s", extra.c_str());
        if (!o.ok) std::printf(" -- %s", o.detail.c_str());
        std::printf("\n");
        std::fflush(stdout);
        return pass;
    };
    auto time = [](auto&& f) {
        auto t0 = std::chrono::steady_clock::now();
        auto o = f();
        return std::pair{o, seconds_since(t0)};
    };

    bool first_eight = true;
    {
        auto [o, s] = time(headline_sweep);
        first_eight &= report(1, "headline formula sweep", o, s, 1);
    }
    {
        auto [o, s] = time(singular_locus);
        first_eight &= report(2, "singular-locus mld", o, s, 0);
    }
    {
        std::size_t agreed = 0, certified = 0;
        auto [o, s] = time([&] { return oracle_agreement(agreed, certified); });
        first_eight &= report(3, "oracle agreement", o, s, 30,
                              std::to_string(agreed) + " agreeing, " + std::to_string(certified) + " certified -inf");
    }
    {
        auto [o, s] = time(divergence);
        first_eight &= report(4, "divergence documentation", o, s, 0);
    }
    {
        auto [o, s] = time(contact_orders);
        first_eight &= report(5, "contact-order oracle", o, s, 60);
    }
    {
        std::size_t profiles = 0, strict = 0;
        auto [o, s] = time([&] { return semicontinuity(profiles, strict); });
        first_eight &= report(6, "semicontinuity", o, s, 0,
                              std::to_string(profiles) + " profiles, " + std::to_string(strict) +
                                  " with positive steps");
    }
    {
        std::size_t checked = 0;
        auto [o, s] = time([&] { return straightening(checked); });
        first_eight &= report(7, "straightening soundness", o, s, 120, std::to_string(checked) + " expansions");
    }
    {
        auto [o, s] = time(nash);
        first_eight &= report(8, "Nash verification", o, s, 300);
    }
    {
        auto [o, s] = time(property_suites);
        if (!first_eight) {
            o.ok = false;
            o.detail = "an earlier criterion failed";
        }
        report(9, "property suites", o, s, 0);
    }
    return all ? 0 : 1;
}
