// Thin pybind11 layer. Rationals cross the boundary as strings ("7/2",
// "-inf"); the Python package turns them into Fraction / float('-inf').

#include "detmld/forms.hpp"
#include "detmld/mld.hpp"
#include "detmld/oracle.hpp"
#include "detmld/orbit.hpp"
#include "detmld/tableaux.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace detmld;

namespace {

std::vector<Rational> alphas_from(const std::vector<std::string>& text) {
    std::vector<Rational> out;
    for (const auto& s : text) out.push_back(parse_rational(s));
    return out;
}

std::vector<ExtNat> lambda_from(const std::vector<std::optional<std::uint64_t>>& entries) {
    std::vector<ExtNat> out;
    for (const auto& e : entries) out.push_back(e ? ExtNat(*e) : INF);
    return out;
}

py::object ext(ExtNat n) {
    if (n.is_inf()) return py::str("inf");
    return py::int_(n.value());
}

std::vector<std::string> strings(const std::vector<Rational>& v) {
    std::vector<std::string> out;
    for (const auto& r : v) out.push_back(to_string(r));
    return out;
}

py::dict oracle_dict(const oracle::OracleResult& r) {
    py::dict d;
    d["minimum"] = r.minimum.to_string();
    d["box_minimum"] = to_string(r.box_minimum);
    d["argmin"] = r.argmin;
    d["at_boundary"] = r.at_boundary;
    d["prefix_unbounded"] = r.prefix_unbounded;
    d["visited"] = r.visited;
    return d;
}

tableaux::DoubleTableau double_tableau(const std::vector<std::vector<int>>& left,
                                       const std::vector<std::vector<int>>& right) {
    return tableaux::DoubleTableau(tableaux::Tableau(left), tableaux::Tableau(right));
}

}  // namespace

PYBIND11_MODULE(_detmld, mod) {
    py::register_exception<Rejected>(mod, "Rejected", PyExc_ValueError);
    py::register_exception<InternalError>(mod, "InternalError", PyExc_RuntimeError);

    mod.def("mld_at_rank", [](int m, int k, const std::vector<std::string>& a, int q) {
        return mld::mld_at_rank(DeterminantalPair(m, k, alphas_from(a)), q).to_string();
    });
    mod.def("mld_along", [](int m, int k, const std::vector<std::string>& a, int j) {
        return mld::mld_along(DeterminantalPair(m, k, alphas_from(a)), j).to_string();
    });
    mod.def("is_lc_at_rank", [](int m, int k, const std::vector<std::string>& a, int q) {
        return mld::is_lc_at_rank(DeterminantalPair(m, k, alphas_from(a)), q);
    });
    mod.def("is_lc_along", [](int m, int k, const std::vector<std::string>& a, int j) {
        return mld::is_lc_along(DeterminantalPair(m, k, alphas_from(a)), j);
    });
    mod.def("is_terminal", &mld::is_terminal);
    mod.def("beta_coefficients", [](int m, int k, const std::vector<std::string>& a, int count) {
        return strings(mld::beta_coefficients(DeterminantalPair(m, k, alphas_from(a)), count));
    });
    mod.def("semicontinuity_profile", [](int m, int k, const std::vector<std::string>& a) {
        auto p = mld::semicontinuity_profile(DeterminantalPair(m, k, alphas_from(a)));
        std::vector<std::string> values;
        for (const auto& v : p.values) values.push_back(v.to_string());
        py::list steps;
        for (const auto& s : p.steps) {
            py::dict d;
            d["q"] = s.q;
            d["difference"] = s.difference.to_string();
            d["expected"] = to_string(s.expected);
            d["holds"] = s.holds;
            steps.append(d);
        }
        py::dict d;
        d["values"] = values;
        d["steps"] = steps;
        d["strictly_increasing"] = p.strictly_increasing;
        return d;
    });

    mod.def("orbit_info", [](int m, int k, const std::vector<std::optional<std::uint64_t>>& entries,
                             std::optional<int> q) {
        DeterminantalPair pair(m, k);
        ExtendedPartition lambda(lambda_from(entries));
        py::dict d;
        d["in_jet_space"] = orbit::in_jet_space(lambda, pair);
        d["finite_codim"] = orbit::has_finite_codim(lambda, pair);
        d["codim"] = orbit::codim(lambda, pair);
        if (q) {
            d["meets_point_fiber"] = orbit::meets_point_fiber(lambda, pair, *q);
            d["codim_point"] = orbit::codim_point(lambda, pair, *q);
        }
        py::list w;
        for (int i = 1; i <= k; ++i) w.append(ext(orbit::contact_order_subvariety(lambda, pair, i)));
        d["w"] = w;
        d["nash"] = ext(orbit::nash_contact_order(lambda, pair));
        return d;
    }, py::arg("m"), py::arg("k"), py::arg("lam"), py::arg("q") = py::none());

    mod.def("em_oracle", [](int m, int k, const std::vector<std::string>& a, const std::string& kind, int index,
                            std::uint64_t L) {
        if (kind != "point" && kind != "locus") throw Rejected("target kind must be 'point' or 'locus'");
        auto target = kind == "point" ? oracle::Target::point(index) : oracle::Target::locus(index);
        auto c = oracle::mld_via_oracle(DeterminantalPair(m, k, alphas_from(a)), target, L);
        py::dict d;
        d["oracle"] = oracle_dict(c.oracle);
        d["closed_form"] = c.closed_form.to_string();
        d["agree"] = c.agree;
        return d;
    });
    mod.def("ord_ideal_powerseries", [](const std::vector<std::optional<std::uint64_t>>& entries, int m, int s, int N,
                                        std::optional<std::uint64_t> seed) {
        return oracle::ord_ideal_powerseries(lambda_from(entries), m, s, N, {seed});
    }, py::arg("lam"), py::arg("m"), py::arg("s"), py::arg("N"), py::arg("seed") = py::none());

    mod.def("straighten", [](const std::vector<std::vector<int>>& left, const std::vector<std::vector<int>>& right,
                             int m, std::optional<int> k_bound) {
        auto dt = double_tableau(left, right);
        auto e = tableaux::straighten(dt, m, k_bound);
        MultiPoly input = tableaux::bideterminant(dt, m), back = tableaux::reexpand(e, m);
        py::list terms;
        for (const auto& t : e.terms)
            terms.append(py::make_tuple(to_string(t.coefficient), t.tableau.left.rows(), t.tableau.right.rows()));
        py::dict d;
        d["terms"] = terms;
        d["reexpansion_matches"] =
            k_bound ? tableaux::reduce_mod_minors(input - back, *k_bound).is_zero() : input == back;
        return d;
    }, py::arg("left"), py::arg("right"), py::arg("m"), py::arg("k_bound") = py::none());
    mod.def("is_standard", [](const std::vector<std::vector<int>>& left, const std::vector<std::vector<int>>& right) {
        return tableaux::is_standard(double_tableau(left, right));
    });

    mod.def("verify_nash", [](int m, int k, unsigned threads) {
        forms::NashOptions options;
        options.threads = threads;
        auto r = forms::verify_nash(m, k, options);
        py::list entries;
        for (const auto& e : r.entries) {
            py::dict d;
            d["indices"] = e.indices;
            d["f"] = e.f.to_string();
            d["member"] = e.member;
            entries.append(d);
        }
        py::dict d;
        d["passed"] = r.passed();
        d["all_members"] = r.all_members;
        d["order_independent"] = r.order_independent;
        d["charts_consistent"] = r.charts_consistent;
        d["powers_realized"] = r.powers_realized;
        d["transitions_ok"] = r.transitions_ok;
        d["charts"] = r.charts;
        d["transitions_checked"] = r.transitions_checked;
        d["entries"] = entries;
        return d;
    }, py::arg("m"), py::arg("k"), py::arg("threads") = 1);
}
