#include "detmld/forms.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <set>
#include <thread>

namespace detmld::forms {

// ---------------------------------------------------------------------------
// Exterior forms

ExteriorForm::ExteriorForm(int m, int degree) : m_(m), degree_(degree) {
    if (m < 1 || degree < 0) throw Rejected("invalid exterior form layout");
}

ExteriorForm ExteriorForm::basis(int m, std::vector<int> indices, const MultiPoly& coefficient) {
    ExteriorForm f(m, static_cast<int>(indices.size()));
    // Insertion sort, counting transpositions.
    int swaps = 0;
    for (std::size_t i = 1; i < indices.size(); ++i)
        for (std::size_t j = i; j > 0 && indices[j - 1] > indices[j]; --j) {
            std::swap(indices[j - 1], indices[j]);
            ++swaps;
        }
    if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) return f;
    f.add_term(indices, swaps % 2 ? -coefficient : coefficient);
    return f;
}

MultiPoly ExteriorForm::coefficient(const std::vector<int>& sorted_indices) const {
    auto it = terms_.find(sorted_indices);
    return it == terms_.end() ? MultiPoly(m_) : it->second;
}

void ExteriorForm::add_term(const std::vector<int>& sorted_indices, const MultiPoly& c) {
    if (static_cast<int>(sorted_indices.size()) != degree_) throw Rejected("form term has the wrong degree");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(sorted_indices, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ExteriorForm& ExteriorForm::operator+=(const ExteriorForm& o) {
    if (o.m_ != m_ || o.degree_ != degree_) throw Rejected("adding forms of different layout");
    for (const auto& [idx, c] : o.terms_) add_term(idx, c);
    return *this;
}

ExteriorForm operator*(const MultiPoly& c, const ExteriorForm& f) {
    ExteriorForm r(f.m_, f.degree_);
    for (const auto& [idx, v] : f.terms_) r.add_term(idx, c * v);
    return r;
}

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b) {
    if (a.m_ != b.m_) throw Rejected("wedge of forms in different rings");
    ExteriorForm r(a.m_, a.degree_ + b.degree_);
    std::vector<int> merged;
    for (const auto& [ia, ca] : a.terms_) {
        for (const auto& [ib, cb] : b.terms_) {
            merged.clear();
            // Moving each index of b left past the larger indices of a.
            int sign_swaps = 0;
            std::size_t p = 0, q = 0;
            bool repeated = false;
            while (p < ia.size() || q < ib.size()) {
                if (q == ib.size() || (p < ia.size() && ia[p] < ib[q])) {
                    merged.push_back(ia[p++]);
                } else if (p == ia.size() || ib[q] < ia[p]) {
                    sign_swaps += static_cast<int>(ia.size() - p);
                    merged.push_back(ib[q++]);
                } else {
                    repeated = true;
                    break;
                }
            }
            if (repeated) continue;
            MultiPoly c = ca * cb;
            r.add_term(merged, sign_swaps % 2 ? -c : c);
        }
    }
    return r;
}

ExteriorForm d_minor(const MinorIndex& idx, int m) {
    idx.check_range(m);
    if (idx.size() == 0) throw Rejected("d of an empty minor");
    ExteriorForm f(m, 1);
    const auto& rows = idx.rows();
    const auto& cols = idx.cols();
    for (std::size_t a = 0; a < rows.size(); ++a) {
        for (std::size_t b = 0; b < cols.size(); ++b) {
            std::vector<int> sub_rows, sub_cols;
            for (std::size_t r = 0; r < rows.size(); ++r)
                if (r != a) sub_rows.push_back(rows[r]);
            for (std::size_t c = 0; c < cols.size(); ++c)
                if (c != b) sub_cols.push_back(cols[c]);
            MultiPoly cof = minor_poly(MinorIndex(sub_rows, sub_cols), m);
            if ((a + b) % 2) cof = -cof;
            f.add_term({var_index(m, rows[a], cols[b])}, cof);
        }
    }
    return f;
}

// ---------------------------------------------------------------------------
// Elimination of bad differentials

namespace {

void check_index_set(const std::vector<int>& s, int k, int m, const char* what) {
    if (static_cast<int>(s.size()) != k) throw Rejected(std::string(what) + " must have k elements");
    std::set<int> seen;
    for (int v : s) {
        if (v < 1 || v > m) throw Rejected(std::string(what) + " index out of range");
        if (!seen.insert(v).second) throw Rejected(std::string(what) + " indices must be distinct");
    }
}

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

std::vector<int> with(std::vector<int> v, int x) {
    v.push_back(x);
    return sorted(std::move(v));
}

std::vector<int> chart_variables(const std::vector<int>& rows, const std::vector<int>& cols, int m) {
    std::vector<int> s;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            if (contains(rows, i) || contains(cols, j)) s.push_back(var_index(m, i, j));
    return s;
}

struct Elimination {
    MultiPoly cleared;  // coefficient of wedge(S_IJ), times Delta^eliminated
    int eliminated;
};

/// Rewrites wedge(indices) on D(Delta_IJ) as cleared / Delta^b * wedge(S_IJ).
Elimination eliminate(const std::vector<int>& indices, const std::vector<int>& rows, const std::vector<int>& cols,
                      int m, int k, EliminationOrder order) {
    const int n = k * (2 * m - k);
    if (static_cast<int>(indices.size()) != n)
        throw Rejected("top form needs exactly k(2m-k) = " + std::to_string(n) + " differentials");
    std::set<int> seen;
    for (int v : indices) {
        if (v < 0 || v >= m * m) throw Rejected("variable index out of range");
        if (!seen.insert(v).second) throw Rejected("top form differentials must be distinct");
    }

    const MultiPoly delta = minor_poly(MinorIndex(rows, cols), m);
    std::vector<std::pair<int, int>> bad;
    for (int v : sorted(indices)) {
        auto [i, j] = var_position(m, v);
        if (!contains(rows, i) && !contains(cols, j)) bad.emplace_back(i, j);
    }
    if (order == EliminationOrder::reverse_lexicographic) std::reverse(bad.begin(), bad.end());

    ExteriorForm form = ExteriorForm::basis(m, indices, MultiPoly::constant(m, 1));
    for (auto [i, j] : bad) {
        const int v = var_index(m, i, j);
        ExteriorForm relation = d_minor(MinorIndex(with(rows, i), with(cols, j)), m);
        const MultiPoly pivot = relation.coefficient({v});
        int pivot_sign;
        if (pivot == delta)
            pivot_sign = 1;
        else if (pivot == -delta)
            pivot_sign = -1;
        else
            throw InternalError("relation pivot is not +-Delta_IJ");
        // Delta * dx_v = -pivot_sign * (relation - pivot dx_v)
        ExteriorForm replacement(m, 1);
        for (const auto& [idx, c] : relation.terms())
            if (idx[0] != v) replacement.add_term(idx, pivot_sign > 0 ? -c : c);

        ExteriorForm next(m, form.degree());
        for (const auto& [idx, c] : form.terms()) {
            auto pos = std::find(idx.begin(), idx.end(), v);
            if (pos == idx.end()) {
                next += delta * ExteriorForm::basis(m, idx, c);
                continue;
            }
            // dx_idx = (-1)^pos dx_v ^ dx_rest
            std::vector<int> rest(idx.begin(), pos);
            rest.insert(rest.end(), pos + 1, idx.end());
            MultiPoly coef = (pos - idx.begin()) % 2 ? -c : c;
            next += wedge(replacement, ExteriorForm::basis(m, rest, coef));
        }
        form = std::move(next);
    }

    const auto target = chart_variables(rows, cols, m);
    Elimination out{MultiPoly(m), static_cast<int>(bad.size())};
    for (const auto& [idx, c] : form.terms()) {
        if (idx != target) throw InternalError("elimination left a differential outside the chart");
        out.cleared = c;
    }
    return out;
}

// Chart signs are path products of transition signs; cache them.
std::mutex sign_mutex;
std::map<std::tuple<int, int, std::vector<int>, std::vector<int>>, int> sign_cache;

int chart_sign(const std::vector<int>& rows, const std::vector<int>& cols, int m, int k) {
    auto key = std::make_tuple(m, k, rows, cols);
    {
        std::lock_guard lock(sign_mutex);
        if (auto it = sign_cache.find(key); it != sign_cache.end()) return it->second;
    }
    std::vector<int> cur_rows(static_cast<std::size_t>(k)), cur_cols(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur_rows[static_cast<std::size_t>(i)] = cur_cols[static_cast<std::size_t>(i)] = i + 1;
    int sign = 1;
    auto step = [&](std::vector<int>& cur, const std::vector<int>& goal, bool is_rows) {
        while (cur != goal) {
            int out = 0, in = 0;
            for (int v : cur)
                if (!contains(goal, v)) {
                    out = v;
                    break;
                }
            for (int v : goal)
                if (!contains(cur, v)) {
                    in = v;
                    break;
                }
            std::vector<int> next = cur;
            *std::find(next.begin(), next.end(), out) = in;
            next = sorted(std::move(next));
            auto report = is_rows ? verify_chart_transition(cur_rows, cur_cols, next, cur_cols, m, k)
                                  : verify_chart_transition(cur_rows, cur_cols, cur_rows, next, m, k);
            if (!report.ok) throw InternalError("chart transition failed to verify");
            sign *= report.sign;
            cur = std::move(next);
        }
    };
    step(cur_rows, rows, true);
    step(cur_cols, cols, false);
    std::lock_guard lock(sign_mutex);
    sign_cache.emplace(std::move(key), sign);
    return sign;
}

}  // namespace

ChartForm chart_form(const std::vector<int>& rows, const std::vector<int>& cols, int m, int k) {
    if (k < 1 || k > m) throw Rejected("k must satisfy 1 <= k <= m");
    check_index_set(rows, k, m, "chart rows");
    check_index_set(cols, k, m, "chart columns");
    auto r = sorted(rows), c = sorted(cols);
    return ChartForm{MinorIndex(r, c), chart_variables(r, c, m), m - k, chart_sign(r, c, m, k)};
}

ReductionResult reduce_top_form(const std::vector<int>& indices, const ChartForm& chart, int m, int k,
                                EliminationOrder order) {
    if (k < 1 || k > m) throw Rejected("k must satisfy 1 <= k <= m");
    if (static_cast<int>(chart.chart.size()) != k) throw Rejected("chart minor must be k x k");
    chart.chart.check_range(m);
    const auto& rows = chart.chart.rows();
    const auto& cols = chart.chart.cols();
    Elimination el = eliminate(indices, rows, cols, m, k, order);

    const MultiPoly delta = minor_poly(chart.chart, m);
    const int excess = el.eliminated - (m - k);
    MultiPoly raw(m);
    if (excess <= 0) {
        raw = el.cleared * pow(delta, static_cast<unsigned>(-excess));
    } else {
        auto q = tableaux::divide_mod_minors(el.cleared, pow(delta, static_cast<unsigned>(excess)), k);
        if (!q) throw InternalError("top form does not restrict to a regular multiple of w");
        raw = std::move(*q);
    }
    ReductionResult result{MultiPoly(m), {}, el.eliminated, el.cleared};
    result.f = tableaux::reduce_mod_minors(raw, k) * Rational(chart.sign);
    result.certificate = tableaux::subalgebra_membership(result.f, m, k);
    return result;
}

TransitionReport verify_chart_transition(const std::vector<int>& rows, const std::vector<int>& cols,
                                         const std::vector<int>& rows2, const std::vector<int>& cols2, int m,
                                         int k) {
    if (k < 1 || k > m) throw Rejected("k must satisfy 1 <= k <= m");
    check_index_set(rows, k, m, "chart rows");
    check_index_set(cols, k, m, "chart columns");
    check_index_set(rows2, k, m, "chart rows");
    check_index_set(cols2, k, m, "chart columns");
    const auto I = sorted(rows), J = sorted(cols), I2 = sorted(rows2), J2 = sorted(cols2);

    TransitionReport report;
    if (I == I2 && J == J2) {
        report.ok = report.cleared_identity = true;
        report.sign = 1;
        return report;
    }
    auto difference = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> d;
        for (int v : a)
            if (!contains(b, v)) d.push_back(v);
        return d;
    };
    const bool row_swap = J == J2 && difference(I, I2).size() == 1;
    const bool col_swap = I == I2 && difference(J, J2).size() == 1;
    if (!row_swap && !col_swap) throw Rejected("charts must differ by exactly one row or one column");

    const MultiPoly delta = minor_poly(MinorIndex(I, J), m);
    const MultiPoly delta2 = minor_poly(MinorIndex(I2, J2), m);
    auto equal_up_to_sign = [&](const MultiPoly& a, const MultiPoly& b) {
        return tableaux::reduce_mod_minors(a - b, k).is_zero() || tableaux::reduce_mod_minors(a + b, k).is_zero();
    };

    // Two-term relation Delta' Lambda ^ dx_old = +-Delta Lambda ^ dx_new for
    // each transported entry.
    const int old_line = row_swap ? difference(I, I2)[0] : difference(J, J2)[0];
    const int new_line = row_swap ? difference(I2, I)[0] : difference(J2, J)[0];
    const auto& others = row_swap ? J : I;
    for (int t = 1; t <= m; ++t) {
        if (contains(others, t)) continue;
        std::vector<int> minor_rows = row_swap ? with(I, new_line) : with(I, t);
        std::vector<int> minor_cols = row_swap ? with(J, t) : with(J, new_line);
        const int v_old = row_swap ? var_index(m, old_line, t) : var_index(m, t, old_line);
        const int v_new = row_swap ? var_index(m, new_line, t) : var_index(m, t, new_line);
        std::vector<int> lambda;
        for (int p : minor_rows)
            for (int q : minor_cols) {
                int v = var_index(m, p, q);
                if (v != v_old && v != v_new) lambda.push_back(v);
            }
        ExteriorForm x = wedge(ExteriorForm::basis(m, lambda, MultiPoly::constant(m, 1)),
                               d_minor(MinorIndex(minor_rows, minor_cols), m));
        bool good = x.terms().size() == 2 && equal_up_to_sign(x.coefficient(sorted(with(lambda, v_old))), delta2) &&
                    equal_up_to_sign(x.coefficient(sorted(with(lambda, v_new))), delta);
        report.column_relations.push_back(good);
    }

    // Cleared identity: wedge(S') = G / Delta^{m-k} wedge(S) with G = +-Delta'^{m-k}.
    Elimination el = eliminate(chart_variables(I2, J2, m), I, J, m, k, EliminationOrder::lexicographic);
    if (el.eliminated == m - k) {
        const MultiPoly target = pow(delta2, static_cast<unsigned>(m - k));
        if (tableaux::reduce_mod_minors(el.cleared - target, k).is_zero()) {
            report.cleared_identity = true;
            report.sign = 1;
        } else if (tableaux::reduce_mod_minors(el.cleared + target, k).is_zero()) {
            report.cleared_identity = true;
            report.sign = -1;
        }
    }
    report.ok = report.cleared_identity &&
                std::all_of(report.column_relations.begin(), report.column_relations.end(), [](bool b) { return b; });
    return report;
}

// ---------------------------------------------------------------------------
// Nash ideal verification

namespace {

std::vector<std::vector<int>> subsets(int n, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) cur[static_cast<std::size_t>(i)] = i;
    if (size > n) return out;
    for (;;) {
        out.push_back(cur);
        int i = size - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - size + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::vector<int> plus_one(std::vector<int> v) {
    for (auto& x : v) ++x;
    return v;
}

}  // namespace

NashReport verify_nash(int m, int k, const NashOptions& options) {
    if (k < 1 || k > m) throw Rejected("k must satisfy 1 <= k <= m");
    if (m > 3) throw Rejected("exhaustive Nash verification is limited to m <= 3");

    NashReport report;
    report.m = m;
    report.k = k;

    std::vector<ChartForm> charts;
    for (const auto& r : subsets(m, k))
        for (const auto& c : subsets(m, k)) charts.push_back(chart_form(plus_one(r), plus_one(c), m, k));
    report.charts = charts.size();

    // Single-swap transitions, and agreement of their signs with the chart signs.
    report.transitions_ok = true;
    for (std::size_t a = 0; a < charts.size(); ++a) {
        for (std::size_t b = a + 1; b < charts.size(); ++b) {
            const auto& ca = charts[a].chart;
            const auto& cb = charts[b].chart;
            std::size_t row_diff = 0, col_diff = 0;
            for (int v : ca.rows()) row_diff += !contains(cb.rows(), v);
            for (int v : ca.cols()) col_diff += !contains(cb.cols(), v);
            if (row_diff + col_diff != 1) continue;
            auto t = verify_chart_transition(ca.rows(), ca.cols(), cb.rows(), cb.cols(), m, k);
            ++report.transitions_checked;
            if (!t.ok || charts[b].sign != charts[a].sign * t.sign) report.transitions_ok = false;
        }
    }

    const ChartForm& reference = charts.front();
    const auto all = subsets(m * m, k * (2 * m - k));
    report.entries.resize(all.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t s; (s = next.fetch_add(1)) < all.size();) {
            auto start = std::chrono::steady_clock::now();
            NashEntry& e = report.entries[s];
            e.indices = all[s];
            auto ref = reduce_top_form(e.indices, reference, m, k);
            e.f = ref.f;
            auto deg = e.f.homogeneous_degree();
            e.member = ref.certificate.member && deg && (e.f.is_zero() || *deg == k * (m - k));
            e.order_independent =
                reduce_top_form(e.indices, reference, m, k, EliminationOrder::reverse_lexicographic).f == e.f;
            e.chart_consistent = true;
            if (options.check_all_charts)
                for (const auto& c : charts)
                    if (reduce_top_form(e.indices, c, m, k).f != e.f) e.chart_consistent = false;
            e.micros = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start)
                           .count();
        }
    };
    const unsigned threads = std::max(1u, options.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    report.all_members = report.order_independent = report.charts_consistent = true;
    for (const auto& e : report.entries) {
        report.all_members = report.all_members && e.member;
        report.order_independent = report.order_independent && e.order_independent;
        report.charts_consistent = report.charts_consistent && e.chart_consistent;
    }

    report.powers_realized = true;
    for (const auto& c : charts) {
        auto it = std::find_if(report.entries.begin(), report.entries.end(),
                               [&](const NashEntry& e) { return e.indices == c.numerator_indices; });
        const MultiPoly power =
            tableaux::reduce_mod_minors(pow(minor_poly(c.chart, m), static_cast<unsigned>(m - k)), k);
        if (it == report.entries.end() || (it->f != power && it->f != -power)) report.powers_realized = false;
    }
    return report;
}

}  // namespace detmld::forms
