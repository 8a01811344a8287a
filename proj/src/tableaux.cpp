#include "detmld/tableaux.hpp"

#include "detmld/linalg.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

namespace detmld::tableaux {

// ---------------------------------------------------------------------------
// Diagrams and tableaux

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] < 1) throw Rejected("Young diagram rows must be positive");
        if (i > 0 && rows_[i] > rows_[i - 1]) throw Rejected("Young diagram rows must be nonincreasing");
    }
}

int YoungDiagram::size() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    std::vector<int> lengths;
    for (const auto& r : rows_) lengths.push_back(static_cast<int>(r.size()));
    YoungDiagram check(lengths);
    for (const auto& r : rows_)
        for (int v : r)
            if (v < 1) throw Rejected("tableau entries must be positive");
}

YoungDiagram Tableau::shape() const {
    std::vector<int> lengths;
    for (const auto& r : rows_) lengths.push_back(static_cast<int>(r.size()));
    return YoungDiagram(lengths);
}

std::vector<int> Tableau::content(int m) const {
    std::vector<int> c(static_cast<std::size_t>(m), 0);
    for (const auto& r : rows_)
        for (int v : r) {
            if (v > m) throw Rejected("tableau entry exceeds m");
            ++c[static_cast<std::size_t>(v - 1)];
        }
    return c;
}

int Tableau::max_entry() const {
    int mx = 0;
    for (const auto& r : rows_)
        for (int v : r) mx = std::max(mx, v);
    return mx;
}

DoubleTableau::DoubleTableau(Tableau l, Tableau r) : left(std::move(l)), right(std::move(r)) {
    if (left.shape() != right.shape()) throw Rejected("both sides of a double tableau need the same shape");
}

bool dominance_leq(const YoungDiagram& sigma, const YoungDiagram& tau) {
    const std::size_t n = std::max(sigma.rows().size(), tau.rows().size());
    int a = 0, b = 0;
    for (std::size_t j = 0; j < n; ++j) {
        a += sigma.row(j);
        b += tau.row(j);
        if (a > b) return false;
    }
    return true;
}

bool tableau_leq(const Tableau& a, const Tableau& b) {
    const std::size_t rows = std::max(a.rows().size(), b.rows().size());
    const int qmax = std::max(a.max_entry(), b.max_entry());
    for (int q = 1; q <= qmax; ++q) {
        int ca = 0, cb = 0;
        for (std::size_t p = 0; p < rows; ++p) {
            if (p < a.rows().size()) ca += static_cast<int>(std::count_if(a.rows()[p].begin(), a.rows()[p].end(), [q](int v) { return v <= q; }));
            if (p < b.rows().size()) cb += static_cast<int>(std::count_if(b.rows()[p].begin(), b.rows()[p].end(), [q](int v) { return v <= q; }));
            if (ca > cb) return false;
        }
    }
    return true;
}

bool double_tableau_leq(const DoubleTableau& a, const DoubleTableau& b) {
    return tableau_leq(a.left, b.left) && tableau_leq(a.right, b.right);
}

bool is_standard(const Tableau& t) {
    const auto& rows = t.rows();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c > 0 && rows[r][c] <= rows[r][c - 1]) return false;
            if (r > 0 && rows[r][c] < rows[r - 1][c]) return false;
        }
    }
    return true;
}

bool is_standard(const DoubleTableau& dt) { return is_standard(dt.left) && is_standard(dt.right); }

MultiPoly bideterminant(const DoubleTableau& dt, int m) {
    MultiPoly p = MultiPoly::constant(m, 1);
    for (std::size_t r = 0; r < dt.left.rows().size(); ++r) {
        const auto& rows = dt.left.rows()[r];
        const auto& cols = dt.right.rows()[r];
        if (static_cast<int>(rows.size()) > m) throw Rejected("tableau row longer than m");
        MinorIndex idx(rows, cols);  // rejects repeated entries
        p = p * minor_poly(idx, m);
    }
    return p;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<YoungDiagram>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

/// Partitions of n with parts <= max_part, in lexicographically descending order.
std::vector<YoungDiagram> partitions(int n, int max_part) {
    std::vector<YoungDiagram> out;
    std::vector<int> cur;
    if (max_part >= 1 || n == 0) partitions_rec(n, std::max(max_part, 0), cur, out);
    return out;
}

/// Standard fillings of a shape with values in [1, m]; when content is given
/// the fillings must use each value exactly that often.
struct FillingSearch {
    const YoungDiagram& shape;
    int m;
    std::vector<int>* remaining;  // may be null
    std::vector<std::vector<int>> rows;
    std::vector<Tableau> out;

    void run() {
        rows.assign(shape.rows().size(), {});
        for (std::size_t r = 0; r < rows.size(); ++r) rows[r].assign(static_cast<std::size_t>(shape.row(r)), 0);
        rec(0, 0);
    }

    void rec(std::size_t r, std::size_t c) {
        if (r == rows.size()) {
            out.emplace_back(rows);
            return;
        }
        if (c == rows[r].size()) {
            rec(r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, rows[r][c - 1] + 1);
        if (r > 0) lo = std::max(lo, rows[r - 1][c]);
        for (int v = lo; v <= m; ++v) {
            if (remaining && (*remaining)[static_cast<std::size_t>(v - 1)] == 0) continue;
            if (remaining) --(*remaining)[static_cast<std::size_t>(v - 1)];
            rows[r][c] = v;
            rec(r, c + 1);
            if (remaining) ++(*remaining)[static_cast<std::size_t>(v - 1)];
        }
    }
};

std::vector<Tableau> standard_fillings(const YoungDiagram& shape, int m, const std::vector<int>* content) {
    std::vector<int> remaining;
    if (content) remaining = *content;
    FillingSearch s{shape, m, content ? &remaining : nullptr, {}, {}};
    s.run();
    return std::move(s.out);
}

int max_row_length(int m, std::optional<int> k_bound) { return k_bound ? std::min(m, *k_bound) : m; }

void check_guard_degree(int degree, const Guard& guard) {
    if (degree > guard.max_degree)
        throw Rejected("degree " + std::to_string(degree) + " exceeds the enumeration guard (" +
                       std::to_string(guard.max_degree) + ")");
}

void check_guard_size(std::size_t n, const Guard& guard) {
    if (n > guard.max_basis) throw Rejected("standard basis exceeds the enumeration guard");
}

void check_bicontent(int m, const Bicontent& bc) {
    if (bc.rows.size() != static_cast<std::size_t>(m) || bc.cols.size() != static_cast<std::size_t>(m))
        throw Rejected("content vectors must have length m");
    for (int v : bc.rows)
        if (v < 0) throw Rejected("content must be nonnegative");
    for (int v : bc.cols)
        if (v < 0) throw Rejected("content must be nonnegative");
    if (std::accumulate(bc.rows.begin(), bc.rows.end(), 0) != std::accumulate(bc.cols.begin(), bc.cols.end(), 0))
        throw Rejected("row and column contents must have the same total");
}

/// Nonnegative integer matrices with the given margins, as exponent vectors.
void contingency_rec(int m, std::size_t cell, Exponent& e, std::vector<int>& rows, std::vector<int>& cols,
                     std::vector<Exponent>& out) {
    const auto um = static_cast<std::size_t>(m);
    if (cell == um * um) {
        if (std::all_of(rows.begin(), rows.end(), [](int v) { return v == 0; })) out.push_back(e);
        return;
    }
    std::size_t i = cell / um, j = cell % um;
    int hi = std::min(rows[i], cols[j]);
    int lo = 0;
    // The last cell of a row must absorb the rest of that row; likewise columns.
    if (j == um - 1) lo = rows[i];
    if (i == um - 1) lo = std::max(lo, cols[j]);
    for (int v = lo; v <= hi; ++v) {
        e[cell] = static_cast<std::uint16_t>(v);
        rows[i] -= v;
        cols[j] -= v;
        contingency_rec(m, cell + 1, e, rows, cols, out);
        rows[i] += v;
        cols[j] += v;
    }
    e[cell] = 0;
}

std::vector<Exponent> monomials_with_bicontent(int m, const Bicontent& bc) {
    std::vector<Exponent> out;
    Exponent e(static_cast<std::size_t>(m * m), 0);
    auto rows = bc.rows, cols = bc.cols;
    contingency_rec(m, 0, e, rows, cols, out);
    return out;
}

Bicontent bicontent_of(const DoubleTableau& dt, int m) { return {dt.left.content(m), dt.right.content(m)}; }

}  // namespace

std::vector<DoubleTableau> enumerate_standard_basis(int m, std::optional<int> k_bound, const Bicontent& content,
                                                    const Guard& guard) {
    check_bicontent(m, content);
    const int degree = std::accumulate(content.rows.begin(), content.rows.end(), 0);
    check_guard_degree(degree, guard);
    std::vector<DoubleTableau> out;
    for (const auto& shape : partitions(degree, max_row_length(m, k_bound))) {
        auto lefts = standard_fillings(shape, m, &content.rows);
        if (lefts.empty()) continue;
        auto rights = standard_fillings(shape, m, &content.cols);
        for (const auto& l : lefts)
            for (const auto& r : rights) {
                out.emplace_back(l, r);
                check_guard_size(out.size(), guard);
            }
    }
    return out;
}

std::vector<DoubleTableau> enumerate_standard_basis(int m, std::optional<int> k_bound, int degree, const Guard& guard) {
    if (degree < 0) throw Rejected("degree must be nonnegative");
    check_guard_degree(degree, guard);
    std::vector<DoubleTableau> out;
    for (const auto& shape : partitions(degree, max_row_length(m, k_bound))) {
        auto fills = standard_fillings(shape, m, nullptr);
        for (const auto& l : fills)
            for (const auto& r : fills) {
                out.emplace_back(l, r);
                check_guard_size(out.size(), guard);
            }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Expansion in the standard basis

namespace {

/// The standard basis of one bigraded piece of R together with the inverse
/// of its matrix in the monomial basis.
struct Block {
    std::vector<DoubleTableau> basis;
    std::map<Exponent, std::size_t> monomial_index;
    linalg::Matrix inverse;  // basis coordinates = inverse * monomial coordinates
};

class BlockCache {
public:
    std::shared_ptr<const Block> get(int m, const Bicontent& bc, const Guard& guard) {
        auto key = std::make_pair(m, bc);
        {
            std::lock_guard lock(mutex_);
            if (auto it = blocks_.find(key); it != blocks_.end()) return it->second;
        }
        auto block = build(m, bc, guard);
        std::lock_guard lock(mutex_);
        return blocks_.try_emplace(key, std::move(block)).first->second;
    }

private:
    static std::shared_ptr<const Block> build(int m, const Bicontent& bc, const Guard& guard) {
        auto block = std::make_shared<Block>();
        block->basis = enumerate_standard_basis(m, std::nullopt, bc, guard);
        auto monomials = monomials_with_bicontent(m, bc);
        if (monomials.size() != block->basis.size())
            throw InternalError("standard basis size differs from the number of monomials");
        for (std::size_t i = 0; i < monomials.size(); ++i) block->monomial_index.emplace(monomials[i], i);
        const std::size_t n = monomials.size();
        linalg::Matrix a(n, linalg::Vector(n, Rational(0)));
        for (std::size_t b = 0; b < n; ++b) {
            const MultiPoly poly = bideterminant(block->basis[b], m);
            for (const auto& [e, c] : poly.terms()) {
                auto it = block->monomial_index.find(e);
                if (it == block->monomial_index.end()) throw InternalError("bideterminant left its bigraded piece");
                a[it->second][b] = c;
            }
        }
        auto inv = linalg::inverse(a);
        if (!inv) throw InternalError("standard bideterminants are linearly dependent");
        block->inverse = std::move(*inv);
        return block;
    }

    std::mutex mutex_;
    std::map<std::pair<int, Bicontent>, std::shared_ptr<const Block>> blocks_;
};

BlockCache& cache() {
    static BlockCache c;
    return c;
}

bool sorted_rows_less(const StandardTerm& a, const StandardTerm& b) { return a.tableau < b.tableau; }

}  // namespace

StandardExpansion expand(const MultiPoly& p, std::optional<int> k_bound, const Guard& guard) {
    const int m = p.m();
    std::map<Bicontent, std::vector<std::pair<Exponent, Rational>>> pieces;
    for (const auto& [e, c] : p.terms()) pieces[detmld::bicontent_of(e, m)].emplace_back(e, c);

    StandardExpansion out;
    for (const auto& [bc, terms] : pieces) {
        auto block = cache().get(m, bc, guard);
        linalg::Vector v(block->basis.size(), Rational(0));
        for (const auto& [e, c] : terms) v[block->monomial_index.at(e)] = c;
        auto coords = linalg::multiply(block->inverse, v);
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (coords[i] == 0) continue;
            const auto& dt = block->basis[i];
            if (k_bound && dt.shape().row(0) > *k_bound) continue;
            out.terms.push_back({coords[i], dt});
        }
    }
    std::sort(out.terms.begin(), out.terms.end(), sorted_rows_less);
    return out;
}

StandardExpansion straighten(const DoubleTableau& dt, int m, std::optional<int> k_bound, const Guard& guard) {
    check_guard_degree(dt.shape().size(), guard);
    return expand(bideterminant(dt, m), k_bound, guard);
}

MultiPoly reexpand(const StandardExpansion& e, int m) {
    MultiPoly p(m);
    for (const auto& t : e.terms) p += bideterminant(t.tableau, m) * t.coefficient;
    return p;
}

MultiPoly reduce_mod_minors(const MultiPoly& p, int k, const Guard& guard) {
    return reexpand(expand(p, k, guard), p.m());
}

std::optional<MultiPoly> divide_mod_minors(const MultiPoly& g, const MultiPoly& d, int k, const Guard& guard) {
    const int m = g.m();
    if (d.m() != m) throw Rejected("polynomials live in different rings (m mismatch)");
    if (d.is_zero()) throw Rejected("division by zero");
    const Bicontent dbc = detmld::bicontent_of(d.terms().begin()->first, m);
    for (const auto& [e, c] : d.terms())
        if (detmld::bicontent_of(e, m) != dbc) throw Rejected("divisor must be bihomogeneous");

    auto gexp = expand(g, k, guard);
    std::map<Bicontent, std::vector<const StandardTerm*>> pieces;
    for (const auto& t : gexp.terms) pieces[bicontent_of(t.tableau, m)].push_back(&t);

    MultiPoly quotient(m);
    for (const auto& [bc, terms] : pieces) {
        Bicontent target = bc;
        for (std::size_t i = 0; i < target.rows.size(); ++i) {
            target.rows[i] -= dbc.rows[i];
            target.cols[i] -= dbc.cols[i];
            if (target.rows[i] < 0 || target.cols[i] < 0) return std::nullopt;
        }
        auto unknowns = enumerate_standard_basis(m, k, target, guard);
        auto image_basis = enumerate_standard_basis(m, k, bc, guard);
        std::map<DoubleTableau, std::size_t> image_index;
        for (std::size_t i = 0; i < image_basis.size(); ++i) image_index.emplace(image_basis[i], i);

        linalg::Matrix a(image_basis.size(), linalg::Vector(unknowns.size(), Rational(0)));
        for (std::size_t u = 0; u < unknowns.size(); ++u) {
            for (const auto& t : expand(d * bideterminant(unknowns[u], m), k, guard).terms)
                a[image_index.at(t.tableau)][u] = t.coefficient;
        }
        linalg::Vector rhs(image_basis.size(), Rational(0));
        for (const auto* t : terms) rhs[image_index.at(t->tableau)] = t->coefficient;
        auto x = linalg::solve(a, rhs, unknowns.size());
        if (!x) return std::nullopt;
        for (std::size_t u = 0; u < unknowns.size(); ++u)
            if ((*x)[u] != 0) quotient += bideterminant(unknowns[u], m) * (*x)[u];
    }
    return quotient;
}

Membership subalgebra_membership(const MultiPoly& f, int m, int k, const Guard& guard) {
    if (f.m() != m) throw Rejected("polynomial ring does not match m");
    if (k < 1 || k > m) throw Rejected("k must satisfy 1 <= k <= m");
    auto degree = f.homogeneous_degree();
    if (!degree) throw Rejected("membership test needs a homogeneous polynomial");
    if (*degree % k != 0) throw Rejected("degree must be divisible by k");
    Membership result;
    result.expansion = expand(f, k, guard);
    result.member = std::all_of(result.expansion.terms.begin(), result.expansion.terms.end(), [k](const StandardTerm& t) {
        const auto rows = t.tableau.shape().rows();
        return std::all_of(rows.begin(), rows.end(), [k](int r) { return r == k; });
    });
    return result;
}

BasisCheck check_standard_basis(int m, int degree, const Guard& guard) {
    BasisCheck check;
    auto basis = enumerate_standard_basis(m, std::nullopt, degree, guard);
    check.standard = basis.size();
    std::map<Exponent, std::size_t> index;
    std::vector<MultiPoly> polys;
    polys.reserve(basis.size());
    for (const auto& dt : basis) {
        polys.push_back(bideterminant(dt, m));
        for (const auto& [e, c] : polys.back().terms()) index.try_emplace(e, 0);
    }
    // Every monomial of this degree: C(m^2 + d - 1, d).
    Integer count;
    mpz_bin_uiui(count.get_mpz_t(), static_cast<unsigned long>(m * m + degree - 1), static_cast<unsigned long>(degree));
    check.monomials = count.get_ui();
    std::size_t i = 0;
    for (auto& [e, pos] : index) pos = i++;
    linalg::Matrix a(polys.size(), linalg::Vector(index.size(), Rational(0)));
    for (std::size_t r = 0; r < polys.size(); ++r)
        for (const auto& [e, c] : polys[r].terms()) a[r][index.at(e)] = c;
    check.rank = linalg::rank(std::move(a));
    return check;
}

}  // namespace detmld::tableaux
