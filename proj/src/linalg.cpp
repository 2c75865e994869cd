#include <craut/linalg.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace craut::linalg {

namespace {

void make_primitive(SparseRow& row)
{
    if (row.empty()) return;
    Integer g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// a * row - b * piv
SparseRow combine(const Integer& a, const SparseRow& row, const Integer& b, const SparseRow& piv)
{
    SparseRow out;
    out.reserve(row.size() + piv.size());
    auto x = row.begin();
    auto y = piv.begin();
    Integer t;
    while (x != row.end() || y != piv.end()) {
        if (y == piv.end() || (x != row.end() && x->first < y->first)) {
            out.emplace_back(x->first, a * x->second);
            ++x;
        } else if (x == row.end() || y->first < x->first) {
            out.emplace_back(y->first, -(b * y->second));
            ++y;
        } else {
            t = a * x->second - b * y->second;
            if (t != 0) out.emplace_back(x->first, t);
            ++x;
            ++y;
        }
    }
    return out;
}

const Integer* find_entry(const SparseRow& row, std::uint32_t col)
{
    auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::uint32_t c) { return e.first < c; });
    return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

void positive_pivot(SparseRow& row)
{
    if (!row.empty() && sgn(row.front().second) < 0)
        for (auto& e : row) e.second = -e.second;
}

struct Component {
    std::vector<std::uint32_t> pivots;
    std::vector<SparseRow> rows;
};

// Sparse fraction-free Gauss-Jordan on one block of rows.
Component eliminate(std::vector<SparseRow> rows)
{
    std::map<std::uint32_t, std::vector<SparseRow>> buckets;
    for (auto& r : rows) {
        std::uint32_t lead = r.front().first;
        buckets[lead].push_back(std::move(r));
    }

    Component out;
    while (!buckets.empty()) {
        auto node = buckets.extract(buckets.begin());
        const std::uint32_t col = node.key();
        std::vector<SparseRow>& group = node.mapped();
        auto best = std::min_element(group.begin(), group.end(),
                                     [](const SparseRow& a, const SparseRow& b) { return a.size() < b.size(); });
        SparseRow piv = std::move(*best);
        group.erase(best);
        for (auto& r : group) {
            SparseRow reduced = combine(piv.front().second, r, r.front().second, piv);
            if (reduced.empty()) continue;
            make_primitive(reduced);
            std::uint32_t lead = reduced.front().first;
            buckets[lead].push_back(std::move(reduced));
        }
        positive_pivot(piv);
        out.pivots.push_back(col);
        out.rows.push_back(std::move(piv));
    }

    // back substitution: clear every pivot column above its pivot
    for (std::size_t k = out.rows.size(); k-- > 0;) {
        const SparseRow& pk = out.rows[k];
        for (std::size_t i = 0; i < k; ++i) {
            const Integer* e = find_entry(out.rows[i], out.pivots[k]);
            if (!e) continue;
            Integer coef = *e;
            out.rows[i] = combine(pk.front().second, out.rows[i], coef, pk);
            make_primitive(out.rows[i]);
        }
    }
    for (auto& r : out.rows) positive_pivot(r);
    return out;
}

std::uint32_t find_root(std::vector<std::uint32_t>& parent, std::uint32_t x)
{
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

} // namespace

void SparseMatrix::add_row(std::vector<std::pair<std::uint32_t, Rational>> entries)
{
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<std::uint32_t, Rational>> merged;
    for (auto& e : entries) {
        if (e.first >= cols_) throw std::out_of_range("SparseMatrix::add_row: column out of range");
        if (!merged.empty() && merged.back().first == e.first) {
            merged.back().second += e.second;
        } else {
            merged.push_back(std::move(e));
        }
    }
    Integer den = 1;
    for (const auto& [c, v] : merged)
        if (sgn(v) != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    SparseRow row;
    for (const auto& [c, v] : merged) {
        if (sgn(v) == 0) continue;
        Integer num = v.get_num() * (den / v.get_den());
        row.emplace_back(c, std::move(num));
    }
    add_row(std::move(row));
}

void SparseMatrix::add_row(SparseRow row)
{
    row.erase(std::remove_if(row.begin(), row.end(), [](const auto& e) { return e.second == 0; }), row.end());
    if (row.empty()) return;
    if (!std::is_sorted(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; }))
        throw std::invalid_argument("SparseMatrix::add_row: integer rows must be sorted");
    if (row.back().first >= cols_) throw std::out_of_range("SparseMatrix::add_row: column out of range");
    make_primitive(row);
    rows_.push_back(std::move(row));
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& dense)
{
    SparseMatrix m(dense.empty() ? 0 : dense.front().size());
    for (const auto& r : dense) {
        std::vector<std::pair<std::uint32_t, Rational>> e;
        for (std::size_t c = 0; c < r.size(); ++c)
            if (sgn(r[c]) != 0) e.emplace_back(static_cast<std::uint32_t>(c), r[c]);
        m.add_row(std::move(e));
    }
    return m;
}

std::vector<std::vector<Integer>> SparseMatrix::to_dense() const
{
    std::vector<std::vector<Integer>> out(rows_.size(), std::vector<Integer>(cols_, 0));
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (const auto& [c, v] : rows_[i]) out[i][c] = v;
    return out;
}

bool is_zero(const DenseVector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

void normalize(DenseVector& v)
{
    Integer g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) return;
    auto first = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
    if (sgn(*first) < 0) g = -g;
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

std::vector<DenseVector> kernel_from_rref(const Rref& r)
{
    std::vector<bool> is_pivot(r.cols, false);
    for (auto p : r.pivots) is_pivot[p] = true;

    // column -> (row index, entry) for rows touching that free column
    std::vector<std::vector<std::pair<std::size_t, const Integer*>>> touching(r.cols);
    for (std::size_t i = 0; i < r.rows.size(); ++i)
        for (const auto& [c, v] : r.rows[i])
            if (!is_pivot[c]) touching[c].emplace_back(i, &v);

    std::vector<DenseVector> basis;
    for (std::uint32_t f = 0; f < r.cols; ++f) {
        if (is_pivot[f]) continue;
        // x_f = L, x_{p_i} = -row_i[f] * L / pivot_i with L = lcm of the pivots involved
        Integer lcm = 1;
        for (const auto& [i, v] : touching[f]) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), r.rows[i].front().second.get_mpz_t());
        DenseVector x(r.cols, 0);
        x[f] = lcm;
        for (const auto& [i, v] : touching[f]) x[r.pivots[i]] = -(*v) * (lcm / r.rows[i].front().second);
        normalize(x);
        basis.push_back(std::move(x));
    }
    return basis;
}

Rref rref(const SparseMatrix& a)
{
    const std::size_t ncols = a.cols();
    std::vector<std::uint32_t> parent(ncols);
    std::iota(parent.begin(), parent.end(), 0u);
    for (const auto& row : a.data()) {
        std::uint32_t r0 = find_root(parent, row.front().first);
        for (const auto& e : row) {
            std::uint32_t r1 = find_root(parent, e.first);
            if (r1 == r0) continue;
            parent[std::max(r0, r1)] = std::min(r0, r1);
            r0 = std::min(r0, r1);
        }
    }
    std::map<std::uint32_t, std::size_t> comp_of_root;
    std::vector<std::vector<SparseRow>> blocks;
    for (const auto& row : a.data()) {
        std::uint32_t root = find_root(parent, row.front().first);
        auto [it, fresh] = comp_of_root.try_emplace(root, blocks.size());
        if (fresh) blocks.emplace_back();
        blocks[it->second].push_back(row);
    }

    std::vector<Component> solved(blocks.size());
    const long nblocks = static_cast<long>(blocks.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long b = 0; b < nblocks; ++b) solved[b] = eliminate(std::move(blocks[b]));

    // merge in pivot order; rows of distinct components never share columns
    std::vector<std::pair<std::uint32_t, SparseRow>> all;
    for (auto& comp : solved)
        for (std::size_t i = 0; i < comp.rows.size(); ++i) all.emplace_back(comp.pivots[i], std::move(comp.rows[i]));
    std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

    Rref out;
    out.cols = ncols;
    for (auto& [p, row] : all) {
        out.pivots.push_back(p);
        out.rows.push_back(std::move(row));
    }
    return out;
}

std::vector<DenseVector> nullspace(const SparseMatrix& a) { return kernel_from_rref(rref(a)); }

std::size_t rank(const SparseMatrix& a) { return rref(a).rank(); }

Rref rref_reference(const SparseMatrix& a)
{
    auto m = a.to_dense();
    const std::size_t nrows = m.size();
    const std::size_t ncols = a.cols();

    // fraction-free forward elimination; every division below is exact
    std::vector<std::uint32_t> pivots;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && m[p][c] == 0) ++p;
        if (p == nrows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < nrows; ++i) {
            for (std::size_t j = c + 1; j < ncols; ++j) {
                m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        pivots.push_back(static_cast<std::uint32_t>(c));
        ++r;
    }
    m.resize(r);

    // back substitution to reduced form
    for (std::size_t k = r; k-- > 0;) {
        const std::size_t pc = pivots[k];
        for (std::size_t i = 0; i < k; ++i) {
            if (m[i][pc] == 0) continue;
            Integer coef = m[i][pc];
            for (std::size_t j = 0; j < ncols; ++j) m[i][j] = m[k][pc] * m[i][j] - coef * m[k][j];
            Integer g = 0;
            for (const auto& x : m[i]) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            if (g > 1)
                for (auto& x : m[i]) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        }
    }

    Rref out;
    out.cols = ncols;
    out.pivots = pivots;
    for (std::size_t i = 0; i < r; ++i) {
        DenseVector v = m[i];
        normalize(v);
        SparseRow row;
        for (std::size_t j = 0; j < ncols; ++j)
            if (v[j] != 0) row.emplace_back(static_cast<std::uint32_t>(j), v[j]);
        out.rows.push_back(std::move(row));
    }
    return out;
}

std::vector<DenseVector> nullspace_reference(const SparseMatrix& a) { return kernel_from_rref(rref_reference(a)); }

std::vector<DenseVector> canonical_span(const std::vector<DenseVector>& vectors, std::size_t dim)
{
    SparseMatrix m(dim);
    for (const auto& v : vectors) {
        SparseRow row;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) row.emplace_back(static_cast<std::uint32_t>(j), v[j]);
        m.add_row(std::move(row));
    }
    Rref r = rref(m);
    std::vector<DenseVector> out;
    for (const auto& row : r.rows) {
        DenseVector v(dim, 0);
        for (const auto& [c, x] : row) v[c] = x;
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace craut::linalg
