#include <craut/grading.hpp>

#include <algorithm>
#include <exception>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace craut {

namespace {

int max_w_power(const Ansatz& a)
{
    int top = 0;
    for (const auto& s : a.slots)
        for (int l = 0; l < a.vt->d(); ++l) top = std::max<int>(top, s.mono[a.vt->w(l)]);
    return top;
}

std::vector<Rational> to_rational(const linalg::DenseVector& v)
{
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

std::vector<std::pair<std::uint32_t, Rational>> sparse(const std::vector<Rational>& v)
{
    std::vector<std::pair<std::uint32_t, Rational>> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) out.emplace_back(static_cast<std::uint32_t>(i), v[i]);
    return out;
}

std::size_t rank_of(const std::vector<std::vector<Rational>>& rows, std::size_t cols)
{
    linalg::SparseMatrix a(cols);
    for (const auto& r : rows) a.add_row(sparse(r));
    return linalg::rank(a);
}

// Real coordinates of fields over the union of their terms.
std::vector<std::vector<Rational>> joint_coordinates(const std::vector<VectorField>& fields, std::size_t& dim)
{
    std::map<std::tuple<bool, int, Monomial>, std::size_t> index;
    for (const auto& x : fields) {
        for (std::size_t j = 0; j < x.f.size(); ++j)
            for (const auto& [m, c] : x.f[j].terms()) index.try_emplace({false, static_cast<int>(j), m}, 0);
        for (std::size_t l = 0; l < x.g.size(); ++l)
            for (const auto& [m, c] : x.g[l].terms()) index.try_emplace({true, static_cast<int>(l), m}, 0);
    }
    std::size_t k = 0;
    for (auto& [key, idx] : index) idx = k++;
    dim = 2 * k;
    std::vector<std::vector<Rational>> out;
    for (const auto& x : fields) {
        std::vector<Rational> v(dim, 0);
        auto put = [&](bool is_g, int idx, const Polynomial& p) {
            for (const auto& [m, c] : p.terms()) {
                std::size_t at = index.at({is_g, idx, m});
                v[2 * at] = c.re();
                v[2 * at + 1] = c.im();
            }
        };
        for (std::size_t j = 0; j < x.f.size(); ++j) put(false, static_cast<int>(j), x.f[j]);
        for (std::size_t l = 0; l < x.g.size(); ++l) put(true, static_cast<int>(l), x.g[l]);
        out.push_back(std::move(v));
    }
    return out;
}

VectorField apply_pattern(const VectorField& x, const std::vector<int>& pattern)
{
    VectorField y = x;
    for (std::size_t j = 0; j < pattern.size(); ++j)
        if (pattern[j] > 0) y = d_operator(y, static_cast<int>(j), pattern[j]);
    return y;
}

} // namespace

long Ansatz::find(bool is_g, int index, const Monomial& mono) const
{
    for (std::size_t k = 0; k < slots.size(); ++k)
        if (slots[k].is_g == is_g && slots[k].index == index && slots[k].mono == mono) return static_cast<long>(k);
    return -1;
}

Ansatz enumerate_ansatz_scaled(const Model& m, int mu_scaled, bool rigid)
{
    const VarTable& vt = m.vartable();
    if (mu_scaled < -vt.mk())
        throw std::invalid_argument("weight " + to_string(vt.external(mu_scaled)) + " is below the minimum -" +
                                    to_string(vt.external(vt.mk())));
    std::vector<int> vars;
    for (int j = 0; j < vt.n(); ++j) vars.push_back(vt.z(j));
    if (!rigid)
        for (int l = 0; l < vt.d(); ++l) vars.push_back(vt.w(l));

    Ansatz a;
    a.vt = m.vt_ptr();
    a.mu_scaled = mu_scaled;
    a.rigid = rigid;
    for (int j = 0; j < vt.n(); ++j)
        for (auto& mono : monomials_of_degree(vt, Ring::Hol, vars, mu_scaled + 1)) a.slots.push_back({false, j, std::move(mono)});
    for (int l = 0; l < vt.d(); ++l)
        for (auto& mono : monomials_of_degree(vt, Ring::Hol, vars, mu_scaled + vt.normal_weight(l)))
            a.slots.push_back({true, l, std::move(mono)});
    return a;
}

Ansatz enumerate_ansatz(const Model& m, const Rational& mu, bool rigid)
{
    return enumerate_ansatz_scaled(m, m.vartable().scaled(mu), rigid);
}

VectorField field_from_coords(const Ansatz& a, const std::vector<Rational>& coords)
{
    if (coords.size() != a.unknowns()) throw std::invalid_argument("field_from_coords: wrong coordinate count");
    const VarTable& vt = *a.vt;
    std::vector<std::vector<Polynomial::Term>> f(vt.n()), g(vt.d());
    for (std::size_t k = 0; k < a.slots.size(); ++k) {
        Scalar c(coords[2 * k], coords[2 * k + 1]);
        if (c.is_zero()) continue;
        const Slot& s = a.slots[k];
        (s.is_g ? g[s.index] : f[s.index]).emplace_back(s.mono, c);
    }
    VectorField x = VectorField::zero(a.vt);
    for (int j = 0; j < vt.n(); ++j) x.f[j] = Polynomial::from_terms(a.vt, Ring::Hol, std::move(f[j]));
    for (int l = 0; l < vt.d(); ++l) x.g[l] = Polynomial::from_terms(a.vt, Ring::Hol, std::move(g[l]));
    return x;
}

VectorField field_from_coords(const Ansatz& a, const linalg::DenseVector& coords)
{
    return field_from_coords(a, to_rational(coords));
}

std::optional<std::vector<Rational>> coords_from_field(const Ansatz& a, const VectorField& x)
{
    std::map<std::tuple<bool, int, Monomial>, std::size_t> index;
    for (std::size_t k = 0; k < a.slots.size(); ++k) index.emplace(std::make_tuple(a.slots[k].is_g, a.slots[k].index, a.slots[k].mono), k);
    std::vector<Rational> v(a.unknowns(), 0);
    auto put = [&](bool is_g, int idx, const Polynomial& p) {
        for (const auto& [m, c] : p.terms()) {
            auto it = index.find({is_g, idx, m});
            if (it == index.end()) return false;
            v[2 * it->second] = c.re();
            v[2 * it->second + 1] = c.im();
        }
        return true;
    };
    for (std::size_t j = 0; j < x.f.size(); ++j)
        if (!put(false, static_cast<int>(j), x.f[j])) return std::nullopt;
    for (std::size_t l = 0; l < x.g.size(); ++l)
        if (!put(true, static_cast<int>(l), x.g[l])) return std::nullopt;
    return v;
}

LinearSystem build_tangency_system(const Model& m, const Ansatz& a, ResidualKind kind)
{
    const VarTable& vt = m.vartable();
    const TangencyOperator op(m, max_w_power(a));
    const long ncols = static_cast<long>(a.unknowns());

    // one residual vector per real unknown; columns are independent
    std::vector<std::vector<Polynomial>> cols(ncols);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
    for (long k = 0; k < ncols; ++k) {
        try {
            const Slot& s = a.slots[k / 2];
            cols[k] = op.slot_residual(s.is_g, s.index, s.mono, k % 2 ? Scalar::i() : Scalar(1), kind);
        } catch (...) {
#pragma omp critical
            failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    // Row representatives. A real residual has coefficient conj(c) at the
    // conjugate monomial of c's, so one monomial per pair suffices and a
    // self-conjugate monomial only contributes its real part.
    enum class Rep { Skip, SelfConjugate, Pair };
    auto classify = [&](const Monomial& mono) {
        if (kind == ResidualKind::Complex) return Rep::Pair;
        const auto& e = mono.exps();
        std::vector<std::uint16_t> swapped(e);
        for (int j = 0; j < vt.n(); ++j) std::swap(swapped[j], swapped[vt.n() + j]);
        if (swapped == e) return Rep::SelfConjugate;
        return e < swapped ? Rep::Pair : Rep::Skip;
    };

    std::map<std::pair<int, Monomial>, std::pair<long, long>> rows;  // key -> (re row, im row)
    for (const auto& col : cols)
        for (int l = 0; l < vt.d(); ++l)
            for (const auto& [mono, c] : col[l].terms()) rows.try_emplace({l, mono}, -1, -1);

    long next = 0;
    for (auto& [key, ids] : rows) {
        Rep r = classify(key.second);
        if (r == Rep::Skip) continue;
        ids.first = next++;
        if (r == Rep::Pair) ids.second = next++;
    }

    std::vector<std::vector<std::pair<std::uint32_t, Rational>>> entries(next);
    for (long k = 0; k < ncols; ++k)
        for (int l = 0; l < vt.d(); ++l)
            for (const auto& [mono, c] : cols[k][l].terms()) {
                const auto& ids = rows.at({l, mono});
                if (ids.first >= 0 && sgn(c.re()) != 0) entries[ids.first].emplace_back(static_cast<std::uint32_t>(k), c.re());
                if (ids.second >= 0 && sgn(c.im()) != 0) entries[ids.second].emplace_back(static_cast<std::uint32_t>(k), c.im());
            }

    LinearSystem sys{linalg::SparseMatrix(static_cast<std::size_t>(ncols)), rows.size()};
    for (auto& e : entries) sys.matrix.add_row(std::move(e));
    return sys;
}

std::vector<linalg::DenseVector> solve_kernel(const LinearSystem& sys) { return linalg::nullspace(sys.matrix); }

GradedBasis compute_G_mu_scaled(const Model& m, int mu_scaled, bool rigid)
{
    GradedBasis out;
    out.ansatz = enumerate_ansatz_scaled(m, mu_scaled, rigid);
    if (out.ansatz.slots.empty()) return out;
    out.coords = solve_kernel(build_tangency_system(m, out.ansatz));
    const TangencyOperator op(m, max_w_power(out.ansatz));
    for (const auto& v : out.coords) {
        VectorField x = field_from_coords(out.ansatz, v);
        for (const auto& r : op.residual(x, ResidualKind::Real))
            if (!r.is_zero())
                throw std::logic_error("compute_G_mu: kernel field fails the tangency identity: " + format_field(x));
        out.fields.push_back(std::move(x));
    }
    return out;
}

GradedBasis compute_G_mu(const Model& m, const Rational& mu, bool rigid)
{
    return compute_G_mu_scaled(m, m.vartable().scaled(mu), rigid);
}

// ---------------------------------------------------------------------------

std::vector<std::vector<int>> patterns_of_order(const VarTable& vt, int order)
{
    const int vars = vt.blocks().front().l;
    std::vector<std::vector<int>> out;
    std::vector<int> cur(vars, 0);
    auto rec = [&](auto&& self, int j, int remaining) -> void {
        if (j == vars - 1) {
            cur[j] = remaining;
            out.push_back(cur);
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            cur[j] = k;
            self(self, j + 1, remaining - k);
        }
    };
    if (order >= 0) rec(rec, 0, order);
    return out;
}

AdMap ad_map(const Model& m, const GradedBasis& source, const std::vector<int>& pattern)
{
    const VarTable& vt = m.vartable();
    if (static_cast<int>(pattern.size()) != vt.blocks().front().l)
        throw std::invalid_argument("ad_map: pattern needs one entry per first-block normal variable");
    int order = 0;
    for (int k : pattern) {
        if (k < 0) throw std::invalid_argument("ad_map: negative pattern entry");
        order += k;
    }
    AdMap out;
    out.pattern = pattern;
    const int target = source.mu_scaled() - order * vt.m1();
    if (target < -vt.mk()) {
        out.target.vt = m.vt_ptr();
        out.target.mu_scaled = target;
        for (std::size_t i = 0; i < source.dim(); ++i) {
            out.images.push_back(VectorField::zero(m.vt_ptr()));
            out.columns.emplace_back();
        }
        return out;
    }
    out.target = enumerate_ansatz_scaled(m, target, false);
    for (const auto& x : source.fields) {
        VectorField y = apply_pattern(x, pattern);
        auto c = coords_from_field(out.target, y);
        if (!c) throw std::logic_error("ad_map: image is not homogeneous of the target weight");
        out.columns.push_back(std::move(*c));
        out.images.push_back(std::move(y));
    }
    return out;
}

bool in_span(const GradedBasis& basis, const VectorField& x)
{
    if (x.is_zero()) return true;
    auto c = coords_from_field(basis.ansatz, x);
    if (!c) return false;
    std::vector<std::vector<Rational>> rows;
    for (const auto& v : basis.coords) rows.push_back(to_rational(v));
    const std::size_t r0 = rank_of(rows, basis.ansatz.unknowns());
    rows.push_back(std::move(*c));
    return rank_of(rows, basis.ansatz.unknowns()) == r0;
}

bool in_span(const std::vector<VectorField>& basis, const VectorField& x)
{
    if (x.is_zero()) return true;
    std::vector<VectorField> all(basis);
    all.push_back(x);
    std::size_t dim = 0;
    auto rows = joint_coordinates(all, dim);
    auto last = rows.back();
    rows.pop_back();
    const std::size_t r0 = rank_of(rows, dim);
    rows.push_back(std::move(last));
    return rank_of(rows, dim) == r0;
}

PreimageResult integration_preimage(const Model& m, const GradedBasis& target, int order)
{
    const VarTable& vt = m.vartable();
    if (!d_operator_within_hypotheses(vt))
        throw std::domain_error("integration preimage needs a single Hoermander number (outside the integration lemma's hypotheses)");
    if (order < 1) throw std::invalid_argument("integration preimage: order must be >= 1");

    PreimageResult out;
    out.target_mu = target.mu();
    out.order = order;
    const GradedBasis src = compute_G_mu_scaled(m, target.mu_scaled() + order * vt.m1(), false);
    out.source_dim = src.dim();

    // basis-coordinate kernel of all images of the given order
    auto annihilated = [&](int k) {
        linalg::SparseMatrix a(src.dim());
        for (const auto& pat : patterns_of_order(vt, k)) {
            AdMap map = ad_map(m, src, pat);
            const std::size_t len = map.target.unknowns();
            for (std::size_t coord = 0; coord < len; ++coord) {
                std::vector<std::pair<std::uint32_t, Rational>> row;
                for (std::size_t i = 0; i < src.dim(); ++i)
                    if (sgn(map.columns[i][coord]) != 0) row.emplace_back(static_cast<std::uint32_t>(i), map.columns[i][coord]);
                a.add_row(std::move(row));
            }
        }
        std::vector<linalg::DenseVector> combos = linalg::nullspace(a);
        // back to ansatz coordinates
        std::vector<linalg::DenseVector> fields;
        for (const auto& c : combos) {
            linalg::DenseVector v(src.ansatz.unknowns(), 0);
            for (std::size_t i = 0; i < c.size(); ++i)
                if (c[i] != 0)
                    for (std::size_t j = 0; j < v.size(); ++j) v[j] += c[i] * src.coords[i][j];
            fields.push_back(std::move(v));
        }
        return linalg::canonical_span(fields, src.ansatz.unknowns());
    };

    if (src.dim() == 0) return out;
    const auto s_k = annihilated(order + 1);
    const auto s_prev = annihilated(order);
    out.trivial_dim = s_prev.size();
    for (const auto& v : s_k) out.preimage.push_back(field_from_coords(src.ansatz, v));
    out.nonzero = s_k.size() > s_prev.size();

    if (out.nonzero) {
        std::vector<std::vector<Rational>> rows;
        for (const auto& v : s_prev) rows.push_back(to_rational(v));
        const std::size_t r0 = rank_of(rows, src.ansatz.unknowns());
        for (std::size_t i = 0; i < s_k.size(); ++i) {
            rows.push_back(to_rational(s_k[i]));
            if (rank_of(rows, src.ansatz.unknowns()) > r0) {
                out.witness = out.preimage[i];
                break;
            }
            rows.pop_back();
        }
        for (const auto& pat : patterns_of_order(vt, order)) {
            VectorField y = apply_pattern(*out.witness, pat);
            if (!y.is_zero()) out.witness_images.push_back(std::move(y));
        }
    }

    for (const auto& x : out.preimage)
        for (const auto& pat : patterns_of_order(vt, order)) {
            VectorField y = apply_pattern(x, pat);
            if (!is_rigid(y) || !in_span(target, y)) out.images_in_target = false;
        }
    return out;
}

// ---------------------------------------------------------------------------

const AutEntry* AutTable::find(int mu_scaled) const
{
    for (const auto& e : entries)
        if (e.full.mu_scaled() == mu_scaled) return &e;
    return nullptr;
}

std::size_t AutTable::total_dim() const
{
    std::size_t total = 0;
    for (const auto& e : entries) total += e.full.dim();
    return total;
}

const char* verdict_name(AutTable::Verdict v)
{
    switch (v) {
    case AutTable::Verdict::Conclusive: return "conclusive";
    case AutTable::Verdict::Inconclusive: return "inconclusive";
    case AutTable::Verdict::Degenerate: return "degenerate";
    }
    return "?";
}

int default_mu_max_scaled(const VarTable& vt) { return 2 * vt.mk(); }

AutTable compute_aut_table(const Model& m, int mu_min_scaled, int mu_max_scaled, bool with_rigid)
{
    const VarTable& vt = m.vartable();
    if (mu_min_scaled < -vt.mk()) throw std::invalid_argument("mu_min is below -m_k/m_1");
    if (mu_max_scaled < mu_min_scaled) throw std::invalid_argument("mu_max is below mu_min");

    AutTable t;
    t.mu_min_scaled = mu_min_scaled;
    t.mu_max_scaled = mu_max_scaled;
    const int count = mu_max_scaled - mu_min_scaled + 1;
    t.entries.resize(count);

    const int jobs = with_rigid ? 2 * count : count;
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (int job = 0; job < jobs; ++job) {
        try {
            const int idx = job % count;
            const bool rigid = job >= count;
            GradedBasis b = compute_G_mu_scaled(m, mu_min_scaled + idx, rigid);
            if (rigid) {
                t.entries[idx].rigid = std::move(b);
            } else {
                t.entries[idx].full = std::move(b);
            }
        } catch (...) {
#pragma omp critical
            failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return t;
}

AutTable mu0_search(const Model& m, int mu_max_scaled, std::optional<int> nondegeneracy_bound)
{
    const VarTable& vt = m.vartable();
    AutTable t = compute_aut_table(m, -vt.mk(), mu_max_scaled, true);
    t.nondegeneracy = holomorphic_nondegeneracy(m, nondegeneracy_bound);
    for (const auto& e : t.entries)
        if (e.full.dim() > 0) t.highest_nonzero_scaled = e.full.mu_scaled();
    if (t.nondegeneracy.degenerate) {
        t.verdict = AutTable::Verdict::Degenerate;
        return t;
    }
    if (t.highest_nonzero_scaled && mu_max_scaled - *t.highest_nonzero_scaled >= vt.mk()) {
        t.verdict = AutTable::Verdict::Conclusive;
        t.mu0 = Rational(1) + vt.external(vt.mk()) + vt.external(*t.highest_nonzero_scaled);
    }
    return t;
}

NondegeneracyVerdict holomorphic_nondegeneracy(const Model& m, std::optional<int> bound_scaled)
{
    const VarTable& vt = m.vartable();
    NondegeneracyVerdict v;
    v.bound_scaled = bound_scaled.value_or(default_nondegeneracy_bound(vt));
    for (int s = -vt.mk(); s <= v.bound_scaled; ++s) {
        Ansatz a = enumerate_ansatz_scaled(m, s, false);
        if (a.slots.empty()) continue;
        auto kernel = solve_kernel(build_tangency_system(m, a, ResidualKind::Complex));
        if (kernel.empty()) continue;
        v.degenerate = true;
        v.witness = field_from_coords(a, kernel.front());
        v.witness_weight_scaled = s;
        return v;
    }
    return v;
}

// ---------------------------------------------------------------------------

JetReport jet_report(const Model& m, const AutTable& table)
{
    if (table.verdict != AutTable::Verdict::Conclusive)
        throw std::domain_error(std::string("jet report needs a conclusive table, verdict is ") + verdict_name(table.verdict));
    const VarTable& vt = m.vartable();
    JetReport rep;
    rep.verdict = table.verdict;
    rep.mu0 = table.mu0;
    rep.n1_bound = vt.mk() - 1;
    for (const auto& e : table.entries)
        if (e.full.mu_scaled() >= vt.mk() - 1 && e.rigid && e.rigid->dim() > 0) rep.rigid_vanishing_verified = false;
    rep.note = "N2 and N3 exist for holomorphically nondegenerate models but are not computed here";

    rep.quadric = m.is_quadric();
    if (!rep.quadric) return rep;

    // (key, label, is_g, z-degree, w-degree); slot weight = zdeg + 2 wdeg - (1 for F, 2 for G)
    const std::vector<std::tuple<const char*, const char*, bool, int, int>> shapes = {
        {"df_dz", "df/dz", false, 1, 0},     {"d2f_dz2", "d2f/dz2", false, 2, 0},
        {"d2f_dwdz", "d2f/dwdz", false, 1, 1}, {"df_dw", "df/dw", false, 0, 1},
        {"dg_dw", "dg/dw", true, 0, 1},      {"d2g_dw2", "d2g/dw2", true, 0, 2},
    };
    for (const auto& [key, label, is_g, zd, wd] : shapes) {
        DerivativeFamily f;
        f.key = key;
        f.label = label;
        f.is_g = is_g;
        f.z_degree = zd;
        f.w_degree = wd;
        f.weight_scaled = zd + 2 * wd - (is_g ? 2 : 1);
        rep.families.push_back(f);
    }

    rep.two_jets_determine = true;
    for (const auto& e : table.entries) {
        const GradedBasis& b = e.full;
        if (b.mu_scaled() < 0 || b.dim() == 0) continue;
        // jet coordinates of every family living at this weight
        auto jet_rows = [&](std::optional<std::size_t> skip) {
            std::vector<std::vector<Rational>> rows;
            for (std::size_t fi = 0; fi < rep.families.size(); ++fi) {
                const auto& fam = rep.families[fi];
                if (fam.weight_scaled != b.mu_scaled() || (skip && *skip == fi)) continue;
                for (std::size_t k = 0; k < b.ansatz.slots.size(); ++k) {
                    const Slot& s = b.ansatz.slots[k];
                    if (s.is_g != fam.is_g || bidegree(s.mono, vt) != std::make_pair(fam.z_degree, fam.w_degree)) continue;
                    for (std::size_t part = 0; part < 2; ++part) {
                        std::vector<Rational> row;
                        for (const auto& v : b.coords) row.emplace_back(v[2 * k + part]);
                        rows.push_back(std::move(row));
                    }
                }
            }
            return rows;
        };
        const std::size_t undetermined = b.dim() - rank_of(jet_rows(std::nullopt), b.dim());
        if (undetermined > 0) rep.two_jets_determine = false;
        for (std::size_t fi = 0; fi < rep.families.size(); ++fi) {
            auto& fam = rep.families[fi];
            if (fam.weight_scaled != b.mu_scaled()) continue;
            if (b.dim() - rank_of(jet_rows(fi), b.dim()) > undetermined) {
                fam.needed = true;
                fam.witness_weight_scaled = b.mu_scaled();
            }
        }
    }

    if (const AutEntry* zero = table.find(0); zero && zero->rigid)
        rep.mixed_integration_nonzero = integration_preimage(m, *zero->rigid, 1).nonzero;
    return rep;
}

} // namespace craut
