#include <craut/model.hpp>

#include <craut/expr.hpp>
#include <craut/linalg.hpp>

#include <map>
#include <sstream>

namespace craut {

namespace {

std::string component_name(const VarTable& vt, int l)
{
    return "P" + std::to_string(l + 1) + " (block " + std::to_string(vt.block_of(l) + 1) + ")";
}

std::string monomial_text(const Monomial& m, const Polynomial& like)
{
    return format_poly(Polynomial::term(like.vt_ptr(), like.ring(), m, Scalar(1)));
}

// Integer R-linear dependencies among complex coordinate vectors.
std::vector<linalg::DenseVector> real_dependencies(const std::vector<std::vector<Scalar>>& vectors)
{
    const std::size_t cols = vectors.size();
    const std::size_t len = vectors.empty() ? 0 : vectors.front().size();
    linalg::SparseMatrix a(cols);
    for (std::size_t k = 0; k < len; ++k) {
        std::vector<std::pair<std::uint32_t, Rational>> re, im;
        for (std::size_t c = 0; c < cols; ++c) {
            re.emplace_back(static_cast<std::uint32_t>(c), vectors[c][k].re());
            im.emplace_back(static_cast<std::uint32_t>(c), vectors[c][k].im());
        }
        a.add_row(std::move(re));
        a.add_row(std::move(im));
    }
    return linalg::nullspace(a);
}

std::vector<std::vector<Scalar>> coordinates(const std::vector<Polynomial>& polys)
{
    std::map<Monomial, std::size_t> index;
    for (const auto& p : polys)
        for (const auto& [m, c] : p.terms()) index.try_emplace(m, 0);
    std::size_t k = 0;
    for (auto& [m, idx] : index) idx = k++;
    std::vector<std::vector<Scalar>> out(polys.size(), std::vector<Scalar>(index.size()));
    for (std::size_t i = 0; i < polys.size(); ++i)
        for (const auto& [m, c] : polys[i].terms()) out[i][index[m]] = c;
    return out;
}

std::string certificate_text(const linalg::DenseVector& v, const char* symbol)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (!out.empty()) out += sgn(v[i]) > 0 ? " + " : " - ";
        else if (sgn(v[i]) < 0) out += "-";
        out += Integer(abs(v[i])).get_str() + "*" + symbol + std::to_string(i + 1);
    }
    return out + " = 0";
}

// Real inner product sum Re(a_m * conj(b_m)).
Rational inner(const Polynomial& a, const Polynomial& b)
{
    Rational acc = 0;
    for (const auto& [m, c] : b.terms()) {
        Scalar x = a.coefficient(m) * c.conj();
        acc += x.re();
    }
    return acc;
}

} // namespace

ModelError::ModelError(std::vector<std::string> diagnostics)
    : std::invalid_argument(diagnostics.empty() ? "invalid model" : diagnostics.front()),
      diagnostics_(std::move(diagnostics))
{
}

Model Model::create(VarTablePtr vt, std::vector<Polynomial> p)
{
    std::vector<std::string> diag;
    if (!vt) throw ModelError({"missing VarTable"});
    if (static_cast<int>(p.size()) != vt->d())
        throw ModelError({"expected " + std::to_string(vt->d()) + " components of P, got " + std::to_string(p.size())});
    for (int l = 0; l < vt->d(); ++l) {
        const Polynomial& q = p[l];
        const std::string name = component_name(*vt, l);
        if (q.ring() != Ring::Real || !(q.vartable() == *vt)) {
            diag.push_back(name + ": not a REAL-ring polynomial over the model variables");
            continue;
        }
        if (q.is_zero()) {
            diag.push_back(name + ": component is zero");
            continue;
        }
        const int want = vt->normal_weight(l);
        for (const auto& [m, c] : q.terms())
            if (m.degree() != want) {
                diag.push_back(name + ": monomial " + monomial_text(m, q) + " has weight " +
                               to_string(vt->external(m.degree())) + ", expected " + to_string(vt->external(want)));
                break;
            }
        if (!is_real(q)) diag.push_back(name + ": not real (conj(P) != P)");
        for (const auto& [m, c] : q.terms()) {
            auto [zd, zbd] = bidegree(m, *vt);
            if (zd == 0 || zbd == 0) {
                diag.push_back(name + ": pluriharmonic term " + monomial_text(m, q));
                break;
            }
        }
        for (int s = 0; s < vt->d(); ++s)
            if (vt->block_of(s) >= vt->block_of(l) && q.depends_on(vt->u(s)))
                diag.push_back(name + ": depends on u" + std::to_string(s + 1) + " from block " +
                               std::to_string(vt->block_of(s) + 1));
    }
    if (diag.empty()) {
        std::vector<Polynomial> first(p.begin(), p.begin() + vt->blocks().front().l);
        auto deps = real_dependencies(coordinates(first));
        if (!deps.empty()) diag.push_back("first-block components are linearly dependent: " + certificate_text(deps.front(), "P"));
    }
    if (!diag.empty()) throw ModelError(std::move(diag));
    return Model(std::move(vt), std::move(p));
}

bool Model::is_quadric() const { return vt_->num_blocks() == 1 && vt_->m1() == 2; }

std::optional<QuadricData> Model::quadric_data() const
{
    if (!is_quadric()) return std::nullopt;
    QuadricData q;
    q.n = n();
    for (int l = 0; l < d(); ++l) {
        std::vector<std::vector<Scalar>> a(n(), std::vector<Scalar>(n()));
        for (int i = 0; i < n(); ++i)
            for (int j = 0; j < n(); ++j) {
                std::vector<std::uint16_t> e(vt_->num_vars(Ring::Real), 0);
                e[vt_->zbar(i)] += 1;
                e[vt_->z(j)] += 1;
                a[i][j] = p_[l].coefficient(Monomial::make(*vt_, Ring::Real, std::move(e)));
            }
        q.matrices.push_back(std::move(a));
    }
    return q;
}

std::string Model::canonical_form() const
{
    std::ostringstream os;
    os << "n=" << n() << ";blocks=";
    for (const auto& b : vt_->blocks()) os << "(" << b.m << "," << b.l << ")";
    os << ";P=[";
    for (int l = 0; l < d(); ++l) os << (l ? "," : "") << format_poly(p_[l]);
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------

bool BloomGrahamReport::all_pass() const
{
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

BloomGrahamReport validate_bloom_graham(const Model& m)
{
    const VarTable& vt = m.vartable();
    BloomGrahamReport rep;

    NormalizationCheck a{"a", "weighted homogeneity P(tz, t conj(z), t^m u) = t^{m_j} P", true, {}};
    for (int l = 0; l < vt.d(); ++l)
        if (m.p(l).homogeneous_degree() != vt.normal_weight(l)) {
            a.pass = false;
            a.details.push_back(component_name(vt, l) + " is not homogeneous of weight " +
                                to_string(vt.external(vt.normal_weight(l))));
        }
    rep.checks.push_back(a);

    NormalizationCheck b{"b", "P(z, 0, u) = 0", true, {}};
    for (int l = 0; l < vt.d(); ++l)
        for (const auto& [mono, c] : m.p(l).terms())
            if (bidegree(mono, vt).second == 0) {
                b.pass = false;
                b.details.push_back(component_name(vt, l) + " has term " + monomial_text(mono, m.p(l)) + " free of conj(z)");
            }
    rep.checks.push_back(b);

    // Projections of P_target onto mu * P_source for nonconstant u-monomials mu
    // over the allowed u variables.
    auto project = [&](NormalizationCheck& chk, int target, int source, const std::vector<int>& uvars) {
        const int gap = vt.normal_weight(target) - vt.normal_weight(source);
        if (gap <= 0 || uvars.empty()) return;
        for (const Monomial& mu : monomials_of_degree(vt, Ring::Real, uvars, gap)) {
            Polynomial shape = Polynomial::term(m.vt_ptr(), Ring::Real, mu, Scalar(1)) * m.p(source);
            Rational coef = inner(m.p(target), shape) / inner(shape, shape);
            if (sgn(coef) == 0) continue;
            chk.pass = false;
            chk.details.push_back(component_name(vt, target) + " projects onto " + monomial_text(mu, shape) + "*P" +
                                  std::to_string(source + 1) + " with coefficient " + to_string(coef));
        }
    };

    NormalizationCheck c{"c", "no term u^lambda * P_l inside a later component P_r (l < r)", true, {}};
    for (int r = 0; r < vt.d(); ++r) {
        std::vector<int> uvars;
        for (int s = 0; s < vt.d(); ++s)
            if (vt.block_of(s) < vt.block_of(r)) uvars.push_back(vt.u(s));
        for (int l = 0; l < r; ++l) project(c, r, l, uvars);
    }
    rep.checks.push_back(c);

    NormalizationCheck dchk{"d", "no term u_k^.. u_{j-1}^.. * P_k inside block j (k < j)", true, {}};
    for (int target = 0; target < vt.d(); ++target) {
        const int j = vt.block_of(target);
        for (int k = 0; k < j; ++k) {
            std::vector<int> uvars;
            for (int s = 0; s < vt.d(); ++s)
                if (vt.block_of(s) >= k && vt.block_of(s) < j) uvars.push_back(vt.u(s));
            for (int source = vt.block_start(k); source < vt.block_start(k) + vt.blocks()[k].l; ++source)
                project(dchk, target, source, uvars);
        }
    }
    rep.checks.push_back(dchk);
    return rep;
}

// ---------------------------------------------------------------------------

Model quadric_from_matrices(const QuadricData& q)
{
    const int n = q.n;
    const int d = static_cast<int>(q.matrices.size());
    if (n < 1 || d < 1) throw ModelError({"quadric needs n >= 1 and at least one matrix"});
    std::vector<std::string> diag;
    for (int l = 0; l < d; ++l) {
        const auto& a = q.matrices[l];
        bool shape_ok = static_cast<int>(a.size()) == n;
        for (const auto& row : a) shape_ok = shape_ok && static_cast<int>(row.size()) == n;
        if (!shape_ok) {
            diag.push_back("A" + std::to_string(l + 1) + " is not " + std::to_string(n) + "x" + std::to_string(n));
            continue;
        }
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                if (a[i][j] != a[j][i].conj())
                    diag.push_back("A" + std::to_string(l + 1) + " is not Hermitian at (" + std::to_string(i + 1) + "," +
                                   std::to_string(j + 1) + ")");
    }
    if (!diag.empty()) throw ModelError(std::move(diag));

    std::vector<std::vector<Scalar>> flat;
    for (const auto& a : q.matrices) {
        std::vector<Scalar> v;
        for (const auto& row : a) v.insert(v.end(), row.begin(), row.end());
        flat.push_back(std::move(v));
    }
    auto deps = real_dependencies(flat);
    if (!deps.empty()) throw ModelError({"matrices are linearly dependent over R: " + certificate_text(deps.front(), "A")});

    auto vt = std::make_shared<const VarTable>(n, std::vector<Block>{{2, d}});
    std::vector<Polynomial> p;
    for (const auto& a : q.matrices) {
        std::vector<Polynomial::Term> terms;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (a[i][j].is_zero()) continue;
                std::vector<std::uint16_t> e(vt->num_vars(Ring::Real), 0);
                e[vt->zbar(i)] += 1;
                e[vt->z(j)] += 1;
                terms.emplace_back(Monomial::make(*vt, Ring::Real, std::move(e)), a[i][j]);
            }
        p.push_back(Polynomial::from_terms(vt, Ring::Real, std::move(terms)));
    }
    return Model::create(vt, std::move(p));
}

bool quadric_nondegenerate(const QuadricData& q)
{
    // real form [[Re, -Im], [Im, Re]] of the stacked (d n) x n matrix
    const std::size_t n = static_cast<std::size_t>(q.n);
    linalg::SparseMatrix a(2 * n);
    for (const auto& m : q.matrices)
        for (const auto& row : m) {
            std::vector<std::pair<std::uint32_t, Rational>> top, bottom;
            for (std::size_t j = 0; j < n; ++j) {
                top.emplace_back(static_cast<std::uint32_t>(j), row[j].re());
                top.emplace_back(static_cast<std::uint32_t>(n + j), -row[j].im());
                bottom.emplace_back(static_cast<std::uint32_t>(j), row[j].im());
                bottom.emplace_back(static_cast<std::uint32_t>(n + j), row[j].re());
            }
            a.add_row(std::move(top));
            a.add_row(std::move(bottom));
        }
    return linalg::rank(a) == 2 * n;
}

// ---------------------------------------------------------------------------

WSubstitution::WSubstitution(const Model& m, int max_power) : vt_(m.vt_ptr())
{
    for (int l = 0; l < m.d(); ++l) {
        images_.push_back(Polynomial::variable(vt_, Ring::Real, vt_->u(l)) + m.p(l) * Scalar::i());
        std::vector<Polynomial> pw{Polynomial::constant(vt_, Ring::Real, Scalar(1))};
        for (int e = 1; e <= max_power; ++e) pw.push_back(pw.back() * images_[l]);
        powers_.push_back(std::move(pw));
    }
}

const Polynomial& WSubstitution::power(int l, int e, Polynomial& scratch) const
{
    if (e < static_cast<int>(powers_[l].size())) return powers_[l][e];
    scratch = craut::pow(images_[l], static_cast<unsigned>(e));
    return scratch;
}

Polynomial WSubstitution::image(const Monomial& hol) const
{
    const VarTable& vt = *vt_;
    std::vector<std::uint16_t> e(vt.num_vars(Ring::Real), 0);
    for (int j = 0; j < vt.n(); ++j) e[vt.z(j)] = hol[vt.z(j)];
    Polynomial out = Polynomial::term(vt_, Ring::Real, Monomial::make(vt, Ring::Real, std::move(e)), Scalar(1));
    Polynomial scratch(vt_, Ring::Real);
    for (int l = 0; l < vt.d(); ++l) {
        const int b = hol[vt.w(l)];
        if (b > 0) out = out * power(l, b, scratch);
    }
    return out;
}

Polynomial WSubstitution::apply(const Polynomial& hol) const
{
    if (hol.ring() != Ring::Hol) throw std::invalid_argument("substitute_w: HOL polynomial expected");
    Polynomial out(vt_, Ring::Real);
    for (const auto& [m, c] : hol.terms()) out += image(m) * c;
    return out;
}

Polynomial substitute_w(const Polynomial& hol, const Model& m)
{
    int top = 0;
    for (int l = 0; l < m.d(); ++l) top = std::max(top, hol.degree_in(m.vartable().w(l)));
    return WSubstitution(m, top).apply(hol);
}

int default_nondegeneracy_bound(const VarTable& vt) { return vt.mk() + vt.n(); }

} // namespace craut
