#include <craut/tangency.hpp>

#include <algorithm>
#include <stdexcept>

namespace craut {

namespace {

int max_w_degree(const VectorField& x)
{
    const VarTable& vt = x.vartable();
    int top = 0;
    for (const auto* group : {&x.f, &x.g})
        for (const auto& p : *group)
            for (int l = 0; l < vt.d(); ++l) top = std::max(top, p.degree_in(vt.w(l)));
    return top;
}

} // namespace

TangencyOperator::TangencyOperator(const Model& m, int max_w_power) : model_(&m), subst_(m, max_w_power)
{
    const VarTable& vt = m.vartable();
    for (int l = 0; l < m.d(); ++l) {
        std::vector<Polynomial> z, u;
        for (int j = 0; j < vt.n(); ++j) z.push_back(diff(m.p(l), vt.z(j)));
        for (int s = 0; s < vt.d(); ++s) u.push_back(diff(m.p(l), vt.u(s)) * Scalar(Rational(1, 2)));
        dpz_.push_back(std::move(z));
        dpu_.push_back(std::move(u));
    }
}

std::vector<Polynomial> TangencyOperator::combine(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                                                  ResidualKind kind) const
{
    std::vector<Polynomial> out;
    out.reserve(a.size());
    for (std::size_t l = 0; l < a.size(); ++l) {
        if (kind == ResidualKind::Real) {
            out.push_back(real_part(a[l]) * Scalar(2) - imag_part(b[l]));
        } else {
            out.push_back(a[l] + b[l] * Scalar(0, Rational(1, 2)));
        }
    }
    return out;
}

std::vector<Polynomial> TangencyOperator::residual(const VectorField& x, ResidualKind kind) const
{
    const Model& m = *model_;
    const VarTable& vt = m.vartable();
    if (!(x.vartable() == vt)) throw std::invalid_argument("tangency: field and model use different variables");
    std::vector<Polynomial> sf, sg;
    for (const auto& p : x.f) sf.push_back(subst_.apply(p));
    for (const auto& p : x.g) sg.push_back(subst_.apply(p));

    std::vector<Polynomial> a, b;
    for (int l = 0; l < m.d(); ++l) {
        Polynomial acc(m.vt_ptr(), Ring::Real);
        for (int j = 0; j < vt.n(); ++j)
            if (!sf[j].is_zero() && !dpz_[l][j].is_zero()) acc += sf[j] * dpz_[l][j];
        for (int s = 0; s < vt.d(); ++s)
            if (!sg[s].is_zero() && !dpu_[l][s].is_zero()) acc += sg[s] * dpu_[l][s];
        a.push_back(std::move(acc));
        b.push_back(sg[l]);
    }
    return combine(a, b, kind);
}

std::vector<Polynomial> TangencyOperator::slot_residual(bool is_g, int index, const Monomial& hol_monomial,
                                                        const Scalar& unit, ResidualKind kind) const
{
    const Model& m = *model_;
    Polynomial img = subst_.image(hol_monomial) * unit;
    std::vector<Polynomial> a, b;
    for (int l = 0; l < m.d(); ++l) {
        const Polynomial& factor = is_g ? dpu_[l][index] : dpz_[l][index];
        a.push_back(factor.is_zero() ? Polynomial(m.vt_ptr(), Ring::Real) : img * factor);
        b.push_back(is_g && index == l ? img : Polynomial(m.vt_ptr(), Ring::Real));
    }
    return combine(a, b, kind);
}

std::vector<Polynomial> tangency_residual(const VectorField& x, const Model& m)
{
    return TangencyOperator(m, max_w_degree(x)).residual(x, ResidualKind::Real);
}

bool is_in_aut(const VectorField& x, const Model& m)
{
    for (const auto& r : tangency_residual(x, m))
        if (!r.is_zero()) return false;
    return true;
}

std::vector<Polynomial> complex_tangency_residual(const VectorField& x, const Model& m)
{
    return TangencyOperator(m, max_w_degree(x)).residual(x, ResidualKind::Complex);
}

} // namespace craut
