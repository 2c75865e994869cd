#include <craut/vector_field.hpp>

#include <craut/expr.hpp>

#include <stdexcept>

namespace craut {

VectorField VectorField::zero(const VarTablePtr& vt)
{
    VectorField x;
    x.f.assign(vt->n(), Polynomial(vt, Ring::Hol));
    x.g.assign(vt->d(), Polynomial(vt, Ring::Hol));
    return x;
}

bool VectorField::is_zero() const
{
    for (const auto& p : f)
        if (!p.is_zero()) return false;
    for (const auto& p : g)
        if (!p.is_zero()) return false;
    return true;
}

VectorField& VectorField::operator+=(const VectorField& o)
{
    if (f.size() != o.f.size() || g.size() != o.g.size()) throw std::invalid_argument("VectorField +: arity mismatch");
    for (std::size_t j = 0; j < f.size(); ++j) f[j] += o.f[j];
    for (std::size_t l = 0; l < g.size(); ++l) g[l] += o.g[l];
    return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) { return *this += o * Scalar(-1); }

VectorField& VectorField::operator*=(const Scalar& c)
{
    for (auto& p : f) p *= c;
    for (auto& p : g) p *= c;
    return *this;
}

Polynomial VectorField::apply(const Polynomial& h) const
{
    const VarTable& vt = vartable();
    Polynomial out(vt_ptr(), Ring::Hol);
    for (int j = 0; j < vt.n(); ++j)
        if (!f[j].is_zero()) out += f[j] * diff(h, vt.z(j));
    for (int l = 0; l < vt.d(); ++l)
        if (!g[l].is_zero()) out += g[l] * diff(h, vt.w(l));
    return out;
}

VectorField make_field(const VarTablePtr& vt, std::vector<Polynomial> f, std::vector<Polynomial> g)
{
    if (static_cast<int>(f.size()) != vt->n() || static_cast<int>(g.size()) != vt->d())
        throw std::invalid_argument("make_field: expected " + std::to_string(vt->n()) + " f and " +
                                    std::to_string(vt->d()) + " g coefficients");
    for (const auto* group : {&f, &g})
        for (const auto& p : *group)
            if (p.ring() != Ring::Hol || !(p.vartable() == *vt))
                throw std::invalid_argument("make_field: coefficients must be HOL polynomials over the model's variables");
    VectorField x;
    x.f = std::move(f);
    x.g = std::move(g);
    return x;
}

VectorField normal_field(const VarTablePtr& vt, int l)
{
    if (l < 0 || l >= vt->d()) throw std::out_of_range("normal_field: bad normal index");
    VectorField x = VectorField::zero(vt);
    x.g[l] = Polynomial::constant(vt, Ring::Hol, Scalar(1));
    return x;
}

VectorField euler_field(const VarTablePtr& vt)
{
    VectorField x = VectorField::zero(vt);
    const Rational inv_m1(1, vt->m1());
    for (int j = 0; j < vt->n(); ++j) x.f[j] = Polynomial::variable(vt, Ring::Hol, vt->z(j)) * Scalar(inv_m1);
    for (int l = 0; l < vt->d(); ++l)
        x.g[l] = Polynomial::variable(vt, Ring::Hol, vt->w(l)) * Scalar(Rational(vt->normal_weight(l), vt->m1()));
    return x;
}

std::map<int, VectorField> decompose(const VectorField& x)
{
    const VarTable& vt = x.vartable();
    std::map<int, VectorField> parts;
    auto slot = [&](int mu) -> VectorField& { return parts.try_emplace(mu, VectorField::zero(x.vt_ptr())).first->second; };
    for (int j = 0; j < vt.n(); ++j)
        for (auto& [deg, part] : x.f[j].homogeneous_parts_scaled()) slot(deg - 1).f[j] = part;
    for (int l = 0; l < vt.d(); ++l)
        for (auto& [deg, part] : x.g[l].homogeneous_parts_scaled()) slot(deg - vt.normal_weight(l)).g[l] = part;
    return parts;
}

FieldWeight field_weight(const VectorField& x)
{
    auto parts = decompose(x);
    FieldWeight w;
    if (parts.empty()) return w;
    if (parts.size() > 1) {
        w.kind = FieldWeight::Kind::Inhomogeneous;
        return w;
    }
    w.kind = FieldWeight::Kind::Homogeneous;
    w.scaled = parts.begin()->first;
    w.mu = x.vartable().external(w.scaled);
    return w;
}

VectorField lie_bracket(const VectorField& x, const VectorField& y)
{
    VectorField out = VectorField::zero(x.vt_ptr());
    for (std::size_t j = 0; j < out.f.size(); ++j) out.f[j] = x.apply(y.f[j]) - y.apply(x.f[j]);
    for (std::size_t l = 0; l < out.g.size(); ++l) out.g[l] = x.apply(y.g[l]) - y.apply(x.g[l]);
    return out;
}

bool is_rigid(const VectorField& x)
{
    const VarTable& vt = x.vartable();
    for (const auto* group : {&x.f, &x.g})
        for (const auto& p : *group)
            for (int l = 0; l < vt.d(); ++l)
                if (p.depends_on(vt.w(l))) return false;
    return true;
}

VectorField d_operator(const VectorField& x, int l, int k)
{
    const VarTable& vt = x.vartable();
    if (l < 0 || l >= vt.d() || vt.block_of(l) != 0)
        throw std::out_of_range("d_operator: index must name a first-block normal variable");
    VectorField out = x;
    const int var = vt.w(l);
    for (int step = 0; step < k; ++step) {
        for (auto& p : out.f) p = diff(p, var);
        for (auto& p : out.g) p = diff(p, var);
    }
    return out;
}

bool d_operator_within_hypotheses(const VarTable& vt) { return vt.num_blocks() == 1; }

std::string format_field(const VectorField& x)
{
    const VarTable& vt = x.vartable();
    std::string out;
    auto emit = [&](const Polynomial& p, const std::string& name) {
        if (p.is_zero()) return;
        if (!out.empty()) out += " + ";
        out += "(" + format_poly(p) + ")*d/d" + name;
    };
    for (int j = 0; j < vt.n(); ++j) emit(x.f[j], "z" + std::to_string(j + 1));
    for (int l = 0; l < vt.d(); ++l) emit(x.g[l], "w" + std::to_string(l + 1));
    return out.empty() ? "0" : out;
}

} // namespace craut
