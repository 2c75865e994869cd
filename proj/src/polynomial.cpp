#include <craut/polynomial.hpp>

#include <algorithm>
#include <stdexcept>

namespace craut {

Monomial Monomial::make(const VarTable& vt, Ring ring, std::vector<std::uint16_t> exps)
{
    if (static_cast<int>(exps.size()) != vt.num_vars(ring))
        throw std::invalid_argument("Monomial: exponent vector has wrong length");
    int deg = 0;
    for (std::size_t v = 0; v < exps.size(); ++v) deg += exps[v] * vt.weight(ring, static_cast<int>(v));
    return Monomial(std::move(exps), deg);
}

Monomial Monomial::one(const VarTable& vt, Ring ring)
{
    return Monomial(std::vector<std::uint16_t>(vt.num_vars(ring), 0), 0);
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    std::vector<std::uint16_t> e(a.exps_);
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = static_cast<std::uint16_t>(e[k] + b.exps_[k]);
    return Monomial(std::move(e), a.degree_ + b.degree_);
}

Rational weighted_degree(const Monomial& m, const VarTable& vt) { return vt.external(m.degree()); }

std::pair<int, int> bidegree(const Monomial& m, const VarTable& vt)
{
    int first = 0, second = 0;
    for (int j = 0; j < vt.n(); ++j) first += m[j];
    if (static_cast<int>(m.size()) == vt.num_vars(Ring::Real)) {
        for (int j = 0; j < vt.n(); ++j) second += m[vt.zbar(j)];
    } else {
        for (int l = 0; l < vt.d(); ++l) second += m[vt.w(l)];
    }
    return {first, second};
}

std::vector<Monomial> monomials_of_degree(const VarTable& vt, Ring ring, const std::vector<int>& vars, int degree)
{
    std::vector<Monomial> out;
    if (degree < 0) return out;
    std::vector<std::uint16_t> exps(vt.num_vars(ring), 0);
    // depth-first over the listed variables, spending the remaining degree
    auto rec = [&](auto&& self, std::size_t k, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(exps, degree);
            return;
        }
        if (k == vars.size()) return;
        const int v = vars[k];
        const int wv = vt.weight(ring, v);
        for (int e = 0; e * wv <= remaining; ++e) {
            exps[v] = static_cast<std::uint16_t>(e);
            self(self, k + 1, remaining - e * wv);
        }
        exps[v] = 0;
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(VarTablePtr vt, Ring ring) : vt_(std::move(vt)), ring_(ring)
{
    if (!vt_) throw std::invalid_argument("Polynomial: null VarTable");
}

Polynomial Polynomial::constant(VarTablePtr vt, Ring ring, const Scalar& c)
{
    Polynomial p(vt, ring);
    if (!c.is_zero()) p.terms_.emplace_back(Monomial::one(*vt, ring), c);
    return p;
}

Polynomial Polynomial::variable(VarTablePtr vt, Ring ring, int var)
{
    if (var < 0 || var >= vt->num_vars(ring)) throw std::out_of_range("Polynomial::variable: bad index");
    std::vector<std::uint16_t> e(vt->num_vars(ring), 0);
    e[var] = 1;
    Monomial m = Monomial::make(*vt, ring, std::move(e));
    return term(std::move(vt), ring, std::move(m), Scalar(1));
}

Polynomial Polynomial::term(VarTablePtr vt, Ring ring, Monomial m, Scalar c)
{
    Polynomial p(std::move(vt), ring);
    if (!c.is_zero()) p.terms_.emplace_back(std::move(m), std::move(c));
    return p;
}

Polynomial Polynomial::from_terms(VarTablePtr vt, Ring ring, std::vector<Term> terms)
{
    Polynomial p(std::move(vt), ring);
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first) {
            p.terms_.back().second += t.second;
            if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
        } else if (!t.second.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

Scalar Polynomial::coefficient(const Monomial& m) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& k) { return t.first < k; });
    if (it != terms_.end() && it->first == m) return it->second;
    return Scalar();
}

bool Polynomial::is_homogeneous() const
{
    return terms_.empty() || terms_.front().first.degree() == terms_.back().first.degree();
}

int Polynomial::homogeneous_degree() const
{
    if (terms_.empty() || !is_homogeneous()) return -1;
    return terms_.front().first.degree();
}

bool Polynomial::depends_on(int var) const
{
    return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.first[var] != 0; });
}

int Polynomial::degree_in(int var) const
{
    int best = 0;
    for (const auto& t : terms_) best = std::max<int>(best, t.first[var]);
    return best;
}

std::map<int, Polynomial> Polynomial::homogeneous_parts_scaled() const
{
    std::map<int, Polynomial> parts;
    for (const auto& t : terms_) {
        auto it = parts.try_emplace(t.first.degree(), vt_, ring_).first;
        // terms arrive in order, so appending keeps each part canonical
        it->second.terms_.push_back(t);
    }
    return parts;
}

std::map<Rational, Polynomial> homogeneous_parts(const Polynomial& p)
{
    std::map<Rational, Polynomial> out;
    for (auto& [deg, part] : p.homogeneous_parts_scaled()) out.emplace(p.vartable().external(deg), std::move(part));
    return out;
}

void Polynomial::check_compatible(const Polynomial& o, const char* op) const
{
    if (!same_space(o)) throw std::invalid_argument(std::string("Polynomial ") + op + ": operands live in different rings");
}

Polynomial Polynomial::operator-() const
{
    Polynomial r(*this);
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    check_compatible(o, "+");
    if (o.terms_.empty()) return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->first < a->first) {
            merged.push_back(*b++);
        } else {
            Scalar c = a->second + b->second;
            if (!c.is_zero()) merged.emplace_back(std::move(a->first), std::move(c));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Scalar& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    a.check_compatible(b, "*");
    std::vector<Polynomial::Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) prod.emplace_back(ma * mb, ca * cb);
    return Polynomial::from_terms(a.vt_, a.ring_, std::move(prod));
}

bool operator==(const Polynomial& a, const Polynomial& b) { return a.same_space(b) && a.terms_ == b.terms_; }

// ---------------------------------------------------------------------------

Polynomial diff(const Polynomial& p, int var)
{
    if (var < 0 || var >= p.num_vars()) throw std::out_of_range("diff: variable not in ring");
    const int wv = p.vartable().weight(p.ring(), var);
    std::vector<Polynomial::Term> out;
    for (const auto& [m, c] : p.terms()) {
        if (m[var] == 0) continue;
        std::vector<std::uint16_t> e(m.exps());
        Scalar k = c * Scalar(static_cast<long>(e[var]));
        --e[var];
        out.emplace_back(Monomial(std::move(e), m.degree() - wv), std::move(k));
    }
    // differentiation keeps relative order except across degree classes; re-sort
    return Polynomial::from_terms(p.vt_ptr(), p.ring(), std::move(out));
}

Polynomial pow(const Polynomial& p, unsigned k)
{
    Polynomial result = Polynomial::constant(p.vt_ptr(), p.ring(), Scalar(1));
    Polynomial base = p;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images)
{
    if (static_cast<int>(images.size()) != p.num_vars())
        throw std::invalid_argument("substitute: need one image per variable");
    const Polynomial& ref = images.front();
    for (const auto& img : images)
        if (!img.same_space(ref)) throw std::invalid_argument("substitute: images live in different rings");

    // powers[v][e] = images[v]^e, built lazily
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power = [&](std::size_t v, unsigned e) -> const Polynomial& {
        auto& pw = powers[v];
        if (pw.empty()) pw.push_back(Polynomial::constant(ref.vt_ptr(), ref.ring(), Scalar(1)));
        while (pw.size() <= e) pw.push_back(pw.back() * images[v]);
        return pw[e];
    };

    Polynomial result(ref.vt_ptr(), ref.ring());
    for (const auto& [m, c] : p.terms()) {
        Polynomial t = Polynomial::constant(ref.vt_ptr(), ref.ring(), c);
        for (std::size_t v = 0; v < m.size(); ++v)
            if (m[v] != 0) t = t * power(v, m[v]);
        result += t;
    }
    return result;
}

Polynomial substitute(const Polynomial& p, const std::map<int, Polynomial>& sigma)
{
    if (sigma.empty()) return p;
    const Polynomial& ref = sigma.begin()->second;
    const VarTable& vt = p.vartable();
    if (!(ref.vartable() == vt)) throw std::invalid_argument("substitute: images use a different VarTable");
    const Ring target = ref.ring();
    std::vector<Polynomial> images;
    images.reserve(p.num_vars());
    for (int v = 0; v < p.num_vars(); ++v) {
        auto it = sigma.find(v);
        if (it != sigma.end()) {
            if (!it->second.same_space(ref)) throw std::invalid_argument("substitute: images live in different rings");
            images.push_back(it->second);
            continue;
        }
        // identity on variables that exist under the same name in the target ring
        if (p.ring() == target) {
            images.push_back(Polynomial::variable(ref.vt_ptr(), target, v));
        } else if (vt.is_z(v)) {
            images.push_back(Polynomial::variable(ref.vt_ptr(), target, vt.z(v)));
        } else {
            throw std::invalid_argument("substitute: variable " + vt.var_name(p.ring(), v) + " has no image in the " +
                                        ring_name(target) + " ring");
        }
    }
    return substitute(p, images);
}

Polynomial conjugate(const Polynomial& p)
{
    if (p.ring() != Ring::Real) throw std::invalid_argument("conjugate: only defined on the REAL ring");
    const int n = p.vartable().n();
    std::vector<Polynomial::Term> out;
    out.reserve(p.size());
    for (const auto& [m, c] : p.terms()) {
        std::vector<std::uint16_t> e(m.exps());
        for (int j = 0; j < n; ++j) std::swap(e[j], e[n + j]);
        out.emplace_back(Monomial(std::move(e), m.degree()), c.conj());
    }
    return Polynomial::from_terms(p.vt_ptr(), p.ring(), std::move(out));
}

Polynomial real_part(const Polynomial& p) { return (p + conjugate(p)) * Scalar(Rational(1, 2)); }

Polynomial imag_part(const Polynomial& p) { return (p - conjugate(p)) * Scalar(0, Rational(-1, 2)); }

bool is_real(const Polynomial& p) { return p.ring() == Ring::Real && conjugate(p) == p; }

bool is_pluriharmonic_free(const Polynomial& p)
{
    if (p.ring() != Ring::Real) throw std::invalid_argument("is_pluriharmonic_free: REAL ring expected");
    for (const auto& [m, c] : p.terms()) {
        auto [zd, zbd] = bidegree(m, p.vartable());
        if (zd == 0 || zbd == 0) return false;
    }
    return true;
}

} // namespace craut
