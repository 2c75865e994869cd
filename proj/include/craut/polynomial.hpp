#ifndef CRAUT_POLYNOMIAL_HPP
#define CRAUT_POLYNOMIAL_HPP

#include <craut/scalar.hpp>
#include <craut/vartable.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

namespace craut {

using VarTablePtr = std::shared_ptr<const VarTable>;

/// Exponent vector together with its scaled weighted degree.
class Monomial {
public:
    Monomial() = default;
    Monomial(std::vector<std::uint16_t> exps, int degree) : exps_(std::move(exps)), degree_(degree) {}

    /// Builds a monomial over (vt, ring), computing the degree.
    static Monomial make(const VarTable& vt, Ring ring, std::vector<std::uint16_t> exps);
    static Monomial one(const VarTable& vt, Ring ring);

    const std::vector<std::uint16_t>& exps() const { return exps_; }
    std::uint16_t operator[](std::size_t k) const { return exps_[k]; }
    std::size_t size() const { return exps_.size(); }
    int degree() const { return degree_; }
    bool is_constant() const { return degree_ == 0; }

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.degree_ == b.degree_ && a.exps_ == b.exps_; }

    /// Global monomial order: scaled degree ascending, then exponent vectors
    /// lexicographically with larger exponents on earlier variables first.
    friend bool operator<(const Monomial& a, const Monomial& b)
    {
        if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
        return a.exps_ > b.exps_;
    }

private:
    std::vector<std::uint16_t> exps_;
    int degree_ = 0;
};

/// Weighted degree of a monomial in external (m_1-normalized) units.
Rational weighted_degree(const Monomial& m, const VarTable& vt);

/// Sparse polynomial over the HOL or REAL ring of a VarTable. Terms are kept
/// sorted in the global monomial order with no zero coefficients, so
/// structural equality is polynomial equality.
class Polynomial {
public:
    using Term = std::pair<Monomial, Scalar>;

    Polynomial(VarTablePtr vt, Ring ring);

    static Polynomial constant(VarTablePtr vt, Ring ring, const Scalar& c);
    static Polynomial variable(VarTablePtr vt, Ring ring, int var);
    static Polynomial term(VarTablePtr vt, Ring ring, Monomial m, Scalar c);
    /// Combines like terms and drops zeros; input order is irrelevant.
    static Polynomial from_terms(VarTablePtr vt, Ring ring, std::vector<Term> terms);

    const VarTable& vartable() const { return *vt_; }
    const VarTablePtr& vt_ptr() const { return vt_; }
    Ring ring() const { return ring_; }
    int num_vars() const { return vt_->num_vars(ring_); }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Scalar coefficient(const Monomial& m) const;

    bool is_homogeneous() const;
    /// Scaled degree of a nonzero homogeneous polynomial, -1 otherwise.
    int homogeneous_degree() const;
    bool depends_on(int var) const;
    int degree_in(int var) const;

    /// Weighted homogeneous components keyed by scaled degree.
    std::map<int, Polynomial> homogeneous_parts_scaled() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Scalar& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
    friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    bool same_space(const Polynomial& o) const { return ring_ == o.ring_ && (vt_ == o.vt_ || *vt_ == *o.vt_); }

private:
    void check_compatible(const Polynomial& o, const char* op) const;

    VarTablePtr vt_;
    Ring ring_;
    std::vector<Term> terms_;
};

/// Weighted homogeneous decomposition keyed by external weight.
std::map<Rational, Polynomial> homogeneous_parts(const Polynomial& p);

Polynomial diff(const Polynomial& p, int var);
Polynomial pow(const Polynomial& p, unsigned k);

/// Ring homomorphism sending variable v to images[v]; images must cover
/// every variable of p's ring and share one ring.
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images);
/// Partial substitution; variables absent from sigma map to the variable of
/// the same name in the target ring (z_j exists in both rings).
Polynomial substitute(const Polynomial& p, const std::map<int, Polynomial>& sigma);

/// REAL ring only: swaps z_j <-> conj(z_j), conjugates coefficients, fixes u.
Polynomial conjugate(const Polynomial& p);
Polynomial real_part(const Polynomial& p);
Polynomial imag_part(const Polynomial& p);
bool is_real(const Polynomial& p);
/// True iff no monomial is free of conj(z) and none is free of z.
bool is_pluriharmonic_free(const Polynomial& p);

/// All monomials of the given scaled degree using only the listed variables,
/// in the global monomial order.
std::vector<Monomial> monomials_of_degree(const VarTable& vt, Ring ring, const std::vector<int>& vars, int degree);

/// (z-degree, conj(z)-degree) of a REAL monomial; (z-degree, w-degree) of a HOL one.
std::pair<int, int> bidegree(const Monomial& m, const VarTable& vt);

} // namespace craut

#endif // CRAUT_POLYNOMIAL_HPP
