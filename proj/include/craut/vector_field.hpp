#ifndef CRAUT_VECTOR_FIELD_HPP
#define CRAUT_VECTOR_FIELD_HPP

#include <craut/polynomial.hpp>

#include <map>
#include <string>
#include <vector>

namespace craut {

/// Holomorphic polynomial field  sum F_j d/dz_j + sum G_l d/dw_l  with all
/// coefficients in the HOL ring. Normal indices are flattened over blocks.
struct VectorField {
    std::vector<Polynomial> f;
    std::vector<Polynomial> g;

    static VectorField zero(const VarTablePtr& vt);

    const VarTable& vartable() const { return f.front().vartable(); }
    const VarTablePtr& vt_ptr() const { return f.front().vt_ptr(); }
    bool is_zero() const;

    VectorField& operator+=(const VectorField& o);
    VectorField& operator-=(const VectorField& o);
    VectorField& operator*=(const Scalar& c);
    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
    friend VectorField operator*(VectorField a, const Scalar& c) { return a *= c; }
    friend VectorField operator*(const Scalar& c, VectorField a) { return a *= c; }
    friend bool operator==(const VectorField& a, const VectorField& b) { return a.f == b.f && a.g == b.g; }

    /// Applies the field as a derivation to a HOL polynomial.
    Polynomial apply(const Polynomial& h) const;
};

/// Coefficients given as HOL polynomials; checks ring and arity.
VectorField make_field(const VarTablePtr& vt, std::vector<Polynomial> f, std::vector<Polynomial> g);

/// d/dw_l.
VectorField normal_field(const VarTablePtr& vt, int l);
/// E = (1/m_1) sum z_j d/dz_j + sum (m_j/m_1) w_l d/dw_l.
VectorField euler_field(const VarTablePtr& vt);

struct FieldWeight {
    enum class Kind { Zero, Homogeneous, Inhomogeneous };
    Kind kind = Kind::Zero;
    int scaled = 0;  ///< meaningful for Homogeneous
    Rational mu;     ///< scaled / m_1
};

FieldWeight field_weight(const VectorField& x);
/// Weighted homogeneous components keyed by scaled weight.
std::map<int, VectorField> decompose(const VectorField& x);

/// Standard bracket, coefficient-wise X(Y) - Y(X).
VectorField lie_bracket(const VectorField& x, const VectorField& y);
/// True iff no coefficient involves a w variable.
bool is_rigid(const VectorField& x);

/// k-fold bracket with d/dw_l, sign absorbed: returns d^k/dw_l^k of every
/// coefficient. Requires l to index a first-block normal variable.
VectorField d_operator(const VectorField& x, int l, int k);
/// d_operator is only backed by the integration lemma when the model has a
/// single Hoermander number.
bool d_operator_within_hypotheses(const VarTable& vt);

/// "(c1)*d/dz1 + (c2)*d/dw1"; "0" for the zero field.
std::string format_field(const VectorField& x);

} // namespace craut

#endif // CRAUT_VECTOR_FIELD_HPP
