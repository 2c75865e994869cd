#ifndef CRAUT_TANGENCY_HPP
#define CRAUT_TANGENCY_HPP

#include <craut/model.hpp>
#include <craut/vector_field.hpp>

#include <vector>

namespace craut {

enum class ResidualKind {
    /// 2 Re[Z(P_l - v_l)] on the model: zero iff Re Z is tangent.
    Real,
    /// Z(P_l - v_l) on the model: zero iff Z itself is complex tangent.
    Complex,
};

/// Evaluates the tangency identity for fields given through the images of
/// their coefficients under w -> u + iP. With
///   A_l = sum_j F_j P_{l,z_j} + 1/2 sum_s G_s P_{l,u_s},   B_l = G_l,
/// the real residual is 2 Re A_l - Im B_l and the complex one A_l + (i/2) B_l.
class TangencyOperator {
public:
    TangencyOperator(const Model& m, int max_w_power);

    const Model& model() const { return *model_; }
    const WSubstitution& substitution() const { return subst_; }

    std::vector<Polynomial> residual(const VectorField& x, ResidualKind kind) const;
    /// Residual of the field with the single coefficient unit * hol_monomial
    /// at F_index (is_g false) or G_index (is_g true).
    std::vector<Polynomial> slot_residual(bool is_g, int index, const Monomial& hol_monomial, const Scalar& unit,
                                          ResidualKind kind) const;

private:
    std::vector<Polynomial> combine(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                                    ResidualKind kind) const;

    const Model* model_;
    WSubstitution subst_;
    std::vector<std::vector<Polynomial>> dpz_;  // [l][j] = dP_l/dz_j
    std::vector<std::vector<Polynomial>> dpu_;  // [l][s] = dP_l/du_s
};

/// residual_l = 2 Re[sum_j F_j P_{l,z_j} + 1/2 sum_s G_s P_{l,u_s}] - Im G_l,
/// coefficients evaluated at w = u + iP. All zero iff X is in aut(M_H, 0).
std::vector<Polynomial> tangency_residual(const VectorField& x, const Model& m);
bool is_in_aut(const VectorField& x, const Model& m);

/// Complex tangency residual; all zero iff X annihilates every v_l - P_l on the model.
std::vector<Polynomial> complex_tangency_residual(const VectorField& x, const Model& m);

} // namespace craut

#endif // CRAUT_TANGENCY_HPP
