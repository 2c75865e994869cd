#ifndef CRAUT_MODEL_HPP
#define CRAUT_MODEL_HPP

#include <craut/polynomial.hpp>
#include <craut/vector_field.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace craut {

/// Construction failure carrying one diagnostic per violated invariant.
class ModelError : public std::invalid_argument {
public:
    explicit ModelError(std::vector<std::string> diagnostics);
    const std::vector<std::string>& diagnostics() const { return diagnostics_; }

private:
    std::vector<std::string> diagnostics_;
};

/// d Hermitian n x n matrices defining v_l = conj(z)^T A_l z.
struct QuadricData {
    int n = 0;
    std::vector<std::vector<std::vector<Scalar>>> matrices;
};

/// Model submanifold Im w = P(z, conj(z), Re w) with P in the REAL ring.
/// Immutable once created; create() enforces:
///  - component l is weighted homogeneous of the scaled degree of its block
///  - every component is real and pluriharmonic-free
///  - block-j components only involve u variables of blocks before j
///  - first-block components are nonzero and linearly independent over R
class Model {
public:
    static Model create(VarTablePtr vt, std::vector<Polynomial> p);

    const VarTable& vartable() const { return *vt_; }
    const VarTablePtr& vt_ptr() const { return vt_; }
    int n() const { return vt_->n(); }
    int d() const { return vt_->d(); }
    const std::vector<Polynomial>& p() const { return p_; }
    const Polynomial& p(int l) const { return p_[l]; }

    /// Single block with m = 2.
    bool is_quadric() const;
    /// Reads the Hermitian matrices back from P; empty unless is_quadric().
    std::optional<QuadricData> quadric_data() const;

    /// Canonical one-line text of blocks and P, used for fingerprints.
    std::string canonical_form() const;

private:
    Model(VarTablePtr vt, std::vector<Polynomial> p) : vt_(std::move(vt)), p_(std::move(p)) {}

    VarTablePtr vt_;
    std::vector<Polynomial> p_;
};

struct NormalizationCheck {
    std::string name;
    std::string description;
    bool pass = true;
    std::vector<std::string> details;
};

/// One verdict per normalization condition:
///  (a) weighted homogeneity, (b) P(z, 0, u) = 0,
///  (c) no u^lambda * P_l inside a later component P_r,
///  (d) no u_k^.. u_{j-1}^.. * P_k inside a block-j component, k < j.
/// (c) and (d) are exact projections onto the named term shapes.
struct BloomGrahamReport {
    std::vector<NormalizationCheck> checks;
    bool all_pass() const;
};

BloomGrahamReport validate_bloom_graham(const Model& m);

/// Throws ModelError for non-Hermitian input or R-dependent matrices (with
/// an integer dependency certificate in the diagnostics).
Model quadric_from_matrices(const QuadricData& q);
/// True iff the joint kernel of the A_l is trivial.
bool quadric_nondegenerate(const QuadricData& q);

/// w_l -> u_l + i P_l, z -> z. Powers of the images are cached up to
/// max_power at construction; the object is read-only afterwards.
class WSubstitution {
public:
    WSubstitution(const Model& m, int max_power);

    Polynomial image(const Monomial& hol) const;
    Polynomial apply(const Polynomial& hol) const;

private:
    const Polynomial& power(int l, int e, Polynomial& scratch) const;

    VarTablePtr vt_;
    std::vector<Polynomial> images_;
    std::vector<std::vector<Polynomial>> powers_;
};

Polynomial substitute_w(const Polynomial& hol, const Model& m);

struct NondegeneracyVerdict {
    bool degenerate = false;
    /// Highest field weight searched, scaled by m_1.
    int bound_scaled = 0;
    std::optional<VectorField> witness;
    int witness_weight_scaled = 0;
};

/// Default search bound on the field weight, scaled: m_k + n.
int default_nondegeneracy_bound(const VarTable& vt);

/// Searches weight by weight for a nonzero holomorphic field X with
/// X(v_l - P_l) = 0 on the model, up to the given scaled weight.
NondegeneracyVerdict holomorphic_nondegeneracy(const Model& m, std::optional<int> bound_scaled = std::nullopt);

} // namespace craut

#endif // CRAUT_MODEL_HPP
