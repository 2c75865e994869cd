#ifndef CRAUT_GRADING_HPP
#define CRAUT_GRADING_HPP

#include <craut/linalg.hpp>
#include <craut/model.hpp>
#include <craut/tangency.hpp>
#include <craut/vector_field.hpp>

#include <optional>
#include <string>
#include <vector>

namespace craut {

/// One complex coefficient of the ansatz: monomial `mono` in F_index (is_g
/// false) or G_index (is_g true). It carries two real unknowns, re then im.
struct Slot {
    bool is_g = false;
    int index = 0;
    Monomial mono;
};

/// All weighted homogeneous fields of one weight, as coefficient slots.
/// F slots have scaled degree mu + 1, G slots of block j degree mu + m_j;
/// F precedes G, then component index, then monomial order.
struct Ansatz {
    VarTablePtr vt;
    int mu_scaled = 0;
    bool rigid = false;
    std::vector<Slot> slots;

    Rational mu() const { return vt->external(mu_scaled); }
    std::size_t unknowns() const { return 2 * slots.size(); }
    /// Position of a slot, -1 if absent.
    long find(bool is_g, int index, const Monomial& mono) const;
};

Ansatz enumerate_ansatz(const Model& m, const Rational& mu, bool rigid);
Ansatz enumerate_ansatz_scaled(const Model& m, int mu_scaled, bool rigid);

/// Field built from real coordinates (re, im per slot).
VectorField field_from_coords(const Ansatz& a, const std::vector<Rational>& coords);
VectorField field_from_coords(const Ansatz& a, const linalg::DenseVector& coords);
/// Real coordinates of a field; empty if it has a term outside the ansatz.
std::optional<std::vector<Rational>> coords_from_field(const Ansatz& a, const VectorField& x);

/// Coefficient matching of the residuals: rows are (component l, REAL
/// monomial, re/im part), columns the ansatz unknowns. For the real residual
/// only one monomial of each conjugate pair is kept, the other row being
/// its conjugate.
struct LinearSystem {
    linalg::SparseMatrix matrix;
    std::size_t residual_monomials = 0;
};

LinearSystem build_tangency_system(const Model& m, const Ansatz& a, ResidualKind kind = ResidualKind::Real);

/// Exact nullspace basis, canonical (primitive, first entry positive).
std::vector<linalg::DenseVector> solve_kernel(const LinearSystem& sys);

/// Basis of G_mu (or its rigid part).
struct GradedBasis {
    Ansatz ansatz;
    std::vector<linalg::DenseVector> coords;
    std::vector<VectorField> fields;

    Rational mu() const { return ansatz.mu(); }
    int mu_scaled() const { return ansatz.mu_scaled; }
    bool rigid() const { return ansatz.rigid; }
    std::size_t dim() const { return fields.size(); }
};

/// Every returned field is re-checked against the tangency identity.
GradedBasis compute_G_mu(const Model& m, const Rational& mu, bool rigid);
GradedBasis compute_G_mu_scaled(const Model& m, int mu_scaled, bool rigid);

/// D^(k) applied to each source basis field, in target-ansatz coordinates.
struct AdMap {
    std::vector<int> pattern;   ///< k_j over first-block normal variables
    Ansatz target;
    std::vector<VectorField> images;
    std::vector<std::vector<Rational>> columns;  ///< one per source field
};

/// pattern has one entry per first-block normal variable. Patterns beyond
/// the degrees present give the zero map.
AdMap ad_map(const Model& m, const GradedBasis& source, const std::vector<int>& pattern);

/// All multi-indices of the given total order over first-block variables.
std::vector<std::vector<int>> patterns_of_order(const VarTable& vt, int order);

/// D^{-K}(G_mu^R): S_K = fields of G_{mu+K} whose order-(K+1) images vanish,
/// compared against S_{K-1}. Nonzero iff dim S_K > dim S_{K-1}.
struct PreimageResult {
    Rational target_mu;
    int order = 0;
    std::size_t source_dim = 0;              ///< dim G_{mu+K}
    std::vector<VectorField> preimage;       ///< canonical basis of S_K
    std::size_t trivial_dim = 0;             ///< dim S_{K-1}
    bool nonzero = false;
    std::optional<VectorField> witness;      ///< in S_K, not in S_{K-1}
    std::vector<VectorField> witness_images; ///< nonzero order-K images of the witness
    bool images_in_target = true;            ///< every order-K image of S_K lies in the target span
};

/// Refuses (std::domain_error) unless the model has a single Hoermander number.
PreimageResult integration_preimage(const Model& m, const GradedBasis& target, int order);

/// True iff x lies in the real span of the basis fields.
bool in_span(const GradedBasis& basis, const VectorField& x);
bool in_span(const std::vector<VectorField>& basis, const VectorField& x);

struct AutEntry {
    GradedBasis full;
    std::optional<GradedBasis> rigid;
};

struct AutTable {
    enum class Verdict { Conclusive, Inconclusive, Degenerate };

    int mu_min_scaled = 0;
    int mu_max_scaled = 0;
    std::vector<AutEntry> entries;  ///< ascending weight, one per multiple of 1/m_1
    Verdict verdict = Verdict::Inconclusive;
    std::optional<int> highest_nonzero_scaled;
    std::optional<Rational> mu0;
    NondegeneracyVerdict nondegeneracy;

    const AutEntry* find(int mu_scaled) const;
    std::size_t total_dim() const;
};

const char* verdict_name(AutTable::Verdict v);

/// Graded dimensions and bases on [mu_min, mu_max], weights evaluated in parallel.
AutTable compute_aut_table(const Model& m, int mu_min_scaled, int mu_max_scaled, bool with_rigid);

/// Default upper weight 2 m_k / m_1, in scaled units.
int default_mu_max_scaled(const VarTable& vt);

/// Table from -m_k/m_1 to mu_max plus the mu0 verdict: degenerate when a
/// complex-tangent witness exists; conclusive when at least m_k/m_1
/// consecutive zero components follow the last nonzero one, giving
/// mu0 = 1 + m_k/m_1 + (highest nonzero weight).
AutTable mu0_search(const Model& m, int mu_max_scaled, std::optional<int> nondegeneracy_bound = std::nullopt);

/// A family of second-order jets and the ansatz slots it reads.
struct DerivativeFamily {
    std::string key;
    std::string label;
    bool is_g = false;
    int z_degree = 0;
    int w_degree = 0;
    int weight_scaled = 0;
    bool needed = false;
    std::optional<int> witness_weight_scaled;
};

struct JetReport {
    AutTable::Verdict verdict = AutTable::Verdict::Inconclusive;
    std::optional<Rational> mu0;
    int n1_bound = 0;                  ///< N_1 <= m_k - 1
    bool rigid_vanishing_verified = true;
    bool quadric = false;
    std::vector<DerivativeFamily> families;
    bool two_jets_determine = false;   ///< no nonzero field of weight >= 0 with all family jets zero
    std::optional<bool> mixed_integration_nonzero;  ///< D^{-1}(G_0^R) != 0
    std::string note;
};

/// Throws std::domain_error unless the table is conclusive.
JetReport jet_report(const Model& m, const AutTable& table);

} // namespace craut

#endif // CRAUT_GRADING_HPP
