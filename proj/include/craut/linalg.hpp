#ifndef CRAUT_LINALG_HPP
#define CRAUT_LINALG_HPP

#include <craut/scalar.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace craut::linalg {

/// Sorted (column, value) pairs, no zeros.
using SparseRow = std::vector<std::pair<std::uint32_t, Integer>>;
using DenseVector = std::vector<Integer>;

/// Exact integer matrix stored by sparse rows. Rational rows are cleared of
/// denominators on insertion; every stored row is primitive, which leaves
/// the nullspace unchanged.
class SparseMatrix {
public:
    explicit SparseMatrix(std::size_t cols = 0) : cols_(cols) {}

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const std::vector<SparseRow>& data() const { return rows_; }

    /// Entries may come in any order; duplicates are summed.
    void add_row(std::vector<std::pair<std::uint32_t, Rational>> entries);
    void add_row(SparseRow row);

    static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& dense);
    std::vector<std::vector<Integer>> to_dense() const;

private:
    std::size_t cols_;
    std::vector<SparseRow> rows_;
};

/// Reduced row echelon form: pivots ascending, each row primitive with a
/// positive pivot entry. Unique for a given row space.
struct Rref {
    std::size_t cols = 0;
    std::vector<std::uint32_t> pivots;
    std::vector<SparseRow> rows;

    std::size_t rank() const { return rows.size(); }
};

/// Nullspace basis in canonical form: one vector per non-pivot column in
/// ascending order, primitive integers, first nonzero entry positive.
std::vector<DenseVector> kernel_from_rref(const Rref& r);

/// Parallel path: splits the column/row incidence graph into connected
/// components and runs sparse fraction-free Gauss-Jordan on each component
/// in an OpenMP loop.
Rref rref(const SparseMatrix& a);
std::vector<DenseVector> nullspace(const SparseMatrix& a);
std::size_t rank(const SparseMatrix& a);

/// Serial reference: dense Bareiss elimination over the whole matrix.
Rref rref_reference(const SparseMatrix& a);
std::vector<DenseVector> nullspace_reference(const SparseMatrix& a);

/// Canonical basis of the row span of the given vectors (the rows of their RREF).
std::vector<DenseVector> canonical_span(const std::vector<DenseVector>& vectors, std::size_t dim);

/// Makes v primitive with its first nonzero entry positive.
void normalize(DenseVector& v);
bool is_zero(const DenseVector& v);

} // namespace craut::linalg

#endif // CRAUT_LINALG_HPP
