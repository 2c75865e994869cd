#ifndef CRAUT_VARTABLE_HPP
#define CRAUT_VARTABLE_HPP

#include <craut/scalar.hpp>

#include <string>
#include <vector>

namespace craut {

/// HOL: z_1..z_n, w_1..w_d.  REAL: z_1..z_n, conj(z_1)..conj(z_n), u_1..u_d.
enum class Ring { Hol, Real };

const char* ring_name(Ring r);

/// One Hoermander number m with its multiplicity l.
struct Block {
    int m = 2;
    int l = 1;
    friend bool operator==(const Block&, const Block&) = default;
};

/// Variable layout and integer weights of both rings. Weights are scaled by
/// m_1: z has weight 1, every normal variable of block j has weight m_j, so
/// the weight used in the literature is scaled / m_1.
class VarTable {
public:
    VarTable(int n, std::vector<Block> blocks);

    int n() const { return n_; }
    int d() const { return d_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    int num_blocks() const { return static_cast<int>(blocks_.size()); }
    int m1() const { return blocks_.front().m; }
    int mk() const { return blocks_.back().m; }

    /// Block index (0-based) of flattened normal index l.
    int block_of(int l) const { return block_of_[l]; }
    /// First flattened normal index of block b.
    int block_start(int b) const { return block_start_[b]; }
    /// Scaled weight of normal variable l (the m of its block).
    int normal_weight(int l) const { return blocks_[block_of_[l]].m; }

    int num_vars(Ring r) const { return r == Ring::Hol ? n_ + d_ : 2 * n_ + d_; }
    int weight(Ring r, int var) const;

    int z(int j) const { return j; }
    int zbar(int j) const { return n_ + j; }
    int u(int l) const { return 2 * n_ + l; }
    int w(int l) const { return n_ + l; }

    bool is_z(int var) const { return var < n_; }
    bool is_zbar(Ring r, int var) const { return r == Ring::Real && var >= n_ && var < 2 * n_; }
    /// Flattened normal index of a w (HOL) or u (REAL) variable, -1 otherwise.
    int normal_index(Ring r, int var) const;

    /// Converts a scaled weight to the external rational weight.
    Rational external(int scaled) const
    {
        Rational q(scaled, m1());
        q.canonicalize();
        return q;
    }
    /// Inverse of external(); throws std::invalid_argument if q*m_1 is not integral.
    int scaled(const Rational& q) const;

    std::string var_name(Ring r, int var) const;

    friend bool operator==(const VarTable& a, const VarTable& b) { return a.n_ == b.n_ && a.blocks_ == b.blocks_; }

private:
    int n_;
    int d_ = 0;
    std::vector<Block> blocks_;
    std::vector<int> block_of_;
    std::vector<int> block_start_;
};

} // namespace craut

#endif // CRAUT_VARTABLE_HPP
