#include <craut/vartable.hpp>

#include <stdexcept>

namespace craut {

const char* ring_name(Ring r) { return r == Ring::Hol ? "HOL" : "REAL"; }

VarTable::VarTable(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks))
{
    if (n_ < 1) throw std::invalid_argument("VarTable: need at least one z variable");
    if (blocks_.empty()) throw std::invalid_argument("VarTable: need at least one block");
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        const Block& blk = blocks_[b];
        if (blk.m < 2) throw std::invalid_argument("VarTable: Hoermander numbers must be >= 2");
        if (blk.l < 1) throw std::invalid_argument("VarTable: multiplicities must be >= 1");
        if (b > 0 && blk.m <= blocks_[b - 1].m)
            throw std::invalid_argument("VarTable: Hoermander numbers must be strictly increasing");
        block_start_.push_back(d_);
        for (int k = 0; k < blk.l; ++k) block_of_.push_back(static_cast<int>(b));
        d_ += blk.l;
    }
}

int VarTable::weight(Ring r, int var) const
{
    int nl = normal_index(r, var);
    return nl < 0 ? 1 : normal_weight(nl);
}

int VarTable::normal_index(Ring r, int var) const
{
    int first = r == Ring::Hol ? n_ : 2 * n_;
    return var >= first ? var - first : -1;
}

int VarTable::scaled(const Rational& q) const
{
    Rational s = q * m1();
    if (s.get_den() != 1)
        throw std::invalid_argument("weight " + to_string(q) + " is not a multiple of 1/" + std::to_string(m1()));
    return static_cast<int>(s.get_num().get_si());
}

std::string VarTable::var_name(Ring r, int var) const
{
    if (var < n_) return "z" + std::to_string(var + 1);
    if (r == Ring::Hol) return "w" + std::to_string(var - n_ + 1);
    if (var < 2 * n_) return "conj(z" + std::to_string(var - n_ + 1) + ")";
    return "u" + std::to_string(var - 2 * n_ + 1);
}

} // namespace craut
