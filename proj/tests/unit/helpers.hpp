#ifndef CRAUT_TEST_HELPERS_HPP
#define CRAUT_TEST_HELPERS_HPP

#include <craut/expr.hpp>
#include <craut/model.hpp>
#include <craut/vector_field.hpp>

#include <memory>
#include <string>
#include <vector>

namespace helpers {

using namespace craut;

inline VarTablePtr table(int n, std::vector<Block> blocks) { return std::make_shared<const VarTable>(n, std::move(blocks)); }

inline Polynomial real(const VarTablePtr& vt, std::string_view s) { return parse_poly(s, {vt, Ring::Real}); }
inline Polynomial hol(const VarTablePtr& vt, std::string_view s) { return parse_poly(s, {vt, Ring::Hol}); }

inline Model model(int n, std::vector<Block> blocks, const std::vector<std::string>& ps)
{
    auto vt = table(n, std::move(blocks));
    std::vector<Polynomial> p;
    for (const auto& s : ps) p.push_back(real(vt, s));
    return Model::create(vt, std::move(p));
}

inline VectorField field(const Model& m, const std::vector<std::string>& f, const std::vector<std::string>& g)
{
    std::vector<Polynomial> fp, gp;
    for (const auto& s : f) fp.push_back(hol(m.vt_ptr(), s));
    for (const auto& s : g) gp.push_back(hol(m.vt_ptr(), s));
    return make_field(m.vt_ptr(), std::move(fp), std::move(gp));
}

inline Model heisenberg() { return model(1, {{2, 1}}, {"z1*conj(z1)"}); }

inline Model exa0()
{
    return model(4, {{2, 3}}, {"z3*conj(z3)", "z4*conj(z4)", "z1*conj(z3)+z3*conj(z1)+z2*conj(z4)+z4*conj(z2)"});
}

/// w1*Y + w2*X with X = i z3 d/dz1, Y = -i z4 d/dz2.
inline VectorField exa0_field(const Model& m) { return field(m, {"i*w2*z3", "-i*w1*z4", "0", "0"}, {"0", "0", "0"}); }

} // namespace helpers

#endif
