#include "fixtures.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

#include <craut/tangency.hpp>

#include <doctest.h>

using namespace craut;
using helpers::field;
using helpers::real;

TEST_CASE("exa0 field is tangent")
{
    auto e = helpers::exa0();
    auto x = helpers::exa0_field(e);
    for (const auto& r : tangency_residual(x, e)) CHECK(r.is_zero());
    CHECK(is_in_aut(x, e));
}

TEST_CASE("d/dz1 on the Heisenberg model")
{
    auto h = helpers::heisenberg();
    auto r = tangency_residual(field(h, {"1"}, {"0"}), h);
    REQUIRE(r.size() == 1);
    CHECK(r[0] == real(h.vt_ptr(), "z1+conj(z1)"));
    CHECK(format_poly(r[0]) == "z1+conj(z1)");
}

TEST_CASE("Euler and last-block normal fields on the corpus")
{
    for (const auto& [name, m] : fixtures::corpus()) {
        CAPTURE(name);
        CHECK(is_in_aut(euler_field(m.vt_ptr()), m));
        const VarTable& vt = m.vartable();
        const int last = vt.num_blocks() - 1;
        for (int l = vt.block_start(last); l < vt.d(); ++l) CHECK(is_in_aut(normal_field(m.vt_ptr(), l), m));
    }
}

TEST_CASE("normal fields of lower blocks can fail when P depends on u")
{
    auto m = fixtures::model("quartic_24");
    CHECK_FALSE(is_in_aut(normal_field(m.vt_ptr(), 0), m));
    CHECK(is_in_aut(normal_field(m.vt_ptr(), 1), m));
}

TEST_CASE("rotations of quadrics")
{
    for (const char* name : {"heisenberg", "sphere2", "exa0", "quadric_d2", "quadric_d3"}) {
        auto m = fixtures::model(name);
        std::vector<std::string> f, g(m.d(), "0");
        for (int j = 1; j <= m.n(); ++j) f.push_back("i*z" + std::to_string(j));
        CHECK(is_in_aut(field(m, f, g), m));
    }
    auto h = helpers::heisenberg();
    CHECK_FALSE(is_in_aut(field(h, {"i*z1"}, {"-w1"}), h));
    CHECK_FALSE(is_in_aut(field(h, {"i*z1"}, {"w1"}), h));
}

TEST_CASE("residual matches the naive oracle")
{
    for (const auto& [name, m] : fixtures::corpus()) {
        CAPTURE(name);
        std::vector<VectorField> fields = {euler_field(m.vt_ptr())};
        std::vector<std::string> f, g;
        for (int j = 1; j <= m.n(); ++j) f.push_back(j == 1 ? "z1*w1 + i" : "(1-i)*z" + std::to_string(j) + "^2");
        for (int l = 1; l <= m.d(); ++l) g.push_back("w" + std::to_string(l) + "^2 + 3*z1");
        fields.push_back(field(m, f, g));
        for (const auto& x : fields) {
            auto ours = tangency_residual(x, m);
            auto theirs = oracle::residual(m, x);
            REQUIRE(ours.size() == theirs.size());
            for (std::size_t l = 0; l < ours.size(); ++l) CHECK(ours[l] == -theirs[l]);
        }
    }
}

TEST_CASE("complex residual separates tangent fields")
{
    auto h = helpers::heisenberg();
    auto rot = field(h, {"i*z1"}, {"0"});
    CHECK(is_in_aut(rot, h));
    CHECK_FALSE(complex_tangency_residual(rot, h)[0].is_zero());
}

TEST_CASE("fields from another model are rejected")
{
    auto h = helpers::heisenberg();
    auto s = fixtures::model("sphere2");
    CHECK_THROWS_AS(tangency_residual(euler_field(s.vt_ptr()), h), std::invalid_argument);
}
