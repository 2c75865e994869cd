#include "helpers.hpp"

#include <doctest.h>

using namespace craut;
using helpers::field;
using helpers::hol;

TEST_CASE("field weights")
{
    auto m = helpers::model(1, {{2, 1}, {3, 1}}, {"z1*conj(z1)", "z1^2*conj(z1)+z1*conj(z1)^2"});
    const VarTablePtr& vt = m.vt_ptr();

    auto w2 = field_weight(normal_field(vt, 1));
    CHECK(w2.kind == FieldWeight::Kind::Homogeneous);
    CHECK(w2.mu == Rational(-3, 2));
    CHECK(field_weight(normal_field(vt, 0)).mu == -1);
    CHECK(field_weight(euler_field(vt)).mu == 0);
    CHECK(field_weight(VectorField::zero(vt)).kind == FieldWeight::Kind::Zero);

    auto e = helpers::exa0();
    CHECK(field_weight(field(e, {"w2*z3", "0", "0", "0"}, {"0", "0", "0"})).mu == 1);
    CHECK(field_weight(helpers::exa0_field(e)).mu == 1);

    auto mixed = field(e, {"1 + z1^2", "0", "0", "0"}, {"0", "0", "0"});
    CHECK(field_weight(mixed).kind == FieldWeight::Kind::Inhomogeneous);
    auto parts = decompose(mixed);
    REQUIRE(parts.size() == 2);
    CHECK(parts.count(-1) == 1);
    CHECK(parts.count(1) == 1);
}

TEST_CASE("Euler field coefficients")
{
    auto m = helpers::model(1, {{2, 1}, {4, 1}}, {"z1*conj(z1)", "z1^2*conj(z1)^2"});
    auto e = euler_field(m.vt_ptr());
    CHECK(e.f[0] == hol(m.vt_ptr(), "1/2*z1"));
    CHECK(e.g[0] == hol(m.vt_ptr(), "w1"));
    CHECK(e.g[1] == hol(m.vt_ptr(), "2*w2"));
}

TEST_CASE("lie bracket")
{
    auto m = helpers::exa0();
    const VarTablePtr& vt = m.vt_ptr();
    auto x = helpers::exa0_field(m);
    auto y = field(m, {"0", "-i*z4", "0", "0"}, {"0", "0", "0"});
    CHECK(lie_bracket(normal_field(vt, 0), x) == y);
    CHECK(lie_bracket(x, x).is_zero());
    CHECK(lie_bracket(x, y) == Scalar(-1) * lie_bracket(y, x));

    auto chain = helpers::model(1, {{2, 1}, {3, 1}}, {"z1*conj(z1)", "z1^2*conj(z1)+z1*conj(z1)^2"});
    auto e = euler_field(chain.vt_ptr());
    for (int l = 0; l < 2; ++l) {
        auto w = normal_field(chain.vt_ptr(), l);
        Rational c = -Rational(chain.vartable().normal_weight(l), 2);
        CHECK(lie_bracket(e, w) == w * Scalar(c));
    }

    // Jacobi identity on a few fields
    auto a = field(m, {"z1*w1", "0", "i*z2", "0"}, {"w1^2", "0", "z3"});
    auto b = field(m, {"0", "w2", "0", "z4^2"}, {"0", "i*z1", "0"});
    auto c = euler_field(vt);
    auto jac = lie_bracket(a, lie_bracket(b, c)) + lie_bracket(b, lie_bracket(c, a)) + lie_bracket(c, lie_bracket(a, b));
    CHECK(jac.is_zero());
}

TEST_CASE("rigidity")
{
    auto m = helpers::exa0();
    CHECK(is_rigid(normal_field(m.vt_ptr(), 2)));
    CHECK_FALSE(is_rigid(euler_field(m.vt_ptr())));
    CHECK(is_rigid(VectorField::zero(m.vt_ptr())));
    CHECK_FALSE(is_rigid(helpers::exa0_field(m)));
}

TEST_CASE("D operator")
{
    auto m = helpers::exa0();
    const VarTablePtr& vt = m.vt_ptr();
    auto y = field(m, {"0", "-i*z4", "0", "0"}, {"0", "0", "0"});
    auto x = field(m, {"i*z3", "0", "0", "0"}, {"0", "0", "0"});
    CHECK(d_operator(helpers::exa0_field(m), 0, 1) == y);
    CHECK(d_operator(helpers::exa0_field(m), 1, 1) == x);
    CHECK(d_operator(y, 0, 1).is_zero());
    CHECK(d_operator(euler_field(vt), 0, 1) == normal_field(vt, 0));
    CHECK(d_operator(field(m, {"w1^3", "0", "0", "0"}, {"0", "0", "0"}), 0, 2) == field(m, {"6*w1", "0", "0", "0"}, {"0", "0", "0"}));
    CHECK(d_operator_within_hypotheses(*vt));

    auto chain = helpers::model(1, {{2, 1}, {3, 1}}, {"z1*conj(z1)", "z1^2*conj(z1)+z1*conj(z1)^2"});
    CHECK_FALSE(d_operator_within_hypotheses(chain.vartable()));
    CHECK_THROWS_AS(d_operator(euler_field(chain.vt_ptr()), 1, 1), std::out_of_range);
}

TEST_CASE("field formatting")
{
    auto m = helpers::heisenberg();
    CHECK(format_field(VectorField::zero(m.vt_ptr())) == "0");
    CHECK(format_field(field(m, {"z1*w1"}, {"w1^2"})) == "(z1*w1)*d/dz1 + (w1^2)*d/dw1");
}
