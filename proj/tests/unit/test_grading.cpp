#include "fixtures.hpp"
#include "generators.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

#include <craut/grading.hpp>

#include <doctest.h>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace craut;
using helpers::field;

TEST_CASE("ansatz sizes")
{
    auto h = helpers::heisenberg();
    auto a = enumerate_ansatz(h, -1, false);
    REQUIRE(a.slots.size() == 1);
    CHECK(a.slots[0].is_g);
    CHECK(a.slots[0].mono.is_constant());
    CHECK(a.unknowns() == 2);

    auto b = enumerate_ansatz(h, Rational(-1, 2), false);
    CHECK(b.unknowns() == 4);
    CHECK(b.find(false, 0, Monomial::one(h.vartable(), Ring::Hol)) == 0);
    CHECK(b.find(true, 0, helpers::hol(h.vt_ptr(), "z1").terms()[0].first) == 1);

    auto q = fixtures::model("quadric_d2");
    auto r = enumerate_ansatz(q, 1, true);
    for (const auto& s : r.slots) {
        CHECK(bidegree(s.mono, q.vartable()).second == 0);
        CHECK(s.mono.degree() == (s.is_g ? 4 : 3));
    }
    CHECK(r.slots.size() == 2 * 4 + 2 * 5);

    CHECK_THROWS_AS(enumerate_ansatz(h, Rational(-3, 2), false), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_ansatz(h, Rational(1, 3), false), std::invalid_argument);
}

TEST_CASE("coordinates round trip")
{
    auto e = helpers::exa0();
    auto a = enumerate_ansatz(e, 1, false);
    auto x = helpers::exa0_field(e);
    auto c = coords_from_field(a, x);
    REQUIRE(c);
    CHECK(field_from_coords(a, *c) == x);
    CHECK_FALSE(coords_from_field(a, euler_field(e.vt_ptr())));
}

TEST_CASE("Heisenberg graded dimensions")
{
    auto h = helpers::heisenberg();
    const std::vector<std::size_t> want = {1, 2, 2, 2, 1, 0, 0, 0, 0};
    std::size_t total = 0;
    for (int s = -2; s <= 6; ++s) {
        auto b = compute_G_mu_scaled(h, s, false);
        CHECK(b.dim() == want[s + 2]);
        total += b.dim();
        for (const auto& x : b.fields) CHECK(is_in_aut(x, h));
    }
    CHECK(total == 8);

    auto top = compute_G_mu(h, 1, false);
    REQUIRE(top.dim() == 1);
    CHECK(in_span(top, field(h, {"z1*w1"}, {"w1^2"})));
}

TEST_CASE("lowest component holds the last-block normal fields")
{
    for (const auto& [name, m] : fixtures::corpus()) {
        CAPTURE(name);
        const VarTable& vt = m.vartable();
        auto b = compute_G_mu_scaled(m, -vt.mk(), false);
        CHECK(b.dim() >= static_cast<std::size_t>(vt.blocks().back().l));
        for (int l = vt.block_start(vt.num_blocks() - 1); l < vt.d(); ++l) CHECK(in_span(b, normal_field(m.vt_ptr(), l)));
    }
}

TEST_CASE("rigid positive weights vanish on nondegenerate quadrics")
{
    for (const char* name : {"heisenberg", "sphere2", "lorentz2", "exa0", "quadric_d2", "quadric_d3", "quadric_hermitian_d2"}) {
        auto m = fixtures::model(name);
        for (int s = 1; s <= 3; ++s) CHECK(compute_G_mu_scaled(m, s, true).dim() == 0);
    }
}

TEST_CASE("exa0 weight one")
{
    auto e = helpers::exa0();
    auto g1 = compute_G_mu(e, 1, false);
    auto r1 = compute_G_mu(e, 1, true);
    CHECK(g1.dim() > r1.dim());
    CHECK(in_span(g1, helpers::exa0_field(e)));
    CHECK_FALSE(in_span(r1, helpers::exa0_field(e)));

    auto map = ad_map(e, g1, {1, 0, 0});
    CHECK(map.images.size() == g1.dim());
    CHECK(in_span(map.images, field(e, {"0", "-i*z4", "0", "0"}, {"0", "0", "0"})));
}

TEST_CASE("ad maps")
{
    auto e = helpers::exa0();
    auto rigid = compute_G_mu(e, 0, true);
    for (const auto& pat : patterns_of_order(e.vartable(), 1)) {
        auto map = ad_map(e, rigid, pat);
        for (const auto& x : map.images) CHECK(x.is_zero());
    }
    CHECK(patterns_of_order(e.vartable(), 2).size() == 6);

    auto g0 = compute_G_mu(e, 0, false);
    CHECK(in_span(g0, euler_field(e.vt_ptr())));
    for (int j = 0; j < 3; ++j) {
        std::vector<int> pat(3, 0);
        pat[j] = 1;
        CHECK(in_span(ad_map(e, g0, pat).images, normal_field(e.vt_ptr(), j)));
    }
    CHECK_THROWS_AS(ad_map(e, g0, {1, 0}), std::invalid_argument);
}

TEST_CASE("integration preimages")
{
    auto e = helpers::exa0();
    auto r = integration_preimage(e, compute_G_mu(e, 0, true), 1);
    CHECK(r.nonzero);
    CHECK(r.images_in_target);
    REQUIRE(r.witness);
    CHECK_FALSE(is_rigid(*r.witness));
    CHECK(in_span(r.preimage, helpers::exa0_field(e)));

    auto q = fixtures::model("quadric_d2");
    CHECK_FALSE(integration_preimage(q, compute_G_mu(q, Rational(-1, 2), true), 2).nonzero);
    CHECK_FALSE(integration_preimage(q, compute_G_mu(q, -1, true), 3).nonzero);
    auto one = integration_preimage(q, compute_G_mu(q, -1, true), 1);
    CHECK(one.nonzero);
    REQUIRE(one.witness);
    CHECK(in_span(one.preimage, euler_field(q.vt_ptr())));

    auto h = helpers::heisenberg();
    CHECK_FALSE(integration_preimage(h, compute_G_mu(h, 0, true), 1).nonzero);

    auto chain = fixtures::model("cubic_23");
    CHECK_THROWS_AS(integration_preimage(chain, compute_G_mu(chain, 0, true), 1), std::domain_error);
}

TEST_CASE("mu0 search")
{
    auto h = helpers::heisenberg();
    auto t = mu0_search(h, default_mu_max_scaled(h.vartable()));
    CHECK(t.verdict == AutTable::Verdict::Conclusive);
    REQUIRE(t.highest_nonzero_scaled);
    CHECK(*t.highest_nonzero_scaled == 2);
    CHECK(*t.mu0 == 3);
    CHECK(t.total_dim() == 8);

    auto short_table = mu0_search(h, 3);
    CHECK(short_table.verdict == AutTable::Verdict::Inconclusive);
    CHECK_FALSE(short_table.mu0);
    CHECK_THROWS_AS(jet_report(h, short_table), std::domain_error);

    auto d = fixtures::model("degenerate_diag10");
    auto dt = mu0_search(d, 4);
    CHECK(dt.verdict == AutTable::Verdict::Degenerate);
    CHECK_FALSE(dt.mu0);
    REQUIRE(dt.nondegeneracy.witness);
    CHECK(*dt.nondegeneracy.witness == field(d, {"0", "1"}, {"0"}));

    auto e = helpers::exa0();
    auto et = mu0_search(e, 4);
    CHECK(et.verdict == AutTable::Verdict::Conclusive);
    CHECK(et.find(2)->full.dim() > et.find(2)->rigid->dim());
}

TEST_CASE("jet reports")
{
    auto family = [](const JetReport& r, const std::string& key) {
        for (const auto& f : r.families)
            if (f.key == key) return f;
        FAIL("no family " << key);
        return DerivativeFamily{};
    };
    for (const char* name : {"heisenberg", "sphere2", "quadric_d2"}) {
        CAPTURE(name);
        auto m = fixtures::model(name);
        auto r = jet_report(m, mu0_search(m, default_mu_max_scaled(m.vartable())));
        CHECK_FALSE(family(r, "d2f_dwdz").needed);
        CHECK_FALSE(family(r, "d2f_dz2").needed);
        CHECK(r.two_jets_determine);
        CHECK(r.mixed_integration_nonzero == false);
        CHECK(r.n1_bound == 1);
    }
    auto e = helpers::exa0();
    auto r = jet_report(e, mu0_search(e, 4));
    CHECK(family(r, "d2f_dwdz").needed);
    CHECK_FALSE(family(r, "d2f_dz2").needed);
    CHECK(r.mixed_integration_nonzero == true);

    auto chain = fixtures::model("chain_234");
    auto cr = jet_report(chain, mu0_search(chain, default_mu_max_scaled(chain.vartable())));
    CHECK_FALSE(cr.quadric);
    CHECK(cr.families.empty());
    CHECK(cr.n1_bound == 3);
    CHECK(cr.rigid_vanishing_verified);
}

TEST_CASE("structured solver agrees with the brute-force oracle")
{
    for (const auto& [name, m] : fixtures::corpus()) {
        CAPTURE(name);
        for (int s = -m.vartable().mk(); s <= 2 * m.vartable().mk(); ++s)
            for (bool rigid : {false, true}) {
                auto ours = compute_G_mu_scaled(m, s, rigid);
                if (ours.ansatz.unknowns() > 40) continue;
                auto theirs = oracle::graded_component(m, s, rigid);
                CAPTURE(s);
                CHECK(theirs.unknowns == ours.ansatz.unknowns());
                CHECK(theirs.fields.size() == ours.dim());
                CHECK(oracle::same_span(theirs.fields, ours.fields));
            }
    }
}

TEST_CASE("random quadrics have no rigid positive weights")
{
    std::mt19937_64 rng(11);
    for (int k = 0; k < 6; ++k) {
        const int n = 1 + k % 3;
        auto m = quadric_from_matrices(generators::random_quadric(rng, n, n == 1 ? 1 : 1 + k % 2));
        for (int s = 1; s <= 3; ++s) CHECK(compute_G_mu_scaled(m, s, true).dim() == 0);
    }
}

TEST_CASE("results do not depend on the thread count")
{
#ifdef _OPENMP
    auto e = helpers::exa0();
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    auto one = compute_aut_table(e, -2, 3, true);
    omp_set_num_threads(4);
    auto four = compute_aut_table(e, -2, 3, true);
    omp_set_num_threads(saved);
    REQUIRE(one.entries.size() == four.entries.size());
    for (std::size_t i = 0; i < one.entries.size(); ++i) {
        CHECK(one.entries[i].full.coords == four.entries[i].full.coords);
        CHECK(one.entries[i].rigid->coords == four.entries[i].rigid->coords);
    }
#endif
}
