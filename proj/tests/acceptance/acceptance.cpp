// One line per acceptance criterion; exit status 1 if any fails.

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracle.hpp"

#include <craut/expr.hpp>
#include <craut/grading.hpp>
#include <craut/tangency.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace craut;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what)
{
    if (!ok) throw Failure(what);
}

VectorField parse_field(const Model& m, const std::vector<std::string>& f, const std::vector<std::string>& g)
{
    std::vector<Polynomial> fp, gp;
    for (const auto& s : f) fp.push_back(parse_poly(s, {m.vt_ptr(), Ring::Hol}));
    for (const auto& s : g) gp.push_back(parse_poly(s, {m.vt_ptr(), Ring::Hol}));
    return make_field(m.vt_ptr(), fp, gp);
}

bool all_zero(const std::vector<Polynomial>& r)
{
    for (const auto& p : r)
        if (!p.is_zero()) return false;
    return true;
}

const DerivativeFamily& family(const JetReport& r, const std::string& key)
{
    for (const auto& f : r.families)
        if (f.key == key) return f;
    throw Failure("jet report lacks family " + key);
}

void criterion_exa0()
{
    const Model m = fixtures::model("exa0");
    const VectorField x = fixtures::field("exa0_w1y_w2x", m);
    expect(all_zero(tangency_residual(x, m)), "w1*Y + w2*X has a nonzero residual");
    const FieldWeight w = field_weight(x);
    expect(w.kind == FieldWeight::Kind::Homogeneous && w.mu == 1, "weight is not 1");
    expect(!is_rigid(x), "field reported rigid");

    const VectorField y = parse_field(m, {"0", "-i*z4", "0", "0"}, {"0", "0", "0"});
    expect(lie_bracket(normal_field(m.vt_ptr(), 0), x) == y, "[d/dw1, w1*Y + w2*X] != Y");
    const GradedBasis g0r = compute_G_mu(m, 0, true);
    expect(in_span(g0r, y), "Y is not in G_0^R");
    const PreimageResult pre = integration_preimage(m, g0r, 1);
    expect(pre.nonzero, "D^-1(G_0^R) reported zero");
    expect(in_span(pre.preimage, x), "w1*Y + w2*X missing from D^-1(G_0^R)");
}

void criterion_universal()
{
    std::set<int> ds;
    std::set<std::vector<int>> patterns;
    const auto corpus = fixtures::corpus();
    for (const auto& [name, m] : corpus) {
        const VarTable& vt = m.vartable();
        ds.insert(vt.d());
        std::vector<int> pat;
        for (const auto& b : vt.blocks()) pat.push_back(b.m);
        patterns.insert(pat);
        expect(all_zero(tangency_residual(euler_field(m.vt_ptr()), m)), name + ": Euler field not tangent");
        for (int l = vt.block_start(vt.num_blocks() - 1); l < vt.d(); ++l)
            expect(all_zero(tangency_residual(normal_field(m.vt_ptr(), l), m)), name + ": W not tangent");
    }
    expect(corpus.size() >= 10, "corpus has fewer than 10 models");
    expect(ds.count(1) && ds.count(2) && ds.count(3), "corpus does not span d = 1..3");
    expect(patterns.count({2}) && patterns.count({2, 3}) && patterns.count({2, 4}), "corpus misses a Hoermander pattern");
}

void criterion_heisenberg()
{
    const Model h = fixtures::model("heisenberg");
    const std::vector<std::size_t> want = {1, 2, 2, 2, 1};
    std::size_t total = 0, oracle_total = 0;
    for (int s = -2; s <= 6; ++s) {
        const GradedBasis b = compute_G_mu_scaled(h, s, false);
        const oracle::Basis o = oracle::graded_component(h, s, false);
        const std::size_t expected = s <= 2 ? want[s + 2] : 0;
        expect(b.dim() == expected, "dim G_" + to_string(b.mu()) + " = " + std::to_string(b.dim()));
        expect(o.fields.size() == b.dim() && oracle::same_span(o.fields, b.fields), "oracle disagrees at " + to_string(b.mu()));
        total += b.dim();
        oracle_total += o.fields.size();
    }
    expect(total == 8 && oracle_total == 8, "total dimension is not 8");
}

void criterion_rigid_quadrics()
{
    std::mt19937_64 rng(1729);
    std::uniform_int_distribution<int> nd(1, 3), dd(1, 2);
    for (int k = 0; k < 20; ++k) {
        const int n = nd(rng);
        const int d = n == 1 ? 1 : dd(rng);
        const Model m = quadric_from_matrices(generators::random_quadric(rng, n, d));
        for (int s = 1; s <= 3; ++s)
            expect(compute_G_mu_scaled(m, s, true).dim() == 0,
                   "rigid component at " + to_string(Rational(s, 2)) + " of " + m.canonical_form());
    }
}

void check_d2_theorem(const Model& m)
{
    const std::string name = m.canonical_form();
    expect(!integration_preimage(m, compute_G_mu(m, Rational(-1, 2), true), 2).nonzero, name + ": D^-2(G_-1/2^R) != 0");
    const GradedBasis gm1 = compute_G_mu(m, -1, true);
    expect(!integration_preimage(m, gm1, 3).nonzero, name + ": D^-3(G_-1^R) != 0");
    const PreimageResult one = integration_preimage(m, gm1, 1);
    expect(one.nonzero, name + ": D^-1(G_-1^R) = 0");
    const VectorField e = euler_field(m.vt_ptr());
    expect(in_span(one.preimage, e), name + ": Euler field not in D^-1(G_-1^R)");
    bool witnessed = false;
    for (const auto& pat : patterns_of_order(m.vartable(), 1)) {
        VectorField img = e;
        for (std::size_t j = 0; j < pat.size(); ++j)
            if (pat[j]) img = d_operator(img, static_cast<int>(j), pat[j]);
        if (!img.is_zero()) {
            witnessed = true;
            expect(in_span(gm1, img), name + ": image of E outside G_-1^R");
        }
    }
    expect(witnessed, name + ": Euler field has zero image");
}

void criterion_d2()
{
    check_d2_theorem(fixtures::model("quadric_d2"));
    std::mt19937_64 rng(2718);
    std::uniform_int_distribution<int> nd(2, 3);
    for (int k = 0; k < 5; ++k) check_d2_theorem(quadric_from_matrices(generators::random_quadric(rng, nd(rng), 2)));
}

void criterion_chern_moser()
{
    for (const char* name : {"heisenberg", "sphere2"}) {
        const Model m = fixtures::model(name);
        const JetReport r = jet_report(m, mu0_search(m, default_mu_max_scaled(m.vartable())));
        expect(!family(r, "d2f_dwdz").needed, std::string(name) + ": mixed family flagged needed");
        expect(r.mixed_integration_nonzero == false, std::string(name) + ": D^-1(G_0^R) != 0");
    }
    const Model e = fixtures::model("exa0");
    const JetReport r = jet_report(e, mu0_search(e, default_mu_max_scaled(e.vartable())));
    expect(family(r, "d2f_dwdz").needed, "exa0: mixed family not flagged needed");
    expect(r.mixed_integration_nonzero == true, "exa0: D^-1(G_0^R) = 0");
}

void criterion_oracle()
{
    std::size_t compared = 0;
    for (const auto& [name, m] : fixtures::corpus()) {
        const VarTable& vt = m.vartable();
        for (int s = -vt.mk(); s <= 2 * vt.mk(); ++s)
            for (bool rigid : {false, true}) {
                if (enumerate_ansatz_scaled(m, s, rigid).unknowns() > 40) continue;
                const GradedBasis b = compute_G_mu_scaled(m, s, rigid);
                const oracle::Basis o = oracle::graded_component(m, s, rigid);
                const std::string where = name + " at " + to_string(b.mu()) + (rigid ? " (rigid)" : "");
                expect(o.unknowns == b.ansatz.unknowns(), where + ": unknown counts differ");
                expect(o.fields.size() == b.dim(), where + ": dimensions differ");
                expect(oracle::same_span(o.fields, b.fields), where + ": spans differ");
                ++compared;
            }
    }
    expect(compared > 50, "too few graded computations compared");
}

void criterion_round_trip()
{
    std::mt19937_64 rng(8);
    auto vt = std::make_shared<const VarTable>(3, std::vector<Block>{{2, 2}, {3, 1}});
    for (int k = 0; k < 1000; ++k) {
        const Ring ring = k % 2 ? Ring::Real : Ring::Hol;
        const Polynomial p = generators::random_polynomial(rng, vt, ring, 8);
        const std::string text = format_poly(p);
        expect(parse_poly(text, {vt, ring}) == p, "round trip failed for " + text);
    }
}

void criterion_degenerate()
{
    const Model m = fixtures::model("degenerate_diag10");
    const NondegeneracyVerdict v = holomorphic_nondegeneracy(m);
    expect(v.degenerate && v.witness, "diag(1,0) not reported degenerate");
    expect(*v.witness == parse_field(m, {"0", "1"}, {"0"}), "witness is " + format_field(*v.witness));
    const AutTable t = mu0_search(m, default_mu_max_scaled(m.vartable()));
    expect(t.verdict == AutTable::Verdict::Degenerate, "mu0_search verdict is not degenerate");
    expect(!t.mu0, "mu0_search returned a mu0");
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* title;
        double limit_s;
        std::function<void()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "exa0 field w1*Y + w2*X: tangent, weight 1, non-rigid, bracket and preimage", 1, criterion_exa0},
        {2, "Euler and last-block normal fields tangent on the whole corpus", 5, criterion_universal},
        {3, "Heisenberg grading (1,2,2,2,1), zero up to 3, total 8, oracle cross-check", 5, criterion_heisenberg},
        {4, "20 random nondegenerate quadrics: no rigid fields of weight 1/2, 1, 3/2", 60, criterion_rigid_quadrics},
        {5, "d=2 integration statements on the fixed and 5 random quadrics", 60, criterion_d2},
        {6, "mixed 2-jet family: not needed for d=1, needed for exa0", 10, criterion_chern_moser},
        {7, "structured solver equals brute force on all components with <= 40 unknowns", 120, criterion_oracle},
        {8, "parser/formatter round trip on 1000 random polynomials", 10, criterion_round_trip},
        {9, "diag(1,0) reported degenerate with witness d/dz2, no mu0", 5, criterion_degenerate},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string why;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run();
        } catch (const std::exception& e) {
            why = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (why.empty() && secs > c.limit_s) {
            std::ostringstream os;
            os << "took longer than " << c.limit_s << " s";
            why = os.str();
        }
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.3f s", secs);
        std::cout << (why.empty() ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << timing << ")";
        if (!why.empty()) std::cout << ": " << why;
        std::cout << "\n";
        if (!why.empty()) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
