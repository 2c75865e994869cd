// craut: graded infinitesimal automorphisms of model CR submanifolds.
//
// Exit codes: 0 success, 1 domain failure, 2 input error, 3 inconclusive.

#include "documents.hpp"

#include <craut/expr.hpp>
#include <craut/grading.hpp>
#include <craut/tangency.hpp>

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <sstream>

using namespace craut;
using ojson = nlohmann::ordered_json;

namespace {

enum Exit { Ok = 0, DomainFailure = 1, InputFailure = 2, Inconclusive = 3 };

struct Options {
    std::string model_path;
    std::string field_path;
    std::string mu_min, mu_max, mu;
    bool rigid = false;
    std::string format = "text";
};

int scaled_weight(const VarTable& vt, const std::string& text, const char* flag)
{
    try {
        return vt.scaled(parse_rational(text));
    } catch (const std::invalid_argument& e) {
        throw doc::InputError(std::string(flag) + ": " + e.what());
    }
}

ojson header(const std::string& name, const Options& o, const Model* m)
{
    ojson cmd;
    cmd["name"] = name;
    cmd["model"] = o.model_path;
    if (!o.field_path.empty()) cmd["field"] = o.field_path;
    if (!o.mu_min.empty()) cmd["mu_min"] = o.mu_min;
    if (!o.mu_max.empty()) cmd["mu_max"] = o.mu_max;
    if (!o.mu.empty()) cmd["mu"] = o.mu;
    if (name == "aut") cmd["rigid"] = o.rigid;
    ojson out;
    out["command"] = cmd;
    if (m) {
        out["model"] = {{"fingerprint", doc::fingerprint(*m)}, {"canonical", m->canonical_form()}};
    }
    return out;
}

ojson field_json(const VectorField& x)
{
    ojson f = ojson::array(), g = ojson::array();
    for (const auto& p : x.f) f.push_back(format_poly(p));
    for (const auto& p : x.g) g.push_back(format_poly(p));
    return {{"f", f}, {"g", g}};
}

std::string field_text(const ojson& j)
{
    std::string out;
    auto part = [&](const char* key, const char* var) {
        for (std::size_t i = 0; i < j[key].size(); ++i) {
            const std::string c = j[key][i].get<std::string>();
            if (c == "0") continue;
            if (!out.empty()) out += " + ";
            out += "(" + c + ")*d/d" + var + std::to_string(i + 1);
        }
    };
    part("f", "z");
    part("g", "w");
    return out.empty() ? "0" : out;
}

ojson nondegeneracy_json(const NondegeneracyVerdict& v, const VarTable& vt)
{
    ojson j;
    j["degenerate"] = v.degenerate;
    j["bound"] = doc::rational_text(vt.external(v.bound_scaled));
    if (v.witness) {
        j["witness"] = field_json(*v.witness);
        j["witness_weight"] = doc::rational_text(vt.external(v.witness_weight_scaled));
    }
    return j;
}

void emit(const ojson& out, const Options& o, const std::function<void(std::ostream&)>& text)
{
    if (o.format == "json") {
        std::cout << out.dump(2) << "\n";
    } else {
        std::ostringstream os;
        os << "model " << out["model"]["fingerprint"].get<std::string>() << " " << out["model"]["canonical"].get<std::string>()
           << "\n";
        text(os);
        std::cout << os.str();
    }
}

void print_diagnostics(std::ostream& os, const ojson& diag)
{
    for (const auto& d : diag) os << "  " << d.get<std::string>() << "\n";
}

// ---------------------------------------------------------------------------

int cmd_validate(const Options& o)
{
    std::optional<Model> m;
    try {
        m = doc::load_model(o.model_path);
    } catch (const ModelError& e) {
        ojson out = header("validate", o, nullptr);
        out["results"] = {{"valid", false}};
        out["diagnostics"] = e.diagnostics();
        if (o.format == "json") {
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "invalid model\n";
            print_diagnostics(std::cout, out["diagnostics"]);
        }
        return DomainFailure;
    }
    auto rep = validate_bloom_graham(*m);
    ojson out = header("validate", o, &*m);
    ojson checks = ojson::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name}, {"description", c.description}, {"pass", c.pass}, {"details", c.details}});
    out["results"] = {{"valid", rep.all_pass()}, {"checks", checks}};
    out["diagnostics"] = ojson::array();
    emit(out, o, [&](std::ostream& os) {
        for (const auto& c : out["results"]["checks"]) {
            os << "(" << c["name"].get<std::string>() << ") " << (c["pass"].get<bool>() ? "PASS" : "FAIL") << "  "
               << c["description"].get<std::string>() << "\n";
            print_diagnostics(os, c["details"]);
        }
        os << (rep.all_pass() ? "valid" : "normalization failed") << "\n";
    });
    return rep.all_pass() ? Ok : DomainFailure;
}

int cmd_aut(const Options& o)
{
    const Model m = doc::load_model(o.model_path);
    const VarTable& vt = m.vartable();
    int lo = -vt.mk(), hi = default_mu_max_scaled(vt);
    if (!o.mu.empty()) {
        if (!o.mu_min.empty() || !o.mu_max.empty()) throw doc::InputError("--mu excludes --mu-min and --mu-max");
        lo = hi = scaled_weight(vt, o.mu, "--mu");
    }
    if (!o.mu_min.empty()) lo = scaled_weight(vt, o.mu_min, "--mu-min");
    if (!o.mu_max.empty()) hi = scaled_weight(vt, o.mu_max, "--mu-max");
    if (lo < -vt.mk())
        throw doc::InputError("weights below -m_k/m_1 = " + doc::rational_text(vt.external(-vt.mk())) + " are empty");
    if (hi < lo) throw doc::InputError("--mu-max is below --mu-min");

    const AutTable t = compute_aut_table(m, lo, hi, true);
    const NondegeneracyVerdict nd = holomorphic_nondegeneracy(m);

    ojson out = header("aut", o, &m);
    ojson dims = ojson::array(), bases = ojson::array();
    for (const auto& e : t.entries) {
        dims.push_back({{"mu", doc::rational_text(e.full.mu())}, {"dim", e.full.dim()}, {"dim_rigid", e.rigid->dim()}});
        const GradedBasis& b = o.rigid ? *e.rigid : e.full;
        ojson fields = ojson::array();
        for (const auto& x : b.fields) fields.push_back(field_json(x));
        bases.push_back({{"mu", doc::rational_text(b.mu())}, {"rigid", o.rigid}, {"fields", fields}});
    }
    std::size_t total_rigid = 0;
    for (const auto& e : t.entries) total_rigid += e.rigid->dim();
    out["results"] = {{"dims", dims},
                      {"total_dim", t.total_dim()},
                      {"total_dim_rigid", total_rigid},
                      {"bases", bases},
                      {"nondegeneracy", nondegeneracy_json(nd, vt)}};
    out["diagnostics"] = ojson::array();
    if (nd.degenerate)
        out["diagnostics"].push_back("warning: model is holomorphically degenerate; graded components grow without bound");

    emit(out, o, [&](std::ostream& os) {
        const ojson& r = out["results"];
        os << "mu\tdim\tdim_rigid\n";
        for (const auto& d : r["dims"])
            os << d["mu"].get<std::string>() << "\t" << d["dim"] << "\t" << d["dim_rigid"] << "\n";
        os << "total\t" << r["total_dim"] << "\t" << r["total_dim_rigid"] << "\n";
        for (const auto& b : r["bases"]) {
            os << (o.rigid ? "rigid basis" : "basis") << " mu=" << b["mu"].get<std::string>() << "\n";
            for (const auto& f : b["fields"]) os << "  " << field_text(f) << "\n";
        }
        const ojson& nj = r["nondegeneracy"];
        if (nj["degenerate"].get<bool>()) {
            os << "degenerate: witness " << field_text(nj["witness"]) << " of weight " << nj["witness_weight"].get<std::string>()
               << "\n";
        } else {
            os << "holomorphically nondegenerate up to weight " << nj["bound"].get<std::string>() << "\n";
        }
        print_diagnostics(os, out["diagnostics"]);
    });
    return Ok;
}

int cmd_check_field(const Options& o)
{
    const Model m = doc::load_model(o.model_path);
    const VectorField x = doc::load_field(o.field_path, m);
    const VarTable& vt = m.vartable();

    ojson out = header("check-field", o, &m);
    ojson r;
    r["field"] = field_json(x);
    const FieldWeight w = field_weight(x);
    switch (w.kind) {
    case FieldWeight::Kind::Zero: r["weight"] = "zero field"; break;
    case FieldWeight::Kind::Homogeneous: r["weight"] = doc::rational_text(w.mu); break;
    case FieldWeight::Kind::Inhomogeneous: {
        r["weight"] = "inhomogeneous";
        ojson parts = ojson::array();
        for (const auto& [s, part] : decompose(x))
            parts.push_back({{"mu", doc::rational_text(vt.external(s))}, {"field", field_json(part)}});
        r["components"] = parts;
        break;
    }
    }
    r["rigid"] = is_rigid(x);
    const auto res = tangency_residual(x, m);
    bool tangent = true;
    ojson residuals = ojson::array();
    for (std::size_t l = 0; l < res.size(); ++l) {
        if (res[l].is_zero()) continue;
        tangent = false;
        residuals.push_back({{"component", l + 1}, {"residual", format_poly(res[l])}});
    }
    r["in_aut"] = tangent;
    r["residuals"] = residuals;
    out["results"] = r;
    out["diagnostics"] = ojson::array();

    emit(out, o, [&](std::ostream& os) {
        os << "field " << field_text(r["field"]) << "\n";
        os << "weight " << r["weight"].get<std::string>() << "\n";
        if (r.contains("components"))
            for (const auto& c : r["components"])
                os << "  mu=" << c["mu"].get<std::string>() << ": " << field_text(c["field"]) << "\n";
        os << "rigid " << (r["rigid"].get<bool>() ? "yes" : "no") << "\n";
        os << (tangent ? "in aut" : "rejected") << "\n";
        for (const auto& q : r["residuals"]) os << "  residual " << q["component"] << ": " << q["residual"].get<std::string>() << "\n";
    });
    return tangent ? Ok : DomainFailure;
}

int cmd_jet(const Options& o)
{
    const Model m = doc::load_model(o.model_path);
    const VarTable& vt = m.vartable();
    const int hi = o.mu_max.empty() ? default_mu_max_scaled(vt) : scaled_weight(vt, o.mu_max, "--mu-max");
    if (hi < -vt.mk()) throw doc::InputError("--mu-max is below -m_k/m_1");

    const AutTable t = mu0_search(m, hi);
    ojson out = header("jet", o, &m);
    ojson r;
    r["verdict"] = verdict_name(t.verdict);
    ojson dims = ojson::array();
    for (const auto& e : t.entries)
        dims.push_back({{"mu", doc::rational_text(e.full.mu())}, {"dim", e.full.dim()}, {"dim_rigid", e.rigid->dim()}});
    r["dims"] = dims;
    if (t.highest_nonzero_scaled) r["highest_nonzero_mu"] = doc::rational_text(vt.external(*t.highest_nonzero_scaled));
    r["nondegeneracy"] = nondegeneracy_json(t.nondegeneracy, vt);
    out["diagnostics"] = ojson::array();

    int code = Ok;
    if (t.verdict == AutTable::Verdict::Conclusive) {
        const JetReport rep = jet_report(m, t);
        r["mu0"] = doc::rational_text(*rep.mu0);
        r["n1_bound"] = "N1 <= m_k - 1 = " + std::to_string(rep.n1_bound);
        r["rigid_vanishing_verified"] = rep.rigid_vanishing_verified;
        r["quadric"] = rep.quadric;
        if (rep.quadric) {
            ojson fams = ojson::array();
            for (const auto& f : rep.families) {
                ojson fj = {{"key", f.key}, {"label", f.label}, {"weight", doc::rational_text(vt.external(f.weight_scaled))},
                            {"needed", f.needed}};
                fams.push_back(fj);
            }
            r["families"] = fams;
            r["two_jets_determine"] = rep.two_jets_determine;
            if (rep.mixed_integration_nonzero) r["mixed_integration_nonzero"] = *rep.mixed_integration_nonzero;
            r["needed_rule"] = "a family is needed when dropping its jets leaves a nonzero field of some weight >= 0 "
                               "whose remaining listed jets all vanish";
        }
        r["note"] = rep.note;
    } else if (t.verdict == AutTable::Verdict::Degenerate) {
        out["diagnostics"].push_back("holomorphically degenerate model: no finite jet bound");
        code = DomainFailure;
    } else {
        out["diagnostics"].push_back("inconclusive below mu_max = " + doc::rational_text(vt.external(hi)) +
                                     ": fewer than m_k/m_1 zero components after the last nonzero one");
        code = Inconclusive;
    }
    out["results"] = r;

    emit(out, o, [&](std::ostream& os) {
        os << "mu\tdim\tdim_rigid\n";
        for (const auto& d : r["dims"]) os << d["mu"].get<std::string>() << "\t" << d["dim"] << "\t" << d["dim_rigid"] << "\n";
        os << "verdict " << r["verdict"].get<std::string>() << "\n";
        if (r["nondegeneracy"]["degenerate"].get<bool>())
            os << "degenerate: witness " << field_text(r["nondegeneracy"]["witness"]) << "\n";
        if (r.contains("mu0")) {
            os << "mu0 " << r["mu0"].get<std::string>() << "\n";
            os << r["n1_bound"].get<std::string>() << "\n";
            os << "rigid components vanish from weight (m_k-1)/m_1: " << (r["rigid_vanishing_verified"].get<bool>() ? "yes" : "no")
               << "\n";
        }
        if (r.contains("families")) {
            for (const auto& f : r["families"])
                os << "  " << f["label"].get<std::string>() << " (weight " << f["weight"].get<std::string>() << "): "
                   << (f["needed"].get<bool>() ? "needed" : "not needed") << "\n";
            os << "2-jets determine: " << (r["two_jets_determine"].get<bool>() ? "yes" : "no") << "\n";
            if (r.contains("mixed_integration_nonzero"))
                os << "D^-1(G_0^R) " << (r["mixed_integration_nonzero"].get<bool>() ? "!= 0" : "= 0") << "\n";
            os << "rule: " << r["needed_rule"].get<std::string>() << "\n";
        }
        if (r.contains("note")) os << "note: " << r["note"].get<std::string>() << "\n";
        print_diagnostics(os, out["diagnostics"]);
    });
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Graded infinitesimal automorphisms of model CR submanifolds"};
    app.require_subcommand(1);
    Options o;
    auto format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto* validate = app.add_subcommand("validate", "Check the normalization conditions of a model");
    validate->add_option("model", o.model_path, "Model document")->required();
    format(validate);

    auto* aut = app.add_subcommand("aut", "Graded components of the automorphism algebra");
    aut->add_option("model", o.model_path, "Model document")->required();
    aut->add_option("--mu-min", o.mu_min, "Lowest weight (p/q)");
    aut->add_option("--mu-max", o.mu_max, "Highest weight (p/q)");
    aut->add_option("--mu", o.mu, "Single weight (p/q)");
    aut->add_flag("--rigid", o.rigid, "List rigid bases instead of full ones");
    format(aut);

    auto* check = app.add_subcommand("check-field", "Test a vector field against the tangency identity");
    check->add_option("model", o.model_path, "Model document")->required();
    check->add_option("field", o.field_path, "Field document")->required();
    format(check);

    auto* jet = app.add_subcommand("jet", "mu0 search and jet report");
    jet->add_option("model", o.model_path, "Model document")->required();
    jet->add_option("--mu-max", o.mu_max, "Highest weight searched (p/q)");
    format(jet);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? Ok : InputFailure;
    }

    try {
        if (*validate) return cmd_validate(o);
        if (*aut) return cmd_aut(o);
        if (*check) return cmd_check_field(o);
        if (*jet) return cmd_jet(o);
    } catch (const doc::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return InputFailure;
    } catch (const ModelError& e) {
        std::cerr << "invalid model:\n";
        for (const auto& d : e.diagnostics()) std::cerr << "  " << d << "\n";
        return DomainFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return InputFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return DomainFailure;
    }
    return InputFailure;
}
