#include "documents.hpp"

#include <craut/expr.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace craut::doc {

namespace {

const json& member(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int integer(const json& j, const char* what)
{
    if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::vector<std::string> strings(const json& j, const char* what, std::size_t count)
{
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
    if (j.size() != count)
        throw InputError(std::string(what) + " must have " + std::to_string(count) + " entries, got " + std::to_string(j.size()));
    std::vector<std::string> out;
    for (const auto& s : j) {
        if (!s.is_string()) throw InputError(std::string(what) + " entries must be strings");
        out.push_back(s.get<std::string>());
    }
    return out;
}

Polynomial parse_at(const std::string& src, const ExprContext& ctx, const std::string& where)
{
    try {
        return parse_poly(src, ctx);
    } catch (const ParseError& e) {
        throw InputError(where + ": " + e.what() + " in \"" + src + "\"");
    }
}

} // namespace

json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return json::parse(ss.str());
    } catch (const json::parse_error& e) {
        throw InputError(path + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

Model model_from_json(const json& j)
{
    if (!j.is_object()) throw InputError("model document must be a JSON object");
    const int n = integer(member(j, "n"), "n");
    const json& bl = member(j, "blocks");
    if (!bl.is_array() || bl.empty()) throw InputError("blocks must be a non-empty array");
    std::vector<Block> blocks;
    for (const auto& b : bl) blocks.push_back({integer(member(b, "m"), "m"), integer(member(b, "l"), "l")});

    const bool has_p = j.contains("P"), has_mat = j.contains("matrices");
    if (has_p == has_mat) throw InputError("exactly one of \"P\" and \"matrices\" must be present");

    VarTablePtr vt;
    try {
        vt = std::make_shared<const VarTable>(n, blocks);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }

    if (has_mat) {
        if (vt->num_blocks() != 1 || vt->m1() != 2) throw InputError("matrices input needs the single block m = 2");
        const json& mats = j.at("matrices");
        if (!mats.is_array() || static_cast<int>(mats.size()) != vt->d())
            throw InputError("matrices must hold " + std::to_string(vt->d()) + " matrices");
        QuadricData q;
        q.n = n;
        for (std::size_t l = 0; l < mats.size(); ++l) {
            const std::string what = "matrices[" + std::to_string(l) + "]";
            if (!mats[l].is_array() || static_cast<int>(mats[l].size()) != n) throw InputError(what + " must have n rows");
            std::vector<std::vector<Scalar>> a;
            for (const auto& row : mats[l]) {
                std::vector<Scalar> r;
                for (const auto& s : strings(row, what.c_str(), n)) {
                    try {
                        r.push_back(parse_scalar(s));
                    } catch (const ParseError& e) {
                        throw InputError(what + ": " + e.what() + " in \"" + s + "\"");
                    } catch (const std::invalid_argument& e) {
                        throw InputError(what + ": " + e.what());
                    }
                }
                a.push_back(std::move(r));
            }
            q.matrices.push_back(std::move(a));
        }
        return quadric_from_matrices(q);
    }

    const auto ps = strings(j.at("P"), "P", vt->d());
    std::vector<Polynomial> p;
    for (std::size_t l = 0; l < ps.size(); ++l)
        p.push_back(parse_at(ps[l], {vt, Ring::Real}, "P[" + std::to_string(l) + "]"));
    return Model::create(vt, std::move(p));
}

Model load_model(const std::string& path) { return model_from_json(read_json(path)); }

VectorField field_from_json(const json& j, const Model& m)
{
    if (!j.is_object()) throw InputError("field document must be a JSON object");
    const auto fs = strings(member(j, "f"), "f", m.n());
    const auto gs = strings(member(j, "g"), "g", m.d());
    std::vector<Polynomial> f, g;
    for (std::size_t i = 0; i < fs.size(); ++i) f.push_back(parse_at(fs[i], {m.vt_ptr(), Ring::Hol}, "f[" + std::to_string(i) + "]"));
    for (std::size_t i = 0; i < gs.size(); ++i) g.push_back(parse_at(gs[i], {m.vt_ptr(), Ring::Hol}, "g[" + std::to_string(i) + "]"));
    return make_field(m.vt_ptr(), std::move(f), std::move(g));
}

VectorField load_field(const std::string& path, const Model& m) { return field_from_json(read_json(path), m); }

json field_to_json(const VectorField& x)
{
    json f = json::array(), g = json::array();
    for (const auto& p : x.f) f.push_back(format_poly(p));
    for (const auto& p : x.g) g.push_back(format_poly(p));
    return {{"f", f}, {"g", g}};
}

std::string rational_text(const Rational& value)
{
    Rational q = value;
    q.canonicalize();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string fingerprint(const Model& m)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : m.canonical_form()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace craut::doc
