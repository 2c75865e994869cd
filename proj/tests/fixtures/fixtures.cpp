#include "fixtures.hpp"

#include "documents.hpp"

namespace fixtures {

std::string path(const std::string& relative) { return std::string(CRAUT_FIXTURE_DIR) + "/" + relative; }

craut::Model model(const std::string& name) { return craut::doc::load_model(path(name + ".json")); }

craut::VectorField field(const std::string& name, const craut::Model& m)
{
    return craut::doc::load_field(path("fields/" + name + ".json"), m);
}

const std::vector<std::string>& corpus_names()
{
    static const std::vector<std::string> names = {
        "heisenberg", "sphere2",    "lorentz2",  "exa0",       "quadric_d2", "quadric_d2_matrices", "quadric_d3",
        "quadric_hermitian_d2", "cubic_23", "cubic_223", "quartic_24", "chain_234", "degenerate_diag10",
    };
    return names;
}

std::vector<std::pair<std::string, craut::Model>> corpus()
{
    std::vector<std::pair<std::string, craut::Model>> out;
    for (const auto& n : corpus_names()) out.emplace_back(n, model(n));
    return out;
}

} // namespace fixtures
