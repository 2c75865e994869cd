#ifndef CRAUT_TEST_FIXTURES_HPP
#define CRAUT_TEST_FIXTURES_HPP

#include <craut/model.hpp>
#include <craut/vector_field.hpp>

#include <string>
#include <utility>
#include <vector>

namespace fixtures {

std::string path(const std::string& relative);

craut::Model model(const std::string& name);
craut::VectorField field(const std::string& name, const craut::Model& m);

/// Every valid model document in the corpus, by name.
const std::vector<std::string>& corpus_names();
std::vector<std::pair<std::string, craut::Model>> corpus();

} // namespace fixtures

#endif
