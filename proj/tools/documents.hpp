#ifndef CRAUT_DOCUMENTS_HPP
#define CRAUT_DOCUMENTS_HPP

#include <craut/model.hpp>
#include <craut/vector_field.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace craut::doc {

using nlohmann::json;

/// Unreadable file, malformed JSON, schema violation or unparsable polynomial.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json read_json(const std::string& path);

/// ModelDocument: {"n", "blocks": [{"m", "l"}], "P": [...]} or, for
/// quadrics, "matrices" (d Hermitian n x n matrices of scalar strings)
/// instead of "P". Normalization failures surface as ModelError.
Model model_from_json(const json& j);
Model load_model(const std::string& path);

/// FieldDocument: {"f": [n HOL strings], "g": [d HOL strings]}.
VectorField field_from_json(const json& j, const Model& m);
VectorField load_field(const std::string& path, const Model& m);

json field_to_json(const VectorField& x);

/// Always "p/q".
std::string rational_text(const Rational& q);

/// FNV-1a 64 of the canonical form, as 16 hex digits.
std::string fingerprint(const Model& m);

} // namespace craut::doc

#endif
