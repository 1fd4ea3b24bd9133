#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "dgrep/complex.hpp"
#include "dgrep/dgcat.hpp"
#include "dgrep/modules.hpp"
#include "dgrep/preadditive.hpp"
#include "dgrep/report.hpp"
#include "dgrep/representation.hpp"

namespace dgrep {

using Json = nlohmann::json;

/// Malformed input: bad JSON syntax or a document of the wrong shape.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json load_json(const std::string& path);
/// Pretty-printed with a trailing newline.
std::string dump_json(const Json& j);

/// Reads {"ring": "Z" | "Q" | "Z/n", "n": ...}; `override` wins when set.
Ring ring_from_json(const Json& j, const std::optional<Ring>& override = std::nullopt);
Json ring_to_json(const Ring& ring);

Scalar scalar_from_json(const Json& j, const Ring& ring);
Json scalar_to_json(const Scalar& s);

/// Sparse {label: coefficient} over a complex's basis.
Vector vector_from_json(const Json& j, const Complex& basis, const Ring& ring);
Json vector_to_json(const Vector& v, const Complex& basis);

/// Sparse [[row label, column label, value], ...].
Matrix matrix_from_json(const Json& j, const Complex& rows, const Complex& cols, const Ring& ring);
Json matrix_to_json(const Matrix& m, const Complex& rows, const Complex& cols);

Complex complex_from_json(const Json& j, const Ring& ring);
Json complex_to_json(const Complex& c);

DgCategoryPtr category_from_json(const Json& j, const Ring& ring);
Json category_to_json(const DgCategory& a);

RepresentationPtr representation_from_json(const Json& j, const Ring& ring);
Json representation_to_json(const DgRepresentation& r);

RModule r_module_from_json(const Json& j, RepresentationPtr rep);
Json r_module_to_json(const RModule& m);

DgModule dg_module_from_json(const Json& j, DgCategoryPtr base);
Json dg_module_to_json(const DgModule& m);

std::vector<Element> elements_from_json(const Json& j, const DgCategory& a);
TopologyCandidate topology_from_json(const Json& j, const DgCategory& a);
Json subfunctor_to_json(const DgCategory& a, const Subfunctor& s);

Json report_to_json(const Report& r);

}  // namespace dgrep
