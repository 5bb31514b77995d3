#pragma once

#include <string>

#include "json.hpp"
#include "nbihom/algebra.hpp"
#include "nbihom/constructions.hpp"
#include "nbihom/spaces.hpp"

namespace nbihom {

using Json = nlohmann::json;

[[nodiscard]] Json field_to_json(const Field& field);
[[nodiscard]] Field field_from_json(const Json& j);

/// Rows of scalar strings.
[[nodiscard]] Json matrix_to_json(const Matrix& m);
[[nodiscard]] Matrix matrix_from_json(const Field& field, const Json& j, std::size_t rows, std::size_t cols);
[[nodiscard]] Json vector_to_json(const Vector& v);
[[nodiscard]] Vector vector_from_json(const Field& field, const Json& j, std::size_t length);

/// { arity, dim, field, bracket: [{args, value}], alpha, beta } with the
/// bracket listed in lexicographic tuple order and zero values omitted.
[[nodiscard]] Json algebra_to_json(const Algebra& a);
/// Throws ParseError for malformed documents and DimensionMismatch for
/// inconsistent shapes.
[[nodiscard]] Algebra algebra_from_json(const Json& j);
[[nodiscard]] Algebra parse_algebra(const std::string& text);
[[nodiscard]] Algebra load_algebra(const std::string& path);

/// The extended algebra plus a "grading" object.
[[nodiscard]] Json t_extension_to_json(const TExtension& t);

[[nodiscard]] Json subspace_to_json(const Subspace& s);
/// { kind, s, r, dim, basis: [d×d matrices] }
[[nodiscard]] Json space_to_json(const EndoSubspace& e);

/// Two-space indented text with a trailing newline.
[[nodiscard]] std::string dump(const Json& j);

}  // namespace nbihom
