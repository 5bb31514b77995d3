#include "nbihom/io.hpp"

#include <fstream>
#include <sstream>

#include "nbihom/error.hpp"

namespace nbihom {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

Scalar scalar_from_json(const Field& field, const Json& j) {
  if (j.is_string()) return field.parse(j.get<std::string>());
  if (j.is_number_integer()) return field.from_int(j.get<std::int64_t>());
  parse_fail("scalars must be strings \"p/q\" or integers");
}

std::size_t count_from_json(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) parse_fail(std::string("missing or invalid \"") + key + "\"");
  return j[key].get<std::size_t>();
}

}  // namespace

Json field_to_json(const Field& field) {
  if (field.is_rational()) return "Q";
  return Json{{"Fp", field.modulus()}};
}

Field field_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
  if (j.is_object() && j.size() == 1 && j.contains("Fp") && j["Fp"].is_number_unsigned()) {
    const auto p = j["Fp"].get<std::uint64_t>();
    if (p > 0xffffffffULL) throw Error(ErrorCode::InvalidParams, "modulus too large");
    return Field::prime(static_cast<std::uint32_t>(p));
  }
  parse_fail("field must be \"Q\" or {\"Fp\": p}");
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

Vector vector_from_json(const Field& field, const Json& j, std::size_t length) {
  if (!j.is_array()) parse_fail("expected an array of scalars");
  if (j.size() != length) throw Error(ErrorCode::DimensionMismatch, "vector has the wrong length");
  Vector out;
  for (const auto& x : j) out.push_back(scalar_from_json(field, x));
  return out;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
  return out;
}

Matrix matrix_from_json(const Field& field, const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array()) parse_fail("expected a matrix as an array of rows");
  if (j.size() != rows) throw Error(ErrorCode::DimensionMismatch, "matrix has the wrong number of rows");
  Matrix out(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) out.set_row(i, vector_from_json(field, j[i], cols));
  return out;
}

Json algebra_to_json(const Algebra& a) {
  Json bracket = Json::array();
  for (std::size_t flat = 0; flat < a.tuple_count(); ++flat) {
    const Vector& v = a.structure_at(flat);
    if (is_zero(v)) continue;
    bracket.push_back(Json{{"args", a.tuple_at(flat)}, {"value", vector_to_json(v)}});
  }
  return Json{{"arity", a.arity()},
              {"dim", a.dim()},
              {"field", field_to_json(a.field())},
              {"bracket", std::move(bracket)},
              {"alpha", matrix_to_json(a.alpha())},
              {"beta", matrix_to_json(a.beta())}};
}

Algebra algebra_from_json(const Json& j) {
  if (!j.is_object()) parse_fail("an algebra document must be a JSON object");
  const std::size_t n = count_from_json(j, "arity");
  const std::size_t d = count_from_json(j, "dim");
  if (!j.contains("field")) parse_fail("missing \"field\"");
  const Field f = field_from_json(j["field"]);
  for (const char* key : {"alpha", "beta", "bracket"})
    if (!j.contains(key)) parse_fail(std::string("missing \"") + key + "\"");
  Algebra a(f, n, d, matrix_from_json(f, j["alpha"], d, d), matrix_from_json(f, j["beta"], d, d));
  if (!j["bracket"].is_array()) parse_fail("\"bracket\" must be an array");
  for (const auto& entry : j["bracket"]) {
    if (!entry.is_object() || !entry.contains("args") || !entry.contains("value") || !entry["args"].is_array())
      parse_fail("bracket entries need \"args\" and \"value\"");
    IndexTuple t;
    for (const auto& i : entry["args"]) {
      if (!i.is_number_unsigned()) parse_fail("bracket args must be non-negative integers");
      t.push_back(i.get<std::size_t>());
    }
    if (t.size() != n) throw Error(ErrorCode::DimensionMismatch, "bracket args length differs from the arity");
    a.set_structure(t, vector_from_json(f, entry["value"], d));
  }
  return a;
}

Algebra parse_algebra(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    parse_fail(std::string("malformed JSON: ") + e.what());
  }
  return algebra_from_json(j);
}

Algebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str());
}

Json t_extension_to_json(const TExtension& t) {
  Json out = algebra_to_json(t.extended);
  const std::size_t d = t.base.dim();
  out["grading"] = Json{{"t_block", {0, d}},
                        {"tn_block", {d, 2 * d}},
                        {"u_basis", matrix_to_json(t.complement_u.basis())},
                        {"u_twist_stable", t.u_twist_stable}};
  return out;
}

Json subspace_to_json(const Subspace& s) {
  return Json{{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", matrix_to_json(s.basis())}};
}

Json space_to_json(const EndoSubspace& e) {
  Json basis = Json::array();
  for (const auto& m : e.basis_matrices()) basis.push_back(matrix_to_json(m));
  return Json{{"kind", to_string(e.kind)}, {"s", e.sr.s}, {"r", e.sr.r}, {"dim", e.dim()}, {"basis", std::move(basis)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace nbihom
