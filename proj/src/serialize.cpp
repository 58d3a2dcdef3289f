#include "daghilb/serialize.hpp"

#include <stdexcept>

namespace daghilb {

using nlohmann::json;

json scalar_to_json(const Scalar& s) {
  json out = json::array();
  out.push_back(s.w);
  if (field_arity(s.field) >= 2) out.push_back(s.x);
  if (field_arity(s.field) == 4) {
    out.push_back(s.y);
    out.push_back(s.z);
  }
  return out;
}

Scalar scalar_from_json(const json& j, FieldTag f) {
  if (!j.is_array())
    throw std::invalid_argument("scalar must be a JSON array of components");
  if (static_cast<int>(j.size()) != field_arity(f))
    throw std::invalid_argument("scalar has " + std::to_string(j.size()) +
                                " components; field " + field_name(f) + " needs " +
                                std::to_string(field_arity(f)));
  double comp[4] = {0, 0, 0, 0};
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number())
      throw std::invalid_argument("scalar components must be numbers");
    comp[i] = j[i].get<double>();
  }
  return Scalar(f, comp[0], comp[1], comp[2], comp[3]);
}

json morphism_to_json(const Morphism& m) {
  json data = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
    data.push_back(row);
  }
  return json{{"field", field_name(m.field())},
              {"rows", m.rows()},
              {"cols", m.cols()},
              {"data", data}};
}

Morphism morphism_from_json(const json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("rows") ||
      !j.contains("cols") || !j.contains("data"))
    throw std::invalid_argument("matrix needs field, rows, cols, data");
  const FieldTag f = field_from_name(j.at("field").get<std::string>());
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  const json& data = j.at("data");
  if (!data.is_array() || static_cast<int>(data.size()) != rows)
    throw std::invalid_argument("data must have exactly 'rows' rows");
  Morphism m(f, rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = data[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw std::invalid_argument("row " + std::to_string(i) +
                                  " must have exactly 'cols' entries");
    for (int c = 0; c < cols; ++c)
      m.at(i, c) = scalar_from_json(row[static_cast<std::size_t>(c)], f);
  }
  return m;
}

json subobject_to_json(const Subobject& s) {
  json basis = json::array();
  for (int c = 0; c < s.iso().cols(); ++c) {
    const Morphism col = s.iso().column(c);
    json vec = json::array();
    for (int i = 0; i < col.rows(); ++i) vec.push_back(scalar_to_json(col(i, 0)));
    basis.push_back(vec);
  }
  return json{{"ambient", s.ambient().dim},
              {"field", field_name(s.ambient().field)},
              {"basis", basis}};
}

Subobject subobject_from_json(const json& j, const ToleranceProfile& tol) {
  if (!j.is_object() || !j.contains("ambient") || !j.contains("field") ||
      !j.contains("basis"))
    throw std::invalid_argument("subspace needs ambient, field, basis");
  const FieldTag f = field_from_name(j.at("field").get<std::string>());
  const int n = j.at("ambient").get<int>();
  if (n < 0) throw std::invalid_argument("ambient dimension must be nonnegative");
  const json& basis = j.at("basis");
  if (!basis.is_array()) throw std::invalid_argument("basis must be an array");
  Morphism span(f, n, static_cast<int>(basis.size()));
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const json& vec = basis[c];
    if (!vec.is_array() || static_cast<int>(vec.size()) != n)
      throw std::invalid_argument("basis vector " + std::to_string(c) +
                                  " must have exactly 'ambient' entries");
    for (int i = 0; i < n; ++i)
      span.at(i, static_cast<int>(c)) =
          scalar_from_json(vec[static_cast<std::size_t>(i)], f);
  }
  return Subobject::from_span(span, tol);
}

json check_to_json(const CheckResult& c) {
  json out{{"check", c.check},
           {"statement_ref", c.statement_ref},
           {"trials", c.trials},
           {"passed", c.passed()},
           {"worst_residual", c.worst_residual}};
  json fails = json::array();
  for (const CheckFailure& f : c.failures)
    fails.push_back(json{{"seed", f.seed}, {"detail", f.detail}});
  out["failures"] = fails;
  if (!c.notes.empty()) out["notes"] = c.notes;
  return out;
}

json report_to_json(const Report& r) {
  json out = json::array();
  for (const CheckResult& c : r.checks) out.push_back(check_to_json(c));
  return out;
}

}  // namespace daghilb
