#include "hradon/json_io.hpp"

namespace hradon {

json rational_to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  return Rational::parse(j.get<std::string>());
}

json matrix_to_json(const ExactMatrix& m) {
  json entries = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Quaternion& q = m.at(r, c);
      switch (m.field()) {
        case Field::Real:
          entries.push_back(rational_to_json(q.w()));
          break;
        case Field::Complex:
          entries.push_back(json::array(
              {rational_to_json(q.w()), rational_to_json(q.x())}));
          break;
        case Field::Quaternion:
          entries.push_back(json::array(
              {rational_to_json(q.w()), rational_to_json(q.x()),
               rational_to_json(q.y()), rational_to_json(q.z())}));
          break;
      }
    }
  }
  return json{{"field", field_name(m.field())},
              {"rows", m.rows()},
              {"cols", m.cols()},
              {"entries", entries}};
}

ExactMatrix matrix_from_json(const json& j) {
  std::string f = j.at("field").get<std::string>();
  Field field;
  if (f == "R")
    field = Field::Real;
  else if (f == "C")
    field = Field::Complex;
  else if (f == "H")
    field = Field::Quaternion;
  else
    throw std::invalid_argument("unknown field tag: " + f);

  std::size_t rows = j.at("rows").get<std::size_t>();
  std::size_t cols = j.at("cols").get<std::size_t>();
  const json& entries = j.at("entries");
  if (entries.size() != rows * cols)
    throw std::invalid_argument("entry count does not match shape");

  ExactMatrix m(field, rows, cols);
  std::size_t idx = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c, ++idx) {
      const json& e = entries[idx];
      Quaternion q;
      switch (field) {
        case Field::Real:
          q = Quaternion(rational_from_json(e));
          break;
        case Field::Complex:
          q = Quaternion(rational_from_json(e.at(0)), rational_from_json(e.at(1)));
          break;
        case Field::Quaternion:
          q = Quaternion(rational_from_json(e.at(0)), rational_from_json(e.at(1)),
                         rational_from_json(e.at(2)), rational_from_json(e.at(3)));
          break;
      }
      m.set(r, c, q);
    }
  }
  return m;
}

}  // namespace hradon
