#include "hradon/quaternion.hpp"

namespace hradon {

std::string Quaternion::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  auto append = [&out](const Rational& c, const char* unit) {
    if (c.is_zero()) return;
    if (!out.empty() && c.sign() > 0) out += "+";
    if (*unit == '\0') {
      out += c.to_string();
      return;
    }
    if (c == Rational(1)) {
      out += unit;
    } else if (c == Rational(-1)) {
      out += "-";
      out += unit;
    } else {
      out += c.to_string();
      out += unit;
    }
  };
  append(w_, "");
  append(x_, "i");
  append(y_, "j");
  append(z_, "k");
  return out;
}

}  // namespace hradon
