#include "hradon/rational.hpp"

#include <cstdlib>

namespace hradon {

int Rational::ord2() const {
  if (num_ == 0) throw std::domain_error("ord2 of zero");
  int v = 0;
  std::int64_t n = num_ < 0 ? -num_ : num_;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  std::int64_t d = den_;
  while (d % 2 == 0) {
    d /= 2;
    --v;
  }
  return v;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  auto to_i64 = [](const std::string& t) {
    size_t pos = 0;
    long long v = std::stoll(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("bad rational literal: " + t);
    return static_cast<std::int64_t>(v);
  };
  if (slash == std::string::npos) return Rational(to_i64(s));
  return Rational(to_i64(s.substr(0, slash)), to_i64(s.substr(slash + 1)));
}

}  // namespace hradon
