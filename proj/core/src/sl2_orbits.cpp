#include "hradon/sl2_orbits.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace hradon {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw invalid_partition("parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw invalid_partition("parts must be weakly decreasing");
  }
}

int Partition::sum() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::all_parts_even() const {
  if (parts_.empty()) return false;
  return std::all_of(parts_.begin(), parts_.end(),
                     [](int d) { return d % 2 == 0; });
}

bool Partition::all_parts_same_parity() const {
  if (parts_.empty()) return true;
  int par = parts_[0] % 2;
  return std::all_of(parts_.begin(), parts_.end(),
                     [par](int d) { return d % 2 == par; });
}

std::vector<std::pair<int, int>> Partition::multiplicities() const {
  std::vector<std::pair<int, int>> out;
  for (int d : parts_) {
    if (!out.empty() && out.back().first == d)
      ++out.back().second;
    else
      out.push_back({d, 1});
  }
  return out;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& [d, r] : multiplicities()) {
    if (!first) os << ",";
    first = false;
    os << d;
    if (r > 1) os << "^" << r;
  }
  os << "]";
  return os.str();
}

Partition Partition::parse(const std::string& text) {
  std::string s = text;
  std::erase(s, '[');
  std::erase(s, ']');
  std::erase(s, ' ');
  std::vector<int> parts;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    auto caret = tok.find('^');
    int d, r = 1;
    if (caret == std::string::npos) {
      d = std::stoi(tok);
    } else {
      d = std::stoi(tok.substr(0, caret));
      r = std::stoi(tok.substr(caret + 1));
    }
    for (int i = 0; i < r; ++i) parts.push_back(d);
  }
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

std::size_t ComplexSimpleType::rank() const {
  switch (kind) {
    case Kind::SL: return ambient - 1;
    case Kind::SO: return ambient / 2;
    case Kind::SP: return ambient / 2;
  }
  return 0;
}

char ComplexSimpleType::dynkin_letter() const {
  switch (kind) {
    case Kind::SL: return 'A';
    case Kind::SO: return ambient % 2 == 1 ? 'B' : 'D';
    case Kind::SP: return 'C';
  }
  return '?';
}

std::string ComplexSimpleType::to_string() const {
  switch (kind) {
    case Kind::SL: return "sl(" + std::to_string(ambient) + ",C)";
    case Kind::SO: return "so(" + std::to_string(ambient) + ",C)";
    case Kind::SP: return "sp(" + std::to_string(ambient / 2) + ",C)";
  }
  return "?";
}

std::string WeightedDiagram::to_string() const {
  std::ostringstream os;
  os << dynkin_type << ":(";
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i) os << ",";
    os << weights[i];
  }
  os << ")";
  if (orbit_label == OrbitLabel::VeryEvenI) os << " I";
  if (orbit_label == OrbitLabel::VeryEvenII) os << " II";
  return os.str();
}

std::string WeightedDiagram::ascii() const {
  std::ostringstream os;
  std::size_t l = weights.size();
  auto node = [&](std::size_t i) {
    os << "(" << weights[i] << ")";
  };
  if (dynkin_type == 'D' && l >= 2) {
    for (std::size_t i = 0; i + 2 < l; ++i) {
      node(i);
      os << "--";
    }
    os << "<";
    node(l - 2);
    os << ",";
    node(l - 1);
    os << ">";
  } else {
    for (std::size_t i = 0; i < l; ++i) {
      if (i) os << (dynkin_type == 'B' ? (i + 1 == l ? "=>" : "--")
                                       : (dynkin_type == 'C' && i + 1 == l
                                              ? "<="
                                              : "--"));
      node(i);
    }
  }
  return os.str();
}

bool partition_valid_for(const ComplexSimpleType& g, const Partition& p) {
  if (p.sum() != static_cast<int>(g.ambient)) return false;
  switch (g.kind) {
    case ComplexSimpleType::Kind::SL:
      return true;
    case ComplexSimpleType::Kind::SO:
      for (const auto& [d, r] : p.multiplicities())
        if (d % 2 == 0 && r % 2 != 0) return false;
      return true;
    case ComplexSimpleType::Kind::SP:
      for (const auto& [d, r] : p.multiplicities())
        if (d % 2 == 1 && r % 2 != 0) return false;
      return true;
  }
  return false;
}

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int d = std::min(rest, maxpart); d >= 1; --d) {
      cur.push_back(d);
      rec(rest - d, d);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<std::pair<Partition, int>> valid_partitions(
    const ComplexSimpleType& g) {
  if (g.kind == ComplexSimpleType::Kind::SO &&
      (g.ambient == 2 || g.ambient == 4))
    throw non_simple_type("so(2,C)/so(4,C) are not simple");
  if (g.ambient == 0) throw non_simple_type("empty ambient space");
  std::vector<std::pair<Partition, int>> out;
  for (const auto& p : all_partitions(static_cast<int>(g.ambient))) {
    if (!partition_valid_for(g, p)) continue;
    int orbits = 1;
    if (g.kind == ComplexSimpleType::Kind::SO && g.ambient % 2 == 0 &&
        p.all_parts_even())
      orbits = 2;
    out.push_back({p, orbits});
  }
  return out;
}

std::vector<int> eigenvalues(const Partition& p) {
  std::vector<int> h;
  for (int d : p.parts())
    for (int v = d - 1; v >= -(d - 1); v -= 2) h.push_back(v);
  std::sort(h.rbegin(), h.rend());
  return h;
}

std::vector<WeightedDiagram> weighted_diagram(const ComplexSimpleType& g,
                                              const Partition& p) {
  if (!partition_valid_for(g, p))
    throw invalid_partition(p.to_string() + " is not valid for " +
                            g.to_string());
  std::vector<int> h = eigenvalues(p);
  std::size_t n = g.ambient;
  switch (g.kind) {
    case ComplexSimpleType::Kind::SL: {
      WeightedDiagram d{'A', {}, OrbitLabel::None};
      for (std::size_t i = 0; i + 1 < n; ++i)
        d.weights.push_back(h[i] - h[i + 1]);
      return {d};
    }
    case ComplexSimpleType::Kind::SP: {
      std::size_t m = n / 2;
      WeightedDiagram d{'C', {}, OrbitLabel::None};
      for (std::size_t i = 0; i + 1 < m; ++i)
        d.weights.push_back(h[i] - h[i + 1]);
      d.weights.push_back(2 * h[m - 1]);
      return {d};
    }
    case ComplexSimpleType::Kind::SO: {
      if (n % 2 == 1) {
        std::size_t m = (n - 1) / 2;
        WeightedDiagram d{'B', {}, OrbitLabel::None};
        for (std::size_t i = 0; i + 1 < m; ++i)
          d.weights.push_back(h[i] - h[i + 1]);
        d.weights.push_back(h[m - 1]);
        return {d};
      }
      std::size_t m = n / 2;
      if (m == 1) throw non_simple_type("so(2,C) is not simple");
      std::vector<int> prefix;
      for (std::size_t i = 0; i + 2 < m; ++i)
        prefix.push_back(h[i] - h[i + 1]);
      int a = h[m - 2], b = h[m - 1];  // last two dominant coordinates
      if (!p.all_parts_even()) {
        // Some odd part forces b = 0; both fork weights equal a.
        WeightedDiagram d{'D', prefix, OrbitLabel::None};
        d.weights.push_back(a - b);
        d.weights.push_back(a + b);
        return {d};
      }
      // Very even: the sign of the last coordinate is a genuine choice and
      // the two choices give the two orbits.
      WeightedDiagram first{'D', prefix, OrbitLabel::VeryEvenI};
      first.weights.push_back(a + b);
      first.weights.push_back(a - b);
      WeightedDiagram second{'D', prefix, OrbitLabel::VeryEvenII};
      second.weights.push_back(a - b);
      second.weights.push_back(a + b);
      return {first, second};
    }
  }
  throw invalid_partition("unreachable");
}

bool is_very_even(const Partition& p) { return p.all_parts_even(); }

bool very_even_from_diagram(const ComplexSimpleType& g,
                            const WeightedDiagram& d) {
  if (g.ambient % 2 == 1)
    throw odd_ambient(g.to_string() + " admits no very even homomorphisms");
  switch (g.kind) {
    case ComplexSimpleType::Kind::SL: {
      std::size_t mid = g.ambient / 2;  // node index N in A_{2N-1}, 1-based
      return d.weights.at(mid - 1) != 0;
    }
    case ComplexSimpleType::Kind::SP:
      return d.weights.back() != 0;
    case ComplexSimpleType::Kind::SO:
      return d.weights.at(d.weights.size() - 2) != d.weights.back();
  }
  return false;
}

bool very_even_under_triality(const WeightedDiagram& d) {
  if (d.dynkin_type != 'D' || d.weights.size() != 4)
    throw std::invalid_argument("triality criterion needs a D4 diagram");
  int a1 = d.weights[0], a3 = d.weights[2], a4 = d.weights[3];
  if (a1 == a3 && a3 == a4) return false;
  // The triality orbit of the standard fork criterion a3 != a4 permutes the
  // outer nodes {1, 3, 4}.
  return a3 != a4 && a1 != a4 && a1 != a3;
}

bool is_even_hom(const ComplexSimpleType& g, const Partition& p) {
  if (!partition_valid_for(g, p))
    throw invalid_partition(p.to_string() + " is not valid for " +
                            g.to_string());
  return p.all_parts_same_parity();
}

std::vector<int> clebsch_gordan(int k, int l) {
  if (k < 1 || l < 1) throw std::invalid_argument("dimensions must be >= 1");
  std::vector<int> out;
  for (int d = k + l - 1; d >= std::abs(k - l) + 1; d -= 2) out.push_back(d);
  return out;
}

DimensionMultiset diagonal_restriction(const DimensionMultiset& mv,
                                       const DimensionMultiset& mw) {
  DimensionMultiset out;
  for (const auto& [k, rk] : mv)
    for (const auto& [l, rl] : mw)
      for (int d : clebsch_gordan(k, l)) out[d] += rk * rl;
  return out;
}

}  // namespace hradon
