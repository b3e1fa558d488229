#include "hradon/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <iostream>
#include <sstream>

#include "hradon/clifford.hpp"
#include "hradon/hr_builder.hpp"
#include "hradon/json_io.hpp"
#include "hradon/properness.hpp"
#include "hradon/spin_rep.hpp"

namespace hradon {

namespace {

struct SpaceRef {
  bool is_direct = false;
  SymmetricSpaceEntry entry;
  DirectSpace direct;
  ClassicalAlgebra alg;  // ambient algebra descriptor, used by classify-spin
  std::string text;
};

ClassicalAlgebra t1_algebra(int row, std::size_t n) {
  switch (row) {
    case 1: return ClassicalAlgebra::sized(Family::SL_R, 2 * n);
    case 2: return ClassicalAlgebra::sized(Family::SL_C, 2 * n);
    case 3: return ClassicalAlgebra::sized(Family::SL_H, 2 * n);
    case 4:
    case 9: return ClassicalAlgebra::sized(Family::SO_STAR, 2 * n);
    case 5:
    case 10: return ClassicalAlgebra::sized(Family::SO_C, 2 * n);
    case 6: return ClassicalAlgebra::signature(Family::SO, n, n);
    case 7: return ClassicalAlgebra::signature(Family::SU, n, n);
    case 8: return ClassicalAlgebra::signature(Family::SP, n, n);
    default: throw not_in_catalog("row must be 1..10");
  }
}

ClassicalAlgebra t6_algebra(int row) {
  switch (row) {
    case 1: return ClassicalAlgebra::sized(Family::SL_R, 4);
    case 2: return ClassicalAlgebra::sized(Family::SL_R, 5);
    case 3: return ClassicalAlgebra::sized(Family::SL_H, 5);
    case 4: return ClassicalAlgebra::signature(Family::SU, 4, 2);
    case 5:
    case 8: return ClassicalAlgebra::signature(Family::SU, 2, 2);
    case 6: return ClassicalAlgebra::signature(Family::SU, 4, 4);
    case 7: return ClassicalAlgebra::signature(Family::SU, 3, 2);
    case 9:
    case 10: return ClassicalAlgebra::sized(Family::SP_R, 2);
    case 11: return ClassicalAlgebra::signature(Family::SP, 3, 2);
    case 12: return ClassicalAlgebra::signature(Family::SP, 2, 2);
    case 13: return ClassicalAlgebra::signature(Family::SO, 4, 2);
    case 14: return ClassicalAlgebra::signature(Family::SO, 3, 3);
    case 15: return ClassicalAlgebra::signature(Family::SO, 6, 2);
    case 16: return ClassicalAlgebra::signature(Family::SO, 6, 4);
    case 17:
    case 19: return ClassicalAlgebra::signature(Family::SO, 4, 4);
    case 18: return ClassicalAlgebra::sized(Family::SO_STAR, 4);
    default: throw not_in_catalog("row must be 1..19");
  }
}

std::size_t to_unsigned(const std::string& s) {
  std::size_t pos = 0;
  long long v = std::stoll(s, &pos);
  if (pos != s.size() || v < 0) throw std::invalid_argument("bad number " + s);
  return static_cast<std::size_t>(v);
}

// Grammar:
//   H <p> <q>                        hyperbolic family (needs p = q + 1)
//   so-split <N>                     same family at offset zero
//   t1 <row> <N> [<p>]               family catalog row
//   t6 <row>                         witness catalog row, minimal parameters
//   sl2n <r|c|h> <p> <q>             linear quotient, odd split
//   spn <r|c> <N> <p1,p2,...>        symplectic block quotient
SpaceRef parse_space(const std::vector<std::string>& tok) {
  if (tok.empty()) throw std::invalid_argument("empty space descriptor");
  SpaceRef ref;
  const std::string& kind = tok[0];
  if (kind == "H") {
    if (tok.size() != 3) throw std::invalid_argument("usage: H <p> <q>");
    std::size_t p = to_unsigned(tok[1]), q = to_unsigned(tok[2]);
    if (p != q + 1)
      throw std::invalid_argument(
          "only the boundary signatures p = q+1 are in the catalog");
    ref.entry = table1_entry(6, p, 0);
    ref.alg = ClassicalAlgebra::signature(Family::SO, p, p);
    ref.text = "H(" + tok[1] + "," + tok[2] + ")";
    return ref;
  }
  if (kind == "so-split") {
    if (tok.size() != 2) throw std::invalid_argument("usage: so-split <N>");
    std::size_t n = to_unsigned(tok[1]);
    ref.entry = table1_entry(6, n, 0);
    ref.alg = ClassicalAlgebra::signature(Family::SO, n, n);
    ref.text = "so-split " + tok[1];
    return ref;
  }
  if (kind == "t1") {
    if (tok.size() < 3 || tok.size() > 4)
      throw std::invalid_argument("usage: t1 <row> <N> [<p>]");
    int row = static_cast<int>(to_unsigned(tok[1]));
    std::size_t n = to_unsigned(tok[2]);
    std::size_t p = tok.size() == 4 ? to_unsigned(tok[3]) : 0;
    ref.entry = table1_entry(row, n, p);
    ref.alg = t1_algebra(row, n);
    ref.text = ref.entry.row_id + " " + ref.entry.g_text + " / " +
               ref.entry.h_text;
    return ref;
  }
  if (kind == "t6") {
    if (tok.size() != 2) throw std::invalid_argument("usage: t6 <row>");
    int row = static_cast<int>(to_unsigned(tok[1]));
    ref.entry = table6_entry(row);
    ref.alg = t6_algebra(row);
    ref.text = ref.entry.row_id + " " + ref.entry.g_text + " / " +
               ref.entry.h_text;
    return ref;
  }
  if (kind == "sl2n") {
    if (tok.size() != 4)
      throw std::invalid_argument("usage: sl2n <r|c|h> <p> <q>");
    char f = tok[1].at(0);
    std::size_t p = to_unsigned(tok[2]), q = to_unsigned(tok[3]);
    ref.is_direct = true;
    ref.direct = DirectSpace::sl_quotient(f, p, q);
    Family fam = f == 'r' ? Family::SL_R : (f == 'c' ? Family::SL_C : Family::SL_H);
    ref.alg = ClassicalAlgebra::sized(fam, p + q);
    ref.text = ref.direct.to_string();
    return ref;
  }
  if (kind == "spn") {
    if (tok.size() != 4)
      throw std::invalid_argument("usage: spn <r|c> <N> <p1,p2,...>");
    char f = tok[1].at(0);
    std::size_t n = to_unsigned(tok[2]);
    std::vector<std::size_t> blocks;
    std::istringstream is(tok[3]);
    std::string piece;
    while (std::getline(is, piece, ',')) blocks.push_back(to_unsigned(piece));
    ref.is_direct = true;
    ref.direct = DirectSpace::sp_quotient(f, n, blocks);
    ref.alg = ClassicalAlgebra::sized(f == 'r' ? Family::SP_R : Family::SP_C, n);
    ref.text = ref.direct.to_string();
    return ref;
  }
  throw std::invalid_argument("unknown space kind: " + kind);
}

ComplexSimpleType parse_orbit_type(const std::string& kind, int ambient) {
  if (kind == "sl") return ComplexSimpleType::sl(ambient);
  if (kind == "so") return ComplexSimpleType::so(ambient);
  if (kind == "sp") {
    if (ambient % 2 != 0)
      throw std::invalid_argument("symplectic type needs even ambient size");
    return ComplexSimpleType::sp_half(ambient / 2);
  }
  throw std::invalid_argument("type must be sl, so or sp");
}

Dagger parse_dagger(const std::string& s) {
  if (s == "conj" || s == "-") return Dagger::Conj;
  if (s == "dual" || s == "v") return Dagger::Dual;
  if (s == "conjdual" || s == "*") return Dagger::ConjDual;
  if (s == "id") return Dagger::Id;
  throw std::invalid_argument("dagger must be conj, dual, conjdual or id");
}

RepMultiplicity parse_mults(int n, const std::string& text) {
  // label:count items separated by ';' or ','; labels are S, S1, S2 or a
  // parenthesized coordinate list like (1/2,3/2).
  RepMultiplicity tau;
  tau.n = n;
  std::string s = text;
  for (char& ch : s)
    if (ch == ';') ch = '@';
  // Protect commas inside parentheses.
  int depth = 0;
  for (char& ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) ch = '@';
  }
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, '@')) {
    if (item.empty()) continue;
    auto colon = item.rfind(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("multiplicity item needs label:count");
    std::string label = item.substr(0, colon);
    long count = std::stol(item.substr(colon + 1));
    std::vector<Rational> coords;
    if (label == "S") {
      coords = spin_weight(n).coords;
    } else if (label == "S1") {
      coords = spin_weight(n, -1).coords;
    } else if (label == "S2") {
      coords = spin_weight(n, +1).coords;
    } else {
      if (label.front() == '(') label = label.substr(1, label.size() - 2);
      std::istringstream cs(label);
      std::string c;
      while (std::getline(cs, c, ',')) coords.push_back(Rational::parse(c));
    }
    tau.mults[coords] += count;
  }
  return tau;
}

json mults_to_json(const RepMultiplicity& tau) {
  json m = json::object();
  for (const auto& [coords, count] : tau.mults) {
    std::string key;
    for (std::size_t i = 0; i < coords.size(); ++i)
      key += (i ? "," : "") + coords[i].to_string();
    m[key] = count;
  }
  return json{{"n", tau.n}, {"mults", m}};
}

json verdicts_to_json(const std::vector<PropernessVerdict>& vs) {
  bool realizable = false, proper_all = true, any = false;
  json orbits = json::array();
  for (const auto& v : vs) {
    json o{{"realizable", v.realizable},
           {"proper", v.proper},
           {"very_even", v.very_even},
           {"reason", v.reason}};
    if (v.orbit == OrbitLabel::VeryEvenI) o["orbit"] = "I";
    if (v.orbit == OrbitLabel::VeryEvenII) o["orbit"] = "II";
    orbits.push_back(o);
    if (v.realizable) {
      realizable = true;
      any = true;
      proper_all = proper_all && v.proper;
    }
  }
  return json{{"realizable", realizable},
              {"proper", realizable && any && proper_all},
              {"very_even", vs.empty() ? false : vs.front().very_even},
              {"orbits", orbits}};
}

json ve_report_to_json(const VeReport& rep) {
  json items = json::array();
  for (const auto& it : rep.items) {
    json o{{"partition", it.partition.to_string()},
           {"realizable", it.realizable},
           {"proper", it.proper},
           {"very_even", it.very_even},
           {"consistent", it.consistent}};
    if (it.orbit == OrbitLabel::VeryEvenI) o["orbit"] = "I";
    if (it.orbit == OrbitLabel::VeryEvenII) o["orbit"] = "II";
    items.push_back(o);
  }
  return json{{"space", rep.space},
              {"pass", rep.pass},
              {"vacuous", rep.vacuous},
              {"counterexamples", rep.counterexamples},
              {"items", items}};
}

json witness_to_json(const WitnessReport& w) {
  return json{{"row", w.row_id},
              {"partition", w.partition.to_string()},
              {"valid", w.valid},
              {"realizable", w.realizable},
              {"proper", w.proper},
              {"not_very_even", w.not_very_even},
              {"pass", w.pass}};
}

// ------------------------- reproduction drivers -------------------------

json drive_rho_table() {
  struct Ref {
    Rational arg;
    int expect;
  };
  const std::vector<Ref> refs = {
      {Rational(1, 16), -7}, {Rational(1, 8), -6}, {Rational(1, 4), -4},
      {Rational(1, 2), 0},   {Rational(1), 1},     {Rational(2), 2},
      {Rational(4), 4},      {Rational(8), 8},     {Rational(16), 9}};
  json items = json::array();
  bool pass = true;
  for (const auto& r : refs) {
    bool ok = rho(r.arg) == r.expect;
    pass = pass && ok;
    items.push_back(json{{"id", r.arg.to_string()},
                         {"pass", ok},
                         {"detail", std::to_string(rho(r.arg))}});
  }
  return json{{"table", "rho"}, {"pass", pass}, {"items", items}};
}

json drive_table2(std::size_t max_dim) {
  json items = json::array();
  bool pass = true;
  auto check = [&](const ClassicalAlgebra& g) {
    if (g.complex_dim() > max_dim) return;
    bool ok = rho_via_chain(g) == rho_variant(g, 1);
    pass = pass && ok;
    items.push_back(json{{"id", g.to_string()},
                         {"pass", ok},
                         {"detail", std::to_string(rho_variant(g, 1))}});
  };
  for (int i = 1; i <= 8; ++i)
    for (std::size_t n = 1; chain_algebra(i, n).complex_dim() <= max_dim; ++n)
      check(chain_algebra(i, n));
  for (std::size_t n = 1; 2 * n <= max_dim; ++n) {
    check(ClassicalAlgebra::sized(Family::GL_C, n));
    check(ClassicalAlgebra::signature(Family::SU, n, n));
  }
  // Exceptional odd-size split of the two variants.
  for (std::size_t n = 3; n <= max_dim; n += 2) {
    for (Family f : {Family::SL_R, Family::SL_C, Family::SL_H}) {
      ClassicalAlgebra g = ClassicalAlgebra::sized(f, n);
      if (g.complex_dim() > max_dim) continue;
      bool ok = rho_variant(g, 1) == 0 && rho_variant(g, 2) == 1;
      pass = pass && ok;
      items.push_back(
          json{{"id", g.to_string()}, {"pass", ok}, {"detail", "(0,1)"}});
    }
  }
  return json{{"table", "2"}, {"pass", pass}, {"items", items}};
}

json drive_table1_ve() {
  json items = json::array();
  bool pass = true;
  auto add = [&](const VeReport& r) {
    pass = pass && r.pass;
    items.push_back(json{{"id", r.space},
                         {"pass", r.pass},
                         {"detail", r.vacuous ? "vacuous" : "equivalence"}});
  };
  for (std::size_t n : {1, 2}) add(verify_ve(table1_entry(1, n)));
  for (std::size_t n : {1, 2}) add(verify_ve(table1_entry(2, n)));
  for (std::size_t n : {1, 2}) add(verify_ve(table1_entry(3, n)));
  for (std::size_t n : {2, 3}) add(verify_ve(table1_entry(4, n)));
  for (std::size_t n : {3, 4}) add(verify_ve(table1_entry(5, n)));
  for (std::size_t n = 3; n <= 6; ++n)
    for (std::size_t p = 0; 2 * p < n; ++p)
      add(verify_ve(table1_entry(6, n, p)));
  for (std::size_t n : {2, 3})
    for (std::size_t p = 0; 2 * p < n; ++p) {
      add(verify_ve(table1_entry(7, n, p)));
      add(verify_ve(table1_entry(8, n, p)));
      add(verify_ve(table1_entry(9, n, p)));
    }
  for (std::size_t n : {3, 4})
    for (std::size_t p = 0; 2 * p < n; ++p)
      add(verify_ve(table1_entry(10, n, p)));
  // Non-symmetric quotients, ambient size <= 12.
  for (std::size_t two_n = 4; two_n <= 12; two_n += 2)
    for (std::size_t p = 1; p < two_n; p += 2) {
      add(verify_ve(DirectSpace::sl_quotient('r', p, two_n - p)));
      add(verify_ve(DirectSpace::sl_quotient('c', p, two_n - p)));
    }
  // Quaternionic entries double the ambient size.
  for (std::size_t sum = 2; 2 * sum <= 12; sum += 2)
    for (std::size_t p = 1; p <= sum / 2; p += 2)
      add(verify_ve(DirectSpace::sl_quotient('h', p, sum - p)));
  for (std::size_t n = 2; n <= 6; ++n) {
    add(verify_ve(
        DirectSpace::sp_quotient('r', n, std::vector<std::size_t>(n - 1, 1))));
    add(verify_ve(DirectSpace::sp_quotient('c', n, {n - 1})));
  }
  return json{{"table", "1"}, {"pass", pass}, {"items", items}};
}

json drive_table6(int row_filter) {
  json items = json::array();
  bool pass = true;
  for (int row = 1; row <= table6_row_count(); ++row) {
    if (row_filter > 0 && row != row_filter) continue;
    WitnessReport w = table6_witness(row);
    pass = pass && w.pass;
    items.push_back(json{{"id", w.row_id},
                         {"pass", w.pass},
                         {"detail", w.partition.to_string()}});
  }
  return json{{"table", "6"}, {"pass", pass}, {"items", items}};
}

void print_report(const json& rep, std::ostream& out) {
  out << "table " << rep["table"].get<std::string>() << ": "
      << (rep["pass"].get<bool>() ? "PASS" : "FAIL") << " ("
      << rep["items"].size() << " items)\n";
  for (const auto& item : rep["items"])
    if (!item["pass"].get<bool>())
      out << "  FAIL " << item["id"].get<std::string>() << " "
          << item["detail"].get<std::string>() << "\n";
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact invariants of classical symmetric spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON on stdout");

  std::vector<std::string> pos;
  std::string partition_text, mults_text, dagger_text, lambda_text, type_text;
  int which = 1, row_filter = 0;
  std::size_t max_n = 64;
  int level = 2, rank_arg = 1;
  bool verify_flag = false, very_even_only = false;

  auto* c_rho = app.add_subcommand("rho", "Hurwitz-Radon number of a rational");
  c_rho->add_option("value", partition_text)->required();

  auto* c_rv = app.add_subcommand("rho-variant", "invariant of a classical pair");
  c_rv->add_option("family", pos)->required()->expected(-1);
  c_rv->add_option("--which", which)->check(CLI::Range(1, 2));

  auto* c_chain = app.add_subcommand("chain", "chain position and value");
  c_chain->add_option("family", pos)->required()->expected(-1);

  auto* c_hw = app.add_subcommand("hr-witness", "anticommuting family");
  c_hw->add_option("family", pos)->required()->expected(-1);
  c_hw->add_flag("--verify", verify_flag);
  c_hw->add_option("--which", which)->check(CLI::Range(1, 2));

  auto* c_ct = app.add_subcommand("clifford-type", "algebra type of C(p,q)");
  c_ct->add_option("pq", pos)->required()->expected(2);

  auto* c_eta = app.add_subcommand("eta-check", "even-part isomorphism check");
  c_eta->add_option("n", level)->required();

  auto* c_parts = app.add_subcommand("partitions", "valid partitions");
  c_parts->add_option("args", pos)->required()->expected(2);
  c_parts->add_flag("--very-even-only", very_even_only);

  auto* c_diag = app.add_subcommand("diagram", "weighted diagram of a partition");
  c_diag->add_option("type", type_text)->required();
  c_diag->add_option("partition", partition_text)->required();

  auto* c_sat = app.add_subcommand("satake", "diagram of a real form");
  c_sat->add_option("form", pos)->required()->expected(-1);

  auto* c_sp = app.add_subcommand("satake-pair", "simultaneous diagram pair");
  c_sp->add_option("space", pos)->required()->expected(-1);

  auto* c_prop = app.add_subcommand("proper", "properness of one partition");
  c_prop->add_option("args", pos)->required()->expected(-1);

  auto* c_ve = app.add_subcommand("verify-ve", "exhaustive equivalence check");
  c_ve->add_option("space", pos)->required()->expected(-1);

  auto* c_wit = app.add_subcommand("witness-table6", "distinguished witnesses");
  c_wit->add_option("--row", row_filter);

  auto* c_cs = app.add_subcommand("classify-spin", "admissible rank-one levels");
  c_cs->add_option("space", pos)->required()->expected(-1);

  auto* c_is = app.add_subcommand("index-spin", "type invariant of the class");
  c_is->add_option("n", level)->required();
  c_is->add_option("dagger", dagger_text)->required();

  auto* c_spf = app.add_subcommand("spinify", "same-dimensional replacement");
  c_spf->add_option("n", level)->required();
  c_spf->add_option("mults", mults_text)->required();
  c_spf->add_option("dagger", dagger_text)->required();

  auto* c_wd = app.add_subcommand("weyl-dim", "dimension of a dominant weight");
  c_wd->add_option("type", type_text)->required();
  c_wd->add_option("rank", rank_arg)->required();
  c_wd->add_option("lambda", lambda_text)->required();

  auto* c_emb = app.add_subcommand("embed", "membership in a classical target");
  c_emb->add_option("target", type_text)->required();
  c_emb->add_option("n", level)->required();
  c_emb->add_option("mults", mults_text)->required();

  auto* c_rep = app.add_subcommand("reproduce-tables", "batch verification");
  std::string table_filter = "all";
  c_rep->add_option("--table", table_filter);
  c_rep->add_option("--row", row_filter);
  c_rep->add_option("--max-N", max_n);

  // CLI11 wants argv-style reversed order.
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (c_rho->parsed()) {
      Rational t = Rational::parse(partition_text);
      int v = rho(t);
      if (as_json)
        out << json{{"value", v}}.dump() << "\n";
      else
        out << v << "\n";
      return 0;
    }
    if (c_rv->parsed() || c_chain->parsed() || c_hw->parsed()) {
      std::string joined;
      for (const auto& t : pos) joined += t + " ";
      auto g = parse_algebra(joined);
      if (!g) {
        err << "unknown algebra descriptor: " << joined << "\n";
        return 2;
      }
      if (c_rv->parsed()) {
        int v = rho_variant(*g, which);
        json j{{"value", v}};
        if (auto cp = chain_locate(*g))
          j["chain_position"] = json{{"i", cp->i}, {"N", cp->n}};
        if (as_json)
          out << j.dump() << "\n";
        else
          out << v << "\n";
        return 0;
      }
      if (c_chain->parsed()) {
        json j;
        if (auto cp = chain_locate(*g)) {
          j = json{{"value", rho_via_chain(*g)},
                   {"chain_position", json{{"i", cp->i}, {"N", cp->n}}},
                   {"period", 8}};
        } else if (auto cc = complex_chain_locate(*g)) {
          j = json{{"value", rho_via_chain(*g)},
                   {"chain_position", json{{"i", cc->slot}, {"N", cc->n}}},
                   {"period", 2}};
        } else {
          err << g->to_string() << " is not on either chain\n";
          return 2;
        }
        if (as_json)
          out << j.dump() << "\n";
        else
          out << g->to_string() << ": value " << j["value"]
              << ", period " << j["period"] << " slot "
              << j["chain_position"]["i"] << " at N=" << j["chain_position"]["N"]
              << "\n";
        return 0;
      }
      // hr-witness
      if (which == 2 && (g->family == Family::SL_R || g->family == Family::SL_C ||
                         g->family == Family::SL_H) &&
          g->n % 2 == 1 && g->n >= 3) {
        ExactMatrix w = sl_odd_invertible_witness(*g);
        bool member = p_part_contains(*g, w);
        json j{{"algebra", g->to_string()},
               {"count", 1},
               {"matrices", json::array({matrix_to_json(w)})},
               {"verification",
                json{{"pass", member}, {"checks", json::array()}}}};
        if (as_json)
          out << j.dump() << "\n";
        else
          out << "invertibility witness for " << g->to_string() << ":\n"
              << w.to_string() << "\n";
        return member ? 0 : 1;
      }
      HRFamily fam = build_witness(*g);
      FamilyReport rep = verify_family(fam);
      json checks = json::array();
      for (const auto& pc : rep.pairs)
        checks.push_back(
            json{{"pair", json::array({pc.j, pc.k})}, {"pass", pc.ok}});
      for (std::size_t i = 0; i < rep.membership.size(); ++i)
        checks.push_back(json{{"membership", i}, {"pass", rep.membership[i]}});
      json j{{"algebra", g->to_string()}, {"count", fam.matrices.size()}};
      json mats = json::array();
      for (const auto& m : fam.matrices) mats.push_back(matrix_to_json(m));
      j["matrices"] = mats;
      if (!fam.note.empty()) j["note"] = fam.note;
      j["verification"] = json{{"pass", rep.pass}, {"checks", checks}};
      if (as_json) {
        out << j.dump() << "\n";
      } else {
        out << g->to_string() << ": " << fam.matrices.size() << " matrices";
        if (!fam.note.empty()) out << " (" << fam.note << ")";
        out << "\n";
        if (verify_flag) out << rep.to_string();
      }
      return rep.pass ? 0 : 1;
    }
    if (c_ct->parsed()) {
      int p = static_cast<int>(to_unsigned(pos[0]));
      int q = static_cast<int>(to_unsigned(pos[1]));
      CliffordType t = clifford_type(p, q);
      CliffordType even = even_clifford_type(p, q);
      if (as_json)
        out << json{{"full", t.to_string()}, {"even", even.to_string()}}.dump()
            << "\n";
      else
        out << "C(" << p << "," << q << ") = " << t.to_string() << ", even part "
            << even.to_string() << "\n";
      return 0;
    }
    if (c_eta->parsed()) {
      int n = level;
      bool ok = true;
      std::uint32_t total = std::uint32_t(1) << n;
      for (std::uint32_t s = 0; s < total && ok; ++s)
        for (std::uint32_t t = 0; t < total && ok; ++t) {
          CliffordElement a = CliffordElement::monomial(n, 0, s);
          CliffordElement b = CliffordElement::monomial(n, 0, t);
          ok = eta(a * b) == eta(a) * eta(b);
        }
      auto pp = p_part_basis_n1(n);
      for (int i = 1; i <= n && ok; ++i)
        ok = eta(CliffordElement::generator(n, 0, i)) == pp[i - 1];
      if (as_json)
        out << json{{"n", n}, {"pass", ok}}.dump() << "\n";
      else
        out << "eta on C(" << n << "): " << (ok ? "PASS" : "FAIL") << "\n";
      return ok ? 0 : 1;
    }
    if (c_parts->parsed()) {
      ComplexSimpleType g =
          parse_orbit_type(pos[0], static_cast<int>(to_unsigned(pos[1])));
      json items = json::array();
      for (const auto& [p, orbits] : valid_partitions(g)) {
        if (very_even_only && !is_very_even(p)) continue;
        auto ds = weighted_diagram(g, p);
        json o{{"partition", p.to_string()},
               {"very_even", is_very_even(p)},
               {"orbits", orbits}};
        json weights = json::array();
        for (const auto& d : ds) weights.push_back(d.weights);
        o["weights"] = weights;
        items.push_back(o);
        if (!as_json) {
          out << p.to_string() << "  orbits=" << orbits
              << (is_very_even(p) ? "  very-even" : "") << "  ";
          for (const auto& d : ds) out << d.to_string() << " ";
          out << "\n";
        }
      }
      if (as_json) out << items.dump() << "\n";
      return 0;
    }
    if (c_diag->parsed()) {
      Partition p = Partition::parse(partition_text);
      ComplexSimpleType g = parse_orbit_type(type_text, p.sum());
      auto ds = weighted_diagram(g, p);
      json weights = json::array();
      for (const auto& d : ds) weights.push_back(d.weights);
      json j{{"partition", p.to_string()},
             {"weights", weights},
             {"very_even", is_very_even(p)},
             {"orbits", ds.size()}};
      if (as_json) {
        out << j.dump() << "\n";
      } else {
        for (const auto& d : ds) out << d.ascii() << "\n";
      }
      return 0;
    }
    if (c_sat->parsed()) {
      std::string joined;
      for (const auto& t : pos) joined += t + " ";
      auto g = parse_algebra(joined);
      if (!g) {
        err << "unknown form: " << joined << "\n";
        return 2;
      }
      SatakeDiagram s = satake(*g);
      if (as_json) {
        json arrows = json::array();
        for (const auto& [a, b] : s.arrows)
          if (a < b) arrows.push_back(json::array({a, b}));
        out << json{{"type", std::string(1, s.dynkin_type)},
                    {"rank", s.rank},
                    {"black", s.black},
                    {"arrows", arrows}}
                   .dump()
            << "\n";
      } else {
        out << g->to_string() << ": " << s.ascii() << "\n";
      }
      return 0;
    }
    if (c_sp->parsed()) {
      SpaceRef ref = parse_space(pos);
      if (ref.is_direct || !ref.entry.s_g.has_value()) {
        err << "no simultaneous pair for this space\n";
        return 2;
      }
      const auto& e = ref.entry;
      if (as_json) {
        out << json{{"space", ref.text},
                    {"g", e.s_g->ascii()},
                    {"gc", e.s_crit->ascii()},
                    {"c_dual", e.gc_text},
                    {"alt_alignment_passes_rank", e.alt_alignment_passes_rank},
                    {"alt_alignment_differs", e.alt_alignment_differs}}
                   .dump()
            << "\n";
      } else {
        out << ref.text << "\n  S_g:  " << e.s_g->ascii() << "\n  S_gc: "
            << e.s_crit->ascii() << "   (c-dual " << e.gc_text << ")\n";
        if (e.alt_alignment_differs)
          out << "  note: a second alignment passes the rank test; the "
                 "shipped one is fixed by the restricted-root computation\n";
      }
      return 0;
    }
    if (c_prop->parsed()) {
      if (pos.size() < 2) {
        err << "usage: proper <space...> <partition>\n";
        return 2;
      }
      Partition p = Partition::parse(pos.back());
      std::vector<std::string> space_tok(pos.begin(), pos.end() - 1);
      SpaceRef ref = parse_space(space_tok);
      std::vector<PropernessVerdict> vs =
          ref.is_direct ? decide_proper_direct(ref.direct, p)
                        : decide_proper(ref.entry, p);
      json j = verdicts_to_json(vs);
      if (as_json) {
        out << j.dump() << "\n";
      } else {
        out << ref.text << "  " << p.to_string() << "\n";
        for (const auto& v : vs) {
          out << "  ";
          if (v.orbit == OrbitLabel::VeryEvenI) out << "orbit I:  ";
          if (v.orbit == OrbitLabel::VeryEvenII) out << "orbit II: ";
          out << (v.realizable ? (v.proper ? "proper" : "not proper")
                               : "not realizable")
              << " (" << v.reason << ")\n";
        }
      }
      return 0;
    }
    if (c_ve->parsed()) {
      SpaceRef ref = parse_space(pos);
      VeReport rep =
          ref.is_direct ? verify_ve(ref.direct) : verify_ve(ref.entry);
      if (as_json)
        out << ve_report_to_json(rep).dump() << "\n";
      else
        out << rep.summary() << "\n";
      return rep.pass ? 0 : 1;
    }
    if (c_wit->parsed()) {
      bool pass = true;
      json items = json::array();
      for (int row = 1; row <= table6_row_count(); ++row) {
        if (row_filter > 0 && row != row_filter) continue;
        WitnessReport w = table6_witness(row);
        pass = pass && w.pass;
        items.push_back(witness_to_json(w));
        if (!as_json)
          out << w.row_id << " " << w.partition.to_string() << ": "
              << (w.pass ? "PASS" : "FAIL") << "\n";
      }
      if (as_json) out << items.dump() << "\n";
      return pass ? 0 : 1;
    }
    if (c_cs->parsed()) {
      SpaceRef ref = parse_space(pos);
      std::set<int> levels = classify_spin(ref.alg);
      if (as_json) {
        out << json{{"space", ref.text}, {"levels", levels}}.dump() << "\n";
      } else {
        out << ref.text << ": {";
        bool first = true;
        for (int n : levels) {
          out << (first ? "" : ",") << n;
          first = false;
        }
        out << "}\n";
      }
      return 0;
    }
    if (c_is->parsed()) {
      int v = index_spin(level, parse_dagger(dagger_text));
      if (as_json)
        out << json{{"n", level}, {"index", v}}.dump() << "\n";
      else
        out << v << "\n";
      return 0;
    }
    if (c_spf->parsed()) {
      RepMultiplicity tau = parse_mults(level, mults_text);
      RepMultiplicity rep = spinify(tau, parse_dagger(dagger_text));
      if (as_json)
        out << mults_to_json(rep).dump() << "\n";
      else
        out << mults_to_json(rep)["mults"].dump() << "\n";
      return 0;
    }
    if (c_wd->parsed()) {
      DominantWeight lam;
      lam.type = type_text.at(0);
      std::istringstream cs(lambda_text);
      std::string c;
      while (std::getline(cs, c, ',')) lam.coords.push_back(Rational::parse(c));
      if (static_cast<int>(lam.coords.size()) != rank_arg) {
        err << "rank does not match coordinate count\n";
        return 2;
      }
      long d = weyl_dimension(lam);
      if (as_json)
        out << json{{"dim", d}}.dump() << "\n";
      else
        out << d << "\n";
      return 0;
    }
    if (c_emb->parsed()) {
      RepMultiplicity tau = parse_mults(level, mults_text);
      json j;
      if (type_text == "u") {
        j = json{{"target", "u"}, {"ok", embed_u(tau)}};
      } else {
        RealTarget t;
        if (type_text == "o")
          t = RealTarget::Opq;
        else if (type_text == "sp-r")
          t = RealTarget::SpR;
        else if (type_text == "sp")
          t = RealTarget::Sprs;
        else if (type_text == "o-star")
          t = RealTarget::OStar;
        else {
          err << "target must be u, o, sp-r, sp or o-star\n";
          return 2;
        }
        EmbedResult r = embed_real_form(tau, t);
        j = json{{"target", type_text}, {"ok", r.ok}};
        if (r.ok) j["signature"] = json::array({r.sig_p, r.sig_q});
      }
      out << (as_json ? j.dump() : j.dump(2)) << "\n";
      return j["ok"].get<bool>() ? 0 : 1;
    }
    if (c_rep->parsed()) {
      std::vector<json> reports;
      if (table_filter == "all" || table_filter == "rho")
        reports.push_back(drive_rho_table());
      if (table_filter == "all" || table_filter == "2")
        reports.push_back(drive_table2(max_n));
      if (table_filter == "all" || table_filter == "1")
        reports.push_back(drive_table1_ve());
      if (table_filter == "all" || table_filter == "6")
        reports.push_back(drive_table6(row_filter));
      bool pass = true;
      for (const auto& r : reports) pass = pass && r["pass"].get<bool>();
      if (as_json) {
        out << json(reports).dump() << "\n";
      } else {
        for (const auto& r : reports) print_report(r, out);
        out << (pass ? "ALL PASS" : "FAILURES PRESENT") << "\n";
      }
      return pass ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace hradon
