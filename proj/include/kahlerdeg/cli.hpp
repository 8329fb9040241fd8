#pragma once

// Command-line front end. run() takes the arguments after the program name
// and writes the report to `out`; exit codes: 0 ok, 2 input error,
// 3 precision exhausted.

#include "kahlerdeg/algebra.hpp"
#include "kahlerdeg/classify.hpp"
#include "kahlerdeg/ideals.hpp"
#include "kahlerdeg/kahler.hpp"
#include "kahlerdeg/laurent.hpp"
#include "kahlerdeg/modbasis.hpp"
#include "kahlerdeg/normalize.hpp"
#include "kahlerdeg/numsgp.hpp"
#include "kahlerdeg/poly.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace kahlerdeg::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kOk = 0;
inline constexpr int kInputError = 2;
inline constexpr int kPrecisionExhausted = 3;

/// Splits a command line on blanks, honouring single and double quotes.
inline std::vector<std::string> split_words(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool have = false;
  char quote = 0;
  for (char ch : line) {
    if (quote) {
      if (ch == quote) {
        quote = 0;
      } else {
        cur += ch;
      }
    } else if (ch == '"' || ch == '\'') {
      quote = ch;
      have = true;
    } else if (ch == ' ' || ch == '\t' || ch == '\r') {
      if (have) out.push_back(cur);
      cur.clear();
      have = false;
    } else {
      cur += ch;
      have = true;
    }
  }
  if (quote) throw std::invalid_argument("unterminated quote");
  if (have) out.push_back(cur);
  return out;
}

inline std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t[]"));
    item.erase(item.find_last_not_of(" \t[]") + 1);
    if (item.empty()) continue;
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("not an integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

inline Json poly_json(const Poly& p) { return render(p); }

inline Json polys_json(const std::vector<Poly>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(render(p));
  return a;
}

inline Json semigroup_json(const NumericalSemigroup& s) {
  return Json{{"minimal_generators", s.minimal_generators()},
              {"multiplicity", s.multiplicity()},
              {"frobenius", s.frobenius()},
              {"conductor", s.conductor()},
              {"genus", s.genus()},
              {"symmetric", s.is_symmetric()}};
}

struct Options {
  bool json = false;
  bool verbose = false;
  std::string gens;
  std::string degrees;
  std::string show = "all";
  std::string algebra;
  std::string x;
  std::string y;
  std::optional<Int> precision;
  std::string semigroup;
  std::string op = "minimal";
  std::string other;
};

namespace detail {

inline void emit(std::ostream& out, const Options& o, const Json& j, const std::vector<std::string>& lines) {
  if (o.json) {
    out << j.dump(2) << '\n';
  } else {
    for (const auto& l : lines) out << l << '\n';
  }
}

inline std::string rel_string(const std::vector<std::pair<Int, Int>>& rs) {
  std::string s = "[ ";
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (i) s += ", ";
    s += "[ " + std::to_string(rs[i].first) + ", " + std::to_string(rs[i].second) + " ]";
  }
  return rs.empty() ? "[ ]" : s + " ]";
}

inline int cmd_semigroup(const Options& o, std::ostream& out) {
  if (o.gens.empty() == o.degrees.empty()) throw std::invalid_argument("semigroup: give exactly one of --gens, --degrees");
  if (o.show != "basis" && o.show != "generators" && o.show != "all") {
    throw std::invalid_argument("semigroup: --show must be basis, generators or all");
  }
  if (!o.degrees.empty()) {
    DegreeMonoid monoid(parse_int_list(o.degrees));
    Json j{{"content", monoid.content()}, {"minimal_generators", monoid.minimal_generators()}};
    std::vector<std::string> lines{"minimal generators: " + render_list(monoid.minimal_generators())};
    if (monoid.is_numerical()) {
      const auto& s = monoid.semigroup();
      j["semigroup"] = semigroup_json(s);
      lines.push_back("frobenius: " + std::to_string(s.frobenius()));
      lines.push_back("genus: " + std::to_string(s.genus()));
      lines.push_back("conductor: " + std::to_string(s.conductor()));
      lines.push_back("multiplicity: " + std::to_string(s.multiplicity()));
    } else {
      lines.push_back("content: " + std::to_string(monoid.content()) + " (not numerical)");
    }
    if (o.show == "generators") lines = {render_list(monoid.minimal_generators())};
    emit(out, o, j, lines);
    return kOk;
  }
  AlgebraBasis a = compute_algebra_basis(parse_poly_list(o.gens));
  std::vector<std::string> lines;
  if (o.verbose) {
    for (const auto& st : a.trace) {
      lines.push_back("#I  S-polynomial " + render(st.s_polynomial) + " has remainder " + render(st.remainder));
      lines.push_back("#I  new generator " + render(st.remainder.monic()) + " of degree " +
                      std::to_string(st.remainder.degree()));
    }
  }
  const auto mg = a.degree_monoid.minimal_generators();
  Json j{{"basis", polys_json(a.gens)},
         {"degrees", a.degrees()},
         {"minimal_generators", mg},
         {"content", a.degree_monoid.content()},
         {"numerical", a.is_numerical()}};
  if (o.show == "basis") {
    lines.push_back(render_list(a.gens));
  } else if (o.show == "generators") {
    lines.push_back(render_list(mg));
  } else {
    lines.push_back("basis: " + render_list(a.gens));
    lines.push_back("minimal generators: " + render_list(mg));
    if (a.is_numerical()) {
      const auto& s = a.degree_monoid.semigroup();
      lines.push_back("frobenius: " + std::to_string(s.frobenius()));
      lines.push_back("genus: " + std::to_string(s.genus()));
    } else {
      lines.push_back("content: " + std::to_string(a.degree_monoid.content()) + " (not numerical)");
    }
  }
  if (a.is_numerical()) j["semigroup"] = semigroup_json(a.degree_monoid.semigroup());
  if (o.verbose) {
    Json t = Json::array();
    for (const auto& st : a.trace) t.push_back({{"s_polynomial", render(st.s_polynomial)}, {"remainder", render(st.remainder)}});
    j["trace"] = t;
  }
  emit(out, o, j, lines);
  return kOk;
}

inline int cmd_module_basis(const Options& o, std::ostream& out) {
  if (o.algebra.empty() || o.gens.empty()) throw std::invalid_argument("module-basis: --algebra and --gens are required");
  AlgebraBasis a = compute_algebra_basis(parse_poly_list(o.algebra));
  ModuleBasis mb = compute_module_basis(parse_poly_list(o.gens), a);
  std::vector<std::string> lines;
  Json trace = Json::array();
  for (const auto& st : mb.trace) {
    if (o.verbose) {
      lines.push_back("#I  S-polynomial of " + render(st.first) + " and " + render(st.second) + ": " +
                      render(st.s_polynomial));
      if (st.remainder.is_zero()) {
        lines.push_back("#I  Reducing... 0");
      } else {
        lines.push_back("#I  new generator " + render(st.remainder) + " of degree " +
                        std::to_string(st.remainder.degree()));
      }
    }
    trace.push_back({{"first", render(st.first)},
                     {"second", render(st.second)},
                     {"alpha", st.alpha},
                     {"beta", st.beta},
                     {"s_polynomial", render(st.s_polynomial)},
                     {"remainder", render(st.remainder)}});
  }
  lines.push_back(render_list(mb.gens));
  Json j{{"algebra_basis", polys_json(a.gens)},
         {"basis", polys_json(mb.gens)},
         {"degree_ideal", mb.degree_ideal.minimal_generators()}};
  if (o.verbose) j["trace"] = trace;
  emit(out, o, j, lines);
  return kOk;
}

inline CurveParametrization curve_from(const Options& o, const char* verb) {
  if (o.x.empty() || o.y.empty()) throw std::invalid_argument(std::string(verb) + ": --x and --y are required");
  return CurveParametrization(parse_poly(o.x), parse_poly(o.y));
}

inline void report_lines(const DifferentialReport& r, std::vector<std::string>& lines, Json& j) {
  lines.push_back("algebra basis: " + render_list(r.algebra_basis));
  lines.push_back("semigroup: " + render_list(r.gamma.minimal_generators()));
  lines.push_back("differentials: " + render_list(r.differentials));
  lines.push_back("ideal: " + render_list(r.ideal.minimal_generators()));
  lines.push_back("non-exact: " + render_list(r.ne_set));
  lines.push_back("ne: " + std::to_string(r.ne));
  lines.push_back("milnor: " + std::to_string(r.mu));
  lines.push_back("tjurina: " + std::to_string(r.nu));
  lines.push_back(std::string("quasi-homogeneous: ") + (r.quasi_homogeneous ? "true" : "false"));
  j["m"] = r.m;
  j["n"] = r.n;
  j["algebra_basis"] = polys_json(r.algebra_basis);
  j["semigroup"] = semigroup_json(r.gamma);
  j["differentials"] = polys_json(r.differentials);
  j["ideal"] = r.ideal.minimal_generators();
  j["non_exact"] = r.ne_set;
  j["ne"] = r.ne;
  j["milnor"] = r.mu;
  j["tjurina"] = r.nu;
  j["quasi_homogeneous"] = r.quasi_homogeneous;
  if (r.free) {
    j["free"] = Json{{"arrangement", r.free->arrangement}, {"d", r.free->d}, {"e", r.free->e}};
  } else {
    j["free"] = nullptr;
    j["freeness_issue"] = r.freeness_issue;
  }
}

inline int cmd_kahler(const Options& o, std::ostream& out) {
  DifferentialReport r = curve_invariants(curve_from(o, "kahler"));
  std::vector<std::string> lines;
  Json j;
  report_lines(r, lines, j);
  emit(out, o, j, lines);
  return kOk;
}

inline int cmd_normalize(const Options& o, std::ostream& out) {
  CurveParametrization p = curve_from(o, "normalize");
  NormalFormOutcome nf = normal_form(p, o.precision);
  std::vector<std::string> lines{"outcome: " + to_string(nf.kind)};
  Json j{{"outcome", to_string(nf.kind)}};
  j["witness_degree"] = nf.witness_degree ? Json(*nf.witness_degree) : Json(nullptr);
  if (nf.witness_degree) lines.push_back("witness degree: " + std::to_string(*nf.witness_degree));
  Json steps = Json::array();
  std::size_t k = 0;
  for (const auto& st : nf.steps) {
    const bool shift = st.move == NormalFormStep::Move::shift_y;
    std::string line = "step " + std::to_string(++k) + ": w = " + render(st.w_before) +
                       ", lambda = " + std::to_string(st.lambda) + ", c = " + to_string(st.c_lambda);
    line += shift ? ", Y <- Y + " + to_string(st.amount)
                  : ", X <- X - (" + to_string(st.amount) + ")*Y^" + std::to_string(st.power);
    if (o.verbose) lines.push_back(line);
    steps.push_back({{"move", shift ? "shift_y" : "subtract_power"},
                     {"lambda", st.lambda},
                     {"c_lambda", to_string(st.c_lambda)},
                     {"amount", to_string(st.amount)},
                     {"power", st.power},
                     {"w_before", render(st.w_before)},
                     {"x_after", render(st.x_after)},
                     {"y_after", render(st.y_after)}});
  }
  lines.push_back("moves: " + std::to_string(nf.steps.size()));
  lines.push_back("x: " + render(nf.x));
  lines.push_back("y: " + render(nf.y));
  lines.push_back("w: " + render(nf.w));
  j["steps"] = steps;
  j["x"] = render(nf.x);
  j["y"] = render(nf.y);
  j["w"] = render(nf.w);
  if (nf.lambda) {
    j["lambda"] = *nf.lambda;
    j["c_lambda"] = to_string(nf.c_lambda);
  }
  emit(out, o, j, lines);
  return nf.kind == NormalFormOutcome::Kind::precision_exhausted ? kPrecisionExhausted : kOk;
}

inline int cmd_ideal(const Options& o, std::ostream& out) {
  if (o.semigroup.empty() || o.gens.empty()) throw std::invalid_argument("ideal: --semigroup and --gens are required");
  NumericalSemigroup s(parse_int_list(o.semigroup));
  std::vector<Int> gens = parse_int_list(o.gens);
  if (gens.empty()) throw std::invalid_argument("ideal: empty generator list");
  Json j{{"semigroup", s.minimal_generators()}, {"op", o.op}};
  std::vector<std::string> lines;
  if (o.op == "relators") {
    if (gens.size() != 2) throw std::invalid_argument("ideal: relators needs exactly two generators");
    auto rs = pair_relators(gens[0], gens[1], s);
    lines.push_back(rel_string(rs));
    Json a = Json::array();
    for (auto [x, y] : rs) a.push_back({x, y});
    j["relators"] = a;
    emit(out, o, j, lines);
    return kOk;
  }
  RelativeIdeal ideal(s, gens);
  j["minimal_generators"] = ideal.minimal_generators();
  if (o.op == "minimal") {
    lines.push_back(render_list(ideal.minimal_generators()));
  } else if (o.op == "kernel") {
    Json a = Json::array();
    const auto& a_i = ideal.minimal_generators();
    for (const auto& k : kernel_generators(ideal)) {
      lines.push_back("t^" + std::to_string(k.alpha) + "*e" + std::to_string(k.i + 1) + " - t^" +
                      std::to_string(k.beta) + "*e" + std::to_string(k.j + 1) + "  (" + std::to_string(a_i[k.i]) +
                      "+" + std::to_string(k.alpha) + " = " + std::to_string(a_i[k.j]) + "+" +
                      std::to_string(k.beta) + ")");
      a.push_back({{"i", k.i}, {"j", k.j}, {"alpha", k.alpha}, {"beta", k.beta}});
    }
    j["kernel"] = a;
  } else if (o.op == "over") {
    Json a = Json::array();
    for (const auto& oi : over_ideals(ideal)) {
      auto ne = non_exact_set(oi, s);
      lines.push_back(render_list(oi.minimal_generators()) + "  non-exact " + render_list(ne));
      a.push_back({{"minimal_generators", oi.minimal_generators()}, {"non_exact", ne}});
    }
    j["over_ideals"] = a;
  } else if (o.op == "intersect") {
    if (o.other.empty()) throw std::invalid_argument("ideal: intersect needs --other");
    RelativeIdeal meet = intersect(ideal, RelativeIdeal(s, parse_int_list(o.other)));
    lines.push_back(render_list(meet.minimal_generators()));
    j["intersection"] = meet.minimal_generators();
  } else {
    throw std::invalid_argument("ideal: unknown --op '" + o.op + "'");
  }
  emit(out, o, j, lines);
  return kOk;
}

inline int cmd_classify(const Options& o, std::ostream& out) {
  CurveParametrization p = curve_from(o, "classify");
  DifferentialReport r = curve_invariants(p);
  std::vector<std::string> lines;
  Json j;
  report_lines(r, lines, j);
  DeltaSequence ds = delta_sequence(r.gamma, p.m(), p.n());
  Classification c = classify_curve(r, ds);
  lines.push_back("arrangement: " + render_list(ds.free.arrangement));
  lines.push_back("puiseux: " + render_list(ds.puiseux));
  lines.push_back("family: " + c.family);
  if (!c.ne_set_pattern.empty()) lines.push_back("pattern: " + c.ne_set_pattern);
  for (const auto& v : c.violations) lines.push_back("violation: " + v);
  j["arrangement"] = ds.free.arrangement;
  j["puiseux"] = ds.puiseux;
  j["family"] = c.family;
  j["pattern"] = c.ne_set_pattern;
  j["violations"] = c.violations;
  emit(out, o, j, lines);
  return kOk;
}

}  // namespace detail

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

namespace detail {

inline int run_batch(std::istream& in, std::ostream& out, std::ostream& err) {
  int worst = kOk;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    std::vector<std::string> words;
    try {
      words = split_words(line);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      worst = std::max(worst, kInputError);
      continue;
    }
    if (!words.empty() && words.front() == "batch") {
      err << "error: nested batch\n";
      worst = std::max(worst, kInputError);
      continue;
    }
    worst = std::max(worst, run(words, in, out, err));
  }
  return worst;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degrees of polynomial subalgebras, modules and Kahler differentials of plane curves", "kahlerdeg"};
  app.require_subcommand(1);
  Options o;
  auto common = [&o](CLI::App* sub) {
    sub->add_flag("--json", o.json, "Machine-readable output");
    sub->add_flag("--verbose", o.verbose, "Print per-step traces");
  };
  auto* sg = app.add_subcommand("semigroup", "Basis of K[f1,...,fs] and its degree monoid");
  sg->add_option("--gens", o.gens, "Comma-separated polynomials in t");
  sg->add_option("--degrees", o.degrees, "Comma-separated generators of a monoid");
  sg->add_option("--show", o.show, "basis | generators | all");
  common(sg);
  auto* mb = app.add_subcommand("module-basis", "Basis of F1 A + ... + Fr A");
  mb->add_option("--algebra", o.algebra, "Generators of A")->required();
  mb->add_option("--gens", o.gens, "Generators of the module")->required();
  common(mb);
  auto* kh = app.add_subcommand("kahler", "Differentials, non-exact set, Milnor and Tjurina numbers");
  kh->add_option("--x", o.x, "x(t)")->required();
  kh->add_option("--y", o.y, "y(t)")->required();
  common(kh);
  auto* nf = app.add_subcommand("normalize", "Normal form moves and the non-exact witness");
  nf->add_option("--x", o.x, "x(t)")->required();
  nf->add_option("--y", o.y, "y(t)")->required();
  nf->add_option("--precision", o.precision, "Deepest truncation exponent (negative)");
  common(nf);
  auto* id = app.add_subcommand("ideal", "Relative ideals of a numerical semigroup");
  id->add_option("--semigroup", o.semigroup, "Generators of S")->required();
  id->add_option("--gens", o.gens, "Generators of the ideal")->required();
  id->add_option("--op", o.op, "minimal | kernel | over | relators | intersect");
  id->add_option("--other", o.other, "Second ideal for intersect");
  common(id);
  auto* cl = app.add_subcommand("classify", "Delta sequence and admissible non-exact shapes");
  cl->add_option("--x", o.x, "x(t)")->required();
  cl->add_option("--y", o.y, "y(t)")->required();
  common(cl);
  app.add_subcommand("batch", "Read one command per line from stdin");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  CLI::App* sub = app.get_subcommands().front();
  const std::string verb = sub->get_name();
  try {
    if (verb == "batch") return detail::run_batch(in, out, err);
    if (verb == "semigroup") return detail::cmd_semigroup(o, out);
    if (verb == "module-basis") return detail::cmd_module_basis(o, out);
    if (verb == "kahler") return detail::cmd_kahler(o, out);
    if (verb == "normalize") return detail::cmd_normalize(o, out);
    if (verb == "ideal") return detail::cmd_ideal(o, out);
    if (verb == "classify") return detail::cmd_classify(o, out);
  } catch (const ParseError& e) {
    err << "error: parse error at position " << e.position() << ": " << e.what() << '\n';
    return kInputError;
  } catch (const PrecisionError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecisionExhausted;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  err << "error: unknown verb\n";
  return kInputError;
}

}  // namespace kahlerdeg::cli
