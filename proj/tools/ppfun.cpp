// Command-line front end: formulas, modules, functor tables and the check registry.
//
// Exit codes: 0 success, 1 failed check / assertion / invalid input, 2 usage error.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ppfun/ppfun.hpp"

namespace {

using json = nlohmann::json;
using namespace ppfun;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Session {
  std::optional<std::uint32_t> p;
  bool json = false;
  std::uint64_t seed = 0;
  std::string sizes;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool use_color() { return std::getenv("NO_COLOR") == nullptr && isatty(fileno(stdout)); }

std::string paint(const std::string& s, bool ok) {
  if (!use_color()) return s;
  return std::string(ok ? "\033[32m" : "\033[31m") + s + "\033[0m";
}

PrimeField session_field(const Session& s) {
  const std::uint32_t p = s.p.value_or(2);
  if (p < 2 || p > 97 || !is_prime(p)) throw UsageError("--p must be a prime between 2 and 97");
  return PrimeField(p);
}

/// The algebra from a file, or the prime field when no file is given.
AlgebraPtr session_algebra(const Session& s, const std::string& path) {
  if (path.empty()) return algebras::field(session_field(s));
  AlgebraPtr a = io::load_algebra(path);
  if (s.p && *s.p != a->field().prime())
    throw UsageError("--p " + std::to_string(*s.p) + " disagrees with " + path + " (p = " +
                     std::to_string(a->field().prime()) + ")");
  return a;
}

Side parse_side(const std::string& s) {
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  throw UsageError("--side must be left or right");
}

PpFormula parse_formula(const std::string& what, const std::string& text, const AlgebraPtr& alg, Side side,
                        std::optional<std::size_t> arity = std::nullopt) {
  try {
    return parse_pp(text, alg, side, arity);
  } catch (const ParseError& e) {
    throw ParseError(what + " '" + text + "': " + std::string(e.what()).substr(0, std::string(e.what()).rfind(" at position")),
                     e.position());
  }
}

/// Parses phi and psi with a common arity.
std::pair<PpFormula, PpFormula> parse_two(const std::string& phi, const std::string& psi, const AlgebraPtr& alg, Side side) {
  const std::size_t n = std::max(parse_formula("phi", phi, alg, side).n(), parse_formula("psi", psi, alg, side).n());
  return {parse_formula("phi", phi, alg, side, n), parse_formula("psi", psi, alg, side, n)};
}

std::string row_text(const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

void print(const Session& s, const json& j, const std::string& text) {
  if (s.json) std::cout << io::dump(j);
  else std::cout << text;
}

// ---------------------------------------------------------------------------
// pp

int cmd_pp_eval(const Session& s, const std::string& alg_path, const std::string& mod_path, const std::string& text) {
  const AlgebraPtr alg = session_algebra(s, alg_path);
  const Module m = io::load_module(mod_path, alg);
  const PpFormula phi = parse_formula("formula", text, alg, m.side());
  const Subspace sol = solution_set(phi, m);
  std::ostringstream os;
  os << "dim " << sol.dim() << "\n";
  for (std::size_t i = 0; i < sol.dim(); ++i) os << "  " << row_text(sol.vector(i)) << "\n";
  json j = io::subspace_to_json(sol);
  j["formula"] = io::formula_to_json(phi);
  j["module_dim"] = m.dim();
  print(s, j, os.str());
  return kOk;
}

int cmd_pp_dual(const Session& s, const std::string& alg_path, const std::string& text, const std::string& side_name,
                bool selfcheck) {
  const AlgebraPtr alg = session_algebra(s, alg_path);
  const Side side = parse_side(side_name);
  const PpFormula phi = parse_formula("formula", text, alg, side);
  const PpFormula dphi = simplify(dual_formula(phi));
  const std::string out = unparse_pp(dphi);
  json j = io::formula_to_json(dphi);
  std::string report = out + "\n";
  int rc = kOk;
  if (selfcheck) {
    // Reparse the printed dual, dualize again and compare with phi on sampled modules.
    const PpFormula back = dual_formula(parse_formula("dual", out, alg, opposite(side), phi.n()));
    verify::Rng rng(verify::instance_seed(s.seed, 0));
    const std::size_t samples = 20;
    std::size_t bad = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      const Module m = verify::random_module(rng, alg, side, 6);
      if (solution_set(phi, m) != solution_set(back, m)) ++bad;
    }
    j["selfcheck"] = {{"modules", samples}, {"mismatches", bad}};
    report += "selfcheck: " + std::to_string(samples) + " modules, " + std::to_string(bad) + " mismatches " +
              paint(bad == 0 ? "PASS" : "FAIL", bad == 0) + "\n";
    if (bad) rc = kFail;
  }
  print(s, j, report);
  return rc;
}

int cmd_pp_implies(const Session& s, const std::string& alg_path, const std::string& phi_text, const std::string& psi_text,
                   const std::string& side_name) {
  const AlgebraPtr alg = session_algebra(s, alg_path);
  const auto [phi, psi] = parse_two(phi_text, psi_text, alg, parse_side(side_name));
  const bool r = implies(phi, psi);
  print(s, {{"implies", r}}, r ? "true\n" : "false\n");
  return kOk;
}

// ---------------------------------------------------------------------------
// module

std::vector<Module> load_modules(const AlgebraPtr& alg, const std::vector<std::string>& paths, std::size_t count) {
  if (paths.size() != count) throw UsageError("expected " + std::to_string(count) + " module file(s)");
  std::vector<Module> out;
  for (const auto& p : paths) out.push_back(io::load_module(p, alg));
  return out;
}

std::string describe(const Module& m) { return std::string(to_string(m.side())) + " module, dim " + std::to_string(m.dim()); }

int cmd_module(const Session& s, const std::string& op, const std::string& alg_path, const std::vector<std::string>& paths,
               std::size_t degree) {
  const AlgebraPtr alg = session_algebra(s, alg_path);
  if (op == "validate") {
    const Module m = load_modules(alg, paths, 1)[0];
    print(s, {{"valid", true}, {"side", to_string(m.side())}, {"dim", m.dim()}}, "valid " + describe(m) + "\n");
  } else if (op == "dual") {
    std::cout << io::dump(io::module_to_json(dual_module(load_modules(alg, paths, 1)[0])));
  } else if (op == "hom") {
    const auto ms = load_modules(alg, paths, 2);
    const HomSpace h = hom_space(ms[0], ms[1]);
    json basis = json::array();
    for (std::size_t k = 0; k < h.dim(); ++k) basis.push_back(io::detail::from_matrix(h.map(k).matrix()));
    print(s, {{"dim", h.dim()}, {"basis", basis}}, "dim " + std::to_string(h.dim()) + "\n");
  } else if (op == "tensor") {
    const auto ms = load_modules(alg, paths, 2);
    const TensorSpace t = tensor_over_R(ms[0], ms[1]);
    print(s, {{"dim", t.dim()}, {"ambient_dim", t.ambient_dim()}, {"relations", io::subspace_to_json(t.relations())}},
          "dim " + std::to_string(t.dim()) + "\n");
  } else if (op == "ext") {
    const auto ms = load_modules(alg, paths, 2);
    const auto dims = ext_dims(ms[0], ms[1], degree);
    std::string text;
    for (std::size_t k = 0; k < dims.size(); ++k) text += "Ext^" + std::to_string(k) + " " + std::to_string(dims[k]) + "\n";
    print(s, {{"ext", dims}}, text);
  } else if (op == "tau") {
    const Module n = load_modules(alg, paths, 1)[0];
    const TransposeTau t = transpose_and_tau(n);
    print(s, {{"projective", t.input_projective}, {"tr", io::module_to_json(t.tr)}, {"tau", io::module_to_json(t.tau)}},
          "Tr: " + describe(t.tr) + "\ntau: " + describe(t.tau) + "\n");
  } else {
    throw UsageError("unknown module operation '" + op + "'");
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// functor

const std::vector<std::string> kKinds = {"pp", "ann", "dual", "predual", "presentation", "dF", "dpp"};

int cmd_functor_eval(const Session& s, const std::string& alg_path, const std::string& phi_text,
                     const std::string& psi_text, const std::string& side_name, const std::vector<std::string>& kinds,
                     const std::vector<std::string>& paths, bool assert_equal) {
  for (const auto& k : kinds)
    if (std::find(kKinds.begin(), kKinds.end(), k) == kKinds.end()) throw UsageError("unknown functor kind '" + k + "'");
  const AlgebraPtr alg = session_algebra(s, alg_path);
  const Side side = parse_side(side_name);
  const auto [phi, psi] = parse_two(phi_text, psi_text, alg, side);
  const PpPair pair = make_pair(phi, psi);
  const PpPair dpair = make_pair(dual_formula(psi), dual_formula(phi));
  const PairPresentation pres = pair_to_presentation(pair);
  const PairPresentation dpres = pair_to_presentation(dpair);

  auto cell = [&](const std::string& kind, const Module& m) -> std::optional<std::size_t> {
    const bool same = m.side() == side;
    if (kind == "pp") return same ? std::optional(eval_pp_pair(pair, m).dim()) : std::nullopt;
    if (kind == "ann") return same ? std::optional(annihilator_eval(pair, m).dim()) : std::nullopt;
    if (kind == "dual") return same ? std::optional(dual_functor_eval(pres.functor, m).dim()) : std::nullopt;
    if (kind == "presentation") return same ? std::optional(eval_presentation(pres.functor, m).dim()) : std::nullopt;
    if (kind == "predual") return same ? std::optional(predual_eval(dpres.functor, m).dim()) : std::nullopt;
    if (kind == "dF")
      return !same && side == Side::left ? std::optional(d_functor_eval(pres.functor, m).dim()) : std::nullopt;
    return !same ? std::optional(eval_pp_pair(dpair, m).dim()) : std::nullopt;  // dpp
  };

  // Columns that must agree: values on the pair's side, and dF against the dual pair.
  auto group = [](const std::string& k) { return k == "dF" || k == "dpp" ? 1 : 0; };

  std::vector<std::string> columns = {"module"};
  columns.insert(columns.end(), kinds.begin(), kinds.end());
  std::vector<std::vector<std::string>> rows;
  json jrows = json::array();
  std::size_t disagreements = 0;
  for (const auto& path : paths) {
    const Module m = io::load_module(path, alg);
    std::vector<std::string> row = {std::filesystem::path(path).filename().string()};
    json jr = {{"module", path}, {"side", to_string(m.side())}, {"dim", m.dim()}};
    std::map<int, std::optional<std::size_t>> seen;
    bool agree = true;
    for (const auto& k : kinds) {
      const auto v = cell(k, m);
      row.push_back(v ? std::to_string(*v) : "side");
      jr[k] = v ? json(*v) : json("side mismatch");
      if (!v) continue;
      auto& first = seen[group(k)];
      if (!first) first = v;
      else if (*first != *v) agree = false;
    }
    if (assert_equal) {
      jr["agree"] = agree;
      row.push_back(agree ? "ok" : "DIFFER");
      if (!agree) ++disagreements;
    }
    rows.push_back(row);
    jrows.push_back(jr);
  }
  if (assert_equal) columns.push_back("assert");

  std::vector<std::size_t> w(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) w[c] = columns[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) w[c] = std::max(w[c], r[c].size());
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c == 0) os << r[c] << std::string(w[c] - r[c].size(), ' ');
      else os << "  " << std::string(w[c] - r[c].size(), ' ') << r[c];
    }
    os << "\n";
  };
  line(columns);
  for (const auto& r : rows) line(r);
  if (assert_equal)
    os << "assert: " << paint(disagreements == 0 ? "PASS" : "FAIL", disagreements == 0) << " (" << disagreements
       << " rows differ)\n";

  json j = {{"phi", io::formula_to_json(phi)}, {"psi", io::formula_to_json(psi)}, {"kinds", kinds}, {"rows", jrows}};
  if (assert_equal) j["passed"] = disagreements == 0;
  print(s, j, os.str());
  return assert_equal && disagreements ? kFail : kOk;
}

// ---------------------------------------------------------------------------
// check

int cmd_check(const Session& s, const std::string& name) {
  if (name != "all" && !verify::is_registered(name)) {
    std::string known;
    for (const auto& n : verify::check_names()) known += " " + n;
    throw UsageError("unknown check '" + name + "'; known checks: all" + known);
  }
  const verify::Sizes sizes = s.sizes.empty() ? verify::Sizes{} : verify::parse_sizes(s.sizes);
  const std::vector<std::string> names = name == "all" ? verify::check_names() : std::vector<std::string>{name};
  std::size_t passed = 0;
  json reports = json::array();
  std::string text;
  for (const auto& n : names) {
    verify::CheckSpec spec;
    spec.name = n;
    spec.seed = s.seed;
    spec.sizes = sizes;
    spec.p = session_field(s).prime();
    const verify::CheckReport r = verify::run_check(spec);
    if (r.passed()) ++passed;
    reports.push_back(verify::report_to_json(r));
    std::string t = verify::report_to_text(r);
    const std::string tag = r.passed() ? "PASS" : "FAIL";
    const auto at = t.find(tag);
    if (at != std::string::npos) t.replace(at, tag.size(), paint(tag, r.passed()));
    text += t + "\n";
  }
  text += std::to_string(names.size()) + " checks, " + std::to_string(passed) + " passed\n";
  print(s, {{"reports", reports}, {"checks", names.size()}, {"passed", passed}}, text);
  return passed == names.size() ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with pp formulas, modules and finitely presented functors over GF(p)"};
  app.require_subcommand(1);
  app.fallthrough();
  Session s;
  app.add_option("--p", s.p, "prime field characteristic (2..97); default 2 or the algebra file's p");
  app.add_flag("--json", s.json, "machine-readable output");

  std::function<int()> action;

  // pp
  auto* pp = app.add_subcommand("pp", "pp formulas");
  pp->require_subcommand(1);
  std::string alg_path, mod_path, formula, phi, psi, side = "left";
  bool selfcheck = false;

  auto* pp_eval = pp->add_subcommand("eval", "solution set of a formula in a module");
  pp_eval->add_option("--algebra", alg_path, "algebra JSON file");
  pp_eval->add_option("--module", mod_path, "module JSON file")->required();
  pp_eval->add_option("formula", formula, "formula text")->required();
  pp_eval->callback([&] { action = [&] { return cmd_pp_eval(s, alg_path, mod_path, formula); }; });

  auto* pp_dual = pp->add_subcommand("dual", "dual formula D(phi)");
  pp_dual->add_option("--algebra", alg_path, "algebra JSON file");
  pp_dual->add_option("--side", side, "side of the input formula")->check(CLI::IsMember({"left", "right"}));
  pp_dual->add_flag("--selfcheck", selfcheck, "reparse, dualize again and compare on sampled modules");
  pp_dual->add_option("--seed", s.seed, "seed for --selfcheck");
  pp_dual->add_option("formula", formula, "formula text")->required();
  pp_dual->callback([&] { action = [&] { return cmd_pp_dual(s, alg_path, formula, side, selfcheck); }; });

  auto* pp_implies = pp->add_subcommand("implies", "whether phi implies psi in every module");
  pp_implies->add_option("--algebra", alg_path, "algebra JSON file");
  pp_implies->add_option("--side", side, "side of the formulas")->check(CLI::IsMember({"left", "right"}));
  pp_implies->add_option("phi", phi, "formula text")->required();
  pp_implies->add_option("psi", psi, "formula text")->required();
  pp_implies->callback([&] { action = [&] { return cmd_pp_implies(s, alg_path, phi, psi, side); }; });

  // module
  auto* mod = app.add_subcommand("module", "module operations");
  mod->require_subcommand(1);
  std::vector<std::string> paths;
  std::size_t degree = 1;
  const std::vector<std::tuple<const char*, const char*, const char*>> module_ops = {
      {"validate", "check the module axioms", "MODULE"},
      {"dual", "print the dual module as JSON", "MODULE"},
      {"hom", "Hom(M, N)", "M N"},
      {"tensor", "N (x)_R M for a right module N and a left module M", "N M"},
      {"ext", "Ext^k(N, M) for k up to --degree", "N M"},
      {"tau", "transpose and AR translate", "N"},
  };
  for (const auto& [name, help, args] : module_ops) {
    auto* sub = mod->add_subcommand(name, help);
    sub->add_option("--algebra", alg_path, "algebra JSON file")->required();
    sub->add_option("modules", paths, std::string("module JSON files: ") + args)->required();
    if (std::string(name) == "ext") sub->add_option("--degree", degree, "largest degree (default 1)");
    const std::string op = name;
    sub->callback([&, op] { action = [&, op] { return cmd_module(s, op, alg_path, paths, degree); }; });
  }

  // functor
  auto* fun = app.add_subcommand("functor", "functor evaluation tables");
  fun->require_subcommand(1);
  std::vector<std::string> kinds = {"pp", "ann", "dual"};
  bool assert_equal = false;
  auto* fun_eval = fun->add_subcommand("eval", "dimension table of phi/psi evaluators over modules");
  fun_eval->add_option("--algebra", alg_path, "algebra JSON file");
  fun_eval->add_option("--phi", phi, "formula text")->required();
  fun_eval->add_option("--psi", psi, "formula text")->required();
  fun_eval->add_option("--side", side, "side of the pair")->check(CLI::IsMember({"left", "right"}));
  fun_eval->add_option("--kinds", kinds, "comma-separated: pp,ann,dual,predual,presentation,dF,dpp")->delimiter(',');
  fun_eval->add_flag("--assert", assert_equal, "fail unless the columns that must agree do");
  fun_eval->add_option("modules", paths, "module JSON files")->required();
  fun_eval->callback([&] {
    action = [&] { return cmd_functor_eval(s, alg_path, phi, psi, side, kinds, paths, assert_equal); };
  });

  // check
  auto* chk = app.add_subcommand("check", "run a registered check, or all of them");
  std::string check_name;
  chk->add_option("name", check_name, "check name or 'all'")->required();
  chk->add_option("--seed", s.seed, "base seed (default 0)");
  chk->add_option("--sizes", s.sizes, "alg=6,mod=8,arity=4,samples=50");
  chk->callback([&] { action = [&] { return cmd_check(s, check_name); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const CheckError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
}
