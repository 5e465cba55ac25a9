#pragma once

/**
 * @file verify.hpp
 * @brief Seeded random instances and the registry of named checks.
 *
 * Instance i of a run is generated from its own generator seeded by
 * (seed, i), so every check that draws instance i sees the same algebra,
 * modules and pp pair.
 */

#include <algorithm>
#include <cctype>
#include <functional>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ppfun/algebra.hpp"
#include "ppfun/errors.hpp"
#include "ppfun/exactlin.hpp"
#include "ppfun/functor.hpp"
#include "ppfun/homological.hpp"
#include "ppfun/io.hpp"
#include "ppfun/module.hpp"
#include "ppfun/pp.hpp"

namespace ppfun::verify {

using json = nlohmann::json;

struct Sizes {
  std::size_t max_algebra_dim = 6;
  std::size_t max_module_dim = 8;
  std::size_t max_arity = 4;  ///< n + m per formula
  std::size_t samples = 50;
};

/// Parses "alg=6,mod=8,arity=4,samples=50"; omitted keys keep their defaults.
inline Sizes parse_sizes(const std::string& text) {
  Sizes s;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw CheckError("sizes: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    std::size_t value = 0;
    try {
      const std::string digits = item.substr(eq + 1);
      if (digits.empty() || !std::isdigit(static_cast<unsigned char>(digits[0]))) throw std::invalid_argument("sign");
      std::size_t used = 0;
      value = std::stoul(digits, &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw CheckError("sizes: value of '" + key + "' must be a nonnegative integer");
    }
    if (key == "alg") s.max_algebra_dim = value;
    else if (key == "mod") s.max_module_dim = value;
    else if (key == "arity") s.max_arity = value;
    else if (key == "samples") s.samples = value;
    else throw CheckError("sizes: unknown key '" + key + "' (expected alg, mod, arity, samples)");
  }
  if (s.max_algebra_dim < 1) throw CheckError("sizes: alg must be at least 1");
  if (s.max_arity < 1) throw CheckError("sizes: arity must be at least 1");
  return s;
}

inline json sizes_to_json(const Sizes& s) {
  return {{"alg", s.max_algebra_dim}, {"mod", s.max_module_dim}, {"arity", s.max_arity}, {"samples", s.samples}};
}

/// Replaceable pieces, for mutation testing of the checks themselves.
struct Hooks {
  std::function<PpFormula(const PpFormula&)> dual = [](const PpFormula& f) { return dual_formula(f); };
};

struct CheckSpec {
  std::string name;
  std::uint64_t seed = 0;
  Sizes sizes;
  std::uint32_t p = 2;
  Hooks hooks;
};

struct CheckReport {
  std::string name;
  std::uint64_t seed = 0;
  Sizes sizes;
  std::uint32_t p = 2;
  std::size_t instances_run = 0;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> dims_table;
  std::vector<json> failures;

  bool passed() const { return failures.empty(); }
};

// ---------------------------------------------------------------------------
// Random instances

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(g_() % n); }
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 g_;
};

inline std::uint64_t instance_seed(std::uint64_t seed, std::size_t index) {
  // splitmix64 of a combination of the two
  std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + index + 0x632BE59BD9B4E019ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

struct NamedAlgebra {
  std::string name;
  AlgebraPtr algebra;
};

/// The fixed generator family, restricted to dimension <= max_dim.
inline std::vector<NamedAlgebra> algebra_family(PrimeField f, std::size_t max_dim) {
  std::vector<NamedAlgebra> all = {
      {"K", algebras::field(f)},
      {"K[eps]", algebras::dual_numbers(f)},
      {"GF(p^2)", algebras::quadratic_extension(f)},
      {"K[x]/x^3", algebras::truncated_polynomial(f, 3)},
      {"K[x,y]/m^2", algebras::square_zero_plane(f)},
      {"A2", algebras::linear_quiver(f, 2)},
      {"A3/rel", algebras::linear_quiver(f, 3, true)},
      {"A3", algebras::linear_quiver(f, 3)},
      {"A3-sink", algebras::a3_sink(f)},
      {"K[x]/(x^2-x)", algebras::monogenic2(f, 1, 0)},
  };
  std::vector<NamedAlgebra> out;
  for (auto& a : all)
    if (a.algebra->dim() <= max_dim) out.push_back(std::move(a));
  return out;
}

inline Vec random_vector(Rng& rng, const PrimeField& f, std::size_t n) {
  Vec v(n);
  for (auto& x : v) x = static_cast<std::uint32_t>(rng.below(f.prime()));
  return v;
}

inline std::uint32_t random_nonzero(Rng& rng, const PrimeField& f) {
  return static_cast<std::uint32_t>(1 + rng.below(f.prime() - 1));
}

inline Vec random_element(Rng& rng, const Algebra& a) {
  switch (rng.below(4)) {
    case 0:
      return a.zero();
    case 1: {
      Vec v = a.basis_element(rng.below(a.dim()));
      const std::uint32_t c = random_nonzero(rng, a.field());
      for (auto& x : v) x = a.field().mul(x, c);
      return v;
    }
    case 2:
      return a.unit();
    default:
      return random_vector(rng, a.field(), a.dim());
  }
}

/// Mostly sparse vectors (one or two nonzero entries), sometimes dense.
inline Vec random_generator(Rng& rng, const PrimeField& f, std::size_t n) {
  if (n == 0) return {};
  if (rng.below(4) == 0) return random_vector(rng, f, n);
  Vec v(n, 0);
  const std::size_t k = 1 + rng.below(2);
  for (std::size_t i = 0; i < k; ++i) v[rng.below(n)] = random_nonzero(rng, f);
  return v;
}

/// Random module of dimension <= max_dim from submodules and quotients of free modules.
/// The zero module is drawn only occasionally, or when nothing nonzero fits in max_dim.
inline Module random_module(Rng& rng, const AlgebraPtr& alg, Side side, std::size_t max_dim) {
  if (max_dim == 0) return Module::zero(alg, side);
  const PrimeField& f = alg->field();
  const bool allow_zero = rng.below(12) == 0;
  auto gens = [&](std::size_t count, std::size_t n) {
    std::vector<Vec> g;
    for (std::size_t i = 0; i < count; ++i) g.push_back(random_generator(rng, f, n));
    return g;
  };
  for (int attempt = 0; attempt < 64; ++attempt) {
    const std::size_t kind = rng.below(max_dim >= 2 ? 5 : 4);
    const std::size_t rk = 1 + rng.below(2);
    const Module free = free_module(alg, side, rk);
    Module m;
    switch (kind) {
      case 0:
        m = free_module(alg, side, 1);
        break;
      case 1:
        m = quotient_module(free, generated_subspace(free, gens(1 + rng.below(2), free.dim()))).module;
        break;
      case 2:
        m = submodule(free, generated_subspace(free, gens(1 + rng.below(2), free.dim()))).module;
        break;
      case 3: {
        const SubmoduleResult s = submodule(free, generated_subspace(free, gens(1 + rng.below(2), free.dim())));
        m = quotient_module(s.module, generated_subspace(s.module, gens(1, s.module.dim()))).module;
        break;
      }
      default: {
        const Module a = random_module(rng, alg, side, max_dim / 2);
        const Module b = random_module(rng, alg, side, max_dim - max_dim / 2);
        m = direct_sum(a, b);
        break;
      }
    }
    if (m.dim() <= max_dim && (m.dim() > 0 || allow_zero)) return m;
  }
  if (allow_zero) return Module::zero(alg, side);
  // fall back to a cyclic quotient of R by a large random submodule
  const Module r = free_module(alg, side, 1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    const Module m = quotient_module(r, generated_subspace(r, gens(1 + rng.below(alg->dim()), alg->dim()))).module;
    if (m.dim() <= max_dim && m.dim() > 0) return m;
  }
  // e.g. max_dim = 1 over GF(4): no nonzero module fits
  return Module::zero(alg, side);
}

inline PpFormula random_formula(Rng& rng, const AlgebraPtr& alg, Side side, std::size_t n, std::size_t max_arity,
                                bool allow_bound = true) {
  const std::size_t m = allow_bound && max_arity > n ? rng.below(max_arity - n + 1) : 0;
  const std::size_t l = rng.below(3);
  AlgMatrix a(*alg, l, n), b(*alg, l, m);
  for (auto& e : a.entries) e = random_element(rng, *alg);
  for (auto& e : b.entries) e = random_element(rng, *alg);
  return drop_zero_rows(PpFormula(alg, side, n, m, std::move(a), std::move(b)));
}

/// A valid pair by rejection sampling, falling back to psi = phi & (x-only rows).
inline PpPair random_pair(Rng& rng, const AlgebraPtr& alg, Side side, std::size_t max_arity) {
  const std::size_t n = 1 + rng.below(std::min<std::size_t>(2, max_arity));
  const PpFormula phi = rng.below(6) == 0 ? PpFormula::tautology(alg, side, n) : random_formula(rng, alg, side, n, max_arity);
  for (int attempt = 0; attempt < 6; ++attempt) {
    const std::size_t kind = rng.below(3);
    PpFormula psi = kind == 0 ? PpFormula::zero(alg, side, n) : random_formula(rng, alg, side, n, max_arity);
    if (implies(psi, phi)) return make_pair(phi, psi);
  }
  const PpFormula extra = random_formula(rng, alg, side, n, max_arity, false);
  return make_pair(phi, conjunction(phi, extra));
}

inline ModuleMap random_map(Rng& rng, const Module& s, const Module& t) {
  const HomSpace h = hom_space(s, t);
  return ModuleMap(s, t, h.element(random_vector(rng, s.field(), h.dim())));
}

struct Instance {
  std::string algebra_name;
  AlgebraPtr algebra;
  Side side = Side::left;
  Module m, n;   ///< on `side`
  Module other;  ///< on the opposite side
  PpPair pair;   ///< on `side`
  std::vector<ModuleMap> maps;  ///< three maps among m and n
};

/// Instance `index` of the stream for `seed`; `force_side` pins the side.
inline Instance gen_random_instance(std::uint64_t seed, std::size_t index, const Sizes& sizes, PrimeField f,
                                    std::optional<Side> force_side = std::nullopt) {
  Rng rng(instance_seed(seed, index));
  const auto family = algebra_family(f, sizes.max_algebra_dim);
  if (family.empty()) throw CheckError("no algebra of dimension <= " + std::to_string(sizes.max_algebra_dim));
  Instance in;
  const NamedAlgebra& na = family[rng.below(family.size())];
  in.algebra_name = na.name;
  in.algebra = na.algebra;
  const Side drawn = rng.coin() ? Side::right : Side::left;
  in.side = force_side.value_or(drawn);
  in.m = random_module(rng, in.algebra, in.side, sizes.max_module_dim);
  in.n = random_module(rng, in.algebra, in.side, sizes.max_module_dim);
  in.other = random_module(rng, in.algebra, opposite(in.side), sizes.max_module_dim);
  in.pair = random_pair(rng, in.algebra, in.side, sizes.max_arity);
  in.maps.push_back(random_map(rng, in.m, in.n));
  in.maps.push_back(random_map(rng, in.m, in.m));
  in.maps.push_back(random_map(rng, in.n, in.m));
  return in;
}

inline json instance_to_json(const Instance& in) {
  json j;
  j["algebra_name"] = in.algebra_name;
  j["algebra"] = io::algebra_to_json(*in.algebra);
  j["modules"] = {{"m", io::module_to_json(in.m)}, {"n", io::module_to_json(in.n)}, {"other", io::module_to_json(in.other)}};
  j["formulas"] = {{"phi", io::formula_to_json(in.pair.phi())}, {"psi", io::formula_to_json(in.pair.psi())}};
  json maps = json::array();
  for (const auto& g : in.maps) maps.push_back(io::detail::from_matrix(g.matrix()));
  j["maps"] = maps;
  return j;
}

// ---------------------------------------------------------------------------
// Check plumbing

namespace detail {

inline std::string str(std::size_t v) { return std::to_string(v); }
inline std::string yes(bool b) { return b ? "yes" : "NO"; }

/// Collects failures of one instance.
class Verdict {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) problems_.push_back(what);
  }
  bool ok() const { return problems_.empty(); }
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

inline void record(CheckReport& rep, std::size_t index, const Verdict& v, const json& instance) {
  if (v.ok()) return;
  json f;
  f["instance"] = index;
  f["problems"] = v.problems();
  f["counterexample"] = instance;
  rep.failures.push_back(std::move(f));
}

/// Matrix of g -> g ∘ h from Hom(N, M) to Hom(N', M) in Hom coordinates, for h: N' -> N.
inline Matrix precompose_coords(const HomSpace& from, const HomSpace& to, const Matrix& h) {
  Matrix c(h.field(), to.dim(), from.dim());
  for (std::size_t k = 0; k < from.dim(); ++k) {
    const Vec v = to.coords(from.matrix_of(from.space().vector(k)) * h);
    for (std::size_t i = 0; i < v.size(); ++i) c(i, k) = v[i];
  }
  return c;
}

using InstanceFn = std::function<std::vector<std::string>(const Instance&, Verdict&)>;

/// Runs `fn` on instances 0..samples-1 drawn with the given side policy.
inline void run_instances(const CheckSpec& spec, CheckReport& rep, std::optional<Side> side, const InstanceFn& fn) {
  const PrimeField f(spec.p);
  for (std::size_t i = 0; i < spec.sizes.samples; ++i) {
    Verdict v;
    std::vector<std::string> row{str(i)};
    json inst;
    try {
      const Instance in = gen_random_instance(spec.seed, i, spec.sizes, f, side);
      inst = instance_to_json(in);
      row.push_back(in.algebra_name);
      row.push_back(to_string(in.side));
      const auto cells = fn(in, v);
      row.insert(row.end(), cells.begin(), cells.end());
    } catch (const Error& e) {
      v.require(false, std::string("error: ") + e.what());
    }
    row.resize(rep.columns.size(), "-");
    rep.dims_table.push_back(std::move(row));
    ++rep.instances_run;
    record(rep, i, v, inst);
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// The checks

namespace checks {

using detail::str;
using detail::Verdict;
using detail::yes;

/// F(M), A(M) and F*(M) have equal dimension; the evaluation pairing is perfect and natural.
inline void dual_annihilator(const CheckSpec& spec, CheckReport& rep) {
  rep.columns = {"#", "algebra", "side", "dimM", "n", "F", "A", "F*", "perfect", "natural"};
  detail::run_instances(spec, rep, std::nullopt, [&](const Instance& in, Verdict& v) -> std::vector<std::string> {
    const PpPair& pair = in.pair;
    const FunctorValue F = eval_pp_pair(pair, in.m);
    const FunctorValue A = annihilator_eval(pair, in.m);
    const PairPresentation pres = pair_to_presentation(pair);
    const FunctorValue Fs = dual_functor_eval(pres.functor, in.m);
    v.require(F.dim() == A.dim(), "dim F(M) != dim A(M)");
    v.require(F.dim() == Fs.dim(), "dim F(M) != dim F*(M)");
    const bool perfect = is_nondegenerate(evaluation_pairing(F, A));
    v.require(perfect, "evaluation pairing is degenerate");
    bool natural = true;
    for (const auto& g : in.maps) {
      const FunctorValue FX = eval_pp_pair(pair, g.source()), FY = eval_pp_pair(pair, g.target());
      const FunctorValue AX = annihilator_eval(pair, g.source()), AY = annihilator_eval(pair, g.target());
      const Matrix Fg = pp_pair_map(pair, g, FX, FY);
      const Matrix Ag = annihilator_map(pair, g, AX, AY);
      natural = natural && evaluation_pairing(FX, AX) * Ag == Fg.transpose() * evaluation_pairing(FY, AY);
    }
    v.require(natural, "pairing is not natural for a sampled map");
    return {str(in.m.dim()), str(pair.phi().n()), str(F.dim()), str(A.dim()), str(Fs.dim()), yes(perfect), yes(natural)};
  });
}

/// A_phi(M) = D phi(M*) as subspaces of (M*)^n, and A_{phi/psi}(M) agrees with the predual of F_{Dpsi/Dphi}.
inline void annihilator_predual(const CheckSpec& spec, CheckReport& rep) {
  rep.columns = {"#", "algebra", "side", "dimM", "A_phi", "Dphi(M*)", "A_psi", "Dpsi(M*)", "A", "pre"};
  detail::run_instances(spec, rep, std::nullopt, [&](const Instance& in, Verdict& v) -> std::vector<std::string> {
    const Module md = dual_module(in.m);
    const std::size_t amb = in.pair.phi().n() * in.m.dim();
    const Matrix id = Matrix::identity(in.m.field(), amb);
    const PpFormula dphi = spec.hooks.dual(in.pair.phi()), dpsi = spec.hooks.dual(in.pair.psi());
    const Subspace a_phi = pairing_annihilator(solution_set(in.pair.phi(), in.m), id);
    const Subspace a_psi = pairing_annihilator(solution_set(in.pair.psi(), in.m), id);
    const Subspace s_phi = solution_set(dphi, md), s_psi = solution_set(dpsi, md);
    v.require(a_phi == s_phi, "annihilator of phi(M) differs from D phi(M*)");
    v.require(a_psi == s_psi, "annihilator of psi(M) differs from D psi(M*)");
    const FunctorValue A = annihilator_eval(in.pair, in.m);
    const PairPresentation dp = pair_to_presentation(make_pair(dpsi, dphi));
    const FunctorValue pre = predual_eval(dp.functor, in.m);
    v.require(A.dim() == pre.dim(), "dim A(M) != dim of the predual of F_{Dpsi/Dphi}");
    return {str(in.m.dim()), str(a_phi.dim()), str(s_phi.dim()), str(a_psi.dim()), str(s_psi.dim()), str(A.dim()), str(pre.dim())};
  });
}

/// dim (dF_{phi/psi})(N) = dim F_{Dpsi/Dphi}(N) for right modules N.
inline void d_functor(const CheckSpec& spec, CheckReport& rep) {
  rep.columns = {"#", "algebra", "side", "dimN", "dF", "F_D"};
  detail::run_instances(spec, rep, Side::left, [&](const Instance& in, Verdict& v) -> std::vector<std::string> {
    const PairPresentation pres = pair_to_presentation(in.pair);
    const FunctorValue dF = d_functor_eval(pres.functor, in.other);
    const PpPair dpair = make_pair(spec.hooks.dual(in.pair.psi()), spec.hooks.dual(in.pair.phi()));
    const FunctorValue Fd = eval_pp_pair(dpair, in.other);
    v.require(dF.dim() == Fd.dim(), "dim dF(N) != dim F_{Dpsi/Dphi}(N)");
    return {str(in.other.dim()), str(dF.dim()), str(Fd.dim())};
  });
}

/// Hom(M, N*) ≅ (N ⊗ M)* ≅ Hom(N, M*) through explicit maps, natural in M and N.
inline void hom_tensor(const CheckSpec& spec, CheckReport& rep) {
  rep.columns = {"#", "algebra", "side", "dimM", "dimN", "(M,N*)", "N@M", "(N,M*)", "iso", "natural"};
  detail::run_instances(spec, rep, Side::left, [&](const Instance& in, Verdict& v) -> std::vector<std::string> {
    const Module& M = in.m;
    const Module& N = in.other;
    const PrimeField& f = M.field();
    const std::size_t dm = M.dim(), dn = N.dim();
    // lambda in (N⊗M)* -> X in Hom(M, N*), X[a][b] = lambda(n_a ⊗ m_b); and Y[b][a] in Hom(N, M*)
    auto phi_of = [&](const TensorSpace& t) { return t.projection_matrix().transpose(); };
    auto psi_of = [&](const TensorSpace& t, std::size_t dmm) {
      const Matrix pt = t.projection_matrix().transpose();
      Matrix out(f, pt.rows(), pt.cols());
      const std::size_t dnn = dmm == 0 ? 0 : pt.rows() / dmm;
      for (std::size_t a = 0; a < dnn; ++a)
        for (std::size_t b = 0; b < dmm; ++b)
          for (std::size_t c = 0; c < pt.cols(); ++c) out(b * dnn + a, c) = pt(a * dmm + b, c);
      return out;
    };
    const TensorSpace T = tensor_over_R(N, M);
    const HomSpace H1 = hom_space(M, dual_module(N));
    const HomSpace H2 = hom_space(N, dual_module(M));
    v.require(H1.dim() == T.dim() && H2.dim() == T.dim(), "hom-tensor dimensions differ");
    const Matrix Phi = phi_of(T), Psi = psi_of(T, dm);
    bool iso = rank(Phi) == T.dim() && rank(Psi) == T.dim();
    for (std::size_t c = 0; c < T.dim(); ++c) iso = iso && H1.space().contains(Phi.col(c)) && H2.space().contains(Psi.col(c));
    v.require(iso, "constructed hom-tensor maps are not isomorphisms");
    bool natural = true;
    Rng rng(instance_seed(spec.seed ^ 0x5151, 0) + dm * 131 + dn);
    // g : M' -> M with M' in {in.n, M}; h : N -> N
    std::vector<std::pair<Module, ModuleMap>> gs = {{in.n, random_map(rng, in.n, M)}, {M, random_map(rng, M, M)}};
    for (const auto& [Mp, g] : gs) {
      const TensorSpace T2 = tensor_over_R(N, Mp);
      const Matrix t = tensor_map(T2, T, Matrix::identity(f, dn), g.matrix());
      const Matrix lhs1 = phi_of(T2) * t.transpose();
      const Matrix rhs1 = ppfun::detail::pre_compose(g.matrix(), dn) * Phi;
      const Matrix lhs2 = psi_of(T2, Mp.dim()) * t.transpose();
      const Matrix rhs2 = Matrix::kron(g.matrix().transpose(), Matrix::identity(f, dn)) * Psi;
      natural = natural && lhs1 == rhs1 && lhs2 == rhs2;
    }
    {
      const ModuleMap h = random_map(rng, N, N);
      const Matrix t = tensor_map(T, T, h.matrix(), Matrix::identity(f, dm));
      // Phi(lambda ∘ (h⊗1)) = h* ∘ Phi(lambda); Psi(lambda ∘ (h⊗1)) = Psi(lambda) ∘ h
      const Matrix lhs1 = Phi * t.transpose();
      const Matrix rhs1 = Matrix::kron(h.matrix().transpose(), Matrix::identity(f, dm)) * Phi;
      const Matrix lhs2 = Psi * t.transpose();
      const Matrix rhs2 = ppfun::detail::pre_compose(h.matrix(), dm) * Psi;
      natural = natural && lhs1 == rhs1 && lhs2 == rhs2;
    }
    v.require(natural, "hom-tensor isomorphisms are not natural for a sampled map");
    return {str(dm), str(dn), str(H1.dim()), str(T.dim()), str(H2.dim()), yes(iso), yes(natural)};
  });
}

/// sigma : M* ⊗ N -> Hom(N, M)*, f ⊗ n -> (g -> f(g n)), is an isomorphism natural in N.
inline void sigma_iso(const CheckSpec& spec, CheckReport& rep) {
  rep.columns = {"#", "algebra", "side", "dimM", "dimN", "M*@N", "(N,M)", "iso", "natural"};
  detail::run_instances(spec, rep, Side::left, [&](const Instance& in, Verdict& v) -> std::vector<std::string> {
    const Module& M = in.m;
    const PrimeField& f = M.field();
    auto sigma = [&](const Module& N, const TensorSpace& T, const HomSpace& H) {
      const std::size_t dm = M.dim(), dn = N.dim();
      Matrix amb(f, H.dim(), dm * dn);
      for (std::size_t k = 0; k < H.dim(); ++k) {
        const Matrix g = H.matrix_of(H.space().vector(k));
        for (std::size_t a = 0; a < dm; ++a)
          for (std::size_t b = 0; b < dn; ++b) amb(k, a * dn + b) = g(a, b);
      }
      bool kills = true;
      for (const auto& r : T.relations().vectors()) kills = kills && is_zero(amb * r);
      Matrix s(f, H.dim(), T.dim());
      for (std::size_t j = 0; j < T.dim(); ++j) {
        const Vec c = amb * T.lift(unit_vec(T.dim(), j));
        for (std::size_t i = 0; i < c.size(); ++i) s(i, j) = c[i];
      }
      return std::pair(s, kills);
    };
    const Module Md = dual_module(M);
    const Module& N = in.n;
    const TensorSpace T = tensor_over_R(Md, N);
    const HomSpace H = hom_space(N, M);
    const auto [S, kills] = sigma(N, T, H);
    const bool iso = kills && S.rows() == S.cols() && rank(S) == S.rows();
    v.require(iso, "sigma is not a well-defined isomorphism");
    bool natural = true;
    Rng rng(instance_seed(spec.seed ^ 0xA5A5, 0) + M.dim() * 97 + N.dim());
    const std::vector<ModuleMap> hs = {random_map(rng, N, N), random_map(rng, M, N), random_map(rng, N, N)};
    for (const auto& h : hs) {
      const Module& Np = h.source();
      const TensorSpace T2 = tensor_over_R(Md, Np);
      const HomSpace H2 = hom_space(Np, M);
      const auto [S2, k2] = sigma(Np, T2, H2);
      const Matrix t = tensor_map(T2, T, Matrix::identity(f, Md.dim()), h.matrix());
      const Matrix C = detail::precompose_coords(H, H2, h.matrix());
      natural = natural && k2 && S * t == C.transpose() * S2;
    }
    v.require(natural, "sigma is not natural for a sampled map");
    return {str(M.dim()), str(N.dim()), str(T.dim()), str(H.dim()), yes(iso), yes(natural)};
  });
}

/// eta_M : M -> M** is bijective and natural.
inline void double_dual(const CheckSpec& spec, CheckReport& rep) {
  rep.columns = {"#", "algebra", "side", "dimM", "dimN", "bijective", "natural"};
  detail::run_instances(spec, rep, std::nullopt, [&](const Instance& in, Verdict& v) -> std::vector<std::string> {
    const ModuleMap em = eta_map(in.m), en = eta_map(in.n);
    const bool bij = rank(em.matrix()) == in.m.dim() && rank(en.matrix()) == in.n.dim();
    v.require(bij, "eta is not bijective");
    bool natural = true;
    for (const auto& g : in.maps) {
      const ModuleMap e_s = eta_map(g.source()), e_t = eta_map(g.target());
      natural = natural && e_t.matrix() * g.matrix() == dual_map(dual_map(g)).matrix() * e_s.matrix();
    }
    v.require(natural, "eta is not natural for a sampled map");
    return {str(in.m.dim()), str(in.n.dim()), yes(bij), yes(natural)};
  });
}

/// 0 -> A -> P* -> L* -> 0 is exact and Ext^{n+1}(M, A) = Ext^n(M, L*) for n = 1, 2.
inline void ext_shift(const CheckSpec& spec, CheckReport& rep) {
  rep.columns = {"#", "algebra", "side", "dimA", "dimM", "dimL*", "E2(M,A)", "E1(M,L*)", "E3(M,A)", "E2(M,L*)", "exact"};
  detail::run_instances(spec, rep, std::nullopt, [&](const Instance& in, Verdict& v) -> std::vector<std::string> {
    const Module& A = in.m;
    const Module& M = in.n;
    const ExtShift sh = ppfun::ext_shift(A);
    bool exact = is_short_exact(sh.into, sh.onto);
    v.require(exact, "0 -> A -> P* -> L* -> 0 is not exact");
    const auto ea = ext_dims(M, A, 3);
    const auto el = ext_dims(M, sh.l_dual, 2);
    const auto ep = ext_dims(M, sh.p_dual, 2);
    v.require(ea[2] == el[1], "Ext^2(M,A) != Ext^1(M,L*)");
    v.require(ea[3] == el[2], "Ext^3(M,A) != Ext^2(M,L*)");
    v.require(ep[1] == 0 && ep[2] == 0, "P* is not Ext-injective");
    // 0 -> (M,A) -> (M,P*) -> (M,L*) -> Ext^1(M,A) -> 0
    const bool les = ea[0] + el[0] == ep[0] + ea[1];
    v.require(les, "long exact sequence fails at the Hom/Ext^1 stage");
    exact = exact && les;
    return {str(A.dim()), str(M.dim()), str(sh.l_dual.dim()), str(ea[2]), str(el[1]), str(ea[3]), str(el[2]), yes(exact)};
  });
}

/// G_f(P) = 0 for projective P and epis f; M is projective iff G_{cover}(M) = 0.
inline void projective_over_epi(const CheckSpec& spec, CheckReport& rep) {
  rep.columns = {"#", "algebra", "side", "epis", "projectives", "max G_f(P)", "proj(M)", "G_cover(M)"};
  detail::run_instances(spec, rep, std::nullopt, [&](const Instance& in, Verdict& v) -> std::vector<std::string> {
    const AlgebraPtr& alg = in.algebra;
    std::vector<ModuleMap> epis = {free_cover(in.n).epi, free_cover(in.m).epi};
    {
      Rng rng(instance_seed(spec.seed ^ 0x0E91, in.m.dim() * 31 + in.n.dim()));
      const Vec g = random_vector(rng, alg->field(), in.n.dim());
      epis.push_back(quotient_module(in.n, generated_subspace(in.n, {g})).projection);
    }
    std::vector<Module> projectives = {free_module(alg, in.side, 1), free_module(alg, in.side, 2)};
    if (alg->idempotents())
      for (const auto& e : *alg->idempotents()) projectives.push_back(projective_at(alg, in.side, e).module);
    std::size_t worst = 0;
    for (const auto& f : epis)
      for (const auto& P : projectives) {
        const std::size_t d = eval_presentation(FpFunctor{Variance::contravariant, f}, P).dim();
        worst = std::max(worst, d);
      }
    v.require(worst == 0, "G_f(P) != 0 for a projective P");
    const bool proj = is_projective(in.m).projective;
    const std::size_t gm = eval_presentation(FpFunctor{Variance::contravariant, free_cover(in.m).epi}, in.m).dim();
    v.require(proj == (gm == 0), "projectivity of M disagrees with G_cover(M) = 0");
    return {str(epis.size()), str(projectives.size()), str(worst), yes(proj), str(gm)};
  });
}

/// The image of M^t ⊗ N -> Hom(M, N) is the space of maps factoring through a projective.
inline void stable_hom_sequence(const CheckSpec& spec, CheckReport& rep) {
  rep.columns = {"#", "algebra", "side", "dimM", "dimN", "(M,N)", "coker", "stable", "image=P(M,N)"};
  detail::run_instances(spec, rep, Side::left, [&](const Instance& in, Verdict& v) -> std::vector<std::string> {
    const TDualTensorMap tm = t_dual_tensor_map(in.m, in.n);
    const StableHomValue st = stable_hom(in.m, in.n, StableFlavor::projective);
    v.require(tm.cokernel_dim == st.dim(), "cokernel dim != projectively stable Hom dim");
    std::vector<Vec> img;
    for (std::size_t j = 0; j < tm.map.cols(); ++j) img.push_back(tm.hom.space().from_coords(tm.map.col(j)));
    const bool same = Subspace::span(in.m.field(), tm.hom.space().ambient_dim(), img) == st.relations;
    v.require(same, "image of the t-dual tensor map differs from the maps factoring through projectives");
    return {str(in.m.dim()), str(in.n.dim()), str(tm.hom.dim()), str(tm.cokernel_dim), str(st.dim()), yes(same)};
  });
}

/// Indecomposable modules of A_n style quivers built from interval representations.
inline std::vector<std::pair<std::string, Module>> indecomposables(const AlgebraPtr& alg, Side side) {
  std::vector<std::pair<std::string, Module>> out;
  const QuiverPresentation& q = *alg->quiver();
  const PrimeField& f = alg->field();
  // thin modules supported on connected vertex sets, identity on every arrow inside the support
  const std::size_t V = q.vertices;
  for (std::size_t mask = 1; mask < (std::size_t{1} << V); ++mask) {
    std::vector<std::size_t> dims(V);
    for (std::size_t i = 0; i < V; ++i) dims[i] = (mask >> i) & 1;
    // connectedness of the support in the underlying graph
    std::size_t reach = mask & (~mask + 1);
    for (bool grew = true; grew;) {
      grew = false;
      for (const auto& a : q.arrows) {
        const std::size_t s = std::size_t{1} << a.source, t = std::size_t{1} << a.target;
        if ((mask & s) && (mask & t) && ((reach & s) != 0) != ((reach & t) != 0)) {
          reach |= s | t;
          grew = true;
        }
      }
    }
    if (reach != mask) continue;
    std::vector<Matrix> maps;
    for (const auto& a : q.arrows) {
      const std::size_t from = side == Side::left ? a.source : a.target;
      const std::size_t to = side == Side::left ? a.target : a.source;
      Matrix m(f, dims[to], dims[from]);
      if (dims[to] && dims[from]) m(0, 0) = 1;
      maps.push_back(m);
    }
    try {
      std::string name = "M{";
      for (std::size_t i = 0; i < V; ++i)
        if (dims[i]) name += std::to_string(i + 1);
      out.emplace_back(name + "}", module_from_representation(alg, side, dims, maps));
    } catch (const ModuleError&) {
      // support violates a relation
    }
  }
  return out;
}

struct ArCase {
  std::string algebra;
  std::string n_name, m_name;
  Module n, m;
};

inline std::vector<ArCase> ar_cases(PrimeField f) {
  std::vector<ArCase> out;
  const std::vector<std::pair<std::string, AlgebraPtr>> algs = {{"A2", algebras::linear_quiver(f, 2)},
                                                                {"A3", algebras::linear_quiver(f, 3)},
                                                                {"A3/rel", algebras::linear_quiver(f, 3, true)},
                                                                {"A3-sink", algebras::a3_sink(f)}};
  for (const auto& [name, alg] : algs) {
    const auto ind = indecomposables(alg, Side::left);
    for (const auto& [nn, N] : ind) {
      if (is_projective(N).projective) continue;
      for (const auto& [mn, M] : ind) out.push_back({name, nn, mn, N, M});
    }
  }
  return out;
}

/// dim Ext^1(N, M) = dim of injectively stable Hom(M, tau N); projective flavor reported alongside.
inline void ar_formula(const CheckSpec& spec, CheckReport& rep) {
  rep.columns = {"#", "algebra", "side", "N", "M", "Ext1(N,M)", "ovHom(M,tN)", "unHom(M,tN)", "dim tN"};
  if (spec.sizes.samples == 0) return;
  const PrimeField f(spec.p);
  // exact values on A2: S_b = S1 (not projective), S_a = S2 = P2
  {
    const AlgebraPtr a2 = algebras::linear_quiver(f, 2);
    const Module sb = simple_module(a2, Side::left, 0), sa = simple_module(a2, Side::left, 1);
    Verdict v;
    const std::size_t e = ext_dim(sb, sa, 1);
    const std::size_t ov = stable_hom(sa, sa, StableFlavor::injective).dim();
    const std::size_t un = stable_hom(sa, sa, StableFlavor::projective).dim();
    const TransposeTau tt = transpose_and_tau(sb);
    v.require(e == 1, "Ext^1(S_b,S_a) != 1 over A2");
    v.require(ov == 1, "injectively stable Hom(S_a,S_a) != 1 over A2");
    v.require(un == 0, "projectively stable Hom(S_a,S_a) != 0 over A2");
    v.require(tt.tau.dim() == 1 && hom_space(sa, tt.tau).dim() == 1, "tau S_b is not S_a over A2");
    rep.dims_table.push_back({"A2", "A2", "left", "S_b", "S_a", str(e), str(ov), str(un), str(tt.tau.dim())});
    ++rep.instances_run;
    json inst = {{"algebra", io::algebra_to_json(*a2)}, {"modules", {{"n", io::module_to_json(sb)}, {"m", io::module_to_json(sa)}}}};
    detail::record(rep, 0, v, inst);
  }
  auto run_case = [&](std::size_t idx, const std::string& an, const std::string& nn, const std::string& mn, const Module& N,
                      const Module& M) {
    Verdict v;
    std::vector<std::string> row{str(idx), an, "left", nn, mn};
    try {
      const TransposeTau tt = transpose_and_tau(N);
      const std::size_t e = ext_dim(N, M, 1);
      const std::size_t ov = stable_hom(M, tt.tau, StableFlavor::injective).dim();
      const std::size_t un = stable_hom(M, tt.tau, StableFlavor::projective).dim();
      v.require(e == ov, "Ext^1(N,M) != injectively stable Hom(M, tau N)");
      row.insert(row.end(), {str(e), str(ov), str(un), str(tt.tau.dim())});
    } catch (const Error& ex) {
      v.require(false, std::string("error: ") + ex.what());
      row.resize(rep.columns.size(), "-");
    }
    rep.dims_table.push_back(row);
    ++rep.instances_run;
    json inst = {{"algebra", io::algebra_to_json(*N.algebra())},
                 {"modules", {{"n", io::module_to_json(N)}, {"m", io::module_to_json(M)}}}};
    detail::record(rep, idx, v, inst);
  };
  const auto cases = ar_cases(f);
  std::size_t idx = 1;
  for (const auto& c : cases) run_case(idx++, c.algebra, c.n_name, c.m_name, c.n, c.m);
  // random (not necessarily indecomposable) M against random non-projective indecomposable N
  for (std::size_t i = 0; i < spec.sizes.samples; ++i) {
    Rng rng(instance_seed(spec.seed, i) ^ 0xA2A3);
    const ArCase& c = cases[rng.below(cases.size())];
    const Module M = random_module(rng, c.n.algebra(), Side::left, spec.sizes.max_module_dim);
    run_case(idx++, c.algebra, c.n_name, "random", c.n, M);
  }
}

/// F_{phi/psi}(M) = 0 iff A_{phi/psi}(M) = 0, on the instances of dual-annihilator.
inline void zero_kernel(const CheckSpec& spec, CheckReport& rep) {
  rep.columns = {"#", "algebra", "side", "dimM", "F", "A", "agree"};
  detail::run_instances(spec, rep, std::nullopt, [&](const Instance& in, Verdict& v) -> std::vector<std::string> {
    const std::size_t F = eval_pp_pair(in.pair, in.m).dim(), A = annihilator_eval(in.pair, in.m).dim();
    const bool agree = (F == 0) == (A == 0);
    v.require(agree, "F(M) = 0 and A(M) = 0 disagree");
    return {str(in.m.dim()), str(F), str(A), yes(agree)};
  });
}

/// DD phi and phi have identical solution sets; psi <= phi implies D phi <= D psi.
inline void d_involution(const CheckSpec& spec, CheckReport& rep) {
  rep.columns = {"#", "algebra", "side", "formulas", "DD=id", "psi<=phi", "Dphi<=Dpsi", "chi<=phi", "Dphi<=Dchi"};
  detail::run_instances(spec, rep, std::nullopt, [&](const Instance& in, Verdict& v) -> std::vector<std::string> {
    Rng rng(instance_seed(spec.seed ^ 0xD0D0, in.m.dim() * 7 + in.n.dim()));
    const PpFormula& phi = in.pair.phi();
    const PpFormula& psi = in.pair.psi();
    const PpFormula chi = random_formula(rng, in.algebra, in.side, phi.n(), spec.sizes.max_arity);
    const auto& D = spec.hooks.dual;
    bool dd = true;
    for (const PpFormula* f : {&phi, &psi, &chi})
      for (const Module* m : {&in.m, &in.n}) dd = dd && solution_set(D(D(*f)), *m) == solution_set(*f, *m);
    v.require(dd, "solution sets of DD phi and phi differ");
    const bool psi_phi = implies(psi, phi), d1 = implies(D(phi), D(psi));
    v.require(!psi_phi || d1, "psi <= phi but not D phi <= D psi");
    const bool chi_phi = implies(chi, phi), d2 = implies(D(phi), D(chi));
    v.require(chi_phi == d2, "order reversal fails for a sampled formula");
    return {"3", yes(dd), yes(psi_phi), yes(d1), yes(chi_phi), yes(d2)};
  });
}

/// Evaluation at the tuple induces coker((B,M) -> (A,M)) ≅ phi(M)/psi(M); the contravariant
/// presentation of the annihilator functor has the right dimension.
inline void presentation_bridge(const CheckSpec& spec, CheckReport& rep) {
  rep.columns = {"#", "algebra", "side", "dimM", "dimA", "dimB", "pres", "pp", "witness", "ann-pres", "ann"};
  detail::run_instances(spec, rep, std::nullopt, [&](const Instance& in, Verdict& v) -> std::vector<std::string> {
    const PairPresentation pres = pair_to_presentation(in.pair);
    const std::size_t n = in.pair.phi().n();
    bool witness = true;
    std::size_t dp = 0, dq = 0;
    for (const Module* m : {&in.m, &in.n}) {
      const FunctorValue pv = eval_presentation(pres.functor, *m);
      const FunctorValue qv = eval_pp_pair(in.pair, *m);
      if (m == &in.m) dp = pv.dim(), dq = qv.dim();
      witness = witness && induces_isomorphism(pv, qv, tuple_evaluation(pres.phi_realization, n, *m));
      v.require(realized_solution_set(pres.phi_realization, n, *m) == solution_set(in.pair.phi(), *m),
                "free realization image differs from the solution set");
    }
    v.require(witness, "tuple evaluation is not an isomorphism onto phi(M)/psi(M)");
    const FunctorValue ap = eval_presentation(annihilator_presentation(in.pair), in.m);
    const FunctorValue av = annihilator_eval(in.pair, in.m);
    v.require(ap.dim() == av.dim(), "contravariant presentation of the annihilator functor has the wrong dimension");
    return {str(in.m.dim()),   str(pres.functor.presentation.source().dim()), str(pres.functor.presentation.target().dim()),
            str(dp),           str(dq),
            yes(witness),      str(ap.dim()),
            str(av.dim())};
  });
}

}  // namespace checks

// ---------------------------------------------------------------------------
// Registry

struct RegisteredCheck {
  const char* name;
  const char* summary;
  void (*run)(const CheckSpec&, CheckReport&);
};

inline const std::vector<RegisteredCheck>& registry() {
  static const std::vector<RegisteredCheck> r = {
      {"dual-annihilator", "F, A and F* agree; the evaluation pairing is perfect and natural", checks::dual_annihilator},
      {"annihilator-predual", "A_phi(M) equals D phi(M*)", checks::annihilator_predual},
      {"d-functor", "dF_{phi/psi} agrees with F_{Dpsi/Dphi}", checks::d_functor},
      {"hom-tensor", "Hom(M,N*), (N@M)* and Hom(N,M*) are naturally isomorphic", checks::hom_tensor},
      {"sigma-iso", "M*@N -> Hom(N,M)* is a natural isomorphism", checks::sigma_iso},
      {"double-dual", "eta: M -> M** is a natural isomorphism", checks::double_dual},
      {"ext-shift", "Ext^{n+1}(M,A) = Ext^n(M,L*) for 0->A->P*->L*->0", checks::ext_shift},
      {"projective-over-epi", "G_f vanishes on projectives", checks::projective_over_epi},
      {"stable-hom-sequence", "M^t@N -> Hom(M,N) has image P(M,N)", checks::stable_hom_sequence},
      {"ar-formula", "Ext^1(N,M) agrees with injectively stable Hom(M, tau N)", checks::ar_formula},
      {"zero-kernel", "F(M) = 0 iff A(M) = 0", checks::zero_kernel},
      {"d-involution", "DD phi = phi and D reverses implication", checks::d_involution},
      {"presentation-bridge", "presentation values are isomorphic to pp-pair values", checks::presentation_bridge},
  };
  return r;
}

inline std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (const auto& c : registry()) out.emplace_back(c.name);
  return out;
}

inline bool is_registered(const std::string& name) {
  for (const auto& c : registry())
    if (name == c.name) return true;
  return false;
}

inline CheckReport run_check(const CheckSpec& spec) {
  for (const auto& c : registry()) {
    if (spec.name != c.name) continue;
    CheckReport rep;
    rep.name = spec.name;
    rep.seed = spec.seed;
    rep.sizes = spec.sizes;
    rep.p = spec.p;
    c.run(spec, rep);
    return rep;
  }
  throw CheckError("unknown check '" + spec.name + "'");
}

// ---------------------------------------------------------------------------
// Reports

inline json report_to_json(const CheckReport& r) {
  json j;
  j["name"] = r.name;
  j["seed"] = r.seed;
  j["p"] = r.p;
  j["sizes"] = sizes_to_json(r.sizes);
  j["instances_run"] = r.instances_run;
  j["passed"] = r.passed();
  j["columns"] = r.columns;
  j["dims_table"] = r.dims_table;
  j["failures"] = r.failures;
  return j;
}

inline std::string report_to_text(const CheckReport& r) {
  std::ostringstream os;
  os << "== " << r.name << "  seed " << r.seed << "  p " << r.p << "  instances " << r.instances_run << "  "
     << (r.passed() ? "PASS" : "FAIL") << "\n";
  std::vector<std::size_t> w(r.columns.size(), 0);
  for (std::size_t c = 0; c < r.columns.size(); ++c) w[c] = r.columns[c].size();
  for (const auto& row : r.dims_table)
    for (std::size_t c = 0; c < row.size() && c < w.size(); ++c) w[c] = std::max(w[c], row[c].size());
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size() && c < w.size(); ++c) {
      if (c) s += "  ";
      s += std::string(w[c] - cells[c].size(), ' ') + cells[c];
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    os << s << "\n";
  };
  if (!r.columns.empty()) line(r.columns);
  for (const auto& row : r.dims_table) line(row);
  for (const auto& f : r.failures) {
    os << "failure at instance " << f.at("instance").get<std::size_t>() << ":";
    for (const auto& p : f.at("problems")) os << " " << p.get<std::string>() << ";";
    os << "\n";
  }
  return os.str();
}

}  // namespace ppfun::verify
