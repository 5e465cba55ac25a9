#pragma once

/**
 * @file io.hpp
 * @brief JSON loaders and savers for algebras, modules and pp formulas.
 *
 * algebra.json, structure constants:
 *   {"p": 2, "kind": "structconst", "labels": [...], "structconst": c[i][j][k],
 *    "unit"?: [...], "radical"?: [[...]], "idempotents"?: [[...]]}
 * algebra.json, bound quiver (vertices 1-based, paths listed in composition order,
 * so ["b","a"] is "first a then b"):
 *   {"p": 2, "kind": "quiver", "vertices": 3,
 *    "arrows": [{"name": "a", "source": 1, "target": 2}, ...],
 *    "relations": [[{"coeff": 1, "path": ["b", "a"]}], ...]}
 * module.json: {"side": "left", "dim": 2, "action": [matrix per basis element]}
 *   or {"side": "left", "representation": {"dims": [...], "arrows": {"a": matrix}}}.
 * Matrices are lists of rows of integers, reduced mod p on load.
 */

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ppfun/algebra.hpp"
#include "ppfun/errors.hpp"
#include "ppfun/module.hpp"
#include "ppfun/pp.hpp"

namespace ppfun::io {

using json = nlohmann::json;

class FormatError : public Error {
 public:
  using Error::Error;
};

namespace detail {

template <class T>
T get(const json& j, const char* key, const std::string& ctx) {
  if (!j.contains(key)) throw FormatError(ctx + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw FormatError(ctx + ": field '" + key + "' has the wrong type");
  }
}

inline Vec to_vec(const PrimeField& f, const json& j, const std::string& ctx) {
  if (!j.is_array()) throw FormatError(ctx + ": expected an integer list");
  Vec v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw FormatError(ctx + ": expected integers");
    v.push_back(f.reduce(x.get<long long>()));
  }
  return v;
}

inline json from_vec(const Vec& v) {
  json a = json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

inline Matrix to_matrix(const PrimeField& f, const json& j, std::size_t rows, std::size_t cols, const std::string& ctx) {
  if (!j.is_array() || j.size() != rows)
    throw FormatError(ctx + ": expected " + std::to_string(rows) + " rows");
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Vec row = to_vec(f, j[r], ctx);
    if (row.size() != cols) throw FormatError(ctx + ": expected " + std::to_string(cols) + " columns in row " + std::to_string(r + 1));
    m.set_row(r, row);
  }
  return m;
}

inline json from_matrix(const Matrix& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(from_vec(m.row(r)));
  return a;
}

inline std::vector<Vec> to_vecs(const PrimeField& f, const json& j, std::size_t len, const std::string& ctx) {
  if (!j.is_array()) throw FormatError(ctx + ": expected a list of vectors");
  std::vector<Vec> out;
  for (const auto& x : j) {
    out.push_back(to_vec(f, x, ctx));
    if (out.back().size() != len) throw FormatError(ctx + ": vectors must have length " + std::to_string(len));
  }
  return out;
}

inline json from_vecs(const std::vector<Vec>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(from_vec(v));
  return a;
}

}  // namespace detail

inline PrimeField field_from_json(const json& j) {
  const long long p = detail::get<long long>(j, "p", "algebra");
  if (p < 2 || p > 97 || !is_prime(static_cast<std::uint32_t>(p)))
    throw FormatError("algebra: p must be a prime between 2 and 97, got " + std::to_string(p));
  return PrimeField(static_cast<std::uint32_t>(p));
}

inline AlgebraPtr algebra_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("algebra: expected a JSON object");
  const PrimeField f = field_from_json(j);
  const std::string kind = detail::get<std::string>(j, "kind", "algebra");
  if (kind == "structconst") {
    const auto labels = detail::get<std::vector<std::string>>(j, "labels", "algebra");
    const std::size_t d = labels.size();
    const json& c = j.at("structconst");
    std::vector<long long> flat;
    if (!c.is_array() || c.size() != d) throw FormatError("algebra: structconst must be a dim x dim x dim array");
    for (const auto& plane : c) {
      if (!plane.is_array() || plane.size() != d) throw FormatError("algebra: structconst must be a dim x dim x dim array");
      for (const auto& row : plane) {
        if (!row.is_array() || row.size() != d) throw FormatError("algebra: structconst must be a dim x dim x dim array");
        for (const auto& x : row) {
          if (!x.is_number_integer()) throw FormatError("algebra: structconst entries must be integers");
          flat.push_back(x.get<long long>());
        }
      }
    }
    Algebra::Options opts;
    if (j.contains("unit")) {
      opts.unit = detail::to_vec(f, j.at("unit"), "algebra unit");
      if (opts.unit->size() != d) throw FormatError("algebra: unit must have length dim");
    }
    if (j.contains("radical")) opts.radical = detail::to_vecs(f, j.at("radical"), d, "algebra radical");
    if (j.contains("idempotents")) opts.idempotents = detail::to_vecs(f, j.at("idempotents"), d, "algebra idempotents");
    return Algebra::from_structconst(f, labels, flat, opts);
  }
  if (kind == "quiver") {
    QuiverPresentation q;
    q.vertices = detail::get<std::size_t>(j, "vertices", "quiver");
    std::map<std::string, std::size_t> names;
    if (j.contains("arrows")) {
      for (const auto& a : j.at("arrows")) {
        QuiverArrow arr;
        arr.name = detail::get<std::string>(a, "name", "quiver arrow");
        const auto s = detail::get<long long>(a, "source", "quiver arrow " + arr.name);
        const auto t = detail::get<long long>(a, "target", "quiver arrow " + arr.name);
        if (s < 1 || t < 1 || static_cast<std::size_t>(s) > q.vertices || static_cast<std::size_t>(t) > q.vertices)
          throw FormatError("quiver arrow " + arr.name + ": vertices are numbered 1.." + std::to_string(q.vertices));
        if (arr.name.empty() || names.count(arr.name)) throw FormatError("quiver: arrow names must be unique and nonempty");
        arr.source = static_cast<std::size_t>(s - 1);
        arr.target = static_cast<std::size_t>(t - 1);
        names[arr.name] = q.arrows.size();
        q.arrows.push_back(arr);
      }
    }
    if (j.contains("relations")) {
      for (const auto& rel : j.at("relations")) {
        std::vector<PathTerm> terms;
        for (const auto& t : rel) {
          PathTerm pt;
          pt.coeff = t.contains("coeff") ? detail::get<long long>(t, "coeff", "relation term") : 1;
          for (const auto& nm : detail::get<std::vector<std::string>>(t, "path", "relation term")) {
            auto it = names.find(nm);
            if (it == names.end()) throw FormatError("quiver relation: unknown arrow '" + nm + "'");
            pt.arrows.push_back(it->second);
          }
          terms.push_back(std::move(pt));
        }
        q.relations.push_back(std::move(terms));
      }
    }
    return Algebra::from_quiver(f, q);
  }
  throw FormatError("algebra: kind must be 'structconst' or 'quiver', got '" + kind + "'");
}

inline json algebra_to_json(const Algebra& a) {
  json j;
  j["p"] = a.field().prime();
  if (a.quiver()) {
    const QuiverPresentation& q = *a.quiver();
    j["kind"] = "quiver";
    j["vertices"] = q.vertices;
    json arrows = json::array();
    for (const auto& arr : q.arrows) arrows.push_back({{"name", arr.name}, {"source", arr.source + 1}, {"target", arr.target + 1}});
    j["arrows"] = arrows;
    json rels = json::array();
    for (const auto& rel : q.relations) {
      json terms = json::array();
      for (const auto& t : rel) {
        json path = json::array();
        for (auto k : t.arrows) path.push_back(q.arrows[k].name);
        terms.push_back({{"coeff", a.field().reduce(t.coeff)}, {"path", path}});
      }
      rels.push_back(terms);
    }
    j["relations"] = rels;
    return j;
  }
  const std::size_t d = a.dim();
  j["kind"] = "structconst";
  j["labels"] = a.labels();
  json c = json::array();
  for (std::size_t i = 0; i < d; ++i) {
    json plane = json::array();
    for (std::size_t jj = 0; jj < d; ++jj) {
      json row = json::array();
      for (std::size_t k = 0; k < d; ++k) row.push_back(a.c(i, jj, k));
      plane.push_back(row);
    }
    c.push_back(plane);
  }
  j["structconst"] = c;
  j["unit"] = detail::from_vec(a.unit());
  if (a.radical_basis()) j["radical"] = detail::from_vecs(*a.radical_basis());
  if (a.idempotents()) j["idempotents"] = detail::from_vecs(*a.idempotents());
  return j;
}

inline Module module_from_json(const json& j, const AlgebraPtr& alg) {
  if (!j.is_object()) throw FormatError("module: expected a JSON object");
  const std::string s = detail::get<std::string>(j, "side", "module");
  if (s != "left" && s != "right") throw FormatError("module: side must be 'left' or 'right'");
  const Side side = s == "left" ? Side::left : Side::right;
  const PrimeField& f = alg->field();
  if (j.contains("representation")) {
    if (!alg->quiver()) throw FormatError("module: representation form needs a quiver algebra");
    const QuiverPresentation& q = *alg->quiver();
    const json& rep = j.at("representation");
    const auto dims = detail::get<std::vector<std::size_t>>(rep, "dims", "module representation");
    if (dims.size() != q.vertices) throw FormatError("module representation: one dimension per vertex");
    std::vector<Matrix> maps;
    for (const auto& arr : q.arrows) {
      const std::size_t from = side == Side::left ? arr.source : arr.target;
      const std::size_t to = side == Side::left ? arr.target : arr.source;
      const json& arrows = rep.contains("arrows") ? rep.at("arrows") : json::object();
      if (!arrows.contains(arr.name)) {
        maps.emplace_back(f, dims[to], dims[from]);
        continue;
      }
      maps.push_back(detail::to_matrix(f, arrows.at(arr.name), dims[to], dims[from], "module arrow " + arr.name));
    }
    Module m = module_from_representation(alg, side, dims, maps);
    if (j.contains("dim") && j.at("dim").get<std::size_t>() != m.dim()) throw FormatError("module: dim disagrees with representation");
    return m;
  }
  const auto dim = detail::get<std::size_t>(j, "dim", "module");
  if (!j.contains("action") || !j.at("action").is_array()) throw FormatError("module: missing field 'action'");
  const json& act = j.at("action");
  if (act.size() != alg->dim())
    throw FormatError("module: expected " + std::to_string(alg->dim()) + " action matrices, got " + std::to_string(act.size()));
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < act.size(); ++i)
    mats.push_back(dim == 0 ? Matrix(f, 0, 0) : detail::to_matrix(f, act[i], dim, dim, "module action of " + alg->labels()[i]));
  return Module::create(alg, side, dim, std::move(mats));
}

inline json module_to_json(const Module& m) {
  json j;
  j["side"] = to_string(m.side());
  j["dim"] = m.dim();
  json act = json::array();
  for (const auto& a : m.action()) act.push_back(detail::from_matrix(a));
  j["action"] = act;
  return j;
}

inline json subspace_to_json(const Subspace& s) {
  return {{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", detail::from_matrix(s.basis())}};
}

inline json formula_to_json(const PpFormula& phi) {
  return {{"side", to_string(phi.side())}, {"n", phi.n()}, {"m", phi.m()}, {"text", unparse_pp(phi)}};
}

inline PpFormula formula_from_json(const json& j, const AlgebraPtr& alg) {
  const std::string s = detail::get<std::string>(j, "side", "formula");
  const auto n = detail::get<std::size_t>(j, "n", "formula");
  return parse_pp(detail::get<std::string>(j, "text", "formula"), alg, s == "right" ? Side::right : Side::left, n);
}

/// Canonical text: two-space indentation, keys sorted, trailing newline.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

inline AlgebraPtr load_algebra(const std::string& path) {
  try {
    return algebra_from_json(read_json_file(path));
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

inline Module load_module(const std::string& path, const AlgebraPtr& alg) {
  try {
    return module_from_json(read_json_file(path), alg);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

inline void save_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << dump(j);
}

}  // namespace ppfun::io
