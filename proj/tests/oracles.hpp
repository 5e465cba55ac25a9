#pragma once

// Exhaustive oracles over tiny fields. None of them call the linear algebra
// of the library: everything is enumeration plus schoolbook arithmetic.

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "ppfun/module.hpp"
#include "ppfun/pp.hpp"

namespace oracle {

using ppfun::Module;
using ppfun::PpFormula;
using ppfun::Vec;

/// Calls fn on every vector of GF(p)^n, in lexicographic order.
inline void for_each_vector(std::uint32_t p, std::size_t n, const std::function<void(const Vec&)>& fn) {
  Vec v(n, 0);
  while (true) {
    fn(v);
    std::size_t i = 0;
    while (i < n && ++v[i] == p) v[i++] = 0;
    if (i == n) return;
  }
}

inline std::size_t power(std::size_t p, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= p;
  return r;
}

/// r . v where r = sum_i r_i b_i acts through the action matrices of m.
inline Vec act(const Module& m, const Vec& r, const Vec& v) {
  const std::uint32_t p = m.field().prime();
  Vec out(m.dim(), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!r[i]) continue;
    const auto& a = m.action(i);
    for (std::size_t row = 0; row < m.dim(); ++row) {
      std::uint64_t acc = 0;
      for (std::size_t c = 0; c < m.dim(); ++c) acc += std::uint64_t(a(row, c)) * v[c];
      out[row] = static_cast<std::uint32_t>((out[row] + r[i] * (acc % p)) % p);
    }
  }
  return out;
}

inline Vec slot(const Vec& tuple, std::size_t k, std::size_t d) {
  return Vec(tuple.begin() + static_cast<std::ptrdiff_t>(k * d), tuple.begin() + static_cast<std::ptrdiff_t>((k + 1) * d));
}

/// Does some y satisfy every row  sum_j a_rj x_j = sum_k b_rk y_k ?
inline bool satisfies(const PpFormula& phi, const Module& m, const Vec& x) {
  const std::uint32_t p = m.field().prime();
  const std::size_t d = m.dim();
  bool found = false;
  for_each_vector(p, phi.m() * d, [&](const Vec& y) {
    if (found) return;
    for (std::size_t r = 0; r < phi.l(); ++r) {
      Vec lhs(d, 0), rhs(d, 0);
      for (std::size_t j = 0; j < phi.n(); ++j) {
        const Vec t = act(m, phi.A().at(r, j), slot(x, j, d));
        for (std::size_t i = 0; i < d; ++i) lhs[i] = (lhs[i] + t[i]) % p;
      }
      for (std::size_t k = 0; k < phi.m(); ++k) {
        const Vec t = act(m, phi.B().at(r, k), slot(y, k, d));
        for (std::size_t i = 0; i < d; ++i) rhs[i] = (rhs[i] + t[i]) % p;
      }
      if (lhs != rhs) return;
    }
    found = true;
  });
  return found;
}

/// phi(M) as an explicit set of tuples.
inline std::set<Vec> solution_set(const PpFormula& phi, const Module& m) {
  std::set<Vec> out;
  for_each_vector(m.field().prime(), phi.n() * m.dim(), [&](const Vec& x) {
    if (satisfies(phi, m, x)) out.insert(x);
  });
  return out;
}

/// Every vector of the subspace, enumerated from its basis.
inline std::set<Vec> elements(const ppfun::Subspace& s) {
  std::set<Vec> out;
  const std::uint32_t p = s.field().prime();
  for_each_vector(p, s.dim(), [&](const Vec& c) {
    Vec v(s.ambient_dim(), 0);
    for (std::size_t i = 0; i < s.dim(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = (v[j] + c[i] * s.basis()(i, j)) % p;
    out.insert(v);
  });
  return out;
}

/// Hom(M, N) as flattened (dimN x dimM, row-major) matrices commuting with every basis action.
inline std::set<Vec> homs(const Module& m, const Module& n) {
  const std::uint32_t p = m.field().prime();
  const std::size_t dm = m.dim(), dn = n.dim(), d = m.algebra()->dim();
  std::set<Vec> out;
  for_each_vector(p, dn * dm, [&](const Vec& x) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t col = 0; col < dm; ++col) {
        // X (A^M_i e_col) == A^N_i (X e_col)
        Vec mc(dm, 0), xc(dn, 0);
        for (std::size_t r = 0; r < dm; ++r) mc[r] = m.action(i)(r, col);
        Vec lhs(dn, 0);
        for (std::size_t r = 0; r < dn; ++r) {
          std::uint64_t acc = 0;
          for (std::size_t k = 0; k < dm; ++k) acc += std::uint64_t(x[r * dm + k]) * mc[k];
          lhs[r] = acc % p;
          xc[r] = x[r * dm + col];
        }
        for (std::size_t r = 0; r < dn; ++r) {
          std::uint64_t acc = 0;
          for (std::size_t k = 0; k < dn; ++k) acc += std::uint64_t(n.action(i)(r, k)) * xc[k];
          if (acc % p != lhs[r]) return;
        }
      }
    out.insert(x);
  });
  return out;
}

/**
 * dim of N (x)_R M via its dual: the balanced forms b(n, m) with
 * b(n r, m) = b(n, r m), i.e. (A^N_r)^T B = B A^M_r. Their number is p^dim.
 */
inline std::size_t tensor_dim(const Module& n, const Module& m) {
  const std::uint32_t p = m.field().prime();
  const std::size_t dn = n.dim(), dm = m.dim(), d = m.algebra()->dim();
  std::size_t count = 0;
  for_each_vector(p, dn * dm, [&](const Vec& b) {
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t i = 0; i < dn; ++i)
        for (std::size_t j = 0; j < dm; ++j) {
          std::uint64_t lhs = 0, rhs = 0;
          for (std::size_t k = 0; k < dn; ++k) lhs += std::uint64_t(n.action(r)(k, i)) * b[k * dm + j];
          for (std::size_t k = 0; k < dm; ++k) rhs += std::uint64_t(b[i * dm + k]) * m.action(r)(k, j);
          if (lhs % p != rhs % p) return;
        }
    ++count;
  });
  std::size_t dim = 0;
  while (power(p, dim) < count) ++dim;
  return dim;
}

}  // namespace oracle
