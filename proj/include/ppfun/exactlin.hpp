#pragma once

/**
 * @file exactlin.hpp
 * @brief Exact linear algebra over a prime field GF(p).
 *
 * Everything here is dense and exact. Matrices carry their field, vectors are
 * plain residue arrays, and subspaces are kept in reduced row-echelon form so
 * that two equal subspaces always have identical representations.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ppfun/errors.hpp"

namespace ppfun {

using Vec = std::vector<std::uint32_t>;

inline bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Arithmetic in GF(p), p < 2^16 so that products fit in 32 bits.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p = 2) : p_(p) {
    if (!is_prime(p) || p >= 65536)
      throw FieldError("modulus " + std::to_string(p) + " is not a supported prime");
  }

  std::uint32_t prime() const { return p_; }

  std::uint32_t reduce(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p_; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p_ - b) % p_; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return (a * b) % p_; }
  std::uint32_t inv(std::uint32_t a) const {
    if (a % p_ == 0) throw FieldError("inverse of zero");
    // Fermat: a^(p-2)
    std::uint32_t result = 1, base = a % p_, e = p_ - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

/// A single residue with its field attached; convenient for scalar work and tests.
class FieldElement {
 public:
  FieldElement(PrimeField f, long long v) : f_(f), v_(f.reduce(v)) {}

  std::uint32_t value() const { return v_; }
  const PrimeField& field() const { return f_; }

  FieldElement operator+(const FieldElement& o) const { return {f_, f_.add(v_, o.v_)}; }
  FieldElement operator-(const FieldElement& o) const { return {f_, f_.sub(v_, o.v_)}; }
  FieldElement operator*(const FieldElement& o) const { return {f_, f_.mul(v_, o.v_)}; }
  FieldElement operator/(const FieldElement& o) const { return {f_, f_.mul(v_, f_.inv(o.v_))}; }
  FieldElement operator-() const { return {f_, f_.neg(v_)}; }
  FieldElement inverse() const { return {f_, f_.inv(v_)}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.f_ == b.f_ && a.v_ == b.v_;
  }

 private:
  PrimeField f_;
  std::uint32_t v_;
};

/// Dense row-major matrix over GF(p).
class Matrix {
 public:
  Matrix() = default;
  Matrix(PrimeField f, std::size_t rows, std::size_t cols)
      : f_(f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(PrimeField f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(PrimeField f, const std::vector<std::vector<long long>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(f, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw DimensionMismatch("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = f.reduce(rows[i][j]);
    }
    return m;
  }

  /// Matrix whose rows are the given vectors (all of length `cols`).
  static Matrix from_vectors(PrimeField f, std::size_t cols, const std::vector<Vec>& rows) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionMismatch("vector length does not match");
      std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * cols);
    }
    return m;
  }

  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(PrimeField f, std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw DimensionMismatch("vector length does not match");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  const PrimeField& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const Vec& data() const { return data_; }

  Vec row(std::size_t r) const {
    return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  Vec col(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
    return v;
  }
  void set_row(std::size_t r, const Vec& v) {
    if (v.size() != cols_) throw DimensionMismatch("row length");
    std::copy(v.begin(), v.end(), data_.begin() + r * cols_);
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::uint32_t x) { return x == 0; });
  }

  Matrix transpose() const {
    Matrix t(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
    Matrix r(f_, rows_, o.cols_);
    const std::uint32_t p = f_.prime();
    for (std::size_t i = 0; i < rows_; ++i) {
      std::uint32_t* out = r.data_.data() + i * o.cols_;
      for (std::size_t k = 0; k < cols_; ++k) {
        const std::uint32_t a = (*this)(i, k);
        if (!a) continue;
        const std::uint32_t* in = o.data_.data() + k * o.cols_;
        for (std::size_t j = 0; j < o.cols_; ++j) out[j] = (out[j] + a * in[j]) % p;
      }
    }
    return r;
  }

  Vec operator*(const Vec& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape");
    Vec out(rows_, 0);
    const std::uint32_t p = f_.prime();
    for (std::size_t i = 0; i < rows_; ++i) {
      std::uint32_t acc = 0;
      const std::uint32_t* r = data_.data() + i * cols_;
      for (std::size_t j = 0; j < cols_; ++j) acc = (acc + r[j] * v[j]) % p;
      out[i] = acc;
    }
    return out;
  }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = f_.add(data_[i], o.data_[i]);
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = f_.sub(data_[i], o.data_[i]);
    return r;
  }
  Matrix scaled(std::uint32_t s) const {
    Matrix r = *this;
    for (auto& x : r.data_) x = f_.mul(x, s);
    return r;
  }
  /// this += s * o
  void add_scaled(const Matrix& o, std::uint32_t s) {
    check_same_shape(o);
    if (!s) return;
    for (std::size_t i = 0; i < data_.size(); ++i)
      data_[i] = (data_[i] + s * o.data_[i]) % f_.prime();
  }

  /// Copies `block` into this matrix with its top-left corner at (r, c).
  void set_block(std::size_t r, std::size_t c, const Matrix& block) {
    if (r + block.rows_ > rows_ || c + block.cols_ > cols_) throw DimensionMismatch("block out of range");
    for (std::size_t i = 0; i < block.rows_; ++i)
      std::copy(block.data_.begin() + i * block.cols_, block.data_.begin() + (i + 1) * block.cols_,
                data_.begin() + (r + i) * cols_ + c);
  }
  Matrix block(std::size_t r, std::size_t c, std::size_t nr, std::size_t nc) const {
    if (r + nr > rows_ || c + nc > cols_) throw DimensionMismatch("block out of range");
    Matrix b(f_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r + i, c + j);
    return b;
  }

  static Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) throw DimensionMismatch("hstack row counts");
    Matrix m(a.f_, a.rows_, a.cols_ + b.cols_);
    m.set_block(0, 0, a);
    m.set_block(0, a.cols_, b);
    return m;
  }
  static Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_) throw DimensionMismatch("vstack column counts");
    Matrix m(a.f_, a.rows_ + b.rows_, a.cols_);
    m.set_block(0, 0, a);
    m.set_block(a.rows_, 0, b);
    return m;
  }
  static Matrix block_diagonal(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) return Matrix();
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) r += b.rows_, c += b.cols_;
    Matrix m(blocks.front().f_, r, c);
    r = c = 0;
    for (const auto& b : blocks) {
      m.set_block(r, c, b);
      r += b.rows_;
      c += b.cols_;
    }
    return m;
  }
  /// Kronecker product a ⊗ b.
  static Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix m(a.f_, a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) {
        const std::uint32_t s = a(i, j);
        if (!s) continue;
        for (std::size_t k = 0; k < b.rows_; ++k)
          for (std::size_t l = 0; l < b.cols_; ++l)
            m(i * b.rows_ + k, j * b.cols_ + l) = a.f_.mul(s, b(k, l));
      }
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << '[';
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j);
      os << "]\n";
    }
    return os;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shapes differ");
  }

  PrimeField f_{2};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

// ---------------------------------------------------------------------------
// Vector helpers

inline Vec zero_vec(std::size_t n) { return Vec(n, 0); }
inline Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}
inline bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}
inline void axpy(const PrimeField& f, Vec& y, std::uint32_t a, const Vec& x) {
  if (!a) return;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = (y[i] + a * x[i]) % f.prime();
}
inline Vec vsub(const PrimeField& f, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}
inline Vec vconcat(const Vec& a, const Vec& b) {
  Vec r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}
inline std::uint32_t dot(const PrimeField& f, const Vec& a, const Vec& b) {
  std::uint32_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = (acc + a[i] * b[i]) % f.prime();
  return acc;
}

// ---------------------------------------------------------------------------
// Row reduction

struct RrefResult {
  Matrix rref;                      ///< reduced row-echelon form (zero rows dropped)
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
  std::size_t rank = 0;
};

/// Gauss-Jordan elimination. Zero rows are removed from the result.
inline RrefResult rref(Matrix m) {
  const PrimeField f = m.field();
  const std::uint32_t p = f.prime();
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = r;
    while (piv < R && m(piv, c) == 0) ++piv;
    if (piv == R) continue;
    if (piv != r)
      for (std::size_t j = c; j < C; ++j) std::swap(m(piv, j), m(r, j));
    const std::uint32_t inv = f.inv(m(r, c));
    for (std::size_t j = c; j < C; ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r) continue;
      const std::uint32_t factor = m(i, c);
      if (!factor) continue;
      const std::uint32_t neg = p - factor;
      for (std::size_t j = c; j < C; ++j) m(i, j) = (m(i, j) + neg * m(r, j)) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  return {m.block(0, 0, r, C), std::move(pivots), r};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

class Subspace;
Subspace kernel(const Matrix& m);
Subspace column_space(const Matrix& m);

/**
 * A linear subspace of K^n stored by its canonical RREF basis (one basis
 * vector per row). Equal subspaces compare equal bitwise.
 */
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(PrimeField f, std::size_t n) {
    Subspace s;
    s.ambient_ = n;
    s.basis_ = Matrix(f, 0, n);
    return s;
  }
  static Subspace whole(PrimeField f, std::size_t n) {
    Subspace s;
    s.ambient_ = n;
    s.basis_ = Matrix::identity(f, n);
    for (std::size_t i = 0; i < n; ++i) s.pivots_.push_back(i);
    return s;
  }
  /// Span of the rows of `rows`.
  static Subspace span_rows(const Matrix& rows) {
    RrefResult r = rref(rows);
    Subspace s;
    s.ambient_ = rows.cols();
    s.basis_ = std::move(r.rref);
    s.pivots_ = std::move(r.pivots);
    return s;
  }
  static Subspace span(PrimeField f, std::size_t n, const std::vector<Vec>& vectors) {
    return span_rows(Matrix::from_vectors(f, n, vectors));
  }

  const PrimeField& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vec> vectors() const {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
    return out;
  }

  /// v minus its projection along the basis onto the pivot coordinates.
  /// The result is zero exactly when v lies in the subspace.
  Vec reduce(Vec v) const {
    check_len(v);
    const PrimeField& f = field();
    for (std::size_t i = 0; i < dim(); ++i) {
      const std::uint32_t c = v[pivots_[i]];
      if (c) {
        const std::uint32_t neg = f.neg(c);
        const std::size_t n = ambient_;
        for (std::size_t j = 0; j < n; ++j) v[j] = (v[j] + neg * basis_(i, j)) % f.prime();
      }
    }
    return v;
  }
  bool contains(const Vec& v) const { return ppfun::is_zero(reduce(v)); }
  bool contains(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw DimensionMismatch("subspace ambient dimensions differ");
    for (std::size_t i = 0; i < o.dim(); ++i)
      if (!contains(o.vector(i))) return false;
    return true;
  }
  /// Coordinates of v (assumed to lie in the subspace) relative to the basis.
  Vec coords(const Vec& v) const {
    check_len(v);
    Vec c(dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    return c;
  }
  Vec from_coords(const Vec& c) const {
    Vec v(ambient_, 0);
    for (std::size_t i = 0; i < dim(); ++i) axpy(field(), v, c[i], basis_.row(i));
    return v;
  }

  Subspace operator+(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw DimensionMismatch("subspace ambient dimensions differ");
    return span_rows(Matrix::vstack(basis_, o.basis_));
  }
  Subspace intersect(const Subspace& o) const;
  /// Orthogonal complement under the standard dot product.
  Subspace perp() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  void check_len(const Vec& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector length does not match ambient dimension");
  }

  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}
inline Subspace kernel(const Matrix& m) {
  const RrefResult r = rref(m);
  const std::size_t n = m.cols();
  const PrimeField& f = m.field();
  std::vector<bool> is_pivot(n, false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<Vec> vs;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = f.neg(r.rref(i, free));
    vs.push_back(std::move(v));
  }
  return Subspace::span(f, n, vs);
}

inline Subspace column_space(const Matrix& m) { return Subspace::span_rows(m.transpose()); }

inline Subspace Subspace::perp() const { return kernel(basis_); }

inline Subspace Subspace::intersect(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw DimensionMismatch("subspace ambient dimensions differ");
  return (perp() + o.perp()).perp();
}

struct RrefDecomposition {
  Matrix rref;
  std::size_t rank = 0;
  Subspace kernel;
  Subspace image;
};

inline RrefDecomposition rref_decompose(const Matrix& m) {
  RrefResult r = rref(m);
  return {std::move(r.rref), r.rank, kernel(m), column_space(m)};
}

struct SumIntersection {
  Subspace sum;
  Subspace intersection;
};

inline SumIntersection subspace_ops(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionMismatch("subspace ambient dimensions differ");
  return {u + v, u.intersect(v)};
}

/**
 * Annihilator of `s` under the bilinear form given by `pairing`:
 * { f : f^T · pairing · a = 0 for all a in s }.
 */
inline Subspace pairing_annihilator(const Subspace& s, const Matrix& pairing) {
  const std::size_t n = s.ambient_dim();
  if (pairing.rows() != n || pairing.cols() != n)
    throw DimensionMismatch("pairing matrix must be square of the ambient dimension");
  if (rank(pairing) != n) throw DegeneratePairing("pairing matrix is degenerate");
  // f^T P a = 0  <=>  (a^T P^T) f = 0 for every basis row a
  return kernel(s.basis() * pairing.transpose());
}

/// Some solution x of a x = b, if any.
inline std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("right-hand side length");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < b.size(); ++i) aug(i, a.cols()) = b[i];
  const RrefResult r = rref(aug);
  Vec x(a.cols(), 0);
  for (std::size_t i = 0; i < r.rank; ++i) {
    if (r.pivots[i] == a.cols()) return std::nullopt;
    x[r.pivots[i]] = r.rref(i, a.cols());
  }
  return x;
}

/**
 * A subquotient total/relations of K^n with relations ⊆ total. Classes are
 * represented by reducing modulo the relations; the basis of the quotient is
 * the canonical RREF basis of the reduced total space.
 */
class Subquotient {
 public:
  Subquotient() = default;
  Subquotient(Subspace total, Subspace relations)
      : total_(std::move(total)), relations_(std::move(relations)) {
    if (!total_.contains(relations_)) throw DimensionMismatch("relations are not contained in total");
    std::vector<Vec> reduced;
    for (std::size_t i = 0; i < total_.dim(); ++i) reduced.push_back(relations_.reduce(total_.vector(i)));
    complement_ = Subspace::span(total_.field(), total_.ambient_dim(), reduced);
  }

  const Subspace& total() const { return total_; }
  const Subspace& relations() const { return relations_; }
  const Subspace& complement() const { return complement_; }
  std::size_t ambient_dim() const { return total_.ambient_dim(); }
  std::size_t dim() const { return complement_.dim(); }

  /// Coordinates of the class of v (v must lie in total).
  Vec coords(const Vec& v) const { return complement_.coords(relations_.reduce(v)); }
  /// Canonical representative of the class with the given coordinates.
  Vec lift(const Vec& c) const { return complement_.from_coords(c); }

  /**
   * Matrix of the map induced by a linear map `m` of ambients onto another
   * subquotient. Returns nullopt if `m` does not respect total or relations.
   */
  std::optional<Matrix> induced(const Subquotient& target, const Matrix& m) const {
    if (m.cols() != ambient_dim() || m.rows() != target.ambient_dim())
      throw DimensionMismatch("induced map shape");
    for (std::size_t i = 0; i < relations_.dim(); ++i)
      if (!target.relations_.contains(m * relations_.vector(i))) return std::nullopt;
    Matrix out(total_.field(), target.dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      const Vec img = m * complement_.vector(j);
      if (!target.total_.contains(img)) return std::nullopt;
      const Vec c = target.coords(img);
      for (std::size_t i = 0; i < c.size(); ++i) out(i, j) = c[i];
    }
    return out;
  }

 private:
  Subspace total_;
  Subspace relations_;
  Subspace complement_;
};

}  // namespace ppfun
