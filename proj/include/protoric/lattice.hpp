#pragma once

// Exact integer matrix algebra: Smith and Hermite normal forms, saturated
// integer kernels, rank and determinant. Every entry is an arbitrary
// precision integer; nothing here touches floating point.

#include "protoric/core.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

namespace protoric {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Builds a matrix whose rows are the given vectors (all the same length).
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols_if_empty = 0) {
    const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw input_error("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows_if_empty = 0) {
    return from_rows(cols, rows_if_empty).transpose();
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  IntVector col(std::size_t j) const {
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  std::vector<IntVector> row_vectors() const {
    std::vector<IntVector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  std::vector<IntVector> col_vectors() const {
    std::vector<IntVector> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(col(j));
    return out;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row dst += k * row src
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
  }
  // col dst += k * col src
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }
  void negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw domain_error("matrix product dimension mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend IntVector operator*(const IntMatrix& a, const IntVector& v) {
    if (a.cols_ != v.size()) throw domain_error("matrix-vector dimension mismatch");
    IntVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    return out;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

inline Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw domain_error("dot product dimension mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

inline Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

/// v divided by the gcd of its entries. Throws on the zero vector, which
/// cannot generate a ray.
inline IntVector primitive(const IntVector& v) {
  if (v.empty()) throw input_error("empty vector");
  const Integer g = content(v);
  if (g == 0) throw input_error("zero vector is not a valid ray generator");
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

inline bool is_primitive(const IntVector& v) { return content(v) == 1; }

/// Fraction-free (Bareiss) determinant.
inline Integer determinant(IntMatrix a) {
  if (a.rows() != a.cols()) throw domain_error("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Rank over Q, by fraction-free elimination.
inline std::size_t rank(IntMatrix a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      const Integer f = a(i, c);
      const Integer g = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = a(i, j) * g - a(r, j) * f;
      const Integer h = content(a.row(i));
      if (h > 1)
        for (std::size_t j = c; j < a.cols(); ++j) a(i, j) /= h;
    }
    ++r;
  }
  return r;
}

inline std::size_t rank_of_vectors(const std::vector<IntVector>& vs, std::size_t dim) {
  if (vs.empty()) return 0;
  return rank(IntMatrix::from_rows(vs, dim));
}

struct SmithForm {
  IntMatrix U;  // unimodular, rows x rows
  IntMatrix D;  // diagonal, d_i | d_{i+1}, d_i >= 0
  IntMatrix V;  // unimodular, cols x cols
  std::vector<Integer> diagonal() const {
    std::vector<Integer> d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
  }
};

/// Smith normal form with transforms: U * A * V = D.
inline SmithForm smith_normal_form(const IntMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) throw domain_error("smith_normal_form of an empty matrix");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithForm s{IntMatrix::identity(m), a, IntMatrix::identity(n)};
  IntMatrix& d = s.D;

  auto row_swap = [&](std::size_t i, std::size_t j) {
    d.swap_rows(i, j);
    s.U.swap_rows(i, j);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    d.swap_cols(i, j);
    s.V.swap_cols(i, j);
  };
  auto row_add = [&](std::size_t dst, std::size_t src, const Integer& k) {
    d.add_row_multiple(dst, src, k);
    s.U.add_row_multiple(dst, src, k);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Integer& k) {
    d.add_col_multiple(dst, src, k);
    s.V.add_col_multiple(dst, src, k);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (d(i, j) != 0 && (!best || abs(d(i, j)) < abs(d(best->first, best->second)))) best = {i, j};
    if (!best) break;
    row_swap(t, best->first);
    col_swap(t, best->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        row_add(i, t, -(d(i, t) / d(t, t)));
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        col_add(j, t, -(d(t, j) / d(t, t)));
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        // a remainder is smaller than the pivot; move it into place
        std::optional<std::pair<std::size_t, std::size_t>> nb;
        for (std::size_t i = t + 1; i < m; ++i)
          if (d(i, t) != 0 && (!nb || abs(d(i, t)) < abs(d(nb->first, nb->second)))) nb = {i, t};
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(t, j) != 0 && (!nb || abs(d(t, j)) < abs(d(nb->first, nb->second)))) nb = {t, j};
        if (nb->first != t) row_swap(t, nb->first);
        if (nb->second != t) col_swap(t, nb->second);
        continue;
      }
      // divisibility chain: pull in any entry the pivot does not divide
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < m && !bad_row; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      row_add(t, *bad_row, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.U.negate_row(t);
    }
  }
  return s;
}

struct HermiteForm {
  IntMatrix H;  // row-style HNF
  IntMatrix T;  // unimodular, T * A = H
  std::size_t rank = 0;
};

/// Row Hermite normal form: echelon, positive pivots, entries above each
/// pivot reduced into [0, pivot). Zero rows collect at the bottom.
inline HermiteForm hermite_normal_form(const IntMatrix& a) {
  HermiteForm h{a, IntMatrix::identity(a.rows()), 0};
  IntMatrix& m = h.H;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    for (;;) {
      std::optional<std::size_t> p;
      for (std::size_t i = r; i < m.rows(); ++i)
        if (m(i, c) != 0 && (!p || abs(m(i, c)) < abs(m(*p, c)))) p = i;
      if (!p) break;
      m.swap_rows(r, *p);
      h.T.swap_rows(r, *p);
      bool clean = true;
      for (std::size_t i = r + 1; i < m.rows(); ++i) {
        if (m(i, c) == 0) continue;
        const Integer q = floor_div(m(i, c), m(r, c));
        m.add_row_multiple(i, r, -q);
        h.T.add_row_multiple(i, r, -q);
        if (m(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (m(r, c) == 0) continue;
    if (m(r, c) < 0) {
      m.negate_row(r);
      h.T.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Integer q = floor_div(m(i, c), m(r, c));
      m.add_row_multiple(i, r, -q);
      h.T.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  h.rank = r;
  return h;
}

/// Canonical basis of the lattice spanned by the given columns: the column
/// Hermite form with zero columns dropped.
inline IntMatrix column_hermite_basis(const IntMatrix& a) {
  if (a.cols() == 0) return a;
  const HermiteForm h = hermite_normal_form(a.transpose());
  IntMatrix out(a.rows(), h.rank);
  for (std::size_t j = 0; j < h.rank; ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) out(i, j) = h.H(j, i);
  return out;
}

/// Integer basis (as columns) of { c : A c = 0 }, saturated and put in
/// canonical column Hermite form. May have zero columns.
inline IntMatrix integer_kernel(const IntMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) throw domain_error("integer_kernel of an empty matrix");
  const HermiteForm h = hermite_normal_form(a.transpose());
  std::vector<IntVector> basis;
  for (std::size_t i = h.rank; i < h.H.rows(); ++i) basis.push_back(h.T.row(i));
  if (basis.empty()) return IntMatrix(a.cols(), 0);
  return column_hermite_basis(IntMatrix::from_columns(basis));
}

/// Saturation test: the column lattice equals its rational span intersected
/// with Z^n, i.e. every nonzero Smith invariant is 1.
inline bool is_saturated(const IntMatrix& cols) {
  if (cols.cols() == 0) return true;
  const auto d = smith_normal_form(cols).diagonal();
  return std::all_of(d.begin(), d.end(), [](const Integer& x) { return x == 0 || x == 1; });
}

/// Same integer column lattice.
inline bool same_column_lattice(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) return false;
  return column_hermite_basis(a) == column_hermite_basis(b);
}

using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

inline RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix r(a.rows(), RatVector(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r[i][j] = Rational(a(i, j));
  return r;
}

/// Gauss-Jordan solve of a square system; nullopt when singular.
inline std::optional<RatVector> solve_square(RatMatrix a, RatVector b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    const Rational inv = Rational(1) / a[c][c];
    for (std::size_t j = c; j < n; ++j) a[c][j] *= inv;
    b[c] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  return b;
}

/// Inverse of a square matrix; nullopt when singular.
inline std::optional<RatMatrix> inverse(const RatMatrix& a) {
  const std::size_t n = a.size();
  RatMatrix inv(n, RatVector(n));
  for (std::size_t j = 0; j < n; ++j) {
    RatVector e(n);
    e[j] = 1;
    auto col = solve_square(a, e);
    if (!col) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) inv[i][j] = (*col)[i];
  }
  return inv;
}

/// Inverse of a unimodular integer matrix, which is again integral.
inline IntMatrix unimodular_inverse(const IntMatrix& u) {
  auto inv = inverse(to_rational(u));
  if (!inv) throw domain_error("matrix is singular");
  IntMatrix out(u.rows(), u.cols());
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) {
      if (denominator((*inv)[i][j]) != 1) throw domain_error("matrix is not unimodular");
      out(i, j) = numerator((*inv)[i][j]);
    }
  return out;
}

}  // namespace protoric
