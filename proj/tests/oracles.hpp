#pragma once

// Brute-force reference implementations used only by the tests. None of
// them call into the algorithms they check; they share the number types and
// small vector helpers only.

#include "protoric/core.hpp"
#include "protoric/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using protoric::Integer;
using protoric::IntMatrix;
using protoric::IntVector;
using protoric::Rational;

using RatRow = std::vector<Rational>;

// Gaussian elimination on a rational augmented system A c = b (A given by
// columns). Returns one solution if consistent.
inline std::optional<RatRow> solve(const std::vector<IntVector>& cols, const IntVector& b) {
  const std::size_t n = b.size();
  const std::size_t k = cols.size();
  std::vector<RatRow> a(n, RatRow(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = Rational(cols[j][i]);
    a[i][k] = Rational(b[i]);
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j <= k; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i)
    if (a[i][k] != 0) return std::nullopt;
  RatRow x(k);
  for (std::size_t i = 0; i < r; ++i) x[pivots[i]] = a[i][k] / a[i][pivots[i]];
  return x;
}

inline std::size_t rank_of(const std::vector<IntVector>& vs, std::size_t dim) {
  std::vector<RatRow> a;
  for (const auto& v : vs) {
    RatRow row(dim);
    for (std::size_t i = 0; i < dim; ++i) row[i] = Rational(v[i]);
    a.push_back(std::move(row));
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < dim; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

// Carathéodory: x lies in cone(gens) iff it is a nonnegative combination of
// some linearly independent subset of the generators.
inline bool in_cone(const std::vector<IntVector>& gens, const IntVector& x) {
  if (std::all_of(x.begin(), x.end(), [](const Integer& v) { return v == 0; })) return true;
  const std::size_t k = gens.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<IntVector> sub;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1U) sub.push_back(gens[i]);
    if (rank_of(sub, x.size()) != sub.size()) continue;
    const auto c = solve(sub, x);
    if (c && std::all_of(c->begin(), c->end(), [](const Rational& v) { return v >= 0; })) return true;
  }
  return false;
}

inline void for_each_box_point(std::size_t n, int bound, const std::function<void(const IntVector&)>& fn) {
  IntVector x(n, Integer(-bound));
  for (;;) {
    fn(x);
    std::size_t i = 0;
    while (i < n) {
      if (x[i] < bound) {
        ++x[i];
        break;
      }
      x[i] = -bound;
      ++i;
    }
    if (i == n) return;
  }
}

// Pointed iff no generator has its negative in the cone: a nontrivial
// nonnegative relation sum c_i g_i = 0 puts -g_i in the cone for any c_i > 0.
inline bool is_pointed(const std::vector<IntVector>& gens) {
  for (const auto& g : gens) {
    IntVector neg = g;
    for (auto& x : neg) x = -x;
    if (in_cone(gens, neg)) return false;
  }
  return true;
}

// Semigroup membership: x is a nonnegative integer combination of `basis`.
// In a pointed cone only finitely many lattice points lie below x in the
// cone order, so the memoised recursion on x - h terminates.
class Representability {
 public:
  Representability(std::vector<IntVector> cone_gens, std::vector<IntVector> basis)
      : cone_(std::move(cone_gens)), basis_(std::move(basis)) {}

  bool operator()(const IntVector& x) {
    if (std::all_of(x.begin(), x.end(), [](const Integer& v) { return v == 0; })) return true;
    if (auto it = memo_.find(x); it != memo_.end()) return it->second;
    bool ok = false;
    for (const auto& h : basis_) {
      IntVector y(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] - h[i];
      if (!member(y)) continue;
      if ((*this)(y)) {
        ok = true;
        break;
      }
    }
    memo_.emplace(x, ok);
    return ok;
  }

  bool member(const IntVector& y) {
    if (auto it = cone_memo_.find(y); it != cone_memo_.end()) return it->second;
    return cone_memo_.emplace(y, in_cone(cone_, y)).first->second;
  }

 private:
  std::vector<IntVector> cone_;
  std::vector<IntVector> basis_;
  std::map<IntVector, bool> memo_;
  std::map<IntVector, bool> cone_memo_;
};

// Rational Gaussian elimination, independent of the library's Bareiss code.
inline Integer det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<RatRow> a(n, RatRow(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return protoric::numerator(d);
}

// gcd of all k x k minors of a (the k-th determinantal divisor).
inline Integer determinantal_divisor(const IntMatrix& a, std::size_t k) {
  Integer g = 0;
  std::vector<std::size_t> rows(k), cols(k);
  std::function<void(std::size_t, std::size_t)> pick_cols;
  std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t depth, std::size_t start) {
    if (depth == k) {
      pick_cols(0, 0);
      return;
    }
    for (std::size_t i = start; i < a.rows(); ++i) {
      rows[depth] = i;
      pick_rows(depth + 1, i + 1);
    }
  };
  pick_cols = [&](std::size_t depth, std::size_t start) {
    if (depth == k) {
      IntMatrix m(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = a(rows[i], cols[j]);
      g = protoric::gcd(g, det(m));
      return;
    }
    for (std::size_t j = start; j < a.cols(); ++j) {
      cols[depth] = j;
      pick_cols(depth + 1, j + 1);
    }
  };
  pick_rows(0, 0);
  return g;
}

inline bool is_unimodular(const IntMatrix& u) {
  if (u.rows() != u.cols()) return false;
  const Integer d = det(u);
  return d == 1 || d == -1;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = dist(rng);
  return a;
}

// Product of random elementary column operations.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 12) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int s = 0; s < steps; ++s) {
    const std::size_t a = idx(rng);
    std::size_t b = idx(rng);
    if (a == b) b = (a + 1) % n;
    const int c = coef(rng);
    for (std::size_t i = 0; i < n; ++i) u(i, b) += c * u(i, a);
  }
  return u;
}

// Confluent rewriting for K(CP¹_Q) at a common level L with y = x^{1/L}:
// y^k -> y^a + y^{k-a} - 1 until only y^0 and y^1 remain; y^{-k} = 2 - y^k.
// Returns (alpha, beta) with the element equal to alpha * 1 + beta * y.
class KRingRewriter {
 public:
  explicit KRingRewriter(std::uint64_t seed) : rng_(seed) {}

  std::pair<Integer, Integer> power(std::int64_t k) {
    if (k == 0) return {1, 0};
    if (k == 1) return {0, 1};
    if (k < 0) {
      auto [a, b] = power(-k);
      return {2 - a, -b};
    }
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    std::int64_t split;
    if (k <= 64) {
      split = std::uniform_int_distribution<std::int64_t>(1, k - 1)(rng_);
    } else {
      split = (rng_() & 1U) ? k / 2 : k - k / 2;
    }
    auto [a1, b1] = power(split);
    auto [a2, b2] = power(k - split);
    std::pair<Integer, Integer> out{a1 + a2 - 1, b1 + b2};
    memo_.emplace(k, out);
    return out;
  }

  void reset() { memo_.clear(); }

 private:
  std::mt19937_64 rng_;
  std::map<std::int64_t, std::pair<Integer, Integer>> memo_;
};

}  // namespace oracle
