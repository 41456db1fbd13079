#pragma once

// Exact integer and rational linear algebra: column Hermite normal form with a
// unimodular transform, integer kernels, rational rank, and the integral
// combination search behind the lattice condition-K decisions.

#include <algorithm>
#include <optional>
#include <vector>

#include "twisted/rational.hpp"
#include "twisted/torus_values.hpp"

namespace twisted {

using IntMatrix = std::vector<std::vector<Integer>>;  // row-major
using IntVector = std::vector<Integer>;

struct HermiteResult {
  IntMatrix hermite;    // A * transform, lower column-echelon form
  IntMatrix transform;  // unimodular, cols x cols
  std::size_t rank = 0;
};

/// Column-style Hermite normal form H = A U. Pivots are positive and entries
/// left of a pivot lie in [0, pivot). Pivoting picks the entry of minimal
/// absolute value to keep growth down.
inline HermiteResult column_hermite(IntMatrix a, std::size_t cols) {
  const std::size_t m = a.size();
  const std::size_t n = cols;
  IntMatrix u(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;

  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& row : a) std::swap(row[x], row[y]);
    for (auto& row : u) std::swap(row[x], row[y]);
  };
  auto sub_col = [&](std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (auto& row : a) row[dst] -= q * row[src];
    for (auto& row : u) row[dst] -= q * row[src];
  };
  auto neg_col = [&](std::size_t x) {
    for (auto& row : a) row[x] = -row[x];
    for (auto& row : u) row[x] = -row[x];
  };

  std::size_t p = 0;
  for (std::size_t i = 0; i < m && p < n; ++i) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t k = p; k < n; ++k)
        if (a[i][k] != 0 && (!best || abs(a[i][k]) < abs(a[i][*best]))) best = k;
      if (!best) break;
      swap_cols(p, *best);
      bool clean = true;
      for (std::size_t j = p + 1; j < n; ++j) {
        if (a[i][j] == 0) continue;
        sub_col(j, p, a[i][j] / a[i][p]);
        if (a[i][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[i][p] == 0) continue;
    if (a[i][p] < 0) neg_col(p);
    for (std::size_t j = 0; j < p; ++j) sub_col(j, p, floor_div(a[i][j], a[i][p]));
    ++p;
  }
  return {std::move(a), std::move(u), p};
}

/// Basis of { v in Z^cols : A v = 0 }, as a list of vectors.
inline std::vector<IntVector> integer_kernel(const IntMatrix& a, std::size_t cols) {
  HermiteResult h = column_hermite(a, cols);
  std::vector<IntVector> basis;
  for (std::size_t j = h.rank; j < cols; ++j) {
    IntVector v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = h.transform[i][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Rank over Q of a list of equal-length rational vectors.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t n = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < n; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

inline Integer lcm_of(const Integer& a, const Integer& b) { return a / gcd(a, b) * b; }

/// Clears denominators of a rational row, giving a primitive-scaled integer row.
inline IntVector integer_row(const std::vector<Rational>& row) {
  Integer den = 1;
  for (const auto& x : row) den = lcm_of(den, denominator_of(x));
  IntVector out;
  for (const auto& x : row) out.push_back(numerator_of(x) * (den / denominator_of(x)));
  return out;
}

/// Nonzero v in Z^vars with  sum_i v_i forms[j][i]  integral for every j, or
/// nullopt if none exists. Integrality forces every irrational coordinate of
/// each form to vanish; on that rational kernel, scaling a primitive lattice
/// vector by the denominators of its rational parts finishes the job.
inline std::optional<IntVector> find_integral_combination(const std::vector<std::vector<RotationNumber>>& forms,
                                                          std::size_t vars) {
  std::size_t extent = 0;
  for (const auto& f : forms)
    for (const auto& x : f) extent = std::max(extent, x.basis_extent());

  IntMatrix constraints;
  for (const auto& f : forms) {
    for (std::size_t k = 0; k < extent; ++k) {
      std::vector<Rational> row(vars);
      bool nonzero = false;
      for (std::size_t i = 0; i < vars; ++i) {
        row[i] = f[i].coefficient(k);
        nonzero = nonzero || row[i] != 0;
      }
      if (nonzero) constraints.push_back(integer_row(row));
    }
  }

  std::vector<IntVector> kernel = integer_kernel(constraints, vars);
  if (kernel.empty()) return std::nullopt;

  auto height = [](const IntVector& v) {
    Integer h = 0;
    for (const auto& x : v) h = std::max(h, Integer(abs(x)));
    return h;
  };
  IntVector v = *std::min_element(kernel.begin(), kernel.end(),
                                  [&](const IntVector& x, const IntVector& y) { return height(x) < height(y); });
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, Integer(abs(x)));
  for (auto& x : v) x /= g;
  if (auto first = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; }); *first < 0)
    for (auto& x : v) x = -x;

  Integer q = 1;
  for (const auto& f : forms) {
    Rational s = 0;
    for (std::size_t i = 0; i < vars; ++i) s += Rational(v[i]) * f[i].rational_part();
    q = lcm_of(q, denominator_of(s));
  }
  for (auto& x : v) x *= q;
  return v;
}

}  // namespace twisted
