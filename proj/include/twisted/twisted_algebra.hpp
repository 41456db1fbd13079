#pragma once

// The twisted convolution algebra of a finite (G, sigma): convolution,
// involution, trace, the regular projective representations, and a numeric
// center computation that does not go through regularity.

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "twisted/algebra_element.hpp"
#include "twisted/errors.hpp"
#include "twisted/multipliers.hpp"

namespace twisted {

inline ExactElement convolve(const Multiplier& sigma, const ExactElement& f, const ExactElement& g) {
  const FiniteGroup& grp = sigma.group();
  ExactElement out;
  for (const auto& [b, fb] : f.coefficients())
    for (const auto& [c, gc] : g.coefficients()) out.add(grp.multiply(b, c), (fb * gc).rotated(sigma.value(b, c)));
  return out;
}

inline DenseElement convolve(const Multiplier& sigma, const DenseElement& f, const DenseElement& g,
                             const IrrationalBasis& basis = {}) {
  const FiniteGroup& grp = sigma.group();
  DenseElement out(grp.order());
  for (Element b = 0; b < grp.order(); ++b) {
    if (f[b] == 0.0) continue;
    for (Element c = 0; c < grp.order(); ++c)
      if (g[c] != 0.0) out[grp.multiply(b, c)] += f[b] * g[c] * evaluate(sigma.value(b, c), basis);
  }
  return out;
}

/// f*(a) = conj(sigma(a, a^-1)) conj(f(a^-1)).
inline ExactElement involution(const Multiplier& sigma, const ExactElement& f) {
  const FiniteGroup& grp = sigma.group();
  ExactElement out;
  for (const auto& [b, fb] : f.coefficients()) {
    const Element a = grp.inverse(b);
    out.add(a, fb.conj().rotated(-sigma.value(a, b)));
  }
  return out;
}

inline DenseElement involution(const Multiplier& sigma, const DenseElement& f, const IrrationalBasis& basis = {}) {
  const FiniteGroup& grp = sigma.group();
  DenseElement out(grp.order());
  for (Element a = 0; a < grp.order(); ++a)
    out[a] = std::conj(evaluate(sigma.value(a, grp.inverse(a)), basis)) * std::conj(f[grp.inverse(a)]);
  return out;
}

/// phi(f) = <f delta_e, delta_e> = f(e).
inline PhaseSum trace(const Multiplier& sigma, const ExactElement& f) { return f.at(sigma.group().identity()); }
inline std::complex<double> trace(const Multiplier& sigma, const DenseElement& f) {
  return f[sigma.group().identity()];
}

/// Generalized permutation matrix with unimodular entries: column j has its
/// single nonzero entry e^{2 pi i phase[j]} in row row[j].
struct MonomialMatrix {
  std::vector<Element> row;
  std::vector<RotationNumber> phase;

  static MonomialMatrix identity(std::size_t n) {
    MonomialMatrix m;
    for (Element j = 0; j < n; ++j) m.row.push_back(j);
    m.phase.resize(n);
    return m;
  }

  std::size_t size() const { return row.size(); }

  friend MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) {
    MonomialMatrix m;
    m.row.resize(b.size());
    m.phase.resize(b.size());
    for (Element j = 0; j < b.size(); ++j) {
      m.row[j] = a.row[b.row[j]];
      m.phase[j] = a.phase[b.row[j]] + b.phase[j];
    }
    return m;
  }

  MonomialMatrix rotated(const RotationNumber& x) const {
    MonomialMatrix m = *this;
    for (auto& p : m.phase) p += x;
    return m;
  }

  ExactElement apply(const ExactElement& v) const {
    ExactElement out;
    for (const auto& [j, c] : v.coefficients()) out.add(row[j], c.rotated(phase[j]));
    return out;
  }

  Eigen::MatrixXcd dense(const IrrationalBasis& basis = {}) const {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(size()), static_cast<Eigen::Index>(size()));
    for (Element j = 0; j < size(); ++j)
      m(static_cast<Eigen::Index>(row[j]), static_cast<Eigen::Index>(j)) = evaluate(phase[j], basis);
    return m;
  }

  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;
};

/// lambda(a) delta_b = sigma(a,b) delta_{ab}.
inline MonomialMatrix lambda_exact(const Multiplier& sigma, Element a) {
  const FiniteGroup& g = sigma.group();
  MonomialMatrix m;
  for (Element b = 0; b < g.order(); ++b) {
    m.row.push_back(g.multiply(a, b));
    m.phase.push_back(sigma.value(a, b));
  }
  return m;
}

/// (rho_bar(a) xi)(c) = conj(sigma(c,a)) xi(ca), i.e. delta_d -> conj(sigma(d a^-1, a)) delta_{d a^-1}.
inline MonomialMatrix rho_bar_exact(const Multiplier& sigma, Element a) {
  const FiniteGroup& g = sigma.group();
  const Element inv = g.inverse(a);
  MonomialMatrix m;
  for (Element d = 0; d < g.order(); ++d) {
    const Element c = g.multiply(d, inv);
    m.row.push_back(c);
    m.phase.push_back(-sigma.value(c, a));
  }
  return m;
}

inline Eigen::MatrixXcd lambda_matrix(const Multiplier& sigma, Element a, const IrrationalBasis& basis = {}) {
  return lambda_exact(sigma, a).dense(basis);
}

inline Eigen::MatrixXcd rho_bar_matrix(const Multiplier& sigma, Element a, const IrrationalBasis& basis = {}) {
  return rho_bar_exact(sigma, a).dense(basis);
}

struct NumericCenter {
  std::size_t dimension = 0;
  Eigen::VectorXd singular_values;  // descending
  double gap_ratio = std::numeric_limits<double>::infinity();
};

/// Counts singular values below `tol` as zero. Refuses with IllConditioned
/// when the smallest value kept is less than ten times the largest value
/// dropped, since the count would then depend on where `tol` happens to fall.
inline NumericCenter classify_spectrum(const Eigen::VectorXd& singular_values, double tol) {
  NumericCenter out;
  out.singular_values = singular_values;
  double largest_zero = 0.0;
  double smallest_nonzero = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < singular_values.size(); ++i) {
    const double s = singular_values(i);
    if (s < tol) {
      ++out.dimension;
      largest_zero = std::max(largest_zero, s);
    } else {
      smallest_nonzero = std::min(smallest_nonzero, s);
    }
  }
  if (out.dimension > 0 && std::isfinite(smallest_nonzero)) {
    out.gap_ratio = largest_zero > 0 ? smallest_nonzero / largest_zero : std::numeric_limits<double>::infinity();
    if (out.gap_ratio < 10.0)
      throw IllConditioned("singular values cluster at the tolerance: largest zero " + std::to_string(largest_zero) +
                           ", smallest nonzero " + std::to_string(smallest_nonzero));
  }
  return out;
}

/// Center of span{lambda(b)} as the nullspace of c -> ([lambda(a), sum_b c_b
/// lambda(b)] delta_e)_a. Evaluating at delta_e loses nothing because delta_e
/// separates the algebra. Singular values below tol count as zero; the
/// smallest nonzero one must exceed the largest zero one by a factor of 10,
/// otherwise IllConditioned.
inline NumericCenter center_numeric(const Multiplier& sigma, double tol = 1e-8, const IrrationalBasis& basis = {}) {
  const FiniteGroup& g = sigma.group();
  const auto n = static_cast<Eigen::Index>(g.order());
  const auto e = static_cast<Eigen::Index>(g.identity());
  std::vector<Eigen::MatrixXcd> lam;
  lam.reserve(g.order());
  for (Element a = 0; a < g.order(); ++a) lam.push_back(lambda_matrix(sigma, a, basis));

  Eigen::MatrixXcd stacked(n * n, n);
  for (Eigen::Index b = 0; b < n; ++b) {
    const Eigen::VectorXcd lb = lam[static_cast<std::size_t>(b)].col(e);
    for (Eigen::Index a = 0; a < n; ++a) {
      const auto& la = lam[static_cast<std::size_t>(a)];
      stacked.block(a * n, b, n, 1) = la * lb - lam[static_cast<std::size_t>(b)] * la.col(e);
    }
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stacked);
  return classify_spectrum(svd.singularValues(), tol);
}

inline std::size_t center_dimension_numeric(const Multiplier& sigma, double tol = 1e-8,
                                            const IrrationalBasis& basis = {}) {
  return center_numeric(sigma, tol, basis).dimension;
}

/// n when the algebra is M_n(C): |G| = n^2 and the center is one-dimensional.
inline std::optional<std::size_t> identify_matrix_algebra(const Multiplier& sigma, double tol = 1e-8,
                                                          const IrrationalBasis& basis = {}) {
  const std::size_t order = sigma.group().order();
  auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(order))));
  if (n * n != order) return std::nullopt;
  if (center_dimension_numeric(sigma, tol, basis) != 1) return std::nullopt;
  return n;
}

}  // namespace twisted
