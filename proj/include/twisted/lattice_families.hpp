#pragma once

// Infinite families: Z^n with sigma_theta(a,b) = sum_{i<j} a_i t_ij b_j, and
// the free nilpotent group G(3) of class 2 with its eight-parameter cocycle.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twisted/errors.hpp"
#include "twisted/integer_lattice.hpp"
#include "twisted/torus_values.hpp"

namespace twisted {

using LatticePoint = std::vector<std::int64_t>;

struct LatticeDecision {
  bool condition_k = true;
  /// Present whenever condition_k is false.
  std::optional<LatticePoint> witness;
};

inline LatticePoint to_lattice_point(const IntVector& v) {
  LatticePoint p;
  for (const auto& x : v) p.push_back(to_int64(x));
  return p;
}

/// theta = (t_ij)_{i<j}; indices are 0-based here, 1-based in JSON.
class Theta {
 public:
  Theta() = default;
  explicit Theta(std::size_t rank, IrrationalBasis basis = {}) : rank_(rank), basis_(std::move(basis)) {}

  void set(std::size_t i, std::size_t j, RotationNumber t) {
    if (i >= j || j >= rank_) throw DomainMismatch("theta entry (" + std::to_string(i + 1) + "," +
                                                   std::to_string(j + 1) + ") out of range");
    check_basis(t, basis_);
    if (t.is_zero())
      entries_.erase({i, j});
    else
      entries_[{i, j}] = std::move(t);
  }

  RotationNumber get(std::size_t i, std::size_t j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? RotationNumber{} : it->second;
  }

  /// Antisymmetric matrix entry: M_ij = t_ij (i<j), -t_ji (i>j), 0 on the diagonal.
  RotationNumber matrix(std::size_t i, std::size_t j) const {
    if (i < j) return get(i, j);
    if (i > j) return -get(j, i);
    return {};
  }

  std::size_t rank() const { return rank_; }
  const IrrationalBasis& basis() const { return basis_; }
  IrrationalBasis& basis() { return basis_; }
  const std::map<std::pair<std::size_t, std::size_t>, RotationNumber>& entries() const { return entries_; }

 private:
  std::size_t rank_ = 0;
  IrrationalBasis basis_;
  std::map<std::pair<std::size_t, std::size_t>, RotationNumber> entries_;
};

namespace detail {
inline void check_rank(const Theta& theta, const LatticePoint& v) {
  if (v.size() != theta.rank())
    throw DomainMismatch("vector of length " + std::to_string(v.size()) + " for rank " +
                         std::to_string(theta.rank()));
}
}  // namespace detail

inline RotationNumber torus_value(const Theta& theta, const LatticePoint& a, const LatticePoint& b) {
  detail::check_rank(theta, a);
  detail::check_rank(theta, b);
  RotationNumber r;
  for (const auto& [ij, t] : theta.entries()) r += t * (a[ij.first] * b[ij.second]);
  return r;
}

/// sigma(a,b) - sigma(b,a) = sum_{i<j} t_ij (a_i b_j - b_i a_j) = a^T M b.
inline RotationNumber commutator_phase(const Theta& theta, const LatticePoint& a, const LatticePoint& b) {
  detail::check_rank(theta, a);
  detail::check_rank(theta, b);
  RotationNumber r;
  for (const auto& [ij, t] : theta.entries())
    r += t * (a[ij.first] * b[ij.second] - b[ij.first] * a[ij.second]);
  return r;
}

/// a^T M integral componentwise; b -> a^T M b is Z-linear, so this decides
/// regularity against all of Z^n.
inline bool is_regular_lattice(const Theta& theta, const LatticePoint& a) {
  detail::check_rank(theta, a);
  for (std::size_t j = 0; j < theta.rank(); ++j) {
    RotationNumber s;
    for (std::size_t i = 0; i < theta.rank(); ++i)
      if (a[i] != 0) s += theta.matrix(i, j) * a[i];
    if (!is_integral(s)) return false;
  }
  return true;
}

inline LatticeDecision condition_k_lattice(const Theta& theta) {
  const std::size_t n = theta.rank();
  std::vector<std::vector<RotationNumber>> forms(n, std::vector<RotationNumber>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) forms[j][i] = theta.matrix(i, j);
  auto v = find_integral_combination(forms, n);
  if (!v) return {true, std::nullopt};
  return {false, to_lattice_point(*v)};
}

/// dim over Q of span{1, t12, t13, t23} (rank-3 theta only).
inline std::size_t qtheta_dimension(const Theta& theta) {
  if (theta.rank() != 3) throw DomainMismatch("Q_theta dimension is defined here for rank 3 only");
  std::size_t extent = 0;
  for (const auto& [ij, t] : theta.entries()) extent = std::max(extent, t.basis_extent());
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> one(extent + 1);
  one[0] = 1;
  rows.push_back(one);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      const RotationNumber t = theta.get(i, j);
      std::vector<Rational> row(extent + 1);
      row[0] = t.rational_part();
      for (const auto& [k, c] : t.irrational_part()) row[k + 1] = c;
      rows.push_back(std::move(row));
    }
  return rational_rank(std::move(rows));
}

/// sigma_theta as a family on Z^n.
struct TorusMultiplier {
  using element_type = LatticePoint;
  Theta theta;

  LatticePoint identity() const { return LatticePoint(theta.rank(), 0); }
  LatticePoint multiply(const LatticePoint& a, const LatticePoint& b) const {
    detail::check_rank(theta, a);
    detail::check_rank(theta, b);
    LatticePoint c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
  }
  LatticePoint inverse(const LatticePoint& a) const {
    LatticePoint c(a);
    for (auto& x : c) x = -x;
    return c;
  }
  RotationNumber value(const LatticePoint& a, const LatticePoint& b) const { return torus_value(theta, a, b); }
};

// ---------------------------------------------------------------------------
// G(3)

using G3Element = std::array<std::int64_t, 6>;

/// (a1+b1, a2+b2, a3+b3, a4+b4+a1 b2, a5+b5+a1 b3, a6+b6+a2 b3)
inline G3Element g3_multiply(const G3Element& a, const G3Element& b) {
  return {a[0] + b[0],        a[1] + b[1],        a[2] + b[2],
          a[3] + b[3] + a[0] * b[1], a[4] + b[4] + a[0] * b[2], a[5] + b[5] + a[1] * b[2]};
}

inline G3Element g3_inverse(const G3Element& a) {
  return {-a[0], -a[1], -a[2], -a[3] + a[0] * a[1], -a[4] + a[0] * a[2], -a[5] + a[1] * a[2]};
}

inline G3Element g3_central(std::int64_t c1, std::int64_t c2, std::int64_t c3) { return {0, 0, 0, c1, c2, c3}; }

/// The eight parameters of sigma_mu; row 3 column 1 is derived.
struct MuMatrix {
  RotationNumber mu11, mu12, mu13, mu21, mu22, mu23, mu32, mu33;
  IrrationalBasis basis;

  /// mu31 = mu22 - mu13, the value forced by the cocycle identity.
  RotationNumber mu31() const { return mu22 - mu13; }

  /// 1-based (i, j) with i, j in {1,2,3}.
  RotationNumber entry(int i, int j) const {
    switch (10 * i + j) {
      case 11: return mu11;
      case 12: return mu12;
      case 13: return mu13;
      case 21: return mu21;
      case 22: return mu22;
      case 23: return mu23;
      case 31: return mu31();
      case 32: return mu32;
      case 33: return mu33;
      default: throw DomainMismatch("mu index out of range");
    }
  }

  /// Parameter slot by its two-digit name ("11", ..., "33" except "31").
  RotationNumber& parameter(const std::string& name) {
    if (name == "11") return mu11;
    if (name == "12") return mu12;
    if (name == "13") return mu13;
    if (name == "21") return mu21;
    if (name == "22") return mu22;
    if (name == "23") return mu23;
    if (name == "32") return mu32;
    if (name == "33") return mu33;
    throw DomainMismatch("unknown mu parameter '" + name + "'");
  }

  static constexpr std::array<const char*, 8> parameter_names{"11", "12", "13", "21", "22", "23", "32", "33"};
};

/// Exponent of sigma_mu(a, b). The 1/2-terms are products of consecutive
/// integers and divide exactly. The mu13 and mu22 exponents carry +b3 a4 and
/// -b3 a4 respectively; with the opposite signs neither is a cocycle.
inline RotationNumber g3_value(const MuMatrix& mu, const G3Element& a, const G3Element& b) {
  const auto [a1, a2, a3, a4, a5, a6] = a;
  const auto [b1, b2, b3, b4, b5, b6] = b;
  (void)a5;
  (void)a6;
  (void)b1;
  RotationNumber r;
  r += mu.mu13 * (b6 * a1 + b3 * a4);
  r += mu.mu22 * (b5 * a2 + b3 * (a1 * a2 - a4));
  r += mu.mu11 * (b4 * a1 + b2 * (a1 * (a1 - 1) / 2));
  r += mu.mu21 * (a2 * (b4 + a1 * b2) + a1 * (b2 * (b2 - 1) / 2));
  r += mu.mu12 * (b5 * a1 + b3 * (a1 * (a1 - 1) / 2));
  r += mu.mu32 * (a3 * (b5 + a1 * b3) + a1 * (b3 * (b3 - 1) / 2));
  r += mu.mu23 * (b6 * a2 + b3 * (a2 * (a2 - 1) / 2));
  r += mu.mu33 * (a3 * (b6 + a2 * b3) + a2 * (b3 * (b3 - 1) / 2));
  return r;
}

/// sigma_mu(a, c) - sigma_mu(c, a).
inline RotationNumber g3_commutator_phase(const MuMatrix& mu, const G3Element& a, const G3Element& c) {
  return g3_value(mu, a, c) - g3_value(mu, c, a);
}

/// Decides whether some nonzero c in Z^3 has sum_j mu_ij c_j integral for
/// every row i; condition K holds iff none exists.
inline LatticeDecision g3_condition_k(const MuMatrix& mu) {
  std::vector<std::vector<RotationNumber>> forms(3, std::vector<RotationNumber>(3));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) forms[i - 1][j - 1] = mu.entry(i, j);
  auto v = find_integral_combination(forms, 3);
  if (!v) return {true, std::nullopt};
  return {false, to_lattice_point(*v)};
}

struct G3Multiplier {
  using element_type = G3Element;
  MuMatrix mu;

  G3Element identity() const { return {}; }
  G3Element multiply(const G3Element& a, const G3Element& b) const { return g3_multiply(a, b); }
  G3Element inverse(const G3Element& a) const { return g3_inverse(a); }
  RotationNumber value(const G3Element& a, const G3Element& b) const { return g3_value(mu, a, b); }
};

}  // namespace twisted
