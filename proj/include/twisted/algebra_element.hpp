#pragma once

// Finitely supported functions G -> C, in an exact and a floating form.

#include <complex>
#include <map>
#include <vector>

#include "twisted/finite_groups.hpp"
#include "twisted/torus_values.hpp"

namespace twisted {

/// Formal sum  sum_j q_j e^{2 pi i x_j}  with rational q_j.
///
/// Phases are kept with rational part in [0, 1/2) by absorbing e^{pi i} = -1
/// into the coefficient. Equal canonical forms imply equal complex values;
/// the converse does not hold for general cyclotomic relations, so equality
/// tests here are sound but not complete.
class PhaseSum {
 public:
  PhaseSum() = default;
  explicit PhaseSum(RotationNumber phase, Rational coeff = 1) { add_term(std::move(phase), std::move(coeff)); }

  void add_term(RotationNumber phase, Rational coeff) {
    if (coeff == 0) return;
    if (phase.rational_part() >= Rational(1, 2)) {
      phase += RotationNumber(Rational(1, 2));
      coeff = -coeff;
    }
    auto [it, inserted] = terms_.try_emplace(std::move(phase), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  PhaseSum& operator+=(const PhaseSum& other) {
    for (const auto& [p, c] : other.terms_) add_term(p, c);
    return *this;
  }
  friend PhaseSum operator+(PhaseSum a, const PhaseSum& b) { return a += b; }

  friend PhaseSum operator*(const PhaseSum& a, const PhaseSum& b) {
    PhaseSum r;
    for (const auto& [pa, ca] : a.terms_)
      for (const auto& [pb, cb] : b.terms_) r.add_term(pa + pb, ca * cb);
    return r;
  }

  /// Multiply by e^{2 pi i x}.
  PhaseSum rotated(const RotationNumber& x) const {
    PhaseSum r;
    for (const auto& [p, c] : terms_) r.add_term(p + x, c);
    return r;
  }

  PhaseSum conj() const {
    PhaseSum r;
    for (const auto& [p, c] : terms_) r.add_term(-p, c);
    return r;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<RotationNumber, Rational>& terms() const { return terms_; }

  std::complex<double> to_complex(const IrrationalBasis& basis = {}) const {
    std::complex<double> z = 0;
    for (const auto& [p, c] : terms_) z += static_cast<double>(c) * evaluate(p, basis);
    return z;
  }

  friend bool operator==(const PhaseSum&, const PhaseSum&) = default;

 private:
  std::map<RotationNumber, Rational> terms_;
};

/// Exact element of the twisted group algebra: support -> PhaseSum.
class ExactElement {
 public:
  ExactElement() = default;

  static ExactElement delta(Element a, RotationNumber phase = {}, Rational coeff = 1) {
    ExactElement f;
    f.add(a, PhaseSum(std::move(phase), std::move(coeff)));
    return f;
  }

  void add(Element a, const PhaseSum& c) {
    if (c.is_zero()) return;
    auto& slot = coeffs_[a];
    slot += c;
    if (slot.is_zero()) coeffs_.erase(a);
  }

  const PhaseSum& at(Element a) const {
    static const PhaseSum zero;
    auto it = coeffs_.find(a);
    return it == coeffs_.end() ? zero : it->second;
  }

  const std::map<Element, PhaseSum>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  friend bool operator==(const ExactElement&, const ExactElement&) = default;

 private:
  std::map<Element, PhaseSum> coeffs_;
};

/// Floating element: coefficient vector indexed by element.
using DenseElement = std::vector<std::complex<double>>;

inline DenseElement to_dense(const ExactElement& f, std::size_t order, const IrrationalBasis& basis = {}) {
  DenseElement v(order);
  for (const auto& [a, c] : f.coefficients()) v[a] = c.to_complex(basis);
  return v;
}

}  // namespace twisted
