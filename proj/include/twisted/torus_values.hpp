#pragma once

// Circle-group values e^{2 pi i x} stored additively through their exponent x,
// written as a rational plus a Q-linear combination of formal irrationals.

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "twisted/errors.hpp"
#include "twisted/rational.hpp"

namespace twisted {

/// Symbols declared Q-linearly independent together with 1. Independence is
/// a declaration; nothing here checks it.
class IrrationalBasis {
 public:
  IrrationalBasis() = default;

  std::size_t add(std::string label, std::optional<double> hint = std::nullopt) {
    if (find(label)) throw BasisMismatch("duplicate irrational label '" + label + "'");
    labels_.push_back(std::move(label));
    hints_.push_back(hint);
    return labels_.size() - 1;
  }

  std::optional<std::size_t> find(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
  }

  std::size_t index_of(const std::string& label) const {
    if (auto i = find(label)) return *i;
    throw BasisMismatch("unknown irrational label '" + label + "'");
  }

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::optional<double>& hint(std::size_t i) const { return hints_.at(i); }
  void set_hint(std::size_t i, double value) { hints_.at(i) = value; }

  friend bool operator==(const IrrationalBasis& a, const IrrationalBasis& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::optional<double>> hints_;
};

class RotationNumber {
 public:
  using Term = std::pair<std::size_t, Rational>;

  RotationNumber() = default;

  explicit RotationNumber(Rational rat, std::vector<Term> irr = {})
      : rat_(std::move(rat)), irr_(std::move(irr)) {
    canonicalize();
  }

  static RotationNumber rational(std::int64_t p, std::int64_t q = 1) {
    return RotationNumber(Rational(p, q));
  }

  static RotationNumber irrational(std::size_t index, Rational coeff = 1, Rational rat = 0) {
    return RotationNumber(std::move(rat), {{index, std::move(coeff)}});
  }

  /// Rational part in [0, 1).
  const Rational& rational_part() const { return rat_; }
  /// Sorted by index, no zero coefficients.
  const std::vector<Term>& irrational_part() const { return irr_; }

  Rational coefficient(std::size_t index) const {
    auto it = std::lower_bound(irr_.begin(), irr_.end(), index,
                               [](const Term& t, std::size_t i) { return t.first < i; });
    return (it != irr_.end() && it->first == index) ? it->second : Rational(0);
  }

  bool is_rational() const { return irr_.empty(); }
  bool is_zero() const { return irr_.empty() && rat_ == 0; }

  /// Largest referenced basis index plus one (0 when purely rational).
  std::size_t basis_extent() const { return irr_.empty() ? 0 : irr_.back().first + 1; }

  RotationNumber& operator+=(const RotationNumber& other) {
    rat_ += other.rat_;
    std::vector<Term> merged;
    merged.reserve(irr_.size() + other.irr_.size());
    auto a = irr_.begin();
    auto b = other.irr_.begin();
    while (a != irr_.end() || b != other.irr_.end()) {
      if (b == other.irr_.end() || (a != irr_.end() && a->first < b->first)) {
        merged.push_back(*a++);
      } else if (a == irr_.end() || b->first < a->first) {
        merged.push_back(*b++);
      } else {
        Rational c = a->second + b->second;
        if (c != 0) merged.emplace_back(a->first, std::move(c));
        ++a;
        ++b;
      }
    }
    irr_ = std::move(merged);
    rat_ = mod_one(rat_);
    return *this;
  }

  RotationNumber& operator-=(const RotationNumber& other) { return *this += -other; }

  friend RotationNumber operator+(RotationNumber a, const RotationNumber& b) { return a += b; }
  friend RotationNumber operator-(RotationNumber a, const RotationNumber& b) { return a -= b; }

  friend RotationNumber operator-(const RotationNumber& x) {
    RotationNumber r;
    r.rat_ = mod_one(-x.rat_);
    r.irr_ = x.irr_;
    for (auto& t : r.irr_) t.second = -t.second;
    return r;
  }

  template <typename Int>
    requires std::integral<Int> || std::same_as<Int, Integer>
  friend RotationNumber operator*(const RotationNumber& x, const Int& k) {
    if (k == 0) return {};
    RotationNumber r;
    r.rat_ = mod_one(x.rat_ * Rational(Integer(k)));
    r.irr_ = x.irr_;
    for (auto& t : r.irr_) t.second *= Rational(Integer(k));
    return r;
  }

  template <typename Int>
    requires std::integral<Int> || std::same_as<Int, Integer>
  friend RotationNumber operator*(const Int& k, const RotationNumber& x) {
    return x * k;
  }

  friend bool operator==(const RotationNumber& a, const RotationNumber& b) {
    return a.rat_ == b.rat_ && a.irr_ == b.irr_;
  }

  /// Total order on canonical forms; used only for keying containers.
  friend bool operator<(const RotationNumber& a, const RotationNumber& b) {
    if (a.rat_ != b.rat_) return a.rat_ < b.rat_;
    return std::lexicographical_compare(
        a.irr_.begin(), a.irr_.end(), b.irr_.begin(), b.irr_.end(), [](const Term& x, const Term& y) {
          return x.first != y.first ? x.first < y.first : x.second < y.second;
        });
  }

 private:
  void canonicalize() {
    rat_ = mod_one(rat_);
    std::sort(irr_.begin(), irr_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    for (auto& t : irr_) {
      if (!out.empty() && out.back().first == t.first)
        out.back().second += t.second;
      else
        out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return t.second == 0; });
    irr_ = std::move(out);
  }

  Rational rat_;
  std::vector<Term> irr_;
};

inline RotationNumber add(const RotationNumber& x, const RotationNumber& y) { return x + y; }
inline RotationNumber negate(const RotationNumber& x) { return -x; }
inline RotationNumber scale(const RotationNumber& x, const Integer& k) { return x * k; }

/// x/2 computed on the representative with rational part in [0, 1).
inline RotationNumber halve(const RotationNumber& x) {
  std::vector<RotationNumber::Term> irr = x.irrational_part();
  for (auto& t : irr) t.second /= 2;
  return RotationNumber(x.rational_part() / 2, std::move(irr));
}

/// True iff e^{2 pi i x} = 1.
inline bool is_integral(const RotationNumber& x) { return x.is_zero(); }

inline void check_basis(const RotationNumber& x, const IrrationalBasis& basis) {
  if (x.basis_extent() > basis.size())
    throw BasisMismatch("rotation number references irrational #" + std::to_string(x.basis_extent() - 1) +
                        " but the basis has " + std::to_string(basis.size()) + " labels");
}

inline double to_double(const RotationNumber& x, const IrrationalBasis& basis) {
  check_basis(x, basis);
  double v = static_cast<double>(x.rational_part());
  for (const auto& [i, c] : x.irrational_part()) {
    const auto& h = basis.hint(i);
    if (!h) throw MissingHint("no numeric hint for irrational '" + basis.label(i) + "'");
    v += static_cast<double>(c) * *h;
  }
  return v;
}

/// e^{2 pi i x} in double precision.
inline std::complex<double> evaluate(const RotationNumber& x, const IrrationalBasis& basis = {}) {
  double v = to_double(x, basis);
  v -= std::floor(v);
  return std::polar(1.0, 2.0 * std::numbers::pi * v);
}

/// Debug form "p/q + c*#i ...", with #i the basis index.
inline std::ostream& operator<<(std::ostream& os, const RotationNumber& x) {
  os << to_string(x.rational_part());
  for (const auto& [i, c] : x.irrational_part()) os << " + " << to_string(c) << "*#" << i;
  return os;
}

}  // namespace twisted
