#pragma once

#include <functional>
#include <numeric>
#include <vector>

#include "twisted/finite_groups.hpp"
#include "twisted/torus_values.hpp"

namespace twisted {

/// A map f: G1 x G2 -> T multiplicative in each variable, stored as exponents.
class Bihomomorphism {
 public:
  /// Validates both homomorphism laws exhaustively; throws InvalidBihomomorphism.
  Bihomomorphism(GroupPtr g1, GroupPtr g2, std::vector<std::vector<RotationNumber>> table)
      : g1_(std::move(g1)), g2_(std::move(g2)), table_(std::move(table)) {
    if (table_.size() != g1_->order()) throw InvalidBihomomorphism("bihomomorphism table has wrong row count");
    for (const auto& row : table_)
      if (row.size() != g2_->order()) throw InvalidBihomomorphism("bihomomorphism table has wrong column count");
    for (Element a1 = 0; a1 < g1_->order(); ++a1)
      for (Element b1 = 0; b1 < g1_->order(); ++b1)
        for (Element a2 = 0; a2 < g2_->order(); ++a2)
          if (at(g1_->multiply(a1, b1), a2) != at(a1, a2) + at(b1, a2))
            throw InvalidBihomomorphism("not multiplicative in the first variable at (" + g1_->name(a1) + "," +
                                        g1_->name(b1) + ";" + g2_->name(a2) + ")");
    for (Element a1 = 0; a1 < g1_->order(); ++a1)
      for (Element a2 = 0; a2 < g2_->order(); ++a2)
        for (Element b2 = 0; b2 < g2_->order(); ++b2)
          if (at(a1, g2_->multiply(a2, b2)) != at(a1, a2) + at(a1, b2))
            throw InvalidBihomomorphism("not multiplicative in the second variable at (" + g1_->name(a1) + ";" +
                                        g2_->name(a2) + "," + g2_->name(b2) + ")");
  }

  static Bihomomorphism trivial(GroupPtr g1, GroupPtr g2) {
    std::vector<std::vector<RotationNumber>> t(g1->order(), std::vector<RotationNumber>(g2->order()));
    return Bihomomorphism(std::move(g1), std::move(g2), std::move(t));
  }

  static Bihomomorphism from_function(GroupPtr g1, GroupPtr g2,
                                      const std::function<RotationNumber(Element, Element)>& f) {
    std::vector<std::vector<RotationNumber>> t(g1->order(), std::vector<RotationNumber>(g2->order()));
    for (Element a = 0; a < g1->order(); ++a)
      for (Element b = 0; b < g2->order(); ++b) t[a][b] = f(a, b);
    return Bihomomorphism(std::move(g1), std::move(g2), std::move(t));
  }

  /// f(x, y) = k x y / gcd(m, n) on Z_m x Z_n.
  static Bihomomorphism cyclic(std::size_t m, std::size_t n, std::int64_t k) {
    const auto d = static_cast<std::int64_t>(std::gcd(m, n));
    return from_function(share(twisted::cyclic(m)), share(twisted::cyclic(n)), [&](Element x, Element y) {
      return RotationNumber(Rational(k * static_cast<std::int64_t>(x) * static_cast<std::int64_t>(y), d));
    });
  }

  const RotationNumber& at(Element a1, Element a2) const { return table_[a1][a2]; }
  const RotationNumber& operator()(Element a1, Element a2) const { return at(a1, a2); }

  const FiniteGroup& first() const { return *g1_; }
  const FiniteGroup& second() const { return *g2_; }
  const GroupPtr& first_ptr() const { return g1_; }
  const GroupPtr& second_ptr() const { return g2_; }
  const std::vector<std::vector<RotationNumber>>& table() const { return table_; }

  bool is_trivial() const {
    for (const auto& row : table_)
      for (const auto& v : row)
        if (!v.is_zero()) return false;
    return true;
  }

 private:
  GroupPtr g1_, g2_;
  std::vector<std::vector<RotationNumber>> table_;
};

}  // namespace twisted
