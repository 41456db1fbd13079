#pragma once

// Multipliers on G1 x G2 assembled from (sigma1, sigma2, f) and the
// regularity criteria that split along the factors.

#include <memory>
#include <optional>
#include <string>

#include "twisted/bihomomorphism.hpp"
#include "twisted/errors.hpp"
#include "twisted/multipliers.hpp"
#include "twisted/regularity.hpp"

namespace twisted {

struct ProductTriple {
  MultiplierPtr sigma1;
  MultiplierPtr sigma2;
  std::shared_ptr<const Bihomomorphism> f;

  const FiniteGroup& g1() const { return sigma1->group(); }
  const FiniteGroup& g2() const { return sigma2->group(); }
  ProductIndex index() const { return {g2().order()}; }
};

/// sigma((a1,a2),(b1,b2)) = sigma1(a1,b1) + sigma2(a2,b2) + f(b1,a2).
inline Multiplier assemble(const ProductTriple& t) {
  auto same = [](const FiniteGroup& x, const FiniteGroup& y) {
    return &x == &y || x.table() == y.table();
  };
  if (!same(t.f->first(), t.g1()) || !same(t.f->second(), t.g2()))
    throw InvalidBihomomorphism("bihomomorphism is defined on different groups than the factor multipliers");
  return Multiplier(share(direct_product(t.g1(), t.g2())), ProductCocycle{t.sigma1, t.sigma2, t.f});
}

inline Multiplier assemble(MultiplierPtr sigma1, MultiplierPtr sigma2, std::shared_ptr<const Bihomomorphism> f) {
  return assemble(ProductTriple{std::move(sigma1), std::move(sigma2), std::move(f)});
}

/// sigma restricted to G1 x {e} (first = true) or {e} x G2, as a table on the factor.
inline Multiplier restrict_to_factor(const Multiplier& sigma, GroupPtr factor, std::size_t second_order, bool first) {
  const ProductIndex idx{second_order};
  const Element e1 = idx.first(sigma.group().identity());
  const Element e2 = idx.second(sigma.group().identity());
  return Multiplier::from_function(std::move(factor), [&](Element a, Element b) {
    return first ? sigma.value(idx.pack(a, e2), idx.pack(b, e2)) : sigma.value(idx.pack(e1, a), idx.pack(e1, b));
  });
}

/// [sigma(a,b) - sigma(b,a)] + [f(a1,b2) - f(b1,a2)] ==
/// [sigma1(a1,b1) - sigma1(b1,a1)] + [sigma2(a2,b2) - sigma2(b2,a2)].
inline bool regularity_identity_check(const ProductTriple& t, const Multiplier& sigma, Element a, Element b) {
  const ProductIndex idx = t.index();
  const Element a1 = idx.first(a), a2 = idx.second(a), b1 = idx.first(b), b2 = idx.second(b);
  const RotationNumber lhs = sigma.value(a, b) - sigma.value(b, a) + t.f->at(a1, b2) - t.f->at(b1, a2);
  const RotationNumber rhs =
      t.sigma1->value(a1, b1) - t.sigma1->value(b1, a1) + t.sigma2->value(a2, b2) - t.sigma2->value(b2, a2);
  return lhs == rhs;
}

struct FDegeneracyReport {
  bool holds = true;
  /// A nontrivial class of G1 x G2 where neither condition can be met.
  std::optional<ConjugacyClass> failing_class;
};

/// For every nontrivial class C there are a in C and b with either
///   a1 b1 = b1 a1 and f(b1,a2) != sigma1(b1,a1) - sigma1(a1,b1), or
///   a2 b2 = b2 a2 and f(a1,b2) != sigma2(a2,b2) - sigma2(b2,a2).
/// Equivalent to condition K for the assembled multiplier.
inline FDegeneracyReport f_degeneracy(const ProductTriple& t) {
  const FiniteGroup g = direct_product(t.g1(), t.g2());
  const ProductIndex idx = t.index();
  const FiniteGroup& g1 = t.g1();
  const FiniteGroup& g2 = t.g2();
  FDegeneracyReport report;
  for (const auto& cls : g.conjugacy_classes()) {
    if (cls.representative == g.identity()) continue;
    bool met = false;
    for (Element a : cls.members) {
      const Element a1 = idx.first(a), a2 = idx.second(a);
      for (Element b1 = 0; b1 < g1.order() && !met; ++b1)
        met = g1.commute(a1, b1) &&
              t.f->at(b1, a2) != t.sigma1->value(b1, a1) - t.sigma1->value(a1, b1);
      for (Element b2 = 0; b2 < g2.order() && !met; ++b2)
        met = g2.commute(a2, b2) &&
              t.f->at(a1, b2) != t.sigma2->value(a2, b2) - t.sigma2->value(b2, a2);
      if (met) break;
    }
    if (!met) {
      report.holds = false;
      report.failing_class = cls;
      return report;
    }
  }
  return report;
}

struct TwoOfThree {
  bool regular = false;          // (i)   a is sigma-regular
  bool components_regular = false;  // (ii)  a_i is sigma_i-regular for i = 1, 2
  bool f_symmetric = false;      // (iii) f(a1,b2) = f(b1,a2) for b commuting with a
  bool f_trivial = false;        // (iv)  f(a1,b2) = f(b1,a2) = 1 for b commuting with a
};

/// Evaluates the four conditions at a and enforces: (iii) <=> (iv), and any
/// two of (i), (ii), (iii) imply the third. Throws LemmaViolation otherwise.
inline TwoOfThree two_of_three(const ProductTriple& t, const Multiplier& sigma, Element a) {
  const FiniteGroup& g = sigma.group();
  const ProductIndex idx = t.index();
  const Element a1 = idx.first(a), a2 = idx.second(a);
  TwoOfThree r;
  r.regular = is_regular_element(sigma, a);
  r.components_regular = is_regular_element(*t.sigma1, a1) && is_regular_element(*t.sigma2, a2);
  r.f_symmetric = true;
  r.f_trivial = true;
  for (Element b = 0; b < g.order(); ++b) {
    if (!g.commute(a, b)) continue;
    const RotationNumber& x = t.f->at(a1, idx.second(b));
    const RotationNumber& y = t.f->at(idx.first(b), a2);
    if (x != y) r.f_symmetric = false;
    if (!x.is_zero() || !y.is_zero()) r.f_trivial = false;
  }
  const int held = int(r.regular) + int(r.components_regular) + int(r.f_symmetric);
  if (r.f_symmetric != r.f_trivial || held == 2)
    throw LemmaViolation("two-of-three lemma fails at " + g.name(a) + ": (i)=" + std::to_string(r.regular) +
                         " (ii)=" + std::to_string(r.components_regular) + " (iii)=" + std::to_string(r.f_symmetric) +
                         " (iv)=" + std::to_string(r.f_trivial));
  return r;
}

}  // namespace twisted
