#pragma once

// sigma-regular elements and classes, condition K for finite groups, and the
// explicit basis of the center of the twisted group algebra.

#include <optional>
#include <vector>

#include "twisted/algebra_element.hpp"
#include "twisted/errors.hpp"
#include "twisted/multipliers.hpp"

namespace twisted {

/// sigma(a,b) == sigma(b,a) for every b commuting with a.
inline bool is_regular_element(const Multiplier& sigma, Element a) {
  const FiniteGroup& g = sigma.group();
  for (Element b = 0; b < g.order(); ++b)
    if (g.commute(a, b) && sigma.value(a, b) != sigma.value(b, a)) return false;
  return true;
}

struct ClassRegularity {
  ConjugacyClass cls;
  bool regular = false;
};

struct RegularityReport {
  std::vector<ClassRegularity> classes;
  /// Finite groups: no nontrivial class is regular.
  bool condition_k = true;
  std::size_t regular_element_count = 0;

  std::size_t regular_class_count() const {
    std::size_t n = 0;
    for (const auto& c : classes) n += c.regular;
    return n;
  }
};

/// Throws ClassInconsistency if regularity is not constant on some class.
inline RegularityReport regular_classes(const Multiplier& sigma) {
  const FiniteGroup& g = sigma.group();
  RegularityReport report;
  for (const auto& cls : g.conjugacy_classes()) {
    const bool regular = is_regular_element(sigma, cls.representative);
    for (Element m : cls.members)
      if (is_regular_element(sigma, m) != regular)
        throw ClassInconsistency("regularity differs between " + g.name(cls.representative) + " and " +
                                 g.name(m) + " in the same class");
    report.classes.push_back({cls, regular});
    if (regular) {
      report.regular_element_count += cls.size();
      if (cls.representative != g.identity()) report.condition_k = false;
    }
  }
  return report;
}

inline bool condition_k(const Multiplier& sigma) { return regular_classes(sigma).condition_k; }

/// Unimodular function on a regular class C with f(c) = 1 at the base point.
struct ClassFunction {
  ConjugacyClass cls;
  Element base = 0;
  std::map<Element, RotationNumber> values;  // exponent of f

  const RotationNumber& operator()(Element x) const { return values.at(x); }
};

/// f(a c a^-1) = sigma(a,c) - sigma(a c a^-1, a), evaluated over every a in G.
/// Disagreeing values for the same point mean C is not regular (NotRegular).
inline ClassFunction class_function(const Multiplier& sigma, const ConjugacyClass& cls) {
  const FiniteGroup& g = sigma.group();
  ClassFunction f{cls, cls.representative, {}};
  const Element c = f.base;
  for (Element a = 0; a < g.order(); ++a) {
    const Element x = g.conjugate(a, c);
    RotationNumber v = sigma.value(a, c) - sigma.value(x, a);
    auto [it, inserted] = f.values.try_emplace(x, v);
    if (!inserted && it->second != v)
      throw NotRegular("class of " + g.name(c) + " is not sigma-regular: conflicting values at " + g.name(x));
  }
  return f;
}

/// sum_{c in C} f(c) delta_c, one element per sigma-regular class.
inline std::vector<ExactElement> center_basis(const Multiplier& sigma) {
  std::vector<ExactElement> basis;
  for (const auto& entry : regular_classes(sigma).classes) {
    if (!entry.regular) continue;
    const ClassFunction f = class_function(sigma, entry.cls);
    ExactElement t;
    for (const auto& [x, phase] : f.values) t.add(x, PhaseSum(phase));
    basis.push_back(std::move(t));
  }
  return basis;
}

}  // namespace twisted
