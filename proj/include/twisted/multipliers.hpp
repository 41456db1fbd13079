#pragma once

// Multipliers (T-valued 2-cocycles) on finite groups: dense tables, the
// Z_n x Z_n family, and direct-product assemblies. Values are exponents.

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "twisted/bihomomorphism.hpp"
#include "twisted/errors.hpp"
#include "twisted/finite_groups.hpp"
#include "twisted/torus_values.hpp"

namespace twisted {

class Multiplier;
using MultiplierPtr = std::shared_ptr<const Multiplier>;

struct TableCocycle {
  std::vector<RotationNumber> values;  // row-major |G| x |G|
};

/// sigma_k((a1,a2),(b1,b2)) = (k/n) a2 b1 on Z_n x Z_n.
struct KleinCocycle {
  std::size_t n;
  std::size_t k;
};

/// sigma1(a1,b1) + sigma2(a2,b2) + f(b1,a2) on G1 x G2.
struct ProductCocycle {
  MultiplierPtr first;
  MultiplierPtr second;
  std::shared_ptr<const Bihomomorphism> cross;
};

class Multiplier {
 public:
  using Form = std::variant<TableCocycle, KleinCocycle, ProductCocycle>;

  Multiplier(GroupPtr group, Form form) : group_(std::move(group)), form_(std::move(form)) {
    if (auto* t = std::get_if<TableCocycle>(&form_); t && t->values.size() != group_->order() * group_->order())
      throw InvalidMultiplier("table multiplier has " + std::to_string(t->values.size()) + " entries, expected " +
                              std::to_string(group_->order() * group_->order()));
  }

  static Multiplier trivial(GroupPtr group) {
    const std::size_t n = group->order();
    return Multiplier(std::move(group), TableCocycle{std::vector<RotationNumber>(n * n)});
  }

  static Multiplier table(GroupPtr group, std::vector<RotationNumber> values) {
    return Multiplier(std::move(group), TableCocycle{std::move(values)});
  }

  static Multiplier from_function(GroupPtr group, const std::function<RotationNumber(Element, Element)>& f) {
    const std::size_t n = group->order();
    std::vector<RotationNumber> values(n * n);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) values[a * n + b] = f(a, b);
    return table(std::move(group), std::move(values));
  }

  RotationNumber value(Element a, Element b) const {
    const std::size_t n = group_->order();
    if (a >= n || b >= n) throw DomainMismatch("element outside the multiplier's group");
    return std::visit(
        [&](const auto& form) -> RotationNumber {
          using T = std::decay_t<decltype(form)>;
          if constexpr (std::is_same_v<T, TableCocycle>) {
            return form.values[a * n + b];
          } else if constexpr (std::is_same_v<T, KleinCocycle>) {
            const std::size_t a2 = a % form.n, b1 = b / form.n;
            return RotationNumber(Rational(static_cast<std::int64_t>((form.k * a2 * b1) % form.n),
                                           static_cast<std::int64_t>(form.n)));
          } else {
            const ProductIndex idx{form.second->group().order()};
            return form.first->value(idx.first(a), idx.first(b)) + form.second->value(idx.second(a), idx.second(b)) +
                   form.cross->at(idx.first(b), idx.second(a));
          }
        },
        form_);
  }

  RotationNumber operator()(Element a, Element b) const { return value(a, b); }

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const Form& form() const { return form_; }

  std::string kind() const {
    static constexpr const char* names[] = {"table", "klein", "direct_product"};
    return names[form_.index()];
  }

  /// Same multiplier as a dense table.
  Multiplier materialize() const {
    return from_function(group_, [this](Element a, Element b) { return value(a, b); });
  }

  bool is_normalized() const {
    for (Element a = 0; a < group_->order(); ++a)
      if (!value(a, group_->inverse(a)).is_zero()) return false;
    return true;
  }

 private:
  GroupPtr group_;
  Form form_;
};

inline MultiplierPtr share(Multiplier m) { return std::make_shared<const Multiplier>(std::move(m)); }

inline RotationNumber value(const Multiplier& sigma, Element a, Element b) { return sigma.value(a, b); }

/// Multiplier on Z_n x Z_n (packed as a1 * n + a2) with class k.
inline Multiplier klein(std::size_t n, std::size_t k) {
  if (n < 2 || k >= n) throw InvalidMultiplier("klein multiplier needs n >= 2 and 0 <= k < n");
  return Multiplier(share(direct_product(cyclic(n), cyclic(n))), KleinCocycle{n, k});
}

struct ValidationReport {
  bool ok = true;
  std::size_t checked = 0;
  /// First violating (a, b, c); for unit violations c is the identity and the
  /// offending pair is (a, b) with one of them the identity.
  std::optional<std::array<Element, 3>> witness;
  std::string message;
};

/// Exhaustive check of the cocycle identity and the unit conditions.
inline ValidationReport validate(const Multiplier& sigma) {
  const FiniteGroup& g = sigma.group();
  const std::size_t n = g.order();
  const Element e = g.identity();
  ValidationReport r;
  std::vector<RotationNumber> values(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) values[a * n + b] = sigma.value(a, b);
  auto at = [&](Element a, Element b) -> const RotationNumber& { return values[a * n + b]; };

  for (Element a = 0; a < n; ++a) {
    if (!at(a, e).is_zero() || !at(e, a).is_zero()) {
      r.ok = false;
      r.witness = {{a, e, e}};
      r.message = "sigma(a,e) or sigma(e,a) is not 1 at a=" + g.name(a);
      return r;
    }
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        ++r.checked;
        if (at(a, b) + at(g.multiply(a, b), c) != at(a, g.multiply(b, c)) + at(b, c)) {
          r.ok = false;
          r.witness = {{a, b, c}};
          r.message = "cocycle identity fails at (" + g.name(a) + "," + g.name(b) + "," + g.name(c) + ")";
          return r;
        }
      }
  return r;
}

/// beta: G -> T with beta(e) = 0, exponents indexed by element.
struct SimilarityWitness {
  std::vector<RotationNumber> beta;

  static SimilarityWitness zero(std::size_t order) { return {std::vector<RotationNumber>(order)}; }
  const RotationNumber& operator()(Element a) const { return beta[a]; }
};

/// tau(a,b) == beta(a) + beta(b) - beta(ab) + sigma(a,b) for every pair.
inline bool is_similar(const Multiplier& sigma, const Multiplier& tau, const SimilarityWitness& w) {
  const FiniteGroup& g = sigma.group();
  if (sigma.group_ptr() != tau.group_ptr() && g.table() != tau.group().table())
    throw DomainMismatch("similarity check across different groups");
  if (w.beta.size() != g.order()) throw DomainMismatch("similarity witness has the wrong size");
  if (!w(g.identity()).is_zero()) return false;
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      if (tau.value(a, b) != w(a) + w(b) - w(g.multiply(a, b)) + sigma.value(a, b)) return false;
  return true;
}

/// sigma'(a,b) = beta(a) + beta(b) - beta(ab) + sigma(a,b) as a table.
inline Multiplier twist(const Multiplier& sigma, const SimilarityWitness& w) {
  const FiniteGroup& g = sigma.group();
  return Multiplier::from_function(sigma.group_ptr(), [&](Element a, Element b) {
    return w(a) + w(b) - w(g.multiply(a, b)) + sigma.value(a, b);
  });
}

/// Similar multiplier with sigma'(a, a^-1) = 1 for all a. For a pair {a, a^-1}
/// with a != a^-1, beta vanishes on the smaller index and beta(a^-1) =
/// -sigma(a, a^-1); an involution gets beta(a) = -sigma(a,a)/2.
inline std::pair<Multiplier, SimilarityWitness> normalize(const Multiplier& sigma) {
  const FiniteGroup& g = sigma.group();
  SimilarityWitness w = SimilarityWitness::zero(g.order());
  for (Element a = 0; a < g.order(); ++a) {
    const Element inv = g.inverse(a);
    if (inv == a)
      w.beta[a] = -halve(sigma.value(a, a));
    else if (a < inv)
      w.beta[inv] = -sigma.value(a, inv);
  }
  return {twist(sigma, w), std::move(w)};
}

}  // namespace twisted
