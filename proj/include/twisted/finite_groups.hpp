#pragma once

// Finite groups given by full multiplication tables.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "twisted/errors.hpp"

namespace twisted {

using Element = std::size_t;

struct ConjugacyClass {
  std::vector<Element> members;  // sorted
  Element representative = 0;    // smallest member

  std::size_t size() const { return members.size(); }
  bool contains(Element x) const { return std::binary_search(members.begin(), members.end(), x); }
  friend bool operator==(const ConjugacyClass&, const ConjugacyClass&) = default;
};

class FiniteGroup {
 public:
  using Table = std::vector<std::vector<Element>>;

  /// Validates the table exhaustively: closure, identity, inverses, associativity.
  static FiniteGroup build(const Table& table, std::vector<std::string> names = {}) {
    const std::size_t n = table.size();
    if (n == 0) throw InvalidGroup("empty multiplication table");
    FiniteGroup g;
    g.order_ = n;
    g.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      if (table[a].size() != n) throw InvalidGroup("multiplication table is not square");
      for (std::size_t b = 0; b < n; ++b) {
        if (table[a][b] >= n) throw InvalidGroup("table entry out of range");
        g.table_[a * n + b] = table[a][b];
      }
    }
    if (!names.empty() && names.size() != n) throw InvalidGroup("names do not match the group order");
    g.names_ = std::move(names);
    g.finish();
    return g;
  }

  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }
  Element multiply(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  Element conjugate(Element a, Element c) const { return multiply(multiply(a, c), inverse(a)); }
  bool commute(Element a, Element b) const { return multiply(a, b) == multiply(b, a); }

  Table table() const {
    Table t(order_, std::vector<Element>(order_));
    for (std::size_t a = 0; a < order_; ++a)
      for (std::size_t b = 0; b < order_; ++b) t[a][b] = multiply(a, b);
    return t;
  }

  const std::vector<std::string>& names() const { return names_; }
  std::string name(Element a) const { return names_.empty() ? std::to_string(a) : names_[a]; }

  const std::vector<ConjugacyClass>& conjugacy_classes() const { return classes_; }
  const ConjugacyClass& class_of(Element a) const { return classes_[class_index_[a]]; }
  std::size_t class_index(Element a) const { return class_index_[a]; }

  std::vector<Element> centralizer(Element a) const {
    std::vector<Element> out;
    for (Element b = 0; b < order_; ++b)
      if (commute(a, b)) out.push_back(b);
    return out;
  }

  bool is_abelian() const { return classes_.size() == order_; }

 private:
  void finish() {
    const std::size_t n = order_;
    identity_ = n;
    for (Element e = 0; e < n && identity_ == n; ++e) {
      bool ok = true;
      for (Element a = 0; a < n && ok; ++a) ok = multiply(e, a) == a && multiply(a, e) == a;
      if (ok) identity_ = e;
    }
    if (identity_ == n) throw NoIdentity("table has no two-sided identity");

    inverse_.assign(n, n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (multiply(a, b) == identity_ && multiply(b, a) == identity_) {
          inverse_[a] = b;
          break;
        }
      }
      if (inverse_[a] == n) throw NoInverse("element " + name(a) + " has no two-sided inverse");
    }

    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
            throw NotAssociative("(" + name(a) + "*" + name(b) + ")*" + name(c) + " != " + name(a) + "*(" +
                                 name(b) + "*" + name(c) + ")");

    class_index_.assign(n, n);
    for (Element x = 0; x < n; ++x) {
      if (class_index_[x] != n) continue;
      ConjugacyClass cls;
      for (Element a = 0; a < n; ++a) cls.members.push_back(conjugate(a, x));
      std::sort(cls.members.begin(), cls.members.end());
      cls.members.erase(std::unique(cls.members.begin(), cls.members.end()), cls.members.end());
      cls.representative = cls.members.front();
      for (Element m : cls.members) class_index_[m] = classes_.size();
      classes_.push_back(std::move(cls));
    }
  }

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<std::string> names_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_index_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

inline std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) { return g.conjugacy_classes(); }
inline std::vector<Element> centralizer(const FiniteGroup& g, Element a) { return g.centralizer(a); }
inline Element inverse(const FiniteGroup& g, Element a) { return g.inverse(a); }

/// Z_n with element k the residue k.
inline FiniteGroup cyclic(std::size_t n) {
  if (n == 0) throw InvalidGroup("cyclic group order must be positive");
  FiniteGroup::Table t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup::build(t);
}

inline FiniteGroup trivial_group() { return cyclic(1); }

/// Row-major packing: (a1, a2) has index a1 * |G2| + a2.
struct ProductIndex {
  std::size_t second_order;

  Element pack(Element a1, Element a2) const { return a1 * second_order + a2; }
  Element first(Element a) const { return a / second_order; }
  Element second(Element a) const { return a % second_order; }
};

inline FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2) {
  const ProductIndex idx{g2.order()};
  const std::size_t n = g1.order() * g2.order();
  FiniteGroup::Table t(n, std::vector<Element>(n));
  std::vector<std::string> names;
  for (Element a = 0; a < n; ++a) {
    names.push_back("(" + g1.name(idx.first(a)) + "," + g2.name(idx.second(a)) + ")");
    for (Element b = 0; b < n; ++b)
      t[a][b] = idx.pack(g1.multiply(idx.first(a), idx.first(b)), g2.multiply(idx.second(a), idx.second(b)));
  }
  return FiniteGroup::build(t, std::move(names));
}

/// Dihedral group of order 2n: index k is r^k, index n + k is s r^k.
inline FiniteGroup dihedral(std::size_t n) {
  if (n == 0) throw InvalidGroup("dihedral group needs n >= 1");
  const std::size_t order = 2 * n;
  FiniteGroup::Table t(order, std::vector<Element>(order));
  std::vector<std::string> names;
  for (Element a = 0; a < order; ++a) {
    names.push_back(a < n ? "r" + std::to_string(a) : "s" + std::to_string(a - n));
    for (Element b = 0; b < order; ++b) {
      const bool fa = a >= n, fb = b >= n;
      const std::size_t ka = a % n, kb = b % n;
      // r^i s = s r^{-i}
      const std::size_t k = fb ? (n - ka + kb) % n : (ka + kb) % n;
      t[a][b] = ((fa != fb) ? n : 0) + k;
    }
  }
  return FiniteGroup::build(t, std::move(names));
}

/// Quaternion group {±1, ±i, ±j, ±k}; index 2u + s is (-1)^s times unit u in (1, i, j, k).
inline FiniteGroup quaternion() {
  // unit products: table[u][v] = (sign, unit)
  static constexpr int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const char* label[4] = {"1", "i", "j", "k"};
  FiniteGroup::Table t(8, std::vector<Element>(8));
  std::vector<std::string> names;
  for (Element a = 0; a < 8; ++a) {
    names.push_back(std::string(a % 2 ? "-" : "") + label[a / 2]);
    for (Element b = 0; b < 8; ++b) {
      const std::size_t u = a / 2, v = b / 2;
      const std::size_t s = (a % 2 + b % 2 + sign[u][v]) % 2;
      t[a][b] = 2 * unit[u][v] + s;
    }
  }
  return FiniteGroup::build(t, std::move(names));
}

/// Closure of a set of permutations of {0..degree-1} under composition
/// (p*q)(x) = p(q(x)). Elements are indexed in discovery order, identity first.
inline FiniteGroup permutation_group(const std::vector<std::vector<std::size_t>>& generators) {
  if (generators.empty()) return trivial_group();
  const std::size_t degree = generators.front().size();
  using Perm = std::vector<std::size_t>;
  auto compose = [](const Perm& p, const Perm& q) {
    Perm r(q.size());
    for (std::size_t x = 0; x < q.size(); ++x) r[x] = p[q[x]];
    return r;
  };
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elems{id};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators) {
      if (g.size() != degree) throw InvalidGroup("permutation generators of mixed degree");
      Perm p = compose(g, elems[i]);
      if (std::find(elems.begin(), elems.end(), p) == elems.end()) elems.push_back(std::move(p));
    }
  }
  const std::size_t n = elems.size();
  FiniteGroup::Table t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      t[a][b] = static_cast<Element>(std::find(elems.begin(), elems.end(), compose(elems[a], elems[b])) -
                                     elems.begin());
  return FiniteGroup::build(t);
}

}  // namespace twisted
