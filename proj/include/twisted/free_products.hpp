#pragma once

// Reduced words in G1 * G2 for finite factors, rewriting of kernel words into
// the free group on the commutators [a,b], and the normalized free-product
// multiplier sigma1 * sigma2 together with its decomposition.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "twisted/errors.hpp"
#include "twisted/finite_groups.hpp"
#include "twisted/multipliers.hpp"
#include "twisted/torus_values.hpp"

namespace twisted {

struct Letter {
  int factor = 1;  // 1 or 2
  Element element = 0;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Alternating sequence of non-identity letters; empty is the identity.
using FPWord = std::vector<Letter>;

/// Commutator [a,b] = a b a^-1 b^-1 with a in G1\{e}, b in G2\{e}.
struct XGenerator {
  Element a = 0;
  Element b = 0;

  friend auto operator<=>(const XGenerator&, const XGenerator&) = default;
};

struct Syllable {
  XGenerator generator;
  std::int64_t power = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Freely reduced word q_1^{p_1} ... q_n^{p_n}: adjacent generators differ, powers nonzero.
using XWord = std::vector<Syllable>;

class FreeProduct {
 public:
  FreeProduct(GroupPtr g1, GroupPtr g2) : g1_(std::move(g1)), g2_(std::move(g2)) {}

  const FiniteGroup& factor(int i) const { return i == 1 ? *g1_ : *g2_; }
  const GroupPtr& factor_ptr(int i) const { return i == 1 ? g1_ : g2_; }

  FPWord letter(int factor_index, Element g) const {
    if (g == factor(factor_index).identity()) return {};
    return {Letter{factor_index, g}};
  }

  bool is_reduced(const FPWord& x) const {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].factor != 1 && x[i].factor != 2) return false;
      if (x[i].element >= factor(x[i].factor).order()) return false;
      if (x[i].element == factor(x[i].factor).identity()) return false;
      if (i > 0 && x[i].factor == x[i - 1].factor) return false;
    }
    return true;
  }

  FPWord inverse(const FPWord& x) const {
    FPWord r(x.rbegin(), x.rend());
    for (auto& l : r) l.element = factor(l.factor).inverse(l.element);
    return r;
  }

  /// x = x_w w and y = w^-1 y_w with w the longest whole-letter cancellation.
  std::pair<FPWord, FPWord> reduce_pair(FPWord x, const FPWord& y) const {
    std::size_t k = 0;
    while (!x.empty() && k < y.size() && cancels(x.back(), y[k])) {
      x.pop_back();
      ++k;
    }
    return {std::move(x), FPWord(y.begin() + static_cast<std::ptrdiff_t>(k), y.end())};
  }

  FPWord multiply(const FPWord& x, const FPWord& y) const {
    auto [xw, yw] = reduce_pair(x, y);
    if (xw.empty()) return yw;
    if (yw.empty()) return xw;
    if (xw.back().factor == yw.front().factor) {
      const int f = xw.back().factor;
      xw.back().element = factor(f).multiply(xw.back().element, yw.front().element);
      xw.insert(xw.end(), yw.begin() + 1, yw.end());
    } else {
      xw.insert(xw.end(), yw.begin(), yw.end());
    }
    return xw;
  }

  /// Image in G1 x G2 (product of the G1 letters, product of the G2 letters).
  std::pair<Element, Element> abelian_image(const FPWord& x) const {
    Element p1 = g1_->identity(), p2 = g2_->identity();
    for (const auto& l : x) {
      if (l.factor == 1)
        p1 = g1_->multiply(p1, l.element);
      else
        p2 = g2_->multiply(p2, l.element);
    }
    return {p1, p2};
  }

  bool in_kernel(const FPWord& x) const {
    auto [p1, p2] = abelian_image(x);
    return p1 == g1_->identity() && p2 == g2_->identity();
  }

  FPWord commutator(const XGenerator& q) const {
    return {Letter{1, q.a}, Letter{2, q.b}, Letter{1, g1_->inverse(q.a)}, Letter{2, g2_->inverse(q.b)}};
  }

  FPWord expand(const Syllable& s) const {
    const FPWord base = s.power > 0 ? commutator(s.generator) : inverse(commutator(s.generator));
    FPWord out;
    for (std::int64_t i = 0; i < (s.power > 0 ? s.power : -s.power); ++i) out = multiply(out, base);
    return out;
  }

  FPWord expand(const XWord& w) const {
    FPWord out;
    for (const auto& s : w) out = multiply(out, expand(s));
    return out;
  }

  /// Reidemeister-Schreier rewriting with coset representatives c1 c2: a
  /// G1-letter g read in coset (c1, c2) emits [c1,c2] [c1 g, c2]^-1, a
  /// G2-letter emits nothing. Throws NotInKernel unless x maps to (e, e).
  XWord rewrite_to_X(const FPWord& x) const {
    if (!in_kernel(x)) throw NotInKernel("word does not lie in the kernel of G1*G2 -> G1xG2");
    XWord out;
    auto push = [&](Element a, Element b, std::int64_t p) {
      if (a == g1_->identity() || b == g2_->identity()) return;
      const XGenerator q{a, b};
      if (!out.empty() && out.back().generator == q) {
        out.back().power += p;
        if (out.back().power == 0) out.pop_back();
      } else {
        out.push_back({q, p});
      }
    };
    Element c1 = g1_->identity(), c2 = g2_->identity();
    for (const auto& l : x) {
      if (l.factor == 1) {
        const Element next = g1_->multiply(c1, l.element);
        push(c1, c2, 1);
        push(next, c2, -1);
        c1 = next;
      } else {
        c2 = g2_->multiply(c2, l.element);
      }
    }
    return out;
  }

  /// Uniform length in [0, max_length], random starting factor, uniform non-identity letters.
  FPWord random_word(std::mt19937_64& rng, std::size_t max_length) const {
    std::uniform_int_distribution<std::size_t> len(0, max_length);
    std::uniform_int_distribution<int> start(1, 2);
    const std::size_t n = len(rng);
    int f = start(rng);
    FPWord w;
    for (std::size_t i = 0; i < n; ++i, f = 3 - f) {
      const FiniteGroup& g = factor(f);
      if (g.order() == 1) break;
      std::uniform_int_distribution<Element> pick(0, g.order() - 2);
      Element x = pick(rng);
      if (x >= g.identity()) ++x;
      w.push_back({f, x});
    }
    return w;
  }

  /// Random word pushed into the kernel by appending the inverses of its
  /// factor images.
  FPWord random_kernel_word(std::mt19937_64& rng, std::size_t max_length) const {
    FPWord w = random_word(rng, max_length);
    auto [p1, p2] = abelian_image(w);
    w = multiply(w, letter(1, g1_->inverse(p1)));
    return multiply(w, letter(2, g2_->inverse(p2)));
  }

  std::string to_string(const FPWord& x) const {
    if (x.empty()) return "e";
    std::string s;
    for (const auto& l : x) s += (s.empty() ? "" : " ") + std::string(l.factor == 1 ? "1:" : "2:") + factor(l.factor).name(l.element);
    return s;
  }

 private:
  bool cancels(const Letter& r, const Letter& s) const {
    return r.factor == s.factor && factor(r.factor).multiply(r.element, s.element) == factor(r.factor).identity();
  }

  GroupPtr g1_, g2_;
};

/// sigma1 * sigma2 on G1 * G2, built from normalized factor multipliers.
class FreeProductMultiplier {
 public:
  using element_type = FPWord;

  FreeProductMultiplier(MultiplierPtr sigma1, MultiplierPtr sigma2)
      : fp_(sigma1->group_ptr(), sigma2->group_ptr()), sigma1_(std::move(sigma1)), sigma2_(std::move(sigma2)) {
    if (!sigma1_->is_normalized() || !sigma2_->is_normalized())
      throw InvalidMultiplier("free-product construction needs normalized factor multipliers");
  }

  const FreeProduct& free_product() const { return fp_; }
  const Multiplier& sigma(int i) const { return i == 1 ? *sigma1_ : *sigma2_; }
  const MultiplierPtr& sigma_ptr(int i) const { return i == 1 ? sigma1_ : sigma2_; }

  FPWord identity() const { return {}; }
  FPWord multiply(const FPWord& x, const FPWord& y) const { return fp_.multiply(x, y); }
  FPWord inverse(const FPWord& x) const { return fp_.inverse(x); }

  /// sigma_i(r(x_w), s(y_w)) when both boundary letters of the reduced pair
  /// lie in G_i, zero otherwise.
  RotationNumber tau(const FPWord& x, const FPWord& y) const {
    auto [xw, yw] = fp_.reduce_pair(x, y);
    if (xw.empty() || yw.empty()) return {};
    const Letter& r = xw.back();
    const Letter& s = yw.front();
    if (r.factor != s.factor) return {};
    return sigma(r.factor).value(r.element, s.element);
  }

  /// Zero off the kernel and on single syllables; otherwise the sum of tau
  /// over consecutive syllable pairs of the rewritten word.
  RotationNumber beta(const FPWord& x) const {
    if (!fp_.in_kernel(x)) return {};
    const XWord w = fp_.rewrite_to_X(x);
    RotationNumber r;
    if (w.size() < 2) return r;
    FPWord prev = fp_.expand(w.front());
    for (std::size_t i = 1; i < w.size(); ++i) {
      FPWord next = fp_.expand(w[i]);
      r += tau(prev, next);
      prev = std::move(next);
    }
    return r;
  }

  /// beta(x) + beta(y) - beta(xy) + tau(x,y).
  RotationNumber value(const FPWord& x, const FPWord& y) const {
    return beta(x) + beta(y) - beta(fp_.multiply(x, y)) + tau(x, y);
  }

  RotationNumber operator()(const FPWord& x, const FPWord& y) const { return value(x, y); }

 private:
  FreeProduct fp_;
  MultiplierPtr sigma1_, sigma2_;
};

/// tau as a standalone multiplier on G1 * G2.
struct FreeProductTau {
  using element_type = FPWord;
  const FreeProductMultiplier* base;

  FPWord identity() const { return {}; }
  FPWord multiply(const FPWord& x, const FPWord& y) const { return base->multiply(x, y); }
  RotationNumber value(const FPWord& x, const FPWord& y) const { return base->tau(x, y); }
};

using WordOracle = std::function<RotationNumber(const FPWord&, const FPWord&)>;
using WordFunction = std::function<RotationNumber(const FPWord&)>;

/// True iff tau(x,y) == beta(x) + beta(y) - beta(xy) + sigma(x,y) on every sampled pair.
struct WordSimilarityResult {
  bool ok = true;
  std::size_t checked = 0;
  std::optional<std::pair<FPWord, FPWord>> counterexample;
};

inline WordSimilarityResult is_similar_sampled(const FreeProduct& fp, const WordOracle& sigma, const WordOracle& tau,
                                               const WordFunction& beta, std::size_t pairs, std::size_t max_length,
                                               std::uint64_t seed) {
  WordSimilarityResult r;
  std::mt19937_64 rng(seed);
  if (!beta({}).is_zero()) {
    r.ok = false;
    r.counterexample = std::make_pair(FPWord{}, FPWord{});
    return r;
  }
  for (std::size_t i = 0; i < pairs; ++i) {
    FPWord x = fp.random_word(rng, max_length);
    FPWord y = fp.random_word(rng, max_length);
    ++r.checked;
    if (tau(x, y) != beta(x) + beta(y) - beta(fp.multiply(x, y)) + sigma(x, y)) {
      r.ok = false;
      r.counterexample = std::make_pair(std::move(x), std::move(y));
      return r;
    }
  }
  return r;
}

struct Decomposition {
  MultiplierPtr sigma1;
  MultiplierPtr sigma2;
  /// Witness with (sigma1 * sigma2)(x,y) = beta(x) + beta(y) - beta(xy) + sigma(x,y).
  WordFunction beta;
  std::size_t checked_pairs = 0;
};

/// Splits a normalized multiplier on G1 * G2 (queried through `sigma`) into
/// its factor restrictions and a similarity witness to sigma1 * sigma2.
///
/// The prefix product beta_p(x) = sum_k sigma(x_1...x_{k-1}, x_k) carries
/// sigma to the unsymmetrized tau of the restrictions; tau differs from
/// sigma1 * sigma2 by the kernel function beta_X, so the witness is
/// beta_p + beta_X. Throws SimilarityFailure on a sampled counterexample.
inline Decomposition decompose(const FreeProduct& fp, const WordOracle& sigma, std::size_t pairs,
                               std::size_t max_length, std::uint64_t seed) {
  auto restriction = [&](int i) {
    const FiniteGroup& g = fp.factor(i);
    return share(Multiplier::from_function(fp.factor_ptr(i), [&](Element a, Element b) {
      if (a == g.identity() || b == g.identity()) return RotationNumber{};
      return sigma(fp.letter(i, a), fp.letter(i, b));
    }));
  };
  Decomposition d;
  d.sigma1 = restriction(1);
  d.sigma2 = restriction(2);
  if (!validate(*d.sigma1).ok || !validate(*d.sigma2).ok || !d.sigma1->is_normalized() ||
      !d.sigma2->is_normalized())
    throw SimilarityFailure("restrictions of the input are not normalized multipliers");

  auto product = std::make_shared<FreeProductMultiplier>(d.sigma1, d.sigma2);
  d.beta = [sigma, product](const FPWord& x) {
    RotationNumber r = product->beta(x);
    FPWord prefix;
    for (std::size_t k = 0; k < x.size(); ++k) {
      const FPWord letter{x[k]};
      if (k > 0) r += sigma(prefix, letter);
      prefix.push_back(x[k]);
    }
    return r;
  };

  WordSimilarityResult check = is_similar_sampled(
      fp, sigma, [product](const FPWord& x, const FPWord& y) { return product->value(x, y); }, d.beta, pairs,
      max_length, seed);
  d.checked_pairs = check.checked;
  if (!check.ok)
    throw SimilarityFailure("decomposition witness fails at (" + fp.to_string(check.counterexample->first) + ", " +
                            fp.to_string(check.counterexample->second) + ")");
  return d;
}

}  // namespace twisted
