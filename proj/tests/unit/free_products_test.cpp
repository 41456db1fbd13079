#include <gtest/gtest.h>

#include <random>

#include "twisted/free_products.hpp"
#include "twisted/sampled_validation.hpp"

namespace {

using namespace twisted;

MultiplierPtr trivial_on(std::size_t n) { return share(Multiplier::trivial(share(cyclic(n)))); }
MultiplierPtr normalized_klein(std::size_t n, std::size_t k) { return share(normalize(klein(n, k)).first); }

struct Pair {
  const char* name;
  MultiplierPtr s1, s2;
};

std::vector<Pair> pairs() {
  return {{"Z3*Z2", trivial_on(3), trivial_on(2)},
          {"K2*Z2", normalized_klein(2, 1), trivial_on(2)},
          {"Z3*K2", trivial_on(3), normalized_klein(2, 1)},
          {"K2*K3", normalized_klein(2, 1), normalized_klein(3, 1)},
          {"K3*Z3", normalized_klein(3, 1), trivial_on(3)}};
}

TEST(FreeProducts, WordBasics) {
  const FreeProduct fp(share(cyclic(3)), share(cyclic(2)));
  EXPECT_TRUE(fp.letter(1, 0).empty());
  EXPECT_EQ(fp.letter(2, 1), (FPWord{{2, 1}}));
  EXPECT_TRUE(fp.is_reduced({{1, 1}, {2, 1}, {1, 2}}));
  EXPECT_FALSE(fp.is_reduced({{1, 1}, {1, 2}}));
  EXPECT_FALSE(fp.is_reduced({{1, 0}}));
  EXPECT_FALSE(fp.is_reduced({{2, 2}}));
  // merge: 1 + 1 = 2 in Z3
  EXPECT_EQ(fp.multiply({{1, 1}}, {{1, 1}}), (FPWord{{1, 2}}));
  // (a b)(b^-1 a') with a a' = e and with a a' != e
  EXPECT_EQ(fp.multiply({{1, 1}, {2, 1}}, {{2, 1}, {1, 2}}), FPWord{});
  EXPECT_EQ(fp.multiply({{1, 1}, {2, 1}}, {{2, 1}, {1, 1}}), (FPWord{{1, 2}}));

  std::mt19937_64 rng(1);
  for (int i = 0; i < 2000; ++i) {
    const FPWord x = fp.random_word(rng, 8), y = fp.random_word(rng, 8), z = fp.random_word(rng, 8);
    ASSERT_TRUE(fp.is_reduced(x));
    ASSERT_TRUE(fp.multiply(x, fp.inverse(x)).empty());
    ASSERT_TRUE(fp.multiply(fp.inverse(x), x).empty());
    const FPWord xy = fp.multiply(x, y);
    ASSERT_TRUE(fp.is_reduced(xy));
    ASSERT_EQ(fp.multiply(xy, z), fp.multiply(x, fp.multiply(y, z)));
  }
}

TEST(FreeProducts, ReducePair) {
  const FreeProduct fp(share(cyclic(3)), share(cyclic(2)));
  const FPWord x{{1, 1}, {2, 1}}, y{{2, 1}, {1, 1}};
  const auto [xw, yw] = fp.reduce_pair(x, y);
  EXPECT_EQ(xw, (FPWord{{1, 1}}));
  EXPECT_EQ(yw, (FPWord{{1, 1}}));
  // Already reduced pairs pass through.
  const FPWord u{{1, 1}}, v{{2, 1}};
  EXPECT_EQ(fp.reduce_pair(u, v), std::make_pair(u, v));
  EXPECT_EQ(fp.reduce_pair(u, u), std::make_pair(u, u));

  std::mt19937_64 rng(2);
  for (int i = 0; i < 2000; ++i) {
    const FPWord a = fp.random_word(rng, 6), b = fp.random_word(rng, 6);
    for (const FPWord& c : {b, fp.inverse(a), fp.multiply(fp.inverse(a), b)}) {
      const auto [aw, cw] = fp.reduce_pair(a, c);
      ASSERT_EQ(fp.multiply(aw, cw), fp.multiply(a, c));
      if (!aw.empty() && !cw.empty())
        ASSERT_FALSE(aw.back().factor == cw.front().factor &&
                     fp.factor(aw.back().factor).multiply(aw.back().element, cw.front().element) ==
                         fp.factor(aw.back().factor).identity());
    }
    const auto [aw, iw] = fp.reduce_pair(a, fp.inverse(a));
    ASSERT_TRUE(aw.empty() && iw.empty());
  }
}

TEST(FreeProducts, RejectsUnnormalizedFactors) {
  EXPECT_THROW(FreeProductMultiplier(share(klein(2, 1)), trivial_on(2)), InvalidMultiplier);
}

TEST(FreeProducts, TauCases) {
  const auto k = normalized_klein(2, 1);
  const FreeProductMultiplier m(k, trivial_on(2));
  const FreeProduct& fp = m.free_product();
  for (Element g = 1; g < 4; ++g)
    for (Element h = 1; h < 4; ++h) {
      EXPECT_EQ(m.tau({{1, g}}, {{1, h}}), k->value(g, h));
      EXPECT_TRUE(m.tau({{1, g}}, {{2, 1}}).is_zero());
      EXPECT_TRUE(m.tau({{1, g}}, {}).is_zero());
      EXPECT_TRUE(m.tau({}, {{1, h}}).is_zero());
      // the G2 letters cancel and the G1 boundary letters remain
      EXPECT_EQ(m.tau({{2, 1}, {1, g}, {2, 1}}, {{2, 1}, {1, h}}), k->value(g, h));
    }
  (void)fp;
}

TEST(FreeProducts, RewriteExamples) {
  const FreeProduct fp(share(cyclic(3)), share(cyclic(2)));
  EXPECT_TRUE(fp.rewrite_to_X({}).empty());
  for (Element a = 1; a < 3; ++a) {
    const XGenerator q{a, 1};
    EXPECT_EQ(fp.rewrite_to_X(fp.commutator(q)), (XWord{{q, 1}}));
    EXPECT_EQ(fp.rewrite_to_X(fp.inverse(fp.commutator(q))), (XWord{{q, -1}}));
    EXPECT_EQ(fp.rewrite_to_X(fp.expand(Syllable{q, 3})), (XWord{{q, 3}}));
  }
  EXPECT_THROW(fp.rewrite_to_X({{1, 1}}), NotInKernel);
  EXPECT_THROW(fp.rewrite_to_X({{1, 1}, {2, 1}}), NotInKernel);
}

TEST(FreeProducts, RewriteRoundTrip) {
  const FreeProduct fp(share(cyclic(3)), share(cyclic(2)));
  std::mt19937_64 rng(3);
  std::size_t nontrivial = 0;
  for (int i = 0; i < 3000; ++i) {
    const FPWord x = fp.random_kernel_word(rng, 8);
    ASSERT_TRUE(fp.in_kernel(x));
    const XWord w = fp.rewrite_to_X(x);
    for (std::size_t j = 0; j < w.size(); ++j) {
      ASSERT_NE(w[j].power, 0);
      if (j > 0) ASSERT_NE(w[j].generator, w[j - 1].generator);
    }
    ASSERT_EQ(fp.expand(w), x) << fp.to_string(x);
    nontrivial += w.size() > 1;
  }
  EXPECT_GT(nontrivial, 500u);
  // X is a free basis: random reduced X-words survive expand then rewrite.
  std::uniform_int_distribution<int> pick(0, 1), pw(-3, 3);
  for (int i = 0; i < 1000; ++i) {
    XWord w;
    for (int j = 0; j < 5; ++j) {
      const XGenerator q{static_cast<Element>(1 + pick(rng)), 1};
      const int p = pw(rng);
      if (p == 0 || (!w.empty() && w.back().generator == q)) continue;
      w.push_back({q, p});
    }
    ASSERT_EQ(fp.rewrite_to_X(fp.expand(w)), w);
  }
}

TEST(FreeProducts, BetaExamples) {
  const auto k = normalized_klein(2, 1);
  const FreeProductMultiplier m(k, trivial_on(2));
  const FreeProduct& fp = m.free_product();
  EXPECT_TRUE(m.beta({{1, 1}}).is_zero());
  EXPECT_TRUE(m.beta(fp.commutator({1, 1})).is_zero());
  EXPECT_TRUE(m.beta(fp.expand(Syllable{{2, 1}, 2})).is_zero());
  bool seen_nonzero = false;
  for (Element a = 1; a < 4; ++a)
    for (Element b = 1; b < 4; ++b) {
      if (a == b) continue;
      const XWord w{{{a, 1}, 1}, {{b, 1}, -1}};
      const FPWord x = fp.expand(w);
      const RotationNumber expected = m.tau(fp.commutator({a, 1}), fp.inverse(fp.commutator({b, 1})));
      // The G2 letters at the junction of q_a and q_b^-1 cancel, leaving a^-1 against b.
      EXPECT_EQ(expected, k->value(k->group().inverse(a), b));
      EXPECT_EQ(m.beta(x), expected);
      seen_nonzero = seen_nonzero || !expected.is_zero();
    }
  EXPECT_TRUE(seen_nonzero);
}

TEST(FreeProducts, MultiplierLaws) {
  for (const auto& [name, s1, s2] : pairs()) {
    const FreeProductMultiplier m(s1, s2);
    const FreeProduct& fp = m.free_product();
    auto draw = [&](std::mt19937_64& rng) { return fp.random_word(rng, 6); };
    const auto rep = validate_sampled(m, draw, 1500, 4);
    EXPECT_TRUE(rep.ok) << name << ": " << rep.message;

    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i) {
      const FPWord x = fp.random_word(rng, 8);
      ASSERT_TRUE(m.value(x, fp.inverse(x)).is_zero()) << name << " " << fp.to_string(x);
      const FPWord u = fp.random_kernel_word(rng, 8), v = fp.random_kernel_word(rng, 8);
      ASSERT_TRUE(m.value(u, v).is_zero()) << name << " " << fp.to_string(u) << " | " << fp.to_string(v);
    }
    for (int i = 1; i <= 2; ++i) {
      const FiniteGroup& g = fp.factor(i);
      for (Element a = 0; a < g.order(); ++a)
        for (Element b = 0; b < g.order(); ++b)
          ASSERT_EQ(m.value(fp.letter(i, a), fp.letter(i, b)), m.sigma(i).value(a, b)) << name;
    }
  }
}

TEST(FreeProducts, TrivialFactorsGiveTrivialMultiplier) {
  const FreeProductMultiplier m(trivial_on(3), trivial_on(2));
  std::mt19937_64 rng(6);
  for (int i = 0; i < 500; ++i) {
    const FPWord x = m.free_product().random_word(rng, 8), y = m.free_product().random_word(rng, 8);
    ASSERT_TRUE(m.value(x, y).is_zero());
  }
}

TEST(FreeProducts, TauIsSimilarToTheProduct) {
  for (const auto& [name, s1, s2] : pairs()) {
    const auto m = std::make_shared<const FreeProductMultiplier>(s1, s2);
    const FreeProductTau tau{m.get()};
    EXPECT_TRUE(validate_sampled(tau, [&](std::mt19937_64& rng) { return m->free_product().random_word(rng, 6); },
                                 1000, 7)
                    .ok)
        << name;
    const auto r = is_similar_sampled(
        m->free_product(), [m](const FPWord& x, const FPWord& y) { return m->tau(x, y); },
        [m](const FPWord& x, const FPWord& y) { return m->value(x, y); }, [m](const FPWord& x) { return m->beta(x); },
        1000, 6, 8);
    EXPECT_TRUE(r.ok) << name;
  }
}

TEST(FreeProducts, DecomposeRoundTrip) {
  for (const auto& [name, s1, s2] : pairs()) {
    const auto m = std::make_shared<const FreeProductMultiplier>(s1, s2);
    const auto d = decompose(
        m->free_product(), [m](const FPWord& x, const FPWord& y) { return m->value(x, y); }, 1000, 6, 9);
    EXPECT_EQ(d.checked_pairs, 1000u);
    for (int i = 1; i <= 2; ++i) {
      const MultiplierPtr& r = i == 1 ? d.sigma1 : d.sigma2;
      const FiniteGroup& g = m->free_product().factor(i);
      for (Element a = 0; a < g.order(); ++a)
        for (Element b = 0; b < g.order(); ++b) ASSERT_EQ(r->value(a, b), m->sigma(i).value(a, b)) << name;
    }
    EXPECT_TRUE(d.beta({}).is_zero());
    EXPECT_TRUE(d.beta(m->free_product().letter(1, 1)).is_zero());
  }
}

TEST(FreeProducts, DecomposeZeroAndTau) {
  const auto m = std::make_shared<const FreeProductMultiplier>(normalized_klein(2, 1), trivial_on(3));
  const FreeProduct& fp = m->free_product();
  const auto zero = std::make_shared<const FreeProductMultiplier>(trivial_on(4), trivial_on(3));
  const auto dz = decompose(
      zero->free_product(), [](const FPWord&, const FPWord&) { return RotationNumber{}; }, 500, 6, 11);
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) ASSERT_TRUE(dz.beta(zero->free_product().random_word(rng, 8)).is_zero());

  const auto dt = decompose(fp, [m](const FPWord& x, const FPWord& y) { return m->tau(x, y); }, 1000, 6, 13);
  bool nontrivial = false;
  for (int i = 0; i < 500 && !nontrivial; ++i) nontrivial = !dt.beta(fp.random_kernel_word(rng, 8)).is_zero();
  EXPECT_TRUE(nontrivial);
}

TEST(FreeProducts, DecomposeTwistedInput) {
  // sigma1 * sigma2 twisted by the odd letter-sum coboundary phi.
  const auto m = std::make_shared<const FreeProductMultiplier>(trivial_on(3), normalized_klein(2, 1));
  const FreeProduct& fp = m->free_product();
  auto phi = [](const FPWord& x) {
    RotationNumber r;
    for (const auto& l : x) {
      if (l.factor == 1) r += RotationNumber::rational(l.element == 1 ? 1 : -1, 5);
      else if (l.element == 3) r += RotationNumber::rational(1, 2);
    }
    return r;
  };
  auto twisted_sigma = [m, phi, &fp](const FPWord& x, const FPWord& y) {
    return m->value(x, y) + phi(x) + phi(y) - phi(fp.multiply(x, y));
  };
  std::mt19937_64 rng(14);
  for (int i = 0; i < 300; ++i) {
    const FPWord x = fp.random_word(rng, 6);
    ASSERT_TRUE(twisted_sigma(x, fp.inverse(x)).is_zero());
  }
  const auto d = decompose(fp, twisted_sigma, 1000, 6, 15);
  EXPECT_EQ(d.checked_pairs, 1000u);
  // A genuinely different input is refused.
  auto broken = [m](const FPWord& x, const FPWord& y) {
    RotationNumber r = m->value(x, y);
    if (x.size() == 2 && y.size() == 2) r += RotationNumber::rational(1, 7);
    return r;
  };
  EXPECT_THROW(decompose(fp, broken, 1000, 6, 16), SimilarityFailure);
}

}  // namespace
