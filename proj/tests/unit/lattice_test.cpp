#include <gtest/gtest.h>

#include <random>

#include "twisted/integer_lattice.hpp"
#include "twisted/lattice_families.hpp"
#include "twisted/sampled_validation.hpp"

namespace {

using namespace twisted;

RotationNumber r(std::int64_t p, std::int64_t q = 1) { return RotationNumber::rational(p, q); }

TEST(IntegerLattice, HermiteIsUnimodularAndEchelon) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 5;
    IntMatrix a(m, IntVector(n));
    for (auto& row : a)
      for (auto& x : row) x = d(rng);
    const HermiteResult h = column_hermite(a, n);
    // H = A U
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Integer s = 0;
        for (std::size_t k = 0; k < n; ++k) s += a[i][k] * h.transform[k][j];
        ASSERT_EQ(s, h.hermite[i][j]);
      }
    // columns past the rank are zero, so they span the kernel
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = h.rank; j < n; ++j) ASSERT_EQ(h.hermite[i][j], 0);
    // |det U| = 1 via fraction-free elimination over the rationals
    std::vector<std::vector<Rational>> u(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) u[i][j] = Rational(h.transform[i][j]);
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && u[p][c] == 0) ++p;
      ASSERT_LT(p, n);
      if (p != c) {
        std::swap(u[p], u[c]);
        det = -det;
      }
      det *= u[c][c];
      for (std::size_t rr = c + 1; rr < n; ++rr) {
        const Rational f = u[rr][c] / u[c][c];
        for (std::size_t k = c; k < n; ++k) u[rr][k] -= f * u[c][k];
      }
    }
    ASSERT_TRUE(det == 1 || det == -1);
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : a) {
      std::vector<Rational> q;
      for (const auto& x : row) q.emplace_back(x);
      rows.push_back(q);
    }
    ASSERT_EQ(h.rank, rational_rank(rows));
  }
}

TEST(IntegerLattice, KernelOfKnownMatrix) {
  const IntMatrix a = {{1, 2, 3}};
  const auto k = integer_kernel(a, 3);
  ASSERT_EQ(k.size(), 2u);
  for (const auto& v : k) EXPECT_EQ(v[0] + 2 * v[1] + 3 * v[2], 0);
  EXPECT_TRUE(integer_kernel({{1, 0}, {0, 1}}, 2).empty());
  EXPECT_EQ(integer_kernel({}, 3).size(), 3u);
}

TEST(Torus, Values) {
  IrrationalBasis basis;
  const auto t = basis.add("t", 0.3);
  Theta irr(2, basis);
  irr.set(0, 1, RotationNumber::irrational(t));
  EXPECT_TRUE(torus_value(irr, {0, 0}, {3, 4}).is_zero());
  EXPECT_TRUE(torus_value(irr, {3, 4}, {0, 0}).is_zero());
  EXPECT_EQ(torus_value(irr, {1, 0}, {0, 1}), RotationNumber::irrational(t));
  Theta third(2);
  third.set(0, 1, r(1, 3));
  EXPECT_EQ(torus_value(third, {2, 0}, {0, 2}), r(1, 3));
  EXPECT_THROW(torus_value(third, {1, 0, 0}, {0, 1}), DomainMismatch);
  EXPECT_THROW(third.set(1, 0, r(1, 2)), DomainMismatch);
  EXPECT_THROW(irr.set(0, 1, RotationNumber::irrational(3)), BasisMismatch);
}

TEST(Torus, CommutatorPhase) {
  IrrationalBasis basis;
  const auto t = basis.add("t", 0.3);
  Theta irr(2, basis);
  irr.set(0, 1, RotationNumber::irrational(t));
  EXPECT_EQ(commutator_phase(irr, {1, 0}, {0, 1}), RotationNumber::irrational(t));
  EXPECT_FALSE(is_integral(commutator_phase(irr, {1, 0}, {0, 1})));
  EXPECT_TRUE(commutator_phase(irr, {2, 5}, {2, 5}).is_zero());
}

Theta z4_chain_theta(IrrationalBasis& basis) {
  const auto t = basis.add("t", 0.6180339887498949);
  Theta theta(4, basis);
  const auto x = RotationNumber::irrational(t);
  theta.set(0, 1, x);
  theta.set(1, 2, x);
  theta.set(2, 3, x);
  theta.set(0, 3, r(1) - x);
  return theta;
}

TEST(Torus, Z4Configurations) {
  IrrationalBasis b1;
  const Theta theta = z4_chain_theta(b1);
  const LatticePoint ones{1, 1, 1, 1};
  EXPECT_TRUE(is_regular_lattice(theta, ones));
  std::mt19937_64 rng(3);
  auto draw = box_sampler<LatticePoint>(5, 4);
  for (int i = 0; i < 500; ++i) EXPECT_TRUE(is_integral(commutator_phase(theta, ones, draw(rng))));
  const auto d = condition_k_lattice(theta);
  EXPECT_FALSE(d.condition_k);
  ASSERT_TRUE(d.witness);
  EXPECT_TRUE(is_regular_lattice(theta, *d.witness));

  IrrationalBasis b2;
  const auto t = b2.add("t", 0.41);
  Theta simple(4, b2);
  simple.set(0, 1, RotationNumber::irrational(t));
  simple.set(2, 3, RotationNumber::irrational(t));
  EXPECT_TRUE(condition_k_lattice(simple).condition_k);
  for (int i = 0; i < 300; ++i) {
    const auto a = draw(rng);
    if (a != LatticePoint(4, 0)) EXPECT_FALSE(is_regular_lattice(simple, a));
  }
}

TEST(Torus, Z2Law) {
  for (std::int64_t q = 1; q <= 9; ++q)
    for (std::int64_t p = 0; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      Theta theta(2);
      theta.set(0, 1, r(p, q));
      const auto d = condition_k_lattice(theta);
      EXPECT_FALSE(d.condition_k);
      ASSERT_TRUE(d.witness);
      EXPECT_EQ(*d.witness, (LatticePoint{q, 0}));
      EXPECT_TRUE(is_regular_lattice(theta, *d.witness));
    }
  IrrationalBasis basis;
  const auto t = basis.add("t", 0.2);
  Theta theta(2, basis);
  theta.set(0, 1, RotationNumber::irrational(t, Rational(2, 3), Rational(1, 5)));
  EXPECT_TRUE(condition_k_lattice(theta).condition_k);
}

TEST(Torus, QThetaDimension) {
  IrrationalBasis basis;
  const auto t = basis.add("t"), s = basis.add("s"), u = basis.add("u");
  Theta rational(3, basis);
  rational.set(0, 1, r(1, 2));
  rational.set(1, 2, r(2, 3));
  EXPECT_EQ(qtheta_dimension(rational), 1u);
  Theta one(3, basis);
  one.set(0, 1, RotationNumber::irrational(t));
  EXPECT_EQ(qtheta_dimension(one), 2u);
  Theta all(3, basis);
  all.set(0, 1, RotationNumber::irrational(t));
  all.set(0, 2, RotationNumber::irrational(s));
  all.set(1, 2, RotationNumber::irrational(u));
  EXPECT_EQ(qtheta_dimension(all), 4u);
  EXPECT_TRUE(condition_k_lattice(all).condition_k);
  EXPECT_THROW(qtheta_dimension(Theta(4, basis)), DomainMismatch);
}

TEST(Torus, RegularityMatchesUnitVectors) {
  IrrationalBasis basis;
  basis.add("t");
  basis.add("s");
  std::mt19937_64 rng(5);
  auto draw = box_sampler<LatticePoint>(3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    Theta theta(3, basis);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        theta.set(i, j, RotationNumber(Rational(static_cast<std::int64_t>(rng() % 5), 4),
                                       {{rng() % 2, Rational(static_cast<std::int64_t>(rng() % 3))}}));
    for (int k = 0; k < 20; ++k) {
      const auto a = draw(rng), b = draw(rng);
      ASSERT_EQ(commutator_phase(theta, a, b), -commutator_phase(theta, b, a));
      bool units = true;
      for (std::size_t j = 0; j < 3; ++j) {
        LatticePoint e(3, 0);
        e[j] = 1;
        units = units && is_integral(commutator_phase(theta, a, e));
      }
      ASSERT_EQ(is_regular_lattice(theta, a), units);
    }
    TorusMultiplier m{theta};
    EXPECT_TRUE(validate_sampled(m, box_sampler<LatticePoint>(5, 3), 300, trial).ok);
  }
}

TEST(G3, GroupLaw) {
  const G3Element x{1, 0, 0, 0, 0, 0}, y{0, 1, 0, 0, 0, 0};
  EXPECT_EQ(g3_multiply(x, y), (G3Element{1, 1, 0, 1, 0, 0}));
  std::mt19937_64 rng(6);
  auto draw = box_sampler<G3Element>(4);
  for (int i = 0; i < 2000; ++i) {
    const auto a = draw(rng), b = draw(rng), c = draw(rng);
    ASSERT_EQ(g3_multiply(a, G3Element{}), a);
    ASSERT_EQ(g3_multiply(G3Element{}, a), a);
    ASSERT_EQ(g3_multiply(a, g3_inverse(a)), G3Element{});
    ASSERT_EQ(g3_multiply(g3_inverse(a), a), G3Element{});
    ASSERT_EQ(g3_multiply(g3_multiply(a, b), c), g3_multiply(a, g3_multiply(b, c)));
  }
}

MuMatrix random_mu(std::mt19937_64& rng, const IrrationalBasis& basis, bool irrational) {
  MuMatrix mu;
  mu.basis = basis;
  for (const char* name : MuMatrix::parameter_names) {
    RotationNumber v(Rational(static_cast<std::int64_t>(rng() % 7), 6));
    if (irrational && basis.size() > 0 && rng() % 2)
      v += RotationNumber::irrational(rng() % basis.size(), static_cast<std::int64_t>(rng() % 3) - 1);
    mu.parameter(name) = v;
  }
  return mu;
}

TEST(G3, CocycleIdentity) {
  IrrationalBasis basis;
  basis.add("t");
  basis.add("s");
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    G3Multiplier m{random_mu(rng, basis, true)};
    const auto rep = validate_sampled(m, box_sampler<G3Element>(3), 1000, trial);
    EXPECT_TRUE(rep.ok) << rep.message;
    EXPECT_TRUE(g3_value(m.mu, G3Element{}, {1, 2, 3, 4, 5, 6}).is_zero());
    EXPECT_TRUE(g3_value(m.mu, {1, 2, 3, 4, 5, 6}, G3Element{}).is_zero());
  }
}

// With the a4 signs flipped (mu13 exponent b6 a1 - b3 a4, mu22 exponent
// b5 a2 + b3(a4 + a1 a2)) the identity is off by -2 a1 b2 c3 (mu13 - mu22).
TEST(G3, FlippedSignsAreNotACocycle) {
  auto flipped = [](const RotationNumber& m13, const RotationNumber& m22, const G3Element& a, const G3Element& b) {
    return m13 * (b[5] * a[0] - b[2] * a[3]) + m22 * (b[4] * a[1] + b[2] * (a[3] + a[0] * a[1]));
  };
  const RotationNumber m13 = r(1, 7), m22 = r(3, 7);
  std::mt19937_64 rng(8);
  auto draw = box_sampler<G3Element>(3);
  for (int i = 0; i < 500; ++i) {
    const auto a = draw(rng), b = draw(rng), c = draw(rng);
    const auto defect = flipped(m13, m22, a, b) + flipped(m13, m22, g3_multiply(a, b), c) -
                        flipped(m13, m22, a, g3_multiply(b, c)) - flipped(m13, m22, b, c);
    ASSERT_EQ(defect, (m13 - m22) * (-2 * a[0] * b[1] * c[2]));
  }
}

TEST(G3, CentralPhaseRows) {
  IrrationalBasis basis;
  basis.add("t");
  std::mt19937_64 rng(9);
  auto draw = box_sampler<G3Element>(3);
  for (int trial = 0; trial < 20; ++trial) {
    const MuMatrix mu = random_mu(rng, basis, true);
    for (int k = 0; k < 30; ++k) {
      const auto a = draw(rng);
      const std::int64_t c1 = a[3], c2 = a[4], c3 = a[5];
      const G3Element c = g3_central(c1, c2, c3);
      const auto x = draw(rng);
      RotationNumber expected;
      for (int i = 1; i <= 3; ++i)
        expected += (mu.entry(i, 1) * c1 + mu.entry(i, 2) * c2 + mu.entry(i, 3) * c3) * x[i - 1];
      ASSERT_EQ(g3_commutator_phase(mu, x, c), expected);
    }
  }
}

TEST(G3, ConditionK) {
  MuMatrix zero;
  const auto d0 = g3_condition_k(zero);
  EXPECT_FALSE(d0.condition_k);
  EXPECT_EQ(d0.witness, (LatticePoint{1, 0, 0}));

  IrrationalBasis basis;
  const auto t = basis.add("t", 0.3);
  // Diagonal t with mu13 = t, so the derived mu31 vanishes.
  MuMatrix diag;
  diag.basis = basis;
  diag.mu11 = RotationNumber::irrational(t);
  diag.mu22 = RotationNumber::irrational(t);
  diag.mu33 = RotationNumber::irrational(t);
  diag.mu13 = RotationNumber::irrational(t);
  EXPECT_TRUE(diag.mu31().is_zero());
  EXPECT_TRUE(g3_condition_k(diag).condition_k);

  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    const MuMatrix mu = random_mu(rng, basis, false);
    const auto d = g3_condition_k(mu);
    EXPECT_FALSE(d.condition_k);
    ASSERT_TRUE(d.witness);
    const G3Element c = g3_central((*d.witness)[0], (*d.witness)[1], (*d.witness)[2]);
    for (int k = 0; k < 100; ++k) ASSERT_TRUE(g3_commutator_phase(mu, box_sampler<G3Element>(4)(rng), c).is_zero());
  }
}

}  // namespace
