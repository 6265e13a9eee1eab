#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "nilcortex/cortex.hpp"
#include "nilcortex/gd_family.hpp"
#include "nilcortex/sampling.hpp"
#include "oracles.hpp"

using namespace nilcortex;

namespace {

RatVector rv(std::initializer_list<long> xs) {
  RatVector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

RatVector eps_schedule() { return {Rational(1, 10), Rational(1, 100), Rational(1, 1000)}; }

// Start covector and generator of the exact schedule, written out by hand.
std::pair<RatVector, RatVector> schedule_oracle(std::size_t d, const RatVector& t, const Rational& eps) {
  RatVector ell(4 * d), x(4 * d);
  auto y = [&](std::size_t j) { return t[d + j - 1]; };
  ell[0] = eps;
  for (std::size_t j = 1; j < d; ++j) ell[j] = eps * y(2 * j) / y(2 * j - 1);
  for (std::size_t j = 1; j <= d; ++j) x[3 * d + j - 1] = -y(2 * j - 1) / eps;
  for (std::size_t k = 1; k <= d; ++k) x[d + 2 * k - 2] = t[3 * d + k - 1] / eps;
  return {ell, x};
}

}  // namespace

TEST(ImagePoint, LiesInZPerpAndMatchesOracle) {
  RationalSampler s(51);
  for (std::size_t d = 2; d <= 6; ++d) {
    const auto alg = make_gd(d).algebra;
    for (int it = 0; it < 20; ++it) {
      const RatVector x = s.vector(4 * d), ell = s.vector(4 * d);
      const RatVector p = image_point(alg, x, ell);
      EXPECT_EQ(p, oracle::gd_ad_star(d, x, ell));
      EXPECT_TRUE(in_z_perp(alg, p));
      EXPECT_TRUE(cortex_membership_gd(d, p));
    }
  }
}

TEST(Pullback, ZeroPolynomialForSmallD) {
  for (std::size_t d = 2; d <= 8; ++d) {
    const SparsePoly p = pullback_on_image(d);
    EXPECT_EQ(p.nvars(), 2 * d);
    EXPECT_TRUE(p.is_zero()) << "d=" << d;
  }
}

TEST(Pullback, OracleEvaluationAtRandomParameters) {
  // evaluate Q_d on the parametrized image directly, no polynomial composition
  RationalSampler s(52);
  for (std::size_t d = 2; d <= 8; ++d)
    for (int it = 0; it < 20; ++it) {
      const RatVector a = s.vector(d), z = s.vector(d);
      RatVector ell(4 * d);
      for (std::size_t j = 1; j <= d; ++j) ell[d + 2 * j - 2] = -a[j - 1] * z[0];
      for (std::size_t j = 1; j < d; ++j) ell[d + 2 * j - 1] = -a[j - 1] * z[j];
      Rational tail = 0;
      for (std::size_t i = 2; i <= d; ++i) tail += z[i - 1];
      ell[3 * d - 1] = -a[d - 1] * tail;
      EXPECT_EQ(oracle::gd_q(d, ell), 0);
    }
}

TEST(Membership, Examples) {
  EXPECT_TRUE(cortex_membership_gd(2, rv({0, 0, 1, 2, 3, 6, 9, -4})));
  EXPECT_FALSE(cortex_membership_gd(2, rv({0, 0, 1, 0, 0, 1, 0, 0})));
  EXPECT_FALSE(cortex_membership_gd(2, rv({1, 0, 1, 2, 3, 6, 0, 0})));
  EXPECT_TRUE(cortex_membership_gd(3, RatVector(12)));
  EXPECT_THROW(cortex_membership_gd(2, rv({0, 0})), DimensionError);
}

TEST(Witness, D2Example) {
  const RatVector target = rv({0, 0, 1, 2, 3, 6, 0, 0});
  const auto w = witness_sequence(2, target, eps_schedule());
  ASSERT_EQ(w.steps.size(), 3u);
  const Rational expected[3][2] = {{Rational(1, 10), Rational(1, 5)},
                                   {Rational(1, 100), Rational(1, 50)},
                                   {Rational(1, 1000), Rational(1, 500)}};
  for (std::size_t k = 0; k < 3; ++k) {
    const auto& st = w.steps[k];
    EXPECT_EQ(st.residual[0], expected[k][0]);
    EXPECT_EQ(st.residual[1], expected[k][1]);
    for (std::size_t i = 2; i < 8; ++i) EXPECT_EQ(st.residual[i], 0);
  }
}

TEST(Witness, MatchesHandScheduleOracle) {
  RationalSampler s(53);
  for (std::size_t d = 2; d <= 5; ++d)
    for (int it = 0; it < 10; ++it) {
      const RatVector t = oracle::gd_variety_target(d, s);
      const RatVector eps = eps_schedule();
      const auto w = witness_sequence(d, t, eps);
      for (std::size_t k = 0; k < eps.size(); ++k) {
        const auto [ell, x] = schedule_oracle(d, t, eps[k]);
        EXPECT_EQ(w.steps[k].start, ell);
        EXPECT_EQ(w.steps[k].generator, x);
        const RatVector image = add(ell, oracle::gd_ad_star(d, x, ell));
        EXPECT_EQ(w.steps[k].image, image);
        for (std::size_t i = d; i < 4 * d; ++i) EXPECT_EQ(image[i], t[i]);
        EXPECT_EQ(sub(image, t), ell);
        EXPECT_LE(max_abs(w.steps[k].residual), w.steps[k].bound);
      }
    }
}

TEST(Witness, ResidualIsLinearInEpsilon) {
  RationalSampler s(54);
  const RatVector t = oracle::gd_variety_target(4, s);
  const RatVector eps = eps_schedule();
  const auto w = witness_sequence(4, t, eps);
  for (std::size_t k = 1; k < eps.size(); ++k)
    EXPECT_EQ(w.steps[k].residual, scale(eps[k] / eps[0], w.steps[0].residual));
}

TEST(Witness, TargetZero) {
  // x_k = 0 and y = 0 with y_{2j-1} = 0 is degenerate
  EXPECT_THROW(witness_sequence(2, RatVector(8), eps_schedule()), DegenerateStratumError);
}

TEST(Witness, Errors) {
  EXPECT_THROW(witness_sequence(2, rv({0, 0, 1, 0, 0, 1, 0, 0}), eps_schedule()), MembershipError);
  EXPECT_THROW(witness_sequence(2, rv({0, 0, 0, 3, 0, 7, 1, 1}), eps_schedule()), DegenerateStratumError);
  const RatVector bad{Rational(0)};
  EXPECT_THROW(witness_sequence(2, rv({0, 0, 1, 2, 3, 6, 0, 0}), bad), ArgumentError);
}

TEST(PerturbedWitness, ConvergesOnDegenerateTargets) {
  const RatVector targets[] = {
      RatVector(8),
      rv({0, 0, 0, 3, 0, 7, 1, 1}),
      rv({0, 0, 0, 0, 5, 7, 1, -2}),
      rv({0, 0, 0, 4, 0, 0, 0, 0}),
  };
  const RatVector etas = {Rational(1, 10), Rational(1, 100), Rational(1, 1000)};
  for (const auto& t : targets) {
    for (const auto& eta : etas) {
      const Covector moved = perturb_to_generic_stratum(2, t, eta);
      EXPECT_TRUE(cortex_membership_gd(2, moved));
      EXPECT_NE(sgn(moved[2]), 0);
    }
    Rational prev = -1;
    for (const auto& eta : etas) {
      const RatVector eps{eta * eta * eta};
      const auto w = perturbed_witness(2, t, RatVector{eta}, eps);
      ASSERT_EQ(w.steps.size(), 1u);
      const Rational dist = w.steps[0].distance;
      EXPECT_LE(dist, 20 * eta) << to_string(t);
      if (prev >= 0) EXPECT_LT(dist, prev);
      prev = dist;
    }
  }
}

TEST(PerturbedWitness, D3DegenerateTargets) {
  RationalSampler s(55);
  const std::size_t d = 3;
  for (int it = 0; it < 10; ++it) {
    RatVector t = oracle::gd_variety_target(d, s);
    // y1 = y5 = 0 keeps Q_3 = 0
    t[d + 0] = 0;
    t[d + 4] = 0;
    ASSERT_TRUE(cortex_membership_gd(d, t));
    Rational prev = -1;
    for (const Rational eta : {Rational(1, 10), Rational(1, 100), Rational(1, 1000)}) {
      const auto w = perturbed_witness(d, t, RatVector{eta}, RatVector{eta * eta * eta});
      const Rational dist = w.steps[0].distance;
      if (prev >= 0) EXPECT_LT(dist, prev);
      prev = dist;
    }
    EXPECT_LT(prev, Rational(1, 10));
  }
}

TEST(ICor, WitnessSeparatesIcorFromCortex) {
  for (std::size_t d = 2; d <= 8; ++d) {
    const auto gens = invariant_generators(d);
    RatVector w(4 * d);
    for (std::size_t j = 1; j <= d; ++j) w[d + 2 * j - 2] = 1;
    w[3 * d - 1] = 1;
    EXPECT_TRUE(icor_membership(gens, w));
    EXPECT_FALSE(cortex_membership_gd(d, w));
  }
}

TEST(ICor, EquivalentToZeroZ) {
  RationalSampler s(56);
  for (std::size_t d = 2; d <= 5; ++d) {
    const auto gens = invariant_generators(d);
    for (int it = 0; it < 30; ++it) {
      RatVector ell = s.vector(4 * d);
      if (it % 2 == 0)
        for (std::size_t i = 0; i < d; ++i) ell[i] = 0;
      bool z_zero = true;
      for (std::size_t i = 0; i < d; ++i) z_zero = z_zero && sgn(ell[i]) == 0;
      EXPECT_EQ(icor_membership(gens, ell), z_zero);
    }
  }
}

TEST(Derivation, GeneratorsAreInvariant) {
  for (std::size_t d = 2; d <= 4; ++d) {
    const auto alg = make_gd(d).algebra;
    for (const auto& g : invariant_generators(d))
      for (std::size_t b = 0; b < 4 * d; ++b) EXPECT_TRUE(coadjoint_derivation(alg, g, b).is_zero());
  }
}

TEST(Derivation, Y1AlongX1IsMinusZ1) {
  const auto gd = make_gd(2);
  const auto at = gd.layout();
  const SparsePoly y1 = SparsePoly::variable(8, at.y(1));
  EXPECT_EQ(coadjoint_derivation(gd.algebra, y1, at.x(1)), -SparsePoly::variable(8, at.z(1)));
  EXPECT_FALSE(coadjoint_derivation(gd.algebra, cortex_poly(2), at.x(1)).is_zero());
  EXPECT_THROW(coadjoint_derivation(gd.algebra, SparsePoly::variable(3, 0), 0), DimensionError);
}

TEST(Derivation, MatchesDirectionalDerivativeOracle) {
  // D_b p(l) = d/ds p(l + s ad*_{U_b} l) at s = 0; for quadratics the
  // symmetric difference with step 1 is exact.
  RationalSampler s(57);
  const std::size_t d = 3;
  const auto alg = make_gd(d).algebra;
  for (int it = 0; it < 20; ++it) {
    SparsePoly p(4 * d);
    for (int t = 0; t < 5; ++t) {
      Exponents e(4 * d);
      ++e[s.engine()() % (4 * d)];
      ++e[s.engine()() % (4 * d)];
      p += SparsePoly::monomial(4 * d, e, s.next());
    }
    const RatVector ell = s.vector(4 * d);
    for (std::size_t b = 0; b < 4 * d; ++b) {
      const RatVector dir = oracle::gd_ad_star(d, unit_vector(4 * d, b), ell);
      const Rational fd = (p.eval(add(ell, dir)) - p.eval(sub(ell, dir))) / 2;
      EXPECT_EQ(coadjoint_derivation(alg, p, b).eval(ell), fd);
    }
  }
}

TEST(Classifier, HeisenbergGdAndAbelian) {
  const auto h = codim_classifier(heisenberg(), 50, 0);
  EXPECT_TRUE(h.cor_equals_z_perp);
  EXPECT_EQ(h.codim, 0u);
  EXPECT_EQ(h.z_perp_dim, 2u);
  EXPECT_EQ(h.verdict.rfind("Cor = z^perp", 0), 0u);

  for (std::size_t d = 2; d <= 4; ++d) {
    const auto r = codim_classifier(make_gd(d).algebra, 50, 1);
    EXPECT_FALSE(r.cor_equals_z_perp);
    EXPECT_EQ(r.codim, d);
    EXPECT_EQ(r.generic_orbit_dim, 2 * d);
    EXPECT_EQ(r.verdict.rfind("inconclusive", 0), 0u);
  }

  const auto a = codim_classifier(abelian(3), 5, 0);
  EXPECT_EQ(a.z_perp_dim, 0u);
  EXPECT_EQ(a.verdict, "Cor = z^perp = {0}");

  EXPECT_EQ(codim_classifier(heisenberg(), 0, 0).trials, 1u);
  const LieAlgebra fil({"U1", "U2", "U3", "U4"}, {{0, 1, {{2, 1}}}, {0, 2, {{3, 1}}}});
  EXPECT_THROW(codim_classifier(fil, 5, 0), ClassError);
}

TEST(Cloud, HeisenbergPointsOnUnitSphereOfZPerp) {
  CloudOptions o;
  o.samples = 2000;
  const auto cloud = approximate_cortex(heisenberg(), o);
  EXPECT_GT(cloud.points.size(), 100u);
  for (const auto& p : cloud.points) {
    ASSERT_EQ(p.size(), 3u);
    EXPECT_EQ(p[2], 0.0);
    EXPECT_NEAR(std::max(std::abs(p[0]), std::abs(p[1])), 1.0, 1e-12);
  }
}

TEST(Cloud, G2PointsSatisfyQ2) {
  CloudOptions o;
  o.samples = 2000;
  const auto cloud = approximate_cortex(make_gd(2).algebra, o);
  EXPECT_GT(cloud.points.size(), 10u);
  const auto q = cortex_poly(2);
  for (const auto& p : cloud.points) {
    EXPECT_EQ(p[0], 0.0);
    EXPECT_EQ(p[1], 0.0);
    EXPECT_LE(std::abs(q.eval(std::span<const double>(p))), 1e-9);
  }
}

TEST(Cloud, EmptyAndDeterministicAcrossThreads) {
  CloudOptions o;
  o.samples = 0;
  EXPECT_TRUE(approximate_cortex(heisenberg(), o).points.empty());

  o.samples = 3000;
  o.seed = 9;
  o.threads = 1;
  const auto one = approximate_cortex(make_gd(3).algebra, o);
  o.threads = 3;
  const auto three = approximate_cortex(make_gd(3).algebra, o);
  EXPECT_EQ(one.points, three.points);
  o.seed = 10;
  EXPECT_NE(approximate_cortex(make_gd(3).algebra, o).points, one.points);
}
