#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <numeric>

#include "steincalc/configurations.hpp"
#include "steincalc/error.hpp"
#include "steincalc/invariants.hpp"
#include "support.hpp"

using namespace steincalc;
using steincalc::testing::uniform;

namespace {

std::size_t eigen_rank(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::MatrixXd d(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d(i, j) = static_cast<double>(m(i, j));
  Eigen::FullPivLU<Eigen::MatrixXd> lu(d);
  return static_cast<std::size_t>(lu.rank());
}

double eigen_abs_det(const IntMatrix& m) {
  Eigen::MatrixXd d(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d(i, j) = static_cast<double>(m(i, j));
  return std::abs(d.determinant());
}

// Hole-set indicator columns, independent of the library's boundary map.
IntMatrix indicator_matrix(const Word& w) {
  const int b = w.surface().boundary_count();
  IntMatrix m(static_cast<std::size_t>(b - 1), w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    for (int h : *w.curve_at(i).hole_set) m(static_cast<std::size_t>(h - 2), i) = 1;
  return m;
}

Int product(const IntVector& v) { return std::accumulate(v.begin(), v.end(), Int{1}, std::multiplies<>()); }

}  // namespace

TEST(Euler, LengthPlusPage) {
  const auto cfg = tau_boundary_configuration(2, 3);
  EXPECT_EQ(euler_characteristic(cfg.word()), (2 - 4 - 3) + 3);
}

TEST(PlanarForm, BoundaryTwistCalibration) {
  for (int b = 2; b <= 10; ++b) {
    const auto cfg = tau_boundary_configuration(0, b);
    const PlanarForm f = planar_intersection_form(cfg.word());
    EXPECT_EQ(f.b2, 1U);
    EXPECT_EQ(f.Q.rows(), 1U);
    EXPECT_EQ(f.Q(0, 0), -b);
    EXPECT_EQ(f.invariant_factors, (IntVector{b}));
    EXPECT_EQ(f.signature, -1);
    EXPECT_EQ(euler_characteristic(cfg.word()), 2);
  }
}

TEST(PlanarForm, LanternSubstitution) {
  const StandardLantern l = standard_lantern_configuration();
  const Word boundary = Word::positive(l.system, l.boundary);
  const Word right = Word::positive(l.system, std::vector<CurveId>{l.curves.a12, l.curves.a23, l.curves.a13});
  EXPECT_EQ(planar_intersection_form(boundary).signature, -1);
  EXPECT_EQ(planar_intersection_form(right).signature, 0);
  EXPECT_EQ(planar_intersection_form(right).b2, 0U);
  EXPECT_EQ(euler_characteristic(right), 1);
}

TEST(PlanarForm, MatchesIndependentRankAndDeterminant) {
  for (int trial = 0; trial < 300; ++trial) {
    const auto sample = steincalc::testing::random_planar_sample(uniform(4, 8), 20);
    const Word& w = sample.word;
    const PlanarForm f = planar_intersection_form(w);
    const std::size_t b2 = w.size() - eigen_rank(indicator_matrix(w));
    EXPECT_EQ(f.b2, b2);
    EXPECT_EQ(second_betti_number(w), b2);
    // -Id restricted to a lattice is negative definite.
    EXPECT_EQ(f.signature, -static_cast<int>(b2));
    if (b2 > 0 && b2 <= 10) EXPECT_NEAR(eigen_abs_det(f.Q), static_cast<double>(product(f.invariant_factors)), 1e-6);
  }
}

TEST(PlanarForm, InvariantUnderReorderingAndOuterConvention) {
  for (int trial = 0; trial < 200; ++trial) {
    const auto sample = steincalc::testing::random_planar_sample(uniform(4, 7), 14);
    std::vector<CurveId> letters;
    for (const Twist& t : sample.word.twists()) letters.push_back(t.curve);
    const PlanarForm f = planar_intersection_form(sample.word);
    std::shuffle(letters.begin(), letters.end(), steincalc::testing::rng());
    const PlanarForm g = planar_intersection_form(Word::positive(sample.system, letters));
    EXPECT_EQ(f.invariant_factors, g.invariant_factors);
    EXPECT_EQ(f.signature, g.signature);
  }
  // d1 stored as -(d2 + ... + db) versus the convex curve around all holes.
  for (int b = 3; b <= 7; ++b) {
    auto sys = std::make_shared<CurveSystem>(Surface(0, b));
    std::vector<CurveId> flagged = add_boundary_curves(*sys);
    std::vector<int> all;
    for (int h = 2; h <= b; ++h) all.push_back(h);
    std::vector<CurveId> plain = flagged;
    plain[0] = sys->add(Curve::around_holes(sys->surface(), "outer", all));
    const PlanarForm f = planar_intersection_form(Word::positive(sys, flagged));
    const PlanarForm g = planar_intersection_form(Word::positive(sys, plain));
    EXPECT_EQ(f.invariant_factors, g.invariant_factors);
    EXPECT_EQ(f.signature, g.signature);
  }
}

TEST(PlanarForm, RequiresHoleSets) {
  const auto cfg = tau_boundary_configuration(1, 2);
  EXPECT_THROW(planar_intersection_form(cfg.word()), UnsupportedInput);
}

TEST(Sigma, Modes) {
  const auto planar = tau_boundary_configuration(0, 5);
  const SigmaValue exact = sigma(planar.word());
  EXPECT_EQ(exact.mode, SigmaValue::Mode::exact);
  EXPECT_EQ(exact.value, -1);

  const auto genus = tau_boundary_configuration(1, 3);
  EXPECT_THROW(sigma(genus.word()), RelativeUnavailable);
  SigmaLedger ledger("tau_boundary", -1);
  const SigmaValue rel = sigma(genus.word(), &ledger);
  EXPECT_EQ(rel.mode, SigmaValue::Mode::relative);
  EXPECT_EQ(rel.value, -1);
  EXPECT_EQ(rel.baseline, "tau_boundary");

  SubstitutionRecord known;
  known.dI = -7;
  ledger.record(known);
  EXPECT_EQ(sigma(genus.word(), &ledger).value, -8);
  ledger.record(SubstitutionRecord{});
  const SigmaValue unknown = sigma(genus.word(), &ledger);
  EXPECT_EQ(unknown.mode, SigmaValue::Mode::unknown);
  EXPECT_FALSE(unknown.value.has_value());
}

TEST(H1Boundary, BoundaryTwistFamily) {
  for (int g = 0; g <= 3; ++g)
    for (int b = 2; b <= 12; ++b) {
      const auto cfg = tau_boundary_configuration(g, b);
      EXPECT_EQ(h1_boundary(cfg.word()).group, (AbelianGroup{{b}, static_cast<std::size_t>(2 * g)}))
          << g << "," << b;
    }
}

TEST(H1Boundary, LensSpaces) {
  for (int k = 1; k <= 9; ++k) {
    auto sys = std::make_shared<CurveSystem>(Surface(0, 2));
    const CurveId d = sys->add(Curve::around_holes(sys->surface(), "d", {2}));
    const Word w = Word::positive(sys, std::vector<CurveId>(static_cast<std::size_t>(k), d));
    const AbelianGroup expected = k == 1 ? AbelianGroup{{}, 0} : AbelianGroup{{k}, 0};
    EXPECT_EQ(h1_boundary(w).group, expected) << k;
  }
  EXPECT_EQ(h1_boundary(Word(std::make_shared<CurveSystem>(Surface(0, 2)))).group, (AbelianGroup{{}, 1}));
}

TEST(H1Boundary, PowersOfOneTwistOnTorus) {
  for (int k = 1; k <= 6; ++k) {
    auto sys = std::make_shared<CurveSystem>(Surface(1, 1));
    const CurveId a = sys->add(Curve::with_class("a", HomologyClass::basis(sys->surface(), 0)));
    const Word w = Word::positive(sys, std::vector<CurveId>(static_cast<std::size_t>(k), a));
    const AbelianGroup expected = k == 1 ? AbelianGroup{{}, 1} : AbelianGroup{{k}, 1};
    EXPECT_EQ(h1_boundary(w).group, expected) << k;
  }
}

TEST(H1Boundary, NullHomologousTwistChangesNothing) {
  auto sys = std::make_shared<CurveSystem>(Surface(1, 2));
  const auto boundary = add_boundary_curves(*sys);
  const CurveId a = sys->add(Curve::with_class("a", HomologyClass::basis(sys->surface(), 0)));
  const CurveId z = sys->add(Curve::with_class("z", HomologyClass::zero(sys->surface())));
  const Word w = Word::positive(sys, std::vector<CurveId>{a, boundary[1], a});
  const Word wz = Word::positive(sys, std::vector<CurveId>{a, z, boundary[1], a, z});
  EXPECT_EQ(h1_boundary(w).group, h1_boundary(wz).group);
}

TEST(H1Boundary, PreservedByLanternSubstitution) {
  int applied = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto sample = steincalc::testing::random_planar_sample(uniform(4, 8), 20);
    const AbelianGroup before = h1_boundary(sample.word).group;
    for (const auto& entry : sample.lanterns)
      for (int direction : {1, -1}) {
        try {
          const Word after = substitute(sample.word, entry.relator, direction).word;
          EXPECT_EQ(h1_boundary(after).group, before);
          ++applied;
        } catch (const NotApplicable&) {
        }
      }
  }
  EXPECT_GT(applied, 100);
}

TEST(H1Boundary, ArcOverride) {
  const auto cfg = tau_boundary_configuration(1, 3);
  std::vector<Arc> arcs = relative_basis(cfg.system->surface());
  // A unimodular change of basis gives the same group.
  for (std::size_t i = 0; i < arcs[2].rel_class.size(); ++i) arcs[2].rel_class[i] += arcs[3].rel_class[i];
  EXPECT_EQ(h1_boundary(cfg.word(), arcs).group, h1_boundary(cfg.word()).group);
  arcs[2].rel_class = arcs[3].rel_class;
  EXPECT_THROW(h1_boundary(cfg.word(), arcs), PreconditionError);
}

TEST(Chern, BoundaryTwistCases) {
  for (int g = 0; g <= 4; ++g)
    for (int b = 2; b <= 8; ++b) {
      const auto cfg = tau_boundary_configuration(g, b);
      const ChernData c = chern_pd(cfg.word());
      const Int k = 2 * g - 2;
      const Int expected_order = b / std::gcd(k < 0 ? -k : k, Int{b});
      EXPECT_EQ(c.order, expected_order) << g << "," << b;
      if (b == 2 && g > 0) EXPECT_TRUE(c.is_zero());
      if (g == 1) EXPECT_TRUE(c.is_zero());
      if (g > 1 && b > 2) EXPECT_EQ(c.is_zero(), k % b == 0);
      // c1 and (2g-2) d_2 agree in H_1(M).
      const H1Boundary h = h1_boundary(cfg.word());
      const FinitelyGeneratedQuotient q(h.relations);
      IntVector diff = c.c1_pd;
      diff[cfg.system->surface().d_index(2)] -= k;
      EXPECT_TRUE(q.is_zero(diff)) << g << "," << b;
    }
}

TEST(Chern, MissingDataIsUnsupported) {
  const StandardLantern l = standard_lantern_configuration();
  const Word right = Word::positive(l.system, std::vector<CurveId>{l.curves.a12, l.curves.a23, l.curves.a13});
  EXPECT_THROW(chern_pd(right), UnsupportedInput);
  const std::vector<Int> rotations{1, 0, 1};
  EXPECT_THROW(chern_pd(right, rotations), UnsupportedInput);
  std::vector<HomologyClass> meridians;
  for (std::size_t i = 0; i < right.size(); ++i) meridians.push_back(right.curve_at(i).homology);
  const ChernData c = chern_pd(right, rotations, meridians);
  EXPECT_EQ(c.c1_pd, (IntVector{2, 1, 1}));
  EXPECT_THROW(chern_pd(right, std::vector<Int>{1}, meridians), PreconditionError);
}

TEST(Chern, MultitwistRecognition) {
  EXPECT_TRUE(is_boundary_multitwist(tau_boundary_configuration(2, 4).word()));
  const StandardLantern l = standard_lantern_configuration();
  EXPECT_FALSE(is_boundary_multitwist(Word::positive(l.system, std::vector<CurveId>{l.boundary[0]})));
}

TEST(Invariants, BoundaryTwistReport) {
  const auto cfg = tau_boundary_configuration(0, 4);
  const FillingInvariants inv = compute_invariants(cfg.word());
  EXPECT_EQ(inv.euler, 2);
  EXPECT_EQ(inv.sigma.value, -1);
  EXPECT_EQ(inv.b2, 1U);
  EXPECT_EQ(inv.h1.group, (AbelianGroup{{4}, 0}));
  EXPECT_EQ(inv.esig, 1);
  EXPECT_EQ(inv.esig_mod4, 1);
  ASSERT_TRUE(inv.chern);
}

TEST(Invariants, NonPlanarWithoutBaseline) {
  const auto cfg = tau_boundary_configuration(1, 2);
  const FillingInvariants inv = compute_invariants(cfg.word());
  EXPECT_EQ(inv.sigma.mode, SigmaValue::Mode::unknown);
  EXPECT_FALSE(inv.esig);
  EXPECT_FALSE(inv.notes.empty());
  EXPECT_EQ(inv.b2, second_betti_number(cfg.word()));
}

TEST(Esig, Comparisons) {
  const StandardLantern l = standard_lantern_configuration();
  const Word boundary = Word::positive(l.system, l.boundary);
  const Word right = Word::positive(l.system, std::vector<CurveId>{l.curves.a12, l.curves.a23, l.curves.a13});
  const FillingInvariants x = compute_invariants(boundary);
  const FillingInvariants y = compute_invariants(right);
  const EsigComparison c = esig_check(x, y, true);
  EXPECT_TRUE(c.equal);
  EXPECT_TRUE(c.congruent_mod4);
  EXPECT_FALSE(c.planarity_contradiction);

  const auto genus = tau_boundary_configuration(1, 3);
  SigmaLedger l1("p", -1), l2("q", -1);
  InvariantOptions o1, o2;
  o1.ledger = &l1;
  o2.ledger = &l2;
  const FillingInvariants r1 = compute_invariants(genus.word(), o1);
  const FillingInvariants r2 = compute_invariants(genus.word(), o2);
  EXPECT_THROW(esig_check(r1, r2), IncomparableModes);
  EXPECT_THROW(esig_check(x, r1), IncomparableModes);
  EXPECT_TRUE(esig_check(r1, compute_invariants(genus.word(), o1)).equal);
}

TEST(Esig, ContradictionNeedsAssertionAndExactValues) {
  const auto b4 = tau_boundary_configuration(0, 4);
  const StandardLantern l = standard_lantern_configuration();
  const Word a12 = Word::positive(l.system, std::vector<CurveId>{l.curves.a12});
  const FillingInvariants x = compute_invariants(b4.word());
  const FillingInvariants y = compute_invariants(a12);
  ASSERT_NE(x.esig, y.esig);
  EXPECT_FALSE(esig_check(x, y).planarity_contradiction);
  EXPECT_TRUE(esig_check(x, y, true).planarity_contradiction);
}

TEST(Esig, ModFour) {
  EXPECT_EQ(mod4(-1), 3);
  EXPECT_EQ(mod4(5), 1);
  EXPECT_EQ(mod4(0), 0);
}
