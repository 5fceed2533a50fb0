#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <random>

#include "test_support.hpp"
#include "varloc/errors.hpp"
#include "varloc/solver.hpp"

using namespace varloc;

TEST(Rpte, TangentCirclesExample) {
  const Scenario s({{0, 0}, {4, 0}}, {2, 2}, 0);
  const Estimate e = rpte(s, 21);
  EXPECT_EQ(e.point, (Point2{2, 0}));
  EXPECT_EQ(e.objective, 0.0);
  EXPECT_EQ(e.provenance.method, "rpte");
}

TEST(Rpte, NoiselessTargetAtCircleIntersection) {
  // Target (3, 4) is the top of the ellipse for anchors (0,0), (6,0): center
  // (3,0), semi-axes 5 and 4, reached at theta = pi/2 whenever 4 divides G-1.
  const Scenario s({{0, 0}, {6, 0}, {3, 0}, {0, 8}}, {5, 5, 4, 5}, 1);
  for (int G : {9, 21, 41}) {
    const Estimate e = rpte(s, G);
    EXPECT_LE(e.objective, 1e-9) << "G=" << G;
    EXPECT_NEAR(distance(e.point, {3, 4}), 0.0, 1e-9) << "G=" << G;
  }
}

TEST(Rpte, NoiselessL0WithinArcGap) {
  std::mt19937_64 rng(51);
  const int G = 400;
  for (int trial = 0; trial < 20; ++trial) {
    const int M = 3 + trial % 6;
    const auto inst = testkit::noiseless_instance(rng, M, 0);
    const auto& y = inst.scenario.measurements();
    const double gap = 2 * std::numbers::pi * *std::max_element(y.begin(), y.end()) / (G - 1);
    EXPECT_LE(rpte(inst.scenario, G).objective, gap);
  }
}

TEST(Rpte, ObjectiveIsSelfConsistent) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 100; ++trial) {
    const int M = 3 + trial % 8;
    const int L = trial % M;
    const auto inst = testkit::random_instance(rng, M, L, 0.05, 1.0, L);
    const Estimate e = rpte(inst.scenario, 20);
    const double direct = objective(e.point, inst.scenario);
    EXPECT_EQ(std::memcmp(&direct, &e.objective, sizeof direct), 0);
  }
}

TEST(Rpte, ProvenanceIdentifiesWinningCandidate) {
  std::mt19937_64 rng(53);
  const auto inst = testkit::random_instance(rng, 6, 2, 0.05, 1.0, 2);
  const int G = 20;
  const CandidateList list = discretize(build_majorizer(inst.scenario), G);
  const Estimate e = rpte(inst.scenario, G);
  std::size_t match = list.size();
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto& t = list.tags[i];
    if (t.source == e.provenance.source && t.first == e.provenance.first &&
        t.second == e.provenance.second && t.grid_index == e.provenance.grid_index) {
      match = i;
      break;
    }
  }
  ASSERT_LT(match, list.size());
  EXPECT_EQ(list.points[match], e.point);
  // First minimum in candidate order.
  for (std::size_t i = 0; i < match; ++i) {
    EXPECT_GT(objective(list.points[i], inst.scenario), e.objective);
  }
  for (std::size_t i = match; i < list.size(); ++i) {
    EXPECT_GE(objective(list.points[i], inst.scenario), e.objective);
  }
}

TEST(Rpte, NestedGridsNeverGetWorse) {
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 60; ++trial) {
    const int M = 3 + trial % 6;
    const int L = trial % M;
    const auto inst = testkit::random_instance(rng, M, L, 0.05, 1.5, L);
    double previous = INFINITY;
    for (int G = 3; G <= 400; G = 2 * (G - 1) + 1) {
      const double value = rpte(inst.scenario, G).objective;
      EXPECT_LE(value, previous) << "G=" << G;
      previous = value;
    }
  }
}

TEST(Rpte, OutputWithinNormBound) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 200; ++trial) {
    const int M = 3 + trial % 8;
    const int L = trial % M;
    const auto inst = testkit::random_instance(rng, M, L, 0.05, 1.0, L);
    const Estimate e = rpte(inst.scenario, 20);
    EXPECT_LE(norm(e.point), norm_bound(inst.scenario, anchor_mean(inst.scenario)) + 1e-9);
  }
}

TEST(Rpte, RejectsSmallGrid) {
  const Scenario s({{0, 0}, {4, 0}}, {2, 2}, 0);
  EXPECT_THROW(rpte(s, 1), DomainError);
}

TEST(Rpte, IsDeterministic) {
  std::mt19937_64 rng(56);
  const auto inst = testkit::random_instance(rng, 10, 3, 0.05, 1.0, 3);
  const Estimate a = rpte(inst.scenario, 20);
  const Estimate b = rpte(inst.scenario, 20);
  EXPECT_EQ(a.point, b.point);
  EXPECT_EQ(a.provenance.grid_index, b.provenance.grid_index);
}

TEST(OracleGrid, FindsLatticeTarget) {
  // Target (0.25, 0.5) sits on the lattice lo + (i, j) * h for lo = (-1, -1), h = 0.125.
  const Point2 truth{0.25, 0.5};
  std::vector<Point2> anchors{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  std::vector<double> y;
  for (const auto& a : anchors) y.push_back(distance(truth, a));
  const Scenario s(anchors, y, 1);
  OracleOptions opt;
  opt.bbox = BoundingBox{{-1, -1}, {1, 1}};
  const Estimate e = oracle_grid(s, 0.125, opt);
  EXPECT_EQ(e.point, truth);
  EXPECT_EQ(e.objective, 0.0);
  EXPECT_EQ(e.provenance.source, Source::Oracle);
  EXPECT_EQ(e.provenance.first, 10);
  EXPECT_EQ(e.provenance.second, 12);
  EXPECT_EQ(e.provenance.grid_index, 12 * 17 + 10);
}

TEST(OracleGrid, MatchesBruteForceLattice) {
  std::mt19937_64 rng(57);
  for (int trial = 0; trial < 10; ++trial) {
    const int M = 3 + trial % 4;
    const auto inst = testkit::random_instance(rng, M, trial % M, 0.05, 1.0, trial % M);
    OracleOptions opt;
    opt.bbox = BoundingBox{{-0.5, -0.25}, {1.5, 1.25}};
    const double h = 0.0625;
    double best = INFINITY;
    Point2 arg;
    for (int j = 0; j <= 24; ++j) {
      for (int i = 0; i <= 32; ++i) {
        const Point2 p{-0.5 + i * h, -0.25 + j * h};
        const double v = testkit::brute_objective(p, inst.scenario);
        if (v < best) {
          best = v;
          arg = p;
        }
      }
    }
    const Estimate e = oracle_grid(inst.scenario, h, opt);
    EXPECT_EQ(e.objective, best);
    EXPECT_EQ(e.point, arg);
  }
}

TEST(OracleGrid, ThreadCountDoesNotChangeResult) {
  std::mt19937_64 rng(58);
  const auto inst = testkit::random_instance(rng, 5, 2, 0.05, 1.0, 2);
  OracleOptions one, four;
  one.threads = 1;
  four.threads = 4;
  const Estimate a = oracle_grid(inst.scenario, 0.01, one);
  const Estimate b = oracle_grid(inst.scenario, 0.01, four);
  EXPECT_EQ(a.point, b.point);
  EXPECT_EQ(a.objective, b.objective);
}

TEST(OracleGrid, NestedRefinementNeverGetsWorse) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 8; ++trial) {
    const int M = 3 + trial % 3;
    const auto inst = testkit::random_instance(rng, M, trial % M, 0.05, 1.0, trial % M);
    OracleOptions opt;
    opt.bbox = BoundingBox{{-1, -1}, {2, 2}};
    double previous = INFINITY;
    for (double h = 0.25; h >= 0.25 / 64; h *= 0.5) {
      const double value = oracle_grid(inst.scenario, h, opt).objective;
      EXPECT_LE(value, previous) << "h=" << h;
      previous = value;
    }
  }
}

TEST(OracleGrid, Errors) {
  const Scenario s({{0, 0}, {4, 0}}, {2, 2}, 0);
  EXPECT_THROW(oracle_grid(s, 0.0), DomainError);
  EXPECT_THROW(oracle_grid(s, -1.0), DomainError);
  OracleOptions tiny;
  tiny.budget = 100;
  EXPECT_THROW(oracle_grid(s, 0.1, tiny), ResourceError);
  OracleOptions empty;
  empty.bbox = BoundingBox{{1, 1}, {0, 0}};
  EXPECT_THROW(oracle_grid(s, 0.1, empty), DomainError);
}

TEST(OracleGrid, DefaultBoxIsNormBoundSquare) {
  std::mt19937_64 rng(60);
  const auto inst = testkit::random_instance(rng, 4, 1, 0.05, 1.0, 1);
  const BoundingBox box = default_oracle_box(inst.scenario);
  const double B = norm_bound(inst.scenario, anchor_mean(inst.scenario));
  EXPECT_EQ(box.lo, (Point2{-B, -B}));
  EXPECT_EQ(box.hi, (Point2{B, B}));
}

TEST(RpteVsOracle, FourAnchors) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 3; ++trial) {
    const auto inst = testkit::random_instance(rng, 4, trial % 4, 0.05, 1.0, trial % 4);
    const double r = rpte(inst.scenario, 200).objective;
    const double o = oracle_grid(inst.scenario, 1e-3).objective;
    EXPECT_LE(std::abs(r - o), 5e-3) << "trial " << trial;
  }
}

TEST(RpteVsOracle, ThreeAnchorsOneOutlier) {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 2; ++trial) {
    const auto inst = testkit::random_instance(rng, 3, 1, 0.05, 1.0, 1);
    const double r = rpte(inst.scenario, 500).objective;
    const double o = oracle_grid(inst.scenario, 1e-3).objective;
    EXPECT_LE(std::abs(r - o), 5e-3) << "trial " << trial;
  }
}
