#include <gtest/gtest.h>

#include <cstring>
#include <random>

#include "test_support.hpp"
#include "varloc/errors.hpp"
#include "varloc/kernels.hpp"

using namespace varloc;
using namespace varloc::kernels;

namespace {

std::vector<Point2> random_points(std::mt19937_64& rng, std::size_t n) {
  std::vector<Point2> pts(n);
  for (auto& p : pts) p = testkit::uniform_point(rng, -3.0, 3.0);
  return pts;
}

std::vector<Isa> simd_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Avx2, Isa::Neon}) {
    if (isa_supported(isa)) out.push_back(isa);
  }
  return out;
}

bool bit_equal(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

class IsaGuard {
 public:
  IsaGuard() : saved_(active_isa()) {}
  ~IsaGuard() { set_isa(saved_); }

 private:
  Isa saved_;
};

}  // namespace

TEST(Kernels, ScalarMatchesReferenceObjective) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const int M = 2 + trial % 19;
    const auto inst = testkit::random_instance(rng, M, trial % M, 0.05, 1.0, trial % M);
    const AnchorTable table(inst.scenario);
    const auto pts = random_points(rng, 13);
    std::vector<double> out(pts.size());
    objective_batch_scalar(table, pts, out);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      EXPECT_TRUE(bit_equal(out[i], objective(pts[i], inst.scenario)));
      EXPECT_TRUE(bit_equal(out[i], testkit::brute_objective(pts[i], inst.scenario)));
    }
  }
}

TEST(Kernels, SimdIsBitIdenticalToScalar) {
  const auto isas = simd_isas();
  if (isas.empty()) GTEST_SKIP() << "no SIMD kernel available on this machine";
  std::mt19937_64 rng(42);
  for (Isa isa : isas) {
    const ObjectiveKernel simd = kernel_for(isa);
    for (int trial = 0; trial < 400; ++trial) {
      const int M = 2 + trial % 23;
      const int L = (trial / 23) % M;
      auto inst = testkit::random_instance(rng, M, L, 0.05, 2.0, L);
      const AnchorTable table(inst.scenario);
      // Batch sizes around the lane width exercise the tail path.
      const auto pts = random_points(rng, static_cast<std::size_t>(trial % 11));
      std::vector<double> ref(pts.size()), got(pts.size());
      objective_batch_scalar(table, pts, ref);
      simd(table, pts, got);
      for (std::size_t i = 0; i < pts.size(); ++i) {
        EXPECT_TRUE(bit_equal(ref[i], got[i])) << to_string(isa) << " M=" << M << " L=" << L;
      }
    }
  }
}

TEST(Kernels, SimdHandlesTiesAndExtremeRanks) {
  const auto isas = simd_isas();
  if (isas.empty()) GTEST_SKIP() << "no SIMD kernel available on this machine";
  // Integer geometry produces many equal deviations.
  const Scenario base({{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}, {1, 1}}, {1, 1, 1, 1, 0, 2}, 0);
  std::vector<Point2> pts;
  for (int i = -2; i <= 4; ++i) {
    for (int j = -2; j <= 4; ++j) pts.push_back({0.5 * i, 0.5 * j});
  }
  for (Isa isa : isas) {
    for (int L = 0; L < base.size(); ++L) {
      const Scenario s = base.with_outlier_count(L);
      const AnchorTable table(s);
      std::vector<double> ref(pts.size()), got(pts.size());
      objective_batch_scalar(table, pts, ref);
      kernel_for(isa)(table, pts, got);
      for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_TRUE(bit_equal(ref[i], got[i]));
    }
  }
}

TEST(Kernels, DispatchFollowsSetIsa) {
  IsaGuard guard;
  set_isa(Isa::Scalar);
  EXPECT_EQ(active_isa(), Isa::Scalar);
  EXPECT_TRUE(isa_supported(Isa::Scalar));
  for (Isa isa : {Isa::Avx2, Isa::Neon}) {
    if (isa_supported(isa)) {
      set_isa(isa);
      EXPECT_EQ(active_isa(), isa);
    } else {
      EXPECT_THROW(set_isa(isa), DomainError);
    }
  }
  EXPECT_TRUE(isa_supported(detect_isa()));
}

TEST(Kernels, ObjectiveBatchUsesActiveKernel) {
  IsaGuard guard;
  std::mt19937_64 rng(43);
  const auto inst = testkit::random_instance(rng, 10, 3, 0.05, 1.0, 3);
  const AnchorTable table(inst.scenario);
  const auto pts = random_points(rng, 257);
  std::vector<double> scalar(pts.size()), dispatched(pts.size());
  set_isa(Isa::Scalar);
  objective_batch(table, pts, scalar);
  set_isa(detect_isa());
  objective_batch(table, pts, dispatched);
  for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_TRUE(bit_equal(scalar[i], dispatched[i]));
}

TEST(Kernels, RejectsMismatchedOutput) {
  std::mt19937_64 rng(44);
  const auto inst = testkit::random_instance(rng, 4, 1, 0.05, 1.0, 1);
  const AnchorTable table(inst.scenario);
  const auto pts = random_points(rng, 5);
  std::vector<double> out(4);
  EXPECT_THROW(objective_batch(table, pts, out), DomainError);
}
