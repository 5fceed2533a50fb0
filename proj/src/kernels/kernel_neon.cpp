// AArch64 variant of the batched objective; mirrors kernel_avx2.cpp with
// two lanes per vector.

#include <arm_neon.h>

#include <cmath>
#include <vector>

#include "varloc/errors.hpp"
#include "varloc/kernels.hpp"

namespace varloc::kernels {

void objective_batch_neon(const AnchorTable& anchors, std::span<const Point2> points,
                          std::span<double> out) {
  if (out.size() < points.size()) throw DomainError("output span too small");
  const int M = anchors.size();
  const int L = anchors.outlier_count;
  const bool keep_largest = L + 1 <= M - L;
  const int k = keep_largest ? L + 1 : M - L;

  std::vector<float64x2_t> slots(static_cast<std::size_t>(k));
  const float64x2_t init = vdupq_n_f64(keep_largest ? -1.0 : INFINITY);

  const std::size_t n = points.size();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2x2_t p = vld2q_f64(&points[i].x);
    for (int r = 0; r < k; ++r) slots[r] = init;
    for (int m = 0; m < M; ++m) {
      const float64x2_t dx = vsubq_f64(p.val[0], vdupq_n_f64(anchors.x[m]));
      const float64x2_t dy = vsubq_f64(p.val[1], vdupq_n_f64(anchors.y[m]));
      const float64x2_t d2 = vaddq_f64(vmulq_f64(dx, dx), vmulq_f64(dy, dy));
      float64x2_t v = vabsq_f64(vsubq_f64(vdupq_n_f64(anchors.range[m]), vsqrtq_f64(d2)));
      for (int r = 0; r < k; ++r) {
        const float64x2_t keep = keep_largest ? vmaxq_f64(slots[r], v) : vminq_f64(slots[r], v);
        v = keep_largest ? vminq_f64(slots[r], v) : vmaxq_f64(slots[r], v);
        slots[r] = keep;
      }
    }
    vst1q_f64(&out[i], slots[k - 1]);
  }
  if (i < n) objective_batch_scalar(anchors, points.subspan(i), out.subspan(i));
}

}  // namespace varloc::kernels
