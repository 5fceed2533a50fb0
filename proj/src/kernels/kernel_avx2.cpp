// Compiled with -mavx2. Only reached through the dispatcher after a CPUID check.

#include <immintrin.h>

#include <vector>

#include "varloc/errors.hpp"
#include "varloc/kernels.hpp"

namespace varloc::kernels {

namespace {

struct Slot {
  __m256d v;
};

// Keeps the k largest (or smallest) values seen so far in each lane, sorted,
// by bubbling every new value through the k slots with max/min.
template <bool KeepLargest>
inline void insert(Slot* slots, int k, __m256d v) {
  for (int r = 0; r < k; ++r) {
    const __m256d s = slots[r].v;
    slots[r].v = KeepLargest ? _mm256_max_pd(s, v) : _mm256_min_pd(s, v);
    v = KeepLargest ? _mm256_min_pd(s, v) : _mm256_max_pd(s, v);
  }
}

}  // namespace

void objective_batch_avx2(const AnchorTable& anchors, std::span<const Point2> points,
                          std::span<double> out) {
  if (out.size() < points.size()) throw DomainError("output span too small");
  const int M = anchors.size();
  const int L = anchors.outlier_count;
  // p_L is the (L+1)-th largest, equivalently the (M-L)-th smallest; track
  // whichever needs fewer slots.
  const bool keep_largest = L + 1 <= M - L;
  const int k = keep_largest ? L + 1 : M - L;

  std::vector<Slot> slots(static_cast<std::size_t>(k));
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  const __m256d init = _mm256_set1_pd(keep_largest ? -1.0 : INFINITY);

  const std::size_t n = points.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    // Point2 is two packed doubles: deinterleave 4 points into x and y lanes.
    // unpack yields lane order (0, 2, 1, 3); it is undone on store.
    const double* base = &points[i].x;
    const __m256d p01 = _mm256_loadu_pd(base);
    const __m256d p23 = _mm256_loadu_pd(base + 4);
    const __m256d px = _mm256_unpacklo_pd(p01, p23);
    const __m256d py = _mm256_unpackhi_pd(p01, p23);

    for (int r = 0; r < k; ++r) slots[r].v = init;
    for (int m = 0; m < M; ++m) {
      const __m256d dx = _mm256_sub_pd(px, _mm256_set1_pd(anchors.x[m]));
      const __m256d dy = _mm256_sub_pd(py, _mm256_set1_pd(anchors.y[m]));
      const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
      const __m256d diff = _mm256_sub_pd(_mm256_set1_pd(anchors.range[m]), _mm256_sqrt_pd(d2));
      const __m256d dev = _mm256_andnot_pd(sign_mask, diff);
      if (keep_largest) {
        insert<true>(slots.data(), k, dev);
      } else {
        insert<false>(slots.data(), k, dev);
      }
    }
    const __m256d result = _mm256_permute4x64_pd(slots[k - 1].v, 0b11'01'10'00);
    _mm256_storeu_pd(&out[i], result);
  }
  if (i < n) objective_batch_scalar(anchors, points.subspan(i), out.subspan(i));
}

}  // namespace varloc::kernels
