#pragma once

// Batched evaluation of the percentile objective over many candidate points.
//
// The scalar kernel is the reference. The SIMD kernels reproduce it
// bit-for-bit: deviations use the same operation sequence (no FMA), and the
// percentile is selected with min/max only, which is exact. Which kernel runs
// is decided once at startup from the CPU, and can be forced through
// VARLOC_ISA=scalar|avx2|neon or set_isa().

#include <span>
#include <vector>

#include "varloc/core.hpp"

namespace varloc::kernels {

/// Scenario data laid out for the kernels.
struct AnchorTable {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> range;
  int outlier_count = 0;

  explicit AnchorTable(const Scenario& s);
  int size() const { return static_cast<int>(x.size()); }
};

enum class Isa { Scalar, Avx2, Neon };

const char* to_string(Isa isa);

using ObjectiveKernel = void (*)(const AnchorTable&, std::span<const Point2>, std::span<double>);

void objective_batch_scalar(const AnchorTable& anchors, std::span<const Point2> points,
                            std::span<double> out);
#if defined(__x86_64__) || defined(_M_X64)
void objective_batch_avx2(const AnchorTable& anchors, std::span<const Point2> points,
                          std::span<double> out);
#endif
#if defined(__aarch64__)
void objective_batch_neon(const AnchorTable& anchors, std::span<const Point2> points,
                          std::span<double> out);
#endif

/// True if this build and this CPU can run the kernel.
bool isa_supported(Isa isa);

/// Best kernel the CPU supports, ignoring overrides.
Isa detect_isa();

/// Kernel currently used by objective_batch().
Isa active_isa();

/// Forces a kernel. Throws DomainError if unsupported.
void set_isa(Isa isa);

ObjectiveKernel kernel_for(Isa isa);

/// out[i] = objective(points[i], scenario), using the active kernel.
void objective_batch(const AnchorTable& anchors, std::span<const Point2> points,
                     std::span<double> out);

}  // namespace varloc::kernels
