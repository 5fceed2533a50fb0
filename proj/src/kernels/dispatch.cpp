#include <atomic>
#include <cstdlib>
#include <string_view>

#include "varloc/errors.hpp"
#include "varloc/kernels.hpp"

namespace varloc::kernels {

const char* to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(VARLOC_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(VARLOC_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa detect_isa() {
  if (isa_supported(Isa::Avx2)) return Isa::Avx2;
  if (isa_supported(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

namespace {

Isa initial_isa() {
  if (const char* env = std::getenv("VARLOC_ISA")) {
    const std::string_view name(env);
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
      if (name == to_string(isa) && isa_supported(isa)) return isa;
    }
  }
  return detect_isa();
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw DomainError(std::string("kernel not supported here: ") + to_string(isa));
  }
  current().store(isa, std::memory_order_relaxed);
}

ObjectiveKernel kernel_for(Isa isa) {
  if (!isa_supported(isa)) {
    throw DomainError(std::string("kernel not supported here: ") + to_string(isa));
  }
  switch (isa) {
#if defined(VARLOC_HAVE_AVX2)
    case Isa::Avx2: return &objective_batch_avx2;
#endif
#if defined(VARLOC_HAVE_NEON)
    case Isa::Neon: return &objective_batch_neon;
#endif
    default: return &objective_batch_scalar;
  }
}

void objective_batch(const AnchorTable& anchors, std::span<const Point2> points,
                     std::span<double> out) {
  kernel_for(active_isa())(anchors, points, out);
}

}  // namespace varloc::kernels
