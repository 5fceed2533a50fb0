#pragma once

#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace varloc {

/// Counter-based generator. A stream is identified by a key derived from
/// (seed, purpose tag, indices); draw n is splitmix64(key + n * golden), so
/// streams are independent of how many draws other streams made.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::string_view purpose,
             std::initializer_list<std::uint64_t> indices);

  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal via Box-Muller (two uniforms per draw, cosine branch).
  double normal();
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

  std::uint64_t key() const { return key_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace varloc
