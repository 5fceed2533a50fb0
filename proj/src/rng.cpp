#include "varloc/rng.hpp"

#include <cmath>
#include <numbers>

namespace varloc {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// FNV-1a over the purpose tag, so tags are stable across platforms.
std::uint64_t hash_tag(std::string_view tag) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : tag) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::string_view purpose,
                       std::initializer_list<std::uint64_t> indices)
    : key_(splitmix64(seed ^ splitmix64(hash_tag(purpose)))) {
  for (std::uint64_t idx : indices) key_ = splitmix64(key_ ^ splitmix64(idx + kGolden));
}

std::uint64_t CounterRng::next_u64() { return splitmix64(key_ + kGolden * counter_++); }

double CounterRng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double CounterRng::normal() {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t CounterRng::below(std::uint64_t n) {
  // Rejection sampling keeps the draw exactly uniform.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t v;
  do {
    v = next_u64();
  } while (v >= limit);
  return v % n;
}

}  // namespace varloc
