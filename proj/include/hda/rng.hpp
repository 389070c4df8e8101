#pragma once

#include <cmath>
#include <cstdint>

namespace hda::rng {

//! 64-bit seed for the counter-based generator. The draw at
//! (seed, stream, index) is a pure function of its arguments, so samples are
//! reproducible for a given seed and may be generated in any order.
struct Seed {
  std::uint64_t value = 0;
};

namespace detail {

// murmur3 fmix64 finalizer; bijective on uint64.
inline std::uint64_t mix(std::uint64_t z) {
  z ^= z >> 33;
  z *= 0xff51afd7ed558ccdull;
  z ^= z >> 33;
  z *= 0xc4ceb9fe1a85ec53ull;
  z ^= z >> 33;
  return z;
}

}  // namespace detail

//! Raw 64-bit draw for cell (seed, stream, index).
inline std::uint64_t bits(Seed seed, std::uint64_t stream, std::uint64_t index) {
  std::uint64_t h = detail::mix(seed.value ^ (0x9e3779b97f4a7c15ull * (stream + 1)));
  return detail::mix(h ^ (index * 0xbf58476d1ce4e5b9ull + 0x94d049bb133111ebull));
}

//! Uniform draw strictly inside (0, 1).
inline double uniform_open(Seed seed, std::uint64_t stream, std::uint64_t index) {
  return (static_cast<double>(bits(seed, stream, index) >> 12) + 0.5) * 0x1p-52;
}

//! Exponential with the given rate.
inline double exponential(Seed seed, std::uint64_t stream, std::uint64_t index,
                          double rate = 1.0) {
  return -std::log(uniform_open(seed, stream, index)) / rate;
}

//! Pareto with unit scale and unit tail index: P[W > x] = 1/x for x >= 1.
inline double pareto1(Seed seed, std::uint64_t stream, std::uint64_t index) {
  return 1.0 / uniform_open(seed, stream, index);
}

inline bool bernoulli_half(Seed seed, std::uint64_t stream, std::uint64_t index) {
  return (bits(seed, stream, index) & 1ull) != 0;
}

}  // namespace hda::rng
