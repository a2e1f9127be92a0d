#ifndef PEDIGREE_RNG_HPP
#define PEDIGREE_RNG_HPP

#include <cstdint>
#include <random>

namespace pedigree {

/// Engine used everywhere. mt19937_64 output is fixed by the standard, and
/// all bounded draws go through uniform_below(), so streams are portable.
using Rng = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for task `index` of a run seeded with `base`.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(splitmix64(base) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

inline Rng make_rng(std::uint64_t base, std::uint64_t index) { return Rng(derive_seed(base, index)); }

}  // namespace pedigree

#endif  // PEDIGREE_RNG_HPP
