/*
 * splitmix64 rejection sampler for rational evaluation points.
 */
#include "ybe/sample.hpp"

#include "ybe/errors.hpp"

namespace ybe {

std::uint64_t SampleRng::next() {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Rational sample_rational(
    SampleRng& rng, const std::function<bool(const Rational&)>& admissible) {
  constexpr int kMaxTries = 10000;
  for (int tries = 0; tries < kMaxTries; ++tries) {
    // Numerator in [-50,50] without 0, denominator in [1,50].
    long long p = static_cast<long long>(rng.next() % 100ULL) - 50;
    if (p >= 0) p += 1;
    long long q = static_cast<long long>(rng.next() % 50ULL) + 1;
    Rational v{BigInt(p), BigInt(q)};
    if (admissible(v)) return v;
  }
  throw ExhaustionError("sample_rational: no admissible point in 10000 draws");
}

}  // namespace ybe
