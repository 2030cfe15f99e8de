/*
 * Deterministic rational sample points.
 *
 * A small splitmix64-based generator drives rejection sampling over the
 * lattice { p/q : p in [-50,50]\{0}, q in [1,50] }.  All randomness in the
 * test suites and the CLI flows through an explicit seed, so reports are
 * reproducible byte for byte.
 */
#pragma once

#include <cstdint>
#include <functional>

#include "ybe/rational.hpp"

namespace ybe {

struct SampleRng {
  explicit SampleRng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  std::uint64_t state;
};

// Draws until `admissible` accepts (used to dodge singular loci such as
// lambda^n = 1 or coincident evaluation points); throws ExhaustionError
// after a bounded number of rejections.
Rational sample_rational(SampleRng& rng,
                         const std::function<bool(const Rational&)>& admissible);

inline Rational sample_rational(SampleRng& rng) {
  return sample_rational(rng, [](const Rational&) { return true; });
}

}  // namespace ybe
