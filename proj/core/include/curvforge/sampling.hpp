#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "curvforge/linalg.hpp"
#include "curvforge/scalar_product.hpp"

namespace curvforge {

/// Seeded source of small exact rationals.
///
/// Draws are mapped from raw 64-bit engine output by modular reduction rather
/// than std::uniform_int_distribution, whose algorithm is implementation
/// defined; the same seed gives the same samples on every platform.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  /// Numerator in [−9, 9], denominator in {1, 2, 3}.
  Rational rational();
  /// Like rational() but never zero.
  Rational nonzero_rational();
  Vector vector(std::size_t n);
  Vector nonnull_vector(const ScalarProduct& g);

 private:
  std::mt19937_64 engine_;
};

/// Deterministic stream of rational null vectors for an indefinite g.
///
/// Starting from a known null vector N₀, every draw intersects the line
/// N₀ + t·Y (Y random and nonnull) with the null cone. One root is t = 0, so
/// the other, t = −2g(N₀,Y)/ε_Y, is rational. N₀ stays fixed so coordinates
/// do not grow from draw to draw.
class NullSampler {
 public:
  /// Disabled (available() == false) when g has no rational null vector.
  NullSampler(const ScalarProduct& g, std::uint64_t seed);

  bool available() const { return current_.has_value(); }
  Vector next();

 private:
  ScalarProduct g_;
  SampleRng rng_;
  std::optional<Vector> current_;
};

}  // namespace curvforge
