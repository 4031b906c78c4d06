#include "curvforge/sampling.hpp"

#include "curvforge/error.hpp"

namespace curvforge {

std::int64_t SampleRng::integer(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

Rational SampleRng::rational() { return make_rational(integer(-9, 9), integer(1, 3)); }

Rational SampleRng::nonzero_rational() {
  Rational r = rational();
  while (r == 0) r = rational();
  return r;
}

Vector SampleRng::vector(std::size_t n) {
  Vector v = Vector::zero(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = rational();
  return v;
}

Vector SampleRng::nonnull_vector(const ScalarProduct& g) {
  for (;;) {
    Vector v = vector(g.dim());
    if (g.classify(v) == VectorKind::nonnull) return v;
  }
}

NullSampler::NullSampler(const ScalarProduct& g, std::uint64_t seed)
    : g_(g), rng_(seed), current_(find_null_vector(g)) {}

Vector NullSampler::next() {
  if (!current_) throw PreconditionError("no rational null vectors available for this metric");
  for (;;) {
    const Vector y = rng_.nonnull_vector(g_);
    const Rational cross = g_.inner(*current_, y);
    if (cross == 0) continue;
    const Rational t = -2 * cross / g_.squared_norm(y);
    const Vector n = primitive(*current_ + t * y);
    return rng_.nonzero_rational() * n;
  }
}

}  // namespace curvforge
