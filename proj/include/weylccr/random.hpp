#pragma once

// Seeded generators for the randomized verification batteries. Everything is
// drawn from a raw mt19937_64 stream so a seed replays identically across
// standard libraries.

#include <cstdint>
#include <random>

#include "weylccr/states.hpp"

namespace weylccr {

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed, long max_numerator = 12, long max_denominator = 12)
      : engine_(seed), max_num_(max_numerator), max_den_(max_denominator) {}

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);
  /// Uniform integer in [lo, hi].
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  /// Uniform double in [0, 1).
  double unit();
  double symmetric() { return 2.0 * unit() - 1.0; }
  bool coin() { return below(2) == 1; }

  /// p/q with |p| <= max numerator and 1 <= q <= max denominator.
  Rational rational();
  /// Rational in [0, 1) with denominator <= max denominator.
  Rational cell_rational();
  /// Non-integral rational in (0, 1).
  Rational fractional_rational();

  std::vector<Rational> rationals(std::size_t d);
  std::vector<Rational> cell_point(std::size_t d);
  ExactVector exact_vector(std::size_t d) { return make_vector(rationals(d)); }
  ExactVector integer_vector(std::size_t d, long radius);

  Monomial monomial(std::size_t d) { return {exact_vector(d), exact_vector(d)}; }
  /// Monomial with integral momentum in [-radius, radius]^d.
  Monomial lattice_momentum_monomial(std::size_t d, long radius);
  Complex coefficient() { return {symmetric(), symmetric()}; }
  Element element(const FramePtr& frame, std::size_t max_terms);
  std::vector<Monomial> distinct_monomials(std::size_t d, std::size_t count);

  /// Normalized Fourier data supported in [-radius, radius]^d.
  FourierData fourier_data(std::size_t d, long radius);
  StateModel bloch_state(std::size_t d, long radius);
  StateModel zak_state(std::size_t d);
  StateModel plane_wave(const Frame& frame);

 private:
  std::mt19937_64 engine_;
  long max_num_;
  long max_den_;
};

}  // namespace weylccr
