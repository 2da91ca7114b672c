#include "weylccr/random.hpp"

#include <algorithm>
#include <cmath>

namespace weylccr {

std::uint64_t RandomSource::below(std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % n;
}

double RandomSource::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

Rational RandomSource::rational() {
  Rational q(between(-max_num_, max_num_), between(1, max_den_));
  q.canonicalize();
  return q;
}

Rational RandomSource::cell_rational() {
  const long den = between(1, max_den_);
  Rational q(between(0, den - 1), den);
  q.canonicalize();
  return q;
}

Rational RandomSource::fractional_rational() {
  const long den = between(2, std::max(2L, max_den_));
  Rational q(between(1, den - 1), den);
  q.canonicalize();
  return q;
}

std::vector<Rational> RandomSource::rationals(std::size_t d) {
  std::vector<Rational> out;
  out.reserve(d);
  for (std::size_t i = 0; i < d; ++i) out.push_back(rational());
  return out;
}

std::vector<Rational> RandomSource::cell_point(std::size_t d) {
  std::vector<Rational> out;
  out.reserve(d);
  for (std::size_t i = 0; i < d; ++i) out.push_back(cell_rational());
  return out;
}

ExactVector RandomSource::integer_vector(std::size_t d, long radius) {
  ExactVector out;
  out.reserve(d);
  for (std::size_t i = 0; i < d; ++i) out.emplace_back(between(-radius, radius));
  return out;
}

Monomial RandomSource::lattice_momentum_monomial(std::size_t d, long radius) {
  return {integer_vector(d, radius), exact_vector(d)};
}

Element RandomSource::element(const FramePtr& frame, std::size_t max_terms) {
  Element out(frame);
  const auto terms = static_cast<std::size_t>(between(1, static_cast<long>(max_terms)));
  for (std::size_t k = 0; k < terms; ++k) out.add_term(monomial(frame->dimension()), coefficient());
  return out;
}

std::vector<Monomial> RandomSource::distinct_monomials(std::size_t d, std::size_t count) {
  std::vector<Monomial> out;
  while (out.size() < count) {
    Monomial m = monomial(d);
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
  }
  return out;
}

FourierData RandomSource::fourier_data(std::size_t d, long radius) {
  FourierData f;
  const std::size_t side = static_cast<std::size_t>(2 * radius + 1);
  std::size_t points = 1;
  for (std::size_t i = 0; i < d; ++i) points *= side;
  const auto count = static_cast<std::size_t>(between(1, static_cast<long>(std::min<std::size_t>(points, 6))));
  while (f.size() < count) {
    FourierIndex g(d);
    for (auto& x : g) x = between(-radius, radius);
    f[g] = coefficient();
  }
  const double norm = std::sqrt(fourier_norm2(f));
  for (auto& [g, c] : f) c /= norm;
  return f;
}

StateModel RandomSource::bloch_state(std::size_t d, long radius) {
  std::vector<Rational> kappa = cell_point(d);
  return StateModel::bloch(std::move(kappa), fourier_data(d, radius));
}

StateModel RandomSource::zak_state(std::size_t d) {
  std::vector<Rational> kappa = cell_point(d);
  return StateModel::zak(std::move(kappa), cell_point(d));
}

StateModel RandomSource::plane_wave(const Frame& frame) {
  // Ambient momentum F c for rational c, so that p.beta stays a rational multiple of tau.
  return StateModel::plane_wave(frame.dual() * exact_vector(frame.dimension()));
}

}  // namespace weylccr
