#include "doctest.h"

#include <cmath>
#include <random>

#include "weylccr/error.hpp"
#include "weylccr/gns.hpp"

using namespace weylccr;

namespace {

std::mt19937_64 rng(5);

long between(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}
Rational rational() {
  Rational q(between(-12, 12), between(1, 12));
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("Fourier windows enumerate lexicographically") {
  const FourierWindow w({-1, 0}, {1, 1});
  REQUIRE(w.size() == 6);
  CHECK(w.points()[0] == FourierIndex{-1, 0});
  CHECK(w.points()[1] == FourierIndex{-1, 1});
  CHECK(w.points()[5] == FourierIndex{1, 1});
  for (std::size_t i = 0; i < w.size(); ++i) CHECK(w.index_of(w.points()[i]) == i);
  CHECK_FALSE(w.contains({2, 0}));
  CHECK_THROWS_AS(w.index_of({2, 0}), Error);
  CHECK(FourierWindow::cube(2, 6).size() == 169);
  CHECK_THROWS_AS(FourierWindow({1}, {0}), Error);
}

TEST_CASE("S and F on a three-point window") {
  const FourierWindow w = FourierWindow::cube(1, 1);
  const auto s = op_S({ExactScalar(Rational(1, 4))}, w).matrix;
  // diag(e^{-i 2 pi g / 4}) for g = -1, 0, 1
  CHECK(std::abs(s(0, 0) - Complex(0.0, 1.0)) < 1e-15);
  CHECK(s(1, 1) == Complex(1.0));
  CHECK(std::abs(s(2, 2) - Complex(0.0, -1.0)) < 1e-15);
  CHECK(s(0, 1) == Complex(0.0));
  const auto f = op_F({1}, w).matrix;
  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(3, 3);
  expected(1, 0) = 1.0;
  expected(2, 1) = 1.0;
  CHECK(f == expected);
}

TEST_CASE("rho_kappa on lattice positions is a scalar") {
  for (int k = 0; k < 20; ++k) {
    const std::vector<Rational> kappa = {ratio(between(0, 5), 6), ratio(between(0, 3), 4)};
    const FourierWindow w = FourierWindow::cube(2, 2);
    const ExactVector gamma{ExactScalar(between(-3, 3)), ExactScalar(between(-3, 3))};
    const auto op = rep_rho_kappa(kappa, Monomial::v(gamma), w).matrix;
    const double turns = kappa[0].get_d() * gamma[0].evaluate() + kappa[1].get_d() * gamma[1].evaluate();
    const Complex phase = std::polar(1.0, -2.0 * M_PI * turns);
    CHECK((op - phase * Eigen::MatrixXcd::Identity(w.size(), w.size())).cwiseAbs().maxCoeff() < 1e-13);
  }
  try {
    rep_rho_kappa({Rational(0)}, Monomial::u({ExactScalar(Rational(1, 2))}), FourierWindow::cube(1, 2));
    FAIL("expected OutOfSubalgebra");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OutOfSubalgebra);
  }
}

TEST_CASE("vector states reproduce the Bloch closed form") {
  for (std::size_t d = 1; d <= 2; ++d) {
    const FourierWindow w = FourierWindow::cube(d, 6);
    for (int k = 0; k < 20; ++k) {
      std::vector<Rational> kappa;
      for (std::size_t i = 0; i < d; ++i) kappa.push_back(ratio(between(0, 11), 12));
      FourierData f;
      for (int j = 0; j < 4; ++j) {
        FourierIndex g(d);
        for (auto& x : g) x = between(-2, 2);
        f[g] = Complex(std::cos(j + k), std::sin(2.0 * j - k));
      }
      const double n = std::sqrt(fourier_norm2(f));
      for (auto& [g, c] : f) c /= n;
      for (int j = 0; j < 20; ++j) {
        ExactVector a, b;
        for (std::size_t i = 0; i < d; ++i) {
          a.emplace_back(between(-3, 3));
          b.emplace_back(rational());
        }
        const Monomial m{a, b};
        CHECK(std::abs(bloch_vector_state(kappa, f, m, w) - bloch_closed_form(kappa, f, m)) < 1e-10);
      }
    }
  }
}

TEST_CASE("vector state refuses a window without margin") {
  const FourierData f = {{{2}, 1.0}};
  try {
    bloch_vector_state({Rational(0)}, f, Monomial::u({ExactScalar(1)}), FourierWindow::cube(1, 2));
    FAIL("expected WindowTooSmall");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WindowTooSmall);
  }
  CHECK(bloch_vector_state({Rational(0)}, f, Monomial::u({ExactScalar(Rational(1, 2))}), FourierWindow::cube(1, 2)) ==
        Complex(0.0));
}

TEST_CASE("plane-wave vector state on a finite momentum set") {
  const auto frame = Frame::identity(1);
  const ExactVector pc{ExactScalar(Rational(1, 3))};
  const ExactVector p = frame->dual() * pc;
  const Monomial v = Monomial::v({ExactScalar(Rational(3, 4))});
  const Complex expected = std::polar(1.0, -2.0 * M_PI * (1.0 / 3.0) * 0.75);
  CHECK(std::abs(plane_wave_vector_state(*frame, p, v, {pc}) - expected) < 1e-15);
  const Monomial u = Monomial::u({ExactScalar(Rational(1, 2))});
  CHECK(plane_wave_vector_state(*frame, p, u, {pc, pc + u.a}) == Complex(0.0));
  CHECK_THROWS_AS(plane_wave_vector_state(*frame, p, u, {pc}), Error);
}

TEST_CASE("truncated Weyl relation") {
  for (int k = 0; k < 20; ++k) {
    const FourierWindow w = FourierWindow::cube(2, 3);
    const FourierIndex shift{between(-2, 2), between(-2, 2)};
    const ExactVector b{ExactScalar(rational()), ExactScalar(rational())};
    const auto r = weyl_relation_residual(shift, b, w);
    CHECK(r.interior < 1e-13);
    CHECK(r.full_window < 1e-13);
  }
}
