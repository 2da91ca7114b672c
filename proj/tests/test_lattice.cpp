#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <set>

#include "weylccr/error.hpp"
#include "weylccr/lattice.hpp"

using namespace weylccr;

namespace {

std::mt19937_64 rng(7);

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

ExactMatrix random_matrix(std::size_t n) {
  ExactMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = ExactScalar(rational());
  return m;
}

// Cofactor expansion over Q(tau); independent of the Gauss-Jordan inverse.
ExactScalar det(const ExactMatrix& m) {
  const std::size_t n = m.size();
  if (n == 1) return m(0, 0);
  ExactScalar acc;
  for (std::size_t j = 0; j < n; ++j) {
    ExactMatrix minor(n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const ExactScalar term = m(0, j) * det(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

ExactMatrix adjugate_inverse(const ExactMatrix& m) {
  const std::size_t n = m.size();
  const ExactScalar d = det(m);
  ExactMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (n == 1) {
        out(0, 0) = ExactScalar(1) / d;
        continue;
      }
      ExactMatrix minor(n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c)
          if (c != i) minor(rr, cc++) = m(r, c);
        ++rr;
      }
      const ExactScalar cof = ((i + j) % 2 == 0 ? ExactScalar(1) : ExactScalar(-1)) * det(minor);
      out(i, j) = cof / d;
    }
  return out;
}

}  // namespace

TEST_CASE("Gauss-Jordan inverse matches the adjugate formula") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int k = 0; k < 30; ++k) {
      ExactMatrix m = random_matrix(n);
      if (k % 3 == 0) m(0, 0) = m(0, 0) * ExactScalar::tau();
      if (det(m).is_zero()) continue;
      CAPTURE(n);
      CHECK(m.inverse() == adjugate_inverse(m));
      CHECK(m * m.inverse() == ExactMatrix::identity(n));
    }
  }
}

TEST_CASE("singular bases are rejected") {
  ExactMatrix m(2);
  m(0, 0) = ExactScalar(1);
  m(0, 1) = ExactScalar(2);
  m(1, 0) = ExactScalar(2);
  m(1, 1) = ExactScalar(4);
  CHECK_THROWS_AS(m.inverse(), Error);
  try {
    Frame::make(m);
    FAIL("expected SingularFrame");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularFrame);
  }
}

TEST_CASE("dual frame satisfies f^i . e^j = tau delta_ij") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int k = 0; k < 10; ++k) {
      ExactMatrix e = random_matrix(n);
      if (det(e).is_zero()) continue;
      const ExactMatrix f = dual_frame(e);
      CHECK(f.transpose() * e == ExactScalar::tau() * ExactMatrix::identity(n));
    }
  }
  // E = diag(tau) gives F = [1]: integer momenta have ambient value 1.
  const auto frame = Frame::make(ExactMatrix::diagonal({ExactScalar::tau()}));
  CHECK(frame->dual()(0, 0) == ExactScalar(1));
  CHECK(frame->momentum_norm2({ExactScalar(1)}) == ExactScalar(1));
}

TEST_CASE("frame metric data agrees with the ambient vectors") {
  ExactMatrix e(2);
  e(0, 0) = ExactScalar(1);
  e(0, 1) = ExactScalar(Rational(1, 2));
  e(1, 0) = ExactScalar(0);
  e(1, 1) = ExactScalar(2);
  const Frame frame(e);
  for (int k = 0; k < 50; ++k) {
    const ExactVector a{ExactScalar(rational()), ExactScalar(rational())};
    const ExactVector b{ExactScalar(rational()), ExactScalar(rational())};
    const ExactVector alpha = frame.dual() * a;
    const ExactVector beta = frame.basis() * b;
    CHECK(frame.momentum_norm2(a) == dot(alpha, alpha));
    CHECK(frame.position_norm2(b) == dot(beta, beta));
    CHECK(dot(alpha, beta) == ExactScalar::tau() * dot(a, b));
    CHECK(frame.basis() * frame.momentum_as_position(a) == alpha);
    CHECK(frame.momentum_coordinates(alpha) == a);
  }
}

TEST_CASE("phase angles canonicalize whole turns") {
  const ExactScalar tau = ExactScalar::tau();
  CHECK(PhaseAngle(tau * ExactScalar(Rational(5, 4))) == PhaseAngle(tau * ExactScalar(Rational(1, 4))));
  CHECK(PhaseAngle(tau * ExactScalar(-1)).is_trivial());
  CHECK(PhaseAngle::turns(Rational(7, 3)).same_unit(PhaseAngle::turns(Rational(1, 3))));
  CHECK_FALSE(PhaseAngle::turns(Rational(1, 3)).same_unit(PhaseAngle::turns(Rational(2, 3))));
  // A tau-free angle is not a whole-turn multiple of anything but itself.
  CHECK_FALSE(PhaseAngle(ExactScalar(1)).same_unit(PhaseAngle(ExactScalar(1) + tau * ExactScalar(Rational(1, 2)))));
  CHECK(PhaseAngle(ExactScalar(1)).same_unit(PhaseAngle(ExactScalar(1) + tau * ExactScalar(3))));
}

TEST_CASE("phase angles convert to unit complex numbers") {
  CHECK(PhaseAngle::turns(Rational(1, 4)).to_complex() == std::complex<double>(0.0, 1.0));
  CHECK(PhaseAngle::turns(Rational(1, 2)).to_complex() == std::complex<double>(-1.0, 0.0));
  CHECK(PhaseAngle::turns(Rational(3, 4)).to_complex() == std::complex<double>(0.0, -1.0));
  for (int k = 0; k < 100; ++k) {
    const Rational q = rational();
    const auto z = PhaseAngle::turns(q).to_complex();
    CHECK(std::abs(z - std::polar(1.0, 2.0 * M_PI * q.get_d())) < 1e-13);
  }
  const auto z = PhaseAngle(ExactScalar(Rational(3, 7))).to_complex();
  CHECK(std::abs(z - std::polar(1.0, 3.0 / 7.0)) < 1e-15);
}

TEST_CASE("symplectic form is antisymmetric and bilinear") {
  for (int k = 0; k < 100; ++k) {
    auto vec = [] { return ExactVector{ExactScalar(rational()), ExactScalar(rational())}; };
    const PhasePoint z{vec(), vec()}, w{vec(), vec()}, y{vec(), vec()};
    CHECK((symplectic(z, w) + symplectic(w, z)).is_trivial());
    CHECK(symplectic(z, z).is_trivial());
    CHECK(symplectic(z + y, w).same_unit(symplectic(z, w) + symplectic(y, w)));
    // sigma = (tau/2)(a.b' - a'.b)
    const ExactScalar direct = ExactScalar(Rational(1, 2)) * ExactScalar::tau() * (dot(z.a, w.b) - dot(w.a, z.b));
    CHECK(symplectic(z, w) == PhaseAngle(direct));
  }
  CHECK_THROWS_AS(symplectic(PhasePoint{{ExactScalar(1)}, {ExactScalar(1)}},
                             PhasePoint{{ExactScalar(1), ExactScalar(0)}, {ExactScalar(1), ExactScalar(0)}}),
                  Error);
}

TEST_CASE("cell decomposition matches brute-force floors") {
  for (int k = 0; k < 300; ++k) {
    const ExactVector b{ExactScalar(rational()), ExactScalar(ratio(between(-40, 40), between(1, 5)))};
    const CellDecomposition cell = decompose_position(b);
    for (std::size_t i = 0; i < b.size(); ++i) {
      const Rational x = b[i].as_rational();
      long n = -100;
      while (Rational(n + 1) <= x) ++n;
      CHECK(cell.integral[i] == n);
      CHECK(cell.fractional[i] == x - n);
      CHECK(cell.fractional[i] >= 0);
      CHECK(cell.fractional[i] < 1);
    }
  }
  const CellDecomposition neg = decompose_momentum({ExactScalar(Rational(-1, 3))});
  CHECK(neg.integral[0] == -1);
  CHECK(neg.fractional[0] == Rational(2, 3));
  CHECK_THROWS_AS(decompose_position({ExactScalar::tau()}), Error);
}

TEST_CASE("lattice membership and integer coordinates") {
  CHECK(in_dual_lattice({ExactScalar(2), ExactScalar(-3)}));
  CHECK_FALSE(in_dual_lattice({ExactScalar(2), ExactScalar(Rational(1, 2))}));
  CHECK_FALSE(in_lattice({ExactScalar::tau()}));
  CHECK(integer_coordinates({ExactScalar(4), ExactScalar(-1)}) == std::vector<long>{4, -1});
  CHECK_THROWS_AS(integer_coordinates({ExactScalar(Rational(1, 2))}), Error);
}

TEST_CASE("time-reversal fixed points are exactly {0, 1/2}^d") {
  for (std::size_t d = 1; d <= 4; ++d) {
    const auto points = enumerate_trs_fixed_points(d);
    CHECK(points.size() == (std::size_t{1} << d));
    // Brute force over a fine grid of the cell: kappa = -kappa mod 1.
    std::set<std::vector<Rational>> expected;
    const long den = 12;
    std::vector<long> idx(d, 0);
    while (true) {
      bool fixed = true;
      std::vector<Rational> kappa;
      for (long i : idx) {
        const Rational q = ratio(i, den);
        const Rational neg = Rational(-q) - floor_of(Rational(-q));
        fixed = fixed && neg == q;
        kappa.push_back(q);
      }
      if (fixed) expected.insert(kappa);
      std::size_t j = 0;
      while (j < d && ++idx[j] == den) idx[j++] = 0;
      if (j == d) break;
    }
    CHECK(std::set<std::vector<Rational>>(points.begin(), points.end()) == expected);
  }
}
