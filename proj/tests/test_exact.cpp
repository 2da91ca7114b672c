#include "doctest.h"

#include <random>

#include "weylccr/error.hpp"
#include "weylccr/exact.hpp"

using namespace weylccr;

namespace {

// Horner evaluation over Q, independent of Polynomial::evaluate.
Rational at(const Polynomial& p, const Rational& t) {
  Rational acc = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Rational at(const ExactScalar& x, const Rational& t) { return at(x.numerator(), t) / at(x.denominator(), t); }

struct Gen {
  std::mt19937_64 rng{42};
  long between(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
  Rational rational() {
    Rational q(between(-9, 9), between(1, 9));
    q.canonicalize();
    return q;
  }
  Polynomial poly(int max_degree) {
    std::vector<Rational> c(static_cast<std::size_t>(between(0, max_degree) + 1));
    for (auto& x : c) {
      x = rational();
      x.canonicalize();
    }
    return Polynomial(c);
  }
  ExactScalar scalar() {
    Polynomial den = poly(2);
    if (den.is_zero()) den = Polynomial(Rational(1));
    return ExactScalar(poly(3), den);
  }
};

// Points where none of the generated denominators vanish, with overwhelming probability.
const std::vector<Rational> kSamplePoints = {Rational(7, 3), Rational(-11, 5), Rational(13, 2), Rational(101, 17)};

}  // namespace

TEST_CASE("parse_rational accepts canonical and signed forms") {
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational(" -6/4 ") == Rational(-3, 2));
  CHECK(parse_rational("+5") == Rational(5));
  CHECK(parse_rational("0/7") == Rational(0));
  CHECK(to_string(parse_rational("4/8")) == "1/2");
  CHECK(to_string(Rational(-3)) == "-3");
}

TEST_CASE("parse_rational rejects malformed input") {
  for (const char* bad : {"", "1/", "/2", "1/0", "a", "1.5", "1//2", "--1", "1/2/3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), Error);
  }
}

TEST_CASE("floor_of matches a brute-force search") {
  Gen g;
  for (int k = 0; k < 500; ++k) {
    Rational q(g.between(-200, 200), g.between(1, 13));
    q.canonicalize();
    long f = -300;
    while (Rational(f + 1) <= q) ++f;
    CHECK(floor_of(q) == f);
  }
}

TEST_CASE("polynomial arithmetic agrees with pointwise evaluation") {
  Gen g;
  for (int k = 0; k < 200; ++k) {
    const Polynomial p = g.poly(4), q = g.poly(4);
    for (const auto& t : kSamplePoints) {
      CHECK(at(p + q, t) == at(p, t) + at(q, t));
      CHECK(at(p - q, t) == at(p, t) - at(q, t));
      CHECK(at(p * q, t) == at(p, t) * at(q, t));
    }
    if (!q.is_zero()) {
      Polynomial quot, rem;
      Polynomial::divmod(p, q, quot, rem);
      CHECK(quot * q + rem == p);
      CHECK(rem.degree() < q.degree());
    }
  }
}

TEST_CASE("polynomials are stored trimmed") {
  CHECK(Polynomial({Rational(1), Rational(0), Rational(0)}).degree() == 0);
  CHECK(Polynomial({Rational(0)}).is_zero());
  CHECK(Polynomial().degree() == -1);
  CHECK((Polynomial::monomial(Rational(2), 3) - Polynomial::monomial(Rational(2), 3)).is_zero());
}

TEST_CASE("polynomial gcd recovers a planted common factor") {
  Gen g;
  // Coprime cofactors: distinct linear factors t - r.
  for (int k = 0; k < 100; ++k) {
    const Polynomial common = g.poly(3);
    if (common.is_zero()) continue;
    const Rational r1 = g.rational();
    Rational r2 = g.rational();
    if (r2 == r1) r2 += 1;
    const Polynomial f1({-r1, Rational(1)}), f2({-r2, Rational(1)});
    const Polynomial gcd = Polynomial::gcd(common * f1, common * f2);
    CHECK(gcd == common.monic());
    CHECK(gcd.leading() == 1);
  }
  CHECK(Polynomial::gcd(Polynomial(), Polynomial()).is_zero());
}

TEST_CASE("exact scalars form a field homomorphic to evaluation") {
  Gen g;
  for (int k = 0; k < 200; ++k) {
    const ExactScalar x = g.scalar(), y = g.scalar();
    for (const auto& t : kSamplePoints) {
      CHECK(at(x + y, t) == at(x, t) + at(y, t));
      CHECK(at(x - y, t) == at(x, t) - at(y, t));
      CHECK(at(x * y, t) == at(x, t) * at(y, t));
      if (!y.is_zero()) CHECK(at(x / y, t) == at(x, t) / at(y, t));
    }
  }
}

TEST_CASE("exact scalars are canonical") {
  Gen g;
  for (int k = 0; k < 200; ++k) {
    const ExactScalar x = g.scalar(), y = g.scalar(), z = g.scalar();
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x - x == ExactScalar());
    if (!x.is_zero()) CHECK(x / x == ExactScalar(1));
    CHECK(Polynomial::gcd(x.numerator(), x.denominator()).degree() <= 0);
    CHECK(x.denominator().leading() == 1);
  }
  const ExactScalar tau = ExactScalar::tau();
  CHECK((tau * tau) / tau == tau);
  CHECK((tau + ExactScalar(1)) * (tau - ExactScalar(1)) == tau * tau - ExactScalar(1));
  CHECK_THROWS_AS(ExactScalar(1) / ExactScalar(0), Error);
}

TEST_CASE("rational and integer predicates") {
  const ExactScalar tau = ExactScalar::tau();
  CHECK(ExactScalar(Rational(3, 4)).is_rational());
  CHECK_FALSE(tau.is_rational());
  CHECK((tau / tau).is_rational());
  CHECK(ExactScalar(Rational(6, 3)).is_integer());
  CHECK_FALSE(ExactScalar(Rational(1, 2)).is_integer());
  CHECK(ExactScalar(Rational(5, 7)).as_rational() == Rational(5, 7));
  CHECK_THROWS_AS(tau.as_rational(), Error);
}

TEST_CASE("evaluate substitutes two pi") {
  const ExactScalar tau = ExactScalar::tau();
  CHECK(tau.evaluate() == doctest::Approx(2.0 * 3.141592653589793).epsilon(1e-15));
  CHECK((ExactScalar(1) / tau).evaluate() == doctest::Approx(1.0 / (2.0 * 3.141592653589793)).epsilon(1e-15));
  CHECK((tau * tau * ExactScalar(Rational(1, 4))).evaluate() == doctest::Approx(3.141592653589793 * 3.141592653589793));
}

TEST_CASE("scalar formatting") {
  const ExactScalar tau = ExactScalar::tau();
  CHECK(ExactScalar(Rational(-2, 3)).to_string() == "-2/3");
  CHECK(ExactScalar().to_string() == "0");
  CHECK((ExactScalar(Rational(1, 2)) * tau * tau - ExactScalar(3)).to_string() == "1/2*tau^2 - 3");
  CHECK((ExactScalar(1) / tau).to_string() == "1/tau");
}

TEST_CASE("vector helpers") {
  const ExactVector a = make_vector({Rational(1, 2), Rational(-1)});
  const ExactVector b = make_vector({Rational(4), Rational(1, 3)});
  CHECK(dot(a, b) == ExactScalar(Rational(5, 3)));
  CHECK(a + b == make_vector({Rational(9, 2), Rational(-2, 3)}));
  CHECK(is_zero(a - a));
  CHECK(to_string(a) == "(1/2, -1)");
  CHECK_THROWS_AS(dot(a, make_vector({Rational(1)})), Error);
}
