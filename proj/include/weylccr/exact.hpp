#pragma once

// Exact scalars: rational functions in one transcendental symbol tau, where
// tau stands for 2*pi. Because pi is transcendental, equality in Q(tau) is
// decidable and every Weyl phase can be carried without rounding.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace weylccr {

using Rational = mpq_class;
using Integer = mpz_class;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// floor(q) as an integer.
Integer floor_of(const Rational& q);

/// Dense univariate polynomial over Q, coefficients stored low degree first.
/// The coefficient vector never has trailing zeros; the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Rational constant);
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial monomial(const Rational& coefficient, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t k) const;
  const Rational& leading() const { return coeffs_.back(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

  double evaluate(double x) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial lhs, const Rational& s) { return lhs *= s; }

  /// Euclidean division; divisor must be nonzero.
  static void divmod(const Polynomial& dividend, const Polynomial& divisor, Polynomial& quotient,
                     Polynomial& remainder);
  /// Monic greatest common divisor (zero if both inputs are zero).
  static Polynomial gcd(Polynomial a, Polynomial b);

  Polynomial monic() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend std::strong_ordering operator<=>(const Polynomial& lhs, const Polynomial& rhs);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Element of Q(tau) in canonical form: gcd(num, den) = 1 and den monic.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(const Rational& q);  // NOLINT(google-explicit-constructor)
  ExactScalar(long n) : ExactScalar(Rational(n)) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(int n) : ExactScalar(Rational(n)) {}   // NOLINT(google-explicit-constructor)
  ExactScalar(Polynomial numerator, Polynomial denominator);

  static ExactScalar tau() { return ExactScalar(Polynomial::monomial(Rational(1), 1), Polynomial(Rational(1))); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// True when the value is a tau-free rational.
  bool is_rational() const { return den_.is_one() && num_.is_constant(); }
  /// Requires is_rational().
  Rational as_rational() const;
  bool is_integer() const;

  /// Numerical value with tau := 2*pi.
  double evaluate() const;

  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& rhs);
  ExactScalar& operator-=(const ExactScalar& rhs);
  ExactScalar& operator*=(const ExactScalar& rhs);
  ExactScalar& operator/=(const ExactScalar& rhs);
  friend ExactScalar operator+(ExactScalar lhs, const ExactScalar& rhs) { return lhs += rhs; }
  friend ExactScalar operator-(ExactScalar lhs, const ExactScalar& rhs) { return lhs -= rhs; }
  friend ExactScalar operator*(ExactScalar lhs, const ExactScalar& rhs) { return lhs *= rhs; }
  friend ExactScalar operator/(ExactScalar lhs, const ExactScalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const ExactScalar&, const ExactScalar&) = default;
  /// Structural order on canonical forms; not the numerical order.
  friend std::strong_ordering operator<=>(const ExactScalar& lhs, const ExactScalar& rhs);

  std::string to_string() const;

 private:
  void canonicalize();
  Polynomial num_;
  Polynomial den_{Rational(1)};
};

using ExactVector = std::vector<ExactScalar>;

ExactVector make_vector(const std::vector<Rational>& values);
ExactScalar dot(const ExactVector& lhs, const ExactVector& rhs);
ExactVector operator+(const ExactVector& lhs, const ExactVector& rhs);
ExactVector operator-(const ExactVector& lhs, const ExactVector& rhs);
ExactVector operator-(const ExactVector& v);
ExactVector operator*(const ExactScalar& s, const ExactVector& v);
bool is_zero(const ExactVector& v);
std::string to_string(const ExactVector& v);

}  // namespace weylccr
