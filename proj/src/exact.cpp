#include "weylccr/exact.hpp"

#include <cctype>
#include <utility>

#include "weylccr/error.hpp"

namespace weylccr {

namespace {

std::strong_ordering compare(const Rational& lhs, const Rational& rhs) {
  const int c = cmp(lhs, rhs);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t start = 0;
  while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start]))) ++start;
  std::size_t end = text.size();
  while (end > start && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  const std::string body = text.substr(start, end - start);
  if (body.empty()) raise(ErrorKind::InvalidArgument, "empty rational literal");
  const auto slash = body.find('/');
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const std::string num = body.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) raise(ErrorKind::InvalidArgument, "malformed rational '" + text + "'");
  Integer n(num[0] == '+' ? num.substr(1) : num);
  Integer d(den[0] == '+' ? den.substr(1) : den);
  if (d == 0) raise(ErrorKind::InvalidArgument, "zero denominator in '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer floor_of(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(Rational constant) {
  constant.canonicalize();
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial Polynomial::monomial(const Rational& coefficient, std::size_t degree) {
  std::vector<Rational> c(degree + 1, Rational(0));
  c[degree] = coefficient;
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

double Polynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

void Polynomial::divmod(const Polynomial& dividend, const Polynomial& divisor, Polynomial& quotient,
                        Polynomial& remainder) {
  if (divisor.is_zero()) raise(ErrorKind::InvalidArgument, "polynomial division by zero");
  remainder = dividend;
  quotient = Polynomial();
  if (dividend.degree() < divisor.degree()) return;
  std::vector<Rational> q(dividend.degree() - divisor.degree() + 1, Rational(0));
  const Rational& lead = divisor.leading();
  while (!remainder.is_zero() && remainder.degree() >= divisor.degree()) {
    const auto shift = static_cast<std::size_t>(remainder.degree() - divisor.degree());
    Rational factor = remainder.leading() / lead;
    q[shift] = factor;
    for (std::size_t k = 0; k < divisor.coeffs_.size(); ++k)
      remainder.coeffs_[k + shift] -= factor * divisor.coeffs_[k];
    // The leading term cancels exactly; drop it even if trim() would too.
    remainder.coeffs_.pop_back();
    remainder.trim();
  }
  quotient = Polynomial(std::move(q));
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Polynomial out = *this;
  const Rational inv = 1 / Rational(leading());
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

std::strong_ordering operator<=>(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.coeffs_.size() != rhs.coeffs_.size()) return lhs.coeffs_.size() <=> rhs.coeffs_.size();
  for (std::size_t k = lhs.coeffs_.size(); k-- > 0;) {
    const auto c = compare(lhs.coeffs_[k], rhs.coeffs_[k]);
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// ExactScalar

ExactScalar::ExactScalar(const Rational& q) : num_(q) {}

ExactScalar::ExactScalar(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) raise(ErrorKind::InvalidArgument, "ExactScalar with zero denominator");
  canonicalize();
}

void ExactScalar::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    const Polynomial g = Polynomial::gcd(num_, den_);
    if (!g.is_one()) {
      Polynomial q, r;
      Polynomial::divmod(num_, g, q, r);
      num_ = std::move(q);
      Polynomial::divmod(den_, g, q, r);
      den_ = std::move(q);
    }
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

Rational ExactScalar::as_rational() const {
  if (!is_rational()) raise(ErrorKind::NotDecomposable, "value " + to_string() + " depends on tau");
  return num_.coefficient(0);
}

bool ExactScalar::is_integer() const { return is_rational() && num_.coefficient(0).get_den() == 1; }

double ExactScalar::evaluate() const { return num_.evaluate(kTwoPi) / den_.evaluate(kTwoPi); }

ExactScalar ExactScalar::operator-() const {
  ExactScalar out = *this;
  out.num_ = -out.num_;
  return out;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
    if (!den_.is_one()) canonicalize();
    else if (num_.is_zero()) den_ = Polynomial(Rational(1));
    return *this;
  }
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ = den_ * rhs.den_;
  canonicalize();
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& rhs) { return *this += -rhs; }

ExactScalar& ExactScalar::operator*=(const ExactScalar& rhs) {
  num_ = num_ * rhs.num_;
  if (is_polynomial() && rhs.is_polynomial()) {
    if (num_.is_zero()) den_ = Polynomial(Rational(1));
    return *this;
  }
  den_ = den_ * rhs.den_;
  canonicalize();
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& rhs) {
  if (rhs.is_zero()) raise(ErrorKind::InvalidArgument, "division by zero in Q(tau)");
  num_ = num_ * rhs.den_;
  den_ = den_ * rhs.num_;
  canonicalize();
  return *this;
}

std::strong_ordering operator<=>(const ExactScalar& lhs, const ExactScalar& rhs) {
  if (auto c = lhs.num_ <=> rhs.num_; c != 0) return c;
  return lhs.den_ <=> rhs.den_;
}

namespace {

std::string poly_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.coefficients().size(); k-- > 0;) {
    const Rational& c = p.coefficients()[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    if (k == 0) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += "tau";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace

std::string ExactScalar::to_string() const {
  if (is_polynomial()) return poly_string(num_);
  auto wrap = [](const Polynomial& p) {
    const std::string s = poly_string(p);
    const bool simple = p.coefficients().size() <= 1 ||
                        (p.coefficients().size() == 2 && p.coefficients()[0] == 0);
    return simple && s.find(' ') == std::string::npos ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

// ---------------------------------------------------------------------------
// Vectors

ExactVector make_vector(const std::vector<Rational>& values) { return ExactVector(values.begin(), values.end()); }

ExactScalar dot(const ExactVector& lhs, const ExactVector& rhs) {
  if (lhs.size() != rhs.size()) raise(ErrorKind::DimensionMismatch, "dot product of vectors with different lengths");
  ExactScalar acc;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i].is_zero() || rhs[i].is_zero()) continue;
    acc += lhs[i] * rhs[i];
  }
  return acc;
}

ExactVector operator+(const ExactVector& lhs, const ExactVector& rhs) {
  if (lhs.size() != rhs.size()) raise(ErrorKind::DimensionMismatch, "vector sum with different lengths");
  ExactVector out(lhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) out[i] = lhs[i] + rhs[i];
  return out;
}

ExactVector operator-(const ExactVector& lhs, const ExactVector& rhs) {
  if (lhs.size() != rhs.size()) raise(ErrorKind::DimensionMismatch, "vector difference with different lengths");
  ExactVector out(lhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) out[i] = lhs[i] - rhs[i];
  return out;
}

ExactVector operator-(const ExactVector& v) {
  ExactVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

ExactVector operator*(const ExactScalar& s, const ExactVector& v) {
  ExactVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

bool is_zero(const ExactVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::string to_string(const ExactVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].to_string();
  }
  return out + ")";
}

}  // namespace weylccr
