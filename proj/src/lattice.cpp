#include "weylccr/lattice.hpp"

#include <cmath>
#include <utility>

#include "weylccr/error.hpp"

namespace weylccr {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ExactScalar(1);
  return m;
}

ExactMatrix ExactMatrix::diagonal(const ExactVector& entries) {
  ExactMatrix m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ExactMatrix ExactMatrix::inverse() const {
  ExactMatrix work = *this;
  ExactMatrix inv = identity(n_);
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && work(pivot, col).is_zero()) ++pivot;
    if (pivot == n_) raise(ErrorKind::SingularFrame, "frame basis is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n_; ++j) {
        std::swap(work(pivot, j), work(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const ExactScalar scale = ExactScalar(1) / work(col, col);
    for (std::size_t j = 0; j < n_; ++j) {
      work(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t row = 0; row < n_; ++row) {
      if (row == col || work(row, col).is_zero()) continue;
      const ExactScalar factor = work(row, col);
      for (std::size_t j = 0; j < n_; ++j) {
        work(row, j) -= factor * work(col, j);
        inv(row, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

ExactMatrix operator*(const ExactMatrix& lhs, const ExactMatrix& rhs) {
  if (lhs.n_ != rhs.n_) raise(ErrorKind::DimensionMismatch, "matrix product of different sizes");
  ExactMatrix out(lhs.n_);
  for (std::size_t i = 0; i < lhs.n_; ++i)
    for (std::size_t k = 0; k < lhs.n_; ++k) {
      if (lhs(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < lhs.n_; ++j)
        if (!rhs(k, j).is_zero()) out(i, j) += lhs(i, k) * rhs(k, j);
    }
  return out;
}

ExactVector operator*(const ExactMatrix& lhs, const ExactVector& rhs) {
  if (lhs.n_ != rhs.size()) raise(ErrorKind::DimensionMismatch, "matrix-vector product of different sizes");
  ExactVector out(lhs.n_);
  for (std::size_t i = 0; i < lhs.n_; ++i)
    for (std::size_t k = 0; k < lhs.n_; ++k)
      if (!lhs(i, k).is_zero() && !rhs[k].is_zero()) out[i] += lhs(i, k) * rhs[k];
  return out;
}

ExactMatrix operator*(const ExactScalar& s, const ExactMatrix& m) {
  ExactMatrix out = m;
  for (auto& x : out.data_) x *= s;
  return out;
}

ExactMatrix dual_frame(const ExactMatrix& basis) {
  if (basis.size() == 0) raise(ErrorKind::InvalidArgument, "frame dimension must be positive");
  return ExactScalar::tau() * basis.inverse().transpose();
}

// ---------------------------------------------------------------------------

Frame::Frame(ExactMatrix basis) : basis_(std::move(basis)) {
  dual_ = dual_frame(basis_);
  position_gram_ = basis_.transpose() * basis_;
  momentum_gram_ = dual_.transpose() * dual_;
  momentum_to_pos_ = basis_.inverse() * dual_;
}

std::shared_ptr<const Frame> Frame::identity(std::size_t d) {
  return std::make_shared<const Frame>(ExactMatrix::identity(d));
}

std::shared_ptr<const Frame> Frame::make(ExactMatrix basis) { return std::make_shared<const Frame>(std::move(basis)); }

ExactScalar Frame::momentum_norm2(const ExactVector& a) const { return dot(a, momentum_gram_ * a); }

ExactScalar Frame::position_norm2(const ExactVector& b) const { return dot(b, position_gram_ * b); }

ExactVector Frame::momentum_as_position(const ExactVector& a) const { return momentum_to_pos_ * a; }

ExactVector Frame::momentum_coordinates(const ExactVector& p) const {
  const ExactScalar inv_tau = ExactScalar(1) / ExactScalar::tau();
  return inv_tau * (basis_.transpose() * p);
}

void require_same_frame(const FramePtr& lhs, const FramePtr& rhs) {
  if (!lhs || !rhs) raise(ErrorKind::FrameMismatch, "missing frame");
  if (lhs == rhs) return;
  if (!(*lhs == *rhs)) raise(ErrorKind::FrameMismatch, "operands live in different frames");
}

// ---------------------------------------------------------------------------
// PhaseAngle

PhaseAngle::PhaseAngle(ExactScalar value) : value_(std::move(value)) {
  if (!value_.is_polynomial()) return;
  const Rational turns = value_.numerator().coefficient(1);
  if (turns == 0) return;
  const Rational reduced = turns - Rational(floor_of(turns));
  if (reduced == turns) return;
  value_ += ExactScalar(Rational(reduced - turns)) * ExactScalar::tau();
}

PhaseAngle PhaseAngle::turns(const Rational& q) { return PhaseAngle(ExactScalar(q) * ExactScalar::tau()); }

std::complex<double> PhaseAngle::to_complex() const {
  if (value_.is_zero()) return {1.0, 0.0};
  if (!value_.is_polynomial()) {
    const double phi = value_.evaluate();
    return {std::cos(phi), std::sin(phi)};
  }
  const auto& c = value_.numerator().coefficients();
  const Rational turn = value_.numerator().coefficient(1);
  bool pure_turn = true;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (k != 1 && c[k] != 0) pure_turn = false;
  if (pure_turn) {
    const Rational quarter = turn * 4;
    if (quarter.get_den() == 1) {
      switch (quarter.get_num().get_si()) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
      }
    }
    const double phi = kTwoPi * turn.get_d();
    return {std::cos(phi), std::sin(phi)};
  }
  double phi = kTwoPi * turn.get_d();
  double power = 1.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k != 1) phi += c[k].get_d() * power;
    power *= kTwoPi;
  }
  return {std::cos(phi), std::sin(phi)};
}

bool PhaseAngle::same_unit(const PhaseAngle& other) const {
  const ExactScalar ratio = (value_ - other.value_) / ExactScalar::tau();
  return ratio.is_integer();
}

// ---------------------------------------------------------------------------

PhaseAngle pairing(const ExactVector& a, const ExactVector& b) {
  if (a.size() != b.size()) raise(ErrorKind::DimensionMismatch, "pairing of vectors with different lengths");
  return PhaseAngle(ExactScalar::tau() * dot(a, b));
}

PhaseAngle symplectic(const PhasePoint& z, const PhasePoint& zp) {
  if (z.a.size() != zp.a.size() || z.b.size() != zp.b.size() || z.a.size() != z.b.size())
    raise(ErrorKind::FrameMismatch, "phase points of different dimension");
  const ExactScalar half_tau = ExactScalar(Rational(1, 2)) * ExactScalar::tau();
  return PhaseAngle(half_tau * (dot(z.a, zp.b) - dot(zp.a, z.b)));
}

namespace {

CellDecomposition decompose(const ExactVector& coords, const char* what) {
  CellDecomposition out;
  out.fractional.reserve(coords.size());
  out.integral.reserve(coords.size());
  for (const auto& x : coords) {
    if (!x.is_rational())
      raise(ErrorKind::NotDecomposable, std::string(what) + " coordinate " + x.to_string() + " depends on tau");
    const Rational q = x.as_rational();
    Integer n = floor_of(q);
    out.fractional.emplace_back(q - Rational(n));
    out.integral.push_back(std::move(n));
  }
  return out;
}

}  // namespace

CellDecomposition decompose_position(const ExactVector& b) { return decompose(b, "position"); }

CellDecomposition decompose_momentum(const ExactVector& a) { return decompose(a, "momentum"); }

bool in_dual_lattice(const ExactVector& a) {
  for (const auto& x : a)
    if (!x.is_integer()) return false;
  return true;
}

std::vector<std::vector<Rational>> enumerate_trs_fixed_points(std::size_t d) {
  std::vector<std::vector<Rational>> out;
  const std::size_t count = std::size_t{1} << d;
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<Rational> kappa(d, Rational(0));
    for (std::size_t i = 0; i < d; ++i)
      if (mask & (std::size_t{1} << i)) kappa[i] = Rational(1, 2);
    out.push_back(std::move(kappa));
  }
  return out;
}

std::vector<long> integer_coordinates(const ExactVector& v) {
  std::vector<long> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_integer()) raise(ErrorKind::NotDecomposable, "coordinate " + x.to_string() + " is not an integer");
    const Integer n = x.as_rational().get_num();
    if (!n.fits_slong_p()) raise(ErrorKind::InvalidArgument, "lattice coordinate out of range");
    out.push_back(n.get_si());
  }
  return out;
}

}  // namespace weylccr
