#pragma once

// Lattice frames and the pairings that produce every Weyl phase.
//
// Momenta are stored in dual-basis coordinates a (ambient alpha = F a) and
// positions in primal-basis coordinates b (ambient beta = E b). Since
// F^T E = tau * I, the pairing alpha . beta is tau * (a . b) exactly.

#include <complex>
#include <memory>
#include <vector>

#include "weylccr/exact.hpp"

namespace weylccr {

/// Square matrix over Q(tau), row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(std::size_t n) : n_(n), data_(n * n) {}
  static ExactMatrix identity(std::size_t n);
  static ExactMatrix diagonal(const ExactVector& entries);

  std::size_t size() const { return n_; }
  ExactScalar& operator()(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }
  const ExactScalar& operator()(std::size_t row, std::size_t col) const { return data_[row * n_ + col]; }

  ExactMatrix transpose() const;
  /// Gauss-Jordan inverse over Q(tau). Throws SingularFrame.
  ExactMatrix inverse() const;

  friend ExactMatrix operator*(const ExactMatrix& lhs, const ExactMatrix& rhs);
  friend ExactVector operator*(const ExactMatrix& lhs, const ExactVector& rhs);
  friend ExactMatrix operator*(const ExactScalar& s, const ExactMatrix& m);
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<ExactScalar> data_;
};

/// F = tau * (E^{-1})^T, so that f^i . e^j = 2 pi delta_ij.
ExactMatrix dual_frame(const ExactMatrix& basis);

/// A lattice basis E (columns e^j) together with its dual basis and the
/// metric data derived from both.
class Frame {
 public:
  explicit Frame(ExactMatrix basis);

  static std::shared_ptr<const Frame> identity(std::size_t d);
  static std::shared_ptr<const Frame> make(ExactMatrix basis);

  std::size_t dimension() const { return basis_.size(); }
  const ExactMatrix& basis() const { return basis_; }
  const ExactMatrix& dual() const { return dual_; }

  /// |alpha|^2 for alpha = F a.
  ExactScalar momentum_norm2(const ExactVector& a) const;
  /// |beta|^2 for beta = E b.
  ExactScalar position_norm2(const ExactVector& b) const;
  /// E-coordinates of the ambient vector F a, i.e. E^{-1} F a.
  ExactVector momentum_as_position(const ExactVector& a) const;
  /// Ambient beta = E b.
  ExactVector ambient_position(const ExactVector& b) const { return basis_ * b; }
  /// F-coordinates of an ambient momentum p, i.e. F^{-1} p = E^T p / tau.
  ExactVector momentum_coordinates(const ExactVector& p) const;

  friend bool operator==(const Frame& lhs, const Frame& rhs) { return lhs.basis_ == rhs.basis_; }

 private:
  ExactMatrix basis_;
  ExactMatrix dual_;
  ExactMatrix position_gram_;     // E^T E
  ExactMatrix momentum_gram_;     // F^T F
  ExactMatrix momentum_to_pos_;   // E^{-1} F
};

using FramePtr = std::shared_ptr<const Frame>;

void require_same_frame(const FramePtr& lhs, const FramePtr& rhs);

/// Angle phi of the unit complex number e^{i phi}, kept exact.
class PhaseAngle {
 public:
  PhaseAngle() = default;
  explicit PhaseAngle(ExactScalar value);

  /// The angle tau * q, i.e. a rational number of full turns.
  static PhaseAngle turns(const Rational& q);

  const ExactScalar& value() const { return value_; }

  /// e^{i phi}. Quarter turns are produced exactly.
  std::complex<double> to_complex() const;

  /// True when both angles name the same unit complex number.
  bool same_unit(const PhaseAngle& other) const;
  bool is_trivial() const { return value_.is_zero(); }

  PhaseAngle operator-() const { return PhaseAngle(-value_); }
  friend PhaseAngle operator+(const PhaseAngle& lhs, const PhaseAngle& rhs) {
    return PhaseAngle(lhs.value_ + rhs.value_);
  }
  friend PhaseAngle operator-(const PhaseAngle& lhs, const PhaseAngle& rhs) {
    return PhaseAngle(lhs.value_ - rhs.value_);
  }
  friend bool operator==(const PhaseAngle&, const PhaseAngle&) = default;

 private:
  ExactScalar value_;
};

/// z = (alpha, beta) in coordinates: alpha = F a, beta = E b.
struct PhasePoint {
  ExactVector a;
  ExactVector b;

  friend PhasePoint operator+(const PhasePoint& lhs, const PhasePoint& rhs) { return {lhs.a + rhs.a, lhs.b + rhs.b}; }
  friend PhasePoint operator-(const PhasePoint& z) { return {-z.a, -z.b}; }
  friend bool operator==(const PhasePoint&, const PhasePoint&) = default;
};

/// coordinates = fractional + integral, fractional in [0,1)^d.
struct CellDecomposition {
  std::vector<Rational> fractional;
  std::vector<Integer> integral;
};

/// alpha . beta = tau (a . b).
PhaseAngle pairing(const ExactVector& a, const ExactVector& b);

/// sigma(z, z') = (alpha . beta' - alpha' . beta) / 2.
PhaseAngle symplectic(const PhasePoint& z, const PhasePoint& zp);

/// Semi-closed unit cell decomposition. Requires tau-free coordinates.
CellDecomposition decompose_position(const ExactVector& b);
/// Same decomposition with respect to the dual lattice; the fractional part
/// is the quasi-momentum representative.
CellDecomposition decompose_momentum(const ExactVector& a);

/// Characteristic function of the dual lattice in F-coordinates (and of the
/// lattice in E-coordinates): every coordinate is a constant integer.
bool in_dual_lattice(const ExactVector& a);
inline bool in_lattice(const ExactVector& b) { return in_dual_lattice(b); }

/// Quasi-momenta fixed by kappa -> -kappa: the 2^d points of {0, 1/2}^d.
std::vector<std::vector<Rational>> enumerate_trs_fixed_points(std::size_t d);

/// Integer coordinates of a lattice vector. Throws NotDecomposable otherwise.
std::vector<long> integer_coordinates(const ExactVector& v);

}  // namespace weylccr
