#pragma once

// Finite truncations of the GNS operators for lattice-invariant states.
// The Fourier basis of L^2(T_Gamma) diagonalizes S_beta, so only the index
// shifts F_gamma' feel the window boundary.

#include <Eigen/Dense>

#include <vector>

#include "weylccr/states.hpp"

namespace weylccr {

/// Integer box prod_i [lo_i, hi_i] with lexicographic enumeration.
class FourierWindow {
 public:
  FourierWindow(FourierIndex lo, FourierIndex hi);
  /// The cube [-radius, radius]^d.
  static FourierWindow cube(std::size_t d, long radius);

  std::size_t dimension() const { return lo_.size(); }
  const FourierIndex& lo() const { return lo_; }
  const FourierIndex& hi() const { return hi_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<FourierIndex>& points() const { return points_; }
  bool contains(const FourierIndex& g) const;
  /// Position of g in the enumeration; g must be contained.
  std::size_t index_of(const FourierIndex& g) const;

 private:
  FourierIndex lo_;
  FourierIndex hi_;
  std::vector<FourierIndex> points_;
};

struct TruncatedOperator {
  FourierWindow window;
  Eigen::MatrixXcd matrix;
};

/// Diagonal e^{-i g'.beta} on the window (beta = E b).
TruncatedOperator op_S(const ExactVector& b, const FourierWindow& w);
/// Shift e_g' -> e_{g' + shift}, zero where the target leaves the window.
TruncatedOperator op_F(const FourierIndex& shift, const FourierWindow& w);
/// rho_kappa(u_a v_b) = e^{-i kappa.beta} F_a S_b for integral a.
TruncatedOperator rep_rho_kappa(const std::vector<Rational>& kappa, const Monomial& m, const FourierWindow& w);

/// <f, rho_kappa(m) f> built from matrices. Non-integral momenta land in a
/// different fiber of the big representation and give 0.
Complex bloch_vector_state(const std::vector<Rational>& kappa, const FourierData& fhat, const Monomial& m,
                           const FourierWindow& w);

/// <delta_p, pi(m) delta_p> with pi(u_alpha) delta_q = delta_{q+alpha} and
/// pi(v_beta) delta_q = e^{-i q.beta} delta_q on a finite momentum set given
/// in F-coordinates. p is an ambient momentum.
Complex plane_wave_vector_state(const Frame& frame, const ExactVector& p, const Monomial& m,
                                const std::vector<ExactVector>& momentum_set);

struct WeylResidual {
  double interior = 0.0;     ///< restricted to vectors supported in w minus shift
  double full_window = 0.0;  ///< reported only; boundary truncation artifact
};

/// Max-norm residual of F_g' S_b - e^{i g'.beta} S_b F_g'.
WeylResidual weyl_relation_residual(const FourierIndex& shift, const ExactVector& b, const FourierWindow& w);

}  // namespace weylccr
