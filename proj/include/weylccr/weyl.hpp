#pragma once

// The finitely supported Weyl *-algebra W0. Every element is a finite sum of
// normal-ordered monomials u_alpha v_beta (all u's left of all v's). Phases
// produced by reordering are exact PhaseAngles and only become complex
// numbers when merged into a coefficient.

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <variant>

#include "weylccr/lattice.hpp"

namespace weylccr {

using Complex = std::complex<double>;

inline constexpr double kDefaultZeroThreshold = 1e-14;

/// u_alpha v_beta with alpha = F a and beta = E b.
struct Monomial {
  ExactVector a;
  ExactVector b;

  static Monomial unit(std::size_t d) { return {ExactVector(d), ExactVector(d)}; }
  static Monomial u(ExactVector a) { const auto d = a.size(); return {std::move(a), ExactVector(d)}; }
  static Monomial v(ExactVector b) { const auto d = b.size(); return {ExactVector(d), std::move(b)}; }

  std::size_t dimension() const { return a.size(); }
  bool is_unit() const { return is_zero(a) && is_zero(b); }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

std::string to_string(const Monomial& m);

/// u_{a1}v_{b1} u_{a2}v_{b2} = e^{-i alpha2.beta1} u_{a1+a2} v_{b1+b2}.
std::pair<PhaseAngle, Monomial> monomial_product(const Monomial& lhs, const Monomial& rhs);

/// (u_alpha v_beta)^* = e^{-i alpha.beta} u_{-alpha} v_{-beta}.
std::pair<PhaseAngle, Monomial> monomial_adjoint(const Monomial& m);

class Element {
 public:
  using TermMap = std::map<Monomial, Complex>;

  explicit Element(FramePtr frame, double zero_threshold = kDefaultZeroThreshold);

  static Element unit(FramePtr frame);
  static Element monomial(FramePtr frame, Monomial m, Complex coefficient = 1.0);
  static Element u(FramePtr frame, ExactVector a) { return monomial(std::move(frame), Monomial::u(std::move(a))); }
  static Element v(FramePtr frame, ExactVector b) { return monomial(std::move(frame), Monomial::v(std::move(b))); }

  const FramePtr& frame() const { return frame_; }
  std::size_t dimension() const { return frame_->dimension(); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  double zero_threshold() const { return threshold_; }

  /// Coefficient of m (zero when absent).
  Complex coefficient(const Monomial& m) const;

  /// Adds c * e^{i phase} * m, merging and dropping negligible results.
  void add_term(const Monomial& m, Complex c, const PhaseAngle& phase = {});

  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(Complex s);
  friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
  friend Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
  friend Element operator*(Element lhs, Complex s) { return lhs *= s; }
  friend Element operator*(Complex s, Element rhs) { return rhs *= s; }
  friend Element operator*(const Element& lhs, const Element& rhs);

  /// Max-norm distance between coefficient maps.
  double distance(const Element& other) const;

  std::string to_string() const;

 private:
  void check_dimension(const Monomial& m) const;

  FramePtr frame_;
  TermMap terms_;
  double threshold_;
};

Element multiply(const Element& x, const Element& y);
Element adjoint(const Element& x);

/// w_z = e^{-(i/2) alpha.beta} u_alpha v_beta.
Element weyl_generator(const FramePtr& frame, const PhasePoint& z);

// ---------------------------------------------------------------------------
// Automorphisms

/// tau_lambda(u_alpha v_beta) = e^{-i alpha.lambda} u_alpha v_beta, lambda = E l.
struct SpaceTranslation {
  ExactVector lambda;
};
/// theta_mu(u_alpha v_beta) = e^{i mu.beta} u_alpha v_beta, mu = F m.
struct MomentumTranslation {
  ExactVector mu;
};
/// Phi_t(u_alpha v_beta) = e^{i t |alpha|^2 / 2} u_alpha v_{beta - t alpha}.
struct FreeDynamics {
  Rational t;
};
/// Antilinear, multiplicative; u_alpha -> u_{-alpha}, v_beta -> v_beta.
struct TimeReversal {};
/// Space translation by a lattice vector composed with a momentum translation
/// by a dual lattice vector (the Zak symmetry group action).
struct ZakTranslation {
  ExactVector gamma;
  ExactVector gamma_prime;
};

using AutomorphismSpec = std::variant<SpaceTranslation, MomentumTranslation, FreeDynamics, TimeReversal, ZakTranslation>;

std::string describe(const AutomorphismSpec& spec);

struct TransformedMonomial {
  PhaseAngle phase;
  Monomial monomial;
  bool conjugate = false;
};

TransformedMonomial apply_automorphism(const AutomorphismSpec& spec, const Frame& frame, const Monomial& m);
Element apply_automorphism(const AutomorphismSpec& spec, const Element& x);

// ---------------------------------------------------------------------------
// Ergodic means and tracial coefficients

/// Projection onto V: keeps the terms with a = 0.
Element ergodic_mean(const Element& x);
/// Projection onto V_Gamma: keeps the terms with a in the dual lattice.
Element ergodic_mean_lattice(const Element& x);
/// Projection onto Z_Gamma: keeps the terms with a and b both integral.
Element ergodic_mean_zak(const Element& x);

/// Midpoint-rule average of tau_lambda(x) over the box [-L, L]^d in ambient
/// coordinates, with samples_per_dim midpoints per axis.
Element numeric_box_average(const Element& x, double half_width, std::size_t samples_per_dim);

/// g_x(m) = t(m^* x): the coefficient of m in x.
Complex trace_coefficient(const Element& x, const Monomial& m);

}  // namespace weylccr
