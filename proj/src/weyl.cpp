#include "weylccr/weyl.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "weylccr/error.hpp"

namespace weylccr {

namespace {

std::string coords_string(const ExactVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].to_string();
  }
  return out;
}

std::string coefficient_string(Complex c) {
  const double re = c.real() == 0.0 ? 0.0 : c.real();
  const double im = c.imag() == 0.0 ? 0.0 : c.imag();
  if (im == 0.0) return fmt::format("{:.15g}", re);
  if (re == 0.0) return fmt::format("{:.15g}i", im);
  return fmt::format("({:.15g}{:+.15g}i)", re, im);
}

}  // namespace

std::string to_string(const Monomial& m) {
  std::string out;
  if (!is_zero(m.a)) out += "u(" + coords_string(m.a) + ")";
  if (!is_zero(m.b)) {
    if (!out.empty()) out += "*";
    out += "v(" + coords_string(m.b) + ")";
  }
  return out.empty() ? "1" : out;
}

std::pair<PhaseAngle, Monomial> monomial_product(const Monomial& lhs, const Monomial& rhs) {
  if (lhs.dimension() != rhs.dimension()) raise(ErrorKind::FrameMismatch, "monomials of different dimension");
  return {-pairing(rhs.a, lhs.b), Monomial{lhs.a + rhs.a, lhs.b + rhs.b}};
}

std::pair<PhaseAngle, Monomial> monomial_adjoint(const Monomial& m) { return {-pairing(m.a, m.b), Monomial{-m.a, -m.b}}; }

// ---------------------------------------------------------------------------

Element::Element(FramePtr frame, double zero_threshold) : frame_(std::move(frame)), threshold_(zero_threshold) {
  if (!frame_) raise(ErrorKind::InvalidArgument, "element requires a frame");
  if (!(zero_threshold >= 0.0)) raise(ErrorKind::InvalidArgument, "zero threshold must be non-negative");
}

Element Element::unit(FramePtr frame) {
  const auto d = frame->dimension();
  return monomial(std::move(frame), Monomial::unit(d));
}

Element Element::monomial(FramePtr frame, Monomial m, Complex coefficient) {
  Element out(std::move(frame));
  out.add_term(m, coefficient);
  return out;
}

void Element::check_dimension(const Monomial& m) const {
  if (m.a.size() != dimension() || m.b.size() != dimension())
    raise(ErrorKind::DimensionMismatch, "monomial " + weylccr::to_string(m) + " does not match frame dimension " +
                                            std::to_string(dimension()));
}

Complex Element::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Complex{} : it->second;
}

void Element::add_term(const Monomial& m, Complex c, const PhaseAngle& phase) {
  check_dimension(m);
  if (!phase.is_trivial()) c *= phase.to_complex();
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < threshold_) terms_.erase(it);
}

Element& Element::operator+=(const Element& rhs) {
  require_same_frame(frame_, rhs.frame_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  require_same_frame(frame_, rhs.frame_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(Complex s) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    if (std::abs(it->second) < threshold_) it = terms_.erase(it);
    else ++it;
  }
  return *this;
}

Element operator*(const Element& lhs, const Element& rhs) {
  require_same_frame(lhs.frame_, rhs.frame_);
  Element out(lhs.frame_, lhs.threshold_);
  for (const auto& [m1, c1] : lhs.terms_)
    for (const auto& [m2, c2] : rhs.terms_) {
      auto [phase, m] = monomial_product(m1, m2);
      out.add_term(m, c1 * c2, phase);
    }
  return out;
}

double Element::distance(const Element& other) const {
  require_same_frame(frame_, other.frame_);
  double worst = 0.0;
  for (const auto& [m, c] : terms_) worst = std::max(worst, std::abs(c - other.coefficient(m)));
  for (const auto& [m, c] : other.terms_)
    if (!terms_.count(m)) worst = std::max(worst, std::abs(c));
  return worst;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    const std::string mono = weylccr::to_string(m);
    if (mono == "1") out += coefficient_string(c);
    else if (c == Complex(1.0, 0.0)) out += mono;
    else out += coefficient_string(c) + "*" + mono;
  }
  return out;
}

Element multiply(const Element& x, const Element& y) { return x * y; }

Element adjoint(const Element& x) {
  Element out(x.frame(), x.zero_threshold());
  for (const auto& [m, c] : x.terms()) {
    auto [phase, mm] = monomial_adjoint(m);
    out.add_term(mm, std::conj(c), phase);
  }
  return out;
}

Element weyl_generator(const FramePtr& frame, const PhasePoint& z) {
  Element out(frame);
  const PhaseAngle phase(ExactScalar(Rational(-1, 2)) * ExactScalar::tau() * dot(z.a, z.b));
  out.add_term(Monomial{z.a, z.b}, 1.0, phase);
  return out;
}

// ---------------------------------------------------------------------------

std::string describe(const AutomorphismSpec& spec) {
  struct Visitor {
    std::string operator()(const SpaceTranslation& s) const { return "space_translation" + weylccr::to_string(s.lambda); }
    std::string operator()(const MomentumTranslation& s) const { return "momentum_translation" + weylccr::to_string(s.mu); }
    std::string operator()(const FreeDynamics& s) const { return "free_dynamics(" + weylccr::to_string(s.t) + ")"; }
    std::string operator()(const TimeReversal&) const { return "time_reversal"; }
    std::string operator()(const ZakTranslation& s) const {
      return "zak_translation" + weylccr::to_string(s.gamma) + weylccr::to_string(s.gamma_prime);
    }
  };
  return std::visit(Visitor{}, spec);
}

TransformedMonomial apply_automorphism(const AutomorphismSpec& spec, const Frame& frame, const Monomial& m) {
  struct Visitor {
    const Frame& frame;
    const Monomial& m;
    TransformedMonomial operator()(const SpaceTranslation& s) const { return {-pairing(m.a, s.lambda), m}; }
    TransformedMonomial operator()(const MomentumTranslation& s) const { return {pairing(s.mu, m.b), m}; }
    TransformedMonomial operator()(const FreeDynamics& s) const {
      const ExactScalar t(s.t);
      const PhaseAngle phase(t * ExactScalar(Rational(1, 2)) * frame.momentum_norm2(m.a));
      return {phase, Monomial{m.a, m.b - t * frame.momentum_as_position(m.a)}};
    }
    TransformedMonomial operator()(const TimeReversal&) const { return {PhaseAngle{}, Monomial{-m.a, m.b}, true}; }
    TransformedMonomial operator()(const ZakTranslation& s) const {
      // tau_gamma(theta_gamma'(u_a v_b)) = e^{i gamma'.beta} e^{-i alpha.gamma} u_a v_b
      return {pairing(s.gamma_prime, m.b) - pairing(m.a, s.gamma), m};
    }
  };
  if (m.dimension() != frame.dimension()) raise(ErrorKind::DimensionMismatch, "monomial dimension mismatch");
  return std::visit(Visitor{frame, m}, spec);
}

Element apply_automorphism(const AutomorphismSpec& spec, const Element& x) {
  Element out(x.frame(), x.zero_threshold());
  for (const auto& [m, c] : x.terms()) {
    auto t = apply_automorphism(spec, *x.frame(), m);
    out.add_term(t.monomial, t.conjugate ? std::conj(c) : c, t.phase);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

template <class Keep>
Element project(const Element& x, Keep keep) {
  Element out(x.frame(), x.zero_threshold());
  for (const auto& [m, c] : x.terms())
    if (keep(m)) out.add_term(m, c);
  return out;
}

}  // namespace

Element ergodic_mean(const Element& x) {
  return project(x, [](const Monomial& m) { return is_zero(m.a); });
}

Element ergodic_mean_lattice(const Element& x) {
  return project(x, [](const Monomial& m) { return in_dual_lattice(m.a); });
}

Element ergodic_mean_zak(const Element& x) {
  return project(x, [](const Monomial& m) { return in_dual_lattice(m.a) && in_lattice(m.b); });
}

Element numeric_box_average(const Element& x, double half_width, std::size_t samples_per_dim) {
  if (!(half_width > 0.0)) raise(ErrorKind::InvalidArgument, "box half-width must be positive");
  if (samples_per_dim < 2) raise(ErrorKind::InvalidArgument, "need at least two samples per dimension");
  const Frame& frame = *x.frame();
  const auto d = frame.dimension();
  const double h = 2.0 * half_width / static_cast<double>(samples_per_dim);
  Element out(x.frame(), x.zero_threshold());
  for (const auto& [m, c] : x.terms()) {
    // The integrand e^{-i alpha.lambda} factorizes over ambient axes.
    Complex factor = 1.0;
    for (std::size_t j = 0; j < d; ++j) {
      ExactScalar alpha_j;
      for (std::size_t k = 0; k < d; ++k) alpha_j += frame.dual()(j, k) * m.a[k];
      const double alpha = alpha_j.evaluate();
      if (alpha == 0.0) continue;
      Complex sum = 0.0;
      for (std::size_t s = 0; s < samples_per_dim; ++s) {
        const double lambda = -half_width + (static_cast<double>(s) + 0.5) * h;
        sum += std::polar(1.0, -alpha * lambda);
      }
      factor *= sum / static_cast<double>(samples_per_dim);
    }
    out.add_term(m, c * factor);
  }
  return out;
}

Complex trace_coefficient(const Element& x, const Monomial& m) { return x.coefficient(m); }

}  // namespace weylccr
