#include "weylccr/states.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "weylccr/error.hpp"

namespace weylccr {

namespace {

constexpr double kNormalizationTolerance = 1e-12;
constexpr double kParallelTolerance = 1e-10;

void require_dimension(std::size_t expected, std::size_t actual, const char* what) {
  if (expected != actual)
    raise(ErrorKind::DimensionMismatch, std::string(what) + ": expected dimension " + std::to_string(expected) +
                                            ", got " + std::to_string(actual));
}

bool in_unit_cell(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q >= 0 && q < 1; });
}

ExactVector as_exact(const std::vector<Rational>& v) { return make_vector(v); }

}  // namespace

// ---------------------------------------------------------------------------
// Bohr characters

Rational padic_fractional_part(const Rational& x, unsigned long prime) {
  if (prime < 2 || mpz_probab_prime_p(Integer(prime).get_mpz_t(), 25) == 0)
    raise(ErrorKind::InvalidArgument, "p-adic character needs a prime, got " + std::to_string(prime));
  Rational q = x;
  q.canonicalize();
  Integer m = q.get_den();
  Integer pk = 1;
  while (mpz_divisible_ui_p(m.get_mpz_t(), prime)) {
    m /= prime;
    pk *= prime;
  }
  if (pk == 1) return 0;
  Integer m_inv;
  mpz_invert(m_inv.get_mpz_t(), m.get_mpz_t(), pk.get_mpz_t());
  Integer c = q.get_num() * m_inv;
  mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), pk.get_mpz_t());
  Rational out(c, pk);
  out.canonicalize();
  return out;
}

BohrCharacter BohrCharacter::continuous(ExactVector p) {
  BohrCharacter chi;
  chi.kind_ = Kind::Continuous;
  chi.momentum_ = std::move(p);
  return chi;
}

BohrCharacter BohrCharacter::padic(std::vector<unsigned long> primes) {
  for (auto p : primes) (void)padic_fractional_part(Rational(0), p);
  BohrCharacter chi;
  chi.kind_ = Kind::Padic;
  chi.primes_ = std::move(primes);
  return chi;
}

BohrCharacter BohrCharacter::product(std::vector<BohrCharacter> factors) {
  if (factors.empty()) raise(ErrorKind::InvalidArgument, "product character needs at least one factor");
  BohrCharacter chi;
  chi.kind_ = Kind::Product;
  chi.factors_ = std::move(factors);
  std::optional<std::size_t> d;
  for (const auto& f : chi.factors_) {
    const auto fd = f.dimension();
    if (d && fd && *d != *fd) raise(ErrorKind::DimensionMismatch, "product character factors differ in dimension");
    if (fd) d = fd;
  }
  return chi;
}

std::optional<std::size_t> BohrCharacter::dimension() const {
  switch (kind_) {
    case Kind::Continuous: return momentum_.size();
    case Kind::Padic: return primes_.size();
    case Kind::Product:
      for (const auto& f : factors_)
        if (auto d = f.dimension()) return d;
  }
  return std::nullopt;
}

namespace {

PhaseAngle character_angle(const Frame& frame, const BohrCharacter& chi, const ExactVector& b) {
  switch (chi.kind()) {
    case BohrCharacter::Kind::Continuous:
      require_dimension(frame.dimension(), chi.momentum().size(), "continuous character");
      return PhaseAngle(dot(chi.momentum(), frame.ambient_position(b)));
    case BohrCharacter::Kind::Padic: {
      require_dimension(b.size(), chi.primes().size(), "p-adic character");
      Rational turns = 0;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (!b[j].is_rational())
          raise(ErrorKind::NotDecomposable, "p-adic character needs tau-free coordinates, got " + b[j].to_string());
        turns += padic_fractional_part(b[j].as_rational(), chi.primes()[j]);
      }
      return PhaseAngle::turns(turns);
    }
    case BohrCharacter::Kind::Product: {
      PhaseAngle total;
      for (const auto& f : chi.factors()) total = total + character_angle(frame, f, b);
      return total;
    }
  }
  return {};
}

}  // namespace

CharacterValue character_eval(const Frame& frame, const BohrCharacter& chi, const ExactVector& b) {
  require_dimension(frame.dimension(), b.size(), "character argument");
  PhaseAngle angle = character_angle(frame, chi, b);
  return {angle.to_complex(), std::move(angle)};
}

// ---------------------------------------------------------------------------
// Fourier data

double fourier_norm2(const FourierData& f) {
  double acc = 0.0;
  for (const auto& [g, c] : f) acc += std::norm(c);
  return acc;
}

FourierData shift_fourier(const FourierData& f, const FourierIndex& shift) {
  FourierData out;
  for (const auto& [g, c] : f) {
    require_dimension(shift.size(), g.size(), "Fourier shift");
    FourierIndex h = g;
    for (std::size_t i = 0; i < h.size(); ++i) h[i] += shift[i];
    out.emplace(std::move(h), c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// StateModel

StateModel StateModel::plane_wave(ExactVector p) {
  if (p.empty()) raise(ErrorKind::InvalidArgument, "plane wave needs a momentum");
  return StateModel(PlaneWave{std::move(p)});
}

StateModel StateModel::bohr(BohrCharacter character) { return StateModel(BohrState{std::move(character)}); }

StateModel StateModel::bloch(std::vector<Rational> kappa, FourierData fhat) {
  if (kappa.empty()) raise(ErrorKind::InvalidArgument, "Bloch state needs a quasi-momentum");
  if (!in_unit_cell(kappa)) raise(ErrorKind::InvalidArgument, "Bloch quasi-momentum must lie in [0,1)^d");
  for (const auto& [g, c] : fhat) require_dimension(kappa.size(), g.size(), "Bloch Fourier index");
  const double n2 = fourier_norm2(fhat);
  if (std::abs(n2 - 1.0) > kNormalizationTolerance)
    raise(ErrorKind::NotAState, "Bloch Fourier data has squared norm " + std::to_string(n2) + ", expected 1");
  return StateModel(Bloch{std::move(kappa), std::move(fhat)});
}

StateModel StateModel::zak(std::vector<Rational> kappa, std::vector<Rational> nu) {
  if (kappa.empty()) raise(ErrorKind::InvalidArgument, "Zak state needs a quasi-momentum");
  require_dimension(kappa.size(), nu.size(), "Zak parameters");
  if (!in_unit_cell(kappa) || !in_unit_cell(nu)) raise(ErrorKind::InvalidArgument, "Zak parameters must lie in [0,1)^d");
  return StateModel(Zak{std::move(kappa), std::move(nu)});
}

StateModel StateModel::mixture(std::vector<double> weights, std::vector<StateModel> components) {
  if (weights.empty() || weights.size() != components.size())
    raise(ErrorKind::InvalidArgument, "mixture needs one positive weight per component");
  double total = 0.0;
  for (double w : weights) {
    if (!(w > 0.0)) raise(ErrorKind::NotAState, "mixture weights must be positive");
    total += w;
  }
  if (std::abs(total - 1.0) > kNormalizationTolerance) raise(ErrorKind::NotAState, "mixture weights must sum to 1");
  std::optional<std::size_t> d;
  for (const auto& c : components) {
    const auto cd = c.dimension();
    if (d && cd && *d != *cd) raise(ErrorKind::DimensionMismatch, "mixture components differ in dimension");
    if (cd) d = cd;
  }
  return StateModel(Mixture{std::move(weights), std::move(components)});
}

std::string StateModel::family() const {
  struct Visitor {
    std::string operator()(const PlaneWave&) const { return "plane_wave"; }
    std::string operator()(const BohrState&) const { return "bohr"; }
    std::string operator()(const Bloch&) const { return "bloch"; }
    std::string operator()(const Zak&) const { return "zak"; }
    std::string operator()(const Fock&) const { return "fock"; }
    std::string operator()(const Tracial&) const { return "tracial"; }
    std::string operator()(const Mixture&) const { return "mixture"; }
  };
  return std::visit(Visitor{}, value_);
}

std::optional<std::size_t> StateModel::dimension() const {
  struct Visitor {
    std::optional<std::size_t> operator()(const PlaneWave& s) const { return s.p.size(); }
    std::optional<std::size_t> operator()(const BohrState& s) const { return s.character.dimension(); }
    std::optional<std::size_t> operator()(const Bloch& s) const { return s.kappa.size(); }
    std::optional<std::size_t> operator()(const Zak& s) const { return s.kappa.size(); }
    std::optional<std::size_t> operator()(const Fock&) const { return std::nullopt; }
    std::optional<std::size_t> operator()(const Tracial&) const { return std::nullopt; }
    std::optional<std::size_t> operator()(const Mixture& s) const {
      for (const auto& c : s.components)
        if (auto d = c.dimension()) return d;
      return std::nullopt;
    }
  };
  return std::visit(Visitor{}, value_);
}

// ---------------------------------------------------------------------------
// Evaluation

Complex bloch_closed_form(const std::vector<Rational>& kappa, const FourierData& fhat, const Monomial& m) {
  require_dimension(kappa.size(), m.dimension(), "Bloch evaluation");
  if (!in_dual_lattice(m.a)) return 0.0;
  const auto shift = integer_coordinates(m.a);
  const ExactVector kappa_exact = as_exact(kappa);
  Complex acc = 0.0;
  for (const auto& [g, fg] : fhat) {
    FourierIndex h = g;
    for (std::size_t i = 0; i < h.size(); ++i) h[i] += shift[i];
    const auto it = fhat.find(h);
    if (it == fhat.end()) continue;
    ExactVector momentum = kappa_exact;
    for (std::size_t i = 0; i < g.size(); ++i) momentum[i] += ExactScalar(g[i]);
    // e^{-i (kappa + g').beta}
    acc += std::conj(it->second) * fg * (-pairing(momentum, m.b)).to_complex();
  }
  return acc;
}

Complex evaluate(const StateModel& s, const Frame& frame, const Monomial& m) {
  require_dimension(frame.dimension(), m.dimension(), "state evaluation");
  if (auto d = s.dimension()) require_dimension(*d, frame.dimension(), "state evaluation");
  struct Visitor {
    const Frame& frame;
    const Monomial& m;
    Complex operator()(const PlaneWave& s) const {
      if (!is_zero(m.a)) return 0.0;
      return PhaseAngle(-dot(s.p, frame.ambient_position(m.b))).to_complex();
    }
    Complex operator()(const BohrState& s) const {
      if (!is_zero(m.a)) return 0.0;
      return std::conj(character_eval(frame, s.character, m.b).value);
    }
    Complex operator()(const Bloch& s) const { return bloch_closed_form(s.kappa, s.fhat, m); }
    Complex operator()(const Zak& s) const {
      if (!in_dual_lattice(m.a) || !in_lattice(m.b)) return 0.0;
      return (-(pairing(as_exact(s.kappa), m.b) + pairing(m.a, as_exact(s.nu)))).to_complex();
    }
    Complex operator()(const Fock&) const {
      const PhaseAngle phase(ExactScalar(Rational(1, 2)) * ExactScalar::tau() * dot(m.a, m.b));
      const double gauss = (frame.momentum_norm2(m.a) + frame.position_norm2(m.b)).evaluate() / 4.0;
      return phase.to_complex() * std::exp(-gauss);
    }
    Complex operator()(const Tracial&) const { return m.is_unit() ? 1.0 : 0.0; }
    Complex operator()(const Mixture& s) const {
      Complex acc = 0.0;
      for (std::size_t i = 0; i < s.components.size(); ++i) acc += s.weights[i] * evaluate(s.components[i], frame, m);
      return acc;
    }
  };
  return std::visit(Visitor{frame, m}, s.variant());
}

Complex evaluate(const StateModel& s, const Element& x) {
  Complex acc = 0.0;
  for (const auto& [m, c] : x.terms()) acc += c * evaluate(s, *x.frame(), m);
  return acc;
}

// ---------------------------------------------------------------------------
// Checks

void CheckReport::observe(double value, const std::string& probe) {
  if (std::isnan(value)) value = std::numeric_limits<double>::infinity();
  if (worst_probe.empty() || value > worst_value) {
    worst_value = value;
    worst_probe = probe;
  }
}

PsdReport gram_psd_check(const StateModel& s, const FramePtr& frame, const std::vector<Monomial>& probes, double tol) {
  if (probes.empty()) raise(ErrorKind::InvalidArgument, "gram check needs at least one probe");
  for (std::size_t i = 0; i < probes.size(); ++i)
    for (std::size_t j = i + 1; j < probes.size(); ++j)
      if (probes[i] == probes[j]) raise(ErrorKind::InvalidArgument, "gram check probes must be distinct");
  const auto n = static_cast<Eigen::Index>(probes.size());
  Eigen::MatrixXcd gram(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto [adj_phase, adj] = monomial_adjoint(probes[static_cast<std::size_t>(i)]);
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto [phase, m] = monomial_product(adj, probes[static_cast<std::size_t>(j)]);
      gram(i, j) = (adj_phase + phase).to_complex() * evaluate(s, *frame, m);
    }
  }
  PsdReport report;
  report.hermitian_residual = (gram - gram.adjoint()).cwiseAbs().maxCoeff();
  const Eigen::MatrixXcd hermitian = (gram + gram.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian, Eigen::EigenvaluesOnly);
  report.min_eigenvalue = solver.eigenvalues().minCoeff();
  report.pass = report.min_eigenvalue >= -tol;
  return report;
}

CheckReport invariance_check(const StateModel& s, const AutomorphismSpec& spec, const std::vector<Element>& samples,
                             double tol) {
  CheckReport report;
  report.check = "invariance[" + s.family() + " vs " + describe(spec) + "]";
  const bool antilinear = std::holds_alternative<TimeReversal>(spec);
  for (const auto& x : samples) {
    const Complex moved = evaluate(s, apply_automorphism(spec, x));
    const Complex base = evaluate(s, x);
    report.observe(std::abs(moved - (antilinear ? std::conj(base) : base)), x.to_string());
  }
  report.pass = report.worst_value <= tol;
  return report;
}

CheckReport multiplicativity_check(const StateModel& s, const FramePtr& frame, const std::vector<Monomial>& probes,
                                   double tol) {
  CheckReport report;
  report.check = "multiplicativity[" + s.family() + "]";
  for (std::size_t i = 0; i < probes.size(); ++i)
    for (std::size_t j = i; j < probes.size(); ++j) {
      const auto [phase_ij, mij] = monomial_product(probes[i], probes[j]);
      const auto [phase_ji, mji] = monomial_product(probes[j], probes[i]);
      if (!phase_ij.same_unit(phase_ji))
        raise(ErrorKind::InvalidProbeSet,
              "probes " + to_string(probes[i]) + " and " + to_string(probes[j]) + " do not commute");
      const Complex joint = phase_ij.to_complex() * evaluate(s, *frame, mij);
      const Complex split = evaluate(s, *frame, probes[i]) * evaluate(s, *frame, probes[j]);
      report.observe(std::abs(joint - split), to_string(probes[i]) + " ; " + to_string(probes[j]));
    }
  report.pass = report.worst_value <= tol;
  return report;
}

TriVerdict time_reversal_classify(const StateModel& s) {
  struct Visitor {
    TriVerdict operator()(const PlaneWave& s) const {
      if (is_zero(s.p)) return {true, "p = 0: zero-momentum state"};
      return {false, "p = " + to_string(s.p) + " is nonzero"};
    }
    TriVerdict operator()(const BohrState& s) const {
      if (s.character.kind() != BohrCharacter::Kind::Continuous)
        raise(ErrorKind::Unsupported, "time-reversal classification covers continuous Bohr characters only");
      return (*this)(PlaneWave{s.character.momentum()});
    }
    TriVerdict operator()(const Zak& s) const {
      for (std::size_t i = 0; i < s.kappa.size(); ++i)
        if (s.kappa[i] != 0 && s.kappa[i] != Rational(1, 2))
          return {false, "kappa_" + std::to_string(i) + " = " + to_string(s.kappa[i]) + " is not in {0, 1/2}"};
      return {true, "kappa in {0, 1/2}^d (nu unconstrained)"};
    }
    TriVerdict operator()(const Bloch& s) const {
      FourierIndex two_kappa(s.kappa.size());
      for (std::size_t i = 0; i < s.kappa.size(); ++i) {
        const Rational doubled = s.kappa[i] * 2;
        if (doubled.get_den() != 1)
          return {false, "2 kappa_" + std::to_string(i) + " = " + to_string(doubled) + " is not an integer"};
        two_kappa[i] = doubled.get_num().get_si();
      }
      // x(g) = conj f(-g) versus y(g) = f(g - 2 kappa).
      FourierData x;
      for (const auto& [g, c] : s.fhat) {
        FourierIndex neg = g;
        for (auto& v : neg) v = -v;
        x.emplace(std::move(neg), std::conj(c));
      }
      const FourierData y = shift_fourier(s.fhat, two_kappa);
      Complex overlap = 0.0;
      for (const auto& [g, c] : y)
        if (auto it = x.find(g); it != x.end()) overlap += std::conj(c) * it->second;
      const Complex scale = overlap / fourier_norm2(y);
      std::set<FourierIndex> support;
      for (const auto& [g, c] : x) support.insert(g);
      for (const auto& [g, c] : y) support.insert(g);
      double residual = 0.0;
      for (const auto& g : support) {
        const auto xi = x.find(g);
        const auto yi = y.find(g);
        const Complex xv = xi == x.end() ? Complex{} : xi->second;
        const Complex yv = yi == y.end() ? Complex{} : yi->second;
        residual = std::max(residual, std::abs(xv - scale * yv));
      }
      const bool parallel = residual <= kParallelTolerance;
      return {parallel, "2 kappa integral; CPC vs lambda_{2 kappa}(P) residual " + std::to_string(residual)};
    }
    TriVerdict operator()(const Fock&) const { return unsupported("fock"); }
    TriVerdict operator()(const Tracial&) const { return unsupported("tracial"); }
    TriVerdict operator()(const Mixture&) const { return unsupported("mixture"); }
    static TriVerdict unsupported(const std::string& family) {
      raise(ErrorKind::Unsupported, "time-reversal classification is not available for the " + family + " family");
    }
  };
  return std::visit(Visitor{}, s.variant());
}

CheckReport time_reversal_functional_check(const StateModel& s, const FramePtr& frame,
                                           const std::vector<Monomial>& probes, double tol) {
  CheckReport report;
  report.check = "time_reversal_functional[" + s.family() + "]";
  for (const auto& m : probes) {
    const Complex reversed = evaluate(s, *frame, Monomial{-m.a, m.b});
    report.observe(std::abs(reversed - std::conj(evaluate(s, *frame, m))), to_string(m));
  }
  report.pass = report.worst_value <= tol;
  return report;
}

CheckReport covariance_check(const std::vector<Rational>& kappa, const FourierData& fhat,
                             const FourierIndex& gamma_prime, const FramePtr& frame,
                             const std::vector<Monomial>& probes, double tol) {
  require_dimension(kappa.size(), gamma_prime.size(), "covariance shift");
  CheckReport report;
  report.check = "covariance";
  std::vector<Rational> shifted_kappa = kappa;
  for (std::size_t i = 0; i < kappa.size(); ++i) shifted_kappa[i] += gamma_prime[i];
  const FourierData shifted_f = shift_fourier(fhat, gamma_prime);
  for (const auto& m : probes) {
    require_dimension(frame->dimension(), m.dimension(), "covariance probe");
    const Complex lhs = bloch_closed_form(shifted_kappa, fhat, m);
    const Complex rhs = bloch_closed_form(kappa, shifted_f, m);
    report.observe(std::abs(lhs - rhs), to_string(m));
  }
  report.pass = report.worst_value <= tol;
  return report;
}

double weak_star_distance(const StateModel& s1, const StateModel& s2, const std::vector<Element>& probes) {
  if (probes.empty()) raise(ErrorKind::InvalidArgument, "weak-* distance needs at least one probe");
  double worst = 0.0;
  for (const auto& x : probes) worst = std::max(worst, std::abs(evaluate(s1, x) - evaluate(s2, x)));
  return worst;
}

// ---------------------------------------------------------------------------
// Paths

PathKind parse_path_kind(const std::string& name) {
  if (name == "plane_wave_line" || name == "plane_wave") return PathKind::PlaneWaveLine;
  if (name == "bloch_slerp" || name == "bloch") return PathKind::BlochSlerp;
  if (name == "zak_line" || name == "zak") return PathKind::ZakLine;
  raise(ErrorKind::InvalidArgument, "unknown path kind '" + name + "'");
}

std::string to_string(PathKind kind) {
  switch (kind) {
    case PathKind::PlaneWaveLine: return "plane_wave_line";
    case PathKind::BlochSlerp: return "bloch_slerp";
    case PathKind::ZakLine: return "zak_line";
  }
  return "";
}

namespace {

std::vector<Rational> lerp(const std::vector<Rational>& from, const std::vector<Rational>& to, const Rational& t) {
  require_dimension(from.size(), to.size(), "path endpoints");
  std::vector<Rational> out(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) out[i] = from[i] + t * (to[i] - from[i]);
  return out;
}

template <class T>
const T& endpoint(const StateModel& s, PathKind kind) {
  const T* p = s.get_if<T>();
  if (!p) raise(ErrorKind::InvalidArgument, "path " + to_string(kind) + " got a " + s.family() + " endpoint");
  return *p;
}

}  // namespace

std::vector<StateModel> path_sample(PathKind kind, const StateModel& from, const StateModel& to,
                                    const std::vector<Rational>& grid) {
  for (const auto& t : grid)
    if (t < 0 || t > 1) raise(ErrorKind::InvalidArgument, "path parameter outside [0,1]");
  std::vector<StateModel> out;
  out.reserve(grid.size());
  switch (kind) {
    case PathKind::PlaneWaveLine: {
      const auto& p0 = endpoint<PlaneWave>(from, kind).p;
      const auto& p1 = endpoint<PlaneWave>(to, kind).p;
      require_dimension(p0.size(), p1.size(), "path endpoints");
      for (const auto& t : grid) {
        const ExactScalar te(t);
        out.push_back(StateModel::plane_wave(p0 + te * (p1 - p0)));
      }
      break;
    }
    case PathKind::ZakLine: {
      const auto& z0 = endpoint<Zak>(from, kind);
      const auto& z1 = endpoint<Zak>(to, kind);
      for (const auto& t : grid) out.push_back(StateModel::zak(lerp(z0.kappa, z1.kappa, t), lerp(z0.nu, z1.nu, t)));
      break;
    }
    case PathKind::BlochSlerp: {
      const auto& b0 = endpoint<Bloch>(from, kind);
      const auto& b1 = endpoint<Bloch>(to, kind);
      // f1 = c f0 + r w with w a unit vector orthogonal to f0.
      Complex c = 0.0;
      for (const auto& [g, v] : b0.fhat)
        if (auto it = b1.fhat.find(g); it != b1.fhat.end()) c += std::conj(v) * it->second;
      FourierData w = b1.fhat;
      for (const auto& [g, v] : b0.fhat) w[g] -= c * v;
      const double r = std::sqrt(fourier_norm2(w));
      const bool parallel = r < 1e-12;
      if (!parallel)
        for (auto& [g, v] : w) v /= r;
      const double theta = std::atan2(r, std::abs(c));
      const double phi = std::arg(c);
      for (const auto& t : grid) {
        const double td = t.get_d();
        FourierData f;
        if (parallel) {
          f = b0.fhat;
        } else {
          const Complex a0 = std::polar(std::cos(td * theta), td * phi);
          const double a1 = std::sin(td * theta);
          for (const auto& [g, v] : b0.fhat) f[g] += a0 * v;
          for (const auto& [g, v] : w) f[g] += a1 * v;
          for (auto it = f.begin(); it != f.end();) it = std::abs(it->second) == 0.0 ? f.erase(it) : std::next(it);
          const double norm = std::sqrt(fourier_norm2(f));
          for (auto& [g, v] : f) v /= norm;
        }
        out.push_back(StateModel::bloch(lerp(b0.kappa, b1.kappa, t), std::move(f)));
      }
      break;
    }
  }
  return out;
}

std::vector<Monomial> default_probe_set(std::size_t d) {
  auto first = [d](Rational q) {
    ExactVector v(d);
    v[0] = ExactScalar(q);
    return v;
  };
  auto all = [d](Rational q) { return ExactVector(d, ExactScalar(q)); };
  const ExactVector zero(d);
  return {
      {zero, first(Rational(1, 3))},
      {zero, all(Rational(1, 2))},
      {zero, first(Rational(1))},
      {zero, all(Rational(-2, 5))},
      {first(Rational(1)), zero},
      {first(Rational(-1)), first(Rational(1, 2))},
      {all(Rational(1)), all(Rational(1))},
      {first(Rational(1, 2)), zero},
      {zero, first(Rational(3, 4))},
      {first(Rational(2)), all(Rational(1, 3))},
  };
}

}  // namespace weylccr
