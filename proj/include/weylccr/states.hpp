#pragma once

// Closed-form states on W0 and the checks that certify them: positivity,
// invariance, multiplicativity, time-reversal classification, covariance
// and weak-* probing.

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "weylccr/weyl.hpp"

namespace weylccr {

// ---------------------------------------------------------------------------
// Bohr characters

/// {x}_p: the p-adic fractional part of a rational, a number c / p^k in [0,1)
/// with c = n m^{-1} mod p^k when x = n / (p^k m), gcd(m, p) = 1.
Rational padic_fractional_part(const Rational& x, unsigned long prime);

/// A finitely describable character of R^d restricted to rational points.
class BohrCharacter {
 public:
  enum class Kind { Continuous, Padic, Product };

  /// beta -> e^{i p.beta}, p an ambient momentum.
  static BohrCharacter continuous(ExactVector p);
  /// b -> e^{2 pi i sum_j {b_j}_{p_j}} on E-coordinates.
  static BohrCharacter padic(std::vector<unsigned long> primes);
  static BohrCharacter product(std::vector<BohrCharacter> factors);

  Kind kind() const { return kind_; }
  const ExactVector& momentum() const { return momentum_; }
  const std::vector<unsigned long>& primes() const { return primes_; }
  const std::vector<BohrCharacter>& factors() const { return factors_; }
  /// Dimension the character is pinned to, if any.
  std::optional<std::size_t> dimension() const;

 private:
  Kind kind_ = Kind::Continuous;
  ExactVector momentum_;
  std::vector<unsigned long> primes_;
  std::vector<BohrCharacter> factors_;
};

struct CharacterValue {
  Complex value;
  PhaseAngle angle;
};

/// chi(beta) at beta = E b, with the exact angle.
CharacterValue character_eval(const Frame& frame, const BohrCharacter& chi, const ExactVector& b);

// ---------------------------------------------------------------------------
// State families

using FourierIndex = std::vector<long>;
/// Finitely supported Fourier coefficients of a vector in L^2(T_Gamma).
using FourierData = std::map<FourierIndex, Complex>;

double fourier_norm2(const FourierData& f);
/// f'(g) = f(g - shift): the Fourier data of F_shift f.
FourierData shift_fourier(const FourierData& f, const FourierIndex& shift);

struct PlaneWave {
  ExactVector p;  ///< ambient momentum
};
struct BohrState {
  BohrCharacter character;
};
struct Bloch {
  std::vector<Rational> kappa;  ///< quasi-momentum, F-coordinates in [0,1)
  FourierData fhat;             ///< unit vector generating the projection P
};
struct Zak {
  std::vector<Rational> kappa;  ///< F-coordinates in [0,1)
  std::vector<Rational> nu;     ///< E-coordinates in [0,1)
};
struct Fock {};
struct Tracial {};

class StateModel;

struct Mixture {
  std::vector<double> weights;
  std::vector<StateModel> components;
};

class StateModel {
 public:
  using Variant = std::variant<PlaneWave, BohrState, Bloch, Zak, Fock, Tracial, Mixture>;

  static StateModel plane_wave(ExactVector p);
  static StateModel bohr(BohrCharacter character);
  /// Throws NotAState if fhat is not normalized within 1e-12.
  static StateModel bloch(std::vector<Rational> kappa, FourierData fhat);
  static StateModel zak(std::vector<Rational> kappa, std::vector<Rational> nu);
  static StateModel fock() { return StateModel(Fock{}); }
  static StateModel tracial() { return StateModel(Tracial{}); }
  /// Weights must be positive and sum to 1 within 1e-12.
  static StateModel mixture(std::vector<double> weights, std::vector<StateModel> components);

  const Variant& variant() const { return value_; }
  template <class T>
  const T* get_if() const { return std::get_if<T>(&value_); }

  std::string family() const;
  /// Dimension fixed by the state's data, if any (Fock and Tracial are dimension-free).
  std::optional<std::size_t> dimension() const;

 private:
  explicit StateModel(Variant v) : value_(std::move(v)) {}
  Variant value_;
};

/// Bloch closed form for any (possibly unreduced) kappa.
Complex bloch_closed_form(const std::vector<Rational>& kappa, const FourierData& fhat, const Monomial& m);

Complex evaluate(const StateModel& s, const Frame& frame, const Monomial& m);
Complex evaluate(const StateModel& s, const Element& x);

// ---------------------------------------------------------------------------
// Checks

/// Uniform report: check name, verdict, worst observed value and its witness.
struct CheckReport {
  std::string check;
  bool pass = true;
  double worst_value = 0.0;
  std::string worst_probe;

  /// Folds one observation into the running worst case.
  void observe(double value, const std::string& probe);
};

struct PsdReport {
  double min_eigenvalue = 0.0;
  double hermitian_residual = 0.0;
  bool pass = false;
};

/// H_ij = omega(m_i^* m_j); minimal eigenvalue of (H + H^*)/2.
PsdReport gram_psd_check(const StateModel& s, const FramePtr& frame, const std::vector<Monomial>& probes, double tol);

CheckReport invariance_check(const StateModel& s, const AutomorphismSpec& spec, const std::vector<Element>& samples,
                             double tol);

/// |omega(m1 m2) - omega(m1) omega(m2)| over all pairs. Probes must commute
/// pairwise, otherwise InvalidProbeSet.
CheckReport multiplicativity_check(const StateModel& s, const FramePtr& frame, const std::vector<Monomial>& probes,
                                   double tol);

struct TriVerdict {
  bool is_tri = false;
  std::string certificate;
};

/// Time-reversal classification of the pure families (PlaneWave, Zak, Bloch).
TriVerdict time_reversal_classify(const StateModel& s);

/// max over probes of |conj omega(m) - omega(c(m))|.
CheckReport time_reversal_functional_check(const StateModel& s, const FramePtr& frame,
                                           const std::vector<Monomial>& probes, double tol);

/// omega_(kappa + g', f) against omega_(kappa, F_g' f) on the probes.
CheckReport covariance_check(const std::vector<Rational>& kappa, const FourierData& fhat,
                             const FourierIndex& gamma_prime, const FramePtr& frame,
                             const std::vector<Monomial>& probes, double tol);

double weak_star_distance(const StateModel& s1, const StateModel& s2, const std::vector<Element>& probes);

enum class PathKind { PlaneWaveLine, BlochSlerp, ZakLine };

PathKind parse_path_kind(const std::string& name);
std::string to_string(PathKind kind);

std::vector<StateModel> path_sample(PathKind kind, const StateModel& from, const StateModel& to,
                                    const std::vector<Rational>& grid);

/// Ten deterministic monomials (d-dimensional) mixing integral and fractional
/// momenta and positions, used as the fixed weak-* probe set.
std::vector<Monomial> default_probe_set(std::size_t d);

}  // namespace weylccr
