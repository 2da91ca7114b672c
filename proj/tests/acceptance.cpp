// End-to-end acceptance run: twelve criteria at their stated sizes and
// tolerances, one PASS/FAIL line each. Exits nonzero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <string>

#include "weylccr/error.hpp"
#include "weylccr/gns.hpp"
#include "weylccr/random.hpp"
#include "weylccr/verify.hpp"

using namespace weylccr;

namespace {

constexpr double kTwoPi = 6.283185307179586;

int failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail) {
  std::printf("%s  %2d  %s  (%s)\n", pass ? "PASS" : "FAIL", index, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

double dotd(const ExactVector& x, const ExactVector& y) {
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i].evaluate() * y[i].evaluate();
  return acc;
}

FramePtr skew_frame(std::size_t d) {
  ExactMatrix e = ExactMatrix::identity(d);
  if (d > 1) e(0, 1) = ExactScalar(Rational(1, 2));
  e(d - 1, d - 1) = ExactScalar(2);
  return Frame::make(e);
}

// Half of the probes carry integral momentum so lattice-periodic states see
// nontrivial off-diagonal structure.
std::vector<Monomial> mixed_probes(RandomSource& rng, std::size_t d, std::size_t count) {
  std::set<Monomial> seen;
  std::vector<Monomial> out;
  while (out.size() < count) {
    const Monomial m = out.size() % 2 ? rng.monomial(d) : rng.lattice_momentum_monomial(d, 2);
    if (seen.insert(m).second) out.push_back(m);
  }
  return out;
}

// Bloch closed form evaluated directly in doubles.
Complex bloch_oracle(const std::vector<Rational>& kappa, const FourierData& f, const Monomial& m) {
  for (const auto& x : m.a)
    if (!x.is_integer()) return 0.0;
  Complex acc = 0.0;
  for (const auto& [g, c] : f) {
    FourierIndex ga = g;
    for (std::size_t i = 0; i < g.size(); ++i) ga[i] += std::lround(m.a[i].evaluate());
    const auto it = f.find(ga);
    if (it == f.end()) continue;
    double turns = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) turns += (kappa[i].get_d() + static_cast<double>(g[i])) * m.b[i].evaluate();
    acc += std::conj(it->second) * c * std::polar(1.0, -kTwoPi * turns);
  }
  return acc;
}

void weyl_laws() {
  RandomSource rng(101);
  std::size_t assoc_fail = 0, anti_fail = 0;
  double phase_residual = 0.0, coeff_residual = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const std::size_t d = 1 + static_cast<std::size_t>(k % 3);
    const Monomial x = rng.monomial(d), y = rng.monomial(d), z = rng.monomial(d);
    const auto xy = monomial_product(x, y);
    const auto yz = monomial_product(y, z);
    const auto left = monomial_product(xy.second, z);
    const auto right = monomial_product(x, yz.second);
    if (!(xy.first + left.first).same_unit(yz.first + right.first) || left.second != right.second) ++assoc_fail;
    // (xy)^* = y^* x^*
    const auto lhs = monomial_adjoint(xy.second);
    const auto ys = monomial_adjoint(y), xs = monomial_adjoint(x);
    const auto rhs = monomial_product(ys.second, xs.second);
    if (!(-xy.first + lhs.first).same_unit(ys.first + xs.first + rhs.first) || lhs.second != rhs.second)
      ++anti_fail;
    // Product phase against e^{-i alpha_2 . beta_1} = e^{-i tau a_2 . b_1}.
    phase_residual = std::max(phase_residual,
                              std::abs(xy.first.to_complex() - std::polar(1.0, -kTwoPi * dotd(y.a, x.b))));
  }
  for (int k = 0; k < 100; ++k) {
    const FramePtr frame = k % 2 ? Frame::identity(2) : skew_frame(2);
    const Element x = rng.element(frame, 4), y = rng.element(frame, 4), z = rng.element(frame, 4);
    coeff_residual = std::max(coeff_residual, ((x * y) * z).distance(x * (y * z)));
    coeff_residual = std::max(coeff_residual, adjoint(x * y).distance(adjoint(y) * adjoint(x)));
  }
  report(1, "Weyl laws: associativity and *-anti-homomorphism on 1000 monomial triples",
         assoc_fail == 0 && anti_fail == 0 && phase_residual <= 1e-12 && coeff_residual <= 1e-12,
         "angle failures " + std::to_string(assoc_fail) + "+" + std::to_string(anti_fail) + ", phase residual " +
             num(phase_residual) + ", coefficient residual " + num(coeff_residual));
}

PhaseAngle generator_phase(const PhasePoint& z) {
  return PhaseAngle(ExactScalar(Rational(-1, 2)) * ExactScalar::tau() * dot(z.a, z.b));
}

void symplectic_presentation() {
  RandomSource rng(202);
  std::size_t fails = 0;
  double residual = 0.0;
  for (int k = 0; k < 500; ++k) {
    const std::size_t d = 1 + static_cast<std::size_t>(k % 3);
    const PhasePoint z{rng.exact_vector(d), rng.exact_vector(d)}, w{rng.exact_vector(d), rng.exact_vector(d)};
    const auto prod = monomial_product({z.a, z.b}, {w.a, w.b});
    const PhaseAngle lhs = generator_phase(z) + generator_phase(w) + prod.first;
    // sigma(z, w) = (tau/2)(a.b' - a'.b), written out independently.
    const PhaseAngle sigma(ExactScalar(Rational(1, 2)) * ExactScalar::tau() * (dot(z.a, w.b) - dot(w.a, z.b)));
    const PhaseAngle rhs = sigma + generator_phase(z + w);
    if (!(lhs == rhs) || prod.second != Monomial{z.a + w.a, z.b + w.b}) ++fails;
    if (k < 100) {
      const FramePtr frame = Frame::identity(d);
      const Element target = weyl_generator(frame, z + w) * sigma.to_complex();
      residual = std::max(residual, (weyl_generator(frame, z) * weyl_generator(frame, w)).distance(target));
    }
  }
  report(2, "symplectic presentation w_z w_z' = e^{i sigma} w_{z+z'} on 500 pairs", fails == 0 && residual <= 1e-12,
         "angle failures " + std::to_string(fails) + ", element residual " + num(residual));
}

void tracial_identity() {
  RandomSource rng(303);
  const StateModel trace = StateModel::tracial();
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const FramePtr frame = k % 2 ? Frame::identity(1 + k % 3) : skew_frame(2);
    const Element x = rng.element(frame, 10);
    double norm2 = 0.0;
    for (const auto& [m, c] : x.terms()) norm2 += std::norm(c);
    worst = std::max(worst, std::abs(evaluate(trace, adjoint(x) * x) - norm2));
  }
  double pair_worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const FramePtr frame = Frame::identity(2);
    const auto ms = rng.distinct_monomials(2, 2);
    const Complex l1 = rng.coefficient(), l2 = rng.coefficient();
    const Element x = Element::monomial(frame, ms[0], l1) + Element::monomial(frame, ms[1], l2);
    pair_worst = std::max(pair_worst, std::abs(evaluate(trace, adjoint(x) * x) - (std::norm(l1) + std::norm(l2))));
  }
  report(3, "tracial l2 identity on 200 elements and the two-monomial bound", worst <= 1e-12 && pair_worst <= 1e-12,
         "residual " + num(worst) + ", two-monomial residual " + num(pair_worst));
}

void ergodic_means() {
  const FramePtr frame = Frame::make(ExactMatrix::diagonal({ExactScalar::tau()}));
  const std::vector<double> widths = {10.0, 100.0, 1000.0};
  const Monomial vb = Monomial::v({ExactScalar(Rational(1, 2))});
  double bound_ratio = 0.0, slope_dev = 0.0, fixed_err = 0.0;
  std::string slopes;
  for (const Rational& a : {Rational(1), Rational(3, 2), Rational(-2, 3)}) {
    const Monomial m{{ExactScalar(a)}, {ExactScalar(Rational(1, 3))}};
    Element x = Element::monomial(frame, m);
    x += Element::monomial(frame, vb, Complex(0.5, -0.25));
    const double alpha = std::abs(frame->dual()(0, 0).evaluate() * a.get_d());
    std::vector<double> lx, ly;
    for (double L : widths) {
      const auto samples = static_cast<std::size_t>(std::ceil(40.0 * L * std::max(1.0, alpha)));
      const Element avg = numeric_box_average(x, L, samples);
      const double mag = std::abs(avg.coefficient(m));
      bound_ratio = std::max(bound_ratio, mag / (2.0 / (L * alpha)));
      fixed_err = std::max(fixed_err, std::abs(avg.coefficient(vb) - Complex(0.5, -0.25)));
      lx.push_back(std::log10(L));
      ly.push_back(std::log10(mag));
    }
    const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / 3.0;
    const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / 3.0;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      sxy += (lx[i] - mx) * (ly[i] - my);
      sxx += (lx[i] - mx) * (lx[i] - mx);
    }
    const double slope = sxy / sxx;
    slope_dev = std::max(slope_dev, std::abs(slope + 1.0));
    slopes += (slopes.empty() ? "" : " ") + num(slope);
    // The closed-form projection keeps exactly the a = 0 part.
    const Element proj = ergodic_mean(x);
    if (proj.size() != 1 || proj.coefficient(vb) != Complex(0.5, -0.25)) fixed_err = 1.0;
  }
  report(4, "ergodic means: box averages decay like 1/L, a = 0 terms kept",
         bound_ratio <= 1.0 && slope_dev <= 0.2 && fixed_err == 0.0,
         "max |c| L|alpha|/2 = " + num(bound_ratio) + ", slopes " + slopes + ", a=0 error " + num(fixed_err));
}

void invariance() {
  RandomSource rng(404);
  const std::size_t d = 2;
  const FramePtr frame = skew_frame(d);
  auto samples = [&](std::size_t n) {
    std::vector<Element> out;
    for (std::size_t k = 0; k < n; ++k) {
      Element x = rng.element(frame, 3);
      x += Element::monomial(frame, rng.lattice_momentum_monomial(d, 2), rng.coefficient());
      x += Element::v(frame, rng.exact_vector(d));
      out.push_back(x);
    }
    return out;
  };
  double exact_worst = 0.0, lattice_worst = 0.0;
  for (int k = 0; k < 5; ++k) {
    const std::vector<StateModel> regular = {
        rng.plane_wave(*frame), StateModel::bohr(BohrCharacter::padic({3, 3})),
        StateModel::bohr(BohrCharacter::product({BohrCharacter::padic({2, 5}), BohrCharacter::continuous(rng.exact_vector(d))}))};
    const std::vector<AutomorphismSpec> maps = {SpaceTranslation{rng.exact_vector(d)}, FreeDynamics{rng.rational()}};
    for (const auto& s : regular)
      for (const auto& spec : maps) exact_worst = std::max(exact_worst, invariance_check(s, spec, samples(20), 0.0).worst_value);
    const StateModel bloch = rng.bloch_state(d, 2);
    lattice_worst = std::max(
        lattice_worst, invariance_check(bloch, SpaceTranslation{rng.integer_vector(d, 3)}, samples(20), 1e-12).worst_value);
    const StateModel zak = rng.zak_state(d);
    lattice_worst = std::max(
        lattice_worst,
        invariance_check(zak, ZakTranslation{rng.integer_vector(d, 3), rng.integer_vector(d, 3)}, samples(20), 1e-12)
            .worst_value);
  }
  const FramePtr tau_frame = Frame::make(ExactMatrix::diagonal({ExactScalar::tau()}));
  const Element u1 = Element::u(tau_frame, {ExactScalar(1)});
  const StateModel fock = StateModel::fock();
  const double moved = std::abs(evaluate(fock, apply_automorphism(FreeDynamics{Rational(1)}, u1)) - evaluate(fock, u1));
  const double expected = std::exp(-0.25) - std::exp(-0.5);
  report(5, "invariance of plane-wave, Bohr, Bloch and Zak states; Fock moves under free dynamics",
         exact_worst == 0.0 && lattice_worst <= 1e-12 && std::abs(moved - expected) <= 1e-6,
         "exact " + num(exact_worst) + ", lattice " + num(lattice_worst) + ", Fock shift " + num(moved));
}

void positivity() {
  RandomSource rng(505);
  const std::size_t d = 2;
  const FramePtr frame = skew_frame(d);
  std::vector<StateModel> states = {rng.plane_wave(*frame),
                                    StateModel::bohr(BohrCharacter::padic({3, 3})),
                                    rng.bloch_state(d, 2),
                                    rng.zak_state(d),
                                    StateModel::fock(),
                                    StateModel::tracial()};
  states.push_back(StateModel::mixture({0.5, 0.3, 0.2}, {states[2], states[3], states[4]}));
  double min_eig = 1.0, herm = 0.0;
  for (const auto& s : states) {
    const PsdReport r = gram_psd_check(s, frame, mixed_probes(rng, d, 20), 1e-10);
    min_eig = std::min(min_eig, r.min_eigenvalue);
    herm = std::max(herm, r.hermitian_residual);
  }
  report(6, "Gram matrices positive semidefinite for six families and a mixture", min_eig >= -1e-10 && herm <= 1e-12,
         "min eigenvalue " + num(min_eig) + ", hermitian residual " + num(herm));
}

void gns_equivalence() {
  RandomSource rng(606);
  double worst = 0.0, rho_exact = 0.0, rho_polar = 0.0;
  for (int k = 0; k < 50; ++k) {
    const std::size_t d = 1 + static_cast<std::size_t>(k % 2);
    const FramePtr frame = Frame::identity(d);
    const StateModel s = rng.bloch_state(d, 2);
    const Bloch& b = *s.get_if<Bloch>();
    const FourierWindow window = FourierWindow::cube(d, 6);
    for (int j = 0; j < 50; ++j) {
      const Monomial m = rng.lattice_momentum_monomial(d, 4);
      worst = std::max(worst, std::abs(bloch_vector_state(b.kappa, b.fhat, m, window) - evaluate(s, *frame, m)));
    }
    const ExactVector gamma = rng.integer_vector(d, 5);
    const auto op = rep_rho_kappa(b.kappa, Monomial::v(gamma), window).matrix;
    Rational turns = 0;
    for (std::size_t i = 0; i < d; ++i) turns += b.kappa[i] * gamma[i].as_rational();
    const Complex phase = PhaseAngle::turns(-turns).to_complex();
    const auto id = Eigen::MatrixXcd::Identity(window.size(), window.size());
    rho_exact = std::max(rho_exact, (op - phase * id).cwiseAbs().maxCoeff());
    rho_polar = std::max(rho_polar, (op - std::polar(1.0, -kTwoPi * turns.get_d()) * id).cwiseAbs().maxCoeff());
  }
  report(7, "GNS vector states match the Bloch closed form; rho_kappa(v_gamma) is scalar",
         worst <= 1e-10 && rho_exact == 0.0 && rho_polar <= 1e-14,
         "vector-state residual " + num(worst) + ", rho deviation " + num(rho_exact) + " (vs polar " + num(rho_polar) + ")");
}

void covariance() {
  RandomSource rng(707);
  double worst = 0.0, oracle = 0.0;
  for (int k = 0; k < 20; ++k) {
    const std::size_t d = 1 + static_cast<std::size_t>(k % 2);
    const FramePtr frame = Frame::identity(d);
    const auto kappa = rng.cell_point(d);
    const FourierData f = rng.fourier_data(d, 2);
    FourierIndex shift;
    for (const auto& x : rng.integer_vector(d, 2)) shift.push_back(std::lround(x.evaluate()));
    const auto probes = mixed_probes(rng, d, 30);
    worst = std::max(worst, covariance_check(kappa, f, shift, frame, probes, 1e-12).worst_value);
    for (const auto& m : probes) oracle = std::max(oracle, std::abs(bloch_closed_form(kappa, f, m) - bloch_oracle(kappa, f, m)));
  }
  report(8, "Bloch covariance under dual-lattice shifts on 20 triples x 30 probes", worst <= 1e-12 && oracle <= 1e-12,
         "covariance residual " + num(worst) + ", closed form vs direct sum " + num(oracle));
}

// Real data with f(h) = f(-h - 2 kappa) is time-reversal symmetric.
FourierData symmetric_data(RandomSource& rng, const std::vector<Rational>& kappa) {
  const std::size_t d = kappa.size();
  FourierData f;
  for (int j = 0; j < 3; ++j) {
    FourierIndex g(d), partner(d);
    for (std::size_t i = 0; i < d; ++i) {
      g[i] = rng.between(-2, 2);
      partner[i] = -g[i] - Rational(2 * kappa[i]).get_num().get_si();
    }
    const double c = rng.symmetric();
    f[g] = c;
    f[partner] = c;
  }
  const double n = std::sqrt(fourier_norm2(f));
  if (n == 0.0) return {{FourierIndex(d, 0), 1.0}};
  for (auto& [g, c] : f) c /= n;
  return f;
}

void time_reversal() {
  RandomSource rng(808);
  int wrong = 0;
  const FramePtr frame1 = Frame::identity(1), frame2 = Frame::identity(2);
  if (!time_reversal_classify(StateModel::plane_wave(ExactVector(2))).is_tri) ++wrong;
  for (int k = 0; k < 20; ++k) {
    StateModel p = rng.plane_wave(*frame2);
    while (is_zero(p.get_if<PlaneWave>()->p)) p = rng.plane_wave(*frame2);
    if (time_reversal_classify(p).is_tri) ++wrong;
  }
  for (const auto& kappa : enumerate_trs_fixed_points(2))
    if (!time_reversal_classify(StateModel::zak(kappa, rng.cell_point(2))).is_tri) ++wrong;
  for (int k = 0; k < 20; ++k) {
    std::vector<Rational> kappa = rng.cell_point(2);
    auto fixed = [](const Rational& q) { return q == 0 || q == Rational(1, 2); };
    while (fixed(kappa[0]) && fixed(kappa[1])) kappa = rng.cell_point(2);
    if (time_reversal_classify(StateModel::zak(kappa, rng.cell_point(2))).is_tri) ++wrong;
  }
  // Bloch: the classifier must agree with omega o c = conj omega on 50 probes.
  int disagree = 0, tri_seen = 0;
  for (int k = 0; k < 20; ++k) {
    const std::size_t d = 1 + static_cast<std::size_t>(k % 2);
    const FramePtr frame = d == 1 ? frame1 : frame2;
    StateModel s = rng.bloch_state(d, 2);
    if (k % 2 == 0) {
      std::vector<Rational> kappa(d);
      for (auto& q : kappa) q = rng.coin() ? Rational(1, 2) : Rational(0);
      s = StateModel::bloch(kappa, symmetric_data(rng, kappa));
    }
    std::vector<Monomial> probes = mixed_probes(rng, d, 40);
    for (int j = 0; j < 10; ++j) probes.push_back(Monomial::v(rng.exact_vector(d)));
    const bool verdict = time_reversal_classify(s).is_tri;
    const bool functional = time_reversal_functional_check(s, frame, probes, 1e-12).worst_value <= 1e-12;
    tri_seen += verdict;
    if (verdict != functional) ++disagree;
  }
  report(9, "time-reversal classification of plane-wave, Zak and Bloch states", wrong == 0 && disagree == 0 && tri_seen > 0,
         std::to_string(wrong) + " misclassified, " + std::to_string(disagree) + " Bloch disagreements, " +
             std::to_string(tri_seen) + " Bloch states symmetric");
}

void purity_witnesses() {
  RandomSource rng(909);
  const std::size_t d = 2;
  const FramePtr frame = Frame::identity(d);
  // Integral monomials commute pairwise; so do pure positions.
  std::set<Monomial> seen;
  std::vector<Monomial> lattice, positions;
  while (lattice.size() < 10) {
    const Monomial m{rng.integer_vector(d, 2), rng.integer_vector(d, 2)};
    if (seen.insert(m).second) lattice.push_back(m);
  }
  while (positions.size() < 10) {
    const Monomial m = Monomial::v(rng.exact_vector(d));
    if (seen.insert(m).second) positions.push_back(m);
  }
  double worst = 0.0;
  for (int k = 0; k < 5; ++k) {
    worst = std::max(worst, multiplicativity_check(rng.zak_state(d), frame, lattice, 1e-12).worst_value);
    worst = std::max(worst, multiplicativity_check(rng.plane_wave(*frame), frame, positions, 1e-12).worst_value);
  }
  const FramePtr f1 = Frame::identity(1);
  const CheckReport gap =
      multiplicativity_check(StateModel::tracial(), f1, {Monomial::v({ExactScalar(1)}), Monomial::v({ExactScalar(-1)})}, 1e-12);
  report(10, "Zak and plane-wave states multiplicative; tracial gap on v_1, v_-1", worst <= 1e-12 && gap.worst_value == 1.0,
         "pure residual " + num(worst) + ", tracial gap " + num(gap.worst_value));
}

void irregularity_witness() {
  RandomSource rng(1010);
  const FramePtr frame = Frame::identity(1);
  const BohrCharacter chi = BohrCharacter::padic({3});
  int fails = 0;
  for (int k = 0; k < 500; ++k) {
    const ExactVector x{ExactScalar(rng.rational())}, y{ExactScalar(rng.rational())};
    const auto lhs = character_eval(*frame, chi, x + y).angle;
    const auto rhs = character_eval(*frame, chi, x).angle + character_eval(*frame, chi, y).angle;
    if (!lhs.same_unit(rhs)) ++fails;
  }
  const StateModel s = StateModel::bohr(chi);
  const Complex target = std::polar(1.0, 4.0 * M_PI / 3.0);
  const Complex at_zero = evaluate(s, *frame, Monomial::v({ExactScalar(0)}));
  double value_err = 0.0, gap_err = 0.0, last_b = 1.0;
  bool decreasing = true;
  for (long n = 0; n <= 50; ++n) {
    const Rational b(1, 3 * (3 * n + 2));
    if (!(character_eval(*frame, chi, {ExactScalar(b)}).angle.same_unit(PhaseAngle::turns(Rational(2, 3))))) ++fails;
    const Complex w = evaluate(s, *frame, Monomial::v({ExactScalar(Rational(-b))}));
    value_err = std::max(value_err, std::abs(w - target));
    gap_err = std::max(gap_err, std::abs(std::abs(w - at_zero) - std::sqrt(3.0)));
    decreasing = decreasing && b.get_d() < last_b;
    last_b = b.get_d();
  }
  report(11, "3-adic character multiplicative and discontinuous at 0",
         fails == 0 && value_err <= 1e-12 && gap_err <= 1e-12 && decreasing,
         std::to_string(fails) + " exact failures, value error " + num(value_err) + ", gap error " + num(gap_err) +
             ", b_50 = " + num(last_b));
}

void path_demos() {
  RandomSource rng(1111);
  double rate_dev = 0.0, ends = 0.0;
  std::string ratios;
  for (std::size_t d = 1; d <= 2; ++d) {
    const FramePtr frame = Frame::identity(d);
    const std::vector<std::pair<PathKind, std::pair<StateModel, StateModel>>> cases = {
        {PathKind::PlaneWaveLine, {rng.plane_wave(*frame), StateModel::plane_wave(ExactVector(d))}},
        {PathKind::ZakLine, {rng.zak_state(d), rng.zak_state(d)}},
        {PathKind::BlochSlerp, {rng.bloch_state(d, 2), rng.bloch_state(d, 2)}},
    };
    for (const auto& [kind, endpoints] : cases) {
      const auto coarse = path_demo(kind, endpoints.first, endpoints.second, 50, frame);
      const auto fine = path_demo(kind, endpoints.first, endpoints.second, 100, frame);
      const double ratio = fine.max_distance / coarse.max_distance;
      rate_dev = std::max(rate_dev, std::abs(ratio - 0.5) / 0.5);
      ends = std::max({ends, coarse.endpoint_error, fine.endpoint_error});
      ratios += (ratios.empty() ? "" : " ") + num(ratio);
    }
  }
  report(12, "path demos: halving the step halves the max distance", rate_dev <= 0.2 && ends <= 1e-12,
         "ratios " + ratios + ", endpoint error " + num(ends));
}

}  // namespace

int main() {
  const std::vector<void (*)()> criteria = {weyl_laws,  symplectic_presentation, tracial_identity, ergodic_means,
                                            invariance, positivity,              gns_equivalence,  covariance,
                                            time_reversal, purity_witnesses,     irregularity_witness, path_demos};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i]();
    } catch (const std::exception& e) {
      report(static_cast<int>(i + 1), "criterion raised", false, e.what());
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
