#include "weylccr/verify.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

#include "weylccr/error.hpp"
#include "weylccr/gns.hpp"
#include "weylccr/random.hpp"

namespace weylccr {

namespace {

constexpr double kCoefficientTol = 1e-12;

/// Counts exact (angle-level) failures; worst_value is the failure count.
class Tally {
 public:
  explicit Tally(std::string name) { report_.check = std::move(name); }

  void record(bool ok, const std::string& probe) {
    ++trials_;
    if (ok) return;
    if (failures_ == 0) report_.worst_probe = probe;
    ++failures_;
  }

  CheckReport finish() {
    report_.worst_value = static_cast<double>(failures_);
    report_.pass = failures_ == 0;
    if (report_.worst_probe.empty()) report_.worst_probe = fmt::format("{} trials", trials_);
    return report_;
  }

 private:
  CheckReport report_;
  std::size_t failures_ = 0;
  std::size_t trials_ = 0;
};

CheckReport bounded(CheckReport r, double tol) {
  r.pass = r.worst_value <= tol;
  return r;
}

CheckReport numeric(const std::string& name) { CheckReport r;
  r.check = name;
  return r;
}

std::vector<FramePtr> frame_set(const RunConfig& cfg) {
  if (cfg.frame) return {cfg.frame};
  const ExactScalar tau = ExactScalar::tau();
  return {Frame::identity(1), Frame::identity(2), Frame::identity(3),
          Frame::make(ExactMatrix::diagonal({tau})),
          Frame::make(ExactMatrix::diagonal({ExactScalar(1), ExactScalar(2)}))};
}

FramePtr default_frame(const RunConfig& cfg, std::size_t d) { return cfg.frame ? cfg.frame : Frame::identity(d); }

std::string pair_probe(const Monomial& a, const Monomial& b) { return to_string(a) + " ; " + to_string(b); }

std::vector<Element> as_elements(const FramePtr& frame, const std::vector<Monomial>& monomials) {
  std::vector<Element> out;
  out.reserve(monomials.size());
  for (const auto& m : monomials) out.push_back(Element::monomial(frame, m));
  return out;
}

// ---------------------------------------------------------------------------

std::vector<CheckReport> suite_weyl(const RunConfig& cfg) {
  RandomSource rng(cfg.seed);
  const auto frames = frame_set(cfg);
  std::vector<CheckReport> out;

  Tally assoc("associativity (1000 monomial triples, exact phase)");
  Tally antihom("star anti-homomorphism (exact phase)");
  for (std::size_t k = 0; k < 1000; ++k) {
    const std::size_t d = frames[k % frames.size()]->dimension();
    const Monomial m1 = rng.monomial(d), m2 = rng.monomial(d), m3 = rng.monomial(d);
    const auto p12 = monomial_product(m1, m2);
    const auto left = monomial_product(p12.second, m3);
    const auto p23 = monomial_product(m2, m3);
    const auto right = monomial_product(m1, p23.second);
    assoc.record((p12.first + left.first).same_unit(p23.first + right.first) && left.second == right.second,
                 to_string(m1) + " ; " + to_string(m2) + " ; " + to_string(m3));
    // (m1 m2)^* = m2^* m1^*
    const auto adj12 = monomial_adjoint(p12.second);
    const auto a1 = monomial_adjoint(m1), a2 = monomial_adjoint(m2);
    const auto swapped = monomial_product(a2.second, a1.second);
    antihom.record((-p12.first + adj12.first)
                           .same_unit(a1.first + a2.first + swapped.first) &&
                       adj12.second == swapped.second,
                   pair_probe(m1, m2));
  }
  out.push_back(assoc.finish());
  out.push_back(antihom.finish());

  auto star = numeric("star laws on elements (coefficient residual)");
  auto involution = numeric("adjoint involution on 100 elements");
  for (std::size_t k = 0; k < 100; ++k) {
    const auto& frame = frames[k % frames.size()];
    const Element x = rng.element(frame, 5), y = rng.element(frame, 5);
    star.observe(adjoint(x * y).distance(adjoint(y) * adjoint(x)), x.to_string() + " ; " + y.to_string());
    involution.observe(adjoint(adjoint(x)).distance(x), x.to_string());
  }
  out.push_back(bounded(star, kCoefficientTol));
  out.push_back(bounded(involution, kCoefficientTol));

  Tally sympl("symplectic presentation w_z w_z' = e^{i sigma} w_{z+z'} (500 pairs)");
  Tally gen_adj("w_z^* = w_{-z}");
  for (std::size_t k = 0; k < 500; ++k) {
    const std::size_t d = frames[k % frames.size()]->dimension();
    const PhasePoint z{rng.exact_vector(d), rng.exact_vector(d)};
    const PhasePoint zp{rng.exact_vector(d), rng.exact_vector(d)};
    const ExactScalar half = ExactScalar(Rational(-1, 2)) * ExactScalar::tau();
    const PhaseAngle wz(half * dot(z.a, z.b));
    const PhaseAngle wzp(half * dot(zp.a, zp.b));
    const auto prod = monomial_product(Monomial{z.a, z.b}, Monomial{zp.a, zp.b});
    const PhasePoint sum = z + zp;
    const PhaseAngle wsum(half * dot(sum.a, sum.b));
    sympl.record((wz + wzp + prod.first).same_unit(symplectic(z, zp) + wsum) && prod.second == Monomial{sum.a, sum.b},
                 to_string(Monomial{z.a, z.b}) + " ; " + to_string(Monomial{zp.a, zp.b}));
    const auto adj = monomial_adjoint(Monomial{z.a, z.b});
    const PhaseAngle wneg(half * dot(-z.a, -z.b));
    gen_adj.record((-wz + adj.first).same_unit(wneg), to_string(Monomial{z.a, z.b}));
  }
  out.push_back(sympl.finish());
  out.push_back(gen_adj.finish());

  Tally groups("automorphism group laws (exact phase)");
  Tally homs("automorphisms preserve products (exact phase)");
  for (std::size_t k = 0; k < 200; ++k) {
    const auto& frame = *frames[k % frames.size()];
    const std::size_t d = frame.dimension();
    const Monomial m = rng.monomial(d), n = rng.monomial(d);
    const ExactVector l1 = rng.exact_vector(d), l2 = rng.exact_vector(d);
    const Rational t1 = rng.rational(), t2 = rng.rational();
    const std::vector<std::pair<AutomorphismSpec, std::pair<AutomorphismSpec, AutomorphismSpec>>> laws = {
        {SpaceTranslation{l1 + l2}, {SpaceTranslation{l1}, SpaceTranslation{l2}}},
        {MomentumTranslation{l1 + l2}, {MomentumTranslation{l1}, MomentumTranslation{l2}}},
        {FreeDynamics{t1 + t2}, {FreeDynamics{t1}, FreeDynamics{t2}}},
    };
    for (const auto& [combined, parts] : laws) {
      const auto first = apply_automorphism(parts.second, frame, m);
      const auto second = apply_automorphism(parts.first, frame, first.monomial);
      const auto direct = apply_automorphism(combined, frame, m);
      groups.record((first.phase + second.phase).same_unit(direct.phase) && second.monomial == direct.monomial,
                    describe(combined) + " on " + to_string(m));
      const auto mn = monomial_product(m, n);
      const auto img_mn = apply_automorphism(combined, frame, mn.second);
      const auto img_m = apply_automorphism(combined, frame, m);
      const auto img_n = apply_automorphism(combined, frame, n);
      const auto img_prod = monomial_product(img_m.monomial, img_n.monomial);
      homs.record((mn.first + img_mn.phase).same_unit(img_m.phase + img_n.phase + img_prod.first) &&
                      img_mn.monomial == img_prod.second,
                  describe(combined) + " on " + pair_probe(m, n));
    }
    const auto unit = apply_automorphism(FreeDynamics{t1}, frame, Monomial::unit(d));
    homs.record(unit.phase.is_trivial() && unit.monomial.is_unit(), "unit under free dynamics");
  }
  out.push_back(groups.finish());
  out.push_back(homs.finish());

  auto trs = numeric("time reversal: involutive, multiplicative, antilinear");
  for (std::size_t k = 0; k < 100; ++k) {
    const auto& frame = frames[k % frames.size()];
    const Element x = rng.element(frame, 4), y = rng.element(frame, 4);
    const Complex c = rng.coefficient();
    const TimeReversal c_op;
    trs.observe(apply_automorphism(c_op, apply_automorphism(c_op, x)).distance(x), "c(c(x)) " + x.to_string());
    trs.observe(apply_automorphism(c_op, x * y).distance(apply_automorphism(c_op, x) * apply_automorphism(c_op, y)),
                "c(xy) " + x.to_string() + " ; " + y.to_string());
    trs.observe(apply_automorphism(c_op, x * c).distance(apply_automorphism(c_op, x) * std::conj(c)),
                "c(cx) " + x.to_string());
  }
  out.push_back(bounded(trs, kCoefficientTol));
  return out;
}

// ---------------------------------------------------------------------------

struct SlopeFit {
  double slope = 0.0;
  std::vector<double> magnitudes;
};

SlopeFit box_average_decay(const Element& x, const Monomial& m, const std::vector<double>& widths, double alpha) {
  SlopeFit fit;
  std::vector<double> lx, ly;
  for (double L : widths) {
    const auto samples = static_cast<std::size_t>(std::ceil(40.0 * L * std::max(1.0, std::abs(alpha))));
    const double mag = std::abs(numeric_box_average(x, L, samples).coefficient(m));
    fit.magnitudes.push_back(mag);
    lx.push_back(std::log10(L));
    ly.push_back(std::log10(mag));
  }
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / static_cast<double>(lx.size());
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / static_cast<double>(ly.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  fit.slope = sxy / sxx;
  return fit;
}

std::vector<CheckReport> suite_ergodic(const RunConfig& cfg) {
  RandomSource rng(cfg.seed + 1);
  const auto frames = frame_set(cfg);
  std::vector<CheckReport> out;

  auto idem = numeric("ergodic means idempotent");
  auto linear = numeric("ergodic means linear");
  auto inv = numeric("ergodic means invariant under their symmetry groups");
  for (std::size_t k = 0; k < 100; ++k) {
    const auto& frame = frames[k % frames.size()];
    const std::size_t d = frame->dimension();
    Element x = rng.element(frame, 6);
    // Mix in lattice-commensurate terms so the lattice projections are not trivially zero.
    x.add_term(Monomial{rng.integer_vector(d, 2), rng.exact_vector(d)}, rng.coefficient());
    x.add_term(Monomial{rng.integer_vector(d, 2), rng.integer_vector(d, 2)}, rng.coefficient());
    const Element y = rng.element(frame, 6);
    const Complex c = rng.coefficient();
    const std::vector<std::function<Element(const Element&)>> means = {ergodic_mean, ergodic_mean_lattice,
                                                                       ergodic_mean_zak};
    const std::vector<AutomorphismSpec> symmetries = {
        SpaceTranslation{rng.exact_vector(d)}, SpaceTranslation{rng.integer_vector(d, 3)},
        ZakTranslation{rng.integer_vector(d, 3), rng.integer_vector(d, 3)}};
    for (std::size_t i = 0; i < means.size(); ++i) {
      idem.observe(means[i](means[i](x)).distance(means[i](x)), x.to_string());
      linear.observe(means[i](x + y * c).distance(means[i](x) + means[i](y) * c), x.to_string());
      inv.observe(means[i](apply_automorphism(symmetries[i], x)).distance(means[i](x)),
                  describe(symmetries[i]) + " on " + x.to_string());
    }
  }
  out.push_back(bounded(idem, kCoefficientTol));
  out.push_back(bounded(linear, kCoefficientTol));
  out.push_back(bounded(inv, kCoefficientTol));

  // Box averages in d = 1 with E = [tau], so the ambient momentum of u_a is a.
  {
    const ExactScalar tau = ExactScalar::tau();
    const FramePtr frame = Frame::make(ExactMatrix::diagonal({tau}));
    const std::vector<double> widths = {10.0, 100.0, 1000.0};
    auto bound = numeric("box average |coef| <= 2/(L |alpha|) for a != 0");
    auto slope = numeric("box average log-log slope within 20% of -1");
    auto exact_v = numeric("box average reproduces a = 0 terms");
    for (const Rational& a : {Rational(1), Rational(3, 2), Rational(-2, 3)}) {
      const Monomial m{ExactVector{ExactScalar(a)}, ExactVector{ExactScalar(Rational(1, 3))}};
      const Monomial vb = Monomial::v(ExactVector{ExactScalar(Rational(1, 2))});
      Element x = Element::monomial(frame, m);
      x.add_term(vb, Complex(0.5, -0.25));
      const double alpha = a.get_d();
      const SlopeFit fit = box_average_decay(x, m, widths, alpha);
      for (std::size_t i = 0; i < widths.size(); ++i)
        bound.observe(fit.magnitudes[i] * widths[i] * std::abs(alpha) / 2.0,
                      fmt::format("a={} L={}", to_string(a), widths[i]));
      slope.observe(std::abs(fit.slope + 1.0), fmt::format("a={} slope={:.4f}", to_string(a), fit.slope));
      const Element avg = numeric_box_average(x, 10.0, 400);
      exact_v.observe(std::abs(avg.coefficient(vb) - Complex(0.5, -0.25)), "v(1/2)");
    }
    out.push_back(bounded(bound, 1.0));
    out.push_back(bounded(slope, 0.2));
    out.push_back(bounded(exact_v, 0.0));
  }

  auto l2 = numeric("tracial l2 identity t(x^* x) = sum |c|^2 (200 elements)");
  const StateModel trace = StateModel::tracial();
  for (std::size_t k = 0; k < 200; ++k) {
    const auto& frame = frames[k % frames.size()];
    const Element x = rng.element(frame, 10);
    double sum = 0.0;
    for (const auto& [m, c] : x.terms()) sum += std::norm(c);
    l2.observe(std::abs(evaluate(trace, adjoint(x) * x) - sum), x.to_string());
  }
  out.push_back(bounded(l2, kCoefficientTol));

  auto norm_bound = numeric("tracial bound |l|^2 + |l'|^2 for distinct monomials");
  for (std::size_t k = 0; k < 100; ++k) {
    const auto& frame = frames[k % frames.size()];
    const auto ms = rng.distinct_monomials(frame->dimension(), 2);
    const Complex l = rng.coefficient(), lp = rng.coefficient();
    const Element x = Element::monomial(frame, ms[0], l) - Element::monomial(frame, ms[1], lp);
    norm_bound.observe(std::abs(evaluate(trace, adjoint(x) * x) - (std::norm(l) + std::norm(lp))), pair_probe(ms[0], ms[1]));
  }
  out.push_back(bounded(norm_bound, kCoefficientTol));
  return out;
}

// ---------------------------------------------------------------------------

std::vector<std::pair<std::string, StateModel>> family_zoo(RandomSource& rng, const Frame& frame) {
  const std::size_t d = frame.dimension();
  std::vector<unsigned long> primes(d, 3);
  std::vector<std::pair<std::string, StateModel>> zoo = {
      {"plane_wave", rng.plane_wave(frame)},
      {"bohr_padic", StateModel::bohr(BohrCharacter::padic(primes))},
      {"bloch", rng.bloch_state(d, 2)},
      {"zak", rng.zak_state(d)},
      {"fock", StateModel::fock()},
      {"tracial", StateModel::tracial()},
  };
  zoo.emplace_back("mixture", StateModel::mixture({0.5, 0.3, 0.2}, {zoo[0].second, zoo[2].second, zoo[4].second}));
  return zoo;
}

std::vector<Monomial> gram_probes(RandomSource& rng, std::size_t d, std::size_t count) {
  RandomSource coarse(rng.below(1u << 31), 3, 2);
  return coarse.distinct_monomials(d, count);
}

std::vector<CheckReport> suite_states(const RunConfig& cfg) {
  RandomSource rng(cfg.seed + 2);
  std::vector<CheckReport> out;
  std::vector<FramePtr> frames = cfg.frame ? std::vector<FramePtr>{cfg.frame}
                                           : std::vector<FramePtr>{Frame::identity(1), Frame::identity(2)};

  auto unit = numeric("omega(1) = 1 for every family");
  auto psd = numeric("gram matrices positive semidefinite (20 probes)");
  auto herm = numeric("gram matrices hermitian");
  auto xx = numeric("omega(x^* x) real and nonnegative (100 x per family)");
  auto vanish = numeric("vanishing structure off the invariant subalgebra");
  for (const auto& frame : frames) {
    const std::size_t d = frame->dimension();
    for (const auto& [name, s] : family_zoo(rng, *frame)) {
      unit.observe(std::abs(evaluate(s, Element::unit(frame)) - 1.0), name);
      const auto report = gram_psd_check(s, frame, gram_probes(rng, d, 20), cfg.tolerance);
      psd.observe(-report.min_eigenvalue, name);
      herm.observe(report.hermitian_residual, name);
      for (std::size_t k = 0; k < 100; ++k) {
        const Element x = rng.element(frame, 4);
        const Complex v = evaluate(s, adjoint(x) * x);
        xx.observe(std::max(std::abs(v.imag()), -v.real()), name + " " + x.to_string());
      }
      for (std::size_t k = 0; k < 20; ++k) {
        const Monomial m{make_vector(std::vector<Rational>(d, rng.fractional_rational())), rng.exact_vector(d)};
        const bool vanishes = name == "plane_wave" || name == "bohr_padic" || name == "bloch" || name == "zak" ||
                              name == "tracial";
        if (vanishes) vanish.observe(std::abs(evaluate(s, *frame, m)), name + " " + to_string(m));
      }
    }
  }
  out.push_back(bounded(unit, kCoefficientTol));
  out.push_back(bounded(psd, cfg.tolerance));
  out.push_back(bounded(herm, kCoefficientTol));
  out.push_back(bounded(xx, cfg.tolerance));
  out.push_back(bounded(vanish, 0.0));

  // Invariances claimed by each family.
  auto exact_inv = numeric("plane-wave and Bohr states invariant under tau_lambda and Phi_t (exact)");
  auto bloch_inv = numeric("Bloch states invariant under lattice translations");
  auto zak_inv = numeric("Zak states invariant under tau_gamma theta_gamma'");
  for (const auto& frame : frames) {
    const std::size_t d = frame->dimension();
    std::vector<Element> samples;
    for (std::size_t k = 0; k < 100; ++k) samples.push_back(rng.element(frame, 3));
    const std::vector<StateModel> translation_invariant = {
        rng.plane_wave(*frame), StateModel::bohr(BohrCharacter::padic(std::vector<unsigned long>(d, 5))),
        StateModel::bohr(BohrCharacter::product({BohrCharacter::padic(std::vector<unsigned long>(d, 2)),
                                                 BohrCharacter::continuous(frame->dual() * rng.exact_vector(d))}))};
    for (const auto& s : translation_invariant) {
      for (const AutomorphismSpec& spec :
           {AutomorphismSpec{SpaceTranslation{rng.exact_vector(d)}}, AutomorphismSpec{FreeDynamics{rng.rational()}}}) {
        const auto r = invariance_check(s, spec, samples, 0.0);
        exact_inv.observe(r.worst_value, r.check + " " + r.worst_probe);
      }
    }
    for (std::size_t k = 0; k < 10; ++k) {
      std::vector<Element> lattice_samples;
      for (std::size_t j = 0; j < 10; ++j) {
        Element x(frame);
        x.add_term(rng.lattice_momentum_monomial(d, 2), rng.coefficient());
        x.add_term(rng.monomial(d), rng.coefficient());
        lattice_samples.push_back(std::move(x));
      }
      const auto rb = invariance_check(rng.bloch_state(d, 2), SpaceTranslation{rng.integer_vector(d, 4)}, lattice_samples,
                                       kCoefficientTol);
      bloch_inv.observe(rb.worst_value, rb.worst_probe);
      const auto rz = invariance_check(rng.zak_state(d), ZakTranslation{rng.integer_vector(d, 4), rng.integer_vector(d, 4)},
                                       lattice_samples, kCoefficientTol);
      zak_inv.observe(rz.worst_value, rz.worst_probe);
    }
  }
  out.push_back(bounded(exact_inv, 0.0));
  out.push_back(bounded(bloch_inv, kCoefficientTol));
  out.push_back(bounded(zak_inv, kCoefficientTol));

  auto fock_gauss = numeric("Fock state on Weyl generators: omega(w_z) = e^{-|z|^2/4}");
  for (std::size_t k = 0; k < 100; ++k) {
    const auto& frame = frames[k % frames.size()];
    const std::size_t d = frame->dimension();
    const PhasePoint z{rng.exact_vector(d), rng.exact_vector(d)};
    const double norm2 = (frame->momentum_norm2(z.a) + frame->position_norm2(z.b)).evaluate();
    fock_gauss.observe(std::abs(evaluate(StateModel::fock(), weyl_generator(frame, z)) - std::exp(-norm2 / 4.0)),
                       to_string(Monomial{z.a, z.b}));
  }
  out.push_back(bounded(fock_gauss, kCoefficientTol));

  {
    const FramePtr frame = Frame::make(ExactMatrix::diagonal({ExactScalar::tau()}));
    const Element probe = Element::u(frame, ExactVector{ExactScalar(1)});
    const auto r = invariance_check(StateModel::fock(), FreeDynamics{Rational(1)}, {probe}, cfg.tolerance);
    auto fock = numeric("Fock state breaks free-dynamics invariance: |e^{-1/2} - e^{-1/4}|");
    fock.observe(std::abs(r.worst_value - std::abs(std::exp(-0.5) - std::exp(-0.25))), fmt::format("{:.9f}", r.worst_value));
    fock = bounded(fock, 1e-6);
    fock.pass = fock.pass && !r.pass;
    out.push_back(fock);
  }

  // Purity witnesses.
  {
    const FramePtr frame = default_frame(cfg, 2);
    const std::size_t d = frame->dimension();
    std::vector<Monomial> zak_probes, v_probes;
    for (std::size_t k = 0; k < 8; ++k) {
      zak_probes.push_back(Monomial{rng.integer_vector(d, 3), rng.integer_vector(d, 3)});
      v_probes.push_back(Monomial::v(rng.exact_vector(d)));
    }
    auto mult = numeric("multiplicativity of Zak and plane-wave states on commuting probes");
    const auto rz = multiplicativity_check(rng.zak_state(d), frame, zak_probes, kCoefficientTol);
    mult.observe(rz.worst_value, rz.check + " " + rz.worst_probe);
    const auto rp = multiplicativity_check(rng.plane_wave(*frame), frame, v_probes, kCoefficientTol);
    mult.observe(rp.worst_value, rp.check + " " + rp.worst_probe);
    out.push_back(bounded(mult, kCoefficientTol));

    ExactVector one(d), minus_one(d);
    one[0] = ExactScalar(1);
    minus_one[0] = ExactScalar(-1);
    const auto rt = multiplicativity_check(StateModel::tracial(), frame, {Monomial::v(one), Monomial::v(minus_one)},
                                           kCoefficientTol);
    auto tr = numeric("tracial state fails multiplicativity with gap exactly 1");
    tr.observe(std::abs(rt.worst_value - 1.0), rt.worst_probe);
    tr = bounded(tr, 0.0);
    tr.pass = tr.pass && !rt.pass;
    out.push_back(tr);
  }

  // Irregularity witness from the 3-adic character.
  {
    const FramePtr frame = Frame::identity(1);
    const BohrCharacter chi = BohrCharacter::padic({3});
    Tally mult("3-adic character multiplicative on 500 rational pairs (exact)");
    for (std::size_t k = 0; k < 500; ++k) {
      const ExactVector x = rng.exact_vector(1), y = rng.exact_vector(1);
      const auto cx = character_eval(*frame, chi, x), cy = character_eval(*frame, chi, y);
      const auto cxy = character_eval(*frame, chi, x + y);
      mult.record(cxy.angle.same_unit(cx.angle + cy.angle), to_string(x) + " ; " + to_string(y));
    }
    out.push_back(mult.finish());
    auto seq = numeric("3-adic state constant e^{4 pi i/3} on b_n -> 0; gap sqrt(3)");
    const Complex target = std::polar(1.0, 2.0 * kTwoPi / 3.0);
    const StateModel s = StateModel::bohr(chi);
    for (long n = 0; n <= 50; ++n) {
      const Rational b(1, 3 * (3 * n + 2));
      // omega(v_{-b_n}) = chi(b_n)
      const Complex value = evaluate(s, *frame, Monomial::v(ExactVector{ExactScalar(Rational(-b))}));
      seq.observe(std::abs(value - target), "n=" + std::to_string(n));
    }
    seq.observe(std::abs(std::abs(target - 1.0) - std::sqrt(3.0)), "gap");
    out.push_back(bounded(seq, kCoefficientTol));
  }

  // Quasi-momentum identity and mixture affinity.
  {
    auto qm = numeric("Bloch quasi-momentum identity omega((v_g - e^{-i k.g})^*(v_g - e^{-i k.g})) = 0");
    auto affine = numeric("mixtures evaluate affinely");
    for (const auto& frame : frames) {
      const std::size_t d = frame->dimension();
      for (std::size_t k = 0; k < 20; ++k) {
        const StateModel s = rng.bloch_state(d, 2);
        const auto& kappa = s.get_if<Bloch>()->kappa;
        const ExactVector gamma = rng.integer_vector(d, 4);
        Element x = Element::v(frame, gamma);
        x -= Element::unit(frame) * (-pairing(make_vector(kappa), gamma)).to_complex();
        qm.observe(std::abs(evaluate(s, adjoint(x) * x)), to_string(gamma));

        const StateModel a = rng.zak_state(d), b = rng.plane_wave(*frame);
        const StateModel mix = StateModel::mixture({0.25, 0.5, 0.25}, {s, a, b});
        const Element y = rng.element(frame, 4);
        affine.observe(std::abs(evaluate(mix, y) - (0.25 * evaluate(s, y) + 0.5 * evaluate(a, y) + 0.25 * evaluate(b, y))),
                       y.to_string());
      }
    }
    out.push_back(bounded(qm, kCoefficientTol));
    out.push_back(bounded(affine, kCoefficientTol));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<CheckReport> suite_covariance(const RunConfig& cfg) {
  RandomSource rng(cfg.seed + 3);
  auto cov = numeric("covariance omega_(k+g',P) = omega_(k, lambda_g'(P)) (20 triples x 30 probes)");
  for (std::size_t k = 0; k < 20; ++k) {
    const std::size_t d = cfg.frame ? cfg.frame->dimension() : 1 + k % 2;
    const FramePtr frame = default_frame(cfg, d);
    const std::vector<Rational> kappa = rng.cell_point(d);
    const FourierData fhat = rng.fourier_data(d, 1);
    FourierIndex gp(d);
    for (auto& g : gp) g = rng.between(-3, 3);
    std::vector<Monomial> probes;
    for (std::size_t j = 0; j < 30; ++j)
      probes.push_back(j % 3 == 2 ? rng.monomial(d) : rng.lattice_momentum_monomial(d, 2));
    const auto r = covariance_check(kappa, fhat, gp, frame, probes, kCoefficientTol);
    cov.observe(r.worst_value, r.worst_probe);
  }
  return {bounded(cov, kCoefficientTol)};
}

// ---------------------------------------------------------------------------

/// Fourier data with conj f(-g) = f(g - 2 kappa): f = c + conj(c(-. - 2 kappa)).
FourierData symmetric_fourier(RandomSource& rng, const FourierIndex& two_kappa) {
  const std::size_t d = two_kappa.size();
  FourierData seed = rng.fourier_data(d, 1);
  FourierData f = seed;
  for (const auto& [g, c] : seed) {
    FourierIndex h(d);
    for (std::size_t i = 0; i < d; ++i) h[i] = -g[i] - two_kappa[i];
    f[h] += std::conj(c);
  }
  for (auto it = f.begin(); it != f.end();) it = std::abs(it->second) < 1e-14 ? f.erase(it) : std::next(it);
  const double norm = std::sqrt(fourier_norm2(f));
  for (auto& [g, c] : f) c /= norm;
  return f;
}

std::vector<CheckReport> suite_tri(const RunConfig& cfg) {
  RandomSource rng(cfg.seed + 4);
  const std::size_t d = cfg.frame ? cfg.frame->dimension() : 2;
  const FramePtr frame = default_frame(cfg, d);
  std::vector<CheckReport> out;

  const auto fixed = enumerate_trs_fixed_points(d);
  Tally fp(fmt::format("fixed points of kappa -> -kappa: 2^{} = {} found", d, fixed.size()));
  fp.record(fixed.size() == (std::size_t{1} << d), "cardinality");
  for (const auto& k : fixed) {
    bool ok = true;
    for (const auto& x : k) ok = ok && Rational(x * 2).get_den() == 1 && x >= 0 && x < 1;
    fp.record(ok, to_string(make_vector(k)));
  }
  out.push_back(fp.finish());

  Tally pw("plane wave TRI iff p = 0");
  pw.record(time_reversal_classify(StateModel::plane_wave(ExactVector(d))).is_tri, "p = 0");
  for (std::size_t k = 0; k < 20; ++k) {
    ExactVector p = frame->dual() * rng.exact_vector(d);
    if (is_zero(p)) p[0] = ExactScalar(Rational(1, 2));
    pw.record(!time_reversal_classify(StateModel::plane_wave(p)).is_tri, to_string(p));
  }
  out.push_back(pw.finish());

  Tally zak("Zak TRI iff kappa in {0,1/2}^d");
  for (const auto& k : fixed) zak.record(time_reversal_classify(StateModel::zak(k, rng.cell_point(d))).is_tri, to_string(make_vector(k)));
  for (std::size_t k = 0; k < 20; ++k) {
    std::vector<Rational> kappa = rng.cell_point(d);
    kappa[rng.below(d)] = rng.fractional_rational();
    if (Rational(kappa[0] * 2).get_den() == 1 && (d == 1 || Rational(kappa[d - 1] * 2).get_den() == 1))
      kappa[0] = Rational(1, 3);
    bool fixed_point = true;
    for (const auto& x : kappa) fixed_point = fixed_point && Rational(x * 2).get_den() == 1;
    zak.record(time_reversal_classify(StateModel::zak(kappa, rng.cell_point(d))).is_tri == fixed_point,
               to_string(make_vector(kappa)));
  }
  out.push_back(zak.finish());

  Tally bloch("Bloch TRI criterion agrees with omega o c = conj omega (50 probes)");
  std::size_t tri_count = 0;
  for (std::size_t k = 0; k < 50; ++k) {
    StateModel s = rng.bloch_state(d, 1);
    if (k % 2 == 0) {
      const auto& kappa = fixed[rng.below(fixed.size())];
      FourierIndex two_kappa(d);
      for (std::size_t i = 0; i < d; ++i) two_kappa[i] = Rational(kappa[i] * 2).get_num().get_si();
      s = StateModel::bloch(kappa, symmetric_fourier(rng, two_kappa));
    } else if (k % 4 == 1) {
      s = StateModel::bloch(fixed[rng.below(fixed.size())], rng.fourier_data(d, 1));
    }
    std::vector<Monomial> probes;
    for (std::size_t j = 0; j < 50; ++j)
      probes.push_back(j % 5 == 4   ? rng.monomial(d)
                       : j % 5 == 3 ? Monomial::v(rng.exact_vector(d))
                                    : rng.lattice_momentum_monomial(d, 1));
    const bool functional = time_reversal_functional_check(s, frame, probes, 1e-10).pass;
    const bool criterion = time_reversal_classify(s).is_tri;
    tri_count += criterion ? 1 : 0;
    bloch.record(functional == criterion, json_io::to_json(s).dump());
  }
  auto r = bloch.finish();
  r.check += fmt::format(" [{} TRI / 50]", tri_count);
  out.push_back(r);
  return out;
}

// ---------------------------------------------------------------------------

std::vector<CheckReport> suite_zak(const RunConfig& cfg) {
  RandomSource rng(cfg.seed + 5);
  std::vector<CheckReport> out;

  // Double character average over a box of whole periods of both characters, where the finite average is exact.
  auto oracle = numeric("Zak ergodic mean matches the double character average over whole periods");
  const FramePtr line = Frame::identity(1);
  for (std::size_t k = 0; k < 40; ++k) {
    const Monomial m{ExactVector{k % 2 ? ExactScalar(rng.rational()) : ExactScalar(rng.between(-3, 3))},
                     ExactVector{k % 3 ? ExactScalar(rng.rational()) : ExactScalar(rng.between(-3, 3))}};
    auto character_average = [](const Rational& r, double sign) {
      const long periods = 50 * r.get_den().get_si();
      Complex acc = 0.0;
      for (long g = 0; g < periods; ++g) {
        const Rational turns = r * g;
        const double frac = Rational(turns - floor_of(turns)).get_d();
        acc += std::polar(1.0, sign * kTwoPi * frac);
      }
      return acc / static_cast<double>(periods);
    };
    // tau_gamma theta_gamma'(u_a v_b) = e^{i gamma'.beta} e^{-i alpha.gamma} u_a v_b
    const Complex average = character_average(m.a[0].as_rational(), -1.0) * character_average(m.b[0].as_rational(), 1.0);
    const Element proj = ergodic_mean_zak(Element::monomial(line, m));
    oracle.observe(std::abs(proj.coefficient(m) - average), to_string(m));
  }
  out.push_back(bounded(oracle, 1e-10));

  const std::size_t d = cfg.frame ? cfg.frame->dimension() : 2;
  const FramePtr frame = default_frame(cfg, d);
  auto origin = numeric("Zak(0,0) equals 1 on every lattice pair");
  const StateModel z0 = StateModel::zak(std::vector<Rational>(d, 0), std::vector<Rational>(d, 0));
  for (std::size_t k = 0; k < 50; ++k) {
    const Monomial m{rng.integer_vector(d, 5), rng.integer_vector(d, 5)};
    origin.observe(std::abs(evaluate(z0, *frame, m) - 1.0), to_string(m));
  }
  out.push_back(bounded(origin, 0.0));

  auto through_mean = numeric("Zak states factor through the Zak ergodic mean");
  auto mult = numeric("Zak states multiplicative on Z_Gamma");
  for (std::size_t k = 0; k < 20; ++k) {
    const StateModel s = rng.zak_state(d);
    Element x = rng.element(frame, 4);
    x.add_term(Monomial{rng.integer_vector(d, 2), rng.integer_vector(d, 2)}, rng.coefficient());
    through_mean.observe(std::abs(evaluate(s, x) - evaluate(s, ergodic_mean_zak(x))), x.to_string());
    std::vector<Monomial> probes;
    for (std::size_t j = 0; j < 6; ++j) probes.push_back(Monomial{rng.integer_vector(d, 3), rng.integer_vector(d, 3)});
    const auto r = multiplicativity_check(s, frame, probes, kCoefficientTol);
    mult.observe(r.worst_value, r.worst_probe);
  }
  out.push_back(bounded(through_mean, kCoefficientTol));
  out.push_back(bounded(mult, kCoefficientTol));
  return out;
}

// ---------------------------------------------------------------------------

std::vector<CheckReport> suite_gns(const RunConfig& cfg) {
  RandomSource rng(cfg.seed + 6);
  std::vector<CheckReport> out;

  auto equiv = numeric("GNS vector state equals Bloch closed form (50 states x 50 monomials)");
  auto stable = numeric("GNS reconstruction stable under window enlargement");
  for (std::size_t k = 0; k < 50; ++k) {
    const std::size_t d = cfg.frame ? cfg.frame->dimension() : 1 + k % 2;
    if (d > 2) break;
    const FramePtr frame = default_frame(cfg, d);
    const FourierWindow window = FourierWindow::cube(d, 6);
    const FourierWindow bigger = FourierWindow::cube(d, 8);
    const StateModel s = rng.bloch_state(d, 2);
    const auto& bloch = *s.get_if<Bloch>();
    for (std::size_t j = 0; j < 50; ++j) {
      const Monomial m = rng.lattice_momentum_monomial(d, 3);
      const Complex matrix = bloch_vector_state(bloch.kappa, bloch.fhat, m, window);
      equiv.observe(std::abs(matrix - evaluate(s, *frame, m)), to_string(m));
      if (j < 5) stable.observe(std::abs(matrix - bloch_vector_state(bloch.kappa, bloch.fhat, m, bigger)), to_string(m));
    }
  }
  out.push_back(bounded(equiv, 1e-10));
  out.push_back(bounded(stable, 1e-12));

  Tally rho("rho_kappa(v_gamma) = e^{-i kappa.gamma} I exactly");
  for (std::size_t k = 0; k < 20; ++k) {
    const std::size_t d = 1 + k % 2;
    const FourierWindow window = FourierWindow::cube(d, 3);
    const auto kappa = rng.cell_point(d);
    const ExactVector gamma = rng.integer_vector(d, 4);
    const auto op = rep_rho_kappa(kappa, Monomial::v(gamma), window);
    const Complex phase = (-pairing(make_vector(kappa), gamma)).to_complex();
    const Eigen::MatrixXcd expected = phase * Eigen::MatrixXcd::Identity(op.matrix.rows(), op.matrix.cols());
    rho.record(op.matrix == expected, to_string(gamma));
  }
  out.push_back(rho.finish());

  auto weyl = numeric("truncated Weyl relation F S = e^{i g'.b} S F on the interior");
  for (std::size_t k = 0; k < 20; ++k) {
    const std::size_t d = 1 + k % 2;
    const FourierWindow window = FourierWindow::cube(d, 4);
    FourierIndex shift(d);
    for (auto& g : shift) g = rng.between(-2, 2);
    const ExactVector b = rng.exact_vector(d);
    weyl.observe(weyl_relation_residual(shift, b, window).interior, to_string(b));
  }
  out.push_back(bounded(weyl, kCoefficientTol));

  auto pw = numeric("plane-wave vector state matches closed form");
  for (std::size_t k = 0; k < 30; ++k) {
    const std::size_t d = 1 + k % 2;
    const FramePtr frame = Frame::identity(d);
    const ExactVector p_coords = rng.exact_vector(d);
    const ExactVector p = frame->dual() * p_coords;
    const Monomial m = k % 3 ? Monomial::v(rng.exact_vector(d)) : rng.monomial(d);
    const std::vector<ExactVector> momenta = {p_coords, p_coords + m.a, p_coords - m.a};
    pw.observe(std::abs(plane_wave_vector_state(*frame, p, m, momenta) - evaluate(StateModel::plane_wave(p), *frame, m)),
               to_string(m));
  }
  out.push_back(bounded(pw, kCoefficientTol));
  return out;
}

// ---------------------------------------------------------------------------

std::vector<CheckReport> suite_paths(const RunConfig& cfg) {
  RandomSource rng(cfg.seed + 7);
  std::vector<CheckReport> out;
  const std::size_t d = cfg.frame ? cfg.frame->dimension() : 1;
  const FramePtr frame = default_frame(cfg, d);
  std::vector<std::pair<PathKind, std::pair<StateModel, StateModel>>> cases = {
      {PathKind::PlaneWaveLine, {rng.plane_wave(*frame), StateModel::plane_wave(ExactVector(d))}},
      {PathKind::ZakLine, {rng.zak_state(d), rng.zak_state(d)}},
      {PathKind::BlochSlerp, {rng.bloch_state(d, 2), rng.bloch_state(d, 2)}},
  };
  for (const auto& [kind, ends] : cases) {
    const auto coarse = path_demo(kind, ends.first, ends.second, 50, frame);
    const auto fine = path_demo(kind, ends.first, ends.second, 100, frame);
    auto rate = numeric(to_string(kind) + ": halving the step halves the max consecutive distance");
    const double ratio = fine.max_distance / coarse.max_distance;
    rate.observe(std::abs(ratio - 0.5) / 0.5, fmt::format("ratio {:.4f}", ratio));
    out.push_back(bounded(rate, 0.2));
    auto ends_check = numeric(to_string(kind) + ": endpoints reproduced");
    ends_check.observe(std::max(coarse.endpoint_error, fine.endpoint_error), "t in {0, 1}");
    out.push_back(bounded(ends_check, kCoefficientTol));
  }
  return out;
}

using SuiteFn = std::vector<CheckReport> (*)(const RunConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"weyl", suite_weyl},   {"ergodic", suite_ergodic}, {"states", suite_states}, {"covariance", suite_covariance},
      {"tri", suite_tri},     {"zak", suite_zak},         {"gns", suite_gns},       {"paths", suite_paths},
  };
  return suites;
}

}  // namespace

bool SuiteReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.pass; });
}

std::string SuiteReport::render_text() const {
  std::string out = fmt::format("suite {} (seed {}, tol {:g})\n", suite, seed, tolerance);
  for (const auto& c : checks)
    out += fmt::format("  [{}] {}  worst={:.6g}  witness={}\n", c.pass ? "PASS" : "FAIL", c.check, c.worst_value,
                       c.worst_probe);
  out += fmt::format("{}: {} checks, {}\n", suite, checks.size(), pass() ? "all passed" : "FAILURES");
  return out;
}

json_io::json SuiteReport::to_json() const {
  json_io::json list = json_io::json::array();
  for (const auto& c : checks) list.push_back(json_io::to_json(c));
  return {{"suite", suite}, {"seed", seed}, {"tolerance", tolerance}, {"pass", pass()}, {"checks", std::move(list)}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    n.push_back("all");
    return n;
  }();
  return names;
}

bool is_known_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteReport run_suite(const std::string& name, const RunConfig& config) {
  if (!is_known_suite(name)) raise(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
  if (!(config.tolerance > 0.0)) raise(ErrorKind::InvalidArgument, "tolerance must be positive");
  SuiteReport report{name, config.seed, config.tolerance, {}};
  for (const auto& [suite, fn] : registry()) {
    if (name != "all" && name != suite) continue;
    for (auto& check : fn(config)) {
      if (name == "all") check.check = suite + ": " + check.check;
      report.checks.push_back(std::move(check));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

PathDemoReport path_demo(PathKind kind, const StateModel& from, const StateModel& to, std::size_t grid,
                         const FramePtr& frame_in) {
  if (grid < 1) raise(ErrorKind::InvalidArgument, "grid must be at least 1");
  std::size_t d = 1;
  if (auto fd = from.dimension()) d = *fd;
  const FramePtr frame = frame_in ? frame_in : Frame::identity(d);
  const auto probes = as_elements(frame, default_probe_set(frame->dimension()));
  std::vector<Rational> ts;
  for (std::size_t k = 0; k <= grid; ++k) {
    ts.emplace_back(static_cast<long>(k), static_cast<long>(grid));
    ts.back().canonicalize();
  }
  const auto path = path_sample(kind, from, to, ts);
  PathDemoReport report{to_string(kind), grid, {}, 0.0, 0.0, 0.0, 0.0};
  for (std::size_t k = 0; k + 1 < path.size(); ++k)
    report.distances.push_back(weak_star_distance(path[k], path[k + 1], probes));
  report.max_distance = *std::max_element(report.distances.begin(), report.distances.end());
  report.mean_distance = std::accumulate(report.distances.begin(), report.distances.end(), 0.0) /
                         static_cast<double>(report.distances.size());
  report.lipschitz_constant = report.max_distance * static_cast<double>(grid);
  report.endpoint_error =
      std::max(weak_star_distance(path.front(), from, probes), weak_star_distance(path.back(), to, probes));
  return report;
}

std::string PathDemoReport::render_text() const {
  std::string out = fmt::format("path {} with grid {}\n  step  distance\n", kind, grid);
  for (std::size_t k = 0; k < distances.size(); ++k) out += fmt::format("  {:4d}  {:.12e}\n", k, distances[k]);
  out += fmt::format("max {:.12e}  mean {:.12e}  C = max*grid = {:.6f}  endpoint error {:.3e}\n", max_distance,
                     mean_distance, lipschitz_constant, endpoint_error);
  return out;
}

json_io::json PathDemoReport::to_json() const {
  return {{"kind", kind},
          {"grid", grid},
          {"distances", distances},
          {"max", max_distance},
          {"mean", mean_distance},
          {"lipschitz_constant", lipschitz_constant},
          {"endpoint_error", endpoint_error}};
}

}  // namespace weylccr
