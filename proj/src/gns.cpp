#include "weylccr/gns.hpp"

#include <algorithm>
#include <cstdlib>

#include "weylccr/error.hpp"

namespace weylccr {

FourierWindow::FourierWindow(FourierIndex lo, FourierIndex hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.empty() || lo_.size() != hi_.size()) raise(ErrorKind::InvalidArgument, "window bounds must be nonempty and match");
  std::size_t count = 1;
  for (std::size_t i = 0; i < lo_.size(); ++i) {
    if (hi_[i] < lo_[i]) raise(ErrorKind::InvalidArgument, "empty Fourier window");
    count *= static_cast<std::size_t>(hi_[i] - lo_[i] + 1);
  }
  points_.reserve(count);
  FourierIndex g = lo_;
  for (std::size_t n = 0; n < count; ++n) {
    points_.push_back(g);
    for (std::size_t i = g.size(); i-- > 0;) {
      if (g[i] < hi_[i]) {
        ++g[i];
        break;
      }
      g[i] = lo_[i];
    }
  }
}

FourierWindow FourierWindow::cube(std::size_t d, long radius) {
  return FourierWindow(FourierIndex(d, -radius), FourierIndex(d, radius));
}

bool FourierWindow::contains(const FourierIndex& g) const {
  if (g.size() != lo_.size()) return false;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] < lo_[i] || g[i] > hi_[i]) return false;
  return true;
}

std::size_t FourierWindow::index_of(const FourierIndex& g) const {
  if (!contains(g)) raise(ErrorKind::WindowTooSmall, "index outside the Fourier window");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    idx = idx * static_cast<std::size_t>(hi_[i] - lo_[i] + 1) + static_cast<std::size_t>(g[i] - lo_[i]);
  return idx;
}

namespace {

ExactVector index_vector(const FourierIndex& g) {
  ExactVector v;
  v.reserve(g.size());
  for (long x : g) v.emplace_back(x);
  return v;
}

}  // namespace

TruncatedOperator op_S(const ExactVector& b, const FourierWindow& w) {
  if (b.size() != w.dimension()) raise(ErrorKind::DimensionMismatch, "op_S position has wrong dimension");
  const auto n = static_cast<Eigen::Index>(w.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    m(i, i) = (-pairing(index_vector(w.points()[static_cast<std::size_t>(i)]), b)).to_complex();
  return {w, std::move(m)};
}

TruncatedOperator op_F(const FourierIndex& shift, const FourierWindow& w) {
  if (shift.size() != w.dimension()) raise(ErrorKind::DimensionMismatch, "op_F shift has wrong dimension");
  const auto n = static_cast<Eigen::Index>(w.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t col = 0; col < w.size(); ++col) {
    FourierIndex target = w.points()[col];
    for (std::size_t i = 0; i < target.size(); ++i) target[i] += shift[i];
    if (w.contains(target)) m(static_cast<Eigen::Index>(w.index_of(target)), static_cast<Eigen::Index>(col)) = 1.0;
  }
  return {w, std::move(m)};
}

TruncatedOperator rep_rho_kappa(const std::vector<Rational>& kappa, const Monomial& m, const FourierWindow& w) {
  if (kappa.size() != w.dimension() || m.dimension() != w.dimension())
    raise(ErrorKind::DimensionMismatch, "rho_kappa arguments have mismatched dimension");
  if (!in_dual_lattice(m.a))
    raise(ErrorKind::OutOfSubalgebra, "rho_kappa is defined on V_Gamma; momentum " + to_string(m.a) + " is not integral");
  const Complex phase = (-pairing(make_vector(kappa), m.b)).to_complex();
  Eigen::MatrixXcd product = op_F(integer_coordinates(m.a), w).matrix * op_S(m.b, w).matrix;
  product *= phase;
  return {w, std::move(product)};
}

Complex bloch_vector_state(const std::vector<Rational>& kappa, const FourierData& fhat, const Monomial& m,
                           const FourierWindow& w) {
  if (!in_dual_lattice(m.a)) return 0.0;
  const auto shift = integer_coordinates(m.a);
  for (const auto& [g, c] : fhat) {
    if (g.size() != w.dimension()) raise(ErrorKind::DimensionMismatch, "Fourier index has wrong dimension");
    for (std::size_t i = 0; i < g.size(); ++i) {
      const long margin = std::labs(shift[i]);
      if (g[i] - margin < w.lo()[i] || g[i] + margin > w.hi()[i])
        raise(ErrorKind::WindowTooSmall, "Fourier support needs a margin of " + std::to_string(margin) +
                                             " inside the window along axis " + std::to_string(i));
    }
  }
  const auto n = static_cast<Eigen::Index>(w.size());
  Eigen::VectorXcd f = Eigen::VectorXcd::Zero(n);
  for (const auto& [g, c] : fhat) f(static_cast<Eigen::Index>(w.index_of(g))) = c;
  const Eigen::VectorXcd image = rep_rho_kappa(kappa, m, w).matrix * f;
  return f.dot(image);  // conjugate-linear in the first argument
}

Complex plane_wave_vector_state(const Frame& frame, const ExactVector& p, const Monomial& m,
                                const std::vector<ExactVector>& momentum_set) {
  if (p.size() != frame.dimension() || m.dimension() != frame.dimension())
    raise(ErrorKind::DimensionMismatch, "plane-wave reconstruction arguments have mismatched dimension");
  const ExactVector p_coords = frame.momentum_coordinates(p);
  const auto find = [&](const ExactVector& q) -> Eigen::Index {
    const auto it = std::find(momentum_set.begin(), momentum_set.end(), q);
    if (it == momentum_set.end()) raise(ErrorKind::WindowTooSmall, "momentum set is missing " + to_string(q));
    return static_cast<Eigen::Index>(it - momentum_set.begin());
  };
  const Eigen::Index origin = find(p_coords);
  (void)find(p_coords + m.a);
  const auto n = static_cast<Eigen::Index>(momentum_set.size());
  Eigen::MatrixXcd shift = Eigen::MatrixXcd::Zero(n, n);
  Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const ExactVector& q = momentum_set[static_cast<std::size_t>(k)];
    diag(k, k) = (-pairing(q, m.b)).to_complex();
    const auto target = std::find(momentum_set.begin(), momentum_set.end(), q + m.a);
    if (target != momentum_set.end()) shift(target - momentum_set.begin(), k) = 1.0;
  }
  const Eigen::MatrixXcd rep = shift * diag;
  return rep(origin, origin);
}

WeylResidual weyl_relation_residual(const FourierIndex& shift, const ExactVector& b, const FourierWindow& w) {
  const Eigen::MatrixXcd f = op_F(shift, w).matrix;
  const Eigen::MatrixXcd s = op_S(b, w).matrix;
  const Complex phase = pairing(index_vector(shift), b).to_complex();
  const Eigen::MatrixXcd diff = f * s - phase * (s * f);
  WeylResidual out;
  out.full_window = diff.cwiseAbs().maxCoeff();
  for (std::size_t col = 0; col < w.size(); ++col) {
    FourierIndex target = w.points()[col];
    for (std::size_t i = 0; i < target.size(); ++i) target[i] += shift[i];
    if (!w.contains(target)) continue;
    out.interior = std::max(out.interior, diff.col(static_cast<Eigen::Index>(col)).cwiseAbs().maxCoeff());
  }
  return out;
}

}  // namespace weylccr
