#include "fpk/mixing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fpk/gamma.hpp"
#include "fpk/quadrature.hpp"

namespace fpk {

MixingMeasure::MixingMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty())
    throw std::invalid_argument("MixingMeasure: no atoms");
  for (const Atom& a : atoms_) {
    if (!(a.beta > 0.0) || !(a.beta < 1.0))
      throw std::invalid_argument("MixingMeasure: beta must lie strictly in (0,1)");
    if (!(a.weight > 0.0))
      throw std::invalid_argument("MixingMeasure: weights must be positive");
    mass_ += a.weight;
    beta_min_ = std::min(beta_min_, a.beta);
    beta_max_ = std::max(beta_max_, a.beta);
  }
  if (!std::isfinite(mass_))
    throw std::invalid_argument("MixingMeasure: total mass must be finite");
}

MixingMeasure MixingMeasure::from_atoms(std::vector<Atom> atoms) {
  return MixingMeasure(std::move(atoms));
}

MixingMeasure MixingMeasure::with_density(
    std::vector<Atom> atoms, const std::function<double(double)>& density,
    double lo, double hi, int nodes) {
  if (!(0.0 < lo && lo < hi && hi < 1.0))
    throw std::invalid_argument("MixingMeasure: density support must satisfy 0 < lo < hi < 1");
  if (nodes < 1) throw std::invalid_argument("MixingMeasure: nodes must be >= 1");
  const GaussLegendre rule(nodes);
  const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  for (int i = 0; i < nodes; ++i) {
    const double beta = mid + half * rule.nodes[i];
    const double w = half * rule.weights[i] * density(beta);
    if (!(w > 0.0))
      throw std::invalid_argument("MixingMeasure: density must be positive on its support");
    atoms.push_back({beta, w});
  }
  return MixingMeasure(std::move(atoms));
}

MixingMeasure MixingMeasure::normalized() const {
  std::vector<Atom> scaled = atoms_;
  for (Atom& a : scaled) a.weight /= mass_;
  return MixingMeasure(std::move(scaled));
}

bool MixingMeasure::operator==(const MixingMeasure& o) const {
  if (atoms_.size() != o.atoms_.size()) return false;
  for (size_t i = 0; i < atoms_.size(); ++i)
    if (atoms_[i].beta != o.atoms_[i].beta || atoms_[i].weight != o.atoms_[i].weight)
      return false;
  return true;
}

double phi_mu(const MixingMeasure& mu, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("phi_mu: s must be positive");
  double sum = 0.0;
  for (const auto& a : mu.atoms()) sum += a.weight * std::pow(s, a.beta);
  return sum;
}

std::complex<double> phi_mu(const MixingMeasure& mu, std::complex<double> s) {
  std::complex<double> sum = 0.0;
  const std::complex<double> ls = std::log(s);
  for (const auto& a : mu.atoms()) sum += a.weight * std::exp(a.beta * ls);
  return sum;
}

double kernel_K(const MixingMeasure& mu, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("kernel_K: t must be positive");
  double sum = 0.0;
  for (const auto& a : mu.atoms())
    sum += a.weight * std::pow(t, -a.beta) * reciprocal_gamma(1.0 - a.beta);
  return sum;
}

LaplacePairReport verify_laplace_pair(const MixingMeasure& mu,
                                      const std::vector<double>& s_samples,
                                      double t_cutoff) {
  if (s_samples.empty())
    throw std::invalid_argument("verify_laplace_pair: s_samples must be nonempty");
  // t = u^p makes the integrand u^{p-1} K(u^p) e^{-s u^p} at least C^3 at
  // u = 0 (the worst term scales like u^{p(1-beta_max)-1}).
  const int p = std::max(2, static_cast<int>(std::ceil(4.0 / (1.0 - mu.beta_max()))));

  LaplacePairReport report;
  for (double s : s_samples) {
    if (!(s > 0.0))
      throw std::invalid_argument("verify_laplace_pair: s must be positive");
    const double t_max = (t_cutoff > 0.0) ? t_cutoff : 60.0 / s;
    const double u_max = std::pow(t_max, 1.0 / p);
    auto integrand = [&](double u) {
      if (u <= 0.0) return 0.0;
      const double t = std::pow(u, p);
      return p * std::pow(u, p - 1) * kernel_K(mu, t) * std::exp(-s * t);
    };
    double prev = composite_gl16(integrand, 0.0, u_max, 8);
    double value = prev;
    bool converged = false;
    for (int panels = 16; panels <= 1024; panels *= 2) {
      value = composite_gl16(integrand, 0.0, u_max, panels);
      if (std::abs(value - prev) <= 1e-10 * std::abs(value)) {
        converged = true;
        break;
      }
      prev = value;
    }
    if (!converged)
      throw std::runtime_error("verify_laplace_pair: quadrature did not converge at s = " +
                               std::to_string(s));
    const double target = phi_mu(mu, s) / s;
    const double rel = std::abs(value - target) / target;
    report.relative_errors.push_back(rel);
    report.max_relative_error = std::max(report.max_relative_error, rel);
  }
  return report;
}

} // namespace fpk
