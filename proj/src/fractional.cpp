#include "fpk/fractional.hpp"

#include <cmath>
#include <stdexcept>

#include "fpk/gamma.hpp"

namespace fpk {

TimeGrid::TimeGrid(double dt_, int n_) : dt(dt_), n(n_) {
  if (!(dt > 0.0)) throw std::invalid_argument("TimeGrid: dt must be positive");
  if (n < 1) throw std::invalid_argument("TimeGrid: need at least one step");
}

std::vector<double> caputo_l1(const std::vector<double>& samples, double beta,
                              const TimeGrid& grid) {
  if (!(beta > 0.0) || !(beta < 1.0))
    throw std::invalid_argument("caputo_l1: beta must lie in (0,1)");
  if (samples.size() < 2)
    throw std::invalid_argument("caputo_l1: need at least 2 samples");
  if (samples.size() != static_cast<size_t>(grid.size()))
    throw std::invalid_argument("caputo_l1: samples do not match the grid");

  const int n = grid.n;
  const double scale = std::pow(grid.dt, -beta) * reciprocal_gamma(2.0 - beta);
  // a_k = (k+1)^{1-beta} - k^{1-beta}
  std::vector<double> a(n);
  for (int k = 0; k < n; ++k)
    a[k] = std::pow(k + 1.0, 1.0 - beta) - std::pow(static_cast<double>(k), 1.0 - beta);

  std::vector<double> out(samples.size(), 0.0);
  for (int j = 1; j <= n; ++j) {
    double acc = 0.0; // oldest increment first
    for (int k = j - 1; k >= 0; --k)
      acc += a[k] * (samples[j - k] - samples[j - k - 1]);
    out[j] = scale * acc;
  }
  return out;
}

std::vector<double> fractional_integral(const std::vector<double>& samples,
                                        double alpha, const TimeGrid& grid) {
  if (!(alpha > 0.0))
    throw std::invalid_argument("fractional_integral: alpha must be positive");
  if (samples.size() != static_cast<size_t>(grid.size()))
    throw std::invalid_argument("fractional_integral: samples do not match the grid");

  // Piecewise-linear samples integrated exactly against the kernel
  // (t - s)^{alpha-1}: product-trapezoid weights.
  const int n = grid.n;
  const double dt = grid.dt;
  const double ha = std::pow(dt, alpha) * reciprocal_gamma(2.0 + alpha);
  std::vector<double> out(samples.size(), 0.0);
  // w0(j) multiplies g(t_0), wk(j-k) multiplies interior g(t_k), and the
  // endpoint weight multiplies g(t_j); standard exact-on-linear formula.
  for (int j = 1; j <= n; ++j) {
    double acc = samples[0] *
                 (std::pow(static_cast<double>(j - 1), alpha + 1.0) -
                  std::pow(static_cast<double>(j), alpha) * (j - alpha - 1.0));
    for (int k = 1; k < j; ++k) {
      const double w = std::pow(static_cast<double>(j - k + 1), alpha + 1.0) -
                       2.0 * std::pow(static_cast<double>(j - k), alpha + 1.0) +
                       std::pow(static_cast<double>(j - k - 1), alpha + 1.0);
      acc += samples[k] * w;
    }
    acc += samples[j];
    out[j] = ha * acc;
  }
  return out;
}

std::vector<double> distributed_caputo(const std::vector<double>& samples,
                                       const MixingMeasure& mu,
                                       const TimeGrid& grid) {
  std::vector<double> out;
  bool first = true;
  for (const auto& atom : mu.atoms()) {
    std::vector<double> term = caputo_l1(samples, atom.beta, grid);
    if (first) {
      out.assign(term.size(), 0.0);
      first = false;
    }
    if (atom.weight == 1.0) {
      for (size_t i = 0; i < out.size(); ++i) out[i] += term[i];
    } else {
      for (size_t i = 0; i < out.size(); ++i) out[i] += atom.weight * term[i];
    }
  }
  return out;
}

double mittag_leffler(double beta, double z) {
  if (!(beta > 0.0) || beta > 1.0)
    throw std::invalid_argument("mittag_leffler: beta must lie in (0,1]");
  if (z > 0.0)
    throw std::invalid_argument("mittag_leffler: supported regime is z <= 0");
  if (z == 0.0) return 1.0;
  if (beta == 1.0 && z < -5.0) return std::exp(z); // asymptotic series degenerates

  if (z >= -5.0) {
    // Power series with compensated summation; terms alternate in sign and
    // can grow large before decaying, so track the compensation carefully.
    // For small beta the intermediate terms outgrow double precision; that
    // regime is rejected rather than returned as noise.
    double sum = 1.0, comp = 0.0;
    double zk = 1.0;
    for (int k = 1; k <= 600; ++k) {
      zk *= z;
      const double term = zk * reciprocal_gamma(beta * k + 1.0);
      if (std::abs(term) > 1e30)
        throw std::runtime_error("mittag_leffler: series ill-conditioned at this (beta, z)");
      const double y = term - comp;
      const double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
      if (std::abs(term) < 1e-18 * std::abs(sum) && k > 8) break;
    }
    return sum;
  }

  // Leading asymptotic expansion: E_beta(z) ~ -sum_{k>=1} z^{-k}/Gamma(1-beta k).
  double sum = 0.0;
  double zk = 1.0;
  for (int k = 1; k <= 20; ++k) {
    zk /= z;
    sum -= zk * reciprocal_gamma(1.0 - beta * k);
  }
  return sum;
}

} // namespace fpk
