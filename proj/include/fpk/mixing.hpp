#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace fpk {

// Borel mixing measure on (0,1), represented as a finite list of atoms
// (beta_k, w_k).  A continuous density is discretized once at construction
// by Gauss-Legendre quadrature mapped to its support, after which the
// measure is effectively atomic; all downstream consumers (memory kernels,
// distributed-order derivatives, subordinator mixtures) share that one
// discretization.
class MixingMeasure {
 public:
  struct Atom {
    double beta;
    double weight;
  };

  // Atom-only measure.  Every beta must lie strictly inside (0,1), weights
  // strictly positive.
  static MixingMeasure from_atoms(std::vector<Atom> atoms);

  // Atoms plus a continuous density on (lo, hi) included via `nodes`
  // Gauss-Legendre quadrature nodes.  Requires 0 < lo < hi < 1.
  static MixingMeasure with_density(std::vector<Atom> atoms,
                                    const std::function<double(double)>& density,
                                    double lo, double hi, int nodes = 64);

  // Same measure scaled so the total mass is 1.
  MixingMeasure normalized() const;

  const std::vector<Atom>& atoms() const { return atoms_; }
  double total_mass() const { return mass_; }
  double beta_min() const { return beta_min_; }
  double beta_max() const { return beta_max_; }

  bool operator==(const MixingMeasure& o) const;

 private:
  explicit MixingMeasure(std::vector<Atom> atoms);

  std::vector<Atom> atoms_;
  double mass_ = 0.0;
  double beta_min_ = 1.0;
  double beta_max_ = 0.0;
};

// Phi_mu(s) = integral of s^beta d mu(beta); strictly increasing in s.
// Rejects s <= 0.
double phi_mu(const MixingMeasure& mu, double s);

// Analytic continuation of Phi_mu to complex s off the negative real axis
// (used by the Talbot inversion contour).
std::complex<double> phi_mu(const MixingMeasure& mu, std::complex<double> s);

// K_mu(t) = integral of t^{-beta} / Gamma(1-beta) d mu(beta) for t > 0.
// Diverges as t -> 0+; rejects t <= 0.
double kernel_K(const MixingMeasure& mu, double t);

struct LaplacePairReport {
  double max_relative_error = 0.0;
  // Per-sample relative errors in the order of s_samples.
  std::vector<double> relative_errors;
};

// Checks the identity  Laplace[K_mu](s) = Phi_mu(s)/s  by numerically
// Laplace-transforming K_mu with a singularity-absorbing substitution
// t = u^p near t = 0.  Throws if the quadrature fails to converge,
// naming the offending s.
LaplacePairReport verify_laplace_pair(const MixingMeasure& mu,
                                      const std::vector<double>& s_samples,
                                      double t_cutoff = 0.0);

} // namespace fpk
