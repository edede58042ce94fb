#pragma once

#include <vector>

#include "fpk/mixing.hpp"

namespace fpk {

// Uniform time grid t_j = j * dt, j = 0..n.
struct TimeGrid {
  double dt = 0.0;
  int n = 0;

  TimeGrid() = default;
  TimeGrid(double dt_, int n_);
  double t(int j) const { return dt * j; }
  int size() const { return n + 1; }
};

// L1 discretization of the Caputo-Djrbashian derivative of order
// beta in (0,1) on a uniform grid.  Entry 0 is defined as 0 (the memory
// integral is empty there).  History is summed oldest-first so the result
// is deterministic and exactly linear in the samples.
std::vector<double> caputo_l1(const std::vector<double>& samples,
                              double beta, const TimeGrid& grid);

// Trapezoid-in-kernel discretization of the fractional integral J^alpha,
// alpha > 0.
std::vector<double> fractional_integral(const std::vector<double>& samples,
                                        double alpha, const TimeGrid& grid);

// Distributed-order Caputo operator: the mu-weighted sum of caputo_l1 over
// the measure's atoms.  A singleton atom (beta, 1) reproduces caputo_l1
// bit-for-bit.
std::vector<double> distributed_caputo(const std::vector<double>& samples,
                                       const MixingMeasure& mu,
                                       const TimeGrid& grid);

// Mittag-Leffler function E_beta(z) on the completely monotone regime
// z <= 0, beta in (0,1].  Power series for |z| <= 5, leading asymptotic
// expansion (20 terms) for z < -5.  E_1 degenerates to exp.
double mittag_leffler(double beta, double z);

} // namespace fpk
