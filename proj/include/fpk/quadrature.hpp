#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace fpk {

// Gauss-Legendre nodes and weights on [-1, 1], computed by Newton iteration
// on the Legendre recurrence.  Deterministic for a given n.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
  explicit GaussLegendre(int n);

  // Integrate f over [a, b] with this rule.
  double integrate(const std::function<double(double)>& f, double a,
                   double b) const;
};

// Composite Gauss-Legendre over [a, b] with `panels` equal panels of a
// 16-point rule.
double composite_gl16(const std::function<double(double)>& f, double a,
                      double b, int panels);

// Adaptive Simpson to absolute/relative tolerance.  Used where a quadrature
// independent of the fixed-rule paths is wanted.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int max_depth = 40);

} // namespace fpk
