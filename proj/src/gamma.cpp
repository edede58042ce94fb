#include "fpk/gamma.hpp"

#include <cmath>
#include <limits>

namespace fpk {
namespace {

constexpr double kLanczosG = 6.024680040776729583740234375;
constexpr double kOverflowArg = 171.62437695630272;

// Numerator/denominator of the Lanczos rational sum (lanczos13m53).
constexpr double kNum[13] = {
    23531376880.410759688572007674451636754734846804940,
    42919803642.649098768957899047001988850926355848959,
    35711959237.355668049440185451547166705960488635843,
    17921034426.037209699919755754458931112671403265390,
    6039542586.3520280050642916443072979210699388420708,
    1439720407.3117216736632230727949123939715485786772,
    248874557.86205415651146038641322942321632125127801,
    31426415.585400194380614231628318205362874684987640,
    2876370.6289353724412254090516208496135991145378768,
    186056.26539522349504029498971604569928220784236328,
    8071.6720023658162106380029022722506138218516325024,
    210.82427775157934587250973392071336271166969580291,
    2.5066282746310002701649081771338373386264310793408,
};
constexpr double kDen[13] = {
    0, 39916800, 120543840, 150917976, 105258076, 45995730,
    13339535, 2637558, 357423, 32670, 1925, 66, 1,
};

// Evaluate num(x)/den(x); for large x switch to the 1/x form so both
// polynomials stay bounded.
double lanczos_sum(double x) {
  if (x > 30.0) {
    double z = 1.0 / x, num = kNum[0], den = kDen[0];
    for (int i = 1; i < 13; ++i) {
      num = num * z + kNum[i];
      den = den * z + kDen[i];
    }
    return num / den;
  }
  double num = kNum[12], den = kDen[12];
  for (int i = 11; i >= 0; --i) {
    num = num * x + kNum[i];
    den = den * x + kDen[i];
  }
  return num / den;
}

constexpr double kPi = 3.141592653589793238462643383279502884;

double gamma_positive(double x) {
  if (x > kOverflowArg) return std::numeric_limits<double>::infinity();
  if (x < 0.5) return gamma_positive(x + 1.0) / x;
  const double zgh = x + kLanczosG - 0.5;
  const double sum = lanczos_sum(x);
  // Split the power when the intermediate would overflow.
  if ((x - 0.5) * std::log(zgh) - zgh > 700.0)
    return std::numeric_limits<double>::infinity();
  if (x < 100.0) return sum * std::pow(zgh, x - 0.5) * std::exp(-zgh);
  const double half = std::pow(zgh, (x - 0.5) / 2.0);
  return sum * half * std::exp(-zgh) * half;
}

} // namespace

double gamma_fn(double x) {
  if (std::isnan(x)) return x;
  if (x > 0.0) return gamma_positive(x);
  // Poles at non-positive integers.
  if (x == std::floor(x))
    return std::numeric_limits<double>::infinity();
  // Reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x)).
  const double s = std::sin(kPi * x);
  return kPi / (s * gamma_positive(1.0 - x));
}

double log_gamma(double x) {
  if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);
  const double zgh = x + kLanczosG - 0.5;
  return std::log(lanczos_sum(x)) + (x - 0.5) * std::log(zgh) - zgh;
}

double reciprocal_gamma(double x) {
  if (x > 0.0) {
    if (x > kOverflowArg) return 0.0;
    return 1.0 / gamma_positive(x);
  }
  if (x == std::floor(x)) return 0.0;
  const double s = std::sin(kPi * x);
  const double g = gamma_positive(1.0 - x);
  if (std::isinf(g)) return 0.0; // |x| huge: 1/Gamma underflows
  return (s * g) / kPi;
}

} // namespace fpk
