#ifndef VSCAL_SPECIAL_MATH_HPP
#define VSCAL_SPECIAL_MATH_HPP

#include <cmath>
#include <stdexcept>

namespace vscal {

/// erf via Cody's rational Chebyshev approximations (|abs error| < 1e-12
/// on the real line; see W. J. Cody, Math. Comp. 23 (1969)).
double erf_rational(double x);

/// Complementary error function, same approximation family.
double erfc_rational(double x);

/// Standard normal CDF built on erf_rational.
double normal_cdf(double z);

/// Normal CDF with location/scale.
inline double normal_cdf(double x, double mu, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  return normal_cdf((x - mu) / sigma);
}

/// x*ln(a/x) with the 0*ln(1/0) = 0 convention shared by every bound
/// evaluator (single implementation point).
inline double xlog_over(double x, double a) {
  if (x == 0.0) return 0.0;
  return x * std::log(a / x);
}

}  // namespace vscal

#endif  // VSCAL_SPECIAL_MATH_HPP
