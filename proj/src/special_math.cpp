#include "vscal/special_math.hpp"

#include <cmath>

namespace vscal {
namespace {

// Cody's three-region rational approximations for erf/erfc.
// Region 1: |x| <= 0.5, erf(x) = x * R1(x^2)
// Region 2: 0.46875 < x <= 4, erfc(x) = exp(-x^2) * R2(x)
// Region 3: x > 4, erfc(x) = exp(-x^2)/x * (1/sqrt(pi) + R3(1/x^2)/x^2)

double erf_small(double x) {
  static const double a[5] = {3.16112374387056560e+00, 1.13864154151050156e+02,
                              3.77485237685302021e+02, 3.20937758913846947e+03,
                              1.85777706184603153e-01};
  static const double b[4] = {2.36012909523441209e+01, 2.44024637934444173e+02,
                              1.28261652607737228e+03, 2.84423683343917062e+03};
  const double z = x * x;
  double num = a[4] * z;
  double den = z;
  for (int i = 0; i < 3; ++i) {
    num = (num + a[i]) * z;
    den = (den + b[i]) * z;
  }
  return x * (num + a[3]) / (den + b[3]);
}

double erfc_mid(double x) {
  static const double c[9] = {5.64188496988670089e-01, 8.88314979438837594e+00,
                              6.61191906371416295e+01, 2.98635138197400131e+02,
                              8.81952221241769090e+02, 1.71204761263407058e+03,
                              2.05107837782607147e+03, 1.23033935479799725e+03,
                              2.15311535474403846e-08};
  static const double d[8] = {1.57449261107098347e+01, 1.17693950891312499e+02,
                              5.37181101862009858e+02, 1.62138957456669019e+03,
                              3.29079923573345963e+03, 4.36261909014324716e+03,
                              3.43936767414372164e+03, 1.23033935480374942e+03};
  double num = c[8] * x;
  double den = x;
  for (int i = 0; i < 7; ++i) {
    num = (num + c[i]) * x;
    den = (den + d[i]) * x;
  }
  const double r = (num + c[7]) / (den + d[7]);
  return std::exp(-x * x) * r;
}

double erfc_large(double x) {
  static const double p[6] = {3.05326634961232344e-01, 3.60344899949804439e-01,
                              1.25781726111229246e-01, 1.60837851487422766e-02,
                              6.58749161529837803e-04, 1.63153871373020978e-02};
  static const double q[5] = {2.56852019228982242e+00, 1.87295284992346047e+00,
                              5.27905102951428412e-01, 6.05183413124413191e-02,
                              2.33520497626869185e-03};
  const double z = 1.0 / (x * x);
  double num = p[5] * z;
  double den = z;
  for (int i = 0; i < 4; ++i) {
    num = (num + p[i]) * z;
    den = (den + q[i]) * z;
  }
  double r = z * (num + p[4]) / (den + q[4]);
  r = (0.5641895835477562869 - r) / x;  // 1/sqrt(pi)
  return std::exp(-x * x) * r;
}

}  // namespace

double erfc_rational(double x) {
  const double ax = std::fabs(x);
  double v;
  if (ax <= 0.46875) {
    return 1.0 - erf_small(x);
  } else if (ax <= 4.0) {
    v = erfc_mid(ax);
  } else if (ax < 26.5) {
    v = erfc_large(ax);
  } else {
    v = 0.0;
  }
  return x < 0.0 ? 2.0 - v : v;
}

double erf_rational(double x) {
  if (std::fabs(x) <= 0.46875) return erf_small(x);
  return 1.0 - erfc_rational(x);
}

double normal_cdf(double z) {
  // Phi(z) = erfc(-z/sqrt(2))/2; erfc keeps precision in the tails.
  return 0.5 * erfc_rational(-z * 0.7071067811865475244);
}

}  // namespace vscal
