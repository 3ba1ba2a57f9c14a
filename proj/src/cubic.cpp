#include "cproots/cubic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cproots::cubic {

double discriminant(const CubicCoefficients& c) {
  const long double s1 = c.s1, s2 = c.s2, s3 = c.s3;
  return static_cast<double>(s1 * s1 * s2 * s2 - 4.0L * s1 * s1 * s1 * s3 - 4.0L * s2 * s2 * s2 +
                             18.0L * s1 * s2 * s3 - 27.0L * s3 * s3);
}

std::array<double, 3> solve_cubic_trig(const CubicCoefficients& c, RootOrder order) {
  if (!(discriminant(c) > 0.0))
    throw std::domain_error("solve_cubic_trig: discriminant <= 0 (degenerate or complex roots)");
  const long double s1 = c.s1, s2 = c.s2, s3 = c.s3;
  const long double P = s1 * s1 - 3.0L * s2;
  if (!(P > 0.0L)) throw std::domain_error("solve_cubic_trig: s1^2 - 3 s2 <= 0");
  const long double R = 2.0L * s1 * s1 * s1 - 9.0L * s1 * s2 + 27.0L * s3;
  const long double twoP32 = 2.0L * P * std::sqrt(P);
  if (!(std::fabs(R) < twoP32 * (1.0L + 1e-12L)))
    throw std::domain_error("solve_cubic_trig: |2s1^3 - 9s1s2 + 27s3| >= 2(s1^2 - 3s2)^(3/2)");
  long double arg = R / twoP32;
  if (arg > 1.0L) arg = 1.0L;   // rounding may cross the strict bound
  if (arg < -1.0L) arg = -1.0L;
  const long double theta = std::acos(order == RootOrder::Decreasing ? arg : -arg) / 3.0L;
  const long double radius = (2.0L / 3.0L) * std::sqrt(P);

  std::array<double, 3> h{};
  for (int j = 0; j < 3; ++j) {
    long double r = s1 / 3.0L + radius * std::cos(theta - 2.0L * std::numbers::pi_v<long double> * j / 3.0L);
    // one Newton step
    const long double f = ((r - s1) * r + s2) * r - s3;
    const long double df = (3.0L * r - 2.0L * s1) * r + s2;
    if (df != 0.0L) r -= f / df;
    h[static_cast<std::size_t>(j)] = static_cast<double>(r);
  }
  return h;
}

}  // namespace cproots::cubic
