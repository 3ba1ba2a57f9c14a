#pragma once

#include <array>

namespace cproots::cubic {

/// Monic cubic h^3 - s1 h^2 + s2 h - s3.
struct CubicCoefficients {
  double s1 = 0, s2 = 0, s3 = 0;
};

enum class RootOrder { Decreasing, Increasing };

/// s1^2 s2^2 - 4 s1^3 s3 - 4 s2^3 + 18 s1 s2 s3 - 27 s3^2; positive iff
/// three distinct real roots.
double discriminant(const CubicCoefficients& c);

/// Trigonometric solution for the three-distinct-real-roots case.
/// Decreasing order returns h0 > h1 > h2; increasing order the reversal.
/// Throws std::domain_error when the discriminant is not strictly positive.
std::array<double, 3> solve_cubic_trig(const CubicCoefficients& c, RootOrder order);

}  // namespace cproots::cubic
