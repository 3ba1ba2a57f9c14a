#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "cproots/arith.hpp"

namespace cproots::solver {

using cplx = std::complex<double>;

enum class SolutionKind { EpsilonPlus, EpsilonMinus, Canonical };

const char* to_string(SolutionKind k);

struct SolutionTriple {
  std::array<cplx, 3> c{};
  SolutionKind kind = SolutionKind::Canonical;
  int branch = 0;  // 1..3 for canonical solutions, 0 for the epsilon pair
  int shift = 0;   // cyclic shift k in 0..2
  bool inverted = false;

  bool is_unimodular(double tol = 1e-8) const;
  bool is_real(double tol = 1e-8) const;
};

/// Branch parameters of the reduction: the pair (xi1, eta1) and the symmetric
/// functions (s1, s2, s3) plus antisymmetric a of the h-triple, for branch
/// i in 0..3.
struct BranchData {
  int index = 0;
  double xi1 = 0, eta1 = 0;
  double s1 = 0, s2 = 0, s3 = 0, a = 0;
  double u = 0, v = 0;  // sqrt(p), sqrt(p + 4A + 16)
};

BranchData branch_parameters(const arith::GaussData& gd, int i);

/// h_j = xi1 + eta1 cos(theta - 2 pi j / 3).
std::array<double, 3> h_values(const BranchData& b, double theta);

/// The coefficients of the f/g decompositions of a canonical solution;
/// the solution itself is synthesized from the half-sums.
struct CoefficientSextuple {
  cplx alpha1, beta1, gamma1, alpha2, beta2, gamma2;

  cplx alpha() const { return 0.5 * (alpha1 + alpha2); }
  cplx beta() const { return 0.5 * (beta1 + beta2); }
  cplx gamma() const { return 0.5 * (gamma1 + gamma2); }
};

/// Explicit closed forms for branch i in 1..3 (purely imaginary second block
/// for i = 1,2 with positive imaginary part; real with sign(alpha2) =
/// -sign(u^2 - uv + 2) for i = 3).
CoefficientSextuple coefficient_sextuple(const arith::GaussData& gd, int i);

/// The two constant solutions c0 = c1 = c2 = (2 - p +- sqrt(p(p-4)))/2.
std::pair<SolutionTriple, SolutionTriple> epsilon_solutions(const arith::GaussData& gd);

/// Canonical solution c^(i), i in 1..3 (shift 0, not inverted).
SolutionTriple canonical_solution(const arith::GaussData& gd, int i);

/// Exactly 20 solutions, in the fixed order: epsilon+, epsilon-, then for
/// each branch i = 1..3 the shifts k = 0,1,2 of the canonical triple followed
/// by the shifts k = 0,1,2 of its componentwise reciprocal.
/// Throws std::logic_error if the triples fail pairwise distinctness (1e-6).
std::vector<SolutionTriple> all_solutions(const arith::GaussData& gd);

/// Max over the three reduced equations of |c_a + 1/c_a + (p-4)/3
/// + n12(..) + n02(..) + n01(..)|, accumulated in extended precision.
double residual(const arith::GaussData& gd, const std::array<cplx, 3>& c);
double residual(const arith::GaussData& gd, const SolutionTriple& t);

/// Same residual through the generic form sum_{i,k} n_ik c_{k+a}/c_{i+a}
/// with a brute-force transition table (independent route, for cross-checks).
double residual_generic(const arith::PrimeContext& ctx, const std::array<cplx, 3>& c);

/// Unique (rho, sigma, tau) with a_j = rho + sigma cos(theta - 2pi j/3)
/// + tau sin(theta - 2pi j/3).
std::array<cplx, 3> trig_decompose(const std::array<cplx, 3>& a, double theta);

/// The three obstruction expressions t1, t2, t3 of the unimodularity
/// criterion; all vanish on valid sextuples.
std::array<cplx, 3> t_check(const CoefficientSextuple& s, double theta);

/// Cubic Gauss sum G = sum_j exp(2 pi i j^3 / p); real for p == 1 (mod 3).
cplx gaussian_cubic_sum(std::int64_t p);

/// Distance helpers on C^3 (max norm).
double max_norm_dist(const std::array<cplx, 3>& a, const std::array<cplx, 3>& b);
double min_pairwise_distance(const std::vector<SolutionTriple>& sols);

}  // namespace cproots::solver
