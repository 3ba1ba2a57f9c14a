#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cproots/arith.hpp"

namespace cproots::asymptotics {

using cplx = std::complex<double>;

/// scal(b) = max_j |1/2 + cos(phi_{j+2} - phi_{j+1})| for a triple on a circle
/// with center w, phi_i = arg(b_i - w). Unimodular triples take the fast path
/// w = 0; otherwise the circumcircle of the three points is used.
/// Throws std::domain_error for (near-)collinear triples.
double scalenity(const std::array<cplx, 3>& b);

/// d_j = exp(2i (theta - 2 pi j / 3)); equilateral, unimodular.
std::array<cplx, 3> limit_triangle(double theta);

/// The five quantitative bounds on the first and second canonical solutions.
struct ScalenityReport {
  std::int64_t p = 0;
  double theta = 0;
  double scal1 = 0, bound1 = 0;            // scal(c1) <= 7/(2 sqrt p)
  double scal2 = 0, bound2 = 0;            // scal(c2) <= 21/(5 sqrt p)
  double dist_c1_plus_d = 0, bound_d1 = 0;  // ||c1 + d|| <= 3/sqrt p
  double dist_c2_minus_d = 0, bound_d2 = 0; // ||c2 - d|| <= 21/(5 sqrt p)
  double sum_norm = 0, sum_bound = 0;       // ||c1 + c2|| <= 36/(5 sqrt p)
  std::vector<std::string> failures;        // named violated bounds, empty if all hold

  bool pass() const { return failures.empty(); }
};

ScalenityReport bound_suite(const arith::GaussData& gd);

/// Pairwise continuity bound: ||c' - c''|| <= 2|theta' - theta''| + K/sqrt p'
/// + K/sqrt p'' with K = 3 for the first and K = 21/5 for the second
/// canonical solutions, over all pairs from the supplied list.
struct PairBoundReport {
  std::int64_t pairs = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

PairBoundReport pair_bounds(std::span<const arith::GaussData> gds);

/// Third-branch ratios c^(3)/sqrt(p) with the empirical limit values
/// (-2 cos theta, -2 sin(theta - pi/6), 2 sin(theta + pi/6)) of sqrt(p)/c^(3).
struct ThirdBranchReport {
  std::int64_t p = 0;
  std::array<double, 3> ratios{};        // c_j^(3) / sqrt p
  std::array<double, 3> limit_l{};       // limits of sqrt(p) / c_j^(3)
  std::array<double, 3> limit_ratios{};  // 1 / limit_l
  double min_abs_ratio = 0;
  double margin_below_half = 0;  // min |ratio| - 0.5 (reported, not asserted)
};

ThirdBranchReport third_branch_ratios(const arith::GaussData& gd);

/// One row of one of the five numeric tables; cells in the paper's column order.
struct TableCell {
  std::string name;
  bool is_complex = false;
  cplx value{};
};

struct TableRow {
  std::int64_t p = 0;
  std::vector<TableCell> cells;
};

/// which = 1..5. Throws std::invalid_argument for non-admissible primes.
std::vector<TableRow> make_table(int which, std::span<const std::int64_t> primes);

/// The 19 admissible primes 7..181 used by tables 1-3.
std::vector<std::int64_t> small_table_primes();

}  // namespace cproots::asymptotics
