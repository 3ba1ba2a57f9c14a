#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "cproots/arith.hpp"

namespace cproots::expand {

using cplx = std::complex<double>;

/// A p-vector of index 3: x_j = b w^{rj} c_k when 0 != j-l in G_k, x_l = b w^{rl}.
struct IndexThreeSequence {
  std::int64_t p = 0;
  std::int64_t r = 0, l = 0;
  cplx b{1.0, 0.0};
  std::vector<cplx> x;
};

IndexThreeSequence build_sequence(const arith::PrimeContext& ctx, const std::array<cplx, 3>& c,
                                  std::int64_t r, std::int64_t l, bool normalize);

/// z_j = x_{j+1}/x_j with x_p := x_0. Throws on a zero component.
std::vector<cplx> x_to_z(std::span<const cplx> x);

/// Max deviation over the p defining equations (the p-1 cyclic degree-d sums
/// and the product equation), evaluated directly in O(p^2).
double cyclic_root_residual(std::span<const cplx> z);
double cyclic_root_residual_serial(std::span<const cplx> z);

/// Normalized transform xhat_nu = p^{-1/2} sum_j x_j w^{j nu}, w = exp(2 pi i/p).
std::vector<cplx> dft(std::span<const cplx> x);
std::vector<cplx> dft_serial(std::span<const cplx> x);

/// gamma_k = sum_j conj(x_j) x_{j+k}, indices mod p.
std::vector<cplx> autocorrelation(std::span<const cplx> x);
std::vector<cplx> autocorrelation_serial(std::span<const cplx> x);

/// max_j ||x_j|-1| <= tol and max_nu ||xhat_nu|-1| <= tol.
bool is_biunimodular(std::span<const cplx> x, double tol);

/// x_j = w^{m j^2 + n j}.
std::vector<cplx> gaussian_sequence(std::int64_t p, std::int64_t m, std::int64_t n);

struct HadamardReport {
  std::int64_t p = 0;
  double max_entry_deviation = 0;  // max | |H_jk| - 1 |
  double max_gram_deviation = 0;   // max | (H H* - p I)_jk |
};

/// Row-major p x p circulant H_jk = x_{(j-k) mod p}.
std::vector<cplx> circulant_matrix(std::span<const cplx> x);

/// Builds the circulant and checks both Hadamard properties by direct matrix
/// arithmetic. Throws std::invalid_argument when x is not bi-unimodular at tol.
HadamardReport hadamard_check(std::span<const cplx> x, double tol = 1e-8);
HadamardReport hadamard_check_serial(std::span<const cplx> x, double tol = 1e-8);

/// Which of the twenty solutions a candidate came from, for breakdown reports.
enum class SolutionClass : int { Epsilon = 0, Branch1 = 1, Branch2 = 2, Branch3 = 3 };

struct EnumerationResult {
  std::int64_t total = 0;
  std::array<std::int64_t, 4> by_class{};  // epsilon, branch 1, branch 2, branch 3
  // Pre-check on the dedup tolerance: no two distinct representatives are
  // closer than min_separation_bound in max norm (1e-4 by construction).
  bool separation_ok = true;
  double observed_min_separation = 0;
  std::vector<std::vector<cplx>> representatives;  // filled when keep = true
  std::vector<int> representative_class;
};

/// All normalized sequences from the 12 unimodular triples x p values of r
/// x p values of l, deduplicated at max-norm tolerance 1e-8. Requires p <= 101.
EnumerationResult enumerate_biunimodular(const arith::PrimeContext& ctx, bool keep = false);

/// All cyclic p-roots of index 3 from the 20 triples x p x p grid.
EnumerationResult enumerate_cyclic_roots(const arith::PrimeContext& ctx, bool keep = false);

}  // namespace cproots::expand
