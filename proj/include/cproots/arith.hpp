#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace cproots::arith {

/// Deterministic Miller-Rabin primality test, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// True iff p is prime and p == 1 (mod 6).
bool is_admissible_prime(std::int64_t p);

/// The unique pair with 4p = A^2 + 27 B^2, A == 1 (mod 3), B > 0.
struct GaussPair {
  std::int64_t A = 0;
  std::int64_t B = 0;
  friend bool operator==(const GaussPair&, const GaussPair&) = default;
};

/// Bounded scan over B; throws std::invalid_argument unless p is admissible.
GaussPair gauss_decomposition(std::int64_t p);

/// All (A,B) with 4p = A^2 + 27 B^2, B > 0, any sign of A (for uniqueness sweeps).
std::vector<GaussPair> gauss_representations(std::int64_t p);

/// theta = (1/3) Arccos(A / (2 sqrt p)), in (0, pi/3).
double theta_angle(std::int64_t p, std::int64_t A);
long double theta_angle_l(std::int64_t p, std::int64_t A);

/// Everything the closed-form solution formulas need; cheap for any 64-bit p.
struct GaussData {
  std::int64_t p = 0;
  std::int64_t A = 0;
  std::int64_t B = 0;
  double theta = 0;

  static GaussData of(std::int64_t p);
};

/// The 3x3 cyclotomic table n_ik = n_ik(1), under the n02 > n01 labeling.
struct TransitionTable {
  std::array<std::array<std::int64_t, 3>, 3> n{};

  std::int64_t operator()(int i, int k) const { return n[i][k]; }
  friend bool operator==(const TransitionTable&, const TransitionTable&) = default;
};

/// n12 = (p+A+1)/9, n02 = (2p-A+9B-4)/18, n01 = (2p-A-9B-4)/18, n00 = s-1-n01-n02.
/// Throws std::domain_error if a division is not exact (wrong (A,B) normalization).
TransitionTable transition_numbers_closed_form(std::int64_t p, std::int64_t A, std::int64_t B);

/// Cosets of the cubic residues with the labeling convention n02 > n01.
///
/// Below kMaterializeLimit the coset label of every residue is precomputed
/// (one byte per residue); above it labels are evaluated on demand from the
/// cubic character j^s mod p.
class PrimeContext {
 public:
  static constexpr std::int64_t kMaterializeLimit = 10'000'000;

  static PrimeContext build(std::int64_t p);

  std::int64_t p() const { return p_; }
  std::int64_t s() const { return s_; }
  std::int64_t generator() const { return g_; }
  std::int64_t A() const { return gauss_.A; }
  std::int64_t B() const { return gauss_.B; }
  double theta() const { return theta_; }
  GaussPair gauss() const { return gauss_; }
  GaussData gauss_data() const { return {p_, gauss_.A, gauss_.B, theta_}; }
  const TransitionTable& transitions() const { return table_; }

  /// Coset label in {0,1,2}; j may be any value with j % p != 0.
  int coset_of(std::int64_t j) const;

  bool materialized() const { return !label_.empty(); }
  /// Sorted members of G_k; only available when materialized().
  const std::vector<std::int32_t>& coset(int k) const;

 private:
  PrimeContext() = default;

  std::int64_t p_ = 0, s_ = 0, g_ = 0;
  GaussPair gauss_;
  double theta_ = 0;
  TransitionTable table_;
  std::array<std::vector<std::int32_t>, 3> cosets_;
  std::vector<std::uint8_t> label_;
  std::uint64_t chi_coset1_ = 0;  // value of j^s mod p on G_1 (after relabeling)
};

/// n_ik(d) by direct counting; requires a materialized context.
/// Throws std::invalid_argument when d == 0 (mod p).
TransitionTable transition_numbers_bruteforce(const PrimeContext& ctx, std::int64_t d);

/// Exact check of the convolution identities
///   Gamma_i * Gamma_i   = n_ii G0 + n_{i+2,i+2} G1 + n_{i+1,i+1} G2 + s I
///   Gamma_i * Gamma_i+1 = n_{i,i+1} G0 + n_{i+2,i} G1 + n_{i+1,i+2} G2
/// evaluated pointwise over all of Z_p. O(p^2).
bool convolution_identity_check(const PrimeContext& ctx);
bool convolution_identity_check_serial(const PrimeContext& ctx);

/// List of admissible primes in [lo, hi].
std::vector<std::int64_t> admissible_primes(std::int64_t lo, std::int64_t hi);

namespace detail {
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::int64_t smallest_primitive_root(std::int64_t p);
}  // namespace detail

}  // namespace cproots::arith
