#include "cproots/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cproots::arith {

namespace detail {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

namespace {

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> fac;
  for (std::int64_t d = 2; d * d <= n; d += (d == 2) ? 1 : 2) {
    if (n % d == 0) {
      fac.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fac.push_back(n);
  return fac;
}

}  // namespace

std::int64_t smallest_primitive_root(std::int64_t p) {
  const auto fac = prime_factors(p - 1);
  for (std::int64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (std::int64_t q : fac) {
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found (p not prime?)");
}

}  // namespace detail

using detail::mulmod;
using detail::powmod;

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic base set for the full 64-bit range.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

bool is_admissible_prime(std::int64_t p) {
  return p >= 7 && p % 6 == 1 && is_prime_u64(static_cast<std::uint64_t>(p));
}

namespace {

std::int64_t isqrt_i128(__int128 v) {
  if (v < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (static_cast<__int128>(r) * r > v) --r;
  while (static_cast<__int128>(r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

std::vector<GaussPair> gauss_representations(std::int64_t p) {
  std::vector<GaussPair> out;
  const __int128 fourp = static_cast<__int128>(4) * p;
  for (std::int64_t B = 1; static_cast<__int128>(27) * B * B <= fourp; ++B) {
    const __int128 rem = fourp - static_cast<__int128>(27) * B * B;
    const std::int64_t A = isqrt_i128(rem);
    if (static_cast<__int128>(A) * A == rem) {
      out.push_back({A, B});
      if (A != 0) out.push_back({-A, B});
    }
  }
  return out;
}

GaussPair gauss_decomposition(std::int64_t p) {
  if (!is_admissible_prime(p))
    throw std::invalid_argument("gauss_decomposition: " + std::to_string(p) + " is not a prime == 1 (mod 6)");
  GaussPair found{0, 0};
  int count = 0;
  for (const GaussPair& g : gauss_representations(p)) {
    if (((g.A % 3) + 3) % 3 == 1) {
      found = g;
      ++count;
    }
  }
  if (count != 1)
    throw std::logic_error("gauss_decomposition: representation not unique for p=" + std::to_string(p));
  return found;
}

double theta_angle(std::int64_t p, std::int64_t A) {
  return static_cast<double>(theta_angle_l(p, A));
}

long double theta_angle_l(std::int64_t p, std::int64_t A) {
  return std::acos(static_cast<long double>(A) / (2.0L * std::sqrt(static_cast<long double>(p)))) / 3.0L;
}

GaussData GaussData::of(std::int64_t p) {
  const GaussPair g = gauss_decomposition(p);
  return {p, g.A, g.B, theta_angle(p, g.A)};
}

TransitionTable transition_numbers_closed_form(std::int64_t p, std::int64_t A, std::int64_t B) {
  const std::int64_t s = (p - 1) / 3;
  const std::int64_t t12 = p + A + 1;
  const std::int64_t t02 = 2 * p - A + 9 * B - 4;
  const std::int64_t t01 = 2 * p - A - 9 * B - 4;
  if (t12 % 9 != 0 || t02 % 18 != 0 || t01 % 18 != 0)
    throw std::domain_error("transition_numbers_closed_form: non-exact division, (A,B) not normalized");
  const std::int64_t n12 = t12 / 9, n02 = t02 / 18, n01 = t01 / 18;
  TransitionTable t;
  t.n = {{{s - 1 - n01 - n02, n01, n02},
          {n01, n02, n12},
          {n02, n12, n01}}};
  return t;
}

int PrimeContext::coset_of(std::int64_t j) const {
  std::int64_t r = j % p_;
  if (r < 0) r += p_;
  if (r == 0) throw std::invalid_argument("coset_of: j == 0 (mod p)");
  if (!label_.empty()) return label_[static_cast<std::size_t>(r)];
  const std::uint64_t chi = powmod(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(s_),
                                   static_cast<std::uint64_t>(p_));
  if (chi == 1) return 0;
  return chi == chi_coset1_ ? 1 : 2;
}

const std::vector<std::int32_t>& PrimeContext::coset(int k) const {
  if (!materialized()) throw std::logic_error("coset(): context is not materialized");
  return cosets_.at(static_cast<std::size_t>(k));
}

PrimeContext PrimeContext::build(std::int64_t p) {
  if (!is_admissible_prime(p))
    throw std::invalid_argument("build_context: " + std::to_string(p) + " is not a prime == 1 (mod 6)");
  PrimeContext ctx;
  ctx.p_ = p;
  ctx.s_ = (p - 1) / 3;
  ctx.gauss_ = gauss_decomposition(p);
  ctx.theta_ = theta_angle(p, ctx.gauss_.A);
  ctx.g_ = detail::smallest_primitive_root(p);

  const auto up = static_cast<std::uint64_t>(p);
  if (p < kMaterializeLimit) {
    // Walk the powers of g once; initial labeling G_k = {g^{k+3m}}.
    ctx.label_.assign(static_cast<std::size_t>(p), 0);
    std::uint64_t x = 1;
    for (std::int64_t t = 0; t < p - 1; ++t) {
      ctx.label_[x] = static_cast<std::uint8_t>(t % 3);
      x = mulmod(x, static_cast<std::uint64_t>(ctx.g_), up);
    }
    auto count_n0k = [&](int k) {
      std::int64_t n = 0;
      for (std::int64_t b = 1; b < p - 1; ++b)  // b = p-1 excluded (b+1 == 0)
        if (ctx.label_[b] == 0 && ctx.label_[b + 1] == k) ++n;
      return n;
    };
    if (count_n0k(2) < count_n0k(1)) {
      for (std::int64_t j = 1; j < p; ++j)
        if (ctx.label_[j]) ctx.label_[j] = static_cast<std::uint8_t>(3 - ctx.label_[j]);
    }
    for (auto& c : ctx.cosets_) c.reserve(static_cast<std::size_t>(ctx.s_));
    for (std::int64_t j = 1; j < p; ++j)
      ctx.cosets_[ctx.label_[j]].push_back(static_cast<std::int32_t>(j));
    ctx.table_ = transition_numbers_bruteforce(ctx, 1);
    if (ctx.table_ != transition_numbers_closed_form(p, ctx.gauss_.A, ctx.gauss_.B))
      throw std::logic_error("build_context: brute-force table disagrees with closed form");
  } else {
    // On-demand labeling via the cubic character j^s; decide the G1/G2 swap
    // by counting n01 vs n02 along the multiplicative enumeration of G_0.
    const std::uint64_t w = powmod(static_cast<std::uint64_t>(ctx.g_), static_cast<std::uint64_t>(ctx.s_), up);
    const std::uint64_t w2 = mulmod(w, w, up);
    std::int64_t c1 = 0, c2 = 0;
    const std::uint64_t g3 = powmod(static_cast<std::uint64_t>(ctx.g_), 3, up);
#pragma omp parallel reduction(+ : c1, c2)
    {
      std::int64_t nth = 1, tid = 0;
#ifdef _OPENMP
      nth = omp_get_num_threads();
      tid = omp_get_thread_num();
#endif
      const std::int64_t lo = ctx.s_ * tid / nth, hi = ctx.s_ * (tid + 1) / nth;
      std::uint64_t b = powmod(g3, static_cast<std::uint64_t>(lo), up);
      for (std::int64_t m = lo; m < hi; ++m) {
        if (b != up - 1) {
          const std::uint64_t chi = powmod(b + 1, static_cast<std::uint64_t>(ctx.s_), up);
          if (chi == w) ++c1;
          else if (chi == w2) ++c2;
        }
        b = mulmod(b, g3, up);
      }
    }
    ctx.chi_coset1_ = (c2 >= c1) ? w : w2;
    ctx.table_ = transition_numbers_closed_form(p, ctx.gauss_.A, ctx.gauss_.B);
  }
  return ctx;
}

TransitionTable transition_numbers_bruteforce(const PrimeContext& ctx, std::int64_t d) {
  const std::int64_t p = ctx.p();
  d %= p;
  if (d < 0) d += p;
  if (d == 0) throw std::invalid_argument("transition_numbers_bruteforce: d == 0 (mod p)");
  if (!ctx.materialized())
    throw std::logic_error("transition_numbers_bruteforce: context is not materialized");
  TransitionTable t;
  for (std::int64_t b = 1; b < p; ++b) {
    if (b == p - d) continue;
    std::int64_t bd = b + d;
    if (bd >= p) bd -= p;
    ++t.n[ctx.coset_of(b)][ctx.coset_of(bd)];
  }
  return t;
}

namespace {

template <bool Parallel>
bool convolution_check_impl(const PrimeContext& ctx) {
  const std::int64_t p = ctx.p();
  if (!ctx.materialized())
    throw std::logic_error("convolution_identity_check: context is not materialized");
  const TransitionTable& n = ctx.transitions();
  const std::int64_t s = ctx.s();

  // Expected value of (Gamma_u * Gamma_v)(a): s*[u==v] at a=0, else
  // n_{u-t, v-t} for a in G_t (the two identity families plus commutativity).
  bool ok = true;
#pragma omp parallel for schedule(dynamic, 16) reduction(&& : ok) if (Parallel)
  for (std::int64_t a = 0; a < p; ++a) {
    std::int64_t cnt[3][3] = {};
    // walk a-b as b runs over 1..p-1, skipping b == a
    std::int64_t am = a - 1;
    if (am < 0) am += p;
    for (std::int64_t b = 1; b < p; ++b) {
      if (b != a) ++cnt[ctx.coset_of(am)][ctx.coset_of(b)];
      if (--am < 0) am += p;
    }
    if (a == 0) {
      for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v)
          if (cnt[u][v] != (u == v ? s : 0)) ok = false;
    } else {
      const int t = ctx.coset_of(a);
      for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v)
          if (cnt[u][v] != n((u - t + 3) % 3, (v - t + 3) % 3)) ok = false;
    }
  }
  return ok;
}

}  // namespace

bool convolution_identity_check(const PrimeContext& ctx) { return convolution_check_impl<true>(ctx); }
bool convolution_identity_check_serial(const PrimeContext& ctx) { return convolution_check_impl<false>(ctx); }

std::vector<std::int64_t> admissible_primes(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  if (lo < 7) lo = 7;
  std::int64_t start = lo + ((1 - lo) % 6 + 6) % 6;  // first value == 1 (mod 6) at or above lo
  for (std::int64_t p = start; p <= hi; p += 6)
    if (is_prime_u64(static_cast<std::uint64_t>(p))) out.push_back(p);
  return out;
}

}  // namespace cproots::arith
