#include <algorithm>
#include <set>
#include <vector>

#include "cproots/arith.hpp"
#include "doctest.h"

using namespace cproots;

namespace {

// Independent oracle: cosets by direct enumeration of cubes and their
// generator multiples (no shared code with PrimeContext::build).
std::set<std::int64_t> cube_set(std::int64_t p) {
  std::set<std::int64_t> cubes;
  for (std::int64_t x = 1; x < p; ++x)
    cubes.insert(static_cast<std::int64_t>(arith::detail::mulmod(
        arith::detail::mulmod(static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(x),
                              static_cast<std::uint64_t>(p)),
        static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(p))));
  return cubes;
}

// Independent oracle: n_ik(d) by a direct double loop over class membership.
std::int64_t count_transitions(const arith::PrimeContext& ctx, int i, int k, std::int64_t d) {
  std::int64_t n = 0;
  const std::int64_t p = ctx.p();
  for (std::int64_t b = 1; b < p; ++b) {
    if (b == p - d) continue;
    if (ctx.coset_of(b) == i && ctx.coset_of((b + d) % p) == k) ++n;
  }
  return n;
}

// Independent oracle: full convolution (F*G)(a) = sum_b F(a-b) G(b) over Z_p.
std::vector<std::int64_t> convolve_indicators(const std::vector<int>& F, const std::vector<int>& G) {
  const std::int64_t p = static_cast<std::int64_t>(F.size());
  std::vector<std::int64_t> out(static_cast<std::size_t>(p), 0);
  for (std::int64_t a = 0; a < p; ++a)
    for (std::int64_t b = 0; b < p; ++b)
      out[static_cast<std::size_t>(a)] +=
          F[static_cast<std::size_t>(((a - b) % p + p) % p)] * G[static_cast<std::size_t>(b)];
  return out;
}

}  // namespace

TEST_CASE("admissible primes") {
  CHECK(arith::is_admissible_prime(7));
  CHECK_FALSE(arith::is_admissible_prime(11));
  CHECK(arith::is_admissible_prime(1003279));
  CHECK_FALSE(arith::is_admissible_prime(2));
  CHECK_FALSE(arith::is_admissible_prime(13 * 13));  // 169 == 1 (mod 6), composite
  CHECK(arith::is_admissible_prime(250004500027));
  CHECK_FALSE(arith::is_admissible_prime(250004500025));
}

TEST_CASE("context matches the worked examples") {
  const auto c13 = arith::PrimeContext::build(13);
  CHECK(std::vector<std::int32_t>{1, 5, 8, 12} == c13.coset(0));
  CHECK(std::vector<std::int32_t>{2, 3, 10, 11} == c13.coset(1));
  CHECK(std::vector<std::int32_t>{4, 6, 7, 9} == c13.coset(2));

  const auto c7 = arith::PrimeContext::build(7);
  CHECK(std::vector<std::int32_t>{1, 6} == c7.coset(0));
  CHECK(std::vector<std::int32_t>{3, 4} == c7.coset(1));
  CHECK(std::vector<std::int32_t>{2, 5} == c7.coset(2));

  const auto c19 = arith::PrimeContext::build(19);
  const auto cubes = cube_set(19);
  CHECK(cubes == std::set<std::int64_t>{1, 7, 8, 11, 12, 18});
  CHECK(std::vector<std::int32_t>(cubes.begin(), cubes.end()) == c19.coset(0));

  CHECK_THROWS_AS(arith::PrimeContext::build(11), std::invalid_argument);
}

TEST_CASE("G0 is the set of cubes, 1 and p-1 included") {
  for (std::int64_t p : {7, 13, 19, 31, 61, 103}) {
    const auto ctx = arith::PrimeContext::build(p);
    const auto cubes = cube_set(p);
    CHECK(std::vector<std::int32_t>(cubes.begin(), cubes.end()) == ctx.coset(0));
    CHECK(cubes.count(1) == 1);
    CHECK(cubes.count(p - 1) == 1);
    CHECK(static_cast<std::int64_t>(ctx.coset(0).size()) == ctx.s());
    CHECK(static_cast<std::int64_t>(ctx.coset(1).size()) == ctx.s());
    CHECK(static_cast<std::int64_t>(ctx.coset(2).size()) == ctx.s());
  }
}

TEST_CASE("transition numbers: worked examples") {
  const auto c13 = arith::PrimeContext::build(13);
  const auto t13 = arith::transition_numbers_bruteforce(c13, 1);
  CHECK(t13(0, 0) == 0);
  CHECK(t13(0, 1) == 1);
  CHECK(t13(1, 0) == 1);
  CHECK(t13(1, 2) == 1);
  CHECK(t13(2, 1) == 1);
  CHECK(t13(2, 2) == 1);
  CHECK(t13(0, 2) == 2);
  CHECK(t13(2, 0) == 2);
  CHECK(t13(1, 1) == 2);

  const auto c7 = arith::PrimeContext::build(7);
  const auto t7 = arith::transition_numbers_bruteforce(c7, 1);
  CHECK(t7(1, 2) == 1);
  CHECK(t7(0, 2) == 1);
  CHECK(t7(0, 1) == 0);

  const auto c19 = arith::PrimeContext::build(19);
  const auto t19 = arith::transition_numbers_bruteforce(c19, 1);
  CHECK(t19(1, 2) == 3);
  CHECK(t19(0, 2) == 2);
  CHECK(t19(0, 1) == 1);
  // cross-check against the direct double-loop oracle
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) CHECK(t19(i, k) == count_transitions(c19, i, k, 1));

  CHECK_THROWS_AS(arith::transition_numbers_bruteforce(c19, 0), std::invalid_argument);
  CHECK_THROWS_AS(arith::transition_numbers_bruteforce(c19, 38), std::invalid_argument);
}

TEST_CASE("gauss decomposition: worked examples and uniqueness") {
  CHECK(arith::gauss_decomposition(7) == arith::GaussPair{1, 1});
  CHECK(arith::gauss_decomposition(13) == arith::GaussPair{-5, 1});
  CHECK(arith::gauss_decomposition(31) == arith::GaussPair{4, 2});
  CHECK(arith::gauss_decomposition(1003279) == arith::GaussPair{1993, 39});
  CHECK_THROWS_AS(arith::gauss_decomposition(11), std::invalid_argument);

  for (std::int64_t p : arith::admissible_primes(7, 3000)) {
    const auto g = arith::gauss_decomposition(p);
    CHECK(4 * p == g.A * g.A + 27 * g.B * g.B);
    CHECK(((g.A % 3) + 3) % 3 == 1);
    CHECK(g.B > 0);
    int normalized = 0;
    for (const auto& r : arith::gauss_representations(p))
      if (((r.A % 3) + 3) % 3 == 1) ++normalized;
    CHECK(normalized == 1);
  }
}

TEST_CASE("closed form equals brute force, and the table identities hold") {
  for (std::int64_t p : arith::admissible_primes(7, 2500)) {
    const auto ctx = arith::PrimeContext::build(p);
    const auto brute = arith::transition_numbers_bruteforce(ctx, 1);
    const auto closed = arith::transition_numbers_closed_form(p, ctx.A(), ctx.B());
    CHECK(brute == closed);

    const std::int64_t s = ctx.s();
    const auto& n = brute;
    // symmetry, row sums, diagonal relation
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) CHECK(n(i, k) == n(k, i));
    CHECK(n(0, 0) + n(0, 1) + n(0, 2) == s - 1);
    CHECK(n(1, 0) + n(1, 1) + n(1, 2) == s);
    CHECK(n(2, 0) + n(2, 1) + n(2, 2) == s);
    CHECK(n(0, 1) + n(1, 2) + n(2, 0) == s);
    CHECK(n(1, 1) == n(0, 2));
    CHECK(n(2, 2) == n(0, 1));
    CHECK(n(0, 2) > n(0, 1));
    // quadratic identity, exact in integers
    const std::int64_t n01 = n(0, 1), n02 = n(0, 2), n12 = n(1, 2);
    CHECK(n01 * n02 + n01 * n12 + n02 * n12 == n01 * n01 + n02 * n02 + n12 * n12 - n12);
    // A, B read off the table
    CHECK(ctx.A() == 9 * n12 - p - 1);
    CHECK(ctx.B() == n02 - n01);
  }
}

TEST_CASE("shift law n_{i+a,k+a}(d) = n_ik(1) for d in G_a") {
  for (std::int64_t p : {7, 13, 19, 31, 61, 103, 151, 541, 997}) {
    const auto ctx = arith::PrimeContext::build(p);
    const auto base = arith::transition_numbers_bruteforce(ctx, 1);
    for (std::int64_t d = 1; d < p; ++d) {
      const int a = ctx.coset_of(d);
      const auto t = arith::transition_numbers_bruteforce(ctx, d);
      for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) CHECK(t((i + a) % 3, (k + a) % 3) == base(i, k));
    }
  }
}

TEST_CASE("convolution identities, exact, against the direct oracle") {
  for (std::int64_t p : {7, 13, 31}) {
    const auto ctx = arith::PrimeContext::build(p);
    CHECK(arith::convolution_identity_check(ctx));
    CHECK(arith::convolution_identity_check_serial(ctx));

    // independent oracle evaluation of both identity families
    std::array<std::vector<int>, 3> gam;
    for (int k = 0; k < 3; ++k) {
      gam[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(p), 0);
      for (std::int32_t v : ctx.coset(k)) gam[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)] = 1;
    }
    const auto& n = ctx.transitions();
    for (int i = 0; i < 3; ++i) {
      const auto same = convolve_indicators(gam[static_cast<std::size_t>(i)], gam[static_cast<std::size_t>(i)]);
      const auto next =
          convolve_indicators(gam[static_cast<std::size_t>(i)], gam[static_cast<std::size_t>((i + 1) % 3)]);
      for (std::int64_t a = 0; a < p; ++a) {
        const auto ia = static_cast<std::size_t>(a);
        std::int64_t expect_same = (a == 0) ? ctx.s() : 0;
        std::int64_t expect_next = 0;
        if (a != 0) {
          expect_same = n(i, i) * gam[0][ia] + n((i + 2) % 3, (i + 2) % 3) * gam[1][ia] +
                        n((i + 1) % 3, (i + 1) % 3) * gam[2][ia];
          expect_next = n(i, (i + 1) % 3) * gam[0][ia] + n((i + 2) % 3, i) * gam[1][ia] +
                        n((i + 1) % 3, (i + 2) % 3) * gam[2][ia];
        }
        CHECK(same[ia] == expect_same);
        CHECK(next[ia] == expect_next);
      }
    }
  }
}

TEST_CASE("non-materialized context agrees with the materialized labeling") {
  // Same prime built through both code paths must label every coset member
  // identically (the on-demand path is exercised well below its threshold
  // by a context constructed around it in production only for huge p, so
  // compare the character labeling directly).
  const auto ctx = arith::PrimeContext::build(103);
  const auto up = static_cast<std::uint64_t>(103);
  const std::uint64_t w = arith::detail::powmod(static_cast<std::uint64_t>(ctx.generator()),
                                                static_cast<std::uint64_t>(ctx.s()), up);
  // chi(j) = j^s distinguishes the cosets
  for (std::int64_t j = 1; j < 103; ++j) {
    const std::uint64_t chi = arith::detail::powmod(static_cast<std::uint64_t>(j),
                                                    static_cast<std::uint64_t>(ctx.s()), up);
    if (ctx.coset_of(j) == 0) CHECK(chi == 1);
    if (chi == 1) CHECK(ctx.coset_of(j) == 0);
    if (chi == w) CHECK(ctx.coset_of(j) != 0);
  }
}

TEST_CASE("admissible_primes range helper") {
  const auto ps = arith::admissible_primes(7, 200);
  CHECK(ps == std::vector<std::int64_t>{7, 13, 19, 31, 37, 43, 61, 67, 73, 79, 97, 103, 109, 127,
                                        139, 151, 157, 163, 181, 193, 199});
  CHECK(arith::admissible_primes(5, 4).empty());
}
