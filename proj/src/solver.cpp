#include "cproots/solver.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cproots::solver {

namespace {

using lreal = long double;
using lcplx = std::complex<lreal>;

constexpr lreal kPi = std::numbers::pi_v<lreal>;
const lreal kSqrt3 = std::sqrt(3.0L);

struct UvKernel {
  lreal u, v, uv, m_plus, m_minus, mm4, r_mm, r_pp;
};

// Cancellation-free building blocks in u = sqrt(p), v = sqrt(p + 4A + 16):
//   u - v        = -(4A+16)/(u+v)
//   u^2 - uv + 2 = 2 - (4A+16) u/(u+v)
//   u^2 - uv + 4 = (16 - 4p(A+2)) / (p + 4 + uv)
UvKernel uv_kernel(std::int64_t p, std::int64_t A) {
  UvKernel k{};
  const lreal lp = static_cast<lreal>(p);
  k.u = std::sqrt(lp);
  k.v = std::sqrt(lp + 4.0L * A + 16.0L);
  k.uv = k.u * k.v;
  k.m_plus = lp + k.uv + 2.0L;
  const lreal u_minus_v = -(4.0L * A + 16.0L) / (k.u + k.v);
  k.m_minus = 2.0L + u_minus_v * k.u;
  k.mm4 = (16.0L - 4.0L * lp * (A + 2)) / (lp + 4.0L + k.uv);
  k.r_mm = std::sqrt((4.0L + u_minus_v) * (4.0L - u_minus_v));
  k.r_pp = std::sqrt((k.u + k.v + 4.0L) * (k.u + k.v - 4.0L));
  return k;
}

struct SextupleL {
  lcplx a1, b1, g1, a2, b2, g2;
};

SextupleL sextuple_l(const arith::GaussData& gd, int i) {
  if (i < 1 || i > 3) throw std::invalid_argument("coefficient_sextuple: branch index must be 1..3");
  const lreal p = static_cast<lreal>(gd.p);
  const lreal A = static_cast<lreal>(gd.A);
  const lreal B = static_cast<lreal>(gd.B);
  SextupleL s;
  if (i == 1) {
    const lreal den = p * p - 3.0L * p - A;
    const lreal sp = std::sqrt(p), sp4 = std::sqrt(p - 4.0L);
    const lreal num = p * A - 2.0L * p - 2.0L * A;
    s.a1 = num / den;
    s.b1 = -sp * (p - 4.0L) * (A + 2.0L) / den;
    s.g1 = -3.0L * kSqrt3 * sp * (p - 4.0L) * B / den;
    s.a2 = lcplx(0.0L, 3.0L * kSqrt3 * sp * sp4 * B / den);
    s.b2 = lcplx(0.0L, -3.0L * kSqrt3 * sp4 * (p - 2.0L) * B / den);
    s.g2 = lcplx(0.0L, sp4 * num / den);
  } else if (i == 2) {
    const UvKernel k = uv_kernel(gd.p, gd.A);
    s.a1 = -(k.m_minus - 6.0L) / k.m_plus;
    s.b1 = 2.0L * (A + 2.0L) * k.u / k.m_plus;
    s.g1 = 6.0L * kSqrt3 * B * k.u / k.m_plus;
    s.a2 = lcplx(0.0L, k.u * k.r_mm / k.m_plus);
    s.b2 = lcplx(0.0L, 0.5L * (k.m_plus + 2.0L) * k.r_mm / k.m_plus);
    s.g2 = lcplx(0.0L, 0.5L * (k.m_minus - 6.0L) * k.r_pp / k.m_plus);
  } else {
    const UvKernel k = uv_kernel(gd.p, gd.A);
    s.a1 = -(k.m_plus - 6.0L) / k.m_minus;
    s.b1 = 2.0L * (A + 2.0L) * k.u / k.m_minus;
    s.g1 = 6.0L * kSqrt3 * B * k.u / k.m_minus;
    s.a2 = -k.u * k.r_pp / k.m_minus;  // sign(alpha2) = -sign(u^2 - uv + 2)
    s.b2 = -0.5L * k.mm4 * k.r_pp / k.m_minus;
    s.g2 = 0.5L * (k.m_plus - 6.0L) * k.r_mm / k.m_minus;
  }
  return s;
}

std::array<lcplx, 3> synthesize(const SextupleL& s, lreal theta) {
  const lcplx al = 0.5L * (s.a1 + s.a2);
  const lcplx be = 0.5L * (s.b1 + s.b2);
  const lcplx ga = 0.5L * (s.g1 + s.g2);
  std::array<lcplx, 3> c;
  for (int j = 0; j < 3; ++j) {
    const lreal phi = theta - 2.0L * kPi * j / 3.0L;
    c[static_cast<std::size_t>(j)] = al + be * std::cos(phi) + ga * std::sin(phi);
  }
  return c;
}

std::array<lcplx, 3> canonical_l(const arith::GaussData& gd, int i) {
  return synthesize(sextuple_l(gd, i), arith::theta_angle_l(gd.p, gd.A));
}

std::array<cplx, 3> round_down(const std::array<lcplx, 3>& c) {
  return {cplx(static_cast<double>(c[0].real()), static_cast<double>(c[0].imag())),
          cplx(static_cast<double>(c[1].real()), static_cast<double>(c[1].imag())),
          cplx(static_cast<double>(c[2].real()), static_cast<double>(c[2].imag()))};
}

}  // namespace

const char* to_string(SolutionKind k) {
  switch (k) {
    case SolutionKind::EpsilonPlus: return "epsilon_plus";
    case SolutionKind::EpsilonMinus: return "epsilon_minus";
    case SolutionKind::Canonical: return "canonical";
  }
  return "?";
}

bool SolutionTriple::is_unimodular(double tol) const {
  for (const cplx& z : c)
    if (std::fabs(std::abs(z) - 1.0) > tol) return false;
  return true;
}

bool SolutionTriple::is_real(double tol) const {
  for (const cplx& z : c)
    if (std::fabs(z.imag()) > tol) return false;
  return true;
}

BranchData branch_parameters(const arith::GaussData& gd, int i) {
  if (i < 0 || i > 3) throw std::invalid_argument("branch_parameters: branch index must be 0..3");
  BranchData b;
  b.index = i;
  const lreal p = static_cast<lreal>(gd.p);
  const lreal A = static_cast<lreal>(gd.A);
  const lreal B = static_cast<lreal>(gd.B);
  const UvKernel k = uv_kernel(gd.p, gd.A);
  b.u = static_cast<double>(k.u);
  b.v = static_cast<double>(k.v);
  if (i == 0) {
    b.xi1 = 2.0;
    b.eta1 = 0.0;
    b.s1 = 6.0;
    b.s2 = 12.0;
    b.s3 = 8.0;
    b.a = 0.0;
    return b;
  }
  lreal xi1, eta1;
  if (i == 1) {
    const lreal den = p * p - 3.0L * p - A;
    xi1 = -(p * p - 6.0L * p + 2.0L * A) / den;
    eta1 = 6.0L * std::sqrt(p) * (p - 4.0L) / den;
  } else if (i == 2) {
    xi1 = -(k.m_plus - 6.0L) / k.m_plus;
    eta1 = -12.0L * k.u / k.m_plus;
  } else {
    xi1 = -(k.m_minus - 6.0L) / k.m_minus;
    eta1 = -12.0L * k.u / k.m_minus;
  }
  // Symmetric functions of the h-triple, expanded from
  // h_j = xi1 + eta1 cos(theta - 2 pi j / 3).
  const lreal cos3t = A / (2.0L * k.u);
  const lreal sin3t = 3.0L * kSqrt3 * B / (2.0L * k.u);
  b.xi1 = static_cast<double>(xi1);
  b.eta1 = static_cast<double>(eta1);
  b.s1 = static_cast<double>(3.0L * xi1);
  b.s2 = static_cast<double>(3.0L * xi1 * xi1 - 0.75L * eta1 * eta1);
  b.s3 = static_cast<double>(xi1 * xi1 * xi1 - 0.75L * xi1 * eta1 * eta1 +
                             0.25L * eta1 * eta1 * eta1 * cos3t);
  b.a = static_cast<double>(-(3.0L * kSqrt3 / 4.0L) * eta1 * eta1 * eta1 * sin3t);
  return b;
}

std::array<double, 3> h_values(const BranchData& b, double theta) {
  std::array<double, 3> h;
  for (int j = 0; j < 3; ++j) {
    const lreal phi = static_cast<lreal>(theta) - 2.0L * kPi * j / 3.0L;
    h[static_cast<std::size_t>(j)] =
        static_cast<double>(static_cast<lreal>(b.xi1) + static_cast<lreal>(b.eta1) * std::cos(phi));
  }
  return h;
}

CoefficientSextuple coefficient_sextuple(const arith::GaussData& gd, int i) {
  const SextupleL s = sextuple_l(gd, i);
  auto dn = [](const lcplx& z) {
    return cplx(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  };
  return {dn(s.a1), dn(s.b1), dn(s.g1), dn(s.a2), dn(s.b2), dn(s.g2)};
}

std::pair<SolutionTriple, SolutionTriple> epsilon_solutions(const arith::GaussData& gd) {
  const lreal p = static_cast<lreal>(gd.p);
  // The minus root has no cancellation; the plus root is its exact reciprocal.
  const lreal em = (2.0L - p - std::sqrt(p * (p - 4.0L))) / 2.0L;
  const lreal ep = 1.0L / em;
  SolutionTriple plus{{cplx(static_cast<double>(ep)), cplx(static_cast<double>(ep)),
                       cplx(static_cast<double>(ep))},
                      SolutionKind::EpsilonPlus, 0, 0, false};
  SolutionTriple minus{{cplx(static_cast<double>(em)), cplx(static_cast<double>(em)),
                        cplx(static_cast<double>(em))},
                       SolutionKind::EpsilonMinus, 0, 0, false};
  return {plus, minus};
}

SolutionTriple canonical_solution(const arith::GaussData& gd, int i) {
  if (i < 1 || i > 3) throw std::invalid_argument("canonical_solution: branch index must be 1..3");
  SolutionTriple t;
  t.c = round_down(canonical_l(gd, i));
  t.kind = SolutionKind::Canonical;
  t.branch = i;
  return t;
}

std::vector<SolutionTriple> all_solutions(const arith::GaussData& gd) {
  std::vector<SolutionTriple> out;
  out.reserve(20);
  const auto [ep, em] = epsilon_solutions(gd);
  out.push_back(ep);
  out.push_back(em);
  for (int i = 1; i <= 3; ++i) {
    const std::array<lcplx, 3> base = canonical_l(gd, i);
    std::array<lcplx, 3> rec;
    for (int j = 0; j < 3; ++j) rec[static_cast<std::size_t>(j)] = 1.0L / base[static_cast<std::size_t>(j)];
    for (int inv = 0; inv < 2; ++inv) {
      const auto& src = inv ? rec : base;
      for (int k = 0; k < 3; ++k) {
        SolutionTriple t;
        for (int j = 0; j < 3; ++j) {
          const lcplx z = src[static_cast<std::size_t>((j + k) % 3)];
          t.c[static_cast<std::size_t>(j)] =
              cplx(static_cast<double>(z.real()), static_cast<double>(z.imag()));
        }
        t.kind = SolutionKind::Canonical;
        t.branch = i;
        t.shift = k;
        t.inverted = (inv != 0);
        out.push_back(t);
      }
    }
  }
  if (min_pairwise_distance(out) <= 1e-6)
    throw std::logic_error("all_solutions: distinctness failure at p=" + std::to_string(gd.p));
  return out;
}

namespace {

double residual_impl(std::int64_t p, std::int64_t n12, std::int64_t n02, std::int64_t n01,
                     const std::array<cplx, 3>& c) {
  std::array<lcplx, 3> z;
  for (int j = 0; j < 3; ++j) {
    if (c[static_cast<std::size_t>(j)] == cplx(0.0, 0.0))
      throw std::invalid_argument("residual: zero component");
    z[static_cast<std::size_t>(j)] = lcplx(c[static_cast<std::size_t>(j)].real(),
                                           c[static_cast<std::size_t>(j)].imag());
  }
  auto pair_sum = [&](int i, int j) {
    const lcplx r = z[static_cast<std::size_t>(i)] / z[static_cast<std::size_t>(j)];
    return r + 1.0L / r;
  };
  lreal worst = 0.0L;
  for (int a = 0; a < 3; ++a) {
    lcplx v = z[static_cast<std::size_t>(a)] + 1.0L / z[static_cast<std::size_t>(a)] +
              static_cast<lreal>(p - 4) / 3.0L +
              static_cast<lreal>(n12) * pair_sum((a + 1) % 3, (a + 2) % 3) +
              static_cast<lreal>(n02) * pair_sum(a, (a + 2) % 3) +
              static_cast<lreal>(n01) * pair_sum(a, (a + 1) % 3);
    worst = std::max(worst, std::abs(v));
  }
  return static_cast<double>(worst);
}

}  // namespace

double residual(const arith::GaussData& gd, const std::array<cplx, 3>& c) {
  const arith::TransitionTable n = arith::transition_numbers_closed_form(gd.p, gd.A, gd.B);
  return residual_impl(gd.p, n(1, 2), n(0, 2), n(0, 1), c);
}

double residual(const arith::GaussData& gd, const SolutionTriple& t) { return residual(gd, t.c); }

double residual_generic(const arith::PrimeContext& ctx, const std::array<cplx, 3>& c) {
  const arith::TransitionTable n = transition_numbers_bruteforce(ctx, 1);
  std::array<lcplx, 3> z;
  for (int j = 0; j < 3; ++j) {
    if (c[static_cast<std::size_t>(j)] == cplx(0.0, 0.0))
      throw std::invalid_argument("residual_generic: zero component");
    z[static_cast<std::size_t>(j)] = lcplx(c[static_cast<std::size_t>(j)].real(),
                                           c[static_cast<std::size_t>(j)].imag());
  }
  lreal worst = 0.0L;
  for (int a = 0; a < 3; ++a) {
    lcplx v = z[static_cast<std::size_t>(a)] + 1.0L / z[static_cast<std::size_t>(a)];
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k)
        v += static_cast<lreal>(n(i, k)) * z[static_cast<std::size_t>((k + a) % 3)] /
             z[static_cast<std::size_t>((i + a) % 3)];
    worst = std::max(worst, std::abs(v));
  }
  return static_cast<double>(worst);
}

std::array<cplx, 3> trig_decompose(const std::array<cplx, 3>& a, double theta) {
  // The basis {1, cos(phi_j), sin(phi_j)} is orthogonal over j = 0,1,2
  // with |cos|^2 = |sin|^2 = 3/2.
  lcplx rho(0.0L, 0.0L), sig(0.0L, 0.0L), tau(0.0L, 0.0L);
  for (int j = 0; j < 3; ++j) {
    const lreal phi = static_cast<lreal>(theta) - 2.0L * kPi * j / 3.0L;
    const lcplx aj(a[static_cast<std::size_t>(j)].real(), a[static_cast<std::size_t>(j)].imag());
    rho += aj;
    sig += aj * std::cos(phi);
    tau += aj * std::sin(phi);
  }
  auto dn = [](const lcplx& z) {
    return cplx(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  };
  return {dn(rho / 3.0L), dn(sig * (2.0L / 3.0L)), dn(tau * (2.0L / 3.0L))};
}

std::array<cplx, 3> t_check(const CoefficientSextuple& s, double theta) {
  const cplx a1 = s.alpha1, b1 = s.beta1, g1 = s.gamma1;
  const cplx a2 = s.alpha2, b2 = s.beta2, g2 = s.gamma2;
  const double c3 = std::cos(3.0 * theta), s3 = std::sin(3.0 * theta);
  const cplx t1 = (a1 * a1 - a2 * a2) + 0.5 * (b1 * b1 - b2 * b2) + 0.5 * (g1 * g1 - g2 * g2) - 4.0;
  const cplx t2 = 2.0 * (a1 * b1 - a2 * b2) + 0.5 * (b1 * b1 - b2 * b2 - g1 * g1 + g2 * g2) * c3 +
                  (b1 * g1 - b2 * g2) * s3;
  const cplx t3 = 2.0 * (a1 * g1 - a2 * g2) + 0.5 * (b1 * b1 - b2 * b2 - g1 * g1 + g2 * g2) * s3 -
                  (b1 * g1 - b2 * g2) * c3;
  return {t1, t2, t3};
}

cplx gaussian_cubic_sum(std::int64_t p) {
  lreal re = 0.0L, im = 0.0L;
  const auto up = static_cast<std::uint64_t>(p);
  for (std::int64_t j = 0; j < p; ++j) {
    const std::uint64_t j2 = arith::detail::mulmod(static_cast<std::uint64_t>(j),
                                                   static_cast<std::uint64_t>(j), up);
    const std::uint64_t j3 = arith::detail::mulmod(j2, static_cast<std::uint64_t>(j), up);
    const lreal phi = 2.0L * kPi * static_cast<lreal>(j3) / static_cast<lreal>(p);
    re += std::cos(phi);
    im += std::sin(phi);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

double max_norm_dist(const std::array<cplx, 3>& a, const std::array<cplx, 3>& b) {
  double d = 0.0;
  for (int j = 0; j < 3; ++j)
    d = std::max(d, std::abs(a[static_cast<std::size_t>(j)] - b[static_cast<std::size_t>(j)]));
  return d;
}

double min_pairwise_distance(const std::vector<SolutionTriple>& sols) {
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < sols.size(); ++i)
    for (std::size_t j = i + 1; j < sols.size(); ++j)
      d = std::min(d, max_norm_dist(sols[i].c, sols[j].c));
  return d;
}

}  // namespace cproots::solver
