#include "cproots/expand.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "cproots/solver.hpp"

namespace cproots::expand {

namespace {

using lreal = long double;
using lcplx = std::complex<lreal>;

constexpr lreal kPi = std::numbers::pi_v<lreal>;

std::vector<cplx> unit_roots(std::int64_t p) {
  std::vector<cplx> w(static_cast<std::size_t>(p));
  for (std::int64_t k = 0; k < p; ++k) {
    const lreal phi = 2.0L * kPi * static_cast<lreal>(k) / static_cast<lreal>(p);
    w[static_cast<std::size_t>(k)] = cplx(static_cast<double>(std::cos(phi)),
                                          static_cast<double>(std::sin(phi)));
  }
  return w;
}

std::int64_t mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

}  // namespace

IndexThreeSequence build_sequence(const arith::PrimeContext& ctx, const std::array<cplx, 3>& c,
                                  std::int64_t r, std::int64_t l, bool normalize) {
  for (const cplx& z : c)
    if (z == cplx(0.0, 0.0)) throw std::invalid_argument("build_sequence: zero component in c");
  const std::int64_t p = ctx.p();
  r = mod(r, p);
  l = mod(l, p);
  const std::vector<cplx> w = unit_roots(p);
  IndexThreeSequence seq;
  seq.p = p;
  seq.r = r;
  seq.l = l;
  seq.x.resize(static_cast<std::size_t>(p));
  for (std::int64_t j = 0; j < p; ++j) {
    const cplx mod_factor = w[static_cast<std::size_t>(mod(r * j, p))];
    seq.x[static_cast<std::size_t>(j)] =
        (j == l) ? mod_factor : mod_factor * c[static_cast<std::size_t>(ctx.coset_of(j - l))];
  }
  if (normalize) {
    seq.b = 1.0 / seq.x[0];
    for (cplx& v : seq.x) v *= seq.b;
  }
  return seq;
}

std::vector<cplx> x_to_z(std::span<const cplx> x) {
  const std::size_t p = x.size();
  std::vector<cplx> z(p);
  for (std::size_t j = 0; j < p; ++j) {
    if (x[j] == cplx(0.0, 0.0)) throw std::invalid_argument("x_to_z: zero component");
    z[j] = x[(j + 1) % p] / x[j];
  }
  return z;
}

namespace {

template <bool Parallel>
double cyclic_root_residual_impl(std::span<const cplx> z) {
  const std::int64_t p = static_cast<std::int64_t>(z.size());
  std::vector<lcplx> zl(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) zl[j] = lcplx(z[j].real(), z[j].imag());

  // Running window products: after step d, prod[j] = z_j z_{j+1} ... z_{j+d-1}.
  std::vector<lcplx> prod = zl;
  lreal worst = 0.0L;
  for (std::int64_t d = 1; d < p; ++d) {
    lreal sre = 0.0L, sim = 0.0L;
#pragma omp parallel for reduction(+ : sre, sim) if (Parallel)
    for (std::int64_t j = 0; j < p; ++j) {
      sre += prod[static_cast<std::size_t>(j)].real();
      sim += prod[static_cast<std::size_t>(j)].imag();
    }
    worst = std::max(worst, std::hypot(sre, sim));
#pragma omp parallel for if (Parallel)
    for (std::int64_t j = 0; j < p; ++j)
      prod[static_cast<std::size_t>(j)] *= zl[static_cast<std::size_t>((j + d) % p)];
  }
  // prod[0] now holds the full cyclic product.
  worst = std::max(worst, std::abs(prod[0] - lcplx(1.0L, 0.0L)));
  return static_cast<double>(worst);
}

template <bool Parallel>
std::vector<cplx> dft_impl(std::span<const cplx> x) {
  const std::int64_t p = static_cast<std::int64_t>(x.size());
  std::vector<cplx> out(x.size());
  const lreal scale = 1.0L / std::sqrt(static_cast<lreal>(p));
  std::vector<lcplx> wl(x.size());
  for (std::int64_t k = 0; k < p; ++k) {
    const lreal phi = 2.0L * kPi * static_cast<lreal>(k) / static_cast<lreal>(p);
    wl[static_cast<std::size_t>(k)] = lcplx(std::cos(phi), std::sin(phi));
  }
#pragma omp parallel for schedule(static) if (Parallel)
  for (std::int64_t nu = 0; nu < p; ++nu) {
    lcplx acc(0.0L, 0.0L);
    for (std::int64_t j = 0; j < p; ++j)
      acc += lcplx(x[static_cast<std::size_t>(j)].real(), x[static_cast<std::size_t>(j)].imag()) *
             wl[static_cast<std::size_t>((j * nu) % p)];
    acc *= scale;
    out[static_cast<std::size_t>(nu)] =
        cplx(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
  }
  return out;
}

template <bool Parallel>
std::vector<cplx> autocorrelation_impl(std::span<const cplx> x) {
  const std::int64_t p = static_cast<std::int64_t>(x.size());
  std::vector<cplx> gamma(x.size());
#pragma omp parallel for schedule(static) if (Parallel)
  for (std::int64_t k = 0; k < p; ++k) {
    lcplx acc(0.0L, 0.0L);
    for (std::int64_t j = 0; j < p; ++j) {
      const cplx& a = x[static_cast<std::size_t>(j)];
      const cplx& b = x[static_cast<std::size_t>((j + k) % p)];
      acc += lcplx(a.real(), -a.imag()) * lcplx(b.real(), b.imag());
    }
    gamma[static_cast<std::size_t>(k)] =
        cplx(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
  }
  return gamma;
}

}  // namespace

double cyclic_root_residual(std::span<const cplx> z) { return cyclic_root_residual_impl<true>(z); }
double cyclic_root_residual_serial(std::span<const cplx> z) { return cyclic_root_residual_impl<false>(z); }
std::vector<cplx> dft(std::span<const cplx> x) { return dft_impl<true>(x); }
std::vector<cplx> dft_serial(std::span<const cplx> x) { return dft_impl<false>(x); }
std::vector<cplx> autocorrelation(std::span<const cplx> x) { return autocorrelation_impl<true>(x); }
std::vector<cplx> autocorrelation_serial(std::span<const cplx> x) { return autocorrelation_impl<false>(x); }

bool is_biunimodular(std::span<const cplx> x, double tol) {
  for (const cplx& v : x)
    if (std::fabs(std::abs(v) - 1.0) > tol) return false;
  for (const cplx& v : dft(x))
    if (std::fabs(std::abs(v) - 1.0) > tol) return false;
  return true;
}

std::vector<cplx> gaussian_sequence(std::int64_t p, std::int64_t m, std::int64_t n) {
  const std::vector<cplx> w = unit_roots(p);
  std::vector<cplx> x(static_cast<std::size_t>(p));
  for (std::int64_t j = 0; j < p; ++j)
    x[static_cast<std::size_t>(j)] = w[static_cast<std::size_t>(mod(m * j * j + n * j, p))];
  return x;
}

std::vector<cplx> circulant_matrix(std::span<const cplx> x) {
  const std::int64_t p = static_cast<std::int64_t>(x.size());
  std::vector<cplx> H(static_cast<std::size_t>(p * p));
  for (std::int64_t j = 0; j < p; ++j)
    for (std::int64_t k = 0; k < p; ++k)
      H[static_cast<std::size_t>(j * p + k)] = x[static_cast<std::size_t>(mod(j - k, p))];
  return H;
}

namespace {

template <bool Parallel>
HadamardReport hadamard_check_impl(std::span<const cplx> x, double tol) {
  const std::int64_t p = static_cast<std::int64_t>(x.size());
  if (!is_biunimodular(x, tol)) {
    double dev = 0.0;
    for (const cplx& v : x) dev = std::max(dev, std::fabs(std::abs(v) - 1.0));
    for (const cplx& v : dft(x)) dev = std::max(dev, std::fabs(std::abs(v) - 1.0));
    throw std::invalid_argument("hadamard_check: input is not bi-unimodular (max deviation " +
                                std::to_string(dev) + ")");
  }
  const std::vector<cplx> H = circulant_matrix(x);
  HadamardReport rep;
  rep.p = p;
  for (const cplx& h : H)
    rep.max_entry_deviation = std::max(rep.max_entry_deviation, std::fabs(std::abs(h) - 1.0));
  double worst = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst) if (Parallel)
  for (std::int64_t j = 0; j < p; ++j) {
    for (std::int64_t k = 0; k < p; ++k) {
      lcplx acc(0.0L, 0.0L);
      for (std::int64_t m = 0; m < p; ++m) {
        const cplx& a = H[static_cast<std::size_t>(j * p + m)];
        const cplx& b = H[static_cast<std::size_t>(k * p + m)];
        acc += lcplx(a.real(), a.imag()) * lcplx(b.real(), -b.imag());
      }
      if (j == k) acc -= static_cast<lreal>(p);
      worst = std::max(worst, static_cast<double>(std::abs(acc)));
    }
  }
  rep.max_gram_deviation = worst;
  return rep;
}

}  // namespace

HadamardReport hadamard_check(std::span<const cplx> x, double tol) {
  return hadamard_check_impl<true>(x, tol);
}
HadamardReport hadamard_check_serial(std::span<const cplx> x, double tol) {
  return hadamard_check_impl<false>(x, tol);
}

namespace {

constexpr double kDedupTol = 1e-8;
constexpr double kSeparationBound = 1e-4;

// Streaming dedup over the (solution, r, l) grid: candidates are never stored,
// only a random-projection key per candidate; vectors are regenerated on demand.
class GridEnumerator {
 public:
  GridEnumerator(const arith::PrimeContext& ctx, bool roots)
      : ctx_(ctx), p_(ctx.p()), roots_(roots), w_(unit_roots(ctx.p())) {
    const auto all = solver::all_solutions(ctx.gauss_data());
    for (const auto& s : all)
      if (roots_ || s.is_unimodular()) sols_.push_back(s);
    std::mt19937 rng(0x51ab2au ^ static_cast<std::uint32_t>(p_));
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    proj_.resize(2 * static_cast<std::size_t>(p_));
    lipschitz_ = 0.0;
    for (double& a : proj_) {
      a = dist(rng);
      lipschitz_ += std::fabs(a);
    }
  }

  std::int64_t grid_size() const { return static_cast<std::int64_t>(sols_.size()) * p_ * p_; }

  int class_of(std::int64_t idx) const {
    const auto& s = sols_[static_cast<std::size_t>(idx / (p_ * p_))];
    return s.kind == solver::SolutionKind::Canonical ? s.branch : 0;
  }

  void fill(std::int64_t idx, std::vector<cplx>& out) const {
    const std::int64_t l = idx % p_;
    const std::int64_t r = (idx / p_) % p_;
    const auto& sol = sols_[static_cast<std::size_t>(idx / (p_ * p_))];
    out.resize(static_cast<std::size_t>(p_));
    for (std::int64_t j = 0; j < p_; ++j) {
      const cplx mf = w_[static_cast<std::size_t>(mod(r * j, p_))];
      out[static_cast<std::size_t>(j)] =
          (j == l) ? mf : mf * sol.c[static_cast<std::size_t>(ctx_.coset_of(j - l))];
    }
    if (roots_) {
      cplx prev = out[0];
      for (std::int64_t j = 0; j < p_; ++j) {
        const cplx next = out[static_cast<std::size_t>((j + 1) % p_)];
        const cplx cur = out[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(j)] = (j + 1 == p_ ? prev : next) / cur;
      }
    } else {
      const cplx b = 1.0 / out[0];
      for (cplx& v : out) v *= b;
    }
  }

  double key(const std::vector<cplx>& v) const {
    double k = 0.0;
    for (std::size_t t = 0; t < v.size(); ++t)
      k += proj_[2 * t] * v[t].real() + proj_[2 * t + 1] * v[t].imag();
    return k;
  }

  double lipschitz() const { return lipschitz_; }

 private:
  const arith::PrimeContext& ctx_;
  std::int64_t p_;
  bool roots_;
  std::vector<cplx> w_;
  std::vector<solver::SolutionTriple> sols_;
  std::vector<double> proj_;
  double lipschitz_ = 0.0;
};

double max_norm(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double d = 0.0;
  for (std::size_t t = 0; t < a.size(); ++t) d = std::max(d, std::abs(a[t] - b[t]));
  return d;
}

EnumerationResult enumerate_impl(const arith::PrimeContext& ctx, bool roots, bool keep) {
  if (ctx.p() > 101)
    throw std::invalid_argument("enumerate: p > 101 (grid has " +
                                std::to_string((roots ? 20 : 12) * ctx.p() * ctx.p()) +
                                " candidate vectors of length " + std::to_string(ctx.p()) + ")");
  const GridEnumerator grid(ctx, roots);
  const std::int64_t n = grid.grid_size();

  std::vector<double> keys(static_cast<std::size_t>(n));
#pragma omp parallel
  {
    std::vector<cplx> scratch;
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
      grid.fill(i, scratch);
      keys[static_cast<std::size_t>(i)] = grid.key(scratch);
    }
  }
  std::vector<std::int64_t> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::int64_t a, std::int64_t b) { return keys[static_cast<std::size_t>(a)] <
                                                         keys[static_cast<std::size_t>(b)]; });

  const double dup_window = grid.lipschitz() * kDedupTol;
  const double sep_window = grid.lipschitz() * kSeparationBound;

  EnumerationResult res;
  std::vector<std::int64_t> reps;  // candidate indices, in key order
  std::vector<cplx> cur, other;
  std::size_t lo = 0;
  double min_sep = std::numeric_limits<double>::infinity();
  for (std::int64_t oi : order) {
    const double k = keys[static_cast<std::size_t>(oi)];
    while (lo < reps.size() && k - keys[static_cast<std::size_t>(reps[lo])] > dup_window) ++lo;
    grid.fill(oi, cur);
    bool dup = false;
    for (std::size_t t = lo; t < reps.size() && !dup; ++t) {
      grid.fill(reps[t], other);
      if (max_norm(cur, other) <= kDedupTol) dup = true;
    }
    if (!dup) {
      reps.push_back(oi);
      ++res.by_class[static_cast<std::size_t>(grid.class_of(oi))];
      if (keep) {
        res.representatives.push_back(cur);
        res.representative_class.push_back(grid.class_of(oi));
      }
    }
  }
  res.total = static_cast<std::int64_t>(reps.size());

  // Separation pre-check: every distinct pair closer than the bound must fall
  // inside the projection window, so scanning windows is exhaustive.
  std::size_t slo = 0;
  for (std::size_t t = 0; t < reps.size(); ++t) {
    const double k = keys[static_cast<std::size_t>(reps[t])];
    while (slo < t && k - keys[static_cast<std::size_t>(reps[slo])] > sep_window) ++slo;
    if (slo == t) continue;
    grid.fill(reps[t], cur);
    for (std::size_t q = slo; q < t; ++q) {
      grid.fill(reps[q], other);
      min_sep = std::min(min_sep, max_norm(cur, other));
    }
  }
  res.observed_min_separation = min_sep;
  res.separation_ok = !(min_sep <= kSeparationBound);
  return res;
}

}  // namespace

EnumerationResult enumerate_biunimodular(const arith::PrimeContext& ctx, bool keep) {
  return enumerate_impl(ctx, /*roots=*/false, keep);
}

EnumerationResult enumerate_cyclic_roots(const arith::PrimeContext& ctx, bool keep) {
  return enumerate_impl(ctx, /*roots=*/true, keep);
}

}  // namespace cproots::expand
