#include "cproots/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "cproots/solver.hpp"

namespace cproots::asymptotics {

namespace {

constexpr double kPi = std::numbers::pi_v<double>;

double max_norm(const std::array<cplx, 3>& a) {
  return std::max({std::abs(a[0]), std::abs(a[1]), std::abs(a[2])});
}

std::array<cplx, 3> operator+(const std::array<cplx, 3>& a, const std::array<cplx, 3>& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

std::array<cplx, 3> operator-(const std::array<cplx, 3>& a, const std::array<cplx, 3>& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

cplx circumcenter(const std::array<cplx, 3>& b) {
  // Intersection of perpendicular bisectors; degenerate iff collinear.
  const cplx z1 = b[1] - b[0], z2 = b[2] - b[0];
  const double det = 2.0 * (z1.real() * z2.imag() - z1.imag() * z2.real());
  const double scale = std::max({1.0, std::norm(z1), std::norm(z2)});
  if (std::fabs(det) <= 1e-8 * scale)
    throw std::domain_error("scalenity: collinear (degenerate) triple");
  const double n1 = std::norm(z1), n2 = std::norm(z2);
  const double ux = (z2.imag() * n1 - z1.imag() * n2) / det;
  const double uy = (z1.real() * n2 - z2.real() * n1) / det;
  return b[0] + cplx(ux, uy);
}

}  // namespace

double scalenity(const std::array<cplx, 3>& b) {
  bool unimodular = true;
  for (const cplx& z : b)
    if (std::fabs(std::abs(z) - 1.0) > 1e-8) unimodular = false;
  const cplx w = unimodular ? cplx(0.0, 0.0) : circumcenter(b);
  std::array<double, 3> phi{};
  for (int i = 0; i < 3; ++i) phi[static_cast<std::size_t>(i)] = std::arg(b[static_cast<std::size_t>(i)] - w);
  double worst = 0.0;
  for (int j = 0; j < 3; ++j)
    worst = std::max(worst, std::fabs(0.5 + std::cos(phi[static_cast<std::size_t>((j + 2) % 3)] -
                                                     phi[static_cast<std::size_t>((j + 1) % 3)])));
  return worst;
}

std::array<cplx, 3> limit_triangle(double theta) {
  std::array<cplx, 3> d;
  for (int j = 0; j < 3; ++j) {
    const double phi = 2.0 * (theta - 2.0 * kPi * j / 3.0);
    d[static_cast<std::size_t>(j)] = cplx(std::cos(phi), std::sin(phi));
  }
  return d;
}

ScalenityReport bound_suite(const arith::GaussData& gd) {
  ScalenityReport r;
  r.p = gd.p;
  r.theta = gd.theta;
  const double isq = 1.0 / std::sqrt(static_cast<double>(gd.p));
  const auto c1 = solver::canonical_solution(gd, 1).c;
  const auto c2 = solver::canonical_solution(gd, 2).c;
  const auto d = limit_triangle(gd.theta);
  r.scal1 = scalenity(c1);
  r.scal2 = scalenity(c2);
  r.bound1 = 3.5 * isq;
  r.bound2 = 4.2 * isq;
  r.dist_c1_plus_d = max_norm(c1 + d);
  r.dist_c2_minus_d = max_norm(c2 - d);
  r.bound_d1 = 3.0 * isq;
  r.bound_d2 = 4.2 * isq;
  r.sum_norm = max_norm(c1 + c2);
  r.sum_bound = 7.2 * isq;
  auto check = [&](double v, double bound, const char* name) {
    if (!(v <= bound))
      r.failures.push_back(std::string(name) + ": " + std::to_string(v) + " > " + std::to_string(bound));
  };
  check(r.scal1, r.bound1, "scal(c1) <= 7/(2 sqrt p)");
  check(r.scal2, r.bound2, "scal(c2) <= 21/(5 sqrt p)");
  check(r.dist_c1_plus_d, r.bound_d1, "||c1 + d|| <= 3/sqrt p");
  check(r.dist_c2_minus_d, r.bound_d2, "||c2 - d|| <= 21/(5 sqrt p)");
  check(r.sum_norm, r.sum_bound, "||c1 + c2|| <= 36/(5 sqrt p)");
  return r;
}

PairBoundReport pair_bounds(std::span<const arith::GaussData> gds) {
  PairBoundReport rep;
  std::vector<std::array<cplx, 3>> c1s, c2s;
  c1s.reserve(gds.size());
  c2s.reserve(gds.size());
  for (const auto& gd : gds) {
    c1s.push_back(solver::canonical_solution(gd, 1).c);
    c2s.push_back(solver::canonical_solution(gd, 2).c);
  }
  for (std::size_t i = 0; i < gds.size(); ++i) {
    for (std::size_t j = i + 1; j < gds.size(); ++j) {
      ++rep.pairs;
      const double dtheta = 2.0 * std::fabs(gds[i].theta - gds[j].theta);
      const double si = 1.0 / std::sqrt(static_cast<double>(gds[i].p));
      const double sj = 1.0 / std::sqrt(static_cast<double>(gds[j].p));
      if (!(max_norm(c1s[i] - c1s[j]) <= dtheta + 3.0 * (si + sj)))
        rep.failures.push_back("first canonical pair bound violated at p=" +
                               std::to_string(gds[i].p) + "," + std::to_string(gds[j].p));
      if (!(max_norm(c2s[i] - c2s[j]) <= dtheta + 4.2 * (si + sj)))
        rep.failures.push_back("second canonical pair bound violated at p=" +
                               std::to_string(gds[i].p) + "," + std::to_string(gds[j].p));
    }
  }
  return rep;
}

ThirdBranchReport third_branch_ratios(const arith::GaussData& gd) {
  ThirdBranchReport r;
  r.p = gd.p;
  const auto c3 = solver::canonical_solution(gd, 3).c;
  const double sq = std::sqrt(static_cast<double>(gd.p));
  r.limit_l = {-2.0 * std::cos(gd.theta), -2.0 * std::sin(gd.theta - kPi / 6.0),
               2.0 * std::sin(gd.theta + kPi / 6.0)};
  double mn = std::numeric_limits<double>::infinity();
  for (int j = 0; j < 3; ++j) {
    const auto js = static_cast<std::size_t>(j);
    r.ratios[js] = c3[js].real() / sq;
    r.limit_ratios[js] = 1.0 / r.limit_l[js];
    mn = std::min(mn, std::fabs(r.ratios[js]));
  }
  r.min_abs_ratio = mn;
  r.margin_below_half = mn - 0.5;
  return r;
}

namespace {

void push(TableRow& row, const std::string& name, double v) {
  row.cells.push_back({name, false, cplx(v, 0.0)});
}

void push(TableRow& row, const std::string& name, cplx v) { row.cells.push_back({name, true, v}); }

}  // namespace

std::vector<TableRow> make_table(int which, std::span<const std::int64_t> primes) {
  if (which < 1 || which > 5) throw std::invalid_argument("make_table: table index must be 1..5");
  std::vector<TableRow> rows;
  rows.reserve(primes.size());
  for (std::int64_t p : primes) {
    const arith::GaussData gd = arith::GaussData::of(p);  // validates admissibility
    TableRow row;
    row.p = p;
    push(row, "A", static_cast<double>(gd.A));
    push(row, "B", static_cast<double>(gd.B));
    push(row, "theta", gd.theta);
    switch (which) {
      case 1:
      case 2: {
        const auto c = solver::canonical_solution(gd, which).c;
        for (int j = 0; j < 3; ++j)
          push(row, "c" + std::to_string(j), c[static_cast<std::size_t>(j)]);
        push(row, "scal", scalenity(c));
        break;
      }
      case 3: {
        const auto c = solver::canonical_solution(gd, 3).c;
        const double sq = std::sqrt(static_cast<double>(p));
        for (int j = 0; j < 3; ++j)
          push(row, "c" + std::to_string(j), c[static_cast<std::size_t>(j)].real());
        for (int j = 0; j < 3; ++j)
          push(row, "c" + std::to_string(j) + "_ratio", c[static_cast<std::size_t>(j)].real() / sq);
        break;
      }
      case 4: {
        const auto c1 = solver::canonical_solution(gd, 1).c;
        const auto c2 = solver::canonical_solution(gd, 2).c;
        push(row, "arg_c0_1", std::arg(c1[0]));
        push(row, "two_theta_minus_pi", 2.0 * gd.theta - kPi);
        push(row, "arg_c0_2", std::arg(c2[0]));
        push(row, "two_theta", 2.0 * gd.theta);
        push(row, "scal", scalenity(c1));
        break;
      }
      case 5: {
        const auto rep = third_branch_ratios(gd);
        for (int j = 0; j < 3; ++j)
          push(row, "c" + std::to_string(j) + "_ratio", rep.ratios[static_cast<std::size_t>(j)]);
        break;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::int64_t> small_table_primes() {
  return {7, 13, 19, 31, 37, 43, 61, 67, 73, 79, 97, 103, 109, 127, 139, 151, 157, 163, 181};
}

}  // namespace cproots::asymptotics
