// Copyright 2026 The qtbounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qtb/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qtb {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEquilibriumFloor = 1e-12;
}  // namespace

double f_inverse(double x) {
  if (x < 0.0) throw std::invalid_argument("f_inverse: argument must be nonnegative");
  if (x == 0.0) return 0.0;

  auto g = [x](double y) { return y * std::tanh(y) - x; };
  // The root satisfies y >= max(√x, x) since tanh(y) <= min(1, y).
  double lo = std::max(std::sqrt(x), x);
  double hi = lo + 1.0;
  while (g(hi) < 0.0) hi = 2.0 * hi;

  double y = lo;
  bool converged = false;
  for (int iter = 0; iter < 50; ++iter) {
    const double t = std::tanh(y);
    const double value = y * t - x;
    if (std::abs(value) <= 1e-12 * x) {
      converged = true;
      break;
    }
    const double sech = 1.0 / std::cosh(y);
    const double slope = t + y * sech * sech;
    double next = y - value / slope;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);  // bisection fallback
    if (value > 0.0) hi = y; else lo = y;
    y = next;
  }
  if (!converged) {
    for (int iter = 0; iter < 200 && hi - lo > 1e-15 * hi; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (g(mid) < 0.0) lo = mid; else hi = mid;
    }
    y = 0.5 * (lo + hi);
  }
  return y;
}

double tkur_rhs(double delta_s1_tot, double a1, double delta) {
  if (a1 <= 0.0) throw std::invalid_argument("tkur_rhs: activity must be positive");
  if (delta_s1_tot <= kEquilibriumFloor) return kInf;
  const double f = f_inverse(delta_s1_tot / (2.0 * a1));
  const double prefactor = (1.0 + delta) * (1.0 + delta);
  return prefactor * 4.0 * a1 / (delta_s1_tot * delta_s1_tot) * f * f;
}

double tur_rhs(double sigma1, double i1, double delta) {
  const double ds = sigma1 - i1;
  if (ds <= kEquilibriumFloor) return kInf;
  return 2.0 * (1.0 + delta) * (1.0 + delta) / ds;
}

std::pair<double, double> quality_factors(double rel_fluct, double delta, double sigma1,
                                          double i1) {
  const double ds = sigma1 - i1;
  if (ds <= 0.0)
    throw std::runtime_error("quality_factors: Sigma1 - I1 <= 0 violates the local second law");
  const double f1_prime = rel_fluct * ds;
  const double f1 = f1_prime / ((1.0 + delta) * (1.0 + delta));
  return {f1, f1_prime};
}

BoundReport make_bound_report(double mean, double variance, double delta,
                              const ThermoAccumulants& acc) {
  BoundReport report;
  report.accumulants = acc;
  report.delta = delta;
  report.vacuous_equilibrium =
      acc.delta_s1_tot <= kEquilibriumFloor && std::abs(mean) <= kEquilibriumFloor;
  if (report.vacuous_equilibrium) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    report.rel_fluct = kInf;
    report.tkur = nan;
    report.tur = nan;
    report.f1 = nan;
    report.f1_prime = nan;
    report.margin_tkur = nan;
    report.margin_tur = nan;
    return report;
  }
  report.rel_fluct = variance / (mean * mean);
  report.tkur = tkur_rhs(acc.delta_s1_tot, acc.a1, delta);
  report.tur = tur_rhs(acc.sigma1, acc.i1, delta);
  report.margin_tkur = report.rel_fluct - report.tkur;
  report.margin_tur = report.rel_fluct - report.tur;
  auto [f1, f1p] = quality_factors(report.rel_fluct, delta, acc.sigma1, acc.i1);
  report.f1 = f1;
  report.f1_prime = f1p;
  return report;
}

MultiCurrentReport multidim_tkur(const CumulantResult& cumulants,
                                 std::span<const double> phi_means, double delta_s1_tot,
                                 double a1) {
  const auto m = static_cast<Eigen::Index>(cumulants.means.size());
  if (static_cast<Eigen::Index>(phi_means.size()) != m)
    throw std::invalid_argument("multidim_tkur: one φ-mean per current required");

  MultiCurrentReport report;
  report.jvec.resize(m);
  for (Eigen::Index i = 0; i < m; ++i)
    report.jvec(i) = cumulants.means[static_cast<std::size_t>(i)] +
                     phi_means[static_cast<std::size_t>(i)];
  report.xi = cumulants.covariance;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(report.xi);
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double cutoff = 1e-12 * std::max(ev.cwiseAbs().maxCoeff(), 0.0);
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (ev(i) > cutoff) {
      inv(i) = 1.0 / ev(i);
    } else {
      report.pseudo_inverse = true;
    }
  }
  report.condition = ev.maxCoeff() / std::max(ev.minCoeff(), 1e-300);
  const Eigen::MatrixXd xi_inv =
      es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();

  report.lhs = report.jvec.dot(xi_inv * report.jvec);
  if (report.lhs > 0.0) {
    report.z_opt = (xi_inv * report.jvec) / report.lhs;
    report.lambda = 1.0 / report.lhs;
  } else {
    report.z_opt = Eigen::VectorXd::Zero(m);
    report.lambda = kInf;
  }
  if (a1 <= 0.0) throw std::invalid_argument("multidim_tkur: activity must be positive");
  if (delta_s1_tot <= kEquilibriumFloor) {
    report.rhs = kInf;
  } else {
    const double f = f_inverse(delta_s1_tot / (2.0 * a1));
    report.rhs = delta_s1_tot * delta_s1_tot / (4.0 * a1 * f * f);
  }
  return report;
}

EngineMetrics engine_metrics(double sigma_dot, double i_dot, double mean, double variance,
                             double delta) {
  EngineMetrics metrics;
  if (!(-sigma_dot > 0.0) || !(-i_dot > 0.0)) return metrics;  // out of regime
  metrics.applicable = true;
  metrics.eta = sigma_dot / i_dot;
  const double prefactor = 2.0 * (1.0 + delta) * (1.0 + delta) * metrics.eta;
  metrics.tradeoff_rhs =
      prefactor > 0.0 ? variance * (1.0 - metrics.eta) / prefactor : kInf;
  if (metrics.eta > 1.0 + kBoundSlack)
    throw std::runtime_error("engine_metrics: efficiency above one violates the second law");
  if (std::abs(mean) > metrics.tradeoff_rhs + kBoundSlack)
    throw std::runtime_error("engine_metrics: heat-current trade-off violated");
  return metrics;
}

ClockMetrics clock_metrics(double mean, double variance, double delta_s1_tot, double delta) {
  ClockMetrics metrics;
  if (mean == 0.0 || variance <= 0.0) return metrics;
  metrics.applicable = true;
  const double abs_mean = std::abs(mean);
  metrics.fano_inverse = abs_mean / variance;
  metrics.sigma_tick = delta_s1_tot / abs_mean;
  metrics.bound = metrics.sigma_tick / (2.0 * (1.0 + delta) * (1.0 + delta));
  if (metrics.fano_inverse > metrics.bound + kBoundSlack)
    throw std::runtime_error("clock_metrics: accuracy bound violated");
  return metrics;
}

}  // namespace qtb
