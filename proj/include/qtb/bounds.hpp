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

#ifndef QTB_BOUNDS_HPP
#define QTB_BOUNDS_HPP

#include <span>

#include "qtb/fcs.hpp"
#include "qtb/thermo.hpp"

namespace qtb {

/// Uniform absolute slack for the inequality checks; all quantities are
/// O(1)-O(10²) at the benchmark parameters.
inline constexpr double kBoundSlack = 1e-9;

/// Inverse of x tanh(x) on x >= 0, solved by safeguarded Newton to 1e-12
/// relative. Satisfies f(x) >= max(√x, x).
double f_inverse(double x);

/// (1+δ)² (4A₁/ΔS²) f(ΔS/2A₁)²; +inf once ΔS drops below 1e-12
/// (the bound diverges at equilibrium).
double tkur_rhs(double delta_s1_tot, double a1, double delta);

/// 2(1+δ)²/(Σ₁-I₁), same equilibrium sentinel.
double tur_rhs(double sigma1, double i1, double delta);

/// F₁ = rel_fluct (Σ₁-I₁)/(1+δ)² and F₁' = rel_fluct (Σ₁-I₁).
std::pair<double, double> quality_factors(double rel_fluct, double delta, double sigma1,
                                          double i1);

/// One full single-current bound evaluation.
struct BoundReport {
  double rel_fluct = 0.0;
  double tkur = 0.0;
  double tur = 0.0;
  double f1 = 0.0;
  double f1_prime = 0.0;
  double margin_tkur = 0.0;  // LHS - RHS
  double margin_tur = 0.0;
  double delta = 0.0;
  ThermoAccumulants accumulants;
  bool vacuous_equilibrium = false;  // ΔS and ⟨J⟩ both below 1e-12
};

BoundReport make_bound_report(double mean, double variance, double delta,
                              const ThermoAccumulants& acc);

/// Optimized linear combination of currents: z = Ξ⁻¹j/(jᵀΞ⁻¹j),
/// lhs = jᵀΞ⁻¹j <= (ΔS²/4A₁) f(ΔS/2A₁)⁻². Singular Ξ falls back to a
/// pseudo-inverse with cutoff 1e-12 σ_max and is flagged.
struct MultiCurrentReport {
  Eigen::VectorXd jvec;   // corrected means ⟨J_i⟩ + ⟨J_i⟩_φ
  Eigen::MatrixXd xi;
  double lhs = 0.0;
  double rhs = 0.0;
  Eigen::VectorXd z_opt;
  double lambda = 0.0;
  double condition = 0.0;
  bool pseudo_inverse = false;
};

MultiCurrentReport multidim_tkur(const CumulantResult& cumulants,
                                 std::span<const double> phi_means, double delta_s1_tot,
                                 double a1);

/// Information-engine metrics at stationarity. Applicable when both the
/// entropy flow into the subsystem's reservoirs and the information flow
/// are negative; mean/variance refer to the entropy-flow current.
struct EngineMetrics {
  bool applicable = false;
  double eta = 0.0;
  double tradeoff_rhs = 0.0;  // Var (1-η) / (2(1+δ)² η)
};

EngineMetrics engine_metrics(double sigma_dot, double i_dot, double mean, double variance,
                             double delta);

/// Clock metrics: inverse Fano factor and entropy cost per tick.
struct ClockMetrics {
  bool applicable = false;
  double fano_inverse = 0.0;
  double sigma_tick = 0.0;
  double bound = 0.0;  // σ_tick / (2(1+δ)²)
};

ClockMetrics clock_metrics(double mean, double variance, double delta_s1_tot, double delta);

}  // namespace qtb

#endif  // QTB_BOUNDS_HPP
