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

#include "qtb/thermo.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qtb {

ThermoRates rates_at(const LindbladModel& model, const Matrix& rho) {
  const int nsub = model.space().num_subsystems();
  const int nch = model.num_channels();

  HermitianSpectrum spec = hermitian_spectrum(rho);
  if (spec.values.minCoeff() < -1e-8)
    throw std::domain_error("rates_at: state has a significantly negative eigenvalue");
  const int dim = model.dim();
  Eigen::VectorXd logp = Eigen::VectorXd::Zero(dim);
  Eigen::VectorXd plogp = Eigen::VectorXd::Zero(dim);
  for (int n = 0; n < dim; ++n) {
    if (spec.values(n) > kLogFloor) {
      logp(n) = std::log(spec.values(n));
      plogp(n) = spec.values(n) * logp(n);
    }
  }
  const Matrix log_rho = spec.vectors * logp.asDiagonal() * spec.vectors.adjoint();
  const Matrix rho_log_rho = spec.vectors * plogp.asDiagonal() * spec.vectors.adjoint();

  const Matrix lrho = generator_apply(model, rho);

  ThermoRates rates;
  rates.s_dot_tot.assign(static_cast<std::size_t>(nsub), 0.0);
  rates.s_dot_tot_spectral.assign(static_cast<std::size_t>(nsub),
                                  std::numeric_limits<double>::quiet_NaN());
  rates.i_dot.assign(static_cast<std::size_t>(nsub), 0.0);
  rates.sigma_dot.assign(static_cast<std::size_t>(nsub), 0.0);
  rates.s_dot.assign(static_cast<std::size_t>(nsub), 0.0);
  rates.activity.assign(static_cast<std::size_t>(nsub), 0.0);
  rates.s_dot_global = -trace_prod(lrho, log_rho).real();

  // Operator route: per-channel jump rate r_k and dissipator-log overlap
  // d_k = tr((D[L]ρ) ln ρ) = tr(LρL† ln ρ) - tr(L†L ρ ln ρ).
  std::vector<double> r(static_cast<std::size_t>(nch), 0.0);
  std::vector<double> d_log(static_cast<std::size_t>(nch), 0.0);
  std::vector<Matrix> in_eigenbasis(static_cast<std::size_t>(nch));
  for (int k = 0; k < nch; ++k) {
    const JumpChannel& ch = model.channel(k);
    r[static_cast<std::size_t>(k)] = trace_prod(model.channel_q(k), rho).real();
    const Matrix jump = ch.op * rho * ch.op.adjoint();
    d_log[static_cast<std::size_t>(k)] = trace_prod(jump, log_rho).real() -
                                         trace_prod(model.channel_q(k), rho_log_rho).real();
    in_eigenbasis[static_cast<std::size_t>(k)] = spec.vectors.adjoint() * ch.op * spec.vectors;

    rates.activity[static_cast<std::size_t>(ch.subsystem)] += r[static_cast<std::size_t>(k)];
    rates.s_dot_tot[static_cast<std::size_t>(ch.subsystem)] +=
        -d_log[static_cast<std::size_t>(k)] + ch.delta_s * r[static_cast<std::size_t>(k)];
    rates.s_env_dot += ch.delta_s * r[static_cast<std::size_t>(k)];
    rates.heat[ch.reservoir] +=
        ch.delta_s * r[static_cast<std::size_t>(k)] / model.reservoir(ch.reservoir).beta;
  }

  // Spectral route: Σ (w p - w* p') ln[(w p)/(w* p')] / 2 over jump matrix
  // elements, with sub-floor fluxes excluded (0 ln 0 = 0).
  for (int i = 0; i < nsub; ++i) {
    if (!model.subsystem_fully_paired(i)) continue;
    double total = 0.0;
    for (int k : model.subsystem_channels(i)) {
      const Matrix& mk = in_eigenbasis[static_cast<std::size_t>(k)];
      const Matrix& mrev = in_eigenbasis[static_cast<std::size_t>(model.reverse_index(k))];
      for (int mi = 0; mi < dim; ++mi)
        for (int ni = 0; ni < dim; ++ni) {
          const double flux = std::norm(mk(mi, ni)) * spec.values(ni);
          const double flux_rev = std::norm(mrev(ni, mi)) * spec.values(mi);
          if (flux <= kLogFloor || flux_rev <= kLogFloor) continue;
          total += 0.5 * (flux - flux_rev) * std::log(flux / flux_rev);
        }
    }
    rates.s_dot_tot_spectral[static_cast<std::size_t>(i)] = total;
    const double a = rates.s_dot_tot[static_cast<std::size_t>(i)];
    if (std::abs(a - total) > 1e-7 * std::max(std::abs(a), std::abs(total)) + 1e-9)
      throw std::runtime_error("rates_at: spectral and operator entropy production disagree");
  }

  for (int i = 0; i < nsub; ++i) {
    const Matrix rho_i = partial_trace(rho, model.space(), i);
    const Matrix drho_i = partial_trace(lrho, model.space(), i);
    const Matrix log_rho_i = log_on_support(rho_i);
    rates.s_dot[static_cast<std::size_t>(i)] = -trace_prod(drho_i, log_rho_i).real();
    double d_sum = 0.0, entropy_flow = 0.0;
    for (int k : model.subsystem_channels(i)) {
      d_sum += d_log[static_cast<std::size_t>(k)];
      entropy_flow += model.channel(k).delta_s * r[static_cast<std::size_t>(k)];
    }
    rates.i_dot[static_cast<std::size_t>(i)] = rates.s_dot[static_cast<std::size_t>(i)] + d_sum;
    rates.sigma_dot[static_cast<std::size_t>(i)] =
        rates.s_dot[static_cast<std::size_t>(i)] + entropy_flow;
    rates.i_dot_total += rates.i_dot[static_cast<std::size_t>(i)];
  }
  rates.s_tot_dot = rates.s_dot_global + rates.s_env_dot;
  return rates;
}

ThermoAccumulants accumulate(const LindbladModel& model, const StateTrajectory& traj,
                             int subsystem) {
  if (subsystem < 0 || subsystem >= model.space().num_subsystems())
    throw std::invalid_argument("accumulate: subsystem out of range");
  if (!model.subsystem_fully_paired(subsystem))
    throw std::invalid_argument("accumulate: subsystem has unpaired channels");
  const auto n = traj.states.size();
  std::vector<double> ep(n), act(n), sig(n), info(n);
  for (std::size_t t = 0; t < n; ++t) {
    ThermoRates rates = rates_at(model, traj.states[t]);
    ep[t] = rates.s_dot_tot[static_cast<std::size_t>(subsystem)];
    act[t] = rates.activity[static_cast<std::size_t>(subsystem)];
    sig[t] = rates.sigma_dot[static_cast<std::size_t>(subsystem)];
    info[t] = rates.i_dot[static_cast<std::size_t>(subsystem)];
  }
  ThermoAccumulants acc;
  acc.delta_s1_tot = simpson(ep, traj.dt);
  acc.a1 = simpson(act, traj.dt);
  acc.sigma1 = simpson(sig, traj.dt);
  acc.i1 = simpson(info, traj.dt);
  return acc;
}

double mutual_information(const TensorSpace& space, const Matrix& rho) {
  double total = -von_neumann_entropy(rho);
  for (int i = 0; i < space.num_subsystems(); ++i)
    total += von_neumann_entropy(partial_trace(rho, space, i));
  return total;
}

double coherence_offdiag_sq(const Matrix& rho) {
  double total = rho.squaredNorm();
  for (Eigen::Index i = 0; i < rho.rows(); ++i) total -= std::norm(rho(i, i));
  return total;
}

double coherence_l1(const Matrix& rho) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < rho.rows(); ++i)
    for (Eigen::Index j = 0; j < rho.cols(); ++j)
      if (i != j) total += std::abs(rho(i, j));
  return total;
}

}  // namespace qtb
