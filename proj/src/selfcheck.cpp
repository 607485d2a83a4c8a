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

#include "qtb/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include "qtb/auxiliary.hpp"
#include "qtb/bounds.hpp"
#include "qtb/random_models.hpp"
#include "qtb/zoo.hpp"

namespace qtb {

namespace {

struct Workup {
  Matrix rho_ss;
  ThermoAccumulants acc;
  CorrectionResult corr;
  double mean = 0.0;
  double var = 0.0;
};

Workup compute_workup(const BuiltModel& built, double tau, double dt) {
  Workup w;
  w.rho_ss = steady_state(built.model).state;
  StateTrajectory traj = evolve(built.model, w.rho_ss, tau, dt);
  w.acc = accumulate(built.model, traj, built.target_subsystem);
  EllSchedule ells = ell_schedule(built.model, traj, built.target_subsystem);
  ResponseTrajectory phi = solve_phi(built.model, traj, ells);
  w.corr = correction_and_qfi(built.model, traj, phi, ells, built.current);
  std::vector<CurrentSpec> currents = {built.current};
  CumulantResult cum = finite_time_cumulants(built.model, currents, w.rho_ss, tau, dt);
  w.mean = cum.means[0];
  w.var = cum.covariance(0, 0);
  return w;
}

class Suite {
 public:
  void check(const std::string& name, bool pass, double slack, const std::string& detail = "") {
    results_.push_back({name, pass, slack, detail});
  }

  void guard(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      results_.push_back({name, false, 0.0, std::string("exception: ") + e.what()});
    }
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

}  // namespace

std::vector<CheckResult> run_selfcheck() {
  Suite suite;

  suite.guard("tensor-identities", [&suite] {
    TensorSpace space({3, 4});
    Matrix a = random_complex_matrix(11, 3, 3);
    Matrix b = random_complex_matrix(12, 3, 3);
    double hom = (embed_local(a * b, 0, space) -
                  embed_local(a, 0, space) * embed_local(b, 0, space)).norm();
    suite.check("tensor-embed-homomorphism", hom <= 1e-12, hom);

    Matrix m = random_complex_matrix(13, 12, 12);
    Complex lhs = (embed_local(a, 0, space) * m).trace();
    Complex rhs = (a * partial_trace(m, space, 0)).trace();
    double adj = std::abs(lhs - rhs);
    suite.check("tensor-partial-trace-adjoint", adj <= 1e-11, adj);

    Matrix x = random_complex_matrix(14, 3, 3);
    Matrix c = random_complex_matrix(15, 3, 3);
    double vec_err =
        (vectorize(a * x * c) - kron(a, c.transpose()) * vectorize(x)).norm();
    suite.check("tensor-vec-identity", vec_err <= 1e-12, vec_err);
  });

  suite.guard("zoo-validate", [&suite] {
    auto demon = build_demon({});
    auto clock = build_clock({});
    suite.check("zoo-demon-validate", validate(demon.model).empty(),
                static_cast<double>(validate(demon.model).size()));
    suite.check("zoo-clock-validate", validate(clock.model).empty(),
                static_cast<double>(validate(clock.model).size()));

    // Spectral local detailed balance w_k^{mn} = e^{Δs} w_{k*}^{nm} in a
    // random state eigenbasis.
    Matrix rho = random_density_matrix(21, demon.model.dim());
    HermitianSpectrum spec = hermitian_spectrum(rho);
    double worst = 0.0;
    for (int k = 0; k < demon.model.num_channels(); ++k) {
      const int rev = demon.model.reverse_index(k);
      Matrix mk = spec.vectors.adjoint() * demon.model.channel(k).op * spec.vectors;
      Matrix mr = spec.vectors.adjoint() * demon.model.channel(rev).op * spec.vectors;
      const double ds = demon.model.channel(k).delta_s;
      for (int mi = 0; mi < demon.model.dim(); ++mi)
        for (int ni = 0; ni < demon.model.dim(); ++ni) {
          const double w_f = std::norm(mk(mi, ni));
          const double w_b = std::exp(ds) * std::norm(mr(ni, mi));
          const double scale = std::max({w_f, w_b, 1e-12});
          worst = std::max(worst, std::abs(w_f - w_b) / scale);
        }
    }
    suite.check("ldb-spectral-identity", worst <= 1e-9, worst);
  });

  suite.guard("gibbs-demon", [&suite] {
    DemonParams p = demon_with_axis({}, "mu1L", equilibrium_locator("demon", "mu1L"));
    auto built = build_demon(p);
    Matrix pi = demon_gibbs_state(p);
    double resid = gibbs_check(built.model, pi);
    suite.check("gibbs-demon-residual", resid <= 1e-9, resid);
    ThermoRates rates = rates_at(built.model, pi);
    double worst = std::max({std::abs(rates.i_dot[0]), std::abs(rates.sigma_dot[0]),
                             std::abs(rates.s_dot_tot[0])});
    suite.check("gibbs-demon-rates", worst <= 1e-8, worst);
  });

  suite.guard("gibbs-clock", [&suite] {
    ClockParams p;
    p.beta_h = equilibrium_locator("clock", "beta_h", {}, p);
    auto built = build_clock(p);
    Matrix pi = clock_gibbs_state(p);
    double resid = gibbs_check(built.model, pi);
    suite.check("gibbs-clock-residual", resid <= 1e-9, resid);
  });

  suite.guard("fcs-poisson", [&suite] {
    // Single self-reversed flip channel: the jump rate is state-independent,
    // so the count is Poisson with mean = var = Γτ.
    TensorSpace space({2});
    Matrix x = Matrix::Zero(2, 2);
    x(0, 1) = x(1, 0) = 1.0;
    const double gamma = 0.8;
    const double tau = 10.0;
    std::vector<JumpChannel> channels = {
        {"flip", 0, "bath", std::sqrt(gamma) * x, 0.0, ""}};
    LindbladModel model(space, Matrix::Zero(2, 2), channels, {{"bath", 1.0, 0.0}});
    CurrentSpec count{"count", {{"flip", 1.0}}};
    Matrix rho0 = Matrix::Zero(2, 2);
    rho0(0, 0) = 1.0;
    std::vector<CurrentSpec> currents = {count};
    CumulantResult cum = finite_time_cumulants(model, currents, rho0, tau, 1e-3);
    const double expect = gamma * tau;
    double err = std::max(std::abs(cum.means[0] - expect) / expect,
                          std::abs(cum.covariance(0, 0) - expect) / expect);
    suite.check("fcs-poisson-exact", err <= 1e-8, err);

    auto [omean, ovar] = tilted_oracle_moments(model, count, rho0, tau);
    double oerr = std::max(std::abs(omean - expect) / expect, std::abs(ovar - expect) / expect);
    suite.check("fcs-poisson-oracle", oerr <= 1e-6, oerr);
  });

  suite.guard("fcs-ring-fano", [&suite] {
    // Unidirectional three-state ring; interarrival times on one link are
    // Erlang-3, so the long-time Fano factor is 1/3.
    TensorSpace space({3});
    auto hop = [](int to, int from) {
      Matrix l = Matrix::Zero(3, 3);
      l(to, from) = 1.0;
      return l;
    };
    std::vector<JumpChannel> channels = {{"h01", 0, "bath", hop(1, 0), 0.0, ""},
                                         {"h12", 0, "bath", hop(2, 1), 0.0, ""},
                                         {"h20", 0, "bath", hop(0, 2), 0.0, ""}};
    LindbladModel model(space, Matrix::Zero(3, 3), channels, {{"bath", 1.0, 0.0}});
    CurrentSpec count{"link", {{"h20", 1.0}}};
    Matrix rho0 = Matrix::Identity(3, 3) / 3.0;
    const double tau = 3000.0;
    std::vector<CurrentSpec> currents = {count};
    CumulantResult cum = finite_time_cumulants(model, currents, rho0, tau, 5e-3);
    const double rate_err = std::abs(cum.means[0] / tau - 1.0 / 3.0) * 3.0;
    const double fano = cum.covariance(0, 0) / cum.means[0];
    const double fano_err = std::abs(fano - 1.0 / 3.0) * 3.0;
    suite.check("fcs-ring-rate", rate_err <= 0.01, rate_err);
    suite.check("fcs-ring-fano", fano_err <= 0.01, fano_err);
  });

  suite.guard("fcs-oracle-zoo", [&suite] {
    auto demon = build_demon({});
    Matrix rho = steady_state(demon.model).state;
    std::vector<CurrentSpec> currents = {demon.current};
    CumulantResult cum = finite_time_cumulants(demon.model, currents, rho, 10.0, 1e-3);
    auto [omean, ovar] = tilted_oracle_moments(demon.model, demon.current, rho, 10.0);
    double err = std::max(std::abs(cum.means[0] - omean) / std::abs(omean),
                          std::abs(cum.covariance(0, 0) - ovar) / std::abs(ovar));
    suite.check("fcs-oracle-demon", err <= 1e-6, err);

    auto clock = build_clock({});
    Matrix rho_c = steady_state(clock.model).state;
    std::vector<CurrentSpec> cur_c = {clock.current};
    CumulantResult cc = finite_time_cumulants(clock.model, cur_c, rho_c, 10.0, 5e-4);
    auto [cmean, cvar] = tilted_oracle_moments(clock.model, clock.current, rho_c, 10.0);
    double errc = std::max(std::abs(cc.means[0] - cmean) / std::abs(cmean),
                           std::abs(cc.covariance(0, 0) - cvar) / std::abs(cvar));
    suite.check("fcs-oracle-clock", errc <= 1e-6, errc);
  });

  suite.guard("fcs-oracle-random", [&suite] {
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      RandomModel rm = random_lindblad_model(seed * 97);
      Matrix rho0 = random_density_matrix(seed * 131, rm.model.dim());
      const double tau = 4.0, dt = 1e-3;
      std::vector<CurrentSpec> currents = {rm.current};
      CumulantResult cum = finite_time_cumulants(rm.model, currents, rho0, tau, dt);
      auto [omean, ovar] = tilted_oracle_moments(rm.model, rm.current, rho0, tau);
      const double scale_m = std::max(std::abs(omean), 1e-3);
      const double scale_v = std::max(std::abs(ovar), 1e-3);
      worst = std::max({worst, std::abs(cum.means[0] - omean) / scale_m,
                        std::abs(cum.covariance(0, 0) - ovar) / scale_v});
    }
    suite.check("fcs-oracle-random", worst <= 1e-6, worst);
  });

  suite.guard("thermo-identities", [&suite] {
    auto demon = build_demon({});
    Matrix rho_ss = steady_state(demon.model).state;
    Matrix transient = random_density_matrix(77, demon.model.dim());
    double worst_sum = 0.0, worst_second = 0.0, worst_spec = 0.0, worst_idot = 0.0;
    double min_ep = 0.0;
    for (const Matrix& rho : {rho_ss, transient}) {
      ThermoRates r = rates_at(demon.model, rho);
      double sum = 0.0, isum = 0.0;
      for (std::size_t i = 0; i < r.s_dot_tot.size(); ++i) {
        sum += r.s_dot_tot[i];
        isum += r.i_dot[i];
        min_ep = std::min(min_ep, r.s_dot_tot[i]);
        worst_second = std::max(worst_second,
                                std::abs(r.s_dot_tot[i] - (r.sigma_dot[i] - r.i_dot[i])));
        worst_spec = std::max(worst_spec, std::abs(r.s_dot_tot[i] - r.s_dot_tot_spectral[i]));
      }
      worst_sum = std::max(worst_sum, std::abs(sum - r.s_tot_dot));
      worst_idot = std::max(worst_idot, std::abs(isum - r.i_dot_total));
    }
    suite.check("thermo-ep-decomposition", worst_sum <= 1e-8, worst_sum);
    suite.check("thermo-second-law-with-info", worst_second <= 1e-8, worst_second);
    suite.check("thermo-spectral-agreement", worst_spec <= 1e-7, worst_spec);
    suite.check("thermo-information-sum", worst_idot <= 1e-8, worst_idot);
    suite.check("thermo-partial-ep-nonnegative", min_ep >= -1e-9, min_ep);
  });

  suite.guard("bounds-demon-center", [&suite] {
    auto demon = build_demon({});
    Workup w = compute_workup(demon, 10.0, 1e-3);
    const double sens = w.corr.j_avg + w.corr.j_phi;
    const double cr = w.var * w.corr.qfi - sens * sens * (1.0 - 1e-7);
    suite.check("cramer-rao-demon", cr >= 0.0, cr);
    const double f = f_inverse(w.acc.delta_s1_tot / (2.0 * w.acc.a1));
    const double ub = w.acc.delta_s1_tot * w.acc.delta_s1_tot / (4.0 * w.acc.a1 * f * f);
    suite.check("fisher-chain-demon", w.corr.qfi <= ub + 1e-9, ub - w.corr.qfi);
    BoundReport report = make_bound_report(w.mean, w.var, w.corr.delta, w.acc);
    suite.check("tkur-demon", report.rel_fluct >= report.tkur - 1e-9,
                report.rel_fluct - report.tkur);
    suite.check("f1-demon", report.f1 >= 2.0 - 1e-9, report.f1 - 2.0);
    const double dev =
        finite_theta_check(demon.model, w.rho_ss, 10.0, 1e-3, demon.current, 1e-4, 0);
    suite.check("finite-theta-demon", dev <= 1e-3, dev);
  });

  suite.guard("bounds-clock-center", [&suite] {
    auto clock = build_clock({});
    Workup w = compute_workup(clock, 10.0, 5e-4);
    const double sens = w.corr.j_avg + w.corr.j_phi;
    const double cr = w.var * w.corr.qfi - sens * sens * (1.0 - 1e-7);
    suite.check("cramer-rao-clock", cr >= 0.0, cr);
    const double f = f_inverse(w.acc.delta_s1_tot / (2.0 * w.acc.a1));
    const double ub = w.acc.delta_s1_tot * w.acc.delta_s1_tot / (4.0 * w.acc.a1 * f * f);
    suite.check("fisher-chain-clock", w.corr.qfi <= ub + 1e-9, ub - w.corr.qfi);
    BoundReport report = make_bound_report(w.mean, w.var, w.corr.delta, w.acc);
    suite.check("tkur-clock", report.rel_fluct >= report.tkur - 1e-9,
                report.rel_fluct - report.tkur);
    suite.check("f1-clock", report.f1 >= 2.0 - 1e-9, report.f1 - 2.0);
  });

  suite.guard("f-inverse", [&suite] {
    double worst = 0.0;
    for (double x : {1e-6, 0.761594155955765, 1.0, 10.0, 1e3}) {
      const double y = f_inverse(x);
      worst = std::max(worst, std::abs(y * std::tanh(y) - x) / x);
      if (y < std::max(std::sqrt(x), x)) worst = 1.0;
    }
    suite.check("f-inverse-roundtrip", worst <= 1e-12, worst);
    const double asym = std::abs(f_inverse(1e6) / 1e6 - 1.0);
    suite.check("f-inverse-asymptote", asym <= 1e-6, asym);
  });

  return suite.take();
}

bool print_selfcheck(std::ostream& out) {
  std::vector<CheckResult> results = run_selfcheck();
  bool all = true;
  for (const CheckResult& r : results) {
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
    std::ostringstream slack;
    slack.precision(3);
    slack << std::scientific << r.slack;
    out << "  slack=" << slack.str();
    if (!r.detail.empty()) out << "  " << r.detail;
    out << "\n";
    all = all && r.pass;
  }
  out << (all ? "selfcheck: all checks passed\n" : "selfcheck: FAILURES detected\n");
  return all;
}

}  // namespace qtb
