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

#include "qtb/zoo.hpp"

#include <cmath>
#include <stdexcept>

namespace qtb {

namespace {

// Blockade dot basis: 0 = empty, 1 = spin up, 2 = spin down.
Matrix dot_annihilate(int spin_state) {
  Matrix d = Matrix::Zero(3, 3);
  d(0, spin_state) = 1.0;
  return d;
}

Matrix dot_number(int spin_state) {
  Matrix n = Matrix::Zero(3, 3);
  n(spin_state, spin_state) = 1.0;
  return n;
}

double fermi(double beta, double eps, double mu) {
  return 1.0 / (std::exp(beta * (eps - mu)) + 1.0);
}

struct LeadSpin {
  std::string lead;   // "1L", "1R", "2L", "2R"
  int dot;            // subsystem index
  int spin_state;     // 1 = up, 2 = down
  std::string spin;   // "up" / "down"
  double gamma;
  double mu;
  double eps;
};

}  // namespace

BuiltModel build_demon(const DemonParams& p) {
  TensorSpace space({3, 3});
  const Matrix d_up = dot_annihilate(1);
  const Matrix d_dn = dot_annihilate(2);

  Matrix h = p.eps1 * embed_local(dot_number(1) + dot_number(2), 0, space) +
             p.eps2 * embed_local(dot_number(1) + dot_number(2), 1, space);
  // Spin exchange (J/2)(d†₁↑d₁↓ d†₂↓d₂↑ + h.c.) restricted to the blockade subspace.
  Matrix s1_raise = embed_local(d_up.adjoint() * d_dn, 0, space);
  Matrix s2_lower = embed_local(d_dn.adjoint() * d_up, 1, space);
  Matrix exch = s1_raise * s2_lower;
  h += 0.5 * p.j_coupling * (exch + exch.adjoint());

  const std::vector<LeadSpin> table = {
      {"1L", 0, 1, "up", p.gamma_1l_up, p.mu_1l, p.eps1},
      {"1L", 0, 2, "down", p.gamma_1l_down, p.mu_1l, p.eps1},
      {"1R", 0, 1, "up", p.gamma_1r_up, p.mu_1r, p.eps1},
      {"1R", 0, 2, "down", p.gamma_1r_down, p.mu_1r, p.eps1},
      {"2L", 1, 1, "up", p.gamma_2l_up, p.mu_2l, p.eps2},
      {"2L", 1, 2, "down", p.gamma_2l_down, p.mu_2l, p.eps2},
      {"2R", 1, 1, "up", p.gamma_2r_up, p.mu_2r, p.eps2},
      {"2R", 1, 2, "down", p.gamma_2r_down, p.mu_2r, p.eps2},
  };

  std::vector<Reservoir> reservoirs = {
      {"1L", p.beta, p.mu_1l}, {"1R", p.beta, p.mu_1r},
      {"2L", p.beta, p.mu_2l}, {"2R", p.beta, p.mu_2r}};

  std::vector<JumpChannel> channels;
  CurrentSpec current{"J1", {}};
  for (const LeadSpin& ls : table) {
    if (ls.gamma <= 0.0) continue;
    const double f = fermi(p.beta, ls.eps, ls.mu);
    const double ds_in = -p.beta * (ls.eps - ls.mu);
    const Matrix d_op = embed_local(dot_annihilate(ls.spin_state), ls.dot, space);
    const std::string base = ls.lead + "_" + ls.spin;

    JumpChannel in;
    in.id = base + "_in";
    in.subsystem = ls.dot;
    in.reservoir = ls.lead;
    in.op = std::sqrt(ls.gamma * f) * d_op.adjoint();
    in.delta_s = ds_in;
    in.reverse_id = base + "_out";

    JumpChannel out;
    out.id = base + "_out";
    out.subsystem = ls.dot;
    out.reservoir = ls.lead;
    out.op = std::sqrt(ls.gamma * (1.0 - f)) * d_op;
    out.delta_s = -ds_in;
    out.reverse_id = base + "_in";

    channels.push_back(std::move(in));
    channels.push_back(std::move(out));
    if (ls.dot == 0 && ls.spin_state == 1) {
      current.weights[base + "_in"] = 1.0;
      current.weights[base + "_out"] = -1.0;
    }
  }

  LindbladModel model(space, h, std::move(channels), std::move(reservoirs), {current});
  return {std::move(model), std::move(current), 0};
}

BuiltModel build_clock(const ClockParams& p) {
  if (p.d < 2) throw std::invalid_argument("build_clock: ladder dimension must be >= 2");
  if (std::abs(p.e_h - p.e_c - p.e_w) > 1e-12)
    throw std::invalid_argument("build_clock: energy conservation E_h = E_c + E_w violated");

  TensorSpace space({2, 2, p.d});
  Matrix sigma = Matrix::Zero(2, 2);  // qubit lowering |0><1|
  sigma(0, 1) = 1.0;
  Matrix nq = Matrix::Zero(2, 2);
  nq(1, 1) = 1.0;

  Matrix ladder_n = Matrix::Zero(p.d, p.d);
  for (int k = 0; k < p.d; ++k) ladder_n(k, k) = k;
  Matrix sigma_w = Matrix::Zero(p.d, p.d);  // |d-1><0|
  sigma_w(p.d - 1, 0) = 1.0;

  Matrix h = p.e_h * embed_local(nq, 0, space) + p.e_c * embed_local(nq, 1, space) +
             p.e_w * embed_local(ladder_n, 2, space);
  for (int k = 1; k < p.d; ++k) {
    Matrix sigma_k = Matrix::Zero(p.d, p.d);  // |k-1><k|
    sigma_k(k - 1, k) = 1.0;
    Matrix term = embed_local(sigma, 0, space) * embed_local(sigma.adjoint(), 1, space) *
                  embed_local(sigma_k.adjoint(), 2, space);
    h += p.g * (term + term.adjoint());
  }

  std::vector<Reservoir> reservoirs = {
      {"hot", p.beta_h, 0.0}, {"cold", p.beta_c, 0.0}, {"work", p.beta_w, 0.0}};

  std::vector<JumpChannel> channels;
  auto add_pair = [&channels](const std::string& fwd_id, const std::string& rev_id,
                              const Matrix& fwd_op, const Matrix& rev_op, int subsystem,
                              const std::string& reservoir, double fwd_ds) {
    channels.push_back({fwd_id, subsystem, reservoir, fwd_op, fwd_ds, rev_id});
    channels.push_back({rev_id, subsystem, reservoir, rev_op, -fwd_ds, fwd_id});
  };

  Matrix sh = embed_local(sigma, 0, space);
  add_pair("h_decay", "h_excite", std::sqrt(p.gamma_h) * sh,
           std::sqrt(p.gamma_h * std::exp(-p.beta_h * p.e_h)) * sh.adjoint(), 0, "hot",
           p.beta_h * p.e_h);
  Matrix sc = embed_local(sigma, 1, space);
  add_pair("c_decay", "c_excite", std::sqrt(p.gamma_c) * sc,
           std::sqrt(p.gamma_c * std::exp(-p.beta_c * p.e_c)) * sc.adjoint(), 1, "cold",
           p.beta_c * p.e_c);
  const double ladder_gap = (p.d - 1) * p.e_w;
  Matrix sw = embed_local(sigma_w, 2, space);
  add_pair("w_up", "w_tick", std::sqrt(p.gamma_w) * sw,
           std::sqrt(p.gamma_w * std::exp(p.beta_w * ladder_gap)) * sw.adjoint(), 2, "work",
           -p.beta_w * ladder_gap);

  CurrentSpec current{"Jw", {{"w_tick", 1.0}, {"w_up", -1.0}}};
  LindbladModel model(space, h, std::move(channels), std::move(reservoirs), {current});
  return {std::move(model), std::move(current), 2};
}

Matrix demon_gibbs_state(const DemonParams& p) {
  TensorSpace space({3, 3});
  Matrix h0 = p.eps1 * embed_local(dot_number(1) + dot_number(2), 0, space) +
              p.eps2 * embed_local(dot_number(1) + dot_number(2), 1, space);
  // μ assignment follows the antiparallel polarization: 1L<->up, 1R<->down,
  // 2L<->down, 2R<->up.
  Matrix mu_n = p.mu_1l * embed_local(dot_number(1), 0, space) +
                p.mu_1r * embed_local(dot_number(2), 0, space) +
                p.mu_2l * embed_local(dot_number(2), 1, space) +
                p.mu_2r * embed_local(dot_number(1), 1, space);
  Matrix exponent = -p.beta * (h0 - mu_n);
  Matrix pi = Matrix::Zero(space.total_dim(), space.total_dim());
  for (int i = 0; i < space.total_dim(); ++i) pi(i, i) = std::exp(exponent(i, i).real());
  pi /= pi.trace().real();
  return pi;
}

Matrix clock_gibbs_state(const ClockParams& p) {
  TensorSpace space({2, 2, p.d});
  Matrix nq = Matrix::Zero(2, 2);
  nq(1, 1) = 1.0;
  Matrix ladder_n = Matrix::Zero(p.d, p.d);
  for (int k = 0; k < p.d; ++k) ladder_n(k, k) = k;
  Matrix exponent = -p.beta_h * p.e_h * embed_local(nq, 0, space) -
                    p.beta_c * p.e_c * embed_local(nq, 1, space) -
                    p.beta_w * p.e_w * embed_local(ladder_n, 2, space);
  Matrix pi = Matrix::Zero(space.total_dim(), space.total_dim());
  for (int i = 0; i < space.total_dim(); ++i) pi(i, i) = std::exp(exponent(i, i).real());
  pi /= pi.trace().real();
  return pi;
}

double equilibrium_locator(const std::string& family, const std::string& axis,
                           const DemonParams& dp, const ClockParams& cp) {
  if (family == "demon") {
    // Balance manifold: mu1L - mu1R = -(mu2L - mu2R), swept with mu1R = -mu1L.
    if (axis == "mu1L") return 0.5 * (dp.mu_2r - dp.mu_2l);
    throw std::invalid_argument("equilibrium_locator: demon axis " + axis +
                                " does not enter the balance condition");
  }
  if (family == "clock") {
    // Balance condition: beta_c E_c - beta_h E_h + beta_w E_w = 0.
    if (axis == "beta_h") return (cp.beta_c * cp.e_c + cp.beta_w * cp.e_w) / cp.e_h;
    if (axis == "beta_c") return (cp.beta_h * cp.e_h - cp.beta_w * cp.e_w) / cp.e_c;
    if (axis == "beta_w") return (cp.beta_h * cp.e_h - cp.beta_c * cp.e_c) / cp.e_w;
    throw std::invalid_argument("equilibrium_locator: clock axis " + axis +
                                " does not enter the balance condition");
  }
  throw std::invalid_argument("equilibrium_locator: unknown family " + family);
}

DemonParams demon_with_axis(DemonParams p, const std::string& axis, double value) {
  if (axis == "mu1L") {
    p.mu_1l = value;
    p.mu_1r = -value;
  } else if (axis == "J") {
    p.j_coupling = value;
  } else if (axis == "gamma2") {
    for (double* g : {&p.gamma_2l_up, &p.gamma_2l_down, &p.gamma_2r_up, &p.gamma_2r_down})
      if (*g != 0.0) *g = value;
  } else if (axis == "beta") {
    p.beta = value;
  } else {
    throw std::invalid_argument("unknown demon axis " + axis);
  }
  return p;
}

ClockParams clock_with_axis(ClockParams p, const std::string& axis, double value) {
  if (axis == "beta_c") {
    p.beta_c = value;
  } else if (axis == "beta_h") {
    p.beta_h = value;
  } else if (axis == "beta_w") {
    p.beta_w = value;
  } else if (axis == "g") {
    p.g = value;
  } else if (axis == "gamma_w") {
    p.gamma_w = value;
  } else if (axis == "gamma_c") {
    p.gamma_c = value;
  } else if (axis == "gamma_h") {
    p.gamma_h = value;
  } else if (axis == "gamma_ch") {
    p.gamma_c = value;
    p.gamma_h = value;
  } else {
    throw std::invalid_argument("unknown clock axis " + axis);
  }
  return p;
}

}  // namespace qtb
