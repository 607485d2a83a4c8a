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

#include "qtb/model_io.hpp"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qtb {

namespace {

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw std::invalid_argument("model file: matrix has wrong row count");
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const Json& row = j.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw std::invalid_argument("model file: matrix has wrong column count");
    for (int k = 0; k < dim; ++k) {
      const Json& entry = row.at(static_cast<std::size_t>(k));
      if (!entry.is_array() || entry.size() != 2)
        throw std::invalid_argument("model file: matrix entries must be [re, im]");
      m(i, k) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
  }
  return m;
}

void check_keys(const Json& j, std::initializer_list<const char*> allowed,
                const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) ok = true;
    if (!ok) throw std::invalid_argument(where + ": unknown key '" + key + "'");
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  Json j;
  in >> j;
  return j;
}

}  // namespace

Json model_to_json(const LindbladModel& model) {
  Json j;
  j["format"] = "qtb-model";
  j["dims"] = model.space().dims();
  j["hamiltonian"] = matrix_to_json(model.hamiltonian());
  Json reservoirs = Json::array();
  for (const Reservoir& r : model.reservoirs())
    reservoirs.push_back({{"id", r.id}, {"beta", r.beta}, {"mu", r.mu}});
  j["reservoirs"] = std::move(reservoirs);
  Json channels = Json::array();
  for (const JumpChannel& ch : model.channels()) {
    Json c = {{"id", ch.id},
              {"subsystem", ch.subsystem},
              {"reservoir", ch.reservoir},
              {"delta_s", ch.delta_s},
              {"operator", matrix_to_json(ch.op)}};
    if (!ch.reverse_id.empty()) c["reverse_id"] = ch.reverse_id;
    channels.push_back(std::move(c));
  }
  j["channels"] = std::move(channels);
  Json currents = Json::array();
  for (const CurrentSpec& cur : model.currents()) {
    Json w = Json::object();
    for (const auto& [id, c] : cur.weights) w[id] = c;
    currents.push_back({{"name", cur.name}, {"weights", std::move(w)}});
  }
  j["currents"] = std::move(currents);
  return j;
}

LindbladModel model_from_json(const Json& j) {
  check_keys(j, {"format", "dims", "hamiltonian", "reservoirs", "channels", "currents"},
             "model file");
  TensorSpace space(j.at("dims").get<std::vector<int>>());
  const int dim = space.total_dim();
  Matrix h = matrix_from_json(j.at("hamiltonian"), dim);

  std::vector<Reservoir> reservoirs;
  for (const Json& r : j.at("reservoirs")) {
    check_keys(r, {"id", "beta", "mu"}, "reservoir");
    reservoirs.push_back(
        {r.at("id").get<std::string>(), r.at("beta").get<double>(), r.value("mu", 0.0)});
  }

  std::vector<JumpChannel> channels;
  for (const Json& c : j.at("channels")) {
    check_keys(c, {"id", "subsystem", "reservoir", "delta_s", "reverse_id", "operator"},
               "channel");
    JumpChannel ch;
    ch.id = c.at("id").get<std::string>();
    ch.subsystem = c.at("subsystem").get<int>();
    ch.reservoir = c.at("reservoir").get<std::string>();
    ch.delta_s = c.at("delta_s").get<double>();
    ch.reverse_id = c.value("reverse_id", std::string());
    ch.op = matrix_from_json(c.at("operator"), dim);
    channels.push_back(std::move(ch));
  }

  std::vector<CurrentSpec> currents;
  if (j.contains("currents")) {
    for (const Json& c : j.at("currents")) {
      check_keys(c, {"name", "weights"}, "current");
      CurrentSpec cur;
      cur.name = c.at("name").get<std::string>();
      for (const auto& [id, w] : c.at("weights").items()) cur.weights[id] = w.get<double>();
      currents.push_back(std::move(cur));
    }
  }
  return LindbladModel(space, std::move(h), std::move(channels), std::move(reservoirs),
                       std::move(currents));
}

void save_model(const LindbladModel& model, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << model_to_json(model).dump(1) << "\n";
}

LindbladModel load_model(const std::filesystem::path& path) {
  return model_from_json(read_json_file(path));
}

DemonParams demon_params_from_json(const Json& j) {
  check_keys(j,
             {"beta", "J", "eps1", "eps2", "mu1L", "mu1R", "mu2L", "mu2R", "gamma1L_up",
              "gamma1L_down", "gamma1R_up", "gamma1R_down", "gamma2L_up", "gamma2L_down",
              "gamma2R_up", "gamma2R_down"},
             "demon params");
  DemonParams p;
  p.beta = j.value("beta", p.beta);
  p.j_coupling = j.value("J", p.j_coupling);
  p.eps1 = j.value("eps1", p.eps1);
  p.eps2 = j.value("eps2", p.eps2);
  p.mu_1l = j.value("mu1L", p.mu_1l);
  p.mu_1r = j.value("mu1R", p.mu_1r);
  p.mu_2l = j.value("mu2L", p.mu_2l);
  p.mu_2r = j.value("mu2R", p.mu_2r);
  p.gamma_1l_up = j.value("gamma1L_up", p.gamma_1l_up);
  p.gamma_1l_down = j.value("gamma1L_down", p.gamma_1l_down);
  p.gamma_1r_up = j.value("gamma1R_up", p.gamma_1r_up);
  p.gamma_1r_down = j.value("gamma1R_down", p.gamma_1r_down);
  p.gamma_2l_up = j.value("gamma2L_up", p.gamma_2l_up);
  p.gamma_2l_down = j.value("gamma2L_down", p.gamma_2l_down);
  p.gamma_2r_up = j.value("gamma2R_up", p.gamma_2r_up);
  p.gamma_2r_down = j.value("gamma2R_down", p.gamma_2r_down);
  return p;
}

ClockParams clock_params_from_json(const Json& j) {
  check_keys(j,
             {"beta_c", "beta_h", "beta_w", "E_c", "E_h", "E_w", "g", "gamma_c", "gamma_h",
              "gamma_w", "d"},
             "clock params");
  ClockParams p;
  p.beta_c = j.value("beta_c", p.beta_c);
  p.beta_h = j.value("beta_h", p.beta_h);
  p.beta_w = j.value("beta_w", p.beta_w);
  p.e_c = j.value("E_c", p.e_c);
  p.e_h = j.value("E_h", p.e_h);
  p.e_w = j.value("E_w", p.e_w);
  p.g = j.value("g", p.g);
  p.gamma_c = j.value("gamma_c", p.gamma_c);
  p.gamma_h = j.value("gamma_h", p.gamma_h);
  p.gamma_w = j.value("gamma_w", p.gamma_w);
  p.d = j.value("d", p.d);
  return p;
}

Json demon_params_to_json(const DemonParams& p) {
  return Json{{"beta", p.beta},
              {"J", p.j_coupling},
              {"eps1", p.eps1},
              {"eps2", p.eps2},
              {"mu1L", p.mu_1l},
              {"mu1R", p.mu_1r},
              {"mu2L", p.mu_2l},
              {"mu2R", p.mu_2r},
              {"gamma1L_up", p.gamma_1l_up},
              {"gamma1L_down", p.gamma_1l_down},
              {"gamma1R_up", p.gamma_1r_up},
              {"gamma1R_down", p.gamma_1r_down},
              {"gamma2L_up", p.gamma_2l_up},
              {"gamma2L_down", p.gamma_2l_down},
              {"gamma2R_up", p.gamma_2r_up},
              {"gamma2R_down", p.gamma_2r_down}};
}

Json clock_params_to_json(const ClockParams& p) {
  return Json{{"beta_c", p.beta_c}, {"beta_h", p.beta_h}, {"beta_w", p.beta_w},
              {"E_c", p.e_c},       {"E_h", p.e_h},       {"E_w", p.e_w},
              {"g", p.g},           {"gamma_c", p.gamma_c}, {"gamma_h", p.gamma_h},
              {"gamma_w", p.gamma_w}, {"d", p.d}};
}

BuiltModel built_model_from_json(const Json& j) {
  if (j.contains("family")) {
    const std::string family = j.at("family").get<std::string>();
    Json params = j.value("params", Json::object());
    if (family == "demon") return build_demon(demon_params_from_json(params));
    if (family == "clock") return build_clock(clock_params_from_json(params));
    throw std::invalid_argument("unknown model family " + family);
  }
  LindbladModel model = model_from_json(j);
  CurrentSpec current;
  int target = 0;
  if (!model.currents().empty()) {
    current = model.currents().front();
    for (const auto& [id, w] : current.weights) {
      int k = model.channel_index(id);
      if (k >= 0) target = model.channel(k).subsystem;
    }
  }
  return {std::move(model), std::move(current), target};
}

BuiltModel load_model_any(const std::filesystem::path& path) {
  return built_model_from_json(read_json_file(path));
}

}  // namespace qtb
