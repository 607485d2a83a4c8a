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

#ifndef QTB_MODEL_IO_HPP
#define QTB_MODEL_IO_HPP

#include <filesystem>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "qtb/zoo.hpp"

namespace qtb {

using Json = nlohmann::json;

// Model interchange format (see docs/model_format.md). Matrices are stored
// dense, row-major, entries as [re, im]; doubles round-trip losslessly.

Json model_to_json(const LindbladModel& model);
LindbladModel model_from_json(const Json& j);

void save_model(const LindbladModel& model, const std::filesystem::path& path);
LindbladModel load_model(const std::filesystem::path& path);

DemonParams demon_params_from_json(const Json& j);
ClockParams clock_params_from_json(const Json& j);
Json demon_params_to_json(const DemonParams& p);
Json clock_params_to_json(const ClockParams& p);

/// Accepts either an explicit model document or a family-tagged parameter
/// set ({"family": "demon"|"clock", "params": {...}}) rebuilt through the
/// zoo. For explicit documents the studied current is the first one listed.
BuiltModel load_model_any(const std::filesystem::path& path);
BuiltModel built_model_from_json(const Json& j);

}  // namespace qtb

#endif  // QTB_MODEL_IO_HPP
