// Copyright 2026 The qmetro Authors
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

#ifndef QMETRO_CONFIG_HPP
#define QMETRO_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmetro/tolerances.hpp"

namespace qmetro {

enum class Mode { VerifyTheorem, ChannelQfi, Properties, BuresCheck };
enum class OutputFormat { Json, Csv };

// How H_int is drawn for each trial.
enum class InteractionModel {
  Gue,        // GUE on probe (x) ancilla
  Commuting,  // sum_k |g_k><g_k| (x) B_k, commutes with G (x) I
  Zero,
};

struct ExperimentConfig {
  Mode mode = Mode::VerifyTheorem;
  std::vector<std::size_t> probe_dims{2, 3};
  std::vector<std::size_t> ancilla_dims{2, 3};
  std::vector<double> interaction_scales{0.1, 1.0, 10.0};
  std::pair<double, double> theta_range{0.0, 6.283185307179586};
  std::size_t trials = 100;
  std::uint64_t master_seed = 42;
  Tolerances tolerances;
  std::string output_path;  // empty: no report file
  OutputFormat output_format = OutputFormat::Json;

  InteractionModel interaction_model = InteractionModel::Gue;
  double generator_scale = 1.0;
  std::size_t oracle_restarts = 2;
  std::string generator = "pauli:z";  // channel-qfi mode
  std::size_t threads = 0;            // 0: hardware concurrency
  bool record_runtime = false;        // runtime_ms makes reports non-reproducible
};

class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

void validate(const ExperimentConfig& config);

std::string_view to_string(Mode mode);
std::string_view to_string(OutputFormat format);
std::string_view to_string(InteractionModel model);
Mode parse_mode(std::string_view text);
OutputFormat parse_output_format(std::string_view text);
InteractionModel parse_interaction_model(std::string_view text);

}  // namespace qmetro

#endif  // QMETRO_CONFIG_HPP
