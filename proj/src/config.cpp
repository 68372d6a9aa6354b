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

#include "qmetro/config.hpp"

#include <cmath>

namespace qmetro {

void validate(const ExperimentConfig& config) {
  if (config.trials < 1) throw ConfigError("invalid config: trials must be >= 1");
  if (config.probe_dims.empty()) throw ConfigError("invalid config: probe_dims is empty");
  if (config.ancilla_dims.empty()) throw ConfigError("invalid config: ancilla_dims is empty");
  if (config.interaction_scales.empty()) {
    throw ConfigError("invalid config: interaction_scales is empty");
  }
  for (auto d : config.probe_dims) {
    if (d < 1) throw ConfigError("invalid config: probe_dims entries must be >= 1");
  }
  for (auto d : config.ancilla_dims) {
    if (d < 1) throw ConfigError("invalid config: ancilla_dims entries must be >= 1");
  }
  for (double s : config.interaction_scales) {
    if (!(s > 0.0) || !std::isfinite(s)) {
      throw ConfigError("invalid config: interaction_scales entries must be > 0");
    }
  }
  const auto [lo, hi] = config.theta_range;
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw ConfigError("invalid config: theta_range must satisfy lo < hi");
  }
  if (!(config.generator_scale > 0.0) || !std::isfinite(config.generator_scale)) {
    throw ConfigError("invalid config: generator_scale must be > 0");
  }
  if (!(config.tolerances.violation >= 0.0)) {
    throw ConfigError("invalid config: violation tolerance must be >= 0");
  }
  if (!(config.tolerances.bures_dtheta > 0.0)) {
    throw ConfigError("invalid config: bures_dtheta must be > 0");
  }
}

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::VerifyTheorem:
      return "verify-theorem";
    case Mode::ChannelQfi:
      return "channel-qfi";
    case Mode::Properties:
      return "properties";
    case Mode::BuresCheck:
      return "bures-check";
  }
  return "unknown";
}

std::string_view to_string(OutputFormat format) {
  return format == OutputFormat::Json ? "json" : "csv";
}

std::string_view to_string(InteractionModel model) {
  switch (model) {
    case InteractionModel::Gue:
      return "gue";
    case InteractionModel::Commuting:
      return "commuting";
    case InteractionModel::Zero:
      return "zero";
  }
  return "unknown";
}

Mode parse_mode(std::string_view text) {
  for (Mode m : {Mode::VerifyTheorem, Mode::ChannelQfi, Mode::Properties, Mode::BuresCheck}) {
    if (text == to_string(m)) return m;
  }
  throw ConfigError("unknown mode '" + std::string(text) + "'");
}

OutputFormat parse_output_format(std::string_view text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  throw ConfigError("unknown output format '" + std::string(text) + "' (expected json|csv)");
}

InteractionModel parse_interaction_model(std::string_view text) {
  for (auto m : {InteractionModel::Gue, InteractionModel::Commuting, InteractionModel::Zero}) {
    if (text == to_string(m)) return m;
  }
  throw ConfigError("unknown interaction model '" + std::string(text) +
                    "' (expected gue|commuting|zero)");
}

}  // namespace qmetro
