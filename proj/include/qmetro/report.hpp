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

#ifndef QMETRO_REPORT_HPP
#define QMETRO_REPORT_HPP

#include <string>

#include <json.hpp>

#include "qmetro/config.hpp"
#include "qmetro/extension_lab.hpp"

namespace qmetro {

using Json = nlohmann::ordered_json;

/// Serializes with fixed key order, two-space indentation and every float
/// printed with 17 significant digits, so equal values give equal bytes.
std::string dump_json(const Json& value);

Json config_to_json(const ExperimentConfig& config);
Json tolerances_to_json(const Tolerances& tol);

/// Applies the keys of a config document on top of `base`. Unknown keys and
/// ill-typed values throw ConfigError.
ExperimentConfig config_from_json(const Json& doc, ExperimentConfig base = {});

Json trial_to_json(const TrialRecord& trial);
Json report_to_json(const ExperimentReport& report);

inline constexpr const char* kTrialCsvHeader =
    "trial,d,dprime,scale,theta,c_orig,c_ext,c_eq22,margin,oracle_gap";

std::string report_to_csv(const ExperimentReport& report);

// "%.17g"
std::string format_double(double value);

}  // namespace qmetro

#endif  // QMETRO_REPORT_HPP
