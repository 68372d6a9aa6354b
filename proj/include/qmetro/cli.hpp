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

#ifndef QMETRO_CLI_HPP
#define QMETRO_CLI_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qmetro/config.hpp"
#include "qmetro/matrix_core.hpp"

namespace qmetro::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCertificationFailure = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by parse_config for --help; what() is the help text.
class HelpRequested : public std::runtime_error {
 public:
  explicit HelpRequested(const std::string& text) : std::runtime_error(text) {}
};

/// Defaults, then the --config file, then flags. `args` excludes argv[0].
ExperimentConfig parse_config(const std::vector<std::string>& args);

/// `diag:a,b,c`, `pauli:x|y|z` or `gue:dim,scale,seed`.
HermitianOperator parse_generator(std::string_view literal);

/// Runs the configured mode, writes the report and prints a summary.
int run(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

/// parse_config + run with the exit-code contract applied to all errors.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qmetro::cli

#endif  // QMETRO_CLI_HPP
