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

#ifndef QMETRO_EXTENSION_LAB_HPP
#define QMETRO_EXTENSION_LAB_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "qmetro/config.hpp"
#include "qmetro/matrix_core.hpp"
#include "qmetro/quantum_channels.hpp"
#include "qmetro/rng.hpp"
#include "qmetro/tolerances.hpp"

namespace qmetro {

/// Probe generator G (d x d) coupled to a d'-dimensional ancilla through
/// H_int, giving H(theta) = theta G (x) I + H_int.
struct ExtensionSpec {
  std::size_t probe_dim = 0;
  std::size_t ancilla_dim = 0;
  HermitianOperator generator;
  HermitianOperator interaction;
  double theta = 0.0;

  void validate() const;
};

struct TrialRecord {
  std::size_t trial = 0;
  std::size_t d = 0;
  std::size_t dprime = 0;
  double scale = 0.0;
  double theta = 0.0;
  double c_ext = 0.0;
  double c_orig = 0.0;
  double c_eq22_ext = 0.0;
  double margin = 0.0;  // c_orig - c_ext
  double oracle_gap = 0.0;
};

struct ExperimentSummary {
  std::size_t trial_count = 0;
  double min_margin = 0.0;
  double max_violation = 0.0;  // max(0, -min_margin)
  double mean_margin = 0.0;
  double runtime_ms = 0.0;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::uint64_t master_seed = 0;
  std::vector<TrialRecord> trials;
  ExperimentSummary summary;
};

UnitaryFamily build_extended_family(const ExtensionSpec& spec);

/// Phase shift with generator G (x) I_{ancilla}: the channel extended by the identity.
UnitaryFamily build_channel_extension(const HermitianOperator& generator, std::size_t ancilla_dim);

/// Independent estimate of the channel QFI: the largest Bures-limit QFI of
/// the evolved state over `restarts` random probes plus the spectral-spread
/// optimal probe.
double finite_difference_channel_qfi(const UnitaryFamily& family, double theta,
                                     std::size_t restarts, RngStream& rng,
                                     const Tolerances& tol = {});

TrialRecord verify_theorem_instance(const ExtensionSpec& spec, RngStream& oracle_rng,
                                    std::size_t oracle_restarts = 2, const Tolerances& tol = {});

// H_int = sum_k |g_k><g_k| (x) B_k with GUE blocks B_k; commutes with G (x) I.
HermitianOperator commuting_interaction(const HermitianOperator& generator,
                                        std::size_t ancilla_dim, double scale, RngStream& rng);

/// Deterministic instance for trial `index`: dims and scale cycle through the
/// configured lists, G/H_int/theta come from the trial's own substream.
ExtensionSpec generate_trial_spec(const ExperimentConfig& config, std::size_t index,
                                  double* scale_out = nullptr);

ExperimentSummary summarize(const std::vector<TrialRecord>& trials);

ExperimentReport run_trials(const ExperimentConfig& config);

struct CommutingCheck {
  double lhs = 0.0;  // channel QFI of the family
  double rhs = 0.0;  // spectral spread of Hdot(theta), squared
};

/// Requires [Hdot(theta), H(theta)] = 0; throws NotCommuting otherwise.
CommutingCheck verify_commuting_generalization(const UnitaryFamily& family, double theta,
                                               const Tolerances& tol = {});

}  // namespace qmetro

#endif  // QMETRO_EXTENSION_LAB_HPP
