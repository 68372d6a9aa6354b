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

#include "qmetro/extension_lab.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <string>
#include <thread>

#include "qmetro/channel_qfi.hpp"
#include "qmetro/errors.hpp"
#include "qmetro/qfi.hpp"

namespace qmetro {

void ExtensionSpec::validate() const {
  if (probe_dim < 1 || ancilla_dim < 1) throw InvalidInput("ExtensionSpec: dimensions must be >= 1");
  if (generator.dim() != probe_dim) {
    throw DimensionMismatch("ExtensionSpec: generator is not probe_dim x probe_dim");
  }
  if (interaction.dim() != probe_dim * ancilla_dim) {
    throw DimensionMismatch("ExtensionSpec: interaction is not (d d') x (d d')");
  }
  if (!std::isfinite(theta)) throw InvalidInput("ExtensionSpec: non-finite theta");
}

UnitaryFamily build_extended_family(const ExtensionSpec& spec) {
  spec.validate();
  return UnitaryFamily::extended(spec.generator, spec.ancilla_dim, spec.interaction);
}

UnitaryFamily build_channel_extension(const HermitianOperator& generator, std::size_t ancilla_dim) {
  if (ancilla_dim < 1) throw InvalidInput("build_channel_extension: ancilla_dim must be >= 1");
  return UnitaryFamily::phase_shift(kron(generator, HermitianOperator::identity(ancilla_dim)));
}

double finite_difference_channel_qfi(const UnitaryFamily& family, double theta,
                                     std::size_t restarts, RngStream& rng,
                                     const Tolerances& tol) {
  if (restarts < 1) throw InvalidInput("finite_difference_channel_qfi: restarts must be >= 1");
  std::vector<PureState> probes;
  probes.reserve(restarts + 1);
  for (std::size_t r = 0; r < restarts; ++r) probes.push_back(random_pure_state(family.dim(), rng));
  probes.push_back(*channel_qfi_unitary(family, theta, tol).optimal_probe);

  double best = 0.0;
  for (const auto& probe : probes) {
    const DensityFamily evolved = [&family, &probe](double t) {
      const ComplexMatrix u = unitary_exp(family.hamiltonian_at(t), 1.0);
      return DensityMatrix::from_pure(PureState::normalized(u * probe.amplitudes()));
    };
    best = std::max(best, qfi_via_bures_limit(evolved, theta, tol.bures_dtheta, tol));
  }
  return best;
}

TrialRecord verify_theorem_instance(const ExtensionSpec& spec, RngStream& oracle_rng,
                                    std::size_t oracle_restarts, const Tolerances& tol) {
  const UnitaryFamily family = build_extended_family(spec);
  TrialRecord rec;
  rec.d = spec.probe_dim;
  rec.dprime = spec.ancilla_dim;
  rec.theta = spec.theta;
  rec.c_orig = channel_qfi_phase_shift(spec.generator, tol).value;
  rec.c_ext = channel_qfi_unitary(family, spec.theta, tol).value;
  rec.c_eq22_ext = channel_qfi_eq22(family, spec.theta, {}, tol).value;
  rec.margin = rec.c_orig - rec.c_ext;
  const double oracle =
      finite_difference_channel_qfi(family, spec.theta, oracle_restarts, oracle_rng, tol);
  rec.oracle_gap = std::abs(rec.c_ext - oracle);
  return rec;
}

HermitianOperator commuting_interaction(const HermitianOperator& generator,
                                        std::size_t ancilla_dim, double scale, RngStream& rng) {
  const EigenSystem eig = hermitian_eig(generator);
  const auto d = static_cast<Eigen::Index>(generator.dim());
  const auto n = d * static_cast<Eigen::Index>(ancilla_dim);
  ComplexMatrix h = ComplexMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < d; ++k) {
    const ComplexMatrix projector = eig.vectors.col(k) * eig.vectors.col(k).adjoint();
    h += kron(projector, random_hermitian(ancilla_dim, scale, rng).matrix());
  }
  return HermitianOperator(ComplexMatrix(0.5 * (h + h.adjoint())));
}

ExtensionSpec generate_trial_spec(const ExperimentConfig& config, std::size_t index,
                                  double* scale_out) {
  const std::size_t nd = config.probe_dims.size();
  const std::size_t na = config.ancilla_dims.size();
  const std::size_t ns = config.interaction_scales.size();
  std::size_t combo = index % (nd * na * ns);
  const double scale = config.interaction_scales[combo % ns];
  combo /= ns;
  const std::size_t dprime = config.ancilla_dims[combo % na];
  combo /= na;
  const std::size_t d = config.probe_dims[combo % nd];

  const RngStream trial = RngStream::substream(config.master_seed, "trial", index);
  RngStream gen_rng = trial.child("generator");
  RngStream int_rng = trial.child("interaction");
  RngStream theta_rng = trial.child("theta");

  ExtensionSpec spec;
  spec.probe_dim = d;
  spec.ancilla_dim = dprime;
  spec.generator = random_hermitian(d, config.generator_scale, gen_rng);
  switch (config.interaction_model) {
    case InteractionModel::Gue:
      spec.interaction = random_hermitian(d * dprime, scale, int_rng);
      break;
    case InteractionModel::Commuting:
      spec.interaction = commuting_interaction(spec.generator, dprime, scale, int_rng);
      break;
    case InteractionModel::Zero:
      spec.interaction = HermitianOperator::zero(d * dprime);
      break;
  }
  spec.theta = theta_rng.uniform(config.theta_range.first, config.theta_range.second);
  if (scale_out != nullptr) *scale_out = scale;
  return spec;
}

ExperimentSummary summarize(const std::vector<TrialRecord>& trials) {
  ExperimentSummary s;
  s.trial_count = trials.size();
  if (trials.empty()) return s;
  s.min_margin = std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (const auto& t : trials) {
    s.min_margin = std::min(s.min_margin, t.margin);
    sum += t.margin;
  }
  s.mean_margin = sum / static_cast<double>(trials.size());
  s.max_violation = std::max(0.0, -s.min_margin);
  return s;
}

ExperimentReport run_trials(const ExperimentConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();

  std::vector<TrialRecord> trials(config.trials);
  auto run_one = [&config, &trials](std::size_t i) {
    double scale = 0.0;
    const ExtensionSpec spec = generate_trial_spec(config, i, &scale);
    RngStream oracle_rng = RngStream::substream(config.master_seed, "trial", i).child("oracle");
    TrialRecord rec =
        verify_theorem_instance(spec, oracle_rng, config.oracle_restarts, config.tolerances);
    rec.trial = i;
    rec.scale = scale;
    trials[i] = rec;
  };

  std::size_t workers = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
  workers = std::clamp<std::size_t>(workers, 1, config.trials);
  if (workers == 1) {
    for (std::size_t i = 0; i < config.trials; ++i) run_one(i);
  } else {
    // Strided assignment; every trial writes only its own slot.
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t i = w; i < config.trials; i += workers) run_one(i);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  ExperimentReport report;
  report.config = config;
  report.master_seed = config.master_seed;
  report.trials = std::move(trials);
  report.summary = summarize(report.trials);
  report.summary.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

CommutingCheck verify_commuting_generalization(const UnitaryFamily& family, double theta,
                                               const Tolerances& tol) {
  const HermitianOperator h = family.hamiltonian_at(theta);
  const HermitianOperator hdot = family.hamiltonian_derivative_at(theta);
  const double comm = spectral_norm(commutator(hdot.matrix(), h.matrix()));
  if (comm > tol.commutator) {
    throw NotCommuting("verify_commuting_generalization: ||[Hdot, H]|| = " +
                       std::to_string(comm));
  }
  CommutingCheck check;
  check.lhs = channel_qfi_unitary(family, theta, tol).value;
  const EigenSystem eig = hermitian_eig(hdot);
  const double spread = eig.values(eig.values.size() - 1) - eig.values(0);
  check.rhs = spread * spread;
  if (std::abs(check.lhs - check.rhs) > tol.local_generator_residual * (1.0 + check.rhs)) {
    throw std::runtime_error("verify_commuting_generalization: channel QFI " +
                             std::to_string(check.lhs) + " differs from (spread Hdot)^2 " +
                             std::to_string(check.rhs));
  }
  return check;
}

}  // namespace qmetro
