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

#include "qmetro/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qmetro/channel_qfi.hpp"
#include "qmetro/errors.hpp"
#include "qmetro/extension_lab.hpp"
#include "qmetro/properties.hpp"
#include "qmetro/report.hpp"

namespace qmetro::cli {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_number(const std::string& text, std::string_view context) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError("invalid number '" + text + "' in " + std::string(context));
  }
}

Json read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("malformed config file '" + path + "': " + e.what());
  }
}

// Writes to output_path ("-" is stdout). Returns false if the path is unwritable.
bool emit(const ExperimentConfig& config, const std::string& body, std::ostream& out) {
  if (config.output_path.empty()) return true;
  if (config.output_path == "-") {
    out << body;
    return true;
  }
  std::ofstream file(config.output_path, std::ios::binary | std::ios::trunc);
  if (!file) return false;
  file << body;
  file.flush();
  return static_cast<bool>(file);
}

std::string describe_probe(const PureState& probe) {
  std::ostringstream os;
  os << std::setprecision(12) << "[";
  for (Eigen::Index k = 0; k < probe.amplitudes().size(); ++k) {
    const Complex a = probe.amplitudes()(k);
    if (k > 0) os << ", ";
    os << a.real() << (a.imag() < 0 ? "-" : "+") << std::abs(a.imag()) << "i";
  }
  os << "]";
  return os.str();
}

Json probe_json(const PureState& probe) {
  Json amps = Json::array();
  for (Eigen::Index k = 0; k < probe.amplitudes().size(); ++k) {
    amps.push_back(Json::array({probe.amplitudes()(k).real(), probe.amplitudes()(k).imag()}));
  }
  return amps;
}

Json envelope(const ExperimentConfig& config) {
  Json j = Json::object();
  j["config"] = config_to_json(config);
  j["master_seed"] = config.master_seed;
  return j;
}

int run_verify_theorem(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  const ExperimentReport report = run_trials(config);
  const std::string body = config.output_format == OutputFormat::Json
                               ? dump_json(report_to_json(report))
                               : report_to_csv(report);
  if (!emit(config, body, out)) {
    err << "qmetro: cannot write report to '" << config.output_path << "'\n";
    return kExitUsage;
  }
  const bool ok = report.summary.max_violation <= config.tolerances.violation;
  out << "verify-theorem: trials=" << report.summary.trial_count
      << " min_margin=" << format_double(report.summary.min_margin)
      << " max_violation=" << format_double(report.summary.max_violation)
      << " tol=" << format_double(config.tolerances.violation) << " "
      << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kExitOk : kExitCertificationFailure;
}

int run_channel_qfi(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  const Tolerances& tol = config.tolerances;
  const HermitianOperator g = parse_generator(config.generator);
  const ChannelQfiResult closed = channel_qfi_phase_shift(g, tol);
  const UnitaryFamily family = UnitaryFamily::phase_shift(g);
  const double theta = config.theta_range.first;
  const ChannelQfiResult eq22 = channel_qfi_eq22(family, theta, {}, tol);
  const CenteredGenerator centered = center_generator(g);
  const double centered_norm = spectral_norm(centered.centered);

  bool ok = std::abs(eq22.value - closed.value) <= 1e-8 * (1.0 + closed.value);
  Json extensions = Json::array();
  for (std::size_t dprime : config.ancilla_dims) {
    const double v = channel_qfi_unitary(build_channel_extension(g, dprime), theta, tol).value;
    ok = ok && std::abs(v - closed.value) <= 1e-9 * (1.0 + closed.value);
    Json e = Json::object();
    e["ancilla_dim"] = dprime;
    e["value"] = v;
    extensions.push_back(std::move(e));
  }

  const EigenSystem eig = hermitian_eig(g);
  Json result = Json::object();
  result["generator"] = config.generator;
  result["generator_eigenvalues"] = std::vector<double>(eig.values.begin(), eig.values.end());
  result["value"] = closed.value;
  result["method"] = std::string(to_string(closed.method));
  result["optimal_probe"] = probe_json(*closed.optimal_probe);
  result["eq22_value"] = eq22.value;
  result["minimizer_x"] = *eq22.minimizer_x;
  result["centered_shift"] = centered.shift;
  result["centered_bound"] = 4.0 * centered_norm * centered_norm;
  result["uncentered_bound"] = upper_bound_norm(family, theta);
  result["extensions"] = std::move(extensions);

  std::string body;
  if (config.output_format == OutputFormat::Json) {
    Json doc = envelope(config);
    doc["channel_qfi"] = result;
    body = dump_json(doc);
  } else {
    std::ostringstream os;
    os << "quantity,value\n";
    for (const char* key :
         {"value", "eq22_value", "minimizer_x", "centered_shift", "centered_bound",
          "uncentered_bound"}) {
      os << key << ',' << format_double(result[key].get<double>()) << "\n";
    }
    body = os.str();
  }
  if (!emit(config, body, out)) {
    err << "qmetro: cannot write report to '" << config.output_path << "'\n";
    return kExitUsage;
  }
  out << "channel-qfi: generator " << config.generator << " value=" << format_double(closed.value)
      << " eq22=" << format_double(eq22.value) << " x*=" << format_double(*eq22.minimizer_x)
      << "\n  optimal probe " << describe_probe(*closed.optimal_probe) << "\n";
  return ok ? kExitOk : kExitCertificationFailure;
}

int run_properties(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  const std::size_t n = config.trials;
  auto stream = [&config](const char* label) {
    return RngStream::substream(config.master_seed, "properties", 0).child(label);
  };
  RngStream mono = stream("monotonicity");
  RngStream unit = stream("unitary-invariance");
  RngStream conv = stream("convexity");
  RngStream add = stream("additivity");
  const std::vector<PropertyCheck> checks{
      check_monotonicity(n, mono), check_unitary_invariance(n, unit), check_convexity(n, conv),
      check_additivity(n, add)};

  bool ok = true;
  Json rows = Json::array();
  std::ostringstream csv;
  csv << "name,cases,worst,tolerance,passed\n";
  for (const auto& c : checks) {
    ok = ok && c.passed;
    Json j = Json::object();
    j["name"] = c.name;
    j["cases"] = c.cases;
    j["worst"] = c.worst;
    j["tolerance"] = c.tolerance;
    j["passed"] = c.passed;
    if (config.record_runtime) j["runtime_ms"] = c.runtime_ms;
    rows.push_back(std::move(j));
    csv << c.name << ',' << c.cases << ',' << format_double(c.worst) << ','
        << format_double(c.tolerance) << ',' << (c.passed ? "true" : "false") << "\n";
  }
  Json doc = envelope(config);
  doc["properties"] = std::move(rows);
  const std::string body =
      config.output_format == OutputFormat::Json ? dump_json(doc) : csv.str();
  if (!emit(config, body, out)) {
    err << "qmetro: cannot write report to '" << config.output_path << "'\n";
    return kExitUsage;
  }
  for (const auto& c : checks) {
    out << "properties: " << std::left << std::setw(20) << c.name << " cases=" << c.cases
        << " worst=" << format_double(c.worst) << " tol=" << format_double(c.tolerance) << " "
        << (c.passed ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kExitOk : kExitCertificationFailure;
}

int run_bures_check(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  const std::vector<double> dthetas{1e-3, 5e-4, 2.5e-4};
  const std::vector<BuresConvergence> checks = standard_bures_checks(dthetas, config.tolerances);

  bool ok = true;
  Json families = Json::array();
  std::ostringstream csv;
  csv << "family,dtheta,qfi_limit,qfi_sld,abs_error\n";
  for (const auto& c : checks) {
    ok = ok && c.passed;
    Json rows = Json::array();
    for (const auto& r : c.rows) {
      Json j = Json::object();
      j["dtheta"] = r.dtheta;
      j["qfi_limit"] = r.qfi_limit;
      j["qfi_sld"] = r.qfi_sld;
      j["abs_error"] = r.abs_error;
      rows.push_back(std::move(j));
      csv << '"' << c.family << "\"," << format_double(r.dtheta) << ','
          << format_double(r.qfi_limit) << ',' << format_double(r.qfi_sld) << ','
          << format_double(r.abs_error) << "\n";
    }
    Json f = Json::object();
    f["family"] = c.family;
    f["expected_qfi"] = c.expected_qfi;
    f["rows"] = std::move(rows);
    f["ratios"] = c.ratios;
    f["passed"] = c.passed;
    families.push_back(std::move(f));
  }
  Json doc = envelope(config);
  doc["bures_check"] = std::move(families);
  const std::string body =
      config.output_format == OutputFormat::Json ? dump_json(doc) : csv.str();
  if (!emit(config, body, out)) {
    err << "qmetro: cannot write report to '" << config.output_path << "'\n";
    return kExitUsage;
  }
  for (const auto& c : checks) {
    out << "bures-check: " << c.family << " (QFI " << format_double(c.expected_qfi) << ")\n";
    out << "  " << std::setw(12) << "dtheta" << "  " << std::setw(24) << "|QFI_limit - QFI_sld|"
        << "\n";
    for (const auto& r : c.rows) {
      out << "  " << std::setw(12) << std::setprecision(4) << r.dtheta << "  " << std::setw(24)
          << std::setprecision(6) << r.abs_error << "\n";
    }
    out << "  ratios:";
    for (double ratio : c.ratios) out << " " << std::setprecision(4) << ratio;
    out << (c.passed ? "  PASS" : "  FAIL") << "\n";
  }
  return ok ? kExitOk : kExitCertificationFailure;
}

}  // namespace

HermitianOperator parse_generator(std::string_view literal) {
  const std::size_t colon = literal.find(':');
  if (colon == std::string_view::npos) {
    throw UsageError("invalid generator '" + std::string(literal) +
                     "' (expected diag:a,b,c | pauli:x|y|z | gue:dim,scale,seed)");
  }
  const std::string_view kind = literal.substr(0, colon);
  const std::string body(literal.substr(colon + 1));
  if (kind == "diag") {
    const auto parts = split(body, ',');
    RealVector values(static_cast<Eigen::Index>(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      values(static_cast<Eigen::Index>(i)) = parse_number(parts[i], "diag generator");
    }
    return HermitianOperator::diagonal(values);
  }
  if (kind == "pauli") {
    if (body == "x") return pauli::x();
    if (body == "y") return pauli::y();
    if (body == "z") return pauli::z();
    throw UsageError("invalid pauli generator '" + body + "' (expected x, y or z)");
  }
  if (kind == "gue") {
    const auto parts = split(body, ',');
    if (parts.size() != 3) throw UsageError("gue generator needs dim,scale,seed");
    const double dim = parse_number(parts[0], "gue generator");
    const double scale = parse_number(parts[1], "gue generator");
    const double seed = parse_number(parts[2], "gue generator");
    if (dim < 1 || dim != std::floor(dim) || seed < 0 || seed != std::floor(seed) ||
        !(scale > 0.0)) {
      throw UsageError("gue generator needs integer dim >= 1, scale > 0, integer seed >= 0");
    }
    RngStream rng = RngStream::substream(static_cast<std::uint64_t>(seed), "generator", 0);
    return random_hermitian(static_cast<std::size_t>(dim), scale, rng);
  }
  throw UsageError("unknown generator kind '" + std::string(kind) + "'");
}

ExperimentConfig parse_config(const std::vector<std::string>& args) {
  CLI::App app{"qmetro: channel quantum Fisher information and Hamiltonian-extension checks",
               "qmetro"};
  std::string mode;
  std::string config_path;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> dims;
  std::vector<std::size_t> ancilla_dims;
  std::vector<double> scales;
  std::vector<double> theta_range;
  std::string out_path;
  std::string format;
  double tol = 0.0;
  std::string generator;
  std::string interaction;
  std::size_t restarts = 0;
  std::size_t threads = 0;
  double generator_scale = 0.0;

  app.add_option("mode", mode, "verify-theorem | channel-qfi | properties | bures-check");
  app.add_option("--config", config_path, "JSON config file");
  auto* o_trials = app.add_option("--trials", trials, "number of trials / property cases");
  auto* o_seed = app.add_option("--seed", seed, "master seed");
  auto* o_dims = app.add_option("--dims", dims, "probe dimensions")->delimiter(',');
  auto* o_anc = app.add_option("--ancilla-dims", ancilla_dims, "ancilla dimensions")->delimiter(',');
  auto* o_scales = app.add_option("--scales", scales, "interaction scales")->delimiter(',');
  auto* o_theta = app.add_option("--theta-range", theta_range, "lo,hi")->delimiter(',');
  auto* o_out = app.add_option("--out", out_path, "report path ('-' for stdout)");
  auto* o_format = app.add_option("--format", format, "json | csv");
  auto* o_tol = app.add_option("--tol", tol, "violation tolerance");
  auto* o_gen = app.add_option("--generator", generator, "diag:a,b,c | pauli:x|y|z | gue:dim,scale,seed");
  auto* o_inter = app.add_option("--interaction", interaction, "gue | commuting | zero");
  auto* o_restarts = app.add_option("--restarts", restarts, "random probes for the oracle");
  auto* o_threads = app.add_option("--threads", threads, "worker threads (0: auto)");
  auto* o_gscale = app.add_option("--generator-scale", generator_scale, "GUE scale of G");
  auto* o_timing = app.add_flag("--timing", "record runtime_ms in the report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(std::string("usage error: ") + e.what());
  }

  ExperimentConfig c;
  if (!config_path.empty()) c = config_from_json(read_config_file(config_path), c);
  if (!mode.empty()) c.mode = parse_mode(mode);
  if (o_trials->count()) c.trials = trials;
  if (o_seed->count()) c.master_seed = seed;
  if (o_dims->count()) c.probe_dims = dims;
  if (o_anc->count()) c.ancilla_dims = ancilla_dims;
  if (o_scales->count()) c.interaction_scales = scales;
  if (o_theta->count()) {
    if (theta_range.size() != 2) throw ConfigError("invalid range: --theta-range needs lo,hi");
    c.theta_range = {theta_range[0], theta_range[1]};
  }
  if (o_out->count()) c.output_path = out_path;
  if (o_format->count()) c.output_format = parse_output_format(format);
  if (o_tol->count()) c.tolerances.violation = tol;
  if (o_gen->count()) c.generator = generator;
  if (o_inter->count()) c.interaction_model = parse_interaction_model(interaction);
  if (o_restarts->count()) c.oracle_restarts = restarts;
  if (o_threads->count()) c.threads = threads;
  if (o_gscale->count()) c.generator_scale = generator_scale;
  if (o_timing->count()) c.record_runtime = true;
  validate(c);
  if (c.mode == Mode::ChannelQfi) parse_generator(c.generator);
  return c;
}

int run(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  switch (config.mode) {
    case Mode::VerifyTheorem:
      return run_verify_theorem(config, out, err);
    case Mode::ChannelQfi:
      return run_channel_qfi(config, out, err);
    case Mode::Properties:
      return run_properties(config, out, err);
    case Mode::BuresCheck:
      return run_bures_check(config, out, err);
  }
  return kExitUsage;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  ExperimentConfig config;
  try {
    config = parse_config(args);
  } catch (const HelpRequested& help) {
    out << help.what();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "qmetro: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "qmetro: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidInput& e) {
    err << "qmetro: invalid input: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    return run(config, out, err);
  } catch (const UsageError& e) {
    err << "qmetro: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    // Numerical failure inside a check counts as a failed certification.
    err << "qmetro: " << e.what() << "\n";
    return kExitCertificationFailure;
  }
}

}  // namespace qmetro::cli
