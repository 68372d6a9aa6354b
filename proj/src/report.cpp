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

#include "qmetro/report.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <utility>

namespace qmetro {

namespace {

struct ToleranceField {
  const char* name;
  double Tolerances::*member;
};

constexpr std::array kToleranceFields{
    ToleranceField{"hermitian_asymmetry", &Tolerances::hermitian_asymmetry},
    ToleranceField{"eigen_degeneracy", &Tolerances::eigen_degeneracy},
    ToleranceField{"pure_state_norm", &Tolerances::pure_state_norm},
    ToleranceField{"density_hermitian", &Tolerances::density_hermitian},
    ToleranceField{"density_trace", &Tolerances::density_trace},
    ToleranceField{"density_min_eigenvalue", &Tolerances::density_min_eigenvalue},
    ToleranceField{"kraus_completeness", &Tolerances::kraus_completeness},
    ToleranceField{"unitarity", &Tolerances::unitarity},
    ToleranceField{"sld_support_cutoff", &Tolerances::sld_support_cutoff},
    ToleranceField{"rho_dot_trace", &Tolerances::rho_dot_trace},
    ToleranceField{"fidelity_eigen_cutoff", &Tolerances::fidelity_eigen_cutoff},
    ToleranceField{"local_generator_residual", &Tolerances::local_generator_residual},
    ToleranceField{"golden_x_tolerance", &Tolerances::golden_x_tolerance},
    ToleranceField{"bracket_scale", &Tolerances::bracket_scale},
    ToleranceField{"commutator", &Tolerances::commutator},
    ToleranceField{"bures_dtheta", &Tolerances::bures_dtheta},
    ToleranceField{"violation", &Tolerances::violation},
};

void dump_into(const Json& v, std::string& out, int depth) {
  const std::string pad(2 * static_cast<std::size_t>(depth + 1), ' ');
  const std::string close_pad(2 * static_cast<std::size_t>(depth), ' ');
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        out += Json(key).dump();
        out += ": ";
        dump_into(item, out, depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ",\n";
        out += pad;
        dump_into(v[i], out, depth + 1);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(v.get<double>());
      return;
    default:
      out += v.dump();
      return;
  }
}

template <typename T>
T get_as(const Json& doc, const char* key) {
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(std::string("malformed config: key '") + key + "' has the wrong type");
  }
}

}  // namespace

std::string format_double(double value) {
  if (!std::isfinite(value)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string dump_json(const Json& value) {
  std::string out;
  dump_into(value, out, 0);
  out += "\n";
  return out;
}

Json tolerances_to_json(const Tolerances& tol) {
  Json j = Json::object();
  for (const auto& field : kToleranceFields) j[field.name] = tol.*(field.member);
  j["bracket_max_doublings"] = tol.bracket_max_doublings;
  return j;
}

Json config_to_json(const ExperimentConfig& c) {
  Json j = Json::object();
  j["mode"] = std::string(to_string(c.mode));
  j["probe_dims"] = c.probe_dims;
  j["ancilla_dims"] = c.ancilla_dims;
  j["interaction_scales"] = c.interaction_scales;
  j["theta_range"] = Json::array({c.theta_range.first, c.theta_range.second});
  j["trials"] = c.trials;
  j["master_seed"] = c.master_seed;
  j["tolerances"] = tolerances_to_json(c.tolerances);
  j["output_path"] = c.output_path;
  j["output_format"] = std::string(to_string(c.output_format));
  j["interaction_model"] = std::string(to_string(c.interaction_model));
  j["generator_scale"] = c.generator_scale;
  j["oracle_restarts"] = c.oracle_restarts;
  j["generator"] = c.generator;
  j["threads"] = c.threads;
  j["record_runtime"] = c.record_runtime;
  return j;
}

ExperimentConfig config_from_json(const Json& doc, ExperimentConfig c) {
  if (!doc.is_object()) throw ConfigError("malformed config: top level must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key == "mode") {
      c.mode = parse_mode(get_as<std::string>(doc, "mode"));
    } else if (key == "probe_dims") {
      c.probe_dims = get_as<std::vector<std::size_t>>(doc, "probe_dims");
    } else if (key == "ancilla_dims") {
      c.ancilla_dims = get_as<std::vector<std::size_t>>(doc, "ancilla_dims");
    } else if (key == "interaction_scales") {
      c.interaction_scales = get_as<std::vector<double>>(doc, "interaction_scales");
    } else if (key == "theta_range") {
      const auto range = get_as<std::vector<double>>(doc, "theta_range");
      if (range.size() != 2) throw ConfigError("malformed config: theta_range needs [lo, hi]");
      c.theta_range = {range[0], range[1]};
    } else if (key == "trials") {
      c.trials = get_as<std::size_t>(doc, "trials");
    } else if (key == "master_seed") {
      c.master_seed = get_as<std::uint64_t>(doc, "master_seed");
    } else if (key == "tolerances") {
      if (!value.is_object()) throw ConfigError("malformed config: tolerances must be an object");
      for (const auto& [tkey, tval] : value.items()) {
        bool known = false;
        for (const auto& field : kToleranceFields) {
          if (tkey == field.name) {
            if (!tval.is_number()) {
              throw ConfigError("malformed config: tolerance '" + tkey + "' must be a number");
            }
            c.tolerances.*(field.member) = tval.get<double>();
            known = true;
          }
        }
        if (tkey == "bracket_max_doublings") {
          if (!tval.is_number_integer()) {
            throw ConfigError("malformed config: bracket_max_doublings must be an integer");
          }
          c.tolerances.bracket_max_doublings = tval.get<int>();
          known = true;
        }
        if (!known) throw ConfigError("unknown config key 'tolerances." + tkey + "'");
      }
    } else if (key == "output_path") {
      c.output_path = get_as<std::string>(doc, "output_path");
    } else if (key == "output_format") {
      c.output_format = parse_output_format(get_as<std::string>(doc, "output_format"));
    } else if (key == "interaction_model") {
      c.interaction_model = parse_interaction_model(get_as<std::string>(doc, "interaction_model"));
    } else if (key == "generator_scale") {
      c.generator_scale = get_as<double>(doc, "generator_scale");
    } else if (key == "oracle_restarts") {
      c.oracle_restarts = get_as<std::size_t>(doc, "oracle_restarts");
    } else if (key == "generator") {
      c.generator = get_as<std::string>(doc, "generator");
    } else if (key == "threads") {
      c.threads = get_as<std::size_t>(doc, "threads");
    } else if (key == "record_runtime") {
      c.record_runtime = get_as<bool>(doc, "record_runtime");
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  return c;
}

Json trial_to_json(const TrialRecord& t) {
  Json j = Json::object();
  j["trial"] = t.trial;
  j["d"] = t.d;
  j["dprime"] = t.dprime;
  j["scale"] = t.scale;
  j["theta"] = t.theta;
  j["c_ext"] = t.c_ext;
  j["c_orig"] = t.c_orig;
  j["c_eq22_ext"] = t.c_eq22_ext;
  j["margin"] = t.margin;
  j["oracle_gap"] = t.oracle_gap;
  return j;
}

Json report_to_json(const ExperimentReport& report) {
  Json j = Json::object();
  j["config"] = config_to_json(report.config);
  j["master_seed"] = report.master_seed;
  Json trials = Json::array();
  for (const auto& t : report.trials) trials.push_back(trial_to_json(t));
  j["trials"] = std::move(trials);
  Json summary = Json::object();
  summary["trial_count"] = report.summary.trial_count;
  summary["min_margin"] = report.summary.min_margin;
  summary["max_violation"] = report.summary.max_violation;
  summary["mean_margin"] = report.summary.mean_margin;
  if (report.config.record_runtime) summary["runtime_ms"] = report.summary.runtime_ms;
  j["summary"] = std::move(summary);
  return j;
}

std::string report_to_csv(const ExperimentReport& report) {
  std::ostringstream os;
  os << kTrialCsvHeader << "\n";
  for (const auto& t : report.trials) {
    os << t.trial << ',' << t.d << ',' << t.dprime << ',' << format_double(t.scale) << ','
       << format_double(t.theta) << ',' << format_double(t.c_orig) << ','
       << format_double(t.c_ext) << ',' << format_double(t.c_eq22_ext) << ','
       << format_double(t.margin) << ',' << format_double(t.oracle_gap) << "\n";
  }
  return os.str();
}

}  // namespace qmetro
