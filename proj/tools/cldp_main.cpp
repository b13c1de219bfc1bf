// Copyright 2026 The CLDP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cldp/csv.hpp"
#include "cldp/errors.hpp"
#include "cldp/metrics.hpp"
#include "cldp/sweep.hpp"

namespace {

struct MechanismFlags {
  int users = 4;
  int tossing = 40;
  int window = 200;
  double amplitude = 3.0;
  double period = 1.0;
  std::string mode = "shuffle";
  std::uint64_t seed = 42;
  bool randomize_assignment = false;

  // validate=false leaves checking to the caller; the sweep runner replaces
  // the swept field before validating each point.
  cldp::CldpConfig config(bool validate = true) const {
    cldp::CldpConfig cfg;
    cfg.num_users = users;
    cfg.tossing_space = tossing;
    cfg.window_size = window;
    cfg.amplitude = amplitude;
    cfg.period = period;
    if (mode == "shuffle") {
      cfg.mode = cldp::NoiseMode::kShuffle;
    } else if (mode == "toss") {
      cfg.mode = cldp::NoiseMode::kToss;
    } else {
      throw cldp::ConfigError("unknown mode '" + mode +
                              "', expected shuffle or toss");
    }
    cfg.master_seed = seed;
    cfg.randomize_assignment = randomize_assignment;
    if (validate) cfg.validate();
    return cfg;
  }
};

struct DataFlags {
  std::string input;
  std::string column = "Global_active_power";
  std::string synth = "random-walk";
  int samples = 1000;
  double level = 5.0;
  double sin_amplitude = 1.0;
  double sin_period = 100.0;
  double step_std = 0.25;
  std::uint64_t data_seed = 1;

  cldp::DataSource source() const {
    if (!input.empty()) {
      return cldp::DataSource::from_csv(input, column);
    }
    cldp::SynthSpec spec;
    if (synth == "constant") {
      spec.signal = cldp::SynthSignal::kConstant;
    } else if (synth == "sinusoid") {
      spec.signal = cldp::SynthSignal::kSinusoid;
    } else if (synth == "random-walk") {
      spec.signal = cldp::SynthSignal::kRandomWalk;
    } else {
      throw cldp::ConfigError("unknown synthetic signal '" + synth + "'");
    }
    spec.samples_per_user = samples;
    spec.level = level;
    spec.amplitude = sin_amplitude;
    spec.period = sin_period;
    spec.step_std = step_std;
    spec.seed = data_seed;
    return cldp::DataSource::from_synth(spec);
  }
};

void add_mechanism_flags(CLI::App* cmd, MechanismFlags* flags) {
  cmd->add_option("--users", flags->users, "Number of users u (even, >= 2)");
  cmd->add_option("--tossing", flags->tossing, "Tossing space k");
  cmd->add_option("--window", flags->window, "Window size l");
  cmd->add_option("--amplitude", flags->amplitude, "Noise amplitude A");
  cmd->add_option("--period", flags->period, "Sine period T");
  cmd->add_option("--mode", flags->mode, "Noise mode: shuffle or toss")
      ->check(CLI::IsMember({"shuffle", "toss"}));
  cmd->add_option("--seed", flags->seed, "Master seed");
  cmd->add_flag("--randomize-assignment", flags->randomize_assignment,
                "Map users to partitions with a seeded permutation");
}

void add_data_flags(CLI::App* cmd, DataFlags* flags) {
  auto* input = cmd->add_option("--input", flags->input,
                                "Power-consumption CSV (semicolon format)");
  cmd->add_option("--column", flags->column, "Column to read from --input");
  auto* synth =
      cmd->add_option("--synth", flags->synth,
                      "Synthetic signal: constant, sinusoid or random-walk")
          ->check(CLI::IsMember({"constant", "sinusoid", "random-walk"}));
  input->excludes(synth);
  cmd->add_option("--samples", flags->samples, "Synthetic samples per user");
  cmd->add_option("--level", flags->level, "Synthetic base level");
  cmd->add_option("--sin-amplitude", flags->sin_amplitude,
                  "Synthetic sinusoid amplitude");
  cmd->add_option("--sin-period", flags->sin_period,
                  "Synthetic sinusoid period (samples)");
  cmd->add_option("--step-std", flags->step_std,
                  "Synthetic random-walk step standard deviation");
  cmd->add_option("--data-seed", flags->data_seed, "Synthetic data seed");
}

std::vector<double> parse_value_list(const std::string& text) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t pos = text.find(',', start);
    const std::string item = pos == std::string::npos
                                 ? text.substr(start)
                                 : text.substr(start, pos - start);
    double value = 0.0;
    if (!cldp::parse_double(item, value)) {
      throw cldp::ConfigError("cannot parse swept value '" + item + "'");
    }
    values.push_back(value);
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return values;
}

int run_perturb(const MechanismFlags& mech, const DataFlags& data,
                const std::string& out_path) {
  const auto cfg = mech.config();
  const auto users = data.source().users(cfg.num_users);
  const auto result = cldp::run_once(users, cfg);

  cldp::CsvWriter out(out_path);
  out.write_line("user,sample_index,original,perturbed");
  for (std::size_t i = 0; i < users.size(); ++i) {
    const auto& perturbed = result.perturbed[i];
    for (std::size_t t = 0; t < perturbed.samples.size(); ++t) {
      out.write_line(std::to_string(perturbed.user_index) + "," +
                     std::to_string(t) + "," +
                     cldp::format_double(users[i].samples[t]) + "," +
                     cldp::format_double(perturbed.samples[t]));
    }
  }
  out.close();

  for (std::size_t i = 0; i < result.perturbed.size(); ++i) {
    std::cout << "user " << result.perturbed[i].user_index
              << ": mse=" << cldp::format_double(result.per_user_mse[i])
              << " dropped=" << result.perturbed[i].dropped_samples << "\n";
  }
  std::cout << "mse_per_sample=" << cldp::format_double(result.mse_per_sample)
            << " wrote " << out_path << "\n";
  return 0;
}

int run_aggregate(const MechanismFlags& mech, const DataFlags& data,
                  const std::string& out_path) {
  const auto cfg = mech.config();
  const auto users = data.source().users(cfg.num_users);
  const auto result = cldp::run_once(users, cfg);
  const auto& report = result.report;

  cldp::CsvWriter out(out_path);
  out.write_line("window,true_total,noisy_total,residual");
  for (std::size_t w = 0; w < report.per_window_total.size(); ++w) {
    const double noisy = report.per_window_total[w];
    const double res = report.residual_noise_per_window[w];
    out.write_line(std::to_string(w) + "," + cldp::format_double(noisy - res) +
                   "," + cldp::format_double(noisy) + "," +
                   cldp::format_double(res));
  }
  out.close();

  std::cout << "windows=" << report.per_window_total.size()
            << " aggregate_error=" << cldp::format_double(result.aggregate_error)
            << " dropped_samples=" << report.dropped_samples << " wrote "
            << out_path << "\n";
  return 0;
}

int run_privacy(const MechanismFlags& mech, double epsilon_constant,
                const std::string& out_path) {
  const auto report = cldp::privacy_report(mech.tossing, mech.window,
                                           mech.users, mech.amplitude,
                                           epsilon_constant);
  std::cout << "epsilon_proxy=" << cldp::format_double(report.epsilon_proxy)
            << "\n";
  std::cout << "log10_pbreak="
            << cldp::format_double(report.break_probability_log10) << "\n";
  if (report.break_probability.has_value()) {
    std::cout << "pbreak=" << cldp::format_double(*report.break_probability)
              << "\n";
  } else {
    std::cout << "pbreak=underflow\n";
  }
  if (report.tossing_space == 1) {
    std::cout << "warning: k=1 gives no tossing entropy; the perturbation is "
                 "deterministic\n";
  }
  if (!out_path.empty()) {
    cldp::CsvWriter out(out_path);
    out.write_line("k,l,u,A,c,epsilon_proxy,log10_pbreak,pbreak");
    out.write_line(
        std::to_string(report.tossing_space) + "," +
        std::to_string(report.window_size) + "," +
        std::to_string(report.num_users) + "," +
        cldp::format_double(report.amplitude) + "," +
        cldp::format_double(report.epsilon_constant) + "," +
        cldp::format_double(report.epsilon_proxy) + "," +
        cldp::format_double(report.break_probability_log10) + "," +
        (report.break_probability.has_value()
             ? cldp::format_double(*report.break_probability)
             : std::string("underflow")));
    out.close();
    std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cooperative LDP simulator for multi-user time series"};
  app.require_subcommand(1);

  MechanismFlags mech;
  DataFlags data;

  // perturb
  auto* perturb = app.add_subcommand(
      "perturb", "Perturb per-user series and dump original vs perturbed");
  std::string perturb_out = "perturbed.csv";
  add_mechanism_flags(perturb, &mech);
  add_data_flags(perturb, &data);
  perturb->add_option("--out", perturb_out, "Output CSV path");

  // aggregate
  auto* aggregate = app.add_subcommand(
      "aggregate", "Run the collector aggregation and report residuals");
  std::string aggregate_out = "aggregate.csv";
  add_mechanism_flags(aggregate, &mech);
  add_data_flags(aggregate, &data);
  aggregate->add_option("--out", aggregate_out, "Output CSV path");

  // sweep
  auto* sweep = app.add_subcommand(
      "sweep", "Sweep one parameter and tabulate MSE / aggregate error");
  std::string sweep_param = "k";
  std::string sweep_values;
  std::string sweep_out = "sweep.csv";
  std::string sweep_summary;
  int sweep_reps = 30;
  double epsilon_constant = 1.0;
  bool timing = false;
  add_mechanism_flags(sweep, &mech);
  add_data_flags(sweep, &data);
  sweep->add_option("--sweep", sweep_param, "Parameter to vary: k, l, u or A")
      ->check(CLI::IsMember({"k", "l", "u", "A"}));
  sweep->add_option("--values", sweep_values, "Comma-separated value list")
      ->required();
  sweep->add_option("--reps", sweep_reps, "Seeds per swept value");
  sweep->add_option("--epsilon-constant", epsilon_constant,
                    "Constant c in the epsilon proxy");
  sweep->add_option("--out", sweep_out, "Per-run rows CSV path");
  sweep->add_option("--summary", sweep_summary, "Per-value summary CSV path");
  sweep->add_flag("--timing", timing,
                  "Record wall time per row (makes output run-dependent)");

  // privacy
  auto* privacy = app.add_subcommand(
      "privacy", "Report the epsilon proxy and break probability");
  std::string privacy_out;
  double privacy_constant = 1.0;
  add_mechanism_flags(privacy, &mech);
  privacy->add_option("--epsilon-constant", privacy_constant,
                      "Constant c in the epsilon proxy");
  privacy->add_option("--out", privacy_out, "Optional one-row CSV path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (perturb->parsed()) {
      return run_perturb(mech, data, perturb_out);
    }
    if (aggregate->parsed()) {
      return run_aggregate(mech, data, aggregate_out);
    }
    if (sweep->parsed()) {
      cldp::SweepSpec spec;
      if (sweep_param == "k") spec.param = cldp::SweepParam::kTossingSpace;
      if (sweep_param == "l") spec.param = cldp::SweepParam::kWindowSize;
      if (sweep_param == "u") spec.param = cldp::SweepParam::kNumUsers;
      if (sweep_param == "A") spec.param = cldp::SweepParam::kAmplitude;
      spec.values = parse_value_list(sweep_values);
      spec.base = mech.config(/*validate=*/false);
      spec.repetitions = sweep_reps;
      spec.epsilon_constant = epsilon_constant;

      const auto source = data.source();
      const auto rows =
          cldp::run_sweep(spec, source, cldp::SweepOptions{.timing = timing});
      cldp::write_sweep_csv(rows, sweep_out);
      std::cout << "wrote " << rows.size() << " rows to " << sweep_out << "\n";
      if (!sweep_summary.empty()) {
        cldp::write_summary_csv(cldp::summarize(rows), sweep_summary);
        std::cout << "wrote summary to " << sweep_summary << "\n";
      }
      return 0;
    }
    if (privacy->parsed()) {
      return run_privacy(mech, privacy_constant, privacy_out);
    }
  } catch (const cldp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
