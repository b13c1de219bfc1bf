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

#include "cldp/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <span>
#include <utility>

#include "cldp/csv.hpp"
#include "cldp/errors.hpp"

namespace cldp {
namespace {

bool is_positive_integer(double value) {
  return std::isfinite(value) && value >= 1.0 && std::floor(value) == value &&
         value <= 1e9;
}

std::pair<double, double> mean_and_std(std::span<const double> values) {
  double mean = 0.0;
  for (const double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  if (values.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (const double v : values) {
    const double d = v - mean;
    ss += d * d;
  }
  return {mean, std::sqrt(ss / static_cast<double>(values.size() - 1))};
}

}  // namespace

DataSource DataSource::from_csv(const std::string& path,
                                const std::string& column_name) {
  DataSource source;
  source.dataset_ = load_power_csv(path, column_name);
  source.description_ = path + ":" + column_name;
  return source;
}

DataSource DataSource::from_synth(const SynthSpec& spec) {
  spec.validate();
  DataSource source;
  source.synth_ = spec;
  source.description_ = "synthetic";
  return source;
}

std::vector<UserSeries> DataSource::users(int num_users) const {
  if (dataset_.has_value()) {
    return split_users(*dataset_, num_users).users;
  }
  SynthSpec spec = synth_;
  spec.num_users = num_users;
  return synth_series(spec);
}

RunResult run_once(const std::vector<UserSeries>& users,
                   const CldpConfig& cfg) {
  cfg.validate();
  if (users.size() != static_cast<std::size_t>(cfg.num_users)) {
    throw UserCountMismatch("got " + std::to_string(users.size()) +
                            " series for " + std::to_string(cfg.num_users) +
                            " users");
  }
  const auto mapping = assign_partitions(cfg);

  RunResult result;
  result.perturbed.reserve(users.size());
  result.per_user_mse.reserve(users.size());
  for (const auto& series : users) {
    PerturbedSeries perturbed = perturb_user_series(series, cfg, mapping);
    if (perturbed.samples.empty()) {
      throw ConfigError("window_size " + std::to_string(cfg.window_size) +
                        " exceeds the series length of user " +
                        std::to_string(series.user_index));
    }
    const std::span<const double> original(series.samples.data(),
                                           perturbed.samples.size());
    result.per_user_mse.push_back(mse(original, perturbed.samples));
    result.perturbed.push_back(std::move(perturbed));
  }

  result.report = aggregate_with_truth(result.perturbed, users, cfg);
  result.aggregate_error = aggregate_error(result.report);

  double sum = 0.0;
  for (const double v : result.per_user_mse) sum += v;
  result.mse_per_sample = sum / static_cast<double>(result.per_user_mse.size());
  return result;
}

std::string sweep_param_name(SweepParam param) {
  switch (param) {
    case SweepParam::kTossingSpace:
      return "k";
    case SweepParam::kWindowSize:
      return "l";
    case SweepParam::kNumUsers:
      return "u";
    case SweepParam::kAmplitude:
      return "A";
  }
  throw DomainError("unknown sweep parameter");
}

CldpConfig SweepSpec::config_for(double value) const {
  CldpConfig cfg = base;
  switch (param) {
    case SweepParam::kTossingSpace:
      cfg.tossing_space = static_cast<int>(value);
      break;
    case SweepParam::kWindowSize:
      cfg.window_size = static_cast<int>(value);
      break;
    case SweepParam::kNumUsers:
      cfg.num_users = static_cast<int>(value);
      break;
    case SweepParam::kAmplitude:
      cfg.amplitude = value;
      break;
  }
  return cfg;
}

void SweepSpec::validate() const {
  if (values.empty()) {
    throw ConfigError("sweep value list is empty");
  }
  if (repetitions < 1) {
    throw ConfigError("sweep repetitions must be >= 1");
  }
  if (!(epsilon_constant > 0.0)) {
    throw DomainError("epsilon constant must be positive");
  }
  for (const double value : values) {
    if (param != SweepParam::kAmplitude && !is_positive_integer(value)) {
      throw ConfigError("swept " + sweep_param_name(param) + " value " +
                        format_double(value) + " is not a positive integer");
    }
    try {
      config_for(value).validate();
    } catch (const Error& e) {
      throw ConfigError("sweep point " + sweep_param_name(param) + "=" +
                        format_double(value) + " invalid: " + e.what());
    }
  }
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const DataSource& source,
                                const SweepOptions& options) {
  using clock = std::chrono::steady_clock;
  spec.validate();

  std::vector<double> values = spec.values;
  std::sort(values.begin(), values.end());

  std::vector<SweepRow> rows;
  rows.reserve(values.size() * static_cast<std::size_t>(spec.repetitions));
  for (const double value : values) {
    CldpConfig cfg = spec.config_for(value);
    const auto users = source.users(cfg.num_users);
    for (int rep = 0; rep < spec.repetitions; ++rep) {
      cfg.master_seed = spec.base.master_seed + static_cast<std::uint64_t>(rep);
      const auto start = clock::now();
      RunResult result;
      try {
        result = run_once(users, cfg);
      } catch (const Error& e) {
        throw Error("sweep point " + sweep_param_name(spec.param) + "=" +
                    format_double(value) + " seed=" +
                    std::to_string(cfg.master_seed) + " failed: " + e.what());
      }
      const auto stop = clock::now();

      SweepRow row;
      row.param = spec.param;
      row.swept_value = value;
      row.seed = cfg.master_seed;
      row.mse_per_sample = result.mse_per_sample;
      row.aggregate_error = result.aggregate_error;
      row.epsilon_proxy =
          epsilon_proxy(cfg.tossing_space, cfg.window_size, cfg.num_users,
                        cfg.amplitude, spec.epsilon_constant);
      row.log10_pbreak = break_probability_log10(
          cfg.tossing_space, cfg.window_size, cfg.num_users);
      if (options.timing) {
        row.wall_ms =
            std::chrono::duration<double, std::milli>(stop - start).count();
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<SweepSummaryRow> summarize(const std::vector<SweepRow>& rows) {
  std::vector<SweepSummaryRow> summary;
  std::size_t begin = 0;
  while (begin < rows.size()) {
    std::size_t end = begin;
    while (end < rows.size() &&
           rows[end].swept_value == rows[begin].swept_value &&
           rows[end].param == rows[begin].param) {
      ++end;
    }
    std::vector<double> mses, errors;
    mses.reserve(end - begin);
    errors.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) {
      mses.push_back(rows[i].mse_per_sample);
      errors.push_back(rows[i].aggregate_error);
    }
    const auto [mse_mean, mse_std] = mean_and_std(mses);
    const auto [err_mean, err_std] = mean_and_std(errors);
    summary.push_back(SweepSummaryRow{
        .param = rows[begin].param,
        .swept_value = rows[begin].swept_value,
        .mse_mean = mse_mean,
        .mse_std = mse_std,
        .aggerr_mean = err_mean,
        .aggerr_std = err_std,
    });
    begin = end;
  }
  return summary;
}

void write_sweep_csv(const std::vector<SweepRow>& rows,
                     const std::string& path) {
  CsvWriter out(path);
  out.write_line(
      "swept_param,swept_value,seed,mse_per_sample,aggregate_error,"
      "epsilon_proxy,log10_pbreak,wall_ms");
  for (const auto& row : rows) {
    out.write_line(sweep_param_name(row.param) + "," +
                   format_double(row.swept_value) + "," +
                   std::to_string(row.seed) + "," +
                   format_double(row.mse_per_sample) + "," +
                   format_double(row.aggregate_error) + "," +
                   format_double(row.epsilon_proxy) + "," +
                   format_double(row.log10_pbreak) + "," +
                   format_double(row.wall_ms));
  }
  out.close();
}

void write_summary_csv(const std::vector<SweepSummaryRow>& rows,
                       const std::string& path) {
  CsvWriter out(path);
  out.write_line("swept_param,swept_value,mse_mean,mse_std,aggerr_mean,aggerr_std");
  for (const auto& row : rows) {
    out.write_line(sweep_param_name(row.param) + "," +
                   format_double(row.swept_value) + "," +
                   format_double(row.mse_mean) + "," +
                   format_double(row.mse_std) + "," +
                   format_double(row.aggerr_mean) + "," +
                   format_double(row.aggerr_std));
  }
  out.close();
}

}  // namespace cldp
