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

#include "cldp/metrics.hpp"

#include <cmath>
#include <string>

#include "cldp/errors.hpp"

namespace cldp {
namespace {

// Smallest log10 for which the linear probability is still reported.
constexpr double kUnderflowLog10 = -300.0;

}  // namespace

double mse(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw LengthMismatch("mse inputs have sizes " + std::to_string(a.size()) +
                         " and " + std::to_string(b.size()));
  }
  if (a.empty()) {
    throw EmptyInput("mse of empty sequences is undefined");
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double d = a[j] - b[j];
    sum += d * d;
  }
  return sum / static_cast<double>(a.size());
}

double epsilon_proxy(int tossing_space, int window_size, int num_users,
                     double amplitude, double epsilon_constant) {
  if (tossing_space < 1 || window_size < 1 || num_users < 1) {
    throw DomainError("epsilon_proxy requires positive k, l, u");
  }
  if (!(amplitude > 0.0) || !(epsilon_constant > 0.0)) {
    throw DomainError("epsilon_proxy requires positive amplitude and constant");
  }
  return epsilon_constant *
         (static_cast<double>(window_size) * static_cast<double>(num_users)) /
         (amplitude * static_cast<double>(tossing_space));
}

double break_probability_log10(int tossing_space, int window_size,
                               int num_users) {
  if (tossing_space < 1 || window_size < 1 || num_users < 1) {
    throw DomainError("break_probability requires positive k, l, u");
  }
  const double tosses =
      static_cast<double>(window_size) * static_cast<double>(num_users);
  return -tosses * std::log10(static_cast<double>(tossing_space));
}

PrivacyReport privacy_report(int tossing_space, int window_size, int num_users,
                             double amplitude, double epsilon_constant) {
  PrivacyReport report;
  report.tossing_space = tossing_space;
  report.window_size = window_size;
  report.num_users = num_users;
  report.amplitude = amplitude;
  report.epsilon_constant = epsilon_constant;
  report.epsilon_proxy = epsilon_proxy(tossing_space, window_size, num_users,
                                       amplitude, epsilon_constant);
  report.break_probability_log10 =
      break_probability_log10(tossing_space, window_size, num_users);
  if (report.break_probability_log10 >= kUnderflowLog10) {
    report.break_probability = std::pow(10.0, report.break_probability_log10);
  }
  return report;
}

double aggregate_error(const AggregateReport& report,
                       std::span<const double> true_window_totals) {
  if (true_window_totals.size() != report.per_window_total.size()) {
    throw ShapeMismatch("true totals have " +
                        std::to_string(true_window_totals.size()) +
                        " windows, report has " +
                        std::to_string(report.per_window_total.size()));
  }
  if (report.per_window_total.empty()) {
    throw EmptyInput("report contains no complete window");
  }
  const double window = static_cast<double>(report.window_size);
  double sum = 0.0;
  for (std::size_t w = 0; w < true_window_totals.size(); ++w) {
    const double d =
        (report.per_window_total[w] - true_window_totals[w]) / window;
    sum += d * d;
  }
  return sum / static_cast<double>(true_window_totals.size());
}

double aggregate_error(const AggregateReport& report) {
  if (report.residual_noise_per_window.empty()) {
    throw DomainError(
        "report carries no residuals; aggregate with ground truth first");
  }
  const double window = static_cast<double>(report.window_size);
  double sum = 0.0;
  for (const double r : report.residual_noise_per_window) {
    const double d = r / window;
    sum += d * d;
  }
  return sum / static_cast<double>(report.residual_noise_per_window.size());
}

}  // namespace cldp
