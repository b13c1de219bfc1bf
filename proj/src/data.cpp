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

#include "cldp/data.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <string>
#include <string_view>
#include <utility>

#include "cldp/csv.hpp"
#include "cldp/errors.hpp"
#include "cldp/rng.hpp"

namespace cldp {
namespace {

std::vector<std::string> split_fields(std::string_view line, char delimiter) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(delimiter, start);
    if (pos == std::string_view::npos) {
      fields.emplace_back(line.substr(start));
      break;
    }
    fields.emplace_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

void SynthSpec::validate() const {
  if (num_users < 1) {
    throw DomainError("synthetic spec needs num_users >= 1");
  }
  if (samples_per_user < 1) {
    throw DomainError("synthetic spec needs samples_per_user >= 1");
  }
  if (!std::isfinite(level) || !std::isfinite(amplitude)) {
    throw DomainError("synthetic level/amplitude must be finite");
  }
  if (signal == SynthSignal::kSinusoid && !(period > 0.0)) {
    throw DomainError("sinusoid period must be positive");
  }
  if (std::isnan(step_std) || step_std < 0.0) {
    throw DomainError("random-walk step_std must be >= 0");
  }
}

RawDataset load_power_csv(const std::string& path,
                          const std::string& column_name) {
  std::ifstream in(path);
  if (!in) {
    throw FileNotFound("cannot open " + path);
  }

  std::string line;
  if (!std::getline(in, line)) {
    throw EmptyInput("file has no header row: " + path);
  }
  strip_cr(line);
  const auto header = split_fields(line, ';');
  std::size_t column = header.size();
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == column_name) {
      column = i;
      break;
    }
  }
  if (column == header.size()) {
    throw MissingColumn("column '" + column_name + "' not in header of " +
                        path);
  }

  RawDataset data;
  data.column_name = column_name;
  data.source = path;

  long line_number = 1;
  bool saw_row = false;
  while (std::getline(in, line)) {
    ++line_number;
    strip_cr(line);
    if (line.empty()) continue;
    saw_row = true;

    const auto fields = split_fields(line, ';');
    if (fields.size() <= column) {
      throw ParseError("row has " + std::to_string(fields.size()) +
                           " fields, column '" + column_name +
                           "' needs at least " + std::to_string(column + 1),
                       line_number);
    }
    const std::string& cell = fields[column];
    if (cell == "?" || cell.empty()) {
      ++data.rows_skipped;
      continue;
    }
    double value = 0.0;
    if (!parse_double(cell, value)) {
      throw ParseError("cannot parse '" + cell + "' as a number",
                       line_number);
    }
    data.values.push_back(value);
  }

  if (!saw_row) {
    throw EmptyInput("no data rows after header in " + path);
  }
  return data;
}

SplitResult split_users(const RawDataset& data, int num_users) {
  if (num_users < 1) {
    throw DomainError("num_users must be >= 1");
  }
  const std::size_t n = data.values.size();
  if (static_cast<std::size_t>(num_users) > n) {
    throw DomainError("cannot split " + std::to_string(n) + " samples across " +
                      std::to_string(num_users) + " users");
  }
  const std::size_t segment = n / static_cast<std::size_t>(num_users);

  SplitResult result;
  result.dropped_samples =
      static_cast<long long>(n - segment * static_cast<std::size_t>(num_users));
  result.users.reserve(num_users);
  for (int i = 0; i < num_users; ++i) {
    UserSeries series;
    series.user_index = i + 1;
    const auto begin = data.values.begin() +
                       static_cast<std::ptrdiff_t>(segment * static_cast<std::size_t>(i));
    series.samples.assign(begin, begin + static_cast<std::ptrdiff_t>(segment));
    result.users.push_back(std::move(series));
  }
  return result;
}

std::vector<UserSeries> synth_series(const SynthSpec& spec) {
  spec.validate();
  std::vector<UserSeries> users;
  users.reserve(spec.num_users);
  for (int i = 1; i <= spec.num_users; ++i) {
    Rng rng(derive_seed(spec.seed, static_cast<std::uint64_t>(i)));
    UserSeries series;
    series.user_index = i;
    series.samples.resize(spec.samples_per_user);
    switch (spec.signal) {
      case SynthSignal::kConstant:
        for (auto& sample : series.samples) sample = spec.level;
        break;
      case SynthSignal::kSinusoid:
        for (int t = 0; t < spec.samples_per_user; ++t) {
          series.samples[t] =
              spec.level + spec.amplitude * std::sin(2.0 * std::numbers::pi *
                                                     static_cast<double>(t) /
                                                     spec.period);
        }
        break;
      case SynthSignal::kRandomWalk: {
        double x = spec.level;
        series.samples[0] = x;
        for (int t = 1; t < spec.samples_per_user; ++t) {
          x += spec.step_std * rng.next_normal();
          series.samples[t] = x;
        }
        break;
      }
    }
    users.push_back(std::move(series));
  }
  return users;
}

void export_csv(const RawDataset& data, const std::string& path) {
  CsvWriter out(path);
  out.write_line(data.column_name);
  for (const double value : data.values) {
    out.write_line(format_double(value));
  }
  out.close();
}

RawDataset import_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw FileNotFound("cannot open " + path);
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw EmptyInput("file has no header row: " + path);
  }
  strip_cr(line);

  RawDataset data;
  data.column_name = line;
  data.source = path;

  long line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    strip_cr(line);
    if (line.empty()) continue;
    double value = 0.0;
    if (!parse_double(line, value)) {
      throw ParseError("cannot parse '" + line + "' as a number", line_number);
    }
    data.values.push_back(value);
  }
  if (data.values.empty()) {
    throw EmptyInput("no data rows after header in " + path);
  }
  return data;
}

}  // namespace cldp
