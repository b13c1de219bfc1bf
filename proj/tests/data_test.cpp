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

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <doctest.h>

#include "cldp/errors.hpp"
#include "cldp/rng.hpp"

using namespace cldp;

namespace {

const char* kHeader =
    "Date;Time;Global_active_power;Global_reactive_power;Voltage;"
    "Global_intensity;Sub_metering_1;Sub_metering_2;Sub_metering_3";

// Scratch file that removes itself.
class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path_ = (std::filesystem::temp_directory_path() /
             ("cldp_data_test_" + std::to_string(++counter) + "_" +
              std::to_string(::getpid()) + ".csv"))
                .string();
    std::ofstream out(path_);
    out << contents;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace

TEST_CASE("load_power_csv reads the requested column") {
  TempFile file(std::string(kHeader) + "\n" +
                "16/12/2006;17:24:00;4.216;0.418;234.840;18.400;0.000;1.000;"
                "17.000\n" +
                "16/12/2006;17:25:00;5.360;0.436;233.630;23.000;0.000;1.000;"
                "16.000\n");
  const auto data = load_power_csv(file.path(), "Global_active_power");
  REQUIRE(data.values.size() == 2);
  CHECK(data.values[0] == 4.216);
  CHECK(data.values[1] == 5.360);
  CHECK(data.rows_skipped == 0);
  CHECK(data.column_name == "Global_active_power");

  const auto voltage = load_power_csv(file.path(), "Voltage");
  CHECK(voltage.values[0] == 234.840);
}

TEST_CASE("missing markers are skipped and counted") {
  TempFile file(std::string(kHeader) + "\n" +
                "16/12/2006;17:24:00;4.216;0.418;234.840;18.400;0.000;1.000;"
                "17.000\n" +
                "16/12/2006;17:25:00;?;?;?;?;?;?;?\n" +
                "16/12/2006;17:26:00;2.198;0.200;240.000;9.000;0.000;0.000;"
                "0.000\n");
  const auto data = load_power_csv(file.path(), "Global_active_power");
  CHECK(data.values.size() == 2);
  CHECK(data.rows_skipped == 1);
}

TEST_CASE("ingestion error paths") {
  CHECK_THROWS_AS(load_power_csv("/nonexistent/file.csv", "x"), FileNotFound);

  TempFile header_only(std::string(kHeader) + "\n");
  CHECK_THROWS_AS(load_power_csv(header_only.path(), "Global_active_power"),
                  EmptyInput);

  TempFile wrong_column(std::string(kHeader) + "\n16/12/2006;17:24:00;1;1;1;1;1;1;1\n");
  CHECK_THROWS_AS(load_power_csv(wrong_column.path(), "No_such_column"),
                  MissingColumn);

  TempFile bad_number(std::string(kHeader) +
                      "\n16/12/2006;17:24:00;4.216;0.418;234.840;18.400;0.000;"
                      "1.000;17.000\n16/12/2006;17:25:00;4x2;0;0;0;0;0;0\n");
  try {
    load_power_csv(bad_number.path(), "Global_active_power");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }

  TempFile short_row(std::string(kHeader) + "\n16/12/2006;17:24:00\n");
  CHECK_THROWS_AS(load_power_csv(short_row.path(), "Global_active_power"),
                  ParseError);
}

TEST_CASE("split_users produces contiguous equal segments") {
  RawDataset data;
  data.column_name = "x";
  for (int i = 0; i < 8; ++i) data.values.push_back(i);

  auto split = split_users(data, 4);
  REQUIRE(split.users.size() == 4);
  CHECK(split.dropped_samples == 0);
  for (int i = 0; i < 4; ++i) {
    CHECK(split.users[i].user_index == i + 1);
    CHECK(split.users[i].samples ==
          std::vector<double>{2.0 * i, 2.0 * i + 1});
  }

  data.values.push_back(8);
  data.values.push_back(9);
  split = split_users(data, 4);
  CHECK(split.users[0].samples.size() == 2);
  CHECK(split.dropped_samples == 2);

  // identity segmentation
  split = split_users(data, 1);
  CHECK(split.users.size() == 1);
  CHECK(split.users[0].samples == data.values);
  CHECK(split.dropped_samples == 0);

  CHECK_THROWS_AS(split_users(data, 11), DomainError);
  CHECK_THROWS_AS(split_users(data, 0), DomainError);
}

TEST_CASE("segmentation preserves a prefix of the source") {
  RawDataset data;
  Rng rng(8);
  for (int i = 0; i < 103; ++i) data.values.push_back(rng.next_double());
  const auto split = split_users(data, 5);
  std::vector<double> rejoined;
  for (const auto& user : split.users) {
    rejoined.insert(rejoined.end(), user.samples.begin(), user.samples.end());
  }
  REQUIRE(rejoined.size() == 100);
  for (std::size_t i = 0; i < rejoined.size(); ++i) {
    CHECK(rejoined[i] == data.values[i]);
  }
}

TEST_CASE("synthetic generator") {
  SynthSpec spec;
  spec.num_users = 2;
  spec.samples_per_user = 4;
  spec.signal = SynthSignal::kConstant;
  spec.level = 5.0;
  auto users = synth_series(spec);
  REQUIRE(users.size() == 2);
  for (const auto& u : users) {
    CHECK(u.samples == std::vector<double>{5.0, 5.0, 5.0, 5.0});
  }

  // sinusoid with zero amplitude degenerates to the level
  spec.signal = SynthSignal::kSinusoid;
  spec.amplitude = 0.0;
  users = synth_series(spec);
  CHECK(users[0].samples == std::vector<double>{5.0, 5.0, 5.0, 5.0});

  // random walks are reproducible and differ between users
  spec.signal = SynthSignal::kRandomWalk;
  spec.samples_per_user = 50;
  spec.step_std = 0.3;
  spec.seed = 9;
  const auto once = synth_series(spec);
  const auto twice = synth_series(spec);
  REQUIRE(once.size() == 2);
  CHECK(once[0].samples == twice[0].samples);
  CHECK(once[1].samples == twice[1].samples);
  CHECK(once[0].samples != once[1].samples);
  CHECK(once[0].samples[0] == 5.0);

  spec.samples_per_user = 0;
  CHECK_THROWS_AS(synth_series(spec), DomainError);
  spec.samples_per_user = 10;
  spec.step_std = -1.0;
  CHECK_THROWS_AS(synth_series(spec), DomainError);
}

TEST_CASE("export/import round-trips values bit-identically") {
  RawDataset data;
  data.column_name = "Global_active_power";
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    data.values.push_back(10.0 * rng.next_double() - 5.0);
  }
  // values that stress the formatter
  data.values.push_back(0.0);
  data.values.push_back(1e-300);
  data.values.push_back(123456789.123456789);
  data.values.push_back(0.1);

  TempFile file("");
  export_csv(data, file.path());
  const auto loaded = import_csv(file.path());
  CHECK(loaded.column_name == data.column_name);
  REQUIRE(loaded.values.size() == data.values.size());
  for (std::size_t i = 0; i < data.values.size(); ++i) {
    CHECK(loaded.values[i] == data.values[i]);
  }
}
