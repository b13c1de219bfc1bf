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

#include "cldp/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include "cldp/errors.hpp"

namespace cldp {

std::string format_double(double value) {
  std::array<char, 32> buffer;
  const auto [end, ec] =
      std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), end);
}

bool parse_double(const std::string& text, double& value) {
  if (text.empty()) return false;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc{} && ptr == last && std::isfinite(value);
}

CsvWriter::CsvWriter(const std::string& path) : path_(path), out_(path) {
  if (!out_) {
    throw IoError("cannot open " + path + " for writing");
  }
}

CsvWriter::~CsvWriter() = default;

void CsvWriter::write_line(const std::string& line) {
  out_ << line << '\n';
  if (!out_) {
    throw IoError("write failed on " + path_);
  }
}

void CsvWriter::close() {
  out_.flush();
  if (!out_) {
    throw IoError("flush failed on " + path_);
  }
  out_.close();
}

}  // namespace cldp
