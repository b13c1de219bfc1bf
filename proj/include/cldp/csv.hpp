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

#pragma once

#include <fstream>
#include <string>

namespace cldp {

// Shortest decimal representation that round-trips the exact double
// (std::to_chars). Locale-independent, so output files are byte-stable.
std::string format_double(double value);

// Parses a double produced by format_double (or any general-format float).
// Returns false when the string is not a complete, finite number.
bool parse_double(const std::string& text, double& value);

// Minimal line-oriented CSV writer used by the exporters and the CLI.
// Rows are assembled by the caller; this only owns the stream and fails
// loudly (IoError) when the file cannot be written.
class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path);
  ~CsvWriter();

  void write_line(const std::string& line);
  void close();  // flushes and verifies the stream

 private:
  std::string path_;
  std::ofstream out_;
};

}  // namespace cldp
