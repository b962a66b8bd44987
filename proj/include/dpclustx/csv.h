//
// Copyright 2026 The DPClustX Authors
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
//

#ifndef DPCLUSTX_CSV_H_
#define DPCLUSTX_CSV_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace dpclustx {

// Minimal RFC-4180 record reader: comma separated, double-quote escaping,
// CRLF or LF line endings, quoted fields may span lines. The input must
// outlive the reader.
class CsvReader {
 public:
  explicit CsvReader(std::string_view text) : text_(text) {}

  // Reads the next record into `fields`. Returns false at end of input.
  // Blank lines are skipped.
  bool Next(std::vector<std::string>& fields);

  // 1-based line number where the last returned record started.
  std::size_t record_line() const { return record_line_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t record_line_ = 0;
};

}  // namespace dpclustx

#endif  // DPCLUSTX_CSV_H_
