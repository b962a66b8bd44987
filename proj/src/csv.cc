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

#include "dpclustx/csv.h"

#include <string>

#include "dpclustx/error.h"

namespace dpclustx {

bool CsvReader::Next(std::vector<std::string>& fields) {
  fields.clear();
  // Skip blank lines.
  while (pos_ < text_.size() && (text_[pos_] == '\n' || text_[pos_] == '\r')) {
    if (text_[pos_] == '\n') ++line_;
    ++pos_;
  }
  if (pos_ >= text_.size()) return false;
  record_line_ = line_;

  std::string field;
  bool quoted = false;
  bool field_was_quoted = false;
  while (pos_ < text_.size()) {
    const char ch = text_[pos_];
    if (quoted) {
      if (ch == '"') {
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '"') {
          field.push_back('"');
          pos_ += 2;
          continue;
        }
        quoted = false;
        ++pos_;
        continue;
      }
      if (ch == '\n') ++line_;
      field.push_back(ch);
      ++pos_;
      continue;
    }
    if (ch == '"') {
      if (!field.empty() || field_was_quoted) {
        Fail(ErrorCode::kParseError,
             "unexpected quote at line " + std::to_string(line_));
      }
      quoted = true;
      field_was_quoted = true;
      ++pos_;
      continue;
    }
    if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
      field_was_quoted = false;
      ++pos_;
      continue;
    }
    if (ch == '\r' || ch == '\n') {
      if (ch == '\r' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '\n') {
        ++pos_;
      }
      ++pos_;
      ++line_;
      break;
    }
    if (field_was_quoted) {
      Fail(ErrorCode::kParseError,
           "text after closing quote at line " + std::to_string(line_));
    }
    field.push_back(ch);
    ++pos_;
  }
  if (quoted) {
    Fail(ErrorCode::kParseError, "unterminated quoted field starting at line " +
                                     std::to_string(record_line_));
  }
  fields.push_back(std::move(field));
  return true;
}

}  // namespace dpclustx
