#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

namespace laprank {

/// Streaming RFC-4180 reader: comma separated, double-quoted fields may
/// contain commas, doubled quotes and line breaks. CRLF and LF both end a
/// record.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(in) {}

  /// Reads the next record into `fields`. Returns false at end of input.
  bool next(std::vector<std::string>& fields);

  /// True if the record just read had a quoting error (stray text after a
  /// closing quote, or a quote left open at end of input).
  bool malformed() const noexcept { return malformed_; }

  /// 1-based physical line on which the last record started.
  std::size_t line() const noexcept { return record_line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 1;
  std::size_t record_line_ = 0;
  bool malformed_ = false;
};

}  // namespace laprank
