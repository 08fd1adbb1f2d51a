#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "laprank/graph.hpp"

namespace laprank {

/// One flight between two cities (or airports, depending on the columns).
struct FlightRecord {
  std::string origin_city;
  std::string dest_city;

  bool operator==(const FlightRecord&) const = default;
};

/// Column names for the endpoints; defaults key on BTS city names.
struct FlightColumns {
  std::string origin = "ORIGIN_CITY_NAME";
  std::string dest = "DEST_CITY_NAME";

  /// ORIGIN / DEST airport-code columns.
  static FlightColumns airport_codes() { return {"ORIGIN", "DEST"}; }
};

/// Parsed flights with row accounting:
/// data_rows == records.size() + dropped_malformed + dropped_selfloop.
struct FlightTable {
  std::vector<FlightRecord> records;
  std::size_t data_rows = 0;
  std::size_t dropped_malformed = 0;
  std::size_t dropped_selfloop = 0;
  /// First few malformed-row messages, "line N: reason".
  std::vector<std::string> warnings;
};

class IngestError : public std::runtime_error {
 public:
  enum class Kind { MissingFile, MissingColumn, NoValidRows, EmptyInput };

  IngestError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Reads a header-first CSV and extracts one record per data row. Labels
/// are trimmed of surrounding whitespace. Rows with quoting errors, a field
/// count different from the header, or an empty endpoint count as
/// malformed; rows whose endpoints coincide count as self-loops. Both are
/// dropped.
FlightTable parse_flight_csv(std::istream& in, const FlightColumns& columns = {});
FlightTable parse_flight_csv(const std::filesystem::path& path, const FlightColumns& columns = {});

/// One node per distinct label (sorted), one edge per unordered pair with
/// at least one flight. Weight is the flight count over both directions,
/// or 1 when `weighted` is false. The result does not depend on record
/// order.
Graph aggregate_to_graph(std::span<const FlightRecord> records, bool weighted);

}  // namespace laprank
