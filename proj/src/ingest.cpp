#include "laprank/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>

#include "laprank/csv.hpp"

namespace laprank {

namespace {

constexpr std::size_t kMaxWarnings = 20;

std::string trim(const std::string& s) {
  const auto* ws = " \t\r\n";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::optional<std::size_t> column_index(const std::vector<std::string>& header, const std::string& name) {
  for (std::size_t k = 0; k < header.size(); ++k) {
    if (trim(header[k]) == name) return k;
  }
  return std::nullopt;
}

}  // namespace

FlightTable parse_flight_csv(std::istream& in, const FlightColumns& columns) {
  CsvReader reader(in);
  std::vector<std::string> header;
  if (!reader.next(header)) throw IngestError(IngestError::Kind::NoValidRows, "empty CSV: no header row");
  if (!header.empty() && header[0].starts_with("\xEF\xBB\xBF")) header[0].erase(0, 3);

  const auto origin_col = column_index(header, columns.origin);
  if (!origin_col) throw IngestError(IngestError::Kind::MissingColumn, "missing column '" + columns.origin + "'");
  const auto dest_col = column_index(header, columns.dest);
  if (!dest_col) throw IngestError(IngestError::Kind::MissingColumn, "missing column '" + columns.dest + "'");

  FlightTable table;
  auto warn = [&](std::size_t line, const std::string& reason) {
    ++table.dropped_malformed;
    if (table.warnings.size() < kMaxWarnings) table.warnings.push_back("line " + std::to_string(line) + ": " + reason);
  };

  std::vector<std::string> fields;
  while (reader.next(fields)) {
    if (fields.size() == 1 && trim(fields[0]).empty()) continue;  // blank line
    ++table.data_rows;
    if (reader.malformed()) {
      warn(reader.line(), "quoting error");
      continue;
    }
    if (fields.size() != header.size()) {
      warn(reader.line(), "expected " + std::to_string(header.size()) + " fields, got " +
                              std::to_string(fields.size()));
      continue;
    }
    FlightRecord record{trim(fields[*origin_col]), trim(fields[*dest_col])};
    if (record.origin_city.empty() || record.dest_city.empty()) {
      warn(reader.line(), "empty origin or destination");
      continue;
    }
    if (record.origin_city == record.dest_city) {
      ++table.dropped_selfloop;
      continue;
    }
    table.records.push_back(std::move(record));
  }

  if (table.records.empty()) {
    throw IngestError(IngestError::Kind::NoValidRows,
                      "no valid flight rows (" + std::to_string(table.data_rows) + " data rows read)");
  }
  return table;
}

FlightTable parse_flight_csv(const std::filesystem::path& path, const FlightColumns& columns) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError(IngestError::Kind::MissingFile, "cannot open '" + path.string() + "'");
  return parse_flight_csv(in, columns);
}

Graph aggregate_to_graph(std::span<const FlightRecord> records, bool weighted) {
  if (records.empty()) throw IngestError(IngestError::Kind::EmptyInput, "no flight records to aggregate");

  std::map<std::string, NodeId> ids;
  for (const auto& r : records) {
    ids.emplace(r.origin_city, 0);
    ids.emplace(r.dest_city, 0);
  }
  std::vector<std::string> labels;
  labels.reserve(ids.size());
  for (auto& [label, id] : ids) {
    id = labels.size();
    labels.push_back(label);
  }

  std::map<std::pair<NodeId, NodeId>, double> counts;
  for (const auto& r : records) {
    const NodeId a = ids.at(r.origin_city);
    const NodeId b = ids.at(r.dest_city);
    if (a == b) continue;
    counts[{std::min(a, b), std::max(a, b)}] += 1.0;
  }

  std::vector<Edge> edges;
  edges.reserve(counts.size());
  for (const auto& [pair, count] : counts) edges.push_back({pair.first, pair.second, weighted ? count : 1.0});
  return Graph(std::move(labels), std::move(edges));
}

}  // namespace laprank
