#include "laprank/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

namespace laprank {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find('\t', start);
    if (pos == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  return out;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

Graph read_edge_list(std::istream& in) {
  std::vector<std::string> declared;
  std::vector<EdgeRecord> records;
  std::vector<std::size_t> record_lines;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;

    auto fields = split_tabs(line);
    if (fields.size() == 1) {
      declared.push_back(std::move(fields[0]));
      continue;
    }
    if (fields.size() != 3) {
      throw FormatError("expected label_a<TAB>label_b<TAB>weight, got " + std::to_string(fields.size()) +
                            " fields",
                        line_no);
    }
    double w = 0.0;
    const auto& text = fields[2];
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), w);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw FormatError("bad weight '" + text + "'", line_no);
    }
    records.push_back({std::move(fields[0]), std::move(fields[1]), w});
    record_lines.push_back(line_no);
  }

  try {
    return build_graph(declared, records);
  } catch (const GraphError& e) {
    if (e.record()) throw FormatError(e.what(), record_lines[*e.record()]);
    throw;
  }
}

Graph read_edge_list(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# nodes=" << g.node_count() << " edges=" << g.edge_count() << '\n';
  for (const auto& label : g.labels()) out << label << '\n';
  for (const Edge& e : g.edges()) {
    out << g.label(e.a) << '\t' << g.label(e.b) << '\t' << format_double(e.weight) << '\n';
  }
}

void write_edge_list(const std::filesystem::path& path, const Graph& g) {
  auto out = open_out(path);
  write_edge_list(out, g);
}

void write_line_graph_map(std::ostream& out, const Graph& original, const LineGraphMap& map) {
  for (std::size_t k = 0; k < map.entries.size(); ++k) {
    const Edge& e = map.entries[k];
    out << k << '\t' << original.label(e.a) << '\t' << original.label(e.b) << '\n';
  }
}

void write_line_graph_map(const std::filesystem::path& path, const Graph& original, const LineGraphMap& map) {
  auto out = open_out(path);
  write_line_graph_map(out, original, map);
}

}  // namespace laprank
