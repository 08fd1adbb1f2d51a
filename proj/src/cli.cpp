#include "laprank/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "laprank/edge_list.hpp"
#include "laprank/graph.hpp"
#include "laprank/ingest.hpp"
#include "laprank/ranking.hpp"
#include "laprank/report.hpp"

namespace laprank::cli {

namespace {

using Clock = std::chrono::steady_clock;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void write_json(const std::string& path, const nlohmann::ordered_json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << doc.dump(2) << '\n';
}

struct IngestOptions {
  std::string csv;
  std::string output;
  std::string manifest;
  std::string origin_column;
  std::string dest_column;
  std::string key = "city";
  bool unweighted = false;
};

struct LineGraphOptions {
  std::string edges;
  std::string output;
  std::string map;
  std::string manifest;
};

struct RankOptions {
  std::string edges;
  std::string method;
  std::optional<double> p;
  double mu = 1.0;
  std::optional<double> tol;
  std::size_t max_iter = 10'000;
  double epsilon = Epsilon::kDefault;
  double damping = 0.85;
  std::size_t top_k = 10;
  std::string output;
  std::string scores;
  std::string prior_file;
  bool closed_form = false;
};

int cmd_ingest(const IngestOptions& o, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  FlightColumns columns = o.key == "code" ? FlightColumns::airport_codes() : FlightColumns{};
  if (!o.origin_column.empty()) columns.origin = o.origin_column;
  if (!o.dest_column.empty()) columns.dest = o.dest_column;

  const FlightTable table = parse_flight_csv(o.csv, columns);
  for (const auto& w : table.warnings) err << "warning: " << w << '\n';
  const Graph g = aggregate_to_graph(table.records, !o.unweighted);
  write_edge_list(o.output, g);

  RunManifest m;
  m.command = "ingest";
  m.inputs = {o.csv};
  m.nodes = g.node_count();
  m.edges = g.edge_count();
  m.wall_time_seconds = seconds_since(start);
  write_json(o.manifest.empty() ? o.output + ".manifest.json" : o.manifest, to_json(m));

  out << "nodes=" << g.node_count() << " edges=" << g.edge_count() << '\n';
  out << "rows=" << table.data_rows << " flights=" << table.records.size()
      << " dropped_malformed=" << table.dropped_malformed << " dropped_selfloop=" << table.dropped_selfloop
      << '\n';
  return kOk;
}

int cmd_line_graph(const LineGraphOptions& o, std::ostream& out) {
  const auto start = Clock::now();
  const Graph g = read_edge_list(o.edges);
  if (g.edge_count() == 0) throw UsageError("'" + o.edges + "' has no edges");
  const auto [lg, map] = line_graph(g);
  write_edge_list(o.output, lg);
  write_line_graph_map(o.map, g, map);

  RunManifest m;
  m.command = "line-graph";
  m.inputs = {o.edges};
  m.nodes = lg.node_count();
  m.edges = lg.edge_count();
  m.wall_time_seconds = seconds_since(start);
  write_json(o.manifest.empty() ? o.output + ".manifest.json" : o.manifest, to_json(m));

  out << "nodes=" << lg.node_count() << " edges=" << lg.edge_count() << '\n';
  return kOk;
}

NodeFunction read_prior(const std::string& path, const Graph& g) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open prior file '" + path + "'");
  NodeFunction y(g.node_count(), 0.0);
  std::vector<bool> seen(g.node_count(), false);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.rfind('\t');
    if (tab == std::string::npos) throw UsageError(path + ":" + std::to_string(line_no) + ": expected label<TAB>value");
    const auto id = g.find(line.substr(0, tab));
    if (!id) {
      if (line_no == 1) continue;  // header row
      throw UsageError(path + ":" + std::to_string(line_no) + ": unknown label '" + line.substr(0, tab) + "'");
    }
    try {
      y[*id] = std::stod(line.substr(tab + 1));
    } catch (const std::exception&) {
      throw UsageError(path + ":" + std::to_string(line_no) + ": bad value");
    }
    seen[*id] = true;
  }
  for (NodeId i = 0; i < g.node_count(); ++i) {
    if (!seen[i]) throw UsageError("prior file has no value for '" + g.label(i) + "'");
  }
  return y;
}

int cmd_rank(const RankOptions& o, std::ostream& out) {
  const auto start = Clock::now();
  SolverConfig cfg;
  cfg.mu = o.mu;
  cfg.eps = o.epsilon;
  cfg.max_iter = o.max_iter;
  cfg.damping = o.damping;
  if (o.method == "plaplacian") {
    if (!o.p) throw UsageError("--method plaplacian requires --p");
    cfg.p = *o.p;
    cfg.tol = o.tol.value_or(1e-9);
    if (o.closed_form && cfg.p != 2.0) throw UsageError("--closed-form requires --p 2");
  } else {
    if (o.closed_form || !o.prior_file.empty()) throw UsageError("--closed-form and --prior-file apply to plaplacian");
    cfg.tol = o.tol.value_or(1e-12);
  }
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const Graph g = read_edge_list(o.edges);
  if (g.node_count() == 0) throw UsageError("'" + o.edges + "' has no nodes");

  RankResult result;
  if (o.method == "pagerank") {
    result = pagerank(g, cfg);
  } else {
    const NodeFunction y = o.prior_file.empty() ? uniform_prior(g.node_count()) : read_prior(o.prior_file, g);
    result = o.closed_form ? solve_p2_closed_form(g, y, cfg.mu, cfg.tol, cfg.max_iter)
                           : solve_p_iterative(g, y, cfg);
  }

  const auto top = top_k(result, g.labels(), o.top_k);
  RunManifest m;
  m.command = "rank";
  m.method = o.method;
  m.inputs = {o.edges};
  if (!o.prior_file.empty()) m.inputs.push_back(o.prior_file);
  m.config = cfg;
  m.nodes = g.node_count();
  m.edges = g.edge_count();
  m.iterations = result.iterations;
  m.residual = result.residual_inf_norm;
  m.converged = result.converged;
  m.wall_time_seconds = seconds_since(start);

  write_json(o.output, rank_document(m, g.labels(), result.scores, top));
  if (!o.scores.empty()) {
    std::ofstream tsv(o.scores, std::ios::binary);
    if (!tsv) throw UsageError("cannot write '" + o.scores + "'");
    write_scores_tsv(tsv, g.labels(), result.scores);
  }

  out << "method=" << o.method << " nodes=" << g.node_count() << " edges=" << g.edge_count()
      << " iterations=" << result.iterations << " residual=" << format_double(result.residual_inf_norm)
      << " converged=" << (result.converged ? "true" : "false") << '\n';
  out << python_list_repr(top) << '\n';
  return result.converged ? kOk : kNotConverged;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge p-Laplacian centrality via line graphs", "laprank"};
  app.require_subcommand(1);

  IngestOptions ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "Aggregate a flight CSV into a weighted edge list");
  ingest_cmd->add_option("csv", ingest.csv, "On-time performance CSV")->required();
  ingest_cmd->add_option("-o,--output", ingest.output, "Edge-list file to write")->required();
  ingest_cmd->add_option("--manifest", ingest.manifest, "Manifest path (default: <output>.manifest.json)");
  ingest_cmd->add_option("--key", ingest.key, "Node key: city names or airport codes")
      ->check(CLI::IsMember({"city", "code"}));
  ingest_cmd->add_option("--origin-column", ingest.origin_column, "Origin column name");
  ingest_cmd->add_option("--dest-column", ingest.dest_column, "Destination column name");
  ingest_cmd->add_flag("--unweighted", ingest.unweighted, "Set every edge weight to 1");

  LineGraphOptions lg;
  auto* lg_cmd = app.add_subcommand("line-graph", "Convert an edge list to its line graph");
  lg_cmd->add_option("edges", lg.edges, "Edge-list file")->required();
  lg_cmd->add_option("-o,--output", lg.output, "Line-graph edge list to write")->required();
  lg_cmd->add_option("--map", lg.map, "Mapping TSV to write")->required();
  lg_cmd->add_option("--manifest", lg.manifest, "Manifest path (default: <output>.manifest.json)");

  RankOptions rank;
  auto* rank_cmd = app.add_subcommand("rank", "Rank the nodes of an edge list");
  rank_cmd->add_option("edges", rank.edges, "Edge-list file")->required();
  rank_cmd->add_option("--method", rank.method, "pagerank or plaplacian")
      ->required()
      ->check(CLI::IsMember({"pagerank", "plaplacian"}));
  rank_cmd->add_option("--p", rank.p, "p-Laplacian exponent (>= 1)");
  rank_cmd->add_option("--mu", rank.mu, "Fitting weight (> 0)")->capture_default_str();
  rank_cmd->add_option("--tol", rank.tol, "Stopping tolerance (default 1e-9, pagerank 1e-12)");
  rank_cmd->add_option("--max-iter", rank.max_iter, "Iteration cap")->capture_default_str();
  rank_cmd->add_option("--epsilon", rank.epsilon, "Local-variation smoothing")->capture_default_str();
  rank_cmd->add_option("--damping", rank.damping, "PageRank damping")->capture_default_str();
  rank_cmd->add_option("--top-k", rank.top_k, "Rows in the top-k table")->capture_default_str();
  rank_cmd->add_option("--output", rank.output, "Structured JSON result")->required();
  rank_cmd->add_option("--scores", rank.scores, "Optional label<TAB>score TSV");
  rank_cmd->add_option("--prior-file", rank.prior_file, "label<TAB>value prior instead of uniform");
  rank_cmd->add_flag("--closed-form", rank.closed_form, "Solve p = 2 with the linear closed form");

  std::vector<std::string> argv_storage{"laprank"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (ingest_cmd->parsed()) return cmd_ingest(ingest, out, err);
    if (lg_cmd->parsed()) return cmd_line_graph(lg, out);
    return cmd_rank(rank, out);
  } catch (const SolverError& e) {
    err << "error: " << e.what() << '\n';
    return kNotConverged;
  } catch (const std::exception& e) {
    // Ingest, format, graph and usage errors are all problems with the
    // caller's input.
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace laprank::cli
