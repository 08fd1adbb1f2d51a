#include "laprank/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

#include "laprank/edge_list.hpp"

namespace laprank {

nlohmann::ordered_json to_json(const RunManifest& m) {
  nlohmann::ordered_json config{
      {"p", m.config.p},
      {"mu", m.config.mu},
      {"epsilon", m.config.eps},
      {"tol", m.config.tol},
      {"max_iter", m.config.max_iter},
      {"damping", m.config.damping},
  };
  return {
      {"command", m.command},
      {"method", m.method},
      {"inputs", m.inputs},
      {"config", std::move(config)},
      {"nodes", m.nodes},
      {"edges", m.edges},
      {"iterations", m.iterations},
      {"residual", m.residual},
      {"converged", m.converged},
      {"wall_time_seconds", m.wall_time_seconds},
  };
}

RunManifest manifest_from_json(const nlohmann::json& j) {
  RunManifest m;
  j.at("command").get_to(m.command);
  j.at("method").get_to(m.method);
  j.at("inputs").get_to(m.inputs);
  const auto& c = j.at("config");
  c.at("p").get_to(m.config.p);
  c.at("mu").get_to(m.config.mu);
  c.at("epsilon").get_to(m.config.eps);
  c.at("tol").get_to(m.config.tol);
  c.at("max_iter").get_to(m.config.max_iter);
  c.at("damping").get_to(m.config.damping);
  j.at("nodes").get_to(m.nodes);
  j.at("edges").get_to(m.edges);
  j.at("iterations").get_to(m.iterations);
  j.at("residual").get_to(m.residual);
  j.at("converged").get_to(m.converged);
  j.at("wall_time_seconds").get_to(m.wall_time_seconds);
  return m;
}

nlohmann::ordered_json rank_document(const RunManifest& manifest, std::span<const std::string> labels,
                                     const NodeFunction& scores, const RankedList& top) {
  auto score_rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < scores.size(); ++i) {
    score_rows.push_back({{"label", labels[i]}, {"score", scores[i]}});
  }
  auto top_rows = nlohmann::ordered_json::array();
  for (const auto& [label, score] : top) top_rows.push_back({{"label", label}, {"score", score}});
  return {{"manifest", to_json(manifest)}, {"scores", std::move(score_rows)}, {"top_k", std::move(top_rows)}};
}

void write_scores_tsv(std::ostream& out, std::span<const std::string> labels, const NodeFunction& scores) {
  out << "label\tscore\n";
  for (std::size_t i = 0; i < scores.size(); ++i) out << labels[i] << '\t' << format_double(scores[i]) << '\n';
}

std::string python_float_repr(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return std::signbit(x) ? "-0.0" : "0.0";

  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific);
  std::string sci(buf, end);  // e.g. "-3.826581258848819e-02"

  const auto e_pos = sci.find('e');
  const int exponent = std::atoi(sci.c_str() + e_pos + 1);
  std::string mantissa = sci.substr(0, e_pos);
  std::string sign;
  if (mantissa.front() == '-') {
    sign = "-";
    mantissa.erase(0, 1);
  }
  std::string digits;
  for (char c : mantissa) {
    if (c != '.') digits.push_back(c);
  }

  if (exponent < -4 || exponent >= 16) {
    std::string out = sign + digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    char exp_buf[16];
    std::snprintf(exp_buf, sizeof exp_buf, "e%c%02d", exponent < 0 ? '-' : '+', std::abs(exponent));
    return out + exp_buf;
  }
  if (exponent < 0) return sign + "0." + std::string(static_cast<std::size_t>(-exponent - 1), '0') + digits;
  const auto int_len = static_cast<std::size_t>(exponent) + 1;
  if (digits.size() <= int_len) return sign + digits + std::string(int_len - digits.size(), '0') + ".0";
  return sign + digits.substr(0, int_len) + "." + digits.substr(int_len);
}

namespace {

std::string python_str_repr(const std::string& s) {
  const bool use_double = s.find('\'') != std::string::npos && s.find('"') == std::string::npos;
  const char quote = use_double ? '"' : '\'';
  std::string out(1, quote);
  for (char c : s) {
    if (c == '\\' || c == quote) out.push_back('\\');
    out.push_back(c);
  }
  out.push_back(quote);
  return out;
}

}  // namespace

std::string python_list_repr(const RankedList& rows) {
  std::string out = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) out += ",\n ";
    out += "(" + python_str_repr(rows[i].first) + ", " + python_float_repr(rows[i].second) + ")";
  }
  return out + "]";
}

}  // namespace laprank
