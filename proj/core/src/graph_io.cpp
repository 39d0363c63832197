#include "drunkcop/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

namespace drunkcop {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  throw GraphError(GraphErrorKind::kParse,
                   "line " + std::to_string(line) + ": " + msg);
}

// Splits on whitespace and parses every token as an integer.
std::vector<long long> ints(std::string_view s, int line) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i >= s.size()) break;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + j, value);
    if (ec != std::errc() || ptr != s.data() + j) {
      parse_fail(line, "expected integer, got '" + std::string(s.substr(i, j - i)) + "'");
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  int n = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    if (n < 0) {
      if (line.substr(0, 2) != "n " && line.substr(0, 2) != "n\t") {
        parse_fail(line_no, "missing header line 'n <count>'");
      }
      auto v = ints(line.substr(2), line_no);
      if (v.size() != 1 || v[0] < 1) parse_fail(line_no, "bad vertex count");
      n = static_cast<int>(v[0]);
      continue;
    }
    auto v = ints(line, line_no);
    if (v.size() != 2) parse_fail(line_no, "expected 'u v'");
    edges.push_back({static_cast<Vertex>(v[0]), static_cast<Vertex>(v[1])});
  }
  if (n < 0) parse_fail(line_no, "missing header line 'n <count>'");
  return Graph::build(n, edges);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.order() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Graph parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
    const int n = doc.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw GraphError(GraphErrorKind::kParse, "edge entries must be [u, v]");
      }
      edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
    }
    return Graph::build(n, edges);
  } catch (const nlohmann::json::exception& ex) {
    throw GraphError(GraphErrorKind::kParse, ex.what());
  }
}

std::string format_graph_json(const Graph& g) {
  nlohmann::json doc;
  doc["n"] = g.order();
  auto& edges = doc["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return doc.dump() + "\n";
}

Graph read_graph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  return path.extension() == ".json" ? parse_graph_json(text)
                                     : parse_edge_list(text);
}

void write_graph(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << (path.extension() == ".json" ? format_graph_json(g)
                                      : format_edge_list(g));
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace drunkcop
