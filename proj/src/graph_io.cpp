#include "fracdom/graph_io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace fracdom {

namespace {

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
      out.push_back("");
      continue;
    }
    auto end = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(begin, end - begin + 1));
  }
  return out;
}

bool looks_like_edge_list(const std::vector<std::string>& lines) {
  bool any = false;
  for (const auto& line : lines) {
    if (line.empty()) continue;
    any = true;
    for (char c : line)
      if (!std::isdigit(static_cast<unsigned char>(c)) && c != ' ' && c != '\t' && c != 'n')
        return false;
  }
  return any;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
  std::vector<std::pair<int, int>> edges;
  std::optional<int> n;
  int lineno = 0;
  for (const auto& line : data_lines(text)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream in(line);
    std::string a, b, extra;
    if (!(in >> a >> b) || (in >> extra))
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": expected 'u v' or 'n N', got '" + line + "'");
    auto as_int = [&](const std::string& tok) {
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || value < 0)
        throw std::invalid_argument("line " + std::to_string(lineno) + ": bad number '" +
                                    tok + "'");
      return value;
    };
    if (a == "n") {
      if (n || !edges.empty())
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": 'n N' header must come first and appear once");
      n = as_int(b);
      continue;
    }
    edges.emplace_back(as_int(a), as_int(b));
  }
  if (!n && edges.empty()) throw std::invalid_argument("no graph data in input");
  return from_edge_list(edges, n);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  auto edges = g.edges();
  int implied = 0;
  for (auto [u, v] : edges) implied = std::max(implied, v + 1);
  if (implied != g.n) out << "n " << g.n << "\n";
  for (auto [u, v] : edges) out << u << " " << v << "\n";
  return out.str();
}

Graph graph6_decode(const std::string& line) {
  auto fail = [&](const std::string& why) -> void {
    throw std::invalid_argument("not a graph6 line (" + why + "): '" + line + "'");
  };
  for (char c : line)
    if (c < 63 || c > 126) fail("byte out of range");
  std::size_t pos = 0;
  long n = 0;
  if (line.empty()) fail("empty");
  if (line[0] == 126) {
    if (line.size() >= 2 && line[1] == 126) fail("vertex count beyond 64");
    if (line.size() < 4) fail("truncated vertex count");
    n = ((long)(line[1] - 63) << 12) | ((long)(line[2] - 63) << 6) | (long)(line[3] - 63);
    pos = 4;
  } else {
    n = line[0] - 63;
    pos = 1;
  }
  if (n > kMaxVertices) fail("vertex count beyond 64");
  long nbits = n * (n - 1) / 2;
  long nbytes = (nbits + 5) / 6;
  if ((long)line.size() - (long)pos != nbytes) fail("wrong length");
  Graph g;
  g.n = static_cast<int>(n);
  g.adj.assign(g.n, {});
  long bit = 0;
  for (int v = 1; v < g.n; ++v)
    for (int u = 0; u < v; ++u, ++bit) {
      int byte = line[pos + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) {
        g.adj[u].add(v);
        g.adj[v].add(u);
      }
    }
  for (long b = bit; b < nbytes * 6; ++b) {
    int byte = line[pos + b / 6] - 63;
    if ((byte >> (5 - b % 6)) & 1) fail("padding bits set");
  }
  return g;
}

std::string graph6_encode(const Graph& g) {
  std::string out;
  if (g.n <= 62) {
    out += static_cast<char>(g.n + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(((g.n >> 12) & 63) + 63);
    out += static_cast<char>(((g.n >> 6) & 63) + 63);
    out += static_cast<char>((g.n & 63) + 63);
  }
  long nbits = (long)g.n * (g.n - 1) / 2;
  long nbytes = (nbits + 5) / 6;
  std::string body(nbytes, 0);
  long bit = 0;
  for (int v = 1; v < g.n; ++v)
    for (int u = 0; u < v; ++u, ++bit)
      if (g.has_edge(u, v)) body[bit / 6] |= static_cast<char>(1 << (5 - bit % 6));
  for (char& c : body) c = static_cast<char>(c + 63);
  return out + body;
}

Graph parse_graph_text(const std::string& text) {
  auto lines = data_lines(text);
  if (looks_like_edge_list(lines)) return parse_edge_list(text);
  std::string g6;
  for (const auto& line : lines) {
    if (line.empty()) continue;
    if (!g6.empty())
      throw std::invalid_argument("input holds several graph6 lines; expected one graph");
    g6 = line;
  }
  if (g6.empty()) throw std::invalid_argument("no graph data in input");
  return graph6_decode(g6);
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.n}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges") ||
      !j["n"].is_number_integer() || !j["edges"].is_array())
    throw std::invalid_argument("graph JSON must be {\"n\": int, \"edges\": [[u,v],...]}");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw std::invalid_argument("graph JSON edge must be [u, v]");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return from_edge_list(edges, j["n"].get<int>());
}

}  // namespace fracdom
