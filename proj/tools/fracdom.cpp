#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fracdom/decomposition.hpp"
#include "fracdom/graph_gen.hpp"
#include "fracdom/graph_io.hpp"
#include "fracdom/lp_oracle.hpp"
#include "fracdom/synthesis.hpp"

namespace {

using nlohmann::json;

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  buf << in.rdbuf();
  return buf.str();
}

fracdom::Graph load_graph(const std::string& path) {
  return fracdom::parse_graph_text(read_input(path));
}

int env_oracle_limit(int fallback) {
  const char* env = std::getenv("FRACDOM_ORACLE_LIMIT");
  if (!env) return fallback;
  try {
    return std::stoi(env);
  } catch (const std::exception&) {
    throw std::runtime_error("FRACDOM_ORACLE_LIMIT is not an integer");
  }
}

int run_classify(const std::string& path, bool certify) {
  fracdom::Graph g = load_graph(path);
  fracdom::Classification c = fracdom::classify(g);
  std::cout << fracdom::classification_to_json(c, certify).dump() << "\n";
  switch (c.verdict) {
    case fracdom::Verdict::FdOne:
      std::cerr << "FD = 1 (" << c.reason << ")\n";
      break;
    case fracdom::Verdict::FdTwo:
      std::cerr << "FD = 2 (" << c.reason << ")\n";
      break;
    case fracdom::Verdict::FdAboveTwo:
      std::cerr << "FD > 2, certificate (" << c.certificate->k() << ", "
                << c.certificate->s << ") of value "
                << fracdom::to_fraction_string(fracdom::value(*c.certificate))
                << "\n";
      break;
  }
  return 0;
}

int run_fd(const std::string& path, int limit_flag) {
  int limit = limit_flag >= 1 ? limit_flag
                              : env_oracle_limit(fracdom::kOracleDefaultLimit);
  fracdom::Graph g = load_graph(path);
  fracdom::FdValue v = fracdom::exact_fd(g, limit);
  json support = json::array();
  for (const auto& [set, w] : v.weights) {
    json row;
    row["set"] = json::array();
    for (int u : set.members()) row["set"].push_back(u);
    row["weight"] = fracdom::to_fraction_string(w);
    support.push_back(row);
  }
  json out;
  out["fd"] = fracdom::to_fraction_string(v.fd);
  out["n"] = g.n;
  out["support"] = support;
  std::cout << out.dump() << "\n";
  std::cerr << "FD = " << fracdom::to_fraction_string(v.fd) << " over "
            << v.weights.size() << " weighted minimal dominating sets\n";
  return 0;
}

int run_verify(const std::string& cert_path, const std::string& graph_path) {
  json j = json::parse(read_input(cert_path));
  if (j.is_object() && j.contains("certificate")) j = j.at("certificate");
  fracdom::VerifyResult res = fracdom::verify_certificate_json(j);
  if (res.ok && !graph_path.empty()) {
    fracdom::Graph expect = load_graph(graph_path);
    fracdom::Configuration c = fracdom::configuration_from_json(j);
    if (!(*c.g == expect)) {
      res.ok = false;
      res.message = "certificate is bound to a different graph";
    }
  }
  json out{{"ok", res.ok}, {"message", res.message}};
  std::cout << out.dump() << "\n";
  std::cerr << (res.ok ? "certificate verified" : "rejected: " + res.message)
            << "\n";
  return res.ok ? 0 : 1;
}

// Every cycle has length 4 only for C4 and K_{2,p}; recover a concrete
// 4-cycle for those so the ear decomposition still gets a start cycle.
std::vector<int> fallback_four_cycle(const fracdom::Graph& g) {
  if (fracdom::recognize_cycle(g)) {
    std::vector<int> order{0};
    int prev = -1, cur = 0;
    while (static_cast<int>(order.size()) < g.n) {
      for (int w : g.adj[cur].members())
        if (w != prev) {
          order.push_back(w);
          prev = cur;
          cur = w;
          break;
        }
    }
    return order;
  }
  if (auto split = fracdom::recognize_k2p(g)) {
    auto bs = split->b.members();
    return {split->a1, bs[0], split->a2, bs[1]};
  }
  throw std::logic_error("no start cycle found");
}

int run_decompose(const std::string& path) {
  fracdom::Graph g = load_graph(path);
  if (g.n == 0) throw std::invalid_argument("decompose needs a nonempty graph");
  if (fracdom::connected_components(g).size() != 1)
    throw std::invalid_argument("decompose needs a connected graph");
  if (fracdom::min_degree(g) < 2)
    throw std::invalid_argument("decompose needs min degree >= 2");
  fracdom::StructureReport rep = fracdom::dumbbell_decomposition(g);
  json out = fracdom::structure_report_to_json(rep);
  if (rep.two_connected) {
    auto cycle = fracdom::find_cycle_avoiding_length_4(g);
    std::vector<int> start = cycle ? *cycle : fallback_four_cycle(g);
    out["earDecomposition"] =
        fracdom::ear_decomposition_to_json(fracdom::open_ear_decomposition(g, start));
    std::cerr << "two-connected, ear decomposition from a cycle of length "
              << start.size() << "\n";
  } else {
    std::cerr << "dumbbell: plates of " << rep.plate1.count() << " and "
              << rep.plate2.count() << " vertices, handle of "
              << rep.handle.size() << "\n";
  }
  std::cout << out.dump() << "\n";
  return 0;
}

int run_scan(const std::string& source, int max_n, std::uint64_t seed,
             long count, int oracle_limit, const std::string& input) {
  fracdom::GraphStream stream;
  if (source == "exhaustive") {
    stream = fracdom::exhaustive_graph_stream(max_n);
  } else if (source == "random") {
    stream = fracdom::random_graph_stream(max_n, count, seed);
  } else {
    auto lines = std::make_shared<std::vector<std::string>>();
    std::istringstream in(read_input(input.empty() ? "-" : input));
    std::string line;
    while (std::getline(in, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
        line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      lines->push_back(line);
    }
    auto next = std::make_shared<std::size_t>(0);
    stream = [lines, next]() -> std::optional<fracdom::Graph> {
      if (*next >= lines->size()) return std::nullopt;
      return fracdom::graph6_decode((*lines)[(*next)++]);
    };
  }

  fracdom::ScanReport rep = fracdom::conjecture_scan(std::move(stream), oracle_limit);
  for (const auto& r : rep.records) {
    json row;
    row["fd_den"] = boost::multiprecision::denominator(r.fd).convert_to<long long>();
    row["fd_num"] = boost::multiprecision::numerator(r.fd).convert_to<long long>();
    row["flagged"] = r.flagged;
    row["graph6"] = r.graph6;
    std::cout << row.dump() << "\n";
  }
  json footer;
  footer["flagged_total"] = rep.witnesses.size();
  footer["min_above_two"] =
      rep.min_above_two ? json(fracdom::to_fraction_string(*rep.min_above_two))
                        : json(nullptr);
  footer["records"] = rep.records.size();
  footer["skipped"] = rep.skipped;
  std::cout << footer.dump() << "\n";

  std::cerr << "scanned " << rep.records.size() << " graphs, flagged "
            << rep.witnesses.size() << ", skipped " << rep.skipped << "\n";
  if (!rep.witnesses.empty()) {
    std::cerr << "*** graphs with 2 < FD < 7/3 found ***\n";
    for (const auto& w : rep.witnesses)
      std::cerr << "  counterexample candidate: " << w << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fractional domatic number toolkit"};
  app.require_subcommand(1);

  std::string classify_path;
  bool certify = false;
  CLI::App* cmd_classify =
      app.add_subcommand("classify", "decide FD = 1, FD = 2 or FD > 2");
  cmd_classify->add_option("graph", classify_path, "edge list or graph6 file, - for stdin")
      ->required();
  cmd_classify->add_flag("--certify", certify, "embed a certificate when FD > 2");

  std::string fd_path;
  int limit_flag = 0;
  CLI::App* cmd_fd = app.add_subcommand("fd", "exact FD via the rational LP oracle");
  cmd_fd->add_option("graph", fd_path, "edge list or graph6 file, - for stdin")
      ->required();
  cmd_fd->add_option("--limit", limit_flag,
                     "vertex cap (else FRACDOM_ORACLE_LIMIT, else 12)");

  std::string cert_path, verify_graph;
  CLI::App* cmd_verify = app.add_subcommand("verify", "check a certificate file");
  cmd_verify->add_option("certificate", cert_path, "certificate or classification JSON")
      ->required();
  cmd_verify->add_option("graph", verify_graph, "graph the certificate must be bound to");

  std::string dec_path;
  CLI::App* cmd_decompose =
      app.add_subcommand("decompose", "dumbbell / two-connected structure report");
  cmd_decompose->add_option("graph", dec_path, "edge list or graph6 file, - for stdin")
      ->required();

  std::string source = "exhaustive", scan_input;
  int max_n = 6;
  long count = 100;
  std::uint64_t seed = 0;
  int scan_limit = fracdom::kOracleDefaultLimit;
  CLI::App* cmd_scan = app.add_subcommand("scan", "sweep graphs for 2 < FD < 7/3");
  cmd_scan->add_option("--source", source, "exhaustive, random or file")
      ->check(CLI::IsMember({"exhaustive", "random", "file"}));
  cmd_scan->add_option("--max-n", max_n, "largest vertex count to generate");
  cmd_scan->add_option("--count", count, "number of random draws");
  cmd_scan->add_option("--seed", seed, "master seed for random draws");
  cmd_scan->add_option("--oracle-limit", scan_limit, "skip graphs above this size");
  cmd_scan->add_option("--input", scan_input, "graph6 lines when --source file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_classify) return run_classify(classify_path, certify);
    if (*cmd_fd) return run_fd(fd_path, limit_flag);
    if (*cmd_verify) return run_verify(cert_path, verify_graph);
    if (*cmd_decompose) return run_decompose(dec_path);
    if (*cmd_scan)
      return run_scan(source, max_n, seed, count, scan_limit, scan_input);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
