// Acceptance gate: one line per criterion, exit code counts failures.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "fracdom/domination.hpp"
#include "fracdom/graph_gen.hpp"
#include "fracdom/graph_io.hpp"
#include "fracdom/lp_oracle.hpp"
#include "fracdom/synthesis.hpp"

using namespace fracdom;

namespace {

int failures = 0;

void run(int index, const char* name, const std::function<bool(std::string&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!ok) ++failures;
  std::printf("%s  criterion %d  %-42s  %6.1fs%s%s\n", ok ? "PASS" : "FAIL", index,
              name, secs, detail.empty() ? "" : "  ", detail.c_str());
  std::fflush(stdout);
}

Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return from_edge_list(e, n);
}

VertexSet vs(std::initializer_list<int> xs) {
  VertexSet s;
  for (int x : xs) s.add(x);
  return s;
}

// ---- criterion 1: the cycle formula ----------------------------------------

bool cycle_formula(std::string& detail) {
  struct Row {
    int n;
    Rational fd;
  };
  std::vector<Row> table{{3, 3},
                         {4, 2},
                         {5, Rational(5) / 2},
                         {6, 3},
                         {7, Rational(7) / 3},
                         {8, Rational(8) / 3},
                         {9, 3},
                         {10, Rational(5) / 2},
                         {11, Rational(11) / 4},
                         {12, 3}};
  for (const auto& row : table) {
    if (exact_fd(cycle(row.n)).fd != row.fd) {
      detail = "C_" + std::to_string(row.n) + " disagrees with the formula";
      return false;
    }
  }
  return true;
}

// ---- criterion 2: trichotomy vs the oracle on every tiny graph -------------

bool trichotomy_exhaustive(std::string& detail) {
  auto stream = exhaustive_graph_stream(6);
  long checked = 0;
  while (auto g = stream()) {
    Classification c = classify(*g);
    Rational fd = exact_fd(*g).fd;
    bool match = false;
    switch (c.verdict) {
      case Verdict::FdOne:
        match = fd == 1;
        break;
      case Verdict::FdTwo:
        match = fd == 2;
        break;
      case Verdict::FdAboveTwo:
        match = fd > 2;
        break;
    }
    if (!match) {
      detail = "verdict " + verdict_name(c.verdict) + " but FD = " +
               to_fraction_string(fd) + " on " + graph6_encode(*g);
      return false;
    }
    ++checked;
  }
  if (checked != 1 + 2 + 8 + 64 + 1024 + 32768) {
    detail = "stream covered " + std::to_string(checked) + " graphs";
    return false;
  }
  return true;
}

// ---- criterion 3: random certificates, bounded by the oracle ---------------

bool random_certificates(std::string& detail) {
  const std::uint64_t master = 0xFD03;
  for (int i = 0; i < 1000; ++i) {
    int n = 3 + (i % 10);
    Graph g = random_connected_min_degree2(n, derive_seed(master, i));
    Classification c = classify(g);
    if (c.verdict != Verdict::FdAboveTwo || !c.certificate) {
      detail = "draw " + std::to_string(i) + " not classified above two";
      return false;
    }
    VerifyResult res = verify(*c.certificate);
    if (!res.ok) {
      detail = "draw " + std::to_string(i) + " certificate rejected: " + res.message;
      return false;
    }
    Rational v = value(*c.certificate);
    Rational fd = exact_fd(g).fd;
    if (!(v > 2) || v > fd) {
      detail = "draw " + std::to_string(i) + " value " + to_fraction_string(v) +
               " vs FD " + to_fraction_string(fd);
      return false;
    }
  }
  return true;
}

// ---- criterion 4: the 4-cycle dumbbell table -------------------------------

Graph build_c4c4(int len, StructureReport& rep) {
  std::vector<std::pair<int, int>> e{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  rep.two_connected = false;
  rep.handle = {0};
  if (len == 1) {
    e.insert(e.end(), {{0, 4}, {4, 5}, {5, 6}, {6, 0}});
    rep.plate1 = vs({0, 1, 2, 3});
    rep.plate2 = vs({0, 4, 5, 6});
  } else {
    e.insert(e.end(), {{4, 5}, {5, 6}, {6, 7}, {7, 4}});
    int prev = 0;
    for (int i = 0; i + 2 < len; ++i) {
      e.emplace_back(prev, 8 + i);
      rep.handle.push_back(8 + i);
      prev = 8 + i;
    }
    e.emplace_back(prev, 4);
    rep.handle.push_back(4);
    rep.plate1 = vs({0, 1, 2, 3});
    rep.plate2 = vs({4, 5, 6, 7});
  }
  return from_edge_list(e);
}

// The residue-class family, laid out plainly: positions 1..s along the handle
// fall into R[i mod 3], and the seven sets mix plate corners with classes.
std::vector<VertexSet> expected_c4c4_family(const Graph& g, const StructureReport& rep) {
  int d1 = rep.handle.front(), ds = rep.handle.back();
  int s = static_cast<int>(rep.handle.size());
  VertexSet nb1 = g.adj[d1] & rep.plate1;
  int vb = nb1.min();
  int vc = (nb1 - vs({vb})).min();
  int va = (rep.plate1 - nb1 - vs({d1})).min();
  VertexSet nb2 = g.adj[ds] & rep.plate2;
  int ve = nb2.min();
  int vf = (nb2 - vs({ve})).min();
  int vg = (rep.plate2 - nb2 - vs({ds})).min();
  VertexSet R[3];
  for (int i = 1; i <= s; ++i) R[i % 3].add(rep.handle[i - 1]);
  auto f = [&](std::initializer_list<int> fixed, std::initializer_list<int> rs) {
    VertexSet d;
    for (int v : fixed) d.add(v);
    for (int r : rs) d |= R[r];
    return d;
  };
  switch (s % 3) {
    case 0:
      return {f({vb, vc, ve}, {0}), f({vc, vf}, {0, 1}), f({vb, ve}, {0, 1}),
              f({vb, ve, vf}, {1}), f({va, vg}, {2}),   f({va, vg}, {2}),
              f({va, vg}, {2})};
    case 1:
      return {f({va, vc, vg}, {0}), f({vb, vc, vg}, {0}), f({vb, vg}, {1}),
              f({vc, ve}, {1}),     f({vb, vf}, {1}),     f({va, ve, vf}, {2}),
              f({va, ve, vf}, {2})};
    default:
      return {f({va, vc, ve, vf}, {0}), f({vb, vg}, {1}), f({vb, vg}, {1}),
              f({vc, vg}, {1}),         f({va, ve}, {2}), f({va, ve}, {2}),
              f({vb, vc, vf}, {2})};
  }
}

bool c4c4_table(std::string& detail) {
  for (int len = 1; len <= 6; ++len) {
    StructureReport rep;
    Graph g = build_c4c4(len, rep);
    VerifyResult sane = validate_structure_report(g, rep);
    if (!sane.ok) {
      detail = "handle " + std::to_string(len) + ": bad fixture: " + sane.message;
      return false;
    }
    Configuration c = dumbbell_c4c4(g, rep);
    if (c.k() != 7 || c.s != 3) {
      detail = "handle " + std::to_string(len) + ": shape (" +
               std::to_string(c.k()) + ", " + std::to_string(c.s) + ")";
      return false;
    }
    VerifyResult res = verify(c);
    if (!res.ok) {
      detail = "handle " + std::to_string(len) + ": " + res.message;
      return false;
    }
    std::vector<VertexSet> got = c.sets;
    std::vector<VertexSet> want = expected_c4c4_family(g, rep);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want) {
      detail = "handle " + std::to_string(len) + ": family differs from the table";
      return false;
    }
  }
  return true;
}

// ---- criterion 5: complete bipartite families ------------------------------

bool k2p_values(std::string& detail) {
  for (int p = 2; p <= 8; ++p) {
    Configuration c = k2p_configuration(p);
    VerifyResult res = verify(c);
    if (!res.ok) {
      detail = "p = " + std::to_string(p) + ": " + res.message;
      return false;
    }
    if (value(c) != Rational(3 * p - 2) / p) {
      detail = "p = " + std::to_string(p) + ": value " + to_fraction_string(value(c));
      return false;
    }
  }
  Graph k23 = from_edge_list({{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  Rational fd = exact_fd(k23).fd;
  if (fd != Rational(7) / 3) {
    detail = "oracle puts K_{2,3} at " + to_fraction_string(fd);
    return false;
  }
  return true;
}

// ---- criterion 6: disjoint unions take the minimum -------------------------

bool union_rule(std::string& detail) {
  SplitMix64 rng{0xFD06};
  for (int i = 0; i < 50; ++i) {
    Graph a = random_graph(3 + static_cast<int>(rng.next() % 4), rng);
    Graph b = random_graph(3 + static_cast<int>(rng.next() % 4), rng);
    UnionCheck uc = fd_of_disjoint_union_check(a, b);
    if (!uc.min_rule_holds) {
      detail = "pair " + std::to_string(i) + ": FD(a) = " + to_fraction_string(uc.fd_a) +
               ", FD(b) = " + to_fraction_string(uc.fd_b) + ", FD(union) = " +
               to_fraction_string(uc.fd_union);
      return false;
    }
  }
  return true;
}

// ---- criterion 7: sweep for values strictly between 2 and 7/3 --------------

bool report_witnesses(const ScanReport& rep, std::string& detail) {
  if (rep.skipped != 0) {
    detail = std::to_string(rep.skipped) + " graphs skipped";
    return false;
  }
  if (rep.witnesses.empty()) return true;
  std::printf("**** value strictly between 2 and 7/3 ****\n");
  for (const auto& w : rep.witnesses) {
    Graph g = graph6_decode(w);
    Rational fd = exact_fd(g).fd;
    Classification c = classify(g);
    bool certified = c.verdict == Verdict::FdAboveTwo && c.certificate &&
                     verify(*c.certificate).ok;
    std::printf("****   %s  FD = %s  certificate %s\n", w.c_str(),
                to_fraction_string(fd).c_str(),
                certified ? "re-verified" : "MISSING");
  }
  std::fflush(stdout);
  detail = std::to_string(rep.witnesses.size()) + " witnesses found";
  return false;
}

bool conjecture_sweep(std::string& detail) {
  ScanReport small = conjecture_scan(exhaustive_graph_stream(6), kOracleDefaultLimit);
  if (!report_witnesses(small, detail)) return false;
  ScanReport random = conjecture_scan(random_graph_stream(10, 10000, 0xFD07),
                                      kOracleDefaultLimit);
  if (!report_witnesses(random, detail)) return false;
  if (small.records.size() != 33867 || random.records.size() != 10000) {
    detail = "unexpected record counts";
    return false;
  }
  return true;
}

// ---- criterion 8: structure validators and the nice rewrite ----------------

bool check_structure(const Graph& g, std::string& detail) {
  StructureReport rep = dumbbell_decomposition(g);
  VerifyResult res = validate_structure_report(g, rep);
  if (!res.ok) {
    detail = "structure report rejected: " + res.message + " on " + graph6_encode(g);
    return false;
  }
  if (rep.two_connected && recognize_cycle(g) != 4) {
    if (auto start = find_cycle_avoiding_length_4(g)) {
      EarDecomposition ed = open_ear_decomposition(g, *start);
      VerifyResult ear = validate_ear_decomposition(g, ed);
      if (!ear.ok) {
        detail = "ear decomposition rejected: " + ear.message + " on " + graph6_encode(g);
        return false;
      }
    }
  }
  return true;
}

bool validators_and_nice(std::string& detail) {
  auto stream = exhaustive_graph_stream(6);
  while (auto g = stream()) {
    if (g->n < 3 || min_degree(*g) < 2) continue;
    if (connected_components(*g).size() != 1) continue;
    if (!check_structure(*g, detail)) return false;
  }
  const std::uint64_t master = 0xFD08;
  for (int i = 0; i < 200; ++i) {
    Graph g = random_connected_min_degree2(3 + (i % 10), derive_seed(master, i));
    if (!check_structure(g, detail)) return false;
  }
  SplitMix64 picker{0xFD08 + 1};
  for (int i = 0; i < 1000; ++i) {
    int n = 3 + (i % 10);
    Graph g = random_connected_min_degree2(n, derive_seed(master + 2, i));
    Classification c = classify(g);
    if (!c.certificate) {
      detail = "triple " + std::to_string(i) + " lost its certificate";
      return false;
    }
    const Configuration& base = *c.certificate;
    int x = static_cast<int>(picker.next() % g.n);
    int y = static_cast<int>(picker.next() % g.n);
    if (x == y) y = (y + 1) % g.n;
    bool was_nice = is_nice(base, x, y);
    Configuration m = make_nice(base, x, y);
    VerifyResult res = verify(m);
    if (!res.ok) {
      detail = "triple " + std::to_string(i) + " invalid after rewrite: " + res.message;
      return false;
    }
    if (!is_nice(m, x, y)) {
      detail = "triple " + std::to_string(i) + " not nice at (" + std::to_string(x) +
               ", " + std::to_string(y) + ")";
      return false;
    }
    if (was_nice && (m.sets != base.sets || m.s != base.s)) {
      detail = "triple " + std::to_string(i) + " rewrote a nice configuration";
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  run(1, "cycle formula n = 3..12", cycle_formula);
  run(2, "trichotomy vs oracle, all graphs n <= 6", trichotomy_exhaustive);
  run(3, "1000 random certificates within the optimum", random_certificates);
  run(4, "4-cycle dumbbell residue table, handles 1..6", c4c4_table);
  run(5, "complete bipartite families p = 2..8", k2p_values);
  run(6, "50 disjoint unions obey the minimum rule", union_rule);
  run(7, "no value strictly between 2 and 7/3", conjecture_sweep);
  run(8, "validators and 1000 nice rewrites", validators_and_nice);
  if (failures == 0) std::printf("all acceptance criteria hold\n");
  return failures;
}
