#include "fracdom/lp_oracle.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "fracdom/domination.hpp"
#include "fracdom/graph_io.hpp"

namespace fracdom {

namespace {

using boost::multiprecision::cpp_int;

[[noreturn]] void certification_failure(const std::string& what) {
  throw std::logic_error("exact_fd certification failed: " + what);
}

}  // namespace

FdValue exact_fd(const Graph& g, int limit) {
  if (g.n == 0) throw std::invalid_argument("exact_fd: empty graph");
  int cap = std::min(limit, kOracleHardCap);
  if (g.n > cap)
    throw std::invalid_argument("exact_fd: " + std::to_string(g.n) +
                                " vertices exceeds the oracle limit " +
                                std::to_string(cap));

  // Columns: minimal dominating sets. Restricting to minimal ones never
  // lowers the optimum, since shrinking a set only relaxes the constraints
  // it appears in.
  std::vector<VertexSet> columns = enumerate_minimal_dominating_sets(g);
  int ncols = static_cast<int>(columns.size());
  int m = g.n;
  int width = ncols + m + 1;

  // Tableau for max 1'x, Ax <= 1, x >= 0 with A[v][j] = (v in column j);
  // slack basis is feasible since b = 1 >= 0.
  std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(width, Rational(0)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < ncols; ++j)
      if (columns[j].contains(i)) t[i][j] = 1;
    t[i][ncols + i] = 1;
    t[i][width - 1] = 1;
  }
  for (int j = 0; j < ncols; ++j) t[m][j] = -1;
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = ncols + i;

  // Bland's rule on both choices: finite even under degeneracy.
  long pivots = 0;
  for (;;) {
    if (++pivots > 200000) throw std::logic_error("exact_fd: pivot cap hit");
    int enter = -1;
    for (int j = 0; j < width - 1; ++j)
      if (t[m][j] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) throw std::logic_error("exact_fd: relaxation unbounded");
    Rational piv = t[leave][enter];
    for (int j = 0; j < width; ++j) t[leave][j] /= piv;
    for (int i = 0; i <= m; ++i) {
      if (i == leave) continue;
      Rational f = t[i][enter];
      if (f == 0) continue;
      for (int j = 0; j < width; ++j) {
        if (t[leave][j] == 0) continue;
        t[i][j] -= f * t[leave][j];
      }
    }
    basis[leave] = enter;
  }

  std::vector<Rational> x(ncols, Rational(0));
  for (int i = 0; i < m; ++i)
    if (basis[i] < ncols) x[basis[i]] = t[i][width - 1];
  std::vector<Rational> y(m);
  for (int i = 0; i < m; ++i) y[i] = t[m][ncols + i];
  Rational objective = t[m][width - 1];

  // Re-certify against the original data, not the tableau.
  Rational primal(0);
  std::vector<Rational> load(m, Rational(0));
  for (int j = 0; j < ncols; ++j) {
    if (x[j] < 0) certification_failure("negative primal weight");
    if (x[j] == 0) continue;
    primal += x[j];
    for (int v : columns[j].members()) load[v] += x[j];
  }
  for (int v = 0; v < m; ++v)
    if (load[v] > 1) certification_failure("vertex load above 1");
  Rational dual(0);
  for (int i = 0; i < m; ++i) {
    if (y[i] < 0) certification_failure("negative dual multiplier");
    dual += y[i];
  }
  for (int j = 0; j < ncols; ++j) {
    Rational covered(0);
    for (int v : columns[j].members()) covered += y[v];
    if (covered < 1) certification_failure("uncovered dual constraint");
  }
  if (primal != objective || dual != objective)
    certification_failure("duality gap");

  FdValue out;
  out.fd = objective;
  for (int j = 0; j < ncols; ++j)
    if (x[j] > 0) out.weights.emplace_back(columns[j], x[j]);
  return out;
}

Configuration scaled_configuration(const Graph& g, const FdValue& v) {
  if (v.weights.empty())
    throw std::invalid_argument("scaled_configuration: empty support");
  cpp_int scale = 1;
  for (const auto& [set, w] : v.weights) {
    (void)set;
    scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(w));
  }
  if (scale > 100000)
    throw std::logic_error("scaled_configuration: denominator lcm " +
                           scale.str() + " exceeds 100000");
  long s = scale.convert_to<long>();
  Configuration c;
  c.g = std::make_shared<Graph>(g);
  c.s = static_cast<int>(s);
  for (const auto& [set, w] : v.weights) {
    Rational copies = w * s;
    if (boost::multiprecision::denominator(copies) != 1)
      throw std::logic_error("scaled_configuration: non-integral multiplicity");
    long reps = boost::multiprecision::numerator(copies).convert_to<long>();
    for (long r = 0; r < reps; ++r) c.sets.push_back(set);
  }
  VerifyResult res = verify(c);
  if (!res.ok)
    throw std::logic_error("scaled_configuration: " + res.message);
  return c;
}

UnionCheck fd_of_disjoint_union_check(const Graph& a, const Graph& b, int limit) {
  UnionCheck out;
  out.combined = disjoint_union(a, b);
  out.fd_a = exact_fd(a, limit).fd;
  out.fd_b = exact_fd(b, limit).fd;
  out.fd_union = exact_fd(out.combined, limit).fd;
  out.min_rule_holds = out.fd_union == std::min(out.fd_a, out.fd_b);
  return out;
}

ScanReport conjecture_scan(GraphStream stream, int oracle_limit) {
  ScanReport report;
  const Rational threshold = Rational(7) / 3;
  int cap = std::min(oracle_limit, kOracleHardCap);
  while (auto g = stream()) {
    if (g->n > cap) {
      ++report.skipped;
      continue;
    }
    FdValue v = exact_fd(*g, cap);
    ScanRecord rec;
    rec.graph6 = graph6_encode(*g);
    rec.fd = v.fd;
    rec.flagged = v.fd > 2 && v.fd < threshold;
    if (v.fd > 2 && (!report.min_above_two || v.fd < *report.min_above_two))
      report.min_above_two = v.fd;
    if (rec.flagged) report.witnesses.push_back(rec.graph6);
    report.records.push_back(std::move(rec));
  }
  return report;
}

}  // namespace fracdom
