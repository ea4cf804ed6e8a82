#include "rgt/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace rgt {

BenchRecord run_bench(const Program& p, const std::string& program_name,
                      const HostGraph& input, const std::string& family_name, int reps,
                      uint64_t budget) {
  if (reps < 1) throw std::invalid_argument("reps must be at least 1");
  BenchRecord rec;
  rec.program = program_name;
  rec.family = family_name;
  rec.backend = std::string(to_string(input.backend()));
  rec.nodes = input.node_count();
  rec.edges = input.edge_count();
  rec.size = rec.nodes + rec.edges;

  std::vector<double> walls;
  for (int rep = 0; rep < reps; ++rep) {
    HostGraph g = input;
    g.reset_counters();
    RunOptions opts;
    opts.max_steps = budget;
    auto t0 = std::chrono::steady_clock::now();
    std::string outcome;
    uint64_t apps = 0;
    try {
      RunResult res = run(p, g, opts);
      outcome = std::string(to_string(res.outcome));
      apps = res.rule_apps;
    } catch (const BudgetExceeded&) {
      outcome = "budget";
    }
    auto t1 = std::chrono::steady_clock::now();
    walls.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    if (rep == 0) {
      rec.steps = g.counters().steps;
      rec.rule_apps = apps;
      rec.outcome = outcome;
    }
  }
  std::sort(walls.begin(), walls.end());
  rec.wall_ms = walls[walls.size() / 2];
  return rec;
}

std::string csv_row(const BenchRecord& r) {
  char wall[32];
  std::snprintf(wall, sizeof wall, "%.3f", r.wall_ms);
  return r.program + "," + r.family + "," + r.backend + "," + std::to_string(r.nodes) + "," +
         std::to_string(r.edges) + "," + std::to_string(r.size) + "," +
         std::to_string(r.steps) + "," + std::to_string(r.rule_apps) + "," + wall + "," +
         r.outcome;
}

void append_csv(const std::string& path, const std::vector<BenchRecord>& rows) {
  bool need_header = true;
  {
    std::ifstream probe(path);
    if (probe.good() && probe.peek() != std::ifstream::traits_type::eof()) need_header = false;
  }
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open csv file " + path);
  if (need_header) out << kCsvHeader << "\n";
  for (const BenchRecord& r : rows) out << csv_row(r) << "\n";
}

FitSummary fit_linear(const std::string& family, std::vector<BenchRecord> rows) {
  std::erase_if(rows, [&](const BenchRecord& r) { return r.family != family; });
  std::sort(rows.begin(), rows.end(),
            [](const BenchRecord& a, const BenchRecord& b) { return a.size < b.size; });
  if (rows.size() < 5)
    throw std::invalid_argument("linearity fit needs records at >= 5 sizes");

  FitSummary fit;
  fit.family = family;
  double n = double(rows.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const BenchRecord& r : rows) {
    double x = double(r.size), y = double(r.steps);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double denom = n * sxx - sx * sx;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  double mean = sy / n, ss_res = 0, ss_tot = 0;
  for (const BenchRecord& r : rows) {
    double y = double(r.steps);
    double f = fit.slope * double(r.size) + fit.intercept;
    ss_res += (y - f) * (y - f);
    ss_tot += (y - mean) * (y - mean);
  }
  fit.r2 = ss_tot == 0 ? 1.0 : 1.0 - ss_res / ss_tot;
  for (size_t i = 1; i < rows.size(); ++i)
    fit.doubling_ratios.push_back(double(rows[i].steps) / double(rows[i - 1].steps));
  return fit;
}

}  // namespace rgt
