#pragma once

#include <string>
#include <vector>

#include "rgt/graph.hpp"
#include "rgt/interp.hpp"

namespace rgt {

/// One benchmark row. `size` is nodes + edges, the x-axis of the performance
/// plots; `steps` is the store's probe counter, the machine-independent cost.
struct BenchRecord {
  std::string program;
  std::string family;
  std::string backend;
  uint64_t nodes = 0;
  uint64_t edges = 0;
  uint64_t size = 0;
  uint64_t steps = 0;
  uint64_t rule_apps = 0;
  double wall_ms = 0;
  std::string outcome;  // success | failure | budget
};

inline constexpr const char* kCsvHeader =
    "program,family,backend,nodes,edges,size,steps,rule_apps,wall_ms,outcome";

/// Least-squares fit of steps against size plus the consecutive-size step
/// ratios; the linearity evidence for a sweep.
struct FitSummary {
  std::string family;
  double slope = 0;
  double intercept = 0;
  double r2 = 0;
  std::vector<double> doubling_ratios;
};

/// Runs the program on fresh copies of `input`, `reps` times. Counter columns
/// are deterministic per backend and taken from the first repetition; wall
/// time is the median over repetitions. budget 0 = unlimited; an exceeded
/// budget yields outcome "budget".
BenchRecord run_bench(const Program& p, const std::string& program_name,
                      const HostGraph& input, const std::string& family_name, int reps,
                      uint64_t budget);

std::string csv_row(const BenchRecord& r);

/// Appends rows, writing the header first when the file is new or empty.
void append_csv(const std::string& path, const std::vector<BenchRecord>& rows);

/// Fit over the records of one family (needs records at >= 5 sizes).
FitSummary fit_linear(const std::string& family, std::vector<BenchRecord> rows);

}  // namespace rgt
