// Benchmark driver: runs one of the built-in graph programs on a generated
// family instance or a .gpg file, on either storage backend, and reports the
// probe-counter cost. `sweep` measures a size ladder and fits steps against
// graph size.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rgt/bench.hpp"
#include "rgt/families.hpp"
#include "rgt/parse.hpp"
#include "rgt/programs.hpp"

namespace {

uint64_t parse_size_token(const std::string& raw) {
  std::string t = raw;
  uint64_t mult = 1;
  if (!t.empty() && (t.back() == 'k' || t.back() == 'K')) {
    mult = 1000;
    t.pop_back();
  } else if (!t.empty() && (t.back() == 'm' || t.back() == 'M')) {
    mult = 1000000;
    t.pop_back();
  }
  size_t used = 0;
  uint64_t v = std::stoull(t, &used);
  if (used != t.size()) throw CLI::ValidationError("--sizes", "bad size '" + raw + "'");
  return v * mult;
}

// "2k..64k" doubles from low to high; "1k,2k,3k" is an explicit list.
std::vector<uint64_t> parse_sizes(const std::string& text) {
  std::vector<uint64_t> out;
  auto range = text.find("..");
  if (range != std::string::npos) {
    uint64_t lo = parse_size_token(text.substr(0, range));
    uint64_t hi = parse_size_token(text.substr(range + 2));
    for (uint64_t s = lo; s <= hi; s *= 2) out.push_back(s);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_size_token(item));
  return out;
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

rgt::HostGraph make_family_graph(const std::string& family, uint64_t size, uint64_t width,
                                 uint64_t height, uint64_t k, uint64_t seed,
                                 rgt::Backend backend) {
  if (family == "random") {
    uint64_t m = std::min(2 * size, size * (size - 1));
    return rgt::random_digraph(size, m, seed, backend);
  }
  auto kind = rgt::family_from_string(family);
  if (!kind) throw CLI::ValidationError("--family", "unknown family '" + family + "'");
  rgt::FamilySpec spec;
  spec.kind = *kind;
  spec.size = size;
  spec.width = width;
  spec.height = height;
  spec.k = k;
  return rgt::generate(spec, backend);
}

rgt::HostGraph load_graph(const std::string& path, rgt::Backend backend) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  auto parsed = rgt::parse_host_graph(ss.str(), backend);
  if (!parsed.ok()) {
    std::string msg = "parse errors in " + path;
    for (const rgt::Diagnostic& d : parsed.diags) msg += "\n  " + rgt::to_string(d);
    throw std::runtime_error(msg);
  }
  return std::move(*parsed);
}

void print_record(const rgt::BenchRecord& r) {
  std::cout << r.program << " on " << r.family << " (" << r.backend << "): nodes=" << r.nodes
            << " edges=" << r.edges << " steps=" << r.steps << " rule_apps=" << r.rule_apps
            << " wall_ms=" << r.wall_ms << " outcome=" << r.outcome << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rooted graph transformation benchmark driver"};
  app.require_subcommand(1);

  std::string program, graph_file, family, backend_name = "indexed", csv_file, emit_file;
  std::string families_arg, sizes_arg = "2k..64k";
  uint64_t size = 0, width = 0, height = 0, k = 0, seed = 0, budget = 0;
  int reps = 5;

  CLI::App* run_cmd = app.add_subcommand("run", "run one program on one graph");
  run_cmd->add_option("--program", program, "program name")->required();
  run_cmd->add_option("--graph", graph_file, "host graph file (.gpg)");
  run_cmd->add_option("--family", family, "generated input family");
  run_cmd->add_option("--size", size, "family size parameter");
  run_cmd->add_option("--width", width, "grid width");
  run_cmd->add_option("--height", height, "grid height");
  run_cmd->add_option("--k", k, "kkstar copies/spokes");
  run_cmd->add_option("--backend", backend_name, "indexed|legacy");
  run_cmd->add_option("--csv", csv_file, "append one CSV row here");
  run_cmd->add_option("--emit-result", emit_file, "write the result graph on success");
  run_cmd->add_option("--seed", seed, "seed for the random family");
  run_cmd->add_option("--budget", budget, "step budget, 0 = unlimited");
  run_cmd->add_option("--reps", reps, "repetitions for wall-time medians");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "measure a size ladder and fit it");
  sweep_cmd->add_option("--program", program, "program name")->required();
  sweep_cmd->add_option("--families", families_arg, "comma-separated family list")->required();
  sweep_cmd->add_option("--sizes", sizes_arg, "e.g. 2k..64k (doubling) or 1k,2k,5k");
  sweep_cmd->add_option("--backend", backend_name, "indexed|legacy");
  sweep_cmd->add_option("--csv", csv_file, "append all CSV rows here");
  sweep_cmd->add_option("--seed", seed, "seed for the random family");
  sweep_cmd->add_option("--budget", budget, "step budget per run, 0 = unlimited");
  sweep_cmd->add_option("--reps", reps, "repetitions for wall-time medians");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    auto backend = rgt::backend_from_string(backend_name);
    if (!backend) {
      std::cerr << "unknown backend '" << backend_name << "'\n";
      return 2;
    }
    rgt::Program prog = rgt::build_program(program);

    if (run_cmd->parsed()) {
      if (graph_file.empty() == family.empty()) {
        std::cerr << "give exactly one of --graph or --family\n";
        return 2;
      }
      rgt::HostGraph input = graph_file.empty()
                                 ? make_family_graph(family, size, width, height, k, seed,
                                                     *backend)
                                 : load_graph(graph_file, *backend);
      std::string label = graph_file.empty() ? family : "file:" + graph_file;
      rgt::BenchRecord rec = rgt::run_bench(prog, program, input, label, reps, budget);
      print_record(rec);
      if (!csv_file.empty()) rgt::append_csv(csv_file, {rec});
      if (!emit_file.empty() && rec.outcome == "success") {
        rgt::HostGraph g = input;
        rgt::run(prog, g);
        std::ofstream out(emit_file);
        out << rgt::print_host_graph(g);
      }
      if (rec.outcome == "failure") {
        std::cerr << program << ": failure\n";
        return 1;
      }
      if (rec.outcome == "budget") {
        std::cerr << program << ": step budget exceeded\n";
        return 1;
      }
      return 0;
    }

    // sweep
    std::vector<uint64_t> sizes = parse_sizes(sizes_arg);
    if (sizes.size() < 5) {
      std::cerr << "sweep needs at least 5 sizes\n";
      return 2;
    }
    std::vector<rgt::BenchRecord> rows;
    for (const std::string& fam : split_csv(families_arg)) {
      for (uint64_t s : sizes) {
        rgt::HostGraph input = make_family_graph(fam, s, 0, 0, 0, seed, *backend);
        rows.push_back(rgt::run_bench(prog, program, input, fam, reps, budget));
        print_record(rows.back());
      }
    }
    if (!csv_file.empty()) rgt::append_csv(csv_file, rows);
    for (const std::string& fam : split_csv(families_arg)) {
      rgt::FitSummary fit = rgt::fit_linear(fam, rows);
      std::cout << "fit " << fam << ": steps = " << fit.slope << " * size + " << fit.intercept
                << ", r2 = " << fit.r2 << ", doubling ratios:";
      for (double r : fit.doubling_ratios) std::cout << " " << r;
      std::cout << "\n";
    }
    return 0;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    // unknown program names, bad sizes and the like are usage errors
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
