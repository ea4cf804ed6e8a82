#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "rgt/engine.hpp"
#include "rgt/families.hpp"
#include "rgt/interp.hpp"
#include "rgt/programs.hpp"

using namespace rgt;
using namespace rgt_test;

namespace {

HostGraph cyclic_sample() {
  HostGraph g;
  NodeId a = g.add_node({}, NodeMark::Grey, false);
  NodeId b = g.add_node({}, NodeMark::Grey, false);
  NodeId c = g.add_node({}, NodeMark::Grey, false);
  NodeId d = g.add_node({}, NodeMark::Grey, false);
  g.add_edge(a, b, {}, EdgeMark::Unmarked);
  g.add_edge(b, c, {}, EdgeMark::Unmarked);
  g.add_edge(c, a, {}, EdgeMark::Unmarked);
  g.add_edge(d, a, {}, EdgeMark::Unmarked);
  return g;
}

bool all_nodes_marked(const HostGraph& g, NodeMark m) {
  for (NodeId n : g.nodes())
    if (g.get_mark(n) != m) return false;
  return true;
}

bool all_edges_marked(const HostGraph& g, EdgeMark m) {
  for (EdgeId e : g.edges())
    if (g.get_mark(e) != m) return false;
  return true;
}

int64_t appended_id(const HostGraph& g, NodeId n) {
  const Label& l = g.get_label(n);
  REQUIRE(!l.empty());
  REQUIRE(is_int(l.back()));
  return std::get<int64_t>(l.back());
}

}  // namespace

TEST_SUITE("case-programs") {

TEST_CASE("build_program inventory") {
  CHECK_THROWS_AS(build_program("two-colouring"), UnknownProgram);
  Program dag = build_program("is-dag");
  CHECK(dag.procedures.count("Main") == 1);
  CHECK(dag.procedures.count("DFS") == 1);
  CHECK(dag.procedures.count("Check") == 1);
  for (const char* r :
       {"init", "unroot", "set_flag", "flag", "next_edge", "ignore", "move", "back", "loop"})
    CHECK(dag.rules.count(r) == 1);
  Program bfs = build_program("bfs");
  CHECK(bfs.procedures.at("Main") ==
        Command::loop(Command::seq(
            {Command::rule_call({"init"}), Command::loop(Command::call("BFS"))})));
  Program cn = build_program("component-numbering");
  CHECK(cn.rules.count("next") == 1);
  for (const std::string& name : program_names()) {
    Program p = build_program(name);
    CHECK(check_program(p).empty());
  }
}

TEST_CASE("is-dag rejects the cyclic sample via the flag path") {
  Program dag = build_program("is-dag");
  HostGraph g = cyclic_sample();
  std::vector<std::string> trace;
  size_t max_roots = 0;
  RunOptions opts;
  opts.observer = [&](const ApplyEvent& ev) {
    trace.push_back(ev.rule.rule.name);
    max_roots = std::max(max_roots, g.root_count());
  };
  auto res = run(dag, g, opts);
  CHECK(res.outcome == Outcome::Failure);
  for (const char* must : {"init", "next_edge", "move", "set_flag", "flag"})
    CHECK(std::count(trace.begin(), trace.end(), must) >= 1);
  CHECK(max_roots <= 1);
}

TEST_CASE("is-dag accepts the acyclic star sample fully processed") {
  Program dag = build_program("is-dag");
  HostGraph g = generate({Family::Star, 9});
  HostGraph input = g;
  size_t max_roots = 0;
  RunOptions opts;
  opts.observer = [&](const ApplyEvent&) { max_roots = std::max(max_roots, g.root_count()); };
  auto res = run(dag, g, opts);
  CHECK(res.outcome == Outcome::Success);
  CHECK(all_nodes_marked(g, NodeMark::Blue));
  CHECK(all_edges_marked(g, EdgeMark::Blue));
  CHECK(max_roots <= 1);
  // structure is untouched: same ids, endpoints, labels
  for (NodeId n : input.nodes()) {
    CHECK(g.alive(n));
    CHECK(g.get_label(n) == input.get_label(n));
  }
  for (EdgeId e : input.edges()) {
    CHECK(g.alive(e));
    CHECK(g.get_source(e) == input.get_source(e));
    CHECK(g.get_target(e) == input.get_target(e));
  }
  CHECK(g.root_count() == 0);
}

TEST_CASE("is-dag on a single grey node") {
  Program dag = build_program("is-dag");
  HostGraph g = generate({Family::Discrete, 1});
  CHECK(run(dag, g).outcome == Outcome::Success);
  CHECK(g.node_count() == 1);
  CHECK(all_nodes_marked(g, NodeMark::Blue));
}

TEST_CASE("is-dag on a self-loop") {
  Program dag = build_program("is-dag");
  HostGraph g;
  NodeId n = g.add_node({}, NodeMark::Grey, false);
  g.add_edge(n, n, {}, EdgeMark::Unmarked);
  CHECK(run(dag, g).outcome == Outcome::Failure);
}

TEST_CASE("is-dag agrees with Kahn's algorithm") {
  Program dag = build_program("is-dag");
  std::mt19937_64 rng(555);
  for (int i = 0; i < 120; ++i) {
    uint64_t n = 1 + rng() % 30;
    uint64_t m = rng() % (n * 2);
    if (m > n * (n - 1)) m = n * (n - 1);
    HostGraph g = random_digraph(n, m, rng());
    bool cyclic = has_directed_cycle(g);
    auto res = run(dag, g);
    CHECK((res.outcome == Outcome::Failure) == cyclic);
    if (res.outcome == Outcome::Success) {
      CHECK(all_nodes_marked(g, NodeMark::Blue));
      CHECK(all_edges_marked(g, EdgeMark::Blue));
    }
  }
}

TEST_CASE("is-connected agrees with the component oracle") {
  Program con = build_program("is-connected");
  std::mt19937_64 rng(556);
  for (int i = 0; i < 120; ++i) {
    uint64_t n = 1 + rng() % 25;
    uint64_t m = rng() % (2 * n);
    if (m > n * (n - 1)) m = n * (n - 1);
    HostGraph g = random_digraph(n, m, rng());
    bool connected = component_count(g) <= 1;
    CHECK((run(con, g).outcome == Outcome::Success) == connected);
  }
  HostGraph empty;
  CHECK(run(con, empty).outcome == Outcome::Success);
}

TEST_CASE("component-numbering matches union-find") {
  Program cn = build_program("component-numbering");
  SUBCASE("three isolated nodes get 1, 2, 3") {
    HostGraph g = generate({Family::Discrete, 3});
    CHECK(run(cn, g).outcome == Outcome::Success);
    std::vector<int64_t> ids;
    for (NodeId n : g.nodes()) ids.push_back(appended_id(g, n));
    std::sort(ids.begin(), ids.end());
    CHECK(ids == std::vector<int64_t>{1, 2, 3});
  }
  SUBCASE("existing labels keep their prefix") {
    HostGraph g;
    g.add_node({Atom{std::string("a")}}, NodeMark::Grey, false);
    CHECK(run(cn, g).outcome == Outcome::Success);
    NodeId n = g.nodes()[0];
    CHECK(g.get_label(n) == Label{Atom{std::string("a")}, Atom{int64_t{1}}});
  }
  SUBCASE("random digraphs") {
    std::mt19937_64 rng(557);
    for (int i = 0; i < 100; ++i) {
      uint64_t n = 1 + rng() % 25;
      uint64_t m = rng() % (2 * n);
      if (m > n * (n - 1)) m = n * (n - 1);
      HostGraph g = random_digraph(n, m, rng());
      auto comp = component_map(g);
      size_t c = component_count(g);
      REQUIRE(run(cn, g).outcome == Outcome::Success);
      std::map<uint32_t, int64_t> by_rep;
      std::set<int64_t> seen;
      for (NodeId v : g.nodes()) {
        int64_t id = appended_id(g, v);
        seen.insert(id);
        uint32_t rep = comp.at(v.index);
        auto [it, fresh] = by_rep.emplace(rep, id);
        CHECK(it->second == id);  // same component, same number
      }
      CHECK(seen.size() == c);  // distinct components, distinct numbers
      CHECK(*seen.begin() == 1);
      CHECK(*seen.rbegin() == int64_t(c));
    }
  }
}

TEST_CASE("bfs visits in layer order and paints everything blue") {
  Program bfs = build_program("bfs");
  std::mt19937_64 rng(558);
  for (int i = 0; i < 60; ++i) {
    uint64_t n = 1 + rng() % 25;
    uint64_t m = rng() % (2 * n);
    if (m > n * (n - 1)) m = n * (n - 1);
    HostGraph g = random_digraph(n, m, rng());
    HostGraph input = g;

    std::unordered_map<uint32_t, int> layer;
    std::vector<std::unordered_map<uint32_t, int>> expected;
    RunOptions opts;
    opts.observer = [&](const ApplyEvent& ev) {
      const std::string& name = ev.rule.rule.name;
      if (name == "init") {
        NodeId seed = ev.match.node_images[0];
        layer[seed.index] = 0;
        expected.push_back(undirected_distances(input, seed));
      } else if (name == "move") {
        int from = ev.rule.rule.lhs.node_index("1");
        int to = ev.rule.rule.lhs.node_index("2");
        NodeId x = ev.match.node_images[from];
        NodeId y = ev.match.node_images[to];
        REQUIRE(layer.count(x.index));
        layer[y.index] = layer[x.index] + 1;
      }
    };
    REQUIRE(run(bfs, g, opts).outcome == Outcome::Success);
    CHECK(all_nodes_marked(g, NodeMark::Blue));
    CHECK(all_edges_marked(g, EdgeMark::Blue));
    // every node got a layer equal to its distance from its component's seed
    size_t layered = 0;
    for (const auto& dist : expected)
      for (const auto& [idx, d] : dist) {
        REQUIRE(layer.count(idx));
        CHECK(layer.at(idx) == d);
        ++layered;
      }
    CHECK(layered == g.node_count());
  }
}

TEST_CASE("is-discrete fails exactly when an edge exists") {
  Program dis = build_program("is-discrete");
  SUBCASE("families") {
    HostGraph d = generate({Family::Discrete, 40});
    CHECK(run(dis, d).outcome == Outcome::Success);
    HostGraph l = generate({Family::List, 40});
    CHECK(run(dis, l).outcome == Outcome::Failure);
    HostGraph s = generate({Family::Star, 9});
    CHECK(run(dis, s).outcome == Outcome::Failure);
    HostGraph empty;
    CHECK(run(dis, empty).outcome == Outcome::Success);
  }
  SUBCASE("random digraphs") {
    std::mt19937_64 rng(559);
    for (int i = 0; i < 80; ++i) {
      uint64_t n = 1 + rng() % 20;
      uint64_t m = rng() % 4;
      if (m > n * (n - 1)) m = n * (n - 1);
      HostGraph g = random_digraph(n, m, rng());
      CHECK((run(dis, g).outcome == Outcome::Failure) == (m >= 1));
    }
  }
  SUBCASE("a lone loop counts as an edge") {
    HostGraph g;
    NodeId n = g.add_node({}, NodeMark::Grey, false);
    g.add_edge(n, n, {}, EdgeMark::Unmarked);
    CHECK(run(dis, g).outcome == Outcome::Failure);
  }
}

TEST_CASE("loops do not disturb the undirected traversals") {
  // a loop is never matched by a two-node rule, so it stays unmarked and the
  // component structure is unaffected
  HostGraph g;
  NodeId a = g.add_node({}, NodeMark::Grey, false);
  NodeId b = g.add_node({}, NodeMark::Grey, false);
  g.add_edge(a, b, {}, EdgeMark::Unmarked);
  EdgeId lp = g.add_edge(a, a, {}, EdgeMark::Unmarked);

  HostGraph cn_in = g;
  Program cn = build_program("component-numbering");
  REQUIRE(run(cn, cn_in).outcome == Outcome::Success);
  CHECK(appended_id(cn_in, a) == appended_id(cn_in, b));
  CHECK(cn_in.get_mark(lp) == EdgeMark::Unmarked);

  HostGraph con_in = g;
  Program con = build_program("is-connected");
  CHECK(run(con, con_in).outcome == Outcome::Success);
}

TEST_CASE("fast-rule matching cost is independent of host size") {
  Program dag = build_program("is-dag");
  CompiledRule init = compile_rule(dag.rules.at("init"));
  uint64_t costs[2];
  int slot = 0;
  for (uint64_t n : {10u, 100000u}) {
    HostGraph g = generate({Family::Discrete, n}, Backend::Indexed);
    g.reset_counters();
    CHECK(match(g, init).has_value());
    costs[slot++] = g.counters().steps;
  }
  CHECK(costs[0] == costs[1]);
  CHECK(costs[0] <= 5);
}

TEST_CASE("the star-graph matching bound for the legacy backend") {
  // worst-case forward attempts over a whole run stay within 2|E| + sum(1..|E|)
  Program con = build_program("is-connected");
  for (uint64_t k : {8u, 16u, 32u}) {
    HostGraph g = generate({Family::Star, k + 1}, Backend::Legacy);
    RunOptions opts;
    opts.collect_rule_stats = true;
    auto res = run(con, g, opts);
    CHECK(res.outcome == Outcome::Success);
    uint64_t bound = 2 * k + k * (k + 1) / 2;
    CHECK(res.rule_attempts.at("forward") <= bound);

    HostGraph gi = generate({Family::Star, k + 1}, Backend::Indexed);
    auto resi = run(con, gi, opts);
    CHECK(resi.outcome == Outcome::Success);
    CHECK(resi.rule_attempts.at("forward") < res.rule_attempts.at("forward"));
  }
}

TEST_CASE("run_with_budget completes the benchmark workloads") {
  Program dag = build_program("is-dag");
  HostGraph g = generate({Family::List, 100});
  CHECK(run_with_budget(dag, g, 1000000) == Outcome::Success);
  HostGraph c = generate({Family::Cycle, 100});
  CHECK(run_with_budget(dag, c, 1000000) == Outcome::Failure);
}

}  // TEST_SUITE
