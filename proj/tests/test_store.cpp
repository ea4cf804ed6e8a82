#include <doctest.h>

#include <random>

#include "rgt/families.hpp"
#include "rgt/graph.hpp"

using namespace rgt;

namespace {

Label lbl(int64_t v) { return Label{Atom{v}}; }

// Mirrors one mutation sequence onto both backends, asserting the exposed
// graphs stay identical step for step.
struct Twin {
  HostGraph indexed{Backend::Indexed};
  HostGraph legacy{Backend::Legacy};
  std::vector<NodeId> live_nodes;
  std::vector<EdgeId> live_edges;

  NodeId add_node(Label l, NodeMark m, bool rooted) {
    NodeId a = indexed.add_node(l, m, rooted);
    NodeId b = legacy.add_node(l, m, rooted);
    REQUIRE(a == b);
    live_nodes.push_back(a);
    return a;
  }
  EdgeId add_edge(NodeId s, NodeId t, Label l, EdgeMark m) {
    EdgeId a = indexed.add_edge(s, t, l, m);
    EdgeId b = legacy.add_edge(s, t, l, m);
    REQUIRE(a == b);
    live_edges.push_back(a);
    return a;
  }
};

}  // namespace

TEST_SUITE("graph-store") {

TEST_CASE("single node lands in its mark bucket") {
  for (Backend b : {Backend::Indexed, Backend::Legacy}) {
    HostGraph g(b);
    NodeId n = g.add_node({}, NodeMark::Grey, false);
    CHECK(g.node_count() == 1);
    CHECK(g.first_host_node(NodeMark::Grey) == n);
    CHECK(!g.first_host_node(NodeMark::Red).has_value());
    CHECK(g.get_label(n).empty());
  }
}

TEST_CASE("two grey nodes enumerate without repeats") {
  for (Backend b : {Backend::Indexed, Backend::Legacy}) {
    HostGraph g(b);
    NodeId n0 = g.add_node({}, NodeMark::Grey, false);
    NodeId n1 = g.add_node({}, NodeMark::Grey, false);
    auto first = g.first_host_node(NodeMark::Grey);
    REQUIRE(first.has_value());
    auto second = g.next_host_node(NodeMark::Grey, *first);
    REQUIRE(second.has_value());
    CHECK(*first != *second);
    CHECK(((first == n0 && second == n1) || (first == n1 && second == n0)));
    CHECK(!g.next_host_node(NodeMark::Grey, *second).has_value());
  }
}

TEST_CASE("rooted node registers") {
  HostGraph g;
  NodeId n = g.add_node(lbl(7), NodeMark::Red, true);
  CHECK(g.first_root_node() == n);
  CHECK(g.is_rooted(n));
  CHECK(!g.next_root_node(n).has_value());
}

TEST_CASE("delete_node") {
  HostGraph g;
  NodeId n = g.add_node({}, NodeMark::Grey, false);
  SUBCASE("isolated node goes away") {
    g.delete_node(n);
    CHECK(g.node_count() == 0);
    CHECK(!g.alive(n));
  }
  SUBCASE("a loop blocks deletion") {
    g.add_edge(n, n, {}, EdgeMark::Unmarked);
    CHECK_THROWS_AS(g.delete_node(n), NodeHasEdges);
  }
  SUBCASE("stale handles are rejected") {
    g.delete_node(n);
    CHECK_THROWS_AS(g.delete_node(n), StaleHandle);
    CHECK_THROWS_AS(g.get_mark(n), StaleHandle);
    CHECK_THROWS_AS((void)g.first_edge(n, EdgeMark::Unmarked, Orientation::Out), StaleHandle);
  }
}

TEST_CASE("add_edge bucket placement") {
  for (Backend b : {Backend::Indexed, Backend::Legacy}) {
    HostGraph g(b);
    NodeId s = g.add_node({}, NodeMark::Grey, false);
    NodeId t = g.add_node({}, NodeMark::Grey, false);
    SUBCASE("plain edge shows up out of the source and into the target") {
      EdgeId e = g.add_edge(s, t, {}, EdgeMark::Unmarked);
      CHECK(g.first_edge(s, EdgeMark::Unmarked, Orientation::Out) == e);
      CHECK(g.first_edge(t, EdgeMark::Unmarked, Orientation::In) == e);
      CHECK(!g.first_edge(s, EdgeMark::Unmarked, Orientation::Loop).has_value());
      CHECK(g.outdeg(s) == 1);
      CHECK(g.indeg(t) == 1);
    }
    SUBCASE("loops are their own orientation") {
      EdgeId e = g.add_edge(s, s, {}, EdgeMark::Unmarked);
      CHECK(g.first_edge(s, EdgeMark::Unmarked, Orientation::Loop) == e);
      CHECK(!g.first_edge(s, EdgeMark::Unmarked, Orientation::Out).has_value());
      CHECK(!g.first_edge(s, EdgeMark::Unmarked, Orientation::In).has_value());
      CHECK(g.outdeg(s) == 0);
      CHECK(g.indeg(s) == 0);
      CHECK(g.loopdeg(s) == 1);
    }
    SUBCASE("remarking moves the edge between buckets") {
      EdgeId e = g.add_edge(s, t, {}, EdgeMark::Unmarked);
      g.set_edge_mark(e, EdgeMark::Red);
      CHECK(g.first_edge(s, EdgeMark::Red, Orientation::Out) == e);
      CHECK(!g.first_edge(s, EdgeMark::Unmarked, Orientation::Out).has_value());
      CHECK(g.get_mark(e) == EdgeMark::Red);
    }
  }
}

TEST_CASE("delete_edge") {
  for (Backend b : {Backend::Indexed, Backend::Legacy}) {
    HostGraph g(b);
    NodeId s = g.add_node({}, NodeMark::Grey, false);
    NodeId t = g.add_node({}, NodeMark::Grey, false);
    SUBCASE("sole edge leaves every cell empty") {
      EdgeId e = g.add_edge(s, t, {}, EdgeMark::Red);
      g.delete_edge(e);
      for (int m = 0; m < kMarkCount; ++m)
        for (int o = 0; o < kOrientationCount; ++o) {
          CHECK(!g.first_edge(s, EdgeMark(m), Orientation(o)).has_value());
          CHECK(!g.first_edge(t, EdgeMark(m), Orientation(o)).has_value());
        }
      CHECK(g.edge_count() == 0);
    }
    SUBCASE("parallel edges are independent") {
      EdgeId e1 = g.add_edge(s, t, {}, EdgeMark::Unmarked);
      EdgeId e2 = g.add_edge(s, t, {}, EdgeMark::Unmarked);
      g.delete_edge(e1);
      CHECK(g.first_edge(s, EdgeMark::Unmarked, Orientation::Out) == e2);
      CHECK_THROWS_AS(g.delete_edge(e1), StaleHandle);
    }
  }
}

TEST_CASE("set_node_mark rebuckets") {
  HostGraph g;
  NodeId n = g.add_node({}, NodeMark::Grey, false);
  g.set_node_mark(n, NodeMark::Red);
  CHECK(!g.first_host_node(NodeMark::Grey).has_value());
  CHECK(g.first_host_node(NodeMark::Red) == n);
  // remark to the current mark keeps a single occurrence
  g.set_node_mark(n, NodeMark::Red);
  auto first = g.first_host_node(NodeMark::Red);
  CHECK(first == n);
  CHECK(!g.next_host_node(NodeMark::Red, *first).has_value());
}

TEST_CASE("root registry") {
  HostGraph g;
  NodeId a = g.add_node({}, NodeMark::Grey, true);
  NodeId b = g.add_node({}, NodeMark::Grey, false);
  SUBCASE("root then unroot") {
    g.set_root(a, false);
    CHECK(!g.first_root_node().has_value());
  }
  SUBCASE("two roots enumerate") {
    g.set_root(b, true);
    auto r1 = g.first_root_node();
    auto r2 = g.next_root_node(*r1);
    CHECK(((r1 == a && r2 == b) || (r1 == b && r2 == a)));
  }
  SUBCASE("setting root twice keeps one entry") {
    g.set_root(a, true);
    auto r1 = g.first_root_node();
    CHECK(r1 == a);
    CHECK(!g.next_root_node(*r1).has_value());
  }
  SUBCASE("unrooting mid-iteration invalidates the cursor, detectably") {
    g.set_root(b, true);
    auto r1 = g.first_root_node();
    g.set_root(*r1, false);
    CHECK_THROWS_AS((void)g.next_root_node(*r1), std::logic_error);
    // the registry itself stays consistent
    CHECK(g.root_count() == 1);
    g.check_invariants();
  }
}

TEST_CASE("node lookup cost, indexed vs legacy") {
  HostGraph idx(Backend::Indexed);
  HostGraph leg(Backend::Legacy);
  for (int i = 0; i < 1000; ++i) {
    idx.add_node({}, NodeMark::Unmarked, false);
    leg.add_node({}, NodeMark::Unmarked, false);
  }
  NodeId gi = idx.add_node({}, NodeMark::Grey, false);
  NodeId gl = leg.add_node({}, NodeMark::Grey, false);

  idx.reset_counters();
  CHECK(idx.first_host_node(NodeMark::Grey) == gi);
  CHECK(idx.counters().steps == 1);

  leg.reset_counters();
  CHECK(leg.first_host_node(NodeMark::Grey) == gl);
  CHECK(leg.counters().steps == 1001);
}

TEST_CASE("edge lookup cost on a star centre") {
  // centre with 8 unmarked in-edges; a (Red, In) probe finds nothing
  auto build = [](Backend b) {
    HostGraph g(b);
    NodeId c = g.add_node({}, NodeMark::Grey, false);
    for (int i = 0; i < 8; ++i) {
      NodeId s = g.add_node({}, NodeMark::Grey, false);
      g.add_edge(s, c, {}, EdgeMark::Unmarked);
    }
    return std::make_pair(std::move(g), c);
  };
  auto [idx, ci] = build(Backend::Indexed);
  idx.reset_counters();
  CHECK(!idx.first_edge(ci, EdgeMark::Red, Orientation::In).has_value());
  CHECK(idx.counters().steps == 1);
  CHECK(idx.counters().edge_entries == 0);

  auto [leg, cl] = build(Backend::Legacy);
  leg.reset_counters();
  CHECK(!leg.first_edge(cl, EdgeMark::Red, Orientation::In).has_value());
  CHECK(leg.counters().steps == 8);
}

TEST_CASE("matched flags") {
  HostGraph g;
  NodeId n = g.add_node({}, NodeMark::Grey, false);
  EdgeId e = g.add_edge(n, n, {}, EdgeMark::Unmarked);
  CHECK(!g.already_matched(n));
  g.set_matched(n);
  g.set_matched(e);
  CHECK(g.already_matched(n));
  CHECK(g.already_matched(e));
  CHECK(!g.matched_flags_clear());
  g.clear_matched(n);
  g.clear_matched(e);
  CHECK(g.matched_flags_clear());
}

TEST_CASE("edge endpoints") {
  HostGraph g;
  NodeId a = g.add_node(lbl(1), NodeMark::Grey, false);
  NodeId b = g.add_node(lbl(2), NodeMark::Grey, false);
  EdgeId e = g.add_edge(a, b, lbl(5), EdgeMark::Unmarked);
  CHECK(g.get_source(e) == a);
  CHECK(g.get_target(e) == b);
  CHECK(g.get_label(e) == lbl(5));
}

TEST_CASE("indexed step contract: one step per probe call") {
  HostGraph g(Backend::Indexed);
  std::vector<NodeId> ns;
  for (int i = 0; i < 10; ++i) ns.push_back(g.add_node({}, NodeMark::Grey, false));
  for (int i = 0; i + 1 < 10; ++i) g.add_edge(ns[i], ns[i + 1], {}, EdgeMark::Unmarked);

  auto charged = [&](auto&& fn) {
    uint64_t before = g.counters().steps;
    fn();
    return g.counters().steps - before;
  };
  CHECK(charged([&] { (void)g.first_host_node(NodeMark::Grey); }) == 1);
  CHECK(charged([&] { (void)g.first_host_node(NodeMark::Blue); }) == 1);
  CHECK(charged([&] { (void)g.next_host_node(NodeMark::Grey, ns[3]); }) == 1);
  CHECK(charged([&] { (void)g.first_root_node(); }) == 1);
  CHECK(charged([&] { (void)g.first_edge(ns[0], EdgeMark::Unmarked, Orientation::Out); }) == 1);
  CHECK(charged([&] { (void)g.first_edge(ns[0], EdgeMark::Red, Orientation::Loop); }) == 1);
  auto e = g.first_edge(ns[1], EdgeMark::Unmarked, Orientation::Out);
  CHECK(charged([&] { (void)g.next_edge(ns[1], EdgeMark::Unmarked, Orientation::Out, *e); }) == 1);
}

TEST_CASE("random mutations keep both backends equivalent") {
  std::mt19937_64 rng(20240817);
  Twin tw;
  auto pick_node = [&]() -> NodeId {
    return tw.live_nodes[rng() % tw.live_nodes.size()];
  };
  int checked = 0;
  for (int step = 0; step < 4000; ++step) {
    int op = int(rng() % 100);
    if (op < 28 || tw.live_nodes.empty()) {
      tw.add_node(lbl(int64_t(rng() % 5)), NodeMark(rng() % 5), rng() % 4 == 0);
    } else if (op < 50) {
      tw.add_edge(pick_node(), pick_node(), lbl(int64_t(rng() % 5)), EdgeMark(rng() % 5));
    } else if (op < 62 && !tw.live_edges.empty()) {
      size_t i = rng() % tw.live_edges.size();
      EdgeId e = tw.live_edges[i];
      tw.indexed.delete_edge(e);
      tw.legacy.delete_edge(e);
      tw.live_edges.erase(tw.live_edges.begin() + i);
    } else if (op < 70) {
      size_t i = rng() % tw.live_nodes.size();
      NodeId n = tw.live_nodes[i];
      if (tw.indexed.indeg(n) + tw.indexed.outdeg(n) + tw.indexed.loopdeg(n) == 0) {
        tw.indexed.delete_node(n);
        tw.legacy.delete_node(n);
        tw.live_nodes.erase(tw.live_nodes.begin() + i);
      }
    } else if (op < 80) {
      NodeId n = pick_node();
      NodeMark m = NodeMark(rng() % 5);
      tw.indexed.set_node_mark(n, m);
      tw.legacy.set_node_mark(n, m);
    } else if (op < 90 && !tw.live_edges.empty()) {
      EdgeId e = tw.live_edges[rng() % tw.live_edges.size()];
      EdgeMark m = EdgeMark(rng() % 5);
      tw.indexed.set_edge_mark(e, m);
      tw.legacy.set_edge_mark(e, m);
    } else {
      NodeId n = pick_node();
      bool r = rng() % 2 == 0;
      tw.indexed.set_root(n, r);
      tw.legacy.set_root(n, r);
    }
    if (step % 500 == 0) {
      tw.indexed.check_invariants();
      tw.legacy.check_invariants();
      CHECK(observably_equal(tw.indexed, tw.legacy));
      ++checked;
    }
  }
  tw.indexed.check_invariants();
  tw.legacy.check_invariants();
  CHECK(observably_equal(tw.indexed, tw.legacy));
  CHECK(checked > 0);
}

TEST_CASE("generators") {
  SUBCASE("star") {
    HostGraph g = generate({Family::Star, 9});
    CHECK(g.node_count() == 9);
    CHECK(g.edge_count() == 8);
  }
  SUBCASE("discrete") {
    HostGraph g = generate({Family::Discrete, 5});
    CHECK(g.node_count() == 5);
    CHECK(g.edge_count() == 0);
  }
  SUBCASE("kkstar counts") {
    FamilySpec spec;
    spec.kind = Family::KKStar;
    spec.size = 1;
    spec.k = 3;
    HostGraph g = generate(spec);
    CHECK(g.node_count() == 12);
    CHECK(g.edge_count() == 9);
  }
  SUBCASE("input contract") {
    for (Family f : {Family::List, Family::Cycle, Family::Grid, Family::BinaryTree,
                     Family::Star, Family::Discrete, Family::KKStar}) {
      HostGraph g = generate({f, 10});
      for (NodeId n : g.nodes()) {
        CHECK(g.get_mark(n) == NodeMark::Grey);
        CHECK(!g.is_rooted(n));
        CHECK(g.get_label(n).empty());
      }
      for (EdgeId e : g.edges()) CHECK(g.get_mark(e) == EdgeMark::Unmarked);
      g.check_invariants();
    }
  }
  SUBCASE("random digraph determinism and shape") {
    HostGraph a = random_digraph(5, 20, 99);
    HostGraph b = random_digraph(5, 20, 99);
    CHECK(observably_equal(a, b));
    CHECK(a.node_count() == 5);
    CHECK(a.edge_count() == 20);
    for (EdgeId e : a.edges()) CHECK(a.get_source(e) != a.get_target(e));
    HostGraph c = random_digraph(1, 0, 7);
    CHECK(c.node_count() == 1);
    CHECK_THROWS_AS(random_digraph(3, 7, 1), InvalidSize);
  }
}

}  // TEST_SUITE
