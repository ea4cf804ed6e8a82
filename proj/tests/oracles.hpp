#pragma once

// Test-side oracles. Each one recomputes a property from first principles
// (exhaustive enumeration, Kahn's algorithm, union-find, plain BFS) without
// touching the engine's search plans or the interpreter.

#include <deque>
#include <random>
#include <unordered_map>
#include <vector>

#include "rgt/engine.hpp"
#include "rgt/graph.hpp"

namespace rgt_test {

using namespace rgt;

// -- brute-force injective matcher --------------------------------------------

inline bool bf_node_ok(const HostGraph& g, const RuleNode& pat, NodeId h) {
  if (pat.mark && g.get_mark(h) != *pat.mark) return false;
  return g.is_rooted(h) == pat.rooted;
}

inline bool bf_edge_candidate(const HostGraph& g, const RuleEdge& pat, NodeId src_img,
                              NodeId tgt_img, EdgeId e) {
  if (pat.mark && g.get_mark(e) != *pat.mark) return false;
  NodeId s = g.get_source(e), t = g.get_target(e);
  if (s == src_img && t == tgt_img) return true;
  if (!pat.directed && s == tgt_img && t == src_img) return true;
  return false;
}

inline void bf_edges(const HostGraph& g, const Rule& rule, size_t ei,
                     const std::vector<NodeId>& nimg, std::vector<EdgeId>& eimg,
                     std::vector<EdgeId>& used, std::vector<Match>& out) {
  if (ei == rule.lhs.edges.size()) {
    // one deterministic binding attempt: node labels then edge labels
    Binding b(rule.vars.size());
    std::vector<int> bound;
    for (size_t i = 0; i < rule.lhs.nodes.size(); ++i)
      if (!unify_into(rule.lhs.nodes[i].label, rule.vars, g.get_label(nimg[i]), b, bound))
        return;
    for (size_t i = 0; i < rule.lhs.edges.size(); ++i)
      if (!unify_into(rule.lhs.edges[i].label, rule.vars, g.get_label(eimg[i]), b, bound))
        return;
    out.push_back(Match{nimg, eimg, b});
    return;
  }
  const RuleEdge& pat = rule.lhs.edges[ei];
  NodeId si = nimg[rule.lhs.node_index(pat.src)];
  NodeId ti = nimg[rule.lhs.node_index(pat.tgt)];
  for (EdgeId e : g.edges()) {
    bool taken = false;
    for (EdgeId u : used)
      if (u == e) taken = true;
    if (taken) continue;
    if (!bf_edge_candidate(g, pat, si, ti, e)) continue;
    eimg[ei] = e;
    used.push_back(e);
    bf_edges(g, rule, ei + 1, nimg, eimg, used, out);
    used.pop_back();
  }
}

inline void bf_nodes(const HostGraph& g, const Rule& rule, size_t ni,
                     std::vector<NodeId>& nimg, std::vector<NodeId>& used,
                     std::vector<Match>& out) {
  if (ni == rule.lhs.nodes.size()) {
    std::vector<EdgeId> eimg(rule.lhs.edges.size());
    std::vector<EdgeId> eused;
    bf_edges(g, rule, 0, nimg, eimg, eused, out);
    return;
  }
  for (NodeId h : g.nodes()) {
    bool taken = false;
    for (NodeId u : used)
      if (u == h) taken = true;
    if (taken) continue;
    if (!bf_node_ok(g, rule.lhs.nodes[ni], h)) continue;
    nimg[ni] = h;
    used.push_back(h);
    bf_nodes(g, rule, ni + 1, nimg, used, out);
    used.pop_back();
  }
}

/// Every valid match, by exhaustive enumeration over injective assignments.
inline std::vector<Match> brute_force_matches(const HostGraph& g, const Rule& rule) {
  std::vector<Match> out;
  std::vector<NodeId> nimg(rule.lhs.nodes.size());
  std::vector<NodeId> used;
  bf_nodes(g, rule, 0, nimg, used, out);
  return out;
}

/// Structure/mark/root/label validity of a specific match.
inline bool is_valid_match(const HostGraph& g, const Rule& rule, const Match& m) {
  if (m.node_images.size() != rule.lhs.nodes.size()) return false;
  if (m.edge_images.size() != rule.lhs.edges.size()) return false;
  for (size_t i = 0; i < m.node_images.size(); ++i) {
    if (!g.alive(m.node_images[i])) return false;
    if (!bf_node_ok(g, rule.lhs.nodes[i], m.node_images[i])) return false;
    for (size_t j = i + 1; j < m.node_images.size(); ++j)
      if (m.node_images[i] == m.node_images[j]) return false;
    if (eval(rule.lhs.nodes[i].label, rule.vars, m.binding) != g.get_label(m.node_images[i]))
      return false;
  }
  for (size_t i = 0; i < m.edge_images.size(); ++i) {
    EdgeId e = m.edge_images[i];
    if (!g.alive(e)) return false;
    const RuleEdge& pat = rule.lhs.edges[i];
    NodeId si = m.node_images[rule.lhs.node_index(pat.src)];
    NodeId ti = m.node_images[rule.lhs.node_index(pat.tgt)];
    if (!bf_edge_candidate(g, pat, si, ti, e)) return false;
    for (size_t j = i + 1; j < m.edge_images.size(); ++j)
      if (m.edge_images[i] == m.edge_images[j]) return false;
    if (eval(pat.label, rule.vars, m.binding) != g.get_label(e)) return false;
  }
  return true;
}

// -- graph-algorithm oracles ----------------------------------------------------

struct UnionFind {
  std::vector<uint32_t> parent;
  explicit UnionFind(size_t n) : parent(n) {
    for (size_t i = 0; i < n; ++i) parent[i] = uint32_t(i);
  }
  uint32_t find(uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(uint32_t a, uint32_t b) { parent[find(a)] = find(b); }
};

/// Component representative per live node index, ignoring edge direction.
inline std::unordered_map<uint32_t, uint32_t> component_map(const HostGraph& g) {
  uint32_t max_index = 0;
  for (NodeId n : g.nodes()) max_index = std::max(max_index, n.index + 1);
  UnionFind uf(max_index);
  for (EdgeId e : g.edges()) uf.unite(g.get_source(e).index, g.get_target(e).index);
  std::unordered_map<uint32_t, uint32_t> out;
  for (NodeId n : g.nodes()) out[n.index] = uf.find(n.index);
  return out;
}

inline size_t component_count(const HostGraph& g) {
  auto cm = component_map(g);
  std::vector<uint32_t> reps;
  for (auto& [n, r] : cm) reps.push_back(r);
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps.size();
}

/// Kahn's algorithm; true iff some directed cycle (including loops) exists.
inline bool has_directed_cycle(const HostGraph& g) {
  std::unordered_map<uint32_t, uint32_t> indeg;
  std::unordered_map<uint32_t, std::vector<uint32_t>> succ;
  for (NodeId n : g.nodes()) indeg[n.index] = 0;
  for (EdgeId e : g.edges()) {
    uint32_t s = g.get_source(e).index, t = g.get_target(e).index;
    if (s == t) return true;
    succ[s].push_back(t);
    ++indeg[t];
  }
  std::deque<uint32_t> ready;
  for (auto& [n, d] : indeg)
    if (d == 0) ready.push_back(n);
  size_t seen = 0;
  while (!ready.empty()) {
    uint32_t n = ready.front();
    ready.pop_front();
    ++seen;
    for (uint32_t t : succ[n])
      if (--indeg[t] == 0) ready.push_back(t);
  }
  return seen != indeg.size();
}

/// Plain undirected BFS distance from seed, node index -> layer.
inline std::unordered_map<uint32_t, int> undirected_distances(const HostGraph& g, NodeId seed) {
  std::unordered_map<uint32_t, std::vector<uint32_t>> adj;
  for (EdgeId e : g.edges()) {
    uint32_t s = g.get_source(e).index, t = g.get_target(e).index;
    adj[s].push_back(t);
    adj[t].push_back(s);
  }
  std::unordered_map<uint32_t, int> dist;
  std::deque<uint32_t> q{seed.index};
  dist[seed.index] = 0;
  while (!q.empty()) {
    uint32_t n = q.front();
    q.pop_front();
    for (uint32_t m : adj[n]) {
      if (dist.count(m)) continue;
      dist[m] = dist[n] + 1;
      q.push_back(m);
    }
  }
  return dist;
}

// -- random hosts -----------------------------------------------------------------

/// Small host graph with varied marks, roots, labels, loops and parallel
/// edges; the workout input for match-completeness and rollback properties.
inline HostGraph random_host(std::mt19937_64& rng, int max_nodes,
                             Backend backend = Backend::Indexed) {
  HostGraph g(backend);
  static const std::vector<Label> pool = {
      {}, {Atom{int64_t{1}}}, {Atom{int64_t{2}}}, {Atom{std::string("a")}},
      {Atom{int64_t{1}}, Atom{int64_t{2}}}, {Atom{std::string("a")}, Atom{int64_t{1}}}};
  size_t n = rng() % (max_nodes + 1);
  std::vector<NodeId> ns;
  for (size_t i = 0; i < n; ++i)
    ns.push_back(g.add_node(pool[rng() % pool.size()], NodeMark(rng() % 5), rng() % 5 == 0));
  if (!ns.empty()) {
    size_t m = rng() % (2 * n + 1);
    for (size_t i = 0; i < m; ++i)
      g.add_edge(ns[rng() % n], ns[rng() % n], pool[rng() % pool.size()], EdgeMark(rng() % 5));
  }
  return g;
}

}  // namespace rgt_test
