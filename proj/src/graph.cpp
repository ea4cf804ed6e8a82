#include "rgt/graph.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

namespace rgt {

namespace {
std::atomic<uint64_t> g_next_serial{1};
}

std::string_view to_string(Backend b) {
  return b == Backend::Indexed ? "indexed" : "legacy";
}

std::optional<Backend> backend_from_string(std::string_view s) {
  if (s == "indexed") return Backend::Indexed;
  if (s == "legacy") return Backend::Legacy;
  return std::nullopt;
}

HostGraph::HostGraph(Backend backend) : backend_(backend) {
  node_head_.fill(kNil);
  node_tail_.fill(kNil);
  serial_ = g_next_serial.fetch_add(1);
}

HostGraph::HostGraph(const HostGraph& other) : HostGraph(other.backend_) {
  uint64_t serial = serial_;
  *this = other;
  serial_ = serial;
}

HostGraph& HostGraph::operator=(const HostGraph& other) {
  if (this == &other) return *this;
  uint64_t serial = serial_ == 0 ? g_next_serial.fetch_add(1) : serial_;
  backend_ = other.backend_;
  nodes_ = other.nodes_;
  edges_ = other.edges_;
  free_nodes_ = other.free_nodes_;
  free_edges_ = other.free_edges_;
  node_head_ = other.node_head_;
  node_tail_ = other.node_tail_;
  root_head_ = other.root_head_;
  root_tail_ = other.root_tail_;
  node_count_ = other.node_count_;
  edge_count_ = other.edge_count_;
  root_count_ = other.root_count_;
  version_ = other.version_;
  counters_ = other.counters_;
  serial_ = serial;
  return *this;
}

const HostGraph::NodeRec& HostGraph::node_at(NodeId id) const {
  if (id.index >= nodes_.size()) throw StaleHandle{};
  const NodeRec& rec = nodes_[id.index];
  if (!rec.live || rec.gen != id.gen) throw StaleHandle{};
  return rec;
}

HostGraph::NodeRec& HostGraph::node_at(NodeId id) {
  return const_cast<NodeRec&>(static_cast<const HostGraph*>(this)->node_at(id));
}

const HostGraph::EdgeRec& HostGraph::edge_at(EdgeId id) const {
  if (id.index >= edges_.size()) throw StaleHandle{};
  const EdgeRec& rec = edges_[id.index];
  if (!rec.live || rec.gen != id.gen) throw StaleHandle{};
  return rec;
}

HostGraph::EdgeRec& HostGraph::edge_at(EdgeId id) {
  return const_cast<EdgeRec&>(static_cast<const HostGraph*>(this)->edge_at(id));
}

int HostGraph::src_cell(const EdgeRec& e) const {
  bool loop = e.src.index == e.tgt.index;
  if (backend_ == Backend::Legacy) return cell(EdgeMark::Unmarked, Orientation::Out);
  return cell(e.mark, loop ? Orientation::Loop : Orientation::Out);
}

int HostGraph::tgt_cell(const EdgeRec& e) const {
  if (backend_ == Backend::Legacy) return cell(EdgeMark::Unmarked, Orientation::In);
  return cell(e.mark, Orientation::In);
}

// -- intrusive list plumbing -------------------------------------------------
//
// Every cell list is homogeneous: out/loop cells hold only src-side members,
// in cells hold only tgt-side members, on both backends. So neighbours in a
// list always use the same pair of link fields as the member itself.

void HostGraph::link_src(uint32_t node, int c, uint32_t e) {
  NodeRec& n = nodes_[node];
  EdgeRec& rec = edges_[e];
  rec.src_prev = n.edge_tail[c];
  rec.src_next = kNil;
  if (n.edge_tail[c] != kNil) edges_[n.edge_tail[c]].src_next = e;
  else n.edge_head[c] = e;
  n.edge_tail[c] = e;
}

void HostGraph::unlink_src(uint32_t node, int c, uint32_t e) {
  NodeRec& n = nodes_[node];
  EdgeRec& rec = edges_[e];
  if (rec.src_prev != kNil) edges_[rec.src_prev].src_next = rec.src_next;
  else n.edge_head[c] = rec.src_next;
  if (rec.src_next != kNil) edges_[rec.src_next].src_prev = rec.src_prev;
  else n.edge_tail[c] = rec.src_prev;
  rec.src_prev = rec.src_next = kNil;
}

void HostGraph::link_tgt(uint32_t node, int c, uint32_t e) {
  NodeRec& n = nodes_[node];
  EdgeRec& rec = edges_[e];
  rec.tgt_prev = n.edge_tail[c];
  rec.tgt_next = kNil;
  if (n.edge_tail[c] != kNil) edges_[n.edge_tail[c]].tgt_next = e;
  else n.edge_head[c] = e;
  n.edge_tail[c] = e;
}

void HostGraph::unlink_tgt(uint32_t node, int c, uint32_t e) {
  NodeRec& n = nodes_[node];
  EdgeRec& rec = edges_[e];
  if (rec.tgt_prev != kNil) edges_[rec.tgt_prev].tgt_next = rec.tgt_next;
  else n.edge_head[c] = rec.tgt_next;
  if (rec.tgt_next != kNil) edges_[rec.tgt_next].tgt_prev = rec.tgt_prev;
  else n.edge_tail[c] = rec.tgt_prev;
  rec.tgt_prev = rec.tgt_next = kNil;
}

void HostGraph::link_edge(uint32_t e) {
  EdgeRec& rec = edges_[e];
  bool loop = rec.src.index == rec.tgt.index;
  link_src(rec.src.index, src_cell(rec), e);
  if (!loop) link_tgt(rec.tgt.index, tgt_cell(rec), e);
}

void HostGraph::unlink_edge(uint32_t e) {
  EdgeRec& rec = edges_[e];
  bool loop = rec.src.index == rec.tgt.index;
  unlink_src(rec.src.index, src_cell(rec), e);
  if (!loop) unlink_tgt(rec.tgt.index, tgt_cell(rec), e);
}

void HostGraph::bump_degrees(const EdgeRec& e, int delta) {
  if (e.src.index == e.tgt.index) {
    nodes_[e.src.index].loopdeg += delta;
  } else {
    nodes_[e.src.index].outdeg += delta;
    nodes_[e.tgt.index].indeg += delta;
  }
}

void HostGraph::link_node_bucket(uint32_t n) {
  NodeRec& rec = nodes_[n];
  int b = int(rec.mark);
  rec.bucket_prev = node_tail_[b];
  rec.bucket_next = kNil;
  if (node_tail_[b] != kNil) nodes_[node_tail_[b]].bucket_next = n;
  else node_head_[b] = n;
  node_tail_[b] = n;
}

void HostGraph::unlink_node_bucket(uint32_t n) {
  NodeRec& rec = nodes_[n];
  int b = int(rec.mark);
  if (rec.bucket_prev != kNil) nodes_[rec.bucket_prev].bucket_next = rec.bucket_next;
  else node_head_[b] = rec.bucket_next;
  if (rec.bucket_next != kNil) nodes_[rec.bucket_next].bucket_prev = rec.bucket_prev;
  else node_tail_[b] = rec.bucket_prev;
  rec.bucket_prev = rec.bucket_next = kNil;
}

void HostGraph::link_root(uint32_t n) {
  NodeRec& rec = nodes_[n];
  rec.root_prev = root_tail_;
  rec.root_next = kNil;
  if (root_tail_ != kNil) nodes_[root_tail_].root_next = n;
  else root_head_ = n;
  root_tail_ = n;
  ++root_count_;
}

void HostGraph::unlink_root(uint32_t n) {
  NodeRec& rec = nodes_[n];
  if (rec.root_prev != kNil) nodes_[rec.root_prev].root_next = rec.root_next;
  else root_head_ = rec.root_next;
  if (rec.root_next != kNil) nodes_[rec.root_next].root_prev = rec.root_prev;
  else root_tail_ = rec.root_prev;
  rec.root_prev = rec.root_next = kNil;
  --root_count_;
}

// -- mutation -----------------------------------------------------------------

NodeId HostGraph::add_node(Label label, NodeMark mark, bool rooted) {
  uint32_t index;
  if (!free_nodes_.empty()) {
    index = free_nodes_.back();
    free_nodes_.pop_back();
  } else {
    index = uint32_t(nodes_.size());
    nodes_.emplace_back();
  }
  NodeRec& rec = nodes_[index];
  rec.label = std::move(label);
  rec.mark = mark;
  rec.live = true;
  rec.rooted = rooted;
  rec.matched = false;
  rec.indeg = rec.outdeg = rec.loopdeg = 0;
  if (backend_ == Backend::Indexed) link_node_bucket(index);
  if (rooted) link_root(index);
  ++node_count_;
  ++version_;
  return NodeId{index, rec.gen};
}

void HostGraph::delete_node(NodeId id) {
  NodeRec& rec = node_at(id);
  if (rec.indeg + rec.outdeg + rec.loopdeg != 0) throw NodeHasEdges{};
  if (backend_ == Backend::Indexed) unlink_node_bucket(id.index);
  if (rec.rooted) unlink_root(id.index);
  rec.live = false;
  rec.rooted = false;
  rec.matched = false;
  ++rec.gen;
  free_nodes_.push_back(id.index);
  --node_count_;
  ++version_;
}

EdgeId HostGraph::add_edge(NodeId src, NodeId tgt, Label label, EdgeMark mark) {
  node_at(src);
  node_at(tgt);
  uint32_t index;
  if (!free_edges_.empty()) {
    index = free_edges_.back();
    free_edges_.pop_back();
  } else {
    index = uint32_t(edges_.size());
    edges_.emplace_back();
  }
  EdgeRec& rec = edges_[index];
  rec.label = std::move(label);
  rec.src = src;
  rec.tgt = tgt;
  rec.mark = mark;
  rec.live = true;
  rec.matched = false;
  link_edge(index);
  bump_degrees(rec, +1);
  ++edge_count_;
  ++version_;
  return EdgeId{index, rec.gen};
}

void HostGraph::delete_edge(EdgeId id) {
  EdgeRec& rec = edge_at(id);
  unlink_edge(id.index);
  bump_degrees(rec, -1);
  rec.live = false;
  rec.matched = false;
  ++rec.gen;
  free_edges_.push_back(id.index);
  --edge_count_;
  ++version_;
}

void HostGraph::set_node_mark(NodeId id, NodeMark m) {
  NodeRec& rec = node_at(id);
  if (rec.mark != m) {
    if (backend_ == Backend::Indexed) {
      unlink_node_bucket(id.index);
      rec.mark = m;
      link_node_bucket(id.index);
    } else {
      rec.mark = m;
    }
  }
  ++version_;
}

void HostGraph::set_edge_mark(EdgeId id, EdgeMark m) {
  EdgeRec& rec = edge_at(id);
  if (rec.mark != m) {
    if (backend_ == Backend::Indexed) {
      unlink_edge(id.index);
      rec.mark = m;
      link_edge(id.index);
    } else {
      rec.mark = m;
    }
  }
  ++version_;
}

void HostGraph::set_node_label(NodeId id, Label label) {
  node_at(id).label = std::move(label);
  ++version_;
}

void HostGraph::set_edge_label(EdgeId id, Label label) {
  edge_at(id).label = std::move(label);
  ++version_;
}

void HostGraph::set_root(NodeId id, bool rooted) {
  NodeRec& rec = node_at(id);
  if (rec.rooted != rooted) {
    if (rooted) link_root(id.index);
    else unlink_root(id.index);
    rec.rooted = rooted;
  }
  ++version_;
}

void HostGraph::restore_node(NodeId id, Label label, NodeMark mark, bool rooted) {
  if (free_nodes_.empty() || free_nodes_.back() != id.index)
    throw std::logic_error("restore_node out of LIFO order");
  NodeRec& rec = nodes_[id.index];
  if (rec.live || rec.gen <= id.gen)
    throw std::logic_error("restore_node generation mismatch");
  free_nodes_.pop_back();
  // rewind the slot to the deleted incarnation
  rec.gen = id.gen;
  rec.live = true;
  rec.label = std::move(label);
  rec.mark = mark;
  rec.rooted = rooted;
  rec.matched = false;
  rec.indeg = rec.outdeg = rec.loopdeg = 0;
  if (backend_ == Backend::Indexed) link_node_bucket(id.index);
  if (rooted) link_root(id.index);
  ++node_count_;
  ++version_;
}

void HostGraph::restore_edge(EdgeId id, NodeId src, NodeId tgt, Label label, EdgeMark mark) {
  if (free_edges_.empty() || free_edges_.back() != id.index)
    throw std::logic_error("restore_edge out of LIFO order");
  EdgeRec& rec = edges_[id.index];
  if (rec.live || rec.gen <= id.gen)
    throw std::logic_error("restore_edge generation mismatch");
  node_at(src);
  node_at(tgt);
  free_edges_.pop_back();
  rec.gen = id.gen;
  rec.live = true;
  rec.label = std::move(label);
  rec.src = src;
  rec.tgt = tgt;
  rec.mark = mark;
  rec.matched = false;
  link_edge(id.index);
  bump_degrees(rec, +1);
  ++edge_count_;
  ++version_;
}

// -- traversal ----------------------------------------------------------------

std::optional<NodeId> HostGraph::first_host_node(NodeMark m) const {
  if (backend_ == Backend::Indexed) {
    ++counters_.steps;
    uint32_t head = node_head_[int(m)];
    if (head == kNil) return std::nullopt;
    ++counters_.node_entries;
    return NodeId{head, nodes_[head].gen};
  }
  for (uint32_t i = 0; i < nodes_.size(); ++i) {
    if (!nodes_[i].live) continue;
    ++counters_.steps;
    ++counters_.node_entries;
    if (nodes_[i].mark == m) return NodeId{i, nodes_[i].gen};
  }
  return std::nullopt;
}

std::optional<NodeId> HostGraph::next_host_node(NodeMark m, NodeId id) const {
  const NodeRec& rec = node_at(id);
  if (rec.mark != m) throw std::logic_error("next_host_node: node not in that bucket");
  if (backend_ == Backend::Indexed) {
    ++counters_.steps;
    if (rec.bucket_next == kNil) return std::nullopt;
    ++counters_.node_entries;
    return NodeId{rec.bucket_next, nodes_[rec.bucket_next].gen};
  }
  for (uint32_t i = id.index + 1; i < nodes_.size(); ++i) {
    if (!nodes_[i].live) continue;
    ++counters_.steps;
    ++counters_.node_entries;
    if (nodes_[i].mark == m) return NodeId{i, nodes_[i].gen};
  }
  return std::nullopt;
}

std::optional<NodeId> HostGraph::first_root_node() const {
  ++counters_.steps;
  ++counters_.root_probes;
  if (root_head_ == kNil) return std::nullopt;
  return NodeId{root_head_, nodes_[root_head_].gen};
}

std::optional<NodeId> HostGraph::next_root_node(NodeId id) const {
  const NodeRec& rec = node_at(id);
  if (!rec.rooted) throw std::logic_error("next_root_node: node is not rooted");
  ++counters_.steps;
  ++counters_.root_probes;
  if (rec.root_next == kNil) return std::nullopt;
  return NodeId{rec.root_next, nodes_[rec.root_next].gen};
}

std::optional<EdgeId> HostGraph::scan_legacy_edges(EdgeMark m, Orientation o,
                                                   uint32_t start) const {
  // Loops live in the out list; In scans the tgt-side list.
  uint32_t cur = start;
  while (cur != kNil) {
    const EdgeRec& e = edges_[cur];
    ++counters_.steps;
    ++counters_.edge_entries;
    bool loop = e.src.index == e.tgt.index;
    bool ok = e.mark == m;
    if (o == Orientation::Out) ok = ok && !loop;
    if (o == Orientation::Loop) ok = ok && loop;
    if (ok) return EdgeId{cur, e.gen};
    cur = (o == Orientation::In) ? e.tgt_next : e.src_next;
  }
  return std::nullopt;
}

std::optional<EdgeId> HostGraph::first_edge(NodeId n, EdgeMark m, Orientation o) const {
  const NodeRec& rec = node_at(n);
  if (backend_ == Backend::Indexed) {
    ++counters_.steps;
    uint32_t head = rec.edge_head[cell(m, o)];
    if (head == kNil) return std::nullopt;
    ++counters_.edge_entries;
    return EdgeId{head, edges_[head].gen};
  }
  int c = cell(EdgeMark::Unmarked, o == Orientation::In ? Orientation::In : Orientation::Out);
  return scan_legacy_edges(m, o, rec.edge_head[c]);
}

std::optional<EdgeId> HostGraph::next_edge(NodeId n, EdgeMark m, Orientation o,
                                           EdgeId e) const {
  node_at(n);
  const EdgeRec& rec = edge_at(e);
  bool loop = rec.src.index == rec.tgt.index;
  bool src_side = (o != Orientation::In);
  if (src_side ? rec.src.index != n.index : rec.tgt.index != n.index)
    throw std::logic_error("next_edge: edge not incident on that side");
  if (backend_ == Backend::Indexed) {
    if (rec.mark != m || (o == Orientation::Loop) != loop)
      throw std::logic_error("next_edge: edge not in that bucket");
    ++counters_.steps;
    uint32_t next = src_side ? rec.src_next : rec.tgt_next;
    if (next == kNil) return std::nullopt;
    ++counters_.edge_entries;
    return EdgeId{next, edges_[next].gen};
  }
  return scan_legacy_edges(m, o, src_side ? rec.src_next : rec.tgt_next);
}

// -- accessors ---------------------------------------------------------------

bool HostGraph::alive(NodeId id) const {
  return id.index < nodes_.size() && nodes_[id.index].live && nodes_[id.index].gen == id.gen;
}

bool HostGraph::alive(EdgeId id) const {
  return id.index < edges_.size() && edges_[id.index].live && edges_[id.index].gen == id.gen;
}

NodeMark HostGraph::get_mark(NodeId id) const { return node_at(id).mark; }
EdgeMark HostGraph::get_mark(EdgeId id) const { return edge_at(id).mark; }
const Label& HostGraph::get_label(NodeId id) const { return node_at(id).label; }
const Label& HostGraph::get_label(EdgeId id) const { return edge_at(id).label; }
bool HostGraph::is_rooted(NodeId id) const { return node_at(id).rooted; }
NodeId HostGraph::get_source(EdgeId id) const { return edge_at(id).src; }
NodeId HostGraph::get_target(EdgeId id) const { return edge_at(id).tgt; }
bool HostGraph::is_loop(EdgeId id) const {
  const EdgeRec& rec = edge_at(id);
  return rec.src.index == rec.tgt.index;
}
uint32_t HostGraph::indeg(NodeId id) const { return node_at(id).indeg; }
uint32_t HostGraph::outdeg(NodeId id) const { return node_at(id).outdeg; }
uint32_t HostGraph::loopdeg(NodeId id) const { return node_at(id).loopdeg; }

bool HostGraph::already_matched(NodeId id) const { return node_at(id).matched; }
bool HostGraph::already_matched(EdgeId id) const { return edge_at(id).matched; }
void HostGraph::set_matched(NodeId id) { node_at(id).matched = true; }
void HostGraph::set_matched(EdgeId id) { edge_at(id).matched = true; }
void HostGraph::clear_matched(NodeId id) { node_at(id).matched = false; }
void HostGraph::clear_matched(EdgeId id) { edge_at(id).matched = false; }

bool HostGraph::matched_flags_clear() const {
  for (const NodeRec& n : nodes_)
    if (n.live && n.matched) return false;
  for (const EdgeRec& e : edges_)
    if (e.live && e.matched) return false;
  return true;
}

std::vector<NodeId> HostGraph::nodes() const {
  std::vector<NodeId> out;
  out.reserve(node_count_);
  for (uint32_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].live) out.push_back(NodeId{i, nodes_[i].gen});
  return out;
}

std::vector<EdgeId> HostGraph::edges() const {
  std::vector<EdgeId> out;
  out.reserve(edge_count_);
  for (uint32_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].live) out.push_back(EdgeId{i, edges_[i].gen});
  return out;
}

// -- consistency ---------------------------------------------------------------

namespace {
[[noreturn]] void violated(const std::string& what) {
  throw std::logic_error("host graph invariant violated: " + what);
}
}  // namespace

void HostGraph::check_invariants() const {
  size_t live_nodes = 0, live_edges = 0, roots = 0;
  for (uint32_t i = 0; i < nodes_.size(); ++i) {
    const NodeRec& n = nodes_[i];
    if (!n.live) continue;
    ++live_nodes;
    if (n.rooted) ++roots;
    uint32_t ind = 0, outd = 0, loopd = 0;
    for (uint32_t j = 0; j < edges_.size(); ++j) {
      const EdgeRec& e = edges_[j];
      if (!e.live) continue;
      bool loop = e.src.index == e.tgt.index;
      if (e.src.index == i && loop) ++loopd;
      else if (e.src.index == i) ++outd;
      if (e.tgt.index == i && !loop) ++ind;
    }
    if (ind != n.indeg || outd != n.outdeg || loopd != n.loopdeg)
      violated("degree counters out of sync");
    // walk every cell this node owns; collect membership
    uint32_t found = 0;
    for (int c = 0; c < kCells; ++c) {
      uint32_t cur = n.edge_head[c];
      uint32_t steps = 0;
      while (cur != kNil) {
        const EdgeRec& e = edges_[cur];
        if (!e.live) violated("dead edge linked in a bucket");
        bool loop = e.src.index == e.tgt.index;
        bool src_side = e.src.index == i && src_cell(e) == c;
        bool tgt_side = !loop && e.tgt.index == i && tgt_cell(e) == c;
        if (!src_side && !tgt_side) violated("edge linked in a foreign bucket");
        if (backend_ == Backend::Indexed) {
          Orientation o = Orientation(c % kOrientationCount);
          EdgeMark m = EdgeMark(c / kOrientationCount);
          if (e.mark != m) violated("edge bucket mark fidelity");
          if ((o == Orientation::Loop) != loop) violated("loop classification");
          if (o == Orientation::In && !tgt_side) violated("in bucket holds non-target edge");
          if (o != Orientation::In && !src_side) violated("out/loop bucket holds non-source edge");
        }
        ++found;
        cur = src_side ? e.src_next : e.tgt_next;
        if (++steps > edges_.size() + 1) violated("bucket list cycle");
      }
    }
    if (found != ind + outd + loopd) violated("bucket partition does not cover incident edges");
  }
  for (uint32_t j = 0; j < edges_.size(); ++j) {
    const EdgeRec& e = edges_[j];
    if (!e.live) continue;
    ++live_edges;
    if (!alive(e.src) || !alive(e.tgt)) violated("edge endpoint dead");
  }
  if (live_nodes != node_count_) violated("node count");
  if (live_edges != edge_count_) violated("edge count");
  if (roots != root_count_) violated("root count");

  // root registry linkage
  size_t reg = 0;
  for (uint32_t cur = root_head_; cur != kNil; cur = nodes_[cur].root_next) {
    if (!nodes_[cur].live || !nodes_[cur].rooted) violated("root registry holds non-root");
    if (++reg > nodes_.size() + 1) violated("root registry cycle");
  }
  if (reg != root_count_) violated("root registry size");

  if (backend_ == Backend::Indexed) {
    size_t bucketed = 0;
    for (int m = 0; m < kMarkCount; ++m) {
      size_t steps = 0;
      for (uint32_t cur = node_head_[m]; cur != kNil; cur = nodes_[cur].bucket_next) {
        const NodeRec& n = nodes_[cur];
        if (!n.live) violated("dead node in a mark bucket");
        if (int(n.mark) != m) violated("node bucket mark fidelity");
        ++bucketed;
        if (++steps > nodes_.size() + 1) violated("node bucket cycle");
      }
    }
    if (bucketed != node_count_) violated("node buckets do not partition the nodes");
  }

  for (uint32_t f : free_nodes_)
    if (f >= nodes_.size() || nodes_[f].live) violated("free node list holds a live slot");
  for (uint32_t f : free_edges_)
    if (f >= edges_.size() || edges_[f].live) violated("free edge list holds a live slot");
  if (free_nodes_.size() + node_count_ != nodes_.size()) violated("node arena accounting");
  if (free_edges_.size() + edge_count_ != edges_.size()) violated("edge arena accounting");
}

bool observably_equal(const HostGraph& a, const HostGraph& b) {
  if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count() ||
      a.root_count() != b.root_count())
    return false;
  for (NodeId id : a.nodes()) {
    if (!b.alive(id)) return false;
    if (a.get_label(id) != b.get_label(id)) return false;
    if (a.get_mark(id) != b.get_mark(id)) return false;
    if (a.is_rooted(id) != b.is_rooted(id)) return false;
    if (a.indeg(id) != b.indeg(id) || a.outdeg(id) != b.outdeg(id) ||
        a.loopdeg(id) != b.loopdeg(id))
      return false;
  }
  for (EdgeId id : a.edges()) {
    if (!b.alive(id)) return false;
    if (a.get_label(id) != b.get_label(id)) return false;
    if (a.get_mark(id) != b.get_mark(id)) return false;
    if (a.get_source(id) != b.get_source(id)) return false;
    if (a.get_target(id) != b.get_target(id)) return false;
  }
  return true;
}

}  // namespace rgt
