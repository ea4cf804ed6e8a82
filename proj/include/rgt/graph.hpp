#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "rgt/counters.hpp"
#include "rgt/errors.hpp"
#include "rgt/ids.hpp"
#include "rgt/label.hpp"
#include "rgt/marks.hpp"

namespace rgt {

enum class Backend : uint8_t { Indexed, Legacy };

std::string_view to_string(Backend b);
std::optional<Backend> backend_from_string(std::string_view s);

/// Mutable labelled directed host graph with two interchangeable storage
/// backends.
///
/// Indexed keeps five global node lists (one per node mark), a per-node 5x3
/// array of edge lists bucketed by (edge mark, orientation), and a root
/// registry; every first_/next_ probe is O(1) and charges one step. Legacy
/// models the older layout: one global node sequence and two edge lists per
/// node (out and in, loops stored in out); probes scan past items with the
/// wrong mark, charging one step per entry inspected.
///
/// Records live in a generation-checked arena. Bucket membership uses
/// intrusive doubly-linked lists so unlink is O(1); insertion is at the tail,
/// so enumeration within a bucket is in insertion (or most-recent-remark)
/// order. Freed slots are reused LIFO.
///
/// Single-writer: a graph belongs to one execution context at a time and has
/// no internal locking. first_/next_ cursors are defined only while the
/// current item stays in its bucket; mutating mid-iteration invalidates the
/// cursor, which the store detects rather than corrupting state.
class HostGraph {
 public:
  explicit HostGraph(Backend backend = Backend::Indexed);
  HostGraph(const HostGraph& other);
  HostGraph& operator=(const HostGraph& other);
  HostGraph(HostGraph&&) noexcept = default;
  HostGraph& operator=(HostGraph&&) noexcept = default;

  Backend backend() const { return backend_; }

  /// Identity of this graph object; copies get a fresh serial.
  uint64_t serial() const { return serial_; }
  /// Bumped by every mutation. Used by undo logs to detect lineage breaks.
  uint64_t version() const { return version_; }

  // -- mutation ------------------------------------------------------------

  NodeId add_node(Label label, NodeMark mark, bool rooted);
  /// Requires zero incident edges (including loops).
  void delete_node(NodeId id);
  EdgeId add_edge(NodeId src, NodeId tgt, Label label, EdgeMark mark);
  void delete_edge(EdgeId id);
  void set_node_mark(NodeId id, NodeMark m);
  void set_edge_mark(EdgeId id, EdgeMark m);
  void set_node_label(NodeId id, Label label);
  void set_edge_label(EdgeId id, Label label);
  void set_root(NodeId id, bool rooted);

  /// Revive the item a delete removed, with its original handle. Only valid
  /// while the freed slot is still on top of the free list, i.e. when undoing
  /// mutations in exact reverse order.
  void restore_node(NodeId id, Label label, NodeMark mark, bool rooted);
  void restore_edge(EdgeId id, NodeId src, NodeId tgt, Label label, EdgeMark mark);

  // -- traversal (charges the step counters) --------------------------------

  std::optional<NodeId> first_host_node(NodeMark m) const;
  /// `id` must be live with mark `m`.
  std::optional<NodeId> next_host_node(NodeMark m, NodeId id) const;

  std::optional<NodeId> first_root_node() const;
  std::optional<NodeId> next_root_node(NodeId id) const;

  std::optional<EdgeId> first_edge(NodeId n, EdgeMark m, Orientation o) const;
  /// `e` must be live and belong to bucket (n, m, o).
  std::optional<EdgeId> next_edge(NodeId n, EdgeMark m, Orientation o, EdgeId e) const;

  // -- accessors (uncharged, O(1)) ------------------------------------------

  bool alive(NodeId id) const;
  bool alive(EdgeId id) const;
  NodeMark get_mark(NodeId id) const;
  EdgeMark get_mark(EdgeId id) const;
  const Label& get_label(NodeId id) const;
  const Label& get_label(EdgeId id) const;
  bool is_rooted(NodeId id) const;
  NodeId get_source(EdgeId id) const;
  NodeId get_target(EdgeId id) const;
  bool is_loop(EdgeId id) const;
  uint32_t indeg(NodeId id) const;
  uint32_t outdeg(NodeId id) const;
  uint32_t loopdeg(NodeId id) const;

  // Matched flags are matcher-local scratch state: they are not journaled and
  // do not bump the version.
  bool already_matched(NodeId id) const;
  bool already_matched(EdgeId id) const;
  void set_matched(NodeId id);
  void set_matched(EdgeId id);
  void clear_matched(NodeId id);
  void clear_matched(EdgeId id);
  /// True when no live item has a set matched flag.
  bool matched_flags_clear() const;

  size_t node_count() const { return node_count_; }
  size_t edge_count() const { return edge_count_; }
  size_t root_count() const { return root_count_; }

  /// All live ids in arena order. Uncharged; meant for tests, serialization
  /// and oracles, not for rule matching.
  std::vector<NodeId> nodes() const;
  std::vector<EdgeId> edges() const;

  StepCounters& counters() const { return counters_; }
  void reset_counters() const { counters_.reset(); }

  /// Full structural self-check (bucket partition, mark fidelity, registry,
  /// counts). Throws std::logic_error on any violation.
  void check_invariants() const;

 private:
  static constexpr uint32_t kNil = 0xffffffffu;
  static constexpr int kCells = kMarkCount * kOrientationCount;

  struct EdgeRec {
    Label label;
    NodeId src, tgt;
    uint32_t gen = 0;
    EdgeMark mark = EdgeMark::Unmarked;
    bool live = false;
    bool matched = false;
    // Intrusive positions: src-side list (out or loop bucket) and tgt-side
    // list (in bucket). A loop only uses the src side.
    uint32_t src_prev = kNil, src_next = kNil;
    uint32_t tgt_prev = kNil, tgt_next = kNil;
  };

  struct NodeRec {
    Label label;
    uint32_t gen = 0;
    NodeMark mark = NodeMark::Unmarked;
    bool live = false;
    bool rooted = false;
    bool matched = false;
    uint32_t indeg = 0, outdeg = 0, loopdeg = 0;
    uint32_t bucket_prev = kNil, bucket_next = kNil;  // node mark bucket (indexed)
    uint32_t root_prev = kNil, root_next = kNil;      // root registry
    std::array<uint32_t, kCells> edge_head;
    std::array<uint32_t, kCells> edge_tail;
    NodeRec() {
      edge_head.fill(kNil);
      edge_tail.fill(kNil);
    }
  };

  const NodeRec& node_at(NodeId id) const;
  NodeRec& node_at(NodeId id);
  const EdgeRec& edge_at(EdgeId id) const;
  EdgeRec& edge_at(EdgeId id);

  // Cell selection: the indexed backend uses the full 5x3 grid; legacy keeps
  // everything in the (Unmarked, Out) and (Unmarked, In) cells.
  int src_cell(const EdgeRec& e) const;
  int tgt_cell(const EdgeRec& e) const;
  static int cell(EdgeMark m, Orientation o) {
    return int(m) * kOrientationCount + int(o);
  }

  void link_src(uint32_t node, int c, uint32_t e);
  void unlink_src(uint32_t node, int c, uint32_t e);
  void link_tgt(uint32_t node, int c, uint32_t e);
  void unlink_tgt(uint32_t node, int c, uint32_t e);
  void link_edge(uint32_t e);
  void unlink_edge(uint32_t e);
  void bump_degrees(const EdgeRec& e, int delta);

  void link_node_bucket(uint32_t n);
  void unlink_node_bucket(uint32_t n);
  void link_root(uint32_t n);
  void unlink_root(uint32_t n);

  std::optional<EdgeId> scan_legacy_edges(EdgeMark m, Orientation o,
                                          uint32_t start) const;

  Backend backend_;
  std::vector<NodeRec> nodes_;
  std::vector<EdgeRec> edges_;
  std::vector<uint32_t> free_nodes_;
  std::vector<uint32_t> free_edges_;
  std::array<uint32_t, kMarkCount> node_head_;
  std::array<uint32_t, kMarkCount> node_tail_;
  uint32_t root_head_ = kNil, root_tail_ = kNil;
  size_t node_count_ = 0, edge_count_ = 0, root_count_ = 0;
  uint64_t serial_ = 0;
  uint64_t version_ = 0;
  mutable StepCounters counters_;
};

/// Equality of observable state: same live ids with the same labels, marks,
/// root flags, endpoints and degrees. Enumeration order, counters and backend
/// are not observable.
bool observably_equal(const HostGraph& a, const HostGraph& b);

}  // namespace rgt
