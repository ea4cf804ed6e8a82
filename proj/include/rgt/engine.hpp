#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rgt/graph.hpp"
#include "rgt/rule.hpp"

namespace rgt {

/// Injective assignment of LHS items to host items, plus the variable binding.
/// Images are indexed by LHS node/edge position.
struct Match {
  std::vector<NodeId> node_images;
  std::vector<EdgeId> edge_images;
  Binding binding;
};

/// Ordered matching instructions for one rule: bind the rooted node from the
/// root registry, extend across LHS edges into the host's (mark, orientation)
/// buckets, bucket-bind whatever is left. Wildcard marks probe all five
/// buckets in enum order; bidirectional edges interleave the Out and In
/// streams of the anchor node so that whichever bucket has a fresh head is
/// reached within two candidates.
struct SearchPlan {
  enum class Op : uint8_t {
    BindRoot,        // bind `node` from the root registry
    BindNodeBucket,  // bind `node` from its mark bucket(s)
    Extend,          // match `edge` from `from`, binding `node` at the far end
    CheckEdge,       // match `edge` between two already-bound endpoints
  };
  struct Instr {
    Op op;
    int node = -1;
    int edge = -1;
    int from = -1;
    Orientation orient = Orientation::Out;  // anchor-side bucket for directed edges
    bool both_orients = false;              // bidirectional non-loop edges
  };
  std::vector<Instr> instrs;
};

/// Builds the deterministic search plan. Throws UnsupportedRule if the LHS
/// has more than one rooted node.
SearchPlan plan(const Rule& rule);

/// A rule compiled for repeated application: the plan plus the LHS/RHS
/// difference sets apply() needs.
struct CompiledRule {
  Rule rule;
  SearchPlan search_plan;
  std::vector<int> deleted_edges;                  // LHS-only, by lhs index
  std::vector<int> deleted_nodes;                  // LHS-only
  std::vector<int> created_nodes;                  // RHS-only, by rhs index
  std::vector<int> created_edges;                  // RHS-only
  std::vector<std::pair<int, int>> kept_nodes;     // (lhs, rhs) index pairs
  std::vector<std::pair<int, int>> kept_edges;     // (lhs, rhs)
};

/// Validates and compiles. Throws on invalid rules.
CompiledRule compile_rule(Rule rule);

/// Inverse mutation journal. Entries are appended by apply() and undone in
/// exact reverse order; ids survive a rollback unchanged. The log is bound to
/// one graph lineage: rolling back after an unlogged mutation (or against a
/// different graph) throws LineageMismatch.
class UndoLog {
 public:
  explicit UndoLog(const HostGraph& g)
      : graph_serial_(g.serial()), expected_version_(g.version()) {}

  size_t mark() const { return entries_.size(); }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// Undoes every entry after `mark`, leaving the graph observably as it was
  /// when that mark was taken.
  void rollback_to(HostGraph& g, size_t mark);

  // Appended by apply(); one entry per primitive mutation.
  void push_added_node(const HostGraph& g, NodeId id);
  void push_added_edge(const HostGraph& g, EdgeId id);
  void push_deleted_node(const HostGraph& g, NodeId id, Label label, NodeMark mark, bool rooted);
  void push_deleted_edge(const HostGraph& g, EdgeId id, NodeId src, NodeId tgt, Label label,
                         EdgeMark mark);
  void push_node_mark(const HostGraph& g, NodeId id, NodeMark old);
  void push_edge_mark(const HostGraph& g, EdgeId id, EdgeMark old);
  void push_node_label(const HostGraph& g, NodeId id, Label old);
  void push_edge_label(const HostGraph& g, EdgeId id, Label old);
  void push_root(const HostGraph& g, NodeId id, bool old);

 private:
  struct Entry {
    enum class Kind : uint8_t {
      AddedNode, AddedEdge, DeletedNode, DeletedEdge,
      NodeMark, EdgeMark, NodeLabel, EdgeLabel, Root,
    };
    Kind kind;
    NodeId node;
    EdgeId edge;
    NodeId src, tgt;
    Label label;
    NodeMark nmark = NodeMark::Unmarked;
    EdgeMark emark = EdgeMark::Unmarked;
    bool flag = false;
  };

  void check_lineage(const HostGraph& g) const;
  void note_mutation(const HostGraph& g) { expected_version_ = g.version(); }

  std::vector<Entry> entries_;
  uint64_t graph_serial_;
  uint64_t expected_version_;
};

/// Undoes the whole log (spec operation `rollback`); the log is emptied.
void rollback(HostGraph& g, UndoLog& log);

/// First match in plan order, or nullopt. Matched flags are used for
/// injectivity during the search and are always cleared before returning.
/// `accept` lets the caller reject otherwise-valid matches (the search then
/// continues past them).
std::optional<Match> match(HostGraph& g, const CompiledRule& cr);
std::optional<Match> match(HostGraph& g, const CompiledRule& cr,
                           const std::function<bool(const Match&)>& accept);

/// True iff every node the rule deletes has all incident host edges matched
/// by deleted LHS edges.
bool check_dangling(const HostGraph& g, const CompiledRule& cr, const Match& m);

/// Applies the rule at the given match: deletes LHS-only edges then nodes,
/// adds RHS-only nodes then edges, then updates label, mark (wildcard RHS
/// marks keep the host mark) and root flag of every preserved item. Appends
/// inverse entries to `log` when given. Preconditions: match valid, dangling
/// condition holds.
void apply(HostGraph& g, const CompiledRule& cr, const Match& m, UndoLog* log);

/// match + dangling + apply. Returns false (graph and log untouched) when no
/// applicable match exists; dangling-violating matches are skipped.
bool apply_rule(HostGraph& g, const CompiledRule& cr, UndoLog* log);

}  // namespace rgt
