#include "rgt/engine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rgt {

// -- rule structure ------------------------------------------------------------

int RuleGraph::node_index(const std::string& id) const {
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].id == id) return int(i);
  return -1;
}

int RuleGraph::edge_index(const std::string& id) const {
  for (size_t i = 0; i < edges.size(); ++i)
    if (edges[i].id == id) return int(i);
  return -1;
}

int Rule::var_index(const std::string& vname) const {
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i].name == vname) return int(i);
  return -1;
}

namespace {

void collect_vars(const LabelTerm& t, std::set<int>& out) {
  if (t.kind == LabelTerm::Kind::Var) out.insert(t.var);
  for (const LabelTerm& op : t.operands) collect_vars(op, out);
}

std::set<int> side_vars(const RuleGraph& g) {
  std::set<int> out;
  for (const RuleNode& n : g.nodes)
    for (const LabelTerm& t : n.label) collect_vars(t, out);
  for (const RuleEdge& e : g.edges)
    for (const LabelTerm& t : e.label) collect_vars(t, out);
  return out;
}

}  // namespace

void validate_rule(const Rule& r) {
  auto err = [&](const std::string& m) {
    throw std::invalid_argument("rule " + r.name + ": " + m);
  };

  for (size_t i = 0; i < r.vars.size(); ++i)
    for (size_t j = i + 1; j < r.vars.size(); ++j)
      if (r.vars[i].name == r.vars[j].name) err("duplicate variable " + r.vars[i].name);

  auto check_side = [&](const RuleGraph& g, const std::string& side) {
    std::set<std::string> node_ids, edge_ids;
    for (const RuleNode& n : g.nodes) {
      if (!node_ids.insert(n.id).second) err("duplicate " + side + " node id " + n.id);
      validate_expr(n.label, r.vars);
    }
    for (const RuleEdge& e : g.edges) {
      if (!edge_ids.insert(e.id).second) err("duplicate " + side + " edge id " + e.id);
      if (g.node_index(e.src) < 0) err(side + " edge " + e.id + " has unknown source " + e.src);
      if (g.node_index(e.tgt) < 0) err(side + " edge " + e.id + " has unknown target " + e.tgt);
      validate_expr(e.label, r.vars);
    }
  };
  check_side(r.lhs, "lhs");
  check_side(r.rhs, "rhs");

  std::set<std::string> iface(r.interface.begin(), r.interface.end());
  if (iface.size() != r.interface.size()) err("duplicate interface id");
  for (const std::string& id : iface) {
    if (r.lhs.node_index(id) < 0 || r.rhs.node_index(id) < 0)
      err("interface node " + id + " must appear on both sides");
  }
  for (const RuleNode& n : r.lhs.nodes)
    if (!iface.count(n.id) && r.rhs.node_index(n.id) >= 0)
      err("node " + n.id + " appears on both sides but is not in the interface");
  for (const RuleNode& n : r.rhs.nodes)
    if (!iface.count(n.id) && r.lhs.node_index(n.id) >= 0)
      err("node " + n.id + " appears on both sides but is not in the interface");

  for (const RuleEdge& le : r.lhs.edges) {
    int j = r.rhs.edge_index(le.id);
    if (j < 0) continue;
    const RuleEdge& re = r.rhs.edges[j];
    if (le.src != re.src || le.tgt != re.tgt)
      err("preserved edge " + le.id + " changes endpoints");
    if (!iface.count(le.src) || !iface.count(le.tgt))
      err("preserved edge " + le.id + " must connect interface nodes");
    if (le.directed != re.directed) err("preserved edge " + le.id + " changes direction kind");
  }

  std::set<int> lvars = side_vars(r.lhs), rvars = side_vars(r.rhs);
  for (int v : rvars)
    if (!lvars.count(v)) err("rhs variable " + r.vars[v].name + " does not occur in lhs");

  for (const RuleNode& n : r.rhs.nodes) {
    int li = r.lhs.node_index(n.id);
    if (li < 0) {
      if (!n.mark) err("created node " + n.id + " needs a concrete mark");
    } else if (!n.mark && r.lhs.nodes[li].mark) {
      err("wildcard rhs mark on node " + n.id + " requires a wildcard lhs mark");
    }
  }
  for (const RuleEdge& e : r.rhs.edges) {
    int li = r.lhs.edge_index(e.id);
    if (li < 0) {
      if (!e.mark) err("created edge " + e.id + " needs a concrete mark");
    } else if (!e.mark && r.lhs.edges[li].mark) {
      err("wildcard rhs mark on edge " + e.id + " requires a wildcard lhs mark");
    }
  }
}

// -- planning -------------------------------------------------------------------

SearchPlan plan(const Rule& rule) {
  const RuleGraph& L = rule.lhs;
  int rooted = -1;
  for (size_t i = 0; i < L.nodes.size(); ++i) {
    if (!L.nodes[i].rooted) continue;
    if (rooted >= 0) throw UnsupportedRule("rule " + rule.name + ": more than one rooted lhs node");
    rooted = int(i);
  }

  SearchPlan p;
  std::vector<bool> node_bound(L.nodes.size(), false);
  std::vector<bool> edge_planned(L.edges.size(), false);

  if (rooted >= 0) {
    p.instrs.push_back({SearchPlan::Op::BindRoot, rooted, -1, -1, Orientation::Out, false});
    node_bound[rooted] = true;
  }

  for (;;) {
    int pick = -1;
    for (size_t e = 0; e < L.edges.size(); ++e) {
      if (edge_planned[e]) continue;
      int si = L.node_index(L.edges[e].src);
      int ti = L.node_index(L.edges[e].tgt);
      if (node_bound[si] || node_bound[ti]) {
        pick = int(e);
        break;
      }
    }
    if (pick >= 0) {
      const RuleEdge& e = L.edges[pick];
      int si = L.node_index(e.src);
      int ti = L.node_index(e.tgt);
      SearchPlan::Instr ins;
      ins.edge = pick;
      if (si == ti) {
        ins.op = SearchPlan::Op::CheckEdge;
        ins.from = si;
        ins.orient = Orientation::Loop;
      } else if (node_bound[si] && node_bound[ti]) {
        ins.op = SearchPlan::Op::CheckEdge;
        ins.from = si;
        ins.orient = Orientation::Out;
        ins.both_orients = !e.directed;
      } else if (node_bound[si]) {
        ins.op = SearchPlan::Op::Extend;
        ins.from = si;
        ins.node = ti;
        ins.orient = Orientation::Out;
        ins.both_orients = !e.directed;
        node_bound[ti] = true;
      } else {
        ins.op = SearchPlan::Op::Extend;
        ins.from = ti;
        ins.node = si;
        ins.orient = Orientation::In;
        ins.both_orients = !e.directed;
        node_bound[si] = true;
      }
      edge_planned[pick] = true;
      p.instrs.push_back(ins);
      continue;
    }
    int n = -1;
    for (size_t i = 0; i < L.nodes.size(); ++i) {
      if (!node_bound[i]) {
        n = int(i);
        break;
      }
    }
    if (n < 0) break;
    p.instrs.push_back({SearchPlan::Op::BindNodeBucket, n, -1, -1, Orientation::Out, false});
    node_bound[n] = true;
  }
  return p;
}

CompiledRule compile_rule(Rule rule) {
  validate_rule(rule);
  CompiledRule cr;
  cr.search_plan = plan(rule);
  for (size_t i = 0; i < rule.lhs.edges.size(); ++i) {
    int j = rule.rhs.edge_index(rule.lhs.edges[i].id);
    if (j < 0) cr.deleted_edges.push_back(int(i));
    else cr.kept_edges.emplace_back(int(i), j);
  }
  for (size_t i = 0; i < rule.lhs.nodes.size(); ++i) {
    int j = rule.rhs.node_index(rule.lhs.nodes[i].id);
    if (j < 0) cr.deleted_nodes.push_back(int(i));
    else cr.kept_nodes.emplace_back(int(i), j);
  }
  for (size_t j = 0; j < rule.rhs.nodes.size(); ++j)
    if (rule.lhs.node_index(rule.rhs.nodes[j].id) < 0) cr.created_nodes.push_back(int(j));
  for (size_t j = 0; j < rule.rhs.edges.size(); ++j)
    if (rule.lhs.edge_index(rule.rhs.edges[j].id) < 0) cr.created_edges.push_back(int(j));
  cr.rule = std::move(rule);
  return cr;
}

// -- matching -------------------------------------------------------------------

namespace {

// Forward cursor over one (mark, orientation) bucket.
struct DirCursor {
  bool started = false;
  bool done = false;
  std::optional<EdgeId> cur;

  std::optional<EdgeId> advance(const HostGraph& g, NodeId n, EdgeMark m, Orientation o) {
    if (done) return std::nullopt;
    cur = started ? (cur ? g.next_edge(n, m, o, *cur) : std::nullopt) : g.first_edge(n, m, o);
    started = true;
    if (!cur) done = true;
    return cur;
  }
};

// Candidate stream for one edge instruction at a fixed mark. Bidirectional
// edges take candidates from the Out and In buckets alternately.
struct EdgeStream {
  const HostGraph& g;
  NodeId anchor;
  EdgeMark mark;
  Orientation single;
  bool both;
  DirCursor out, in;
  bool turn_out = true;

  std::optional<std::pair<EdgeId, Orientation>> next() {
    if (!both) {
      auto e = out.advance(g, anchor, mark, single);
      if (!e) return std::nullopt;
      return std::make_pair(*e, single);
    }
    for (int k = 0; k < 2; ++k) {
      bool use_out = turn_out;
      turn_out = !turn_out;
      DirCursor& c = use_out ? out : in;
      if (c.done) continue;
      auto e = c.advance(g, anchor, mark, use_out ? Orientation::Out : Orientation::In);
      if (e) return std::make_pair(*e, use_out ? Orientation::Out : Orientation::In);
    }
    return std::nullopt;
  }
};

struct Searcher {
  HostGraph& g;
  const CompiledRule& cr;
  const std::function<bool(const Match&)>* accept;
  std::vector<NodeId> nimg;
  std::vector<EdgeId> eimg;
  std::vector<bool> nset, eset;
  Binding binding;
  std::vector<int> bound_vars;
  std::optional<Match> result;

  Searcher(HostGraph& graph, const CompiledRule& rule,
           const std::function<bool(const Match&)>* accept_fn)
      : g(graph),
        cr(rule),
        accept(accept_fn),
        nimg(rule.rule.lhs.nodes.size()),
        eimg(rule.rule.lhs.edges.size()),
        nset(rule.rule.lhs.nodes.size(), false),
        eset(rule.rule.lhs.edges.size(), false),
        binding(rule.rule.vars.size()) {}

  bool try_node(int rn, NodeId h) {
    const RuleNode& pat = cr.rule.lhs.nodes[rn];
    if (g.already_matched(h)) return false;
    if (pat.mark && g.get_mark(h) != *pat.mark) return false;
    if (g.is_rooted(h) != pat.rooted) return false;
    if (!unify_into(pat.label, cr.rule.vars, g.get_label(h), binding, bound_vars)) return false;
    g.set_matched(h);
    nimg[rn] = h;
    nset[rn] = true;
    return true;
  }

  void undo_node(int rn) {
    g.clear_matched(nimg[rn]);
    nset[rn] = false;
  }

  bool try_edge(int re, EdgeId h) {
    const RuleEdge& pat = cr.rule.lhs.edges[re];
    if (g.already_matched(h)) return false;
    if (!unify_into(pat.label, cr.rule.vars, g.get_label(h), binding, bound_vars)) return false;
    g.set_matched(h);
    eimg[re] = h;
    eset[re] = true;
    return true;
  }

  void undo_edge(int re) {
    g.clear_matched(eimg[re]);
    eset[re] = false;
  }

  void undo_vars(size_t snap) {
    while (bound_vars.size() > snap) {
      binding.unbind(bound_vars.back());
      bound_vars.pop_back();
    }
  }

  bool finish() {
    Match m{nimg, eimg, binding};
    if (accept && *accept && !(*accept)(m)) return false;
    result = std::move(m);
    return true;
  }

  std::array<EdgeMark, kMarkCount> edge_marks(const EdgeMarkPattern& p, int& count) {
    std::array<EdgeMark, kMarkCount> out{};
    if (p) {
      out[0] = *p;
      count = 1;
    } else {
      for (int i = 0; i < kMarkCount; ++i) out[i] = EdgeMark(i);
      count = kMarkCount;
    }
    return out;
  }

  bool step(size_t i) {
    if (i == cr.search_plan.instrs.size()) return finish();
    const SearchPlan::Instr& ins = cr.search_plan.instrs[i];
    switch (ins.op) {
      case SearchPlan::Op::BindRoot: {
        for (auto cur = g.first_root_node(); cur;) {
          NodeId h = *cur;
          cur = g.next_root_node(h);
          size_t vsnap = bound_vars.size();
          if (!try_node(ins.node, h)) continue;
          if (step(i + 1)) return true;
          undo_node(ins.node);
          undo_vars(vsnap);
        }
        return false;
      }
      case SearchPlan::Op::BindNodeBucket: {
        const RuleNode& pat = cr.rule.lhs.nodes[ins.node];
        int nmarks = pat.mark ? 1 : kMarkCount;
        for (int mi = 0; mi < nmarks; ++mi) {
          NodeMark m = pat.mark ? *pat.mark : NodeMark(mi);
          for (auto cur = g.first_host_node(m); cur;) {
            NodeId h = *cur;
            cur = g.next_host_node(m, h);
            size_t vsnap = bound_vars.size();
            if (!try_node(ins.node, h)) continue;
            if (step(i + 1)) return true;
            undo_node(ins.node);
            undo_vars(vsnap);
          }
        }
        return false;
      }
      case SearchPlan::Op::Extend: {
        const RuleEdge& pat = cr.rule.lhs.edges[ins.edge];
        NodeId anchor = nimg[ins.from];
        int nmarks = 0;
        auto marks = edge_marks(pat.mark, nmarks);
        for (int mi = 0; mi < nmarks; ++mi) {
          EdgeStream stream{g, anchor, marks[mi], ins.orient, ins.both_orients, {}, {}, true};
          while (auto cand = stream.next()) {
            auto [h, o] = *cand;
            NodeId other = (o == Orientation::Out) ? g.get_target(h) : g.get_source(h);
            size_t vsnap = bound_vars.size();
            if (!try_edge(ins.edge, h)) continue;
            if (!try_node(ins.node, other)) {
              undo_edge(ins.edge);
              undo_vars(vsnap);
              continue;
            }
            if (step(i + 1)) return true;
            undo_node(ins.node);
            undo_edge(ins.edge);
            undo_vars(vsnap);
          }
        }
        return false;
      }
      case SearchPlan::Op::CheckEdge: {
        const RuleEdge& pat = cr.rule.lhs.edges[ins.edge];
        bool loop = ins.orient == Orientation::Loop;
        NodeId anchor = nimg[ins.from];
        NodeId expect = loop ? anchor : nimg[cr.rule.lhs.node_index(pat.tgt)];
        int nmarks = 0;
        auto marks = edge_marks(pat.mark, nmarks);
        for (int mi = 0; mi < nmarks; ++mi) {
          EdgeStream stream{g, anchor, marks[mi], ins.orient, ins.both_orients, {}, {}, true};
          while (auto cand = stream.next()) {
            auto [h, o] = *cand;
            if (!loop) {
              NodeId other = (o == Orientation::Out) ? g.get_target(h) : g.get_source(h);
              if (other != expect) continue;
            }
            size_t vsnap = bound_vars.size();
            if (!try_edge(ins.edge, h)) continue;
            if (step(i + 1)) return true;
            undo_edge(ins.edge);
            undo_vars(vsnap);
          }
        }
        return false;
      }
    }
    return false;
  }

  bool run() {
    bool found = step(0);
    for (size_t i = 0; i < nset.size(); ++i)
      if (nset[i]) g.clear_matched(nimg[i]);
    for (size_t i = 0; i < eset.size(); ++i)
      if (eset[i]) g.clear_matched(eimg[i]);
    return found;
  }
};

}  // namespace

std::optional<Match> match(HostGraph& g, const CompiledRule& cr,
                           const std::function<bool(const Match&)>& accept) {
  Searcher s(g, cr, &accept);
  s.run();
  return s.result;
}

std::optional<Match> match(HostGraph& g, const CompiledRule& cr) {
  Searcher s(g, cr, nullptr);
  s.run();
  return s.result;
}

bool check_dangling(const HostGraph& g, const CompiledRule& cr, const Match& m) {
  for (int li : cr.deleted_nodes) {
    NodeId v = m.node_images[li];
    uint32_t incident = g.indeg(v) + g.outdeg(v) + g.loopdeg(v);
    uint32_t covered = 0;
    for (int le : cr.deleted_edges) {
      EdgeId e = m.edge_images[le];
      if (g.get_source(e) == v || g.get_target(e) == v) ++covered;
    }
    if (covered != incident) return false;
  }
  return true;
}

// -- undo log -------------------------------------------------------------------

void UndoLog::check_lineage(const HostGraph& g) const {
  if (g.serial() != graph_serial_ || g.version() != expected_version_)
    throw LineageMismatch{};
}

void UndoLog::push_added_node(const HostGraph& g, NodeId id) {
  Entry e;
  e.kind = Entry::Kind::AddedNode;
  e.node = id;
  entries_.push_back(std::move(e));
  note_mutation(g);
}

void UndoLog::push_added_edge(const HostGraph& g, EdgeId id) {
  Entry e;
  e.kind = Entry::Kind::AddedEdge;
  e.edge = id;
  entries_.push_back(std::move(e));
  note_mutation(g);
}

void UndoLog::push_deleted_node(const HostGraph& g, NodeId id, Label label, NodeMark mark,
                                bool rooted) {
  Entry e;
  e.kind = Entry::Kind::DeletedNode;
  e.node = id;
  e.label = std::move(label);
  e.nmark = mark;
  e.flag = rooted;
  entries_.push_back(std::move(e));
  note_mutation(g);
}

void UndoLog::push_deleted_edge(const HostGraph& g, EdgeId id, NodeId src, NodeId tgt,
                                Label label, EdgeMark mark) {
  Entry e;
  e.kind = Entry::Kind::DeletedEdge;
  e.edge = id;
  e.src = src;
  e.tgt = tgt;
  e.label = std::move(label);
  e.emark = mark;
  entries_.push_back(std::move(e));
  note_mutation(g);
}

void UndoLog::push_node_mark(const HostGraph& g, NodeId id, NodeMark old) {
  Entry e;
  e.kind = Entry::Kind::NodeMark;
  e.node = id;
  e.nmark = old;
  entries_.push_back(std::move(e));
  note_mutation(g);
}

void UndoLog::push_edge_mark(const HostGraph& g, EdgeId id, EdgeMark old) {
  Entry e;
  e.kind = Entry::Kind::EdgeMark;
  e.edge = id;
  e.emark = old;
  entries_.push_back(std::move(e));
  note_mutation(g);
}

void UndoLog::push_node_label(const HostGraph& g, NodeId id, Label old) {
  Entry e;
  e.kind = Entry::Kind::NodeLabel;
  e.node = id;
  e.label = std::move(old);
  entries_.push_back(std::move(e));
  note_mutation(g);
}

void UndoLog::push_edge_label(const HostGraph& g, EdgeId id, Label old) {
  Entry e;
  e.kind = Entry::Kind::EdgeLabel;
  e.edge = id;
  e.label = std::move(old);
  entries_.push_back(std::move(e));
  note_mutation(g);
}

void UndoLog::push_root(const HostGraph& g, NodeId id, bool old) {
  Entry e;
  e.kind = Entry::Kind::Root;
  e.node = id;
  e.flag = old;
  entries_.push_back(std::move(e));
  note_mutation(g);
}

void UndoLog::rollback_to(HostGraph& g, size_t mark) {
  check_lineage(g);
  while (entries_.size() > mark) {
    Entry e = std::move(entries_.back());
    entries_.pop_back();
    switch (e.kind) {
      case Entry::Kind::AddedNode:
        g.delete_node(e.node);
        break;
      case Entry::Kind::AddedEdge:
        g.delete_edge(e.edge);
        break;
      case Entry::Kind::DeletedNode:
        g.restore_node(e.node, std::move(e.label), e.nmark, e.flag);
        break;
      case Entry::Kind::DeletedEdge:
        g.restore_edge(e.edge, e.src, e.tgt, std::move(e.label), e.emark);
        break;
      case Entry::Kind::NodeMark:
        g.set_node_mark(e.node, e.nmark);
        break;
      case Entry::Kind::EdgeMark:
        g.set_edge_mark(e.edge, e.emark);
        break;
      case Entry::Kind::NodeLabel:
        g.set_node_label(e.node, std::move(e.label));
        break;
      case Entry::Kind::EdgeLabel:
        g.set_edge_label(e.edge, std::move(e.label));
        break;
      case Entry::Kind::Root:
        g.set_root(e.node, e.flag);
        break;
    }
    expected_version_ = g.version();
  }
}

void rollback(HostGraph& g, UndoLog& log) { log.rollback_to(g, 0); }

// -- application ----------------------------------------------------------------

void apply(HostGraph& g, const CompiledRule& cr, const Match& m, UndoLog* log) {
  const Rule& r = cr.rule;

  // Every push_* happens after its mutation, with the old state captured
  // first, so the log's version tracking stays in sync.
  for (int le : cr.deleted_edges) {
    EdgeId id = m.edge_images[le];
    NodeId src = g.get_source(id), tgt = g.get_target(id);
    Label old_label = g.get_label(id);
    EdgeMark old_mark = g.get_mark(id);
    g.delete_edge(id);
    if (log) log->push_deleted_edge(g, id, src, tgt, std::move(old_label), old_mark);
  }
  for (int ln : cr.deleted_nodes) {
    NodeId id = m.node_images[ln];
    Label old_label = g.get_label(id);
    NodeMark old_mark = g.get_mark(id);
    bool old_rooted = g.is_rooted(id);
    g.delete_node(id);
    if (log) log->push_deleted_node(g, id, std::move(old_label), old_mark, old_rooted);
  }

  std::vector<NodeId> rhs_images(r.rhs.nodes.size());
  for (const auto& [li, ri] : cr.kept_nodes) rhs_images[ri] = m.node_images[li];
  for (int rn : cr.created_nodes) {
    const RuleNode& pat = r.rhs.nodes[rn];
    NodeId id = g.add_node(eval(pat.label, r.vars, m.binding), *pat.mark, pat.rooted);
    rhs_images[rn] = id;
    if (log) log->push_added_node(g, id);
  }
  for (int re : cr.created_edges) {
    const RuleEdge& pat = r.rhs.edges[re];
    NodeId src = rhs_images[r.rhs.node_index(pat.src)];
    NodeId tgt = rhs_images[r.rhs.node_index(pat.tgt)];
    EdgeId id = g.add_edge(src, tgt, eval(pat.label, r.vars, m.binding), *pat.mark);
    if (log) log->push_added_edge(g, id);
  }

  for (const auto& [li, ri] : cr.kept_nodes) {
    NodeId id = m.node_images[li];
    const RuleNode& pat = r.rhs.nodes[ri];
    Label nl = eval(pat.label, r.vars, m.binding);
    if (nl != g.get_label(id)) {
      Label old = g.get_label(id);
      g.set_node_label(id, std::move(nl));
      if (log) log->push_node_label(g, id, std::move(old));
    }
    if (pat.mark && *pat.mark != g.get_mark(id)) {
      NodeMark old = g.get_mark(id);
      g.set_node_mark(id, *pat.mark);
      if (log) log->push_node_mark(g, id, old);
    }
    if (pat.rooted != g.is_rooted(id)) {
      bool old = g.is_rooted(id);
      g.set_root(id, pat.rooted);
      if (log) log->push_root(g, id, old);
    }
  }
  for (const auto& [li, ri] : cr.kept_edges) {
    EdgeId id = m.edge_images[li];
    const RuleEdge& pat = r.rhs.edges[ri];
    Label nl = eval(pat.label, r.vars, m.binding);
    if (nl != g.get_label(id)) {
      Label old = g.get_label(id);
      g.set_edge_label(id, std::move(nl));
      if (log) log->push_edge_label(g, id, std::move(old));
    }
    if (pat.mark && *pat.mark != g.get_mark(id)) {
      EdgeMark old = g.get_mark(id);
      g.set_edge_mark(id, *pat.mark);
      if (log) log->push_edge_mark(g, id, old);
    }
  }
}

bool apply_rule(HostGraph& g, const CompiledRule& cr, UndoLog* log) {
  auto m = match(g, cr, [&](const Match& mm) { return check_dangling(g, cr, mm); });
  if (!m) return false;
  apply(g, cr, *m, log);
  return true;
}

}  // namespace rgt
