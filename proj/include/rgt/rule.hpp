#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rgt/label_expr.hpp"
#include "rgt/marks.hpp"

namespace rgt {

// Mark patterns: nullopt is the wildcard `any`, matching every concrete mark.
using NodeMarkPattern = std::optional<NodeMark>;
using EdgeMarkPattern = std::optional<EdgeMark>;

struct RuleNode {
  std::string id;
  LabelExpr label;
  NodeMarkPattern mark = NodeMark::Unmarked;
  bool rooted = false;
  bool operator==(const RuleNode&) const = default;
};

struct RuleEdge {
  std::string id;
  std::string src;
  std::string tgt;
  LabelExpr label;
  EdgeMarkPattern mark = EdgeMark::Unmarked;
  // A bidirectional edge matches a host edge in either direction between the
  // images of its endpoints.
  bool directed = true;
  bool operator==(const RuleEdge&) const = default;
};

struct RuleGraph {
  std::vector<RuleNode> nodes;
  std::vector<RuleEdge> edges;

  int node_index(const std::string& id) const;
  int edge_index(const std::string& id) const;
  bool operator==(const RuleGraph&) const = default;
};

/// A rule: left/right graphs over shared typed variables, plus the interface
/// of preserved nodes. Items with the same id on both sides are preserved and
/// relabelled/remarked in place; LHS-only items are deleted, RHS-only items
/// created.
struct Rule {
  std::string name;
  VarDecls vars;
  RuleGraph lhs;
  RuleGraph rhs;
  std::vector<std::string> interface;

  int var_index(const std::string& name) const;
  bool operator==(const Rule&) const = default;
};

/// Structural validation: unique ids, endpoints exist, interface is exactly
/// the set of node ids common to both sides, preserved edges keep their
/// endpoints and direction, every RHS variable occurs on the LHS, created
/// items have concrete marks, wildcard RHS marks only echo wildcard LHS
/// marks, label expressions well-typed. Throws std::invalid_argument.
void validate_rule(const Rule& r);

}  // namespace rgt
