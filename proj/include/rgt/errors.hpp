#pragma once

#include <stdexcept>
#include <string>

namespace rgt {

struct StaleHandle : std::logic_error {
  StaleHandle() : std::logic_error("operation on a deleted or invalid handle") {}
};

struct NodeHasEdges : std::logic_error {
  NodeHasEdges() : std::logic_error("cannot delete a node with incident edges") {}
};

struct LineageMismatch : std::logic_error {
  LineageMismatch() : std::logic_error("undo log does not match the graph's current lineage") {}
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(uint64_t budget)
      : std::runtime_error("step budget of " + std::to_string(budget) + " exceeded") {}
};

struct UnsupportedRule : std::invalid_argument {
  explicit UnsupportedRule(const std::string& why) : std::invalid_argument(why) {}
};

struct UndefinedName : std::runtime_error {
  explicit UndefinedName(const std::string& name)
      : std::runtime_error("undefined rule or procedure: " + name) {}
};

struct BreakOutsideLoop : std::logic_error {
  BreakOutsideLoop() : std::logic_error("break executed outside any loop") {}
};

struct UnboundVariable : std::logic_error {
  explicit UnboundVariable(const std::string& var)
      : std::logic_error("unbound variable: " + var) {}
};

struct IntOverflow : std::runtime_error {
  IntOverflow() : std::runtime_error("integer overflow in label expression") {}
};

struct UnknownProgram : std::invalid_argument {
  explicit UnknownProgram(const std::string& name)
      : std::invalid_argument("unknown program: " + name) {}
};

struct InvalidSize : std::invalid_argument {
  explicit InvalidSize(const std::string& why) : std::invalid_argument(why) {}
};

}  // namespace rgt
