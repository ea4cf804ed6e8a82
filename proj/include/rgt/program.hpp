#pragma once

#include <map>
#include <string>
#include <vector>

#include "rgt/rule.hpp"

namespace rgt {

/// Program IR. Rule-set calls hold one or more rule names tried in declared
/// order; Try/If keep exactly three children (condition, then, else) with
/// absent branches represented as Skip; Loop keeps one child.
struct Command {
  enum class Kind : uint8_t { RuleCall, Seq, Try, If, Loop, Break, Skip, Fail, Call };

  Kind kind = Kind::Skip;
  std::vector<std::string> rules;  // RuleCall
  std::string name;                // Call
  std::vector<Command> children;

  static Command rule_call(std::vector<std::string> names);
  static Command call(std::string proc);
  static Command seq(std::vector<Command> cs);
  static Command try_else(Command cond, Command then, Command els);
  static Command if_then(Command cond, Command then, Command els);
  static Command loop(Command body);
  static Command skip();
  static Command fail();
  static Command brk();

  const Command& cond() const { return children[0]; }
  const Command& then_branch() const { return children[1]; }
  const Command& else_branch() const { return children[2]; }
  const Command& body() const { return children[0]; }

  bool operator==(const Command&) const;
};

struct Program {
  std::map<std::string, Command> procedures;  // entry point is "Main"
  std::map<std::string, Rule> rules;

  bool operator==(const Program&) const = default;
};

/// Static issues: missing Main, calls to undefined procedures or rules, and
/// breaks that can escape every enclosing loop. Returns human-readable
/// messages; empty means the program is runnable.
std::vector<std::string> check_program(const Program& p);

/// True when running Main could surface a break with no loop to catch it.
bool program_may_escape_break(const Program& p);

}  // namespace rgt
