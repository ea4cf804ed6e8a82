#pragma once

#include <cstdint>
#include <functional>
#include <map>

#include "rgt/engine.hpp"
#include "rgt/program.hpp"

namespace rgt {

enum class Outcome : uint8_t { Success, Failure };

std::string_view to_string(Outcome o);

struct ApplyEvent {
  const CompiledRule& rule;
  const Match& match;
};

struct RunOptions {
  /// 0 = unlimited. Exceeding the budget (counted over store steps and
  /// interpreter ticks, whichever trips first) throws BudgetExceeded.
  uint64_t max_steps = 0;
  /// Called after every successful rule application.
  std::function<void(const ApplyEvent&)> observer;
  /// Track per-rule call counts and matching attempts (node+edge candidates
  /// inspected while matching that rule).
  bool collect_rule_stats = false;
};

struct RunResult {
  Outcome outcome = Outcome::Failure;
  uint64_t rule_apps = 0;
  std::map<std::string, uint64_t> rule_calls;
  std::map<std::string, uint64_t> rule_attempts;
};

/// Executes Main on g, mutating it in place. GP 2 discipline: a rule-set call
/// applies the first applicable rule or fails; sequences abort on failure;
/// try keeps the condition's changes on success and rolls them back on
/// failure; if always rolls the condition back; a loop rolls back its failed
/// final iteration and succeeds; break unwinds to the innermost loop keeping
/// the current iteration's changes; fail is a failing command. On Failure the
/// graph is left in its failure-time state; callers that need the input
/// unchanged should run on a copy.
///
/// Throws UndefinedName for unresolved rule/procedure names,
/// BreakOutsideLoop if a break surfaces at program level, BudgetExceeded per
/// RunOptions.
RunResult run(const Program& p, HostGraph& g, const RunOptions& opts = {});

/// As run, aborting once the counter exceeds max_steps.
Outcome run_with_budget(const Program& p, HostGraph& g, uint64_t max_steps);

}  // namespace rgt
