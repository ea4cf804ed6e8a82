#include "rgt/interp.hpp"

#include <stdexcept>

namespace rgt {

std::string_view to_string(Outcome o) {
  return o == Outcome::Success ? "success" : "failure";
}

namespace {

enum class Status : uint8_t { Ok, Fail, Break };

struct Interp {
  HostGraph& g;
  const RunOptions& opts;
  std::map<std::string, CompiledRule> rules;
  const std::map<std::string, Command>& procedures;
  UndoLog log;
  RunResult result;
  int loop_depth = 0;
  uint64_t base_steps;
  uint64_t ticks = 0;

  Interp(const Program& p, HostGraph& graph, const RunOptions& options)
      : g(graph), opts(options), procedures(p.procedures), log(graph),
        base_steps(graph.counters().steps) {
    for (const auto& [name, rule] : p.rules) rules.emplace(name, compile_rule(rule));
  }

  void budget_check() {
    if (!opts.max_steps) return;
    ++ticks;
    if (g.counters().steps - base_steps > opts.max_steps || ticks > opts.max_steps)
      throw BudgetExceeded(opts.max_steps);
  }

  Status call_rules(const std::vector<std::string>& names) {
    for (const std::string& name : names) {
      auto it = rules.find(name);
      if (it == rules.end()) throw UndefinedName(name);
      const CompiledRule& cr = it->second;
      uint64_t before = 0;
      if (opts.collect_rule_stats)
        before = g.counters().node_entries + g.counters().edge_entries;
      auto m = match(g, cr, [&](const Match& mm) { return check_dangling(g, cr, mm); });
      if (opts.collect_rule_stats) {
        result.rule_calls[name] += 1;
        result.rule_attempts[name] +=
            g.counters().node_entries + g.counters().edge_entries - before;
      }
      if (!m) continue;
      apply(g, cr, *m, &log);
      ++result.rule_apps;
      if (opts.observer) opts.observer(ApplyEvent{cr, *m});
      return Status::Ok;
    }
    return Status::Fail;
  }

  Status exec(const Command& c) {
    budget_check();
    switch (c.kind) {
      case Command::Kind::RuleCall:
        return call_rules(c.rules);
      case Command::Kind::Seq:
        for (const Command& ch : c.children) {
          Status s = exec(ch);
          if (s != Status::Ok) return s;
        }
        return Status::Ok;
      case Command::Kind::Try: {
        size_t at = log.mark();
        Status s = exec(c.cond());
        if (s == Status::Break) return s;
        if (s == Status::Fail) {
          log.rollback_to(g, at);
          return exec(c.else_branch());
        }
        return exec(c.then_branch());
      }
      case Command::Kind::If: {
        size_t at = log.mark();
        Status s = exec(c.cond());
        log.rollback_to(g, at);
        if (s == Status::Break) return s;
        return exec(s == Status::Ok ? c.then_branch() : c.else_branch());
      }
      case Command::Kind::Loop: {
        ++loop_depth;
        for (;;) {
          size_t at = log.mark();
          Status s = exec(c.body());
          if (s == Status::Fail) {
            log.rollback_to(g, at);
            break;
          }
          if (s == Status::Break) break;
        }
        --loop_depth;
        return Status::Ok;
      }
      case Command::Kind::Break:
        if (loop_depth == 0) throw BreakOutsideLoop{};
        return Status::Break;
      case Command::Kind::Skip:
        return Status::Ok;
      case Command::Kind::Fail:
        return Status::Fail;
      case Command::Kind::Call: {
        auto it = procedures.find(c.name);
        if (it == procedures.end()) throw UndefinedName(c.name);
        return exec(it->second);
      }
    }
    return Status::Fail;
  }
};

}  // namespace

RunResult run(const Program& p, HostGraph& g, const RunOptions& opts) {
  for (const std::string& issue : check_program(p))
    if (issue.rfind("break", 0) == 0) throw BreakOutsideLoop{};
    else throw UndefinedName(issue);

  Interp interp(p, g, opts);
  Status s = interp.exec(p.procedures.at("Main"));
  if (s == Status::Break) throw BreakOutsideLoop{};
  interp.result.outcome = s == Status::Ok ? Outcome::Success : Outcome::Failure;
  return interp.result;
}

Outcome run_with_budget(const Program& p, HostGraph& g, uint64_t max_steps) {
  if (max_steps == 0) throw std::invalid_argument("max_steps must be positive");
  RunOptions opts;
  opts.max_steps = max_steps;
  return run(p, g, opts).outcome;
}

}  // namespace rgt
