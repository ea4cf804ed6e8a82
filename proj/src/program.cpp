#include "rgt/program.hpp"

#include <set>

namespace rgt {

Command Command::rule_call(std::vector<std::string> names) {
  Command c;
  c.kind = Kind::RuleCall;
  c.rules = std::move(names);
  return c;
}

Command Command::call(std::string proc) {
  Command c;
  c.kind = Kind::Call;
  c.name = std::move(proc);
  return c;
}

Command Command::seq(std::vector<Command> cs) {
  if (cs.size() == 1) return std::move(cs.front());
  Command c;
  c.kind = Kind::Seq;
  c.children = std::move(cs);
  return c;
}

Command Command::try_else(Command cond, Command then, Command els) {
  Command c;
  c.kind = Kind::Try;
  c.children = {std::move(cond), std::move(then), std::move(els)};
  return c;
}

Command Command::if_then(Command cond, Command then, Command els) {
  Command c;
  c.kind = Kind::If;
  c.children = {std::move(cond), std::move(then), std::move(els)};
  return c;
}

Command Command::loop(Command body) {
  Command c;
  c.kind = Kind::Loop;
  c.children = {std::move(body)};
  return c;
}

Command Command::skip() { return Command{}; }

Command Command::fail() {
  Command c;
  c.kind = Kind::Fail;
  return c;
}

Command Command::brk() {
  Command c;
  c.kind = Kind::Break;
  return c;
}

bool Command::operator==(const Command& o) const {
  return kind == o.kind && rules == o.rules && name == o.name && children == o.children;
}

namespace {

// True when executing `c` outside any loop could surface a Break.
bool may_escape_break(const Command& c, const Program& p, std::set<std::string>& visiting) {
  switch (c.kind) {
    case Command::Kind::Break:
      return true;
    case Command::Kind::Loop:
      return false;
    case Command::Kind::Seq:
    case Command::Kind::Try:
    case Command::Kind::If:
      for (const Command& ch : c.children)
        if (may_escape_break(ch, p, visiting)) return true;
      return false;
    case Command::Kind::Call: {
      auto it = p.procedures.find(c.name);
      if (it == p.procedures.end()) return false;
      if (!visiting.insert(c.name).second) return false;
      bool out = may_escape_break(it->second, p, visiting);
      visiting.erase(c.name);
      return out;
    }
    default:
      return false;
  }
}

void collect_names(const Command& c, std::set<std::string>& rule_names,
                   std::set<std::string>& proc_names) {
  if (c.kind == Command::Kind::RuleCall)
    rule_names.insert(c.rules.begin(), c.rules.end());
  if (c.kind == Command::Kind::Call) proc_names.insert(c.name);
  for (const Command& ch : c.children) collect_names(ch, rule_names, proc_names);
}

}  // namespace

std::vector<std::string> check_program(const Program& p) {
  std::vector<std::string> issues;
  auto main = p.procedures.find("Main");
  if (main == p.procedures.end()) {
    issues.push_back("no Main procedure");
    return issues;
  }
  std::set<std::string> rule_names, proc_names;
  for (const auto& [name, body] : p.procedures) collect_names(body, rule_names, proc_names);
  for (const std::string& n : proc_names)
    if (!p.procedures.count(n)) issues.push_back("call to undefined procedure " + n);
  for (const std::string& n : rule_names)
    if (!p.rules.count(n)) issues.push_back("call to undefined rule " + n);
  if (program_may_escape_break(p)) issues.push_back("break outside any loop");
  return issues;
}

bool program_may_escape_break(const Program& p) {
  auto main = p.procedures.find("Main");
  if (main == p.procedures.end()) return false;
  std::set<std::string> visiting;
  return may_escape_break(main->second, p, visiting);
}

}  // namespace rgt
