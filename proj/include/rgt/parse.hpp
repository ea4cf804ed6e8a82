#pragma once

#include <string>
#include <vector>

#include "rgt/graph.hpp"
#include "rgt/program.hpp"
#include "rgt/rule.hpp"

namespace rgt {

struct Diagnostic {
  int line = 0;  // 1-based
  int col = 0;
  std::string message;
};
using Diagnostics = std::vector<Diagnostic>;

std::string to_string(const Diagnostic& d);

template <class T>
struct ParseResult {
  std::optional<T> value;
  Diagnostics diags;
  bool ok() const { return value.has_value(); }
  T& operator*() { return *value; }
  const T& operator*() const { return *value; }
  T* operator->() { return &*value; }
  const T* operator->() const { return &*value; }
};

// Host graphs: `[ (n0(R), "a":1 # red) (n1, empty # grey) | (e0, n0, n1, 5) ]`.
// Atoms are integers or double-quoted strings joined by ':'; `empty` is the
// empty label; omitting `# mark` means unmarked; `(R)` flags a root. Ids are
// free-form and mapped to arena slots in order of appearance.
ParseResult<HostGraph> parse_host_graph(std::string_view text,
                                        Backend backend = Backend::Indexed);

// Rules: `name(x,y:list, n:int) [ nodes | edges ] => [ nodes | edges ]
// interface {ids}`, with `# any` for the wildcard mark and `(B)` after an
// edge id for a bidirectional edge. A file may hold any number of rules.
ParseResult<std::vector<Rule>> parse_rules(std::string_view text);
ParseResult<Rule> parse_rule(std::string_view text);

// Programs: `Name = cmd` declarations; cmd is a ';'-separated sequence of
// atoms; an atom is a rule/procedure name, {rule, set}, a parenthesised
// command, try/if with single-atom branches, break, skip or fail, optionally
// iterated with '!'. Identifiers naming a declaration become procedure
// calls, all others rule calls. The rule table is attached by the caller.
ParseResult<Program> parse_program(std::string_view text);

std::string print_host_graph(const HostGraph& g);
std::string print_rule(const Rule& r);
std::string print_rules(const std::vector<Rule>& rules);
std::string print_program(const Program& p);

}  // namespace rgt
