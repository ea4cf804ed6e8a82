#include "rgt/programs.hpp"

#include "rgt/errors.hpp"

namespace rgt {

namespace {

using NM = NodeMark;
using EM = EdgeMark;

const NodeMarkPattern kAnyNode = std::nullopt;

// Variable layout shared by the edge rules: x=0, y=1, z=2 (all list).
const VarDecls kXYZ = {{"x", VarType::List}, {"y", VarType::List}, {"z", VarType::List}};
const VarDecls kX = {{"x", VarType::List}};

LabelExpr v(int var) { return {LabelTerm::variable(var)}; }

LabelExpr vcat(int var, LabelTerm tail) {
  return {LabelTerm::variable(var), std::move(tail)};
}

RuleNode rnode(std::string id, LabelExpr label, NodeMarkPattern mark, bool rooted) {
  return RuleNode{std::move(id), std::move(label), mark, rooted};
}

RuleEdge redge(std::string id, std::string src, std::string tgt, LabelExpr label,
               EdgeMarkPattern mark, bool directed) {
  return RuleEdge{std::move(id), std::move(src), std::move(tgt), std::move(label), mark, directed};
}

// Single-node relabelling rule over one interface node labelled x.
Rule unary(std::string name, NM lm, bool lr, NM rm, bool rr) {
  Rule r;
  r.name = std::move(name);
  r.vars = kX;
  r.lhs.nodes = {rnode("1", v(0), lm, lr)};
  r.rhs.nodes = {rnode("1", v(0), rm, rr)};
  r.interface = {"1"};
  return r;
}

struct Side {
  NodeMarkPattern mark;
  bool rooted;
};

// Two-node rule over an edge labelled z between nodes labelled x and y.
Rule binary(std::string name, Side l1, Side l2, Side r1, Side r2, EM le, EM re, bool directed) {
  Rule r;
  r.name = std::move(name);
  r.vars = kXYZ;
  r.lhs.nodes = {rnode("1", v(0), l1.mark, l1.rooted), rnode("2", v(1), l2.mark, l2.rooted)};
  r.rhs.nodes = {rnode("1", v(0), r1.mark, r1.rooted), rnode("2", v(1), r2.mark, r2.rooted)};
  r.lhs.edges = {redge("e1", "1", "2", v(2), le, directed)};
  r.rhs.edges = {redge("e1", "1", "2", v(2), re, directed)};
  r.interface = {"1", "2"};
  return r;
}

void add_rules(Program& p, std::vector<Rule> rules) {
  for (Rule& r : rules) {
    validate_rule(r);
    p.rules.emplace(r.name, std::move(r));
  }
}

Command rc(std::vector<std::string> names) { return Command::rule_call(std::move(names)); }
Command seq(std::vector<Command> cs) { return Command::seq(std::move(cs)); }
Command loop(Command c) { return Command::loop(std::move(c)); }
Command tre(Command c, Command t, Command e) {
  return Command::try_else(std::move(c), std::move(t), std::move(e));
}
Command ife(Command c, Command t) {
  return Command::if_then(std::move(c), std::move(t), Command::skip());
}

Program make_is_connected() {
  Program p;
  add_rules(p, {
      unary("init", NM::Grey, false, NM::Blue, true),
      unary("match", NM::Grey, false, NM::Grey, false),
      binary("forward", {NM::Blue, true}, {NM::Grey, false}, {NM::Blue, false},
             {NM::Blue, true}, EM::Unmarked, EM::Dashed, false),
      binary("back", {NM::Blue, false}, {NM::Blue, true}, {NM::Blue, true},
             {NM::Unmarked, false}, EM::Dashed, EM::Unmarked, false),
  });
  p.procedures["Main"] = tre(rc({"init"}),
                             seq({loop(Command::call("DFS")), Command::call("Check")}),
                             Command::skip());
  p.procedures["DFS"] = seq({loop(rc({"forward"})),
                             tre(rc({"back"}), Command::skip(), Command::brk())});
  p.procedures["Check"] = ife(rc({"match"}), Command::fail());
  return p;
}

Program make_is_discrete() {
  Program p;
  Rule isolated;
  isolated.name = "isolated";
  isolated.vars = kX;
  isolated.lhs.nodes = {rnode("1", v(0), NM::Red, true)};
  isolated.rhs.nodes = {rnode("2", v(0), NM::Red, false)};
  add_rules(p, {
      unary("mark", NM::Grey, false, NM::Red, true),
      std::move(isolated),
      unary("root", NM::Red, true, NM::Red, true),
  });
  p.procedures["Main"] =
      seq({loop(seq({rc({"mark"}), tre(rc({"isolated"}), Command::skip(), Command::brk())})),
           ife(rc({"root"}), Command::fail())});
  return p;
}

Program make_is_dag() {
  Program p;
  Rule lp;
  lp.name = "loop";
  lp.vars = {{"x", VarType::List}, {"z", VarType::List}};
  lp.lhs.nodes = {rnode("1", v(0), NM::Red, true)};
  lp.lhs.edges = {redge("e1", "1", "1", v(1), EM::Unmarked, true)};
  lp.rhs.nodes = {rnode("1", v(0), NM::Green, true)};
  lp.rhs.edges = {redge("e1", "1", "1", v(1), EM::Unmarked, true)};
  lp.interface = {"1"};
  add_rules(p, {
      unary("init", NM::Grey, false, NM::Red, true),
      unary("unroot", NM::Red, true, NM::Blue, false),
      unary("set_flag", NM::Red, true, NM::Green, true),
      unary("flag", NM::Green, true, NM::Green, true),
      binary("next_edge", {NM::Red, true}, {kAnyNode, false}, {NM::Red, true},
             {kAnyNode, false}, EM::Unmarked, EM::Red, true),
      binary("ignore", {NM::Red, true}, {NM::Blue, false}, {NM::Red, true}, {NM::Blue, false},
             EM::Red, EM::Blue, true),
      binary("move", {NM::Red, true}, {NM::Grey, false}, {NM::Red, false}, {NM::Red, true},
             EM::Red, EM::Dashed, true),
      binary("back", {NM::Red, false}, {NM::Red, true}, {NM::Red, true}, {NM::Blue, false},
             EM::Dashed, EM::Blue, true),
      std::move(lp),
  });
  p.procedures["Main"] =
      seq({loop(seq({rc({"init"}), loop(Command::call("DFS")),
                     tre(rc({"unroot"}), Command::skip(), Command::brk())})),
           Command::call("Check")});
  p.procedures["DFS"] =
      tre(rc({"next_edge"}),
          tre(rc({"move", "ignore"}), Command::skip(),
              seq({rc({"set_flag"}), Command::brk()})),
          seq({tre(rc({"loop"}), Command::skip(), Command::skip()),
               tre(rc({"back"}), Command::skip(), Command::brk())}));
  p.procedures["Check"] = ife(rc({"flag"}), Command::fail());
  return p;
}

Program make_component_numbering() {
  Program p;
  // init appends the first component id; next hands the incremented id to a
  // fresh component's seed; move propagates it along the spanning edge.
  Rule init;
  init.name = "init";
  init.vars = kX;
  init.lhs.nodes = {rnode("1", v(0), NM::Grey, false)};
  init.rhs.nodes = {rnode("1", vcat(0, LabelTerm::constant(int64_t{1})), NM::Blue, true)};
  init.interface = {"1"};

  Rule next;
  next.name = "next";
  next.vars = {{"x", VarType::List}, {"y", VarType::List}, {"n", VarType::Int}};
  next.lhs.nodes = {rnode("1", vcat(0, LabelTerm::variable(2)), NM::Blue, true),
                    rnode("2", v(1), NM::Grey, false)};
  next.rhs.nodes = {
      rnode("1", vcat(0, LabelTerm::variable(2)), NM::Blue, false),
      rnode("2",
            vcat(1, LabelTerm::sum({LabelTerm::variable(2), LabelTerm::constant(int64_t{1})})),
            NM::Blue, true)};
  next.interface = {"1", "2"};

  Rule move;
  move.name = "move";
  move.vars = {{"x", VarType::List}, {"y", VarType::List}, {"z", VarType::List},
               {"i", VarType::Int}};
  move.lhs.nodes = {rnode("1", vcat(0, LabelTerm::variable(3)), NM::Blue, true),
                    rnode("2", v(1), NM::Grey, false)};
  move.lhs.edges = {redge("e1", "1", "2", v(2), EM::Red, false)};
  move.rhs.nodes = {rnode("1", vcat(0, LabelTerm::variable(3)), NM::Blue, false),
                    rnode("2", vcat(1, LabelTerm::variable(3)), NM::Blue, true)};
  move.rhs.edges = {redge("e1", "1", "2", v(2), EM::Dashed, false)};
  move.interface = {"1", "2"};

  add_rules(p, {
      std::move(init),
      unary("unroot", NM::Blue, true, NM::Blue, false),
      std::move(next),
      binary("next_edge", {NM::Blue, true}, {kAnyNode, false}, {NM::Blue, true},
             {kAnyNode, false}, EM::Unmarked, EM::Red, false),
      binary("ignore", {NM::Blue, true}, {NM::Blue, false}, {NM::Blue, true}, {NM::Blue, false},
             EM::Red, EM::Blue, false),
      std::move(move),
      binary("back", {NM::Blue, false}, {NM::Blue, true}, {NM::Blue, true}, {NM::Blue, false},
             EM::Dashed, EM::Blue, false),
  });
  p.procedures["Main"] =
      seq({tre(rc({"init"}), loop(Command::call("DFS")), Command::skip()),
           loop(tre(rc({"next"}), loop(Command::call("DFS")), Command::brk())),
           tre(rc({"unroot"}), Command::skip(), Command::skip())});
  p.procedures["DFS"] = seq({loop(seq({rc({"next_edge"}), rc({"move", "ignore"})})),
                             tre(rc({"back"}), Command::skip(), Command::brk())});
  return p;
}

Program make_bfs() {
  Program p;
  add_rules(p, {
      unary("init", NM::Grey, false, NM::Green, false),
      unary("root", NM::Red, false, NM::Red, true),
      unary("unroot", NM::Red, true, NM::Blue, false),
      unary("mark", NM::Green, false, NM::Red, false),
      binary("next_edge", {NM::Red, true}, {kAnyNode, false}, {NM::Red, true},
             {kAnyNode, false}, EM::Unmarked, EM::Red, false),
      binary("move", {NM::Red, true}, {NM::Grey, false}, {NM::Red, true}, {NM::Green, false},
             EM::Red, EM::Blue, false),
      binary("ignore", {NM::Red, true}, {kAnyNode, false}, {NM::Red, true}, {kAnyNode, false},
             EM::Red, EM::Blue, false),
  });
  p.procedures["Main"] = loop(seq({rc({"init"}), loop(Command::call("BFS"))}));
  p.procedures["BFS"] =
      seq({tre(rc({"mark"}), Command::skip(), Command::brk()), loop(rc({"mark"})),
           loop(seq({rc({"root"}),
                     loop(seq({rc({"next_edge"}),
                               tre(rc({"move"}), Command::skip(), rc({"ignore"}))})),
                     rc({"unroot"})}))});
  return p;
}

}  // namespace

const std::vector<std::string>& program_names() {
  static const std::vector<std::string> names = {
      "is-connected", "is-discrete", "is-dag", "component-numbering", "bfs"};
  return names;
}

Program build_program(const std::string& name) {
  if (name == "is-connected") return make_is_connected();
  if (name == "is-discrete") return make_is_discrete();
  if (name == "is-dag") return make_is_dag();
  if (name == "component-numbering") return make_component_numbering();
  if (name == "bfs") return make_bfs();
  throw UnknownProgram(name);
}

}  // namespace rgt
