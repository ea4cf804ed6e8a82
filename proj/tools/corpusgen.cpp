// Regenerates the canonical corpus: one .gpr rule file per built-in program
// and the sample .gpg host graphs. Program .gpp files are maintained by hand.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "rgt/families.hpp"
#include "rgt/parse.hpp"
#include "rgt/programs.hpp"

using namespace rgt;

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
  std::cout << "wrote " << path.string() << "\n";
}

HostGraph cyclic_sample() {
  HostGraph g;
  NodeId a = g.add_node({}, NodeMark::Grey, false);
  NodeId b = g.add_node({}, NodeMark::Grey, false);
  NodeId c = g.add_node({}, NodeMark::Grey, false);
  NodeId d = g.add_node({}, NodeMark::Grey, false);
  g.add_edge(a, b, {}, EdgeMark::Unmarked);
  g.add_edge(b, c, {}, EdgeMark::Unmarked);
  g.add_edge(c, a, {}, EdgeMark::Unmarked);
  g.add_edge(d, a, {}, EdgeMark::Unmarked);
  return g;
}

HostGraph marked_showcase() {
  HostGraph g;
  NodeId a = g.add_node({Atom{std::string("a")}, Atom{int64_t{1}}}, NodeMark::Red, true);
  NodeId b = g.add_node({}, NodeMark::Grey, false);
  NodeId c = g.add_node({Atom{int64_t{-7}}}, NodeMark::Blue, false);
  NodeId d = g.add_node({Atom{std::string("x\"y")}}, NodeMark::Green, true);
  g.add_edge(a, b, {Atom{int64_t{5}}}, EdgeMark::Dashed);
  g.add_edge(b, c, {}, EdgeMark::Red);
  g.add_edge(c, c, {Atom{std::string("loop")}}, EdgeMark::Green);
  g.add_edge(d, a, {Atom{int64_t{0}}, Atom{int64_t{1}}}, EdgeMark::Blue);
  return g;
}

HostGraph parallel_pair() {
  HostGraph g;
  NodeId a = g.add_node({}, NodeMark::Grey, false);
  NodeId b = g.add_node({}, NodeMark::Grey, false);
  g.add_edge(a, b, {}, EdgeMark::Unmarked);
  g.add_edge(a, b, {}, EdgeMark::Unmarked);
  g.add_edge(b, a, {}, EdgeMark::Unmarked);
  return g;
}

HostGraph two_components() {
  HostGraph g;
  std::vector<NodeId> v;
  for (int i = 0; i < 6; ++i) v.push_back(g.add_node({}, NodeMark::Grey, false));
  g.add_edge(v[0], v[1], {}, EdgeMark::Unmarked);
  g.add_edge(v[1], v[2], {}, EdgeMark::Unmarked);
  g.add_edge(v[3], v[4], {}, EdgeMark::Unmarked);
  g.add_edge(v[4], v[5], {}, EdgeMark::Unmarked);
  g.add_edge(v[5], v[3], {}, EdgeMark::Unmarked);
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path root = argc > 1 ? argv[1] : "corpus";
  std::filesystem::create_directories(root / "programs");
  std::filesystem::create_directories(root / "rules");
  std::filesystem::create_directories(root / "graphs");

  for (const std::string& name : program_names()) {
    Program p = build_program(name);
    std::vector<Rule> rules;
    for (const auto& [rn, rule] : p.rules) rules.push_back(rule);
    write_file(root / "rules" / (name + ".gpr"), print_rules(rules));
  }

  auto emit = [&](const std::string& file, const HostGraph& g) {
    write_file(root / "graphs" / file, print_host_graph(g));
  };

  emit("list10.gpg", generate({Family::List, 10}));
  emit("list100.gpg", generate({Family::List, 100}));
  emit("cycle12.gpg", generate({Family::Cycle, 12}));
  emit("cycle1.gpg", generate({Family::Cycle, 1}));
  FamilySpec grid;
  grid.kind = Family::Grid;
  grid.size = 16;
  grid.width = 4;
  grid.height = 4;
  emit("grid4x4.gpg", generate(grid));
  FamilySpec wide;
  wide.kind = Family::Grid;
  wide.size = 10;
  wide.width = 5;
  wide.height = 2;
  emit("grid5x2.gpg", generate(wide));
  emit("tree15.gpg", generate({Family::BinaryTree, 15}));
  emit("tree31.gpg", generate({Family::BinaryTree, 31}));
  emit("star9.gpg", generate({Family::Star, 9}));
  emit("star33.gpg", generate({Family::Star, 33}));
  emit("discrete9.gpg", generate({Family::Discrete, 9}));
  FamilySpec kk;
  kk.kind = Family::KKStar;
  kk.size = 1;
  kk.k = 3;
  emit("kkstar3.gpg", generate(kk));
  kk.k = 5;
  emit("kkstar5.gpg", generate(kk));
  emit("single.gpg", generate({Family::Discrete, 1}));
  emit("empty.gpg", HostGraph{});
  emit("dag_sample.gpg", cyclic_sample());
  emit("marked.gpg", marked_showcase());
  emit("parallel.gpg", parallel_pair());
  emit("two_components.gpg", two_components());
  emit("random20.gpg", random_digraph(20, 40, 1));
  return 0;
}
