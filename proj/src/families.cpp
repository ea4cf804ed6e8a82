#include "rgt/families.hpp"

#include <cmath>
#include <random>
#include <unordered_set>

namespace rgt {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::List: return "list";
    case Family::Cycle: return "cycle";
    case Family::Grid: return "grid";
    case Family::BinaryTree: return "tree";
    case Family::Star: return "star";
    case Family::Discrete: return "discrete";
    case Family::KKStar: return "kkstar";
  }
  return "?";
}

std::optional<Family> family_from_string(std::string_view s) {
  if (s == "list") return Family::List;
  if (s == "cycle") return Family::Cycle;
  if (s == "grid") return Family::Grid;
  if (s == "tree" || s == "binarytree") return Family::BinaryTree;
  if (s == "star") return Family::Star;
  if (s == "discrete") return Family::Discrete;
  if (s == "kkstar") return Family::KKStar;
  return std::nullopt;
}

namespace {

NodeId grey_node(HostGraph& g) { return g.add_node({}, NodeMark::Grey, false); }

void plain_edge(HostGraph& g, NodeId a, NodeId b) {
  g.add_edge(a, b, {}, EdgeMark::Unmarked);
}

uint64_t derive_square(const FamilySpec& s, uint64_t given) {
  if (given) return given;
  uint64_t k = uint64_t(std::llround(std::sqrt(double(s.size))));
  return k < 1 ? 1 : k;
}

}  // namespace

HostGraph generate(const FamilySpec& spec, Backend backend) {
  if (spec.size < 1) throw InvalidSize("family size must be at least 1");
  HostGraph g(backend);
  switch (spec.kind) {
    case Family::List: {
      std::vector<NodeId> v;
      for (uint64_t i = 0; i < spec.size; ++i) v.push_back(grey_node(g));
      for (uint64_t i = 0; i + 1 < spec.size; ++i) plain_edge(g, v[i], v[i + 1]);
      break;
    }
    case Family::Cycle: {
      std::vector<NodeId> v;
      for (uint64_t i = 0; i < spec.size; ++i) v.push_back(grey_node(g));
      for (uint64_t i = 0; i < spec.size; ++i) plain_edge(g, v[i], v[(i + 1) % spec.size]);
      break;
    }
    case Family::Grid: {
      uint64_t w = derive_square(spec, spec.width);
      uint64_t h = spec.height ? spec.height : (spec.width ? spec.width : derive_square(spec, 0));
      std::vector<NodeId> v;
      for (uint64_t i = 0; i < w * h; ++i) v.push_back(grey_node(g));
      for (uint64_t r = 0; r < h; ++r) {
        for (uint64_t c = 0; c < w; ++c) {
          if (c + 1 < w) plain_edge(g, v[r * w + c], v[r * w + c + 1]);
          if (r + 1 < h) plain_edge(g, v[r * w + c], v[(r + 1) * w + c]);
        }
      }
      break;
    }
    case Family::BinaryTree: {
      std::vector<NodeId> v;
      for (uint64_t i = 0; i < spec.size; ++i) v.push_back(grey_node(g));
      for (uint64_t i = 0; i < spec.size; ++i) {
        if (2 * i + 1 < spec.size) plain_edge(g, v[i], v[2 * i + 1]);
        if (2 * i + 2 < spec.size) plain_edge(g, v[i], v[2 * i + 2]);
      }
      break;
    }
    case Family::Star: {
      NodeId centre = grey_node(g);
      for (uint64_t i = 0; i + 1 < spec.size; ++i) {
        NodeId spoke = grey_node(g);
        if (i % 2 == 0) plain_edge(g, centre, spoke);
        else plain_edge(g, spoke, centre);
      }
      break;
    }
    case Family::Discrete: {
      for (uint64_t i = 0; i < spec.size; ++i) grey_node(g);
      break;
    }
    case Family::KKStar: {
      uint64_t k = derive_square(spec, spec.k);
      for (uint64_t c = 0; c < k; ++c) {
        NodeId centre = grey_node(g);
        for (uint64_t s = 0; s < k; ++s) {
          NodeId spoke = grey_node(g);
          plain_edge(g, spoke, centre);
        }
      }
      break;
    }
  }
  return g;
}

HostGraph random_digraph(uint64_t n, uint64_t m, uint64_t seed, Backend backend) {
  if (n < 1) throw InvalidSize("random digraph needs at least one node");
  if (m > n * (n - 1)) throw InvalidSize("too many edges for a simple digraph");
  HostGraph g(backend);
  std::vector<NodeId> v;
  for (uint64_t i = 0; i < n; ++i) v.push_back(grey_node(g));
  std::mt19937_64 rng(seed);
  std::unordered_set<uint64_t> used;
  while (used.size() < m) {
    uint64_t a = rng() % n;
    uint64_t b = rng() % n;
    if (a == b) continue;
    uint64_t key = a * n + b;
    if (!used.insert(key).second) continue;
    plain_edge(g, v[a], v[b]);
  }
  return g;
}

}  // namespace rgt
