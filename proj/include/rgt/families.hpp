#pragma once

#include <optional>
#include <string_view>

#include "rgt/graph.hpp"

namespace rgt {

enum class Family : uint8_t { List, Cycle, Grid, BinaryTree, Star, Discrete, KKStar };

std::string_view to_string(Family f);
std::optional<Family> family_from_string(std::string_view s);

/// Benchmark input description. `size` scales the instance to roughly that
/// many nodes: List/Cycle/BinaryTree/Discrete use it as the node count, Star
/// as centre plus size-1 spokes, Grid derives width = height = round(sqrt(size))
/// unless given explicitly, KKStar derives k = round(sqrt(size)) unless given.
struct FamilySpec {
  Family kind = Family::List;
  uint64_t size = 1;
  uint64_t width = 0, height = 0;  // grid override
  uint64_t k = 0;                  // kkstar override
};

/// Deterministic generator. Every node is grey, non-rooted and empty-labelled;
/// every edge is unmarked. Star spokes alternate out/in around the centre;
/// KKStar builds k disjoint copies of a k-spoke in-star. Throws InvalidSize.
HostGraph generate(const FamilySpec& spec, Backend backend = Backend::Indexed);

/// Simple digraph (no loops or parallel edges) with m edges drawn uniformly
/// without replacement, reproducible by seed. Same input contract as the
/// generators. Throws InvalidSize when m > n(n-1) or n < 1.
HostGraph random_digraph(uint64_t n, uint64_t m, uint64_t seed,
                         Backend backend = Backend::Indexed);

}  // namespace rgt
