#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace rgt {

// Generation-checked arena handles. Deleting an item bumps the slot
// generation, so a stale handle is detectable and never aliases a live item.
struct NodeId {
  uint32_t index = 0;
  uint32_t gen = 0;
  auto operator<=>(const NodeId&) const = default;
};

struct EdgeId {
  uint32_t index = 0;
  uint32_t gen = 0;
  auto operator<=>(const EdgeId&) const = default;
};

}  // namespace rgt

template <>
struct std::hash<rgt::NodeId> {
  size_t operator()(const rgt::NodeId& id) const noexcept {
    return std::hash<uint64_t>{}((uint64_t(id.gen) << 32) | id.index);
  }
};

template <>
struct std::hash<rgt::EdgeId> {
  size_t operator()(const rgt::EdgeId& id) const noexcept {
    return std::hash<uint64_t>{}((uint64_t(id.gen) << 32) | id.index);
  }
};
