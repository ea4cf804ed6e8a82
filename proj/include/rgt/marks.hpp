#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace rgt {

// Mark palettes. The enum order fixes the bucket index order everywhere:
// node lists and edge bucket rows are laid out in this order.
enum class NodeMark : uint8_t { Unmarked = 0, Grey, Red, Green, Blue };
enum class EdgeMark : uint8_t { Unmarked = 0, Dashed, Red, Green, Blue };

// Loops are a distinct orientation, never In or Out.
enum class Orientation : uint8_t { In = 0, Out, Loop };

inline constexpr int kMarkCount = 5;
inline constexpr int kOrientationCount = 3;

std::string_view to_string(NodeMark m);
std::string_view to_string(EdgeMark m);
std::string_view to_string(Orientation o);

std::optional<NodeMark> node_mark_from_string(std::string_view s);
std::optional<EdgeMark> edge_mark_from_string(std::string_view s);

}  // namespace rgt
