#include "rgt/marks.hpp"

namespace rgt {

std::string_view to_string(NodeMark m) {
  switch (m) {
    case NodeMark::Unmarked: return "none";
    case NodeMark::Grey: return "grey";
    case NodeMark::Red: return "red";
    case NodeMark::Green: return "green";
    case NodeMark::Blue: return "blue";
  }
  return "?";
}

std::string_view to_string(EdgeMark m) {
  switch (m) {
    case EdgeMark::Unmarked: return "none";
    case EdgeMark::Dashed: return "dashed";
    case EdgeMark::Red: return "red";
    case EdgeMark::Green: return "green";
    case EdgeMark::Blue: return "blue";
  }
  return "?";
}

std::string_view to_string(Orientation o) {
  switch (o) {
    case Orientation::In: return "in";
    case Orientation::Out: return "out";
    case Orientation::Loop: return "loop";
  }
  return "?";
}

std::optional<NodeMark> node_mark_from_string(std::string_view s) {
  if (s == "none") return NodeMark::Unmarked;
  if (s == "grey") return NodeMark::Grey;
  if (s == "red") return NodeMark::Red;
  if (s == "green") return NodeMark::Green;
  if (s == "blue") return NodeMark::Blue;
  return std::nullopt;
}

std::optional<EdgeMark> edge_mark_from_string(std::string_view s) {
  if (s == "none") return EdgeMark::Unmarked;
  if (s == "dashed") return EdgeMark::Dashed;
  if (s == "red") return EdgeMark::Red;
  if (s == "green") return EdgeMark::Green;
  if (s == "blue") return EdgeMark::Blue;
  return std::nullopt;
}

}  // namespace rgt
