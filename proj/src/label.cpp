#include "rgt/label.hpp"

namespace rgt {

std::string to_string(const Atom& a) {
  if (is_int(a)) return std::to_string(std::get<int64_t>(a));
  std::string out = "\"";
  for (char c : std::get<std::string>(a)) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string to_string(const Label& l) {
  if (l.empty()) return "empty";
  std::string out;
  for (size_t i = 0; i < l.size(); ++i) {
    if (i) out.push_back(':');
    out += to_string(l[i]);
  }
  return out;
}

}  // namespace rgt
