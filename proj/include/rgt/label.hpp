#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace rgt {

// A list label: a finite (possibly empty) sequence of integer or string atoms.
using Atom = std::variant<int64_t, std::string>;
using Label = std::vector<Atom>;

inline bool is_int(const Atom& a) { return std::holds_alternative<int64_t>(a); }
inline bool is_string(const Atom& a) { return std::holds_alternative<std::string>(a); }

// Text form used by the host-graph format: integers bare, strings double-quoted,
// atoms joined by ':'. The empty label prints as "empty".
std::string to_string(const Atom& a);
std::string to_string(const Label& l);

}  // namespace rgt
