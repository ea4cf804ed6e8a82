#pragma once

#include <string>
#include <vector>

#include "rgt/program.hpp"

namespace rgt {

/// The five case-study programs, constructed rule-for-rule: is-connected,
/// is-discrete, is-dag, component-numbering, bfs. Throws UnknownProgram.
Program build_program(const std::string& name);

const std::vector<std::string>& program_names();

}  // namespace rgt
