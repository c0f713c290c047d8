#pragma once

#include <string>
#include <vector>

#include "jsonio.hpp"
#include "measuring.hpp"
#include "verdict.hpp"

namespace comeasure {

// Named structures and measuring setups used by the CLI and the test
// suites, so nothing depends on external files.

std::vector<std::string> builtin_structure_names();
Structure builtin_structure(const std::string& name);  // throws std::out_of_range on unknown

std::vector<std::string> builtin_measuring_names();
std::vector<Verdict> run_builtin_measuring(const std::string& name);  // throws std::out_of_range

}  // namespace comeasure
