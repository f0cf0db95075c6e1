#pragma once

#include <string>
#include <vector>

#include "msd/distill.hpp"

namespace msd {

// Built-in codes: eq8_3qubit, steane_7qubit, perfect_5qubit_cws.
CodeSpec builtin(const std::string& name);

std::vector<std::string> builtin_names();

}  // namespace msd
