#pragma once

#include <string>

#include "msd/distill.hpp"

namespace msd {

// Key-value code file. Lines are `key: value`, `#` starts a comment, order
// is irrelevant.
//
//   format: cws | stabilizer
//   n: <qubits>
//   # cws:
//   graph: 010;101;010          (semicolon-separated adjacency bit rows)
//   codeword: 110
//   correction: -x-y+z          (optional rotation label)
//   # stabilizer:
//   generators: ZIZ, XZX
//   logical_z: XXY
//   logical_x: IXZ
CodeSpec parse_code_file(const std::string& text, const std::string& origin = "<string>");
CodeSpec load_code_file(const std::string& path);

std::string serialize_code(const CodeSpec& code);

}  // namespace msd
