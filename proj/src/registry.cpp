#include "msd/registry.hpp"

namespace msd {

namespace {

CodeSpec make_eq8() {
  GeneratorSet gs;
  gs.n = 3;
  gs.generators = {parse_pauli("ZIZ"), parse_pauli("XZX")};
  gs.logical_z = parse_pauli("XXY");
  gs.logical_x = parse_pauli("IXZ");
  gs.validate();
  return CodeSpec{"eq8_3qubit", gs, -1};
}

CodeSpec make_steane() {
  GeneratorSet gs;
  gs.n = 7;
  gs.generators = {parse_pauli("IIIXXXX"), parse_pauli("IXXIIXX"), parse_pauli("XIXIXIX"),
                   parse_pauli("IIIZZZZ"), parse_pauli("IZZIIZZ"), parse_pauli("ZIZIZIZ")};
  gs.logical_z = parse_pauli("ZZZZZZZ");
  gs.logical_x = parse_pauli("XXXXXXX");
  gs.validate();
  return CodeSpec{"steane_7qubit", gs, -1};
}

CodeSpec make_perfect_5qubit() {
  // The 5-qubit code in CWS form: 5-cycle graph, all-ones codeword.
  Graph g;
  g.n = 5;
  for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
  CwsCode c;
  c.graph = g;
  c.codeword = 0b11111;
  c.check();
  return CodeSpec{"perfect_5qubit_cws", c, -1};
}

}  // namespace

CodeSpec builtin(const std::string& name) {
  if (name == "eq8_3qubit") return make_eq8();
  if (name == "steane_7qubit") return make_steane();
  if (name == "perfect_5qubit_cws") return make_perfect_5qubit();
  throw Error("unknown builtin code '" + name + "'");
}

std::vector<std::string> builtin_names() {
  return {"eq8_3qubit", "steane_7qubit", "perfect_5qubit_cws"};
}

}  // namespace msd
