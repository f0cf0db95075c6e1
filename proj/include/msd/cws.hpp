#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "msd/pauli.hpp"

namespace msd {

// Simple undirected graph on up to kMaxQubits vertices, adjacency stored as
// one bitmask per vertex.
struct Graph {
  int n = 0;
  std::array<uint8_t, kMaxQubits> adj{};  // adj[i] bit j set iff edge (i,j)

  bool has_edge(int i, int j) const { return (adj[i] >> j) & 1; }
  void add_edge(int i, int j);
  int edge_count() const;
  void check() const;  // symmetric, zero diagonal, n in range

  // Upper-triangle edge bits in the order (0,1),(0,2),...,(0,n-1),(1,2),...
  uint32_t upper_bits() const;
  static Graph from_upper_bits(int n, uint32_t bits);
};

bool operator==(const Graph& a, const Graph& b);

// Lexicographically minimal upper_bits over all vertex permutations.
Graph canonical_graph(const Graph& g);

enum class GraphMode { all, non_isomorphic };

// `all`: every edge subset (2^(n(n-1)/2) graphs). `non_isomorphic`: one
// canonical representative per isomorphism class.
std::vector<Graph> enumerate_graphs(int n, GraphMode mode);

struct CwsCode {
  Graph graph;
  unsigned codeword = 0;  // bit i = vertex i; must be nonzero
  int correction = -1;    // index into octahedral_rotations(), -1 = none

  void check() const;
};

struct LogicalBasis {
  cvec ket0, ket1;
};

// |Gamma>: amplitude of |x> is 2^{-n/2} * i^{x^T Gamma x}.
cvec graph_state(const Graph& g);

// ket0 = |Gamma>, ket1 = Z^w |Gamma>.
LogicalBasis logical_basis(const CwsCode& c);

// n-1 codespace stabilizers (products of graph-state generators K_i = X_i
// Z^{row i} whose exponent vector a satisfies a.w = 0 mod 2), logical_z =
// the first K_j with w_j = 1, logical_x = Z^w. Validated against the dense
// basis before returning.
GeneratorSet codespace_generators(const CwsCode& c);

// "H q<i>" per qubit, "CZ q<i> q<j>" per edge, then a comment naming the
// logical X operator.
std::string emit_encoding_circuit(const CwsCode& c);

}  // namespace msd
