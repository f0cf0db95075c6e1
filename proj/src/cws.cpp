#include "msd/cws.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>

namespace msd {

void Graph::add_edge(int i, int j) {
  if (i == j) throw Error("Graph: self loop");
  adj[i] |= uint8_t(1u << j);
  adj[j] |= uint8_t(1u << i);
}

int Graph::edge_count() const {
  int c = 0;
  for (int i = 0; i < n; ++i) c += std::popcount(static_cast<unsigned>(adj[i]));
  return c / 2;
}

void Graph::check() const {
  if (n < 2 || n > kMaxQubits) throw Error("Graph: vertex count out of range");
  for (int i = 0; i < n; ++i) {
    if ((adj[i] >> i) & 1) throw Error("Graph: nonzero diagonal");
    if (adj[i] >> n) throw Error("Graph: adjacency bits beyond vertex count");
    for (int j = 0; j < n; ++j)
      if (has_edge(i, j) != has_edge(j, i)) throw Error("Graph: adjacency not symmetric");
  }
}

uint32_t Graph::upper_bits() const {
  uint32_t bits = 0;
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      if (has_edge(i, j)) bits |= 1u << k;
  return bits;
}

Graph Graph::from_upper_bits(int n, uint32_t bits) {
  Graph g;
  g.n = n;
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      if ((bits >> k) & 1) g.add_edge(i, j);
  return g;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n == b.n && a.adj == b.adj;
}

Graph canonical_graph(const Graph& g) {
  g.check();
  std::array<int, kMaxQubits> perm{};
  std::iota(perm.begin(), perm.begin() + g.n, 0);
  uint32_t best = ~0u;
  do {
    uint32_t bits = 0;
    int k = 0;
    for (int i = 0; i < g.n; ++i)
      for (int j = i + 1; j < g.n; ++j, ++k)
        if (g.has_edge(perm[i], perm[j])) bits |= 1u << k;
    best = std::min(best, bits);
  } while (std::next_permutation(perm.begin(), perm.begin() + g.n));
  return Graph::from_upper_bits(g.n, best);
}

std::vector<Graph> enumerate_graphs(int n, GraphMode mode) {
  if (n < 2 || n > 6) throw Error("enumerate_graphs: n must be in [2,6]");
  const int edges = n * (n - 1) / 2;
  std::vector<Graph> out;
  if (mode == GraphMode::all) {
    out.reserve(size_t(1) << edges);
    for (uint32_t bits = 0; bits < (1u << edges); ++bits)
      out.push_back(Graph::from_upper_bits(n, bits));
  } else {
    std::set<uint32_t> reps;
    for (uint32_t bits = 0; bits < (1u << edges); ++bits)
      reps.insert(canonical_graph(Graph::from_upper_bits(n, bits)).upper_bits());
    out.reserve(reps.size());
    for (uint32_t bits : reps) out.push_back(Graph::from_upper_bits(n, bits));
  }
  return out;
}

void CwsCode::check() const {
  graph.check();
  if (codeword == 0) throw Error("CwsCode: codeword must be nonzero");
  if (codeword >> graph.n) throw Error("CwsCode: codeword bits beyond vertex count");
}

cvec graph_state(const Graph& g) {
  g.check();
  const int n = g.n;
  const size_t dim = size_t(1) << n;
  const double amp = std::pow(2.0, -0.5 * n);
  cvec v(dim);
  for (size_t b = 0; b < dim; ++b) {
    // Support of |x> as a vertex mask (qubit i = index bit n-1-i).
    unsigned s = 0;
    for (int i = 0; i < n; ++i)
      if ((b >> (n - 1 - i)) & 1) s |= 1u << i;
    // x^T Gamma x = 2 * (number of edges inside the support).
    int edges = 0;
    for (int i = 0; i < n; ++i)
      if ((s >> i) & 1) edges += std::popcount(static_cast<unsigned>(g.adj[i]) & s & ~((2u << i) - 1));
    v[b] = (edges & 1) ? -amp : amp;
  }
  return v;
}

LogicalBasis logical_basis(const CwsCode& c) {
  c.check();
  const int n = c.graph.n;
  LogicalBasis lb;
  lb.ket0 = graph_state(c.graph);
  lb.ket1.resize(lb.ket0.size());
  for (size_t b = 0; b < lb.ket0.size(); ++b) {
    unsigned s = 0;
    for (int i = 0; i < n; ++i)
      if ((b >> (n - 1 - i)) & 1) s |= 1u << i;
    const bool flip = std::popcount(c.codeword & s) & 1;
    lb.ket1[b] = flip ? -lb.ket0[b] : lb.ket0[b];
  }
  return lb;
}

GeneratorSet codespace_generators(const CwsCode& c) {
  c.check();
  const int n = c.graph.n;
  std::vector<PauliOperator> k_ops(n);
  for (int i = 0; i < n; ++i) {
    k_ops[i].n = n;
    k_ops[i].x_bits = uint16_t(1u << i);
    k_ops[i].z_bits = c.graph.adj[i];
  }
  const int j = std::countr_zero(c.codeword);

  GeneratorSet gs;
  gs.n = n;
  for (int i = 0; i < n; ++i) {
    if (i == j) continue;
    PauliOperator p = k_ops[i];
    if ((c.codeword >> i) & 1) p = multiply(p, k_ops[j]);  // keep a.w even
    gs.generators.push_back(p);
  }
  gs.logical_z = k_ops[j];
  gs.logical_x.n = n;
  gs.logical_x.z_bits = static_cast<uint16_t>(c.codeword);
  gs.validate();

  // Internal consistency: eigenvalue actions on the dense basis.
  const LogicalBasis lb = logical_basis(c);
  auto expect = [&](const cvec& got, const cvec& want, const char* what) {
    double err = 0.0;
    for (size_t i = 0; i < got.size(); ++i) err = std::max(err, std::abs(got[i] - want[i]));
    if (err > 1e-10)
      throw Error(std::string("codespace_generators: ") + what + " action failed (err " +
                  std::to_string(err) + ")");
  };
  cvec neg_ket1(lb.ket1.size());
  for (size_t i = 0; i < neg_ket1.size(); ++i) neg_ket1[i] = -lb.ket1[i];
  for (const auto& g : gs.generators) {
    expect(apply_pauli(g, lb.ket0), lb.ket0, "stabilizer on ket0");
    expect(apply_pauli(g, lb.ket1), lb.ket1, "stabilizer on ket1");
  }
  expect(apply_pauli(gs.logical_z, lb.ket0), lb.ket0, "logical_z on ket0");
  expect(apply_pauli(gs.logical_z, lb.ket1), neg_ket1, "logical_z on ket1");
  expect(apply_pauli(gs.logical_x, lb.ket0), lb.ket1, "logical_x on ket0");
  return gs;
}

std::string emit_encoding_circuit(const CwsCode& c) {
  c.check();
  std::string out;
  for (int i = 0; i < c.graph.n; ++i) out += "H q" + std::to_string(i) + "\n";
  for (int i = 0; i < c.graph.n; ++i)
    for (int j = i + 1; j < c.graph.n; ++j)
      if (c.graph.has_edge(i, j))
        out += "CZ q" + std::to_string(i) + " q" + std::to_string(j) + "\n";
  PauliOperator zw;
  zw.n = c.graph.n;
  zw.z_bits = static_cast<uint16_t>(c.codeword);
  out += "# logical_x: " + format_pauli(zw) + "\n";
  return out;
}

}  // namespace msd
