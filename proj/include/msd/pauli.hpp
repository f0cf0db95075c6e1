#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "msd/dense.hpp"

namespace msd {

inline constexpr int kMaxQubits = 8;

// n-qubit Pauli stored as i^phase_exp * prod_i X^{x_i} Z^{z_i}.
// Per qubit, Y is represented as i*X*Z so that the letter 'Y' round-trips.
// Qubit 0 is the leftmost letter of the string form and the most significant
// bit of a basis-state index.
struct PauliOperator {
  int n = 1;
  uint16_t x_bits = 0;  // bit i = qubit i
  uint16_t z_bits = 0;
  uint8_t phase_exp = 0;  // power of i, mod 4

  static PauliOperator identity(int n);

  bool is_identity_letters() const { return x_bits == 0 && z_bits == 0; }
  // True when the dense realization is Hermitian (overall factor +-1).
  bool is_hermitian() const;
  // +1 or -1 for a Hermitian operator.
  int sign() const;
};

bool operator==(const PauliOperator& a, const PauliOperator& b);

PauliOperator parse_pauli(const std::string& s);
// Inverse of parse_pauli on Hermitian operators; non-Hermitian operators get
// an "i"/"-i" prefix (internal use only, not accepted by the file format).
std::string format_pauli(const PauliOperator& p);

bool commutes(const PauliOperator& a, const PauliOperator& b);
// Exact: realize(multiply(a,b)) == realize(a)*realize(b).
PauliOperator multiply(const PauliOperator& a, const PauliOperator& b);

cvec apply_pauli(const PauliOperator& p, const cvec& v);
Cmat realize(const PauliOperator& p);

// Stabilizer generators plus logical operators for a k=1 code.
struct GeneratorSet {
  int n = 0;
  std::vector<PauliOperator> generators;  // length n-1
  PauliOperator logical_z;
  PauliOperator logical_x;

  // Throws Error on any violated invariant: mutual commutation, logical
  // (anti)commutation, symplectic independence, and a rank-2 codespace.
  void validate() const;
};

// prod_i (1 + G_i)/2 over the generators only.
Cmat codespace_projector(const GeneratorSet& gs);

}  // namespace msd
