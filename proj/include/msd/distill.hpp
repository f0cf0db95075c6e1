#pragma once

#include <string>
#include <variant>
#include <vector>

#include "msd/bloch.hpp"
#include "msd/cws.hpp"
#include "msd/pauli.hpp"

namespace msd {

// A distillation code in either of the two accepted presentations.
struct CodeSpec {
  std::string name;
  std::variant<CwsCode, GeneratorSet> body;
  int correction = -1;  // index into octahedral_rotations(), -1 = none

  int n() const;
  // Effective correction: explicit field, else the CwsCode's own.
  int effective_correction() const;
};

struct EvalResult {
  BlochVector out;
  double p_success = 0.0;
  bool dead = false;  // success probability below 1e-14
};

// Precompiled one-round map. tensor index a in {I,X,Y,Z}^n is flattened with
// qubit t contributing digit a_t * 4^t; entry a holds <0L|P_a|0L>,
// <1L|P_a|1L> (real) and <0L|P_a|1L> (complex), P_a the Pauli product.
struct DistillationMap {
  int n = 0;
  std::vector<double> t00, t11, t01re, t01im;  // each of size 4^n
  int correction = -1;

  // Unnormalized postselected logical matrix at Bloch vector r:
  //   M_ij = 2^-n sum_a T^ij_a prod_t r_{a_t},  r_I := 1.
  // Output Bloch vector from M, then the optional correction rotation.
  EvalResult evaluate(const BlochVector& r) const;

  DistillationMap with_correction(int rotation_index) const {
    DistillationMap m = *this;
    m.correction = rotation_index;
    return m;
  }
};

DistillationMap compile_map(const LogicalBasis& basis, int n, int correction = -1);
DistillationMap compile_map(const CodeSpec& code);

// Rank-1 basis extraction from the stabilizer presentation: ket0 spans the
// image of Pi * (1 + Z_L)/2, ket1 = X_L ket0.
LogicalBasis basis_from_generators(const GeneratorSet& gs);
LogicalBasis basis_of(const CodeSpec& code);

// Independent validation path: applies the generator projectors one at a time
// to rho(r)^{tensor n} and returns the product of conditional probabilities.
double sequential_measurement_check(const GeneratorSet& gs, const BlochVector& r);
double sequential_measurement_check(const CodeSpec& code, const BlochVector& r);

// rho(r)^{tensor n} as a dense matrix.
Cmat product_input_state(const BlochVector& r, int n);

}  // namespace msd
