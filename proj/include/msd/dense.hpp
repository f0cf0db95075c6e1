#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace msd {

using cd = std::complex<double>;
using cvec = std::vector<cd>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Row-major square complex matrix.
struct Cmat {
  int dim = 0;
  cvec a;

  Cmat() = default;
  explicit Cmat(int d) : dim(d), a(static_cast<size_t>(d) * d) {}

  cd& at(int r, int c) { return a[static_cast<size_t>(r) * dim + c]; }
  const cd& at(int r, int c) const { return a[static_cast<size_t>(r) * dim + c]; }

  static Cmat identity(int d);
};

Cmat matmul(const Cmat& a, const Cmat& b);
cvec matvec(const Cmat& m, const cvec& v);
Cmat kron(const Cmat& a, const Cmat& b);
Cmat dagger(const Cmat& m);

// Conjugate-linear in the first argument.
cd inner(const cvec& a, const cvec& b);
double vec_norm(const cvec& v);
cd trace(const Cmat& m);
double max_abs_diff(const Cmat& a, const Cmat& b);

}  // namespace msd
