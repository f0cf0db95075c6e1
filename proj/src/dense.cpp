#include "msd/dense.hpp"

#include <cmath>

namespace msd {

Cmat Cmat::identity(int d) {
  Cmat m(d);
  for (int i = 0; i < d; ++i) m.at(i, i) = 1.0;
  return m;
}

Cmat matmul(const Cmat& a, const Cmat& b) {
  if (a.dim != b.dim) throw Error("matmul: dimension mismatch");
  const int d = a.dim;
  Cmat out(d);
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) {
      const cd aik = a.at(i, k);
      if (aik == cd(0.0)) continue;
      for (int j = 0; j < d; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  }
  return out;
}

cvec matvec(const Cmat& m, const cvec& v) {
  if (static_cast<size_t>(m.dim) != v.size()) throw Error("matvec: dimension mismatch");
  cvec out(v.size());
  for (int i = 0; i < m.dim; ++i) {
    cd s = 0.0;
    for (int j = 0; j < m.dim; ++j) s += m.at(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

Cmat kron(const Cmat& a, const Cmat& b) {
  Cmat out(a.dim * b.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      const cd aij = a.at(i, j);
      if (aij == cd(0.0)) continue;
      for (int k = 0; k < b.dim; ++k)
        for (int l = 0; l < b.dim; ++l)
          out.at(i * b.dim + k, j * b.dim + l) = aij * b.at(k, l);
    }
  return out;
}

Cmat dagger(const Cmat& m) {
  Cmat out(m.dim);
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j) out.at(i, j) = std::conj(m.at(j, i));
  return out;
}

cd inner(const cvec& a, const cvec& b) {
  if (a.size() != b.size()) throw Error("inner: dimension mismatch");
  cd s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double vec_norm(const cvec& v) {
  double s = 0.0;
  for (const cd& c : v) s += std::norm(c);
  return std::sqrt(s);
}

cd trace(const Cmat& m) {
  cd s = 0.0;
  for (int i = 0; i < m.dim; ++i) s += m.at(i, i);
  return s;
}

double max_abs_diff(const Cmat& a, const Cmat& b) {
  if (a.dim != b.dim) throw Error("max_abs_diff: dimension mismatch");
  double mx = 0.0;
  for (size_t i = 0; i < a.a.size(); ++i) mx = std::max(mx, std::abs(a.a[i] - b.a[i]));
  return mx;
}

}  // namespace msd
