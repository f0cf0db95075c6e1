#include "msd/distill.hpp"

#include <cmath>

namespace msd {

int CodeSpec::n() const {
  if (std::holds_alternative<CwsCode>(body)) return std::get<CwsCode>(body).graph.n;
  return std::get<GeneratorSet>(body).n;
}

int CodeSpec::effective_correction() const {
  if (correction >= 0) return correction;
  if (std::holds_alternative<CwsCode>(body)) return std::get<CwsCode>(body).correction;
  return -1;
}

DistillationMap compile_map(const LogicalBasis& basis, int n, int correction) {
  if (n < 1 || n > kMaxQubits) throw Error("compile_map: qubit count out of range");
  const size_t dim = size_t(1) << n;
  if (basis.ket0.size() != dim || basis.ket1.size() != dim)
    throw Error("compile_map: basis dimension mismatch");

  const size_t size = size_t(1) << (2 * n);  // 4^n
  DistillationMap map;
  map.n = n;
  map.correction = correction;
  map.t00.resize(size);
  map.t11.resize(size);
  map.t01re.resize(size);
  map.t01im.resize(size);

  for (size_t a = 0; a < size; ++a) {
    PauliOperator p;
    p.n = n;
    size_t rest = a;
    for (int t = 0; t < n; ++t, rest >>= 2) {
      switch (rest & 3) {
        case 0:
          break;
        case 1:
          p.x_bits |= uint16_t(1u << t);
          break;
        case 2:
          p.x_bits |= uint16_t(1u << t);
          p.z_bits |= uint16_t(1u << t);
          p.phase_exp = static_cast<uint8_t>((p.phase_exp + 1) & 3);
          break;
        case 3:
          p.z_bits |= uint16_t(1u << t);
          break;
      }
    }
    const cvec v0 = apply_pauli(p, basis.ket0);
    const cvec v1 = apply_pauli(p, basis.ket1);
    const cd c00 = inner(basis.ket0, v0);
    const cd c11 = inner(basis.ket1, v1);
    const cd c01 = inner(basis.ket0, v1);
    if (std::abs(c00.imag()) > 1e-10 || std::abs(c11.imag()) > 1e-10)
      throw Error("compile_map: non-real diagonal sandwich (internal consistency)");
    map.t00[a] = c00.real();
    map.t11[a] = c11.real();
    map.t01re[a] = c01.real();
    map.t01im[a] = c01.imag();
  }
  return map;
}

namespace {

// Contract the flat degree-n tensor against (1, x, y, z), lowest digit first.
double contract(const std::vector<double>& t, const double rv[4], std::vector<double>& buf) {
  size_t m = t.size() / 4;
  buf.resize(m);
  for (size_t i = 0; i < m; ++i)
    buf[i] = t[4 * i] * rv[0] + t[4 * i + 1] * rv[1] + t[4 * i + 2] * rv[2] + t[4 * i + 3] * rv[3];
  while (m > 1) {
    m /= 4;
    for (size_t i = 0; i < m; ++i)
      buf[i] =
          buf[4 * i] * rv[0] + buf[4 * i + 1] * rv[1] + buf[4 * i + 2] * rv[2] + buf[4 * i + 3] * rv[3];
  }
  return buf[0];
}

}  // namespace

EvalResult DistillationMap::evaluate(const BlochVector& r) const {
  const double norm = r.norm();
  if (norm > 1.0 + 1e-4) throw Error("evaluate: Bloch vector outside the sphere");
  // Tolerate slightly-off-sphere inputs (rounded reference points, round-trip
  // numerics) by projecting back onto the unit ball.
  const BlochVector rr = norm > 1.0 ? r.scaled(1.0 / norm) : r;
  const double rv[4] = {1.0, rr.x, rr.y, rr.z};
  static thread_local std::vector<double> buf;

  const double scale = std::ldexp(1.0, -n);  // 2^-n
  const double m00 = scale * contract(t00, rv, buf);
  const double m11 = scale * contract(t11, rv, buf);
  const double m01re = scale * contract(t01re, rv, buf);
  const double m01im = scale * contract(t01im, rv, buf);

  EvalResult res;
  const double s = m00 + m11;
  res.p_success = std::min(1.0, std::max(0.0, s));
  if (s < 1e-14) {
    res.dead = true;
    return res;
  }
  res.out = {2.0 * m01re / s, -2.0 * m01im / s, (m00 - m11) / s};
  if (correction >= 0) res.out = octahedral_rotations()[correction].apply(res.out);
  return res;
}

LogicalBasis basis_from_generators(const GeneratorSet& gs) {
  gs.validate();
  const int dim = 1 << gs.n;
  Cmat proj = codespace_projector(gs);
  // Pi * (1 + Z_L)/2 has rank 1; any nonzero column spans ket0.
  const Cmat zl = realize(gs.logical_z);
  const Cmat pz = matmul(proj, zl);
  for (size_t i = 0; i < proj.a.size(); ++i) proj.a[i] = 0.5 * (proj.a[i] + pz.a[i]);

  int best_col = 0;
  double best_norm = -1.0;
  for (int c = 0; c < dim; ++c) {
    double nn = 0.0;
    for (int r = 0; r < dim; ++r) nn += std::norm(proj.at(r, c));
    if (nn > best_norm) {
      best_norm = nn;
      best_col = c;
    }
  }
  if (best_norm < 1e-12) throw Error("basis_from_generators: empty codespace");

  LogicalBasis lb;
  lb.ket0.resize(dim);
  const double inv = 1.0 / std::sqrt(best_norm);
  for (int r = 0; r < dim; ++r) lb.ket0[r] = proj.at(r, best_col) * inv;
  lb.ket1 = apply_pauli(gs.logical_x, lb.ket0);

  if (std::abs(vec_norm(lb.ket0) - 1.0) > 1e-10 || std::abs(vec_norm(lb.ket1) - 1.0) > 1e-10 ||
      std::abs(inner(lb.ket0, lb.ket1)) > 1e-10)
    throw Error("basis_from_generators: basis not orthonormal (internal consistency)");
  return lb;
}

LogicalBasis basis_of(const CodeSpec& code) {
  if (std::holds_alternative<CwsCode>(code.body))
    return logical_basis(std::get<CwsCode>(code.body));
  return basis_from_generators(std::get<GeneratorSet>(code.body));
}

DistillationMap compile_map(const CodeSpec& code) {
  return compile_map(basis_of(code), code.n(), code.effective_correction());
}

Cmat product_input_state(const BlochVector& r, int n) {
  Cmat rho1(2);
  rho1.at(0, 0) = 0.5 * (1.0 + r.z);
  rho1.at(0, 1) = 0.5 * cd(r.x, -r.y);
  rho1.at(1, 0) = 0.5 * cd(r.x, r.y);
  rho1.at(1, 1) = 0.5 * (1.0 - r.z);
  Cmat rho = rho1;
  for (int i = 1; i < n; ++i) rho = kron(rho, rho1);
  return rho;
}

double sequential_measurement_check(const GeneratorSet& gs, const BlochVector& r) {
  Cmat rho = product_input_state(r, gs.n);
  double total = 1.0;
  double current_trace = 1.0;
  for (const PauliOperator& g : gs.generators) {
    const Cmat gm = realize(g);
    const Cmat grho = matmul(gm, rho);
    const Cmat rhog = matmul(rho, gm);
    const Cmat grhog = matmul(grho, gm);
    for (size_t i = 0; i < rho.a.size(); ++i)
      rho.a[i] = 0.25 * (rho.a[i] + grho.a[i] + rhog.a[i] + grhog.a[i]);
    const double tr = trace(rho).real();
    total *= current_trace > 0.0 ? tr / current_trace : 0.0;
    current_trace = tr;
  }
  return total;
}

double sequential_measurement_check(const CodeSpec& code, const BlochVector& r) {
  if (std::holds_alternative<CwsCode>(code.body))
    return sequential_measurement_check(codespace_generators(std::get<CwsCode>(code.body)), r);
  return sequential_measurement_check(std::get<GeneratorSet>(code.body), r);
}

}  // namespace msd
