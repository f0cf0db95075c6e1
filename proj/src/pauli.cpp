#include "msd/pauli.hpp"

#include <bit>
#include <cmath>

namespace msd {

namespace {

const cd kPhase[4] = {cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};

int popcount16(uint16_t v) { return std::popcount(static_cast<unsigned>(v)); }

// Exponent of i in front of the letter string: per Y position one factor of
// X*Z = -i*Y is absorbed.
int letter_sign_exp(const PauliOperator& p) {
  const int y = popcount16(p.x_bits & p.z_bits);
  return (p.phase_exp + 3 * y) & 3;
}

}  // namespace

PauliOperator PauliOperator::identity(int n) {
  if (n < 1 || n > kMaxQubits) throw Error("qubit count out of range");
  PauliOperator p;
  p.n = n;
  return p;
}

bool PauliOperator::is_hermitian() const {
  const int e = letter_sign_exp(*this);
  return e == 0 || e == 2;
}

int PauliOperator::sign() const {
  const int e = letter_sign_exp(*this);
  if (e == 0) return 1;
  if (e == 2) return -1;
  throw Error("sign() on non-Hermitian Pauli " + format_pauli(*this));
}

bool operator==(const PauliOperator& a, const PauliOperator& b) {
  return a.n == b.n && a.x_bits == b.x_bits && a.z_bits == b.z_bits &&
         a.phase_exp == b.phase_exp;
}

PauliOperator parse_pauli(const std::string& s) {
  size_t pos = 0;
  int sign_exp = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    if (s[pos] == '-') sign_exp = 2;
    ++pos;
  }
  const size_t n = s.size() - pos;
  if (n < 1 || n > static_cast<size_t>(kMaxQubits))
    throw Error("Pauli string '" + s + "': need 1.." + std::to_string(kMaxQubits) +
                " letters, got " + std::to_string(n));
  PauliOperator p;
  p.n = static_cast<int>(n);
  p.phase_exp = static_cast<uint8_t>(sign_exp);
  for (int i = 0; i < p.n; ++i) {
    const char c = s[pos + i];
    switch (c) {
      case 'I':
        break;
      case 'X':
        p.x_bits |= uint16_t(1u << i);
        break;
      case 'Y':
        p.x_bits |= uint16_t(1u << i);
        p.z_bits |= uint16_t(1u << i);
        p.phase_exp = static_cast<uint8_t>((p.phase_exp + 1) & 3);  // Y = i X Z
        break;
      case 'Z':
        p.z_bits |= uint16_t(1u << i);
        break;
      default:
        throw Error(std::string("Pauli string '") + s + "': invalid character '" + c +
                    "' at position " + std::to_string(pos + i));
    }
  }
  return p;
}

std::string format_pauli(const PauliOperator& p) {
  static const char* prefix[4] = {"", "i", "-", "-i"};
  std::string out = prefix[letter_sign_exp(p)];
  for (int i = 0; i < p.n; ++i) {
    const bool x = (p.x_bits >> i) & 1, z = (p.z_bits >> i) & 1;
    out += x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }
  return out;
}

bool commutes(const PauliOperator& a, const PauliOperator& b) {
  if (a.n != b.n) throw Error("commutes: qubit count mismatch");
  const int s = popcount16(a.x_bits & b.z_bits) + popcount16(a.z_bits & b.x_bits);
  return (s & 1) == 0;
}

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) {
  if (a.n != b.n) throw Error("multiply: qubit count mismatch");
  PauliOperator p;
  p.n = a.n;
  p.x_bits = a.x_bits ^ b.x_bits;
  p.z_bits = a.z_bits ^ b.z_bits;
  // Moving Z^za past X^xb picks up (-1)^{za.xb}.
  p.phase_exp = static_cast<uint8_t>(
      (a.phase_exp + b.phase_exp + 2 * popcount16(a.z_bits & b.x_bits)) & 3);
  return p;
}

cvec apply_pauli(const PauliOperator& p, const cvec& v) {
  const size_t dim = size_t(1) << p.n;
  if (v.size() != dim) throw Error("apply_pauli: dimension mismatch");
  // Qubit i corresponds to index bit n-1-i.
  unsigned xm = 0, zm = 0;
  for (int i = 0; i < p.n; ++i) {
    if ((p.x_bits >> i) & 1) xm |= 1u << (p.n - 1 - i);
    if ((p.z_bits >> i) & 1) zm |= 1u << (p.n - 1 - i);
  }
  const cd ph = kPhase[p.phase_exp & 3];
  cvec out(dim);
  for (size_t b = 0; b < dim; ++b) {
    const cd amp = (std::popcount(static_cast<unsigned>(b) & zm) & 1) ? -v[b] : v[b];
    out[b ^ xm] = ph * amp;
  }
  return out;
}

Cmat realize(const PauliOperator& p) {
  const int dim = 1 << p.n;
  Cmat out(dim);
  cvec basis(dim);
  for (int c = 0; c < dim; ++c) {
    basis.assign(dim, 0.0);
    basis[c] = 1.0;
    const cvec col = apply_pauli(p, basis);
    for (int r = 0; r < dim; ++r) out.at(r, c) = col[r];
  }
  return out;
}

Cmat codespace_projector(const GeneratorSet& gs) {
  const int dim = 1 << gs.n;
  Cmat proj = Cmat::identity(dim);
  for (const PauliOperator& g : gs.generators) {
    const Cmat gp = matmul(realize(g), proj);
    for (size_t i = 0; i < proj.a.size(); ++i) proj.a[i] = 0.5 * (proj.a[i] + gp.a[i]);
  }
  return proj;
}

void GeneratorSet::validate() const {
  if (n < 1 || n > kMaxQubits) throw Error("GeneratorSet: qubit count out of range");
  if (generators.size() != static_cast<size_t>(n - 1))
    throw Error("GeneratorSet: expected " + std::to_string(n - 1) + " generators, got " +
                std::to_string(generators.size()));
  auto check_op = [&](const PauliOperator& p, const char* what) {
    if (p.n != n) throw Error(std::string("GeneratorSet: ") + what + " has wrong qubit count");
    if (!p.is_hermitian())
      throw Error(std::string("GeneratorSet: ") + what + " is not Hermitian: " + format_pauli(p));
  };
  for (const auto& g : generators) check_op(g, "generator");
  check_op(logical_z, "logical_z");
  check_op(logical_x, "logical_x");

  for (size_t i = 0; i < generators.size(); ++i)
    for (size_t j = i + 1; j < generators.size(); ++j)
      if (!commutes(generators[i], generators[j]))
        throw Error("GeneratorSet: generators " + format_pauli(generators[i]) + " and " +
                    format_pauli(generators[j]) + " anticommute");
  for (const auto& g : generators) {
    if (!commutes(logical_z, g))
      throw Error("GeneratorSet: logical_z anticommutes with " + format_pauli(g));
    if (!commutes(logical_x, g))
      throw Error("GeneratorSet: logical_x anticommutes with " + format_pauli(g));
  }
  if (commutes(logical_z, logical_x))
    throw Error("GeneratorSet: logical_z and logical_x must anticommute");

  // Symplectic independence of {generators, logical_z}: rank must be n.
  std::vector<uint32_t> rows;
  for (const auto& g : generators) rows.push_back((uint32_t(g.x_bits) << 16) | g.z_bits);
  rows.push_back((uint32_t(logical_z.x_bits) << 16) | logical_z.z_bits);
  int rank = 0;
  for (int bit = 31; bit >= 0 && rank < static_cast<int>(rows.size()); --bit) {
    int pivot = -1;
    for (size_t r = rank; r < rows.size(); ++r)
      if ((rows[r] >> bit) & 1) {
        pivot = static_cast<int>(r);
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t r = 0; r < rows.size(); ++r)
      if (static_cast<int>(r) != rank && ((rows[r] >> bit) & 1)) rows[r] ^= rows[rank];
    ++rank;
  }
  if (rank != n) throw Error("GeneratorSet: generators + logical_z are not independent");

  // Dense check: the group must not contain -1 and the codespace must have
  // dimension exactly 2 (trace of a projector equals its rank).
  const Cmat proj = codespace_projector(*this);
  const cd tr = trace(proj);
  if (std::abs(tr - cd(2.0)) > 1e-9)
    throw Error("GeneratorSet: codespace rank is not 2 (trace " + std::to_string(tr.real()) + ")");
  if (max_abs_diff(matmul(proj, proj), proj) > 1e-10)
    throw Error("GeneratorSet: codespace projector is not idempotent");
  // Adding logical_z must cut the space to one dimension.
  GeneratorSet full = *this;
  full.generators.push_back(logical_z);
  const Cmat proj0 = codespace_projector(full);
  if (std::abs(trace(proj0) - cd(1.0)) > 1e-9)
    throw Error("GeneratorSet: logical_z does not split the codespace in half");
}

}  // namespace msd
