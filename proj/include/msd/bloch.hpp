#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace msd {

struct BlochVector {
  double x = 0.0, y = 0.0, z = 0.0;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  // L1 norm; the stabilizer octahedron is oct_norm <= 1.
  double oct_norm() const { return std::abs(x) + std::abs(y) + std::abs(z); }
  double dot(const BlochVector& o) const { return x * o.x + y * o.y + z * o.z; }
  BlochVector scaled(double s) const { return {s * x, s * y, s * z}; }
};

inline double distance(const BlochVector& a, const BlochVector& b) {
  const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

// One of the 24 rotations of the stabilizer octahedron: a signed permutation
// matrix with determinant +1. This is the Bloch-space action of the
// single-qubit Clifford group modulo phases.
struct CliffordRotation {
  std::array<std::array<int, 3>, 3> m{};
  std::string label;  // images of the x, y, z axes, e.g. "-x-y+z"

  BlochVector apply(const BlochVector& r) const {
    const double v[3] = {r.x, r.y, r.z};
    double o[3] = {0, 0, 0};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) o[i] += m[i][j] * v[j];
    return {o[0], o[1], o[2]};
  }

  bool is_identity() const {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (m[i][j] != (i == j ? 1 : 0)) return false;
    return true;
  }
};

// All 24 octahedral rotations; index 0 is the identity.
const std::vector<CliffordRotation>& octahedral_rotations();

// Accepts axis-image labels ("-x-y+z") and the aliases I, X, Y, Z for the
// identity and the pi rotations about each Pauli axis. Returns the index into
// octahedral_rotations(), or -1 if unknown.
int rotation_index_by_label(const std::string& label);

// Lexicographically maximal image of r over the 24 rotations; idempotent.
BlochVector canonicalize_bloch(const BlochVector& r);

// min over rotations R of |R a - b|; equality test "up to Clifford rotation".
double canonical_distance(const BlochVector& a, const BlochVector& b);

}  // namespace msd
