#include "msd/bloch.hpp"

#include <algorithm>

namespace msd {

namespace {

std::vector<CliffordRotation> build_rotations() {
  std::vector<CliffordRotation> rots;
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  const char axis_name[3] = {'x', 'y', 'z'};
  for (const auto& p : perms) {
    for (int signs = 0; signs < 8; ++signs) {
      CliffordRotation r;
      for (int j = 0; j < 3; ++j) {
        const int s = (signs >> j) & 1 ? -1 : 1;
        r.m[p[j]][j] = s;  // axis j maps to s * axis p[j]
      }
      // Determinant of a signed permutation: parity of the permutation times
      // the product of signs.
      int det = 1;
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
          if (p[a] > p[b]) det = -det;
      for (int j = 0; j < 3; ++j) det *= (signs >> j) & 1 ? -1 : 1;
      if (det != 1) continue;
      for (int j = 0; j < 3; ++j) {
        r.label += (signs >> j) & 1 ? '-' : '+';
        r.label += axis_name[p[j]];
      }
      rots.push_back(std::move(r));
    }
  }
  // Identity first, rest by label for a stable order.
  std::sort(rots.begin(), rots.end(), [](const CliffordRotation& a, const CliffordRotation& b) {
    const bool ia = a.is_identity(), ib = b.is_identity();
    if (ia != ib) return ia;
    return a.label < b.label;
  });
  return rots;
}

}  // namespace

const std::vector<CliffordRotation>& octahedral_rotations() {
  static const std::vector<CliffordRotation> rots = build_rotations();
  return rots;
}

int rotation_index_by_label(const std::string& label) {
  std::string want = label;
  if (label == "I" || label == "identity") want = "+x+y+z";
  if (label == "X") want = "+x-y-z";
  if (label == "Y") want = "-x+y-z";
  if (label == "Z") want = "-x-y+z";
  const auto& rots = octahedral_rotations();
  for (size_t i = 0; i < rots.size(); ++i)
    if (rots[i].label == want) return static_cast<int>(i);
  return -1;
}

namespace {
// Lexicographic comparison with a small tolerance per component. Exact
// comparison makes the canonical form discontinuous at symmetric vectors:
// near (a,a,a) a 1e-10 perturbation can flip the winning rotation between an
// all-positive image and one with a negated component, moving the canonical
// form by O(a). Treating near-equal components as ties keeps it stable.
bool lex_less(const BlochVector& a, const BlochVector& b) {
  constexpr double tol = 1e-9;
  if (std::abs(a.x - b.x) > tol) return a.x < b.x;
  if (std::abs(a.y - b.y) > tol) return a.y < b.y;
  return b.z - a.z > tol;
}
}  // namespace

BlochVector canonicalize_bloch(const BlochVector& r) {
  BlochVector best = r;
  for (const auto& rot : octahedral_rotations()) {
    const BlochVector img = rot.apply(r);
    if (lex_less(best, img)) best = img;
  }
  // Flush negative zeros so canonical forms print cleanly.
  return {best.x + 0.0, best.y + 0.0, best.z + 0.0};
}

double canonical_distance(const BlochVector& a, const BlochVector& b) {
  double best = distance(a, b);
  for (const auto& rot : octahedral_rotations())
    best = std::min(best, distance(rot.apply(a), b));
  return best;
}

}  // namespace msd
