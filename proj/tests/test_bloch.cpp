#include <doctest.h>

#include <cmath>
#include <set>

#include "msd/bloch.hpp"
#include "msd/rng.hpp"

using namespace msd;

TEST_CASE("octahedral rotation group has 24 distinct proper rotations") {
  const auto& rots = octahedral_rotations();
  REQUIRE(rots.size() == 24);
  CHECK(rots[0].is_identity());
  std::set<std::string> labels;
  for (const auto& r : rots) {
    labels.insert(r.label);
    // Signed permutation with determinant +1: columns orthonormal.
    int det = r.m[0][0] * (r.m[1][1] * r.m[2][2] - r.m[1][2] * r.m[2][1]) -
              r.m[0][1] * (r.m[1][0] * r.m[2][2] - r.m[1][2] * r.m[2][0]) +
              r.m[0][2] * (r.m[1][0] * r.m[2][1] - r.m[1][1] * r.m[2][0]);
    CHECK(det == 1);
    for (int j = 0; j < 3; ++j) {
      int col_norm = 0;
      for (int i = 0; i < 3; ++i) col_norm += r.m[i][j] * r.m[i][j];
      CHECK(col_norm == 1);
    }
  }
  CHECK(labels.size() == 24);
}

TEST_CASE("rotation labels and aliases") {
  CHECK(rotation_index_by_label("I") == 0);
  const int z = rotation_index_by_label("Z");
  REQUIRE(z >= 0);
  const auto& rz = octahedral_rotations()[z];
  CHECK(rz.m[0][0] == -1);
  CHECK(rz.m[1][1] == -1);
  CHECK(rz.m[2][2] == 1);
  CHECK(rotation_index_by_label("-x-y+z") == z);
  CHECK(rotation_index_by_label("bogus") == -1);
}

TEST_CASE("canonicalize_bloch is idempotent and rotation-invariant") {
  Rng rng(23);
  for (int k = 0; k < 1000; ++k) {
    const BlochVector v = {rng.symmetric(), rng.symmetric(), rng.symmetric()};
    const BlochVector c = canonicalize_bloch(v);
    CHECK(distance(canonicalize_bloch(c), c) == 0.0);
    const auto& rot = octahedral_rotations()[rng.next() % 24];
    CHECK(distance(canonicalize_bloch(rot.apply(v)), c) < 1e-12);
  }
}

TEST_CASE("Clifford-equivalent H-type points share a canonical form") {
  const double s2 = 1.0 / std::sqrt(2.0);
  const BlochVector a = {s2, 0, s2}, b = {0, s2, s2};
  CHECK(distance(canonicalize_bloch(a), canonicalize_bloch(b)) < 1e-12);
  CHECK(canonical_distance(a, b) < 1e-12);
}

TEST_CASE("canonical form of the 3-qubit code fixed point") {
  const BlochVector c = canonicalize_bloch({0.0, -0.83929, -0.54369});
  CHECK(c.x == doctest::Approx(0.83929));
  CHECK(c.y == doctest::Approx(0.54369));
  CHECK(c.z == doctest::Approx(0.0));
}
