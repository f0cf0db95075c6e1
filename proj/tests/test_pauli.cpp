#include <doctest.h>

#include <string>

#include "msd/pauli.hpp"
#include "msd/rng.hpp"

using namespace msd;

namespace {

PauliOperator random_pauli(Rng& rng, int n) {
  PauliOperator p;
  p.n = n;
  p.x_bits = static_cast<uint16_t>(rng.next() & ((1u << n) - 1));
  p.z_bits = static_cast<uint16_t>(rng.next() & ((1u << n) - 1));
  p.phase_exp = static_cast<uint8_t>(rng.next() & 3);
  return p;
}

}  // namespace

TEST_CASE("parse_pauli maps letters to symplectic bits") {
  const PauliOperator p = parse_pauli("ZIZ");
  CHECK(p.n == 3);
  CHECK(p.x_bits == 0);
  CHECK(p.z_bits == 0b101);
  CHECK(p.phase_exp == 0);

  const PauliOperator q = parse_pauli("XZX");
  CHECK(q.x_bits == 0b101);
  CHECK(q.z_bits == 0b010);
  CHECK(q.phase_exp == 0);
  CHECK(q.sign() == 1);

  CHECK(parse_pauli("-XZY").sign() == -1);
}

TEST_CASE("parse_pauli rejects malformed strings") {
  CHECK_THROWS_WITH_AS(parse_pauli("XQZ"), doctest::Contains("'Q'"), Error);
  CHECK_THROWS_AS(parse_pauli(""), Error);
  CHECK_THROWS_AS(parse_pauli("XXXXXXXXX"), Error);  // 9 letters
}

TEST_CASE("parse/format round-trip") {
  Rng rng(7);
  const char letters[] = "IXYZ";
  for (int k = 0; k < 200; ++k) {
    const int n = 1 + static_cast<int>(rng.next() % 8);
    std::string s = rng.next() & 1 ? "-" : "";
    bool nontrivial = false;
    for (int i = 0; i < n; ++i) {
      const char c = letters[rng.next() % 4];
      nontrivial = nontrivial || c != 'I';
      s += c;
    }
    const PauliOperator p = parse_pauli(s);
    CHECK(parse_pauli(format_pauli(p)) == p);
    // Canonical spelling: no leading '+', '-' kept.
    if (s[0] != '-') CHECK(format_pauli(p) == s);
  }
}

TEST_CASE("realize of -Y is the negated standard Y matrix") {
  const Cmat m = realize(parse_pauli("-Y"));
  CHECK(m.at(0, 0) == cd(0, 0));
  CHECK(m.at(0, 1) == cd(0, 1));
  CHECK(m.at(1, 0) == cd(0, -1));
  CHECK(m.at(1, 1) == cd(0, 0));
}

TEST_CASE("realize identity and Kronecker structure") {
  const Cmat id2 = realize(PauliOperator::identity(2));
  CHECK(max_abs_diff(id2, Cmat::identity(4)) == 0.0);

  // X (x) Z (x) X assembled by hand.
  const Cmat x = realize(parse_pauli("X")), z = realize(parse_pauli("Z"));
  CHECK(max_abs_diff(realize(parse_pauli("XZX")), kron(kron(x, z), x)) == 0.0);
}

TEST_CASE("commutation rules") {
  CHECK_FALSE(commutes(parse_pauli("X"), parse_pauli("Z")));
  CHECK(commutes(parse_pauli("ZIZ"), parse_pauli("XZX")));
  Rng rng(11);
  for (int k = 0; k < 20; ++k) {
    const PauliOperator p = random_pauli(rng, 1 + static_cast<int>(rng.next() % 8));
    CHECK(commutes(p, p));
  }
  CHECK_THROWS_AS(commutes(parse_pauli("X"), parse_pauli("XX")), Error);
}

TEST_CASE("symplectic commutation agrees with dense commutation") {
  Rng rng(13);
  for (int k = 0; k < 1000; ++k) {
    const int n = 1 + static_cast<int>(rng.next() % 4);
    const PauliOperator a = random_pauli(rng, n), b = random_pauli(rng, n);
    const Cmat ab = matmul(realize(a), realize(b));
    const Cmat ba = matmul(realize(b), realize(a));
    const bool dense_commutes = max_abs_diff(ab, ba) < 1e-12;
    CHECK(commutes(a, b) == dense_commutes);
  }
}

TEST_CASE("multiply matches the dense matrix product exactly") {
  CHECK(format_pauli(multiply(parse_pauli("X"), parse_pauli("Z"))) == "-iY");
  Rng rng(17);
  for (int k = 0; k < 200; ++k) {
    const int n = 1 + static_cast<int>(rng.next() % 4);
    const PauliOperator a = random_pauli(rng, n), b = random_pauli(rng, n);
    CHECK(max_abs_diff(realize(multiply(a, b)), matmul(realize(a), realize(b))) == 0.0);
  }
}

TEST_CASE("P*P is the identity with phase +1 for Hermitian P") {
  Rng rng(19);
  for (int k = 0; k < 100; ++k) {
    PauliOperator p = random_pauli(rng, 1 + static_cast<int>(rng.next() % 8));
    if (!p.is_hermitian()) p.phase_exp = static_cast<uint8_t>((p.phase_exp + 1) & 3);
    const PauliOperator sq = multiply(p, p);
    CHECK(sq.x_bits == 0);
    CHECK(sq.z_bits == 0);
    CHECK(sq.phase_exp == 0);
  }
}

TEST_CASE("GeneratorSet validation accepts the 3-qubit code and rejects broken sets") {
  GeneratorSet gs;
  gs.n = 3;
  gs.generators = {parse_pauli("ZIZ"), parse_pauli("XZX")};
  gs.logical_z = parse_pauli("XXY");
  gs.logical_x = parse_pauli("IXZ");
  CHECK_NOTHROW(gs.validate());

  // Codespace projector has rank exactly 2.
  const Cmat proj = codespace_projector(gs);
  CHECK(trace(proj).real() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(max_abs_diff(matmul(proj, proj), proj) < 1e-12);

  GeneratorSet bad = gs;
  bad.generators[1] = parse_pauli("XZZ");  // anticommutes with ZIZ
  CHECK_THROWS_AS(bad.validate(), Error);

  GeneratorSet dependent = gs;
  dependent.logical_z = multiply(gs.generators[0], gs.generators[1]);
  CHECK_THROWS_AS(dependent.validate(), Error);

  GeneratorSet commuting_logicals = gs;
  commuting_logicals.logical_x = parse_pauli("ZIZ");
  CHECK_THROWS_AS(commuting_logicals.validate(), Error);
}
