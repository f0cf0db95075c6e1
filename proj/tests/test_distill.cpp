#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "msd/distill.hpp"
#include "msd/registry.hpp"
#include "msd/rng.hpp"

using namespace msd;

namespace {

// Dense oracle for one round: project rho(r)^{tensor n} onto the logical
// basis and read the output Bloch vector off the 2x2 logical matrix.
EvalResult dense_round(const LogicalBasis& b, const BlochVector& r, int n) {
  const Cmat rho = product_input_state(r, n);
  const cd m00 = inner(b.ket0, matvec(rho, b.ket0));
  const cd m11 = inner(b.ket1, matvec(rho, b.ket1));
  const cd m01 = inner(b.ket0, matvec(rho, b.ket1));
  EvalResult res;
  const double s = m00.real() + m11.real();
  res.p_success = s;
  if (s < 1e-14) {
    res.dead = true;
    return res;
  }
  res.out = {2.0 * m01.real() / s, -2.0 * m01.imag() / s, (m00.real() - m11.real()) / s};
  return res;
}

BlochVector random_ball(Rng& rng) {
  for (;;) {
    const BlochVector v = {rng.symmetric(), rng.symmetric(), rng.symmetric()};
    if (v.norm() <= 1.0) return v;
  }
}

}  // namespace

TEST_CASE("3-qubit map at the maximally mixed input") {
  const DistillationMap map = compile_map(builtin("eq8_3qubit"));
  const EvalResult r = map.evaluate({0, 0, 0});
  CHECK_FALSE(r.dead);
  CHECK(r.p_success == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(r.out.norm() < 1e-12);
}

TEST_CASE("3-qubit map reproduces its fixed point") {
  const DistillationMap map = compile_map(builtin("eq8_3qubit"));
  const BlochVector fp = {0.0, -0.83929, -0.54369};
  const EvalResult r = map.evaluate(fp);
  CHECK(distance(r.out, fp) < 1e-4);
  CHECK(std::abs(fp.norm() - 1.0) < 1e-4);
}

TEST_CASE("compiled tensor agrees with the dense projection oracle") {
  Rng rng(41);
  for (const char* name : {"eq8_3qubit", "perfect_5qubit_cws"}) {
    const CodeSpec code = builtin(name);
    const DistillationMap map = compile_map(code);
    const LogicalBasis basis = basis_of(code);
    for (int k = 0; k < 10; ++k) {
      const BlochVector r = random_ball(rng);
      const EvalResult a = map.evaluate(r);
      const EvalResult d = dense_round(basis, r, code.n());
      CHECK(a.p_success == doctest::Approx(d.p_success).epsilon(1e-10));
      CHECK(distance(a.out, d.out) < 1e-9);
    }
  }
}

TEST_CASE("compiling a CWS code and its generator presentation give the same map") {
  const CodeSpec cws = builtin("perfect_5qubit_cws");
  const GeneratorSet gs = codespace_generators(std::get<CwsCode>(cws.body));
  const DistillationMap a = compile_map(cws);
  const DistillationMap b = compile_map(basis_from_generators(gs), gs.n);
  Rng rng(43);
  for (int k = 0; k < 20; ++k) {
    const BlochVector r = random_ball(rng);
    const EvalResult ra = a.evaluate(r), rb = b.evaluate(r);
    CHECK(ra.p_success == doctest::Approx(rb.p_success).epsilon(1e-10));
    // The two bases may differ by a logical rotation, so only compare up to
    // the octahedral group after checking the success probabilities match.
    CHECK(canonical_distance(ra.out, rb.out) < 1e-9);
  }
}

TEST_CASE("physical inputs map to physical outputs") {
  Rng rng(47);
  for (const char* name : {"eq8_3qubit", "steane_7qubit", "perfect_5qubit_cws"}) {
    const DistillationMap map = compile_map(builtin(name));
    for (int k = 0; k < 200; ++k) {
      const EvalResult r = map.evaluate(random_ball(rng));
      if (r.dead) continue;
      CHECK(r.out.norm() <= 1.0 + 1e-9);
      CHECK(r.p_success > 0.0);
      CHECK(r.p_success <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("sequential measurement probabilities match the compiled map") {
  const CodeSpec code = builtin("eq8_3qubit");
  CHECK(sequential_measurement_check(code, {0, 0, 0}) == doctest::Approx(0.25).epsilon(1e-12));

  const DistillationMap map = compile_map(code);
  Rng rng(53);
  for (int k = 0; k < 25; ++k) {
    const BlochVector r = random_ball(rng);
    CHECK(sequential_measurement_check(code, r) ==
          doctest::Approx(map.evaluate(r).p_success).epsilon(1e-10));
  }
}

TEST_CASE("sequential measurement is independent of generator order") {
  GeneratorSet gs;
  gs.n = 3;
  gs.generators = {parse_pauli("ZIZ"), parse_pauli("XZX")};
  gs.logical_z = parse_pauli("XXY");
  gs.logical_x = parse_pauli("IXZ");
  GeneratorSet swapped = gs;
  std::swap(swapped.generators[0], swapped.generators[1]);
  Rng rng(59);
  for (int k = 0; k < 25; ++k) {
    const BlochVector r = random_ball(rng);
    CHECK(sequential_measurement_check(gs, r) ==
          doctest::Approx(sequential_measurement_check(swapped, r)).epsilon(1e-10));
  }
}

TEST_CASE("correction rotates the output only") {
  const CodeSpec base = builtin("eq8_3qubit");
  const DistillationMap map = compile_map(base);
  const int z = rotation_index_by_label("Z");
  REQUIRE(z > 0);
  const DistillationMap corrected = map.with_correction(z);
  Rng rng(61);
  for (int k = 0; k < 25; ++k) {
    const BlochVector r = random_ball(rng);
    const EvalResult a = map.evaluate(r), b = corrected.evaluate(r);
    CHECK(a.p_success == doctest::Approx(b.p_success).epsilon(1e-14));
    CHECK(distance(octahedral_rotations()[z].apply(a.out), b.out) < 1e-12);
  }
}

TEST_CASE("vanishing success probability is reported as dead") {
  DistillationMap map;
  map.n = 1;
  map.t00.assign(4, 0.0);
  map.t11.assign(4, 0.0);
  map.t01re.assign(4, 0.0);
  map.t01im.assign(4, 0.0);
  const EvalResult r = map.evaluate({0.3, 0.1, -0.2});
  CHECK(r.dead);
}
