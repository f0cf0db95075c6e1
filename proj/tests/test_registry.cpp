#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "msd/analysis.hpp"
#include "msd/registry.hpp"
#include "msd/search.hpp"

using namespace msd;

TEST_CASE("builtin_names lists the three codes and builtin rejects unknowns") {
  const auto names = builtin_names();
  REQUIRE(names.size() == 3);
  CHECK(std::count(names.begin(), names.end(), "eq8_3qubit") == 1);
  CHECK(std::count(names.begin(), names.end(), "steane_7qubit") == 1);
  CHECK(std::count(names.begin(), names.end(), "perfect_5qubit_cws") == 1);
  CHECK_THROWS_AS(builtin("no_such_code"), Error);
}

TEST_CASE("3-qubit code logical basis in closed form") {
  const LogicalBasis b = basis_of(builtin("eq8_3qubit"));
  // Up to a global phase: |0L> = (|000> - i|010> + |101> + i|111>)/2 and
  // |1L> = (-i|000> + |010> - i|101> - |111>)/2.
  const cd i(0, 1);
  cvec k0(8, 0.0), k1(8, 0.0);
  k0[0] = 0.5;
  k0[2] = -0.5 * i;
  k0[5] = 0.5;
  k0[7] = 0.5 * i;
  k1[0] = -0.5 * i;
  k1[2] = 0.5;
  k1[5] = -0.5 * i;
  k1[7] = -0.5;
  const cd o0 = inner(k0, b.ket0), o1 = inner(k1, b.ket1);
  CHECK(std::abs(o0) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(o1) == doctest::Approx(1.0).epsilon(1e-10));
  // Same relative phase on both kets.
  CHECK(std::abs(o0 - o1) < 1e-10);
}

TEST_CASE("3-qubit code dynamics") {
  const DistillationMap map = compile_map(builtin("eq8_3qubit"));
  const BlochVector fp = {0.0, -0.83929, -0.54369};
  CHECK(distance(map.evaluate(fp).out, fp) < 1e-4);
  CHECK(threshold(map, fp) == doctest::Approx(0.276921).epsilon(1e-3));
}

TEST_CASE("7-qubit code validates and fixes the H-type axis point") {
  const CodeSpec steane = builtin("steane_7qubit");
  const GeneratorSet& gs = std::get<GeneratorSet>(steane.body);
  CHECK_NOTHROW(gs.validate());

  const DistillationMap map = compile_map(steane);
  const double s2 = 1.0 / std::sqrt(2.0);
  const BlochVector h = {s2, 0.0, s2};
  CHECK(distance(map.evaluate(h).out, h) < 1e-10);
  const IterationOutcome out = iterate(map, h.scaled(0.95), {2000});
  REQUIRE(out.status == IterStatus::converged);
  CHECK(canonical_distance(out.fixed_point, h) < 1e-6);
}

TEST_CASE("5-qubit CWS code carries the familiar cyclic stabilizers") {
  const CodeSpec code = builtin("perfect_5qubit_cws");
  const CwsCode& cws = std::get<CwsCode>(code.body);
  CHECK(cws.graph.n == 5);
  CHECK(cws.graph.edge_count() == 5);  // 5-cycle
  CHECK(cws.codeword == 0b11111);

  // The codespace projector from the cyclic shifts of XZZXI must fix both
  // logical kets exactly.
  Cmat proj = Cmat::identity(32);
  for (const char* s : {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}) {
    const Cmat gp = matmul(realize(parse_pauli(s)), proj);
    for (int r = 0; r < 32; ++r)
      for (int c = 0; c < 32; ++c) proj.at(r, c) = 0.5 * (proj.at(r, c) + gp.at(r, c));
  }
  CHECK(trace(proj).real() == doctest::Approx(2.0).epsilon(1e-10));
  const LogicalBasis b = basis_of(code);
  const cvec p0 = matvec(proj, b.ket0), p1 = matvec(proj, b.ket1);
  double d0 = 0, d1 = 0;
  for (int r = 0; r < 32; ++r) {
    d0 = std::max(d0, std::abs(p0[r] - b.ket0[r]));
    d1 = std::max(d1, std::abs(p1[r] - b.ket1[r]));
  }
  CHECK(d0 < 1e-10);
  CHECK(d1 < 1e-10);
}

TEST_CASE("5-qubit code distills the T direction given an inter-round correction") {
  const DistillationMap map = compile_map(builtin("perfect_5qubit_cws"));
  const double s3 = 1.0 / std::sqrt(3.0);
  const BlochVector t = {s3, s3, s3};
  // One round permutes the T-type corners, so the raw map has no T fixed
  // point; a fixed Clifford rotation between rounds pins it down.
  const auto fps = discover_fixed_points(map, true, 77, 50);
  bool found = false;
  for (const auto& [fp, corr] : fps) {
    if (canonical_distance(fp, t) > 1e-6) continue;
    found = true;
    CHECK(corr > 0);
    const DistillationMap corrected = map.with_correction(corr);
    CHECK(distance(corrected.evaluate(fp).out, fp) < 1e-9);
    CHECK(threshold(corrected, fp) > 0.1);
  }
  CHECK(found);
}
