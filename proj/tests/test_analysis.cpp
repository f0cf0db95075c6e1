#include <doctest.h>

#include <cmath>

#include "msd/analysis.hpp"
#include "msd/registry.hpp"

using namespace msd;

namespace {

const BlochVector kFp3 = {0.0, -0.83929, -0.54369};

DistillationMap map3() { return compile_map(builtin("eq8_3qubit")); }

}  // namespace

TEST_CASE("p_oct_for values") {
  CHECK(p_oct_for(kFp3) == doctest::Approx(0.276922).epsilon(1e-4));
  const double s3 = 1.0 / std::sqrt(3.0);
  CHECK(p_oct_for({s3, s3, s3}) == doctest::Approx(1.0 - s3).epsilon(1e-12));
  CHECK(p_oct_for({0.2, 0.1, 0.1}) == 0.0);  // already inside, clamped
  CHECK_THROWS_AS(p_oct_for({0, 0, 0}), Error);
}

TEST_CASE("iterate from the maximally mixed state never reaches the surface") {
  const IterationOutcome out = iterate(map3(), {0, 0, 0});
  CHECK(out.status == IterStatus::entered_octahedron);
}

TEST_CASE("iterate converges to the 3-qubit fixed point") {
  IterateOptions opt;
  opt.record_trajectory = true;
  const IterationOutcome out = iterate(map3(), kFp3.scaled(0.9), opt);
  REQUIRE(out.status == IterStatus::converged);
  CHECK(distance(out.fixed_point, kFp3) < 1e-4);
  CHECK(std::abs(out.fixed_point.norm() - 1.0) < 1e-9);
  CHECK(out.trajectory.size() == static_cast<size_t>(out.iterations));
  for (const auto& [point, ps] : out.trajectory) {
    CHECK(ps > 0.0);
    CHECK(point.norm() <= 1.0 + 1e-9);
  }
}

TEST_CASE("threshold of the 3-qubit code") {
  const double thr = threshold(map3(), kFp3);
  CHECK(thr == doctest::Approx(0.276921).epsilon(1e-3));

  // Straddle check: depolarizing slightly below the threshold recovers the
  // fixed point, slightly above does not.
  const DistillationMap map = map3();
  const IterationOutcome below = iterate(map, kFp3.scaled(1.0 - (thr - 0.01)), {2000});
  REQUIRE(below.status == IterStatus::converged);
  CHECK(canonical_distance(below.fixed_point, kFp3) < 1e-4);
  const IterationOutcome above = iterate(map, kFp3.scaled(1.0 - (thr + 0.01)), {2000});
  CHECK((above.status != IterStatus::converged ||
         canonical_distance(above.fixed_point, kFp3) > 1e-6));
}

TEST_CASE("tightness of the 3-qubit fixed point, deterministic under a fixed seed") {
  const DistillationMap map = map3();
  CHECK(tightness(map, kFp3, 200, 99));
  CHECK(tightness(map, kFp3, 200, 99) == tightness(map, kFp3, 200, 99));
}

TEST_CASE("convergence_order detects a synthetic quadratic map") {
  const BlochVector t = {0, 0, 1};
  const auto quad = [&](const BlochVector& r) {
    const double eps = (1.0 - r.dot(t)) / 2.0;
    return t.scaled(1.0 - 2.0 * eps * eps);
  };
  CHECK(convergence_order(quad, t) == doctest::Approx(2.0).epsilon(0.025));

  const auto linear = [&](const BlochVector& r) {
    const double eps = (1.0 - r.dot(t)) / 2.0;
    return t.scaled(1.0 - 2.0 * (0.5 * eps));
  };
  CHECK(convergence_order(linear, t) == doctest::Approx(1.0).epsilon(0.025));
}

TEST_CASE("convergence_order of the 3-qubit code is linear") {
  const double order = convergence_order(map3(), kFp3);
  CHECK(order > 0.9);
  CHECK(order < 1.1);
}

TEST_CASE("yield accounting") {
  const DistillationMap map = map3();
  const YieldResult y = yield(map, kFp3, 0.10);
  CHECK(y.rounds > 0);
  CHECK(y.value > 0.0);
  CHECK(y.value < 1.0);
  CHECK(std::log(y.value) == doctest::Approx(y.log_value).epsilon(1e-9));

  // Cleaner inputs cost no more than noisier ones.
  const YieldResult cleaner = yield(map, kFp3, 0.02);
  CHECK(cleaner.log_value >= y.log_value);

  // A target infidelity of 1 is met before the first round.
  const YieldResult trivial = yield(map, kFp3, 0.10, 1.0);
  CHECK(trivial.rounds == 0);
  CHECK(trivial.value == 1.0);

  CHECK_THROWS_AS(yield(map, kFp3, 0.40), Error);
}

TEST_CASE("analyze_fixed_point summarizes the 3-qubit code") {
  const CodeReport rep = analyze_fixed_point(map3(), kFp3, 300, 2024);
  CHECK(distance(rep.fixed_point, kFp3) < 1e-6);
  CHECK(rep.canonical_fixed_point.x == doctest::Approx(0.83929).epsilon(1e-4));
  CHECK(rep.canonical_fixed_point.y == doctest::Approx(0.54369).epsilon(1e-4));
  CHECK(std::abs(rep.canonical_fixed_point.z) < 1e-6);
  CHECK(rep.p_oct == doctest::Approx(0.276922).epsilon(1e-4));
  CHECK(rep.threshold == doctest::Approx(rep.p_oct).epsilon(5e-3));
  CHECK(rep.tight);
  CHECK(rep.convergence_order == doctest::Approx(1.0).epsilon(0.1));
  CHECK(rep.p_success_at_fixed_point > 0.0);
  CHECK(rep.p_success_at_fixed_point <= 1.0);
}
