#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "msd/distill.hpp"

namespace msd {

enum class IterStatus { converged, entered_octahedron, max_iters, dead };

struct IterationOutcome {
  IterStatus status = IterStatus::max_iters;
  BlochVector fixed_point;
  int iterations = 0;
  std::vector<std::pair<BlochVector, double>> trajectory;  // filled when recorded
};

struct IterateOptions {
  int max_iters = 500;
  double tol = 1e-12;
  bool record_trajectory = false;
};

// Repeated application of the map. Stops converged when the step falls below
// tol at a point on or outside the octahedron boundary; entered_octahedron
// after 10 consecutive strictly-interior iterations; dead on vanishing
// success probability.
IterationOutcome iterate(const DistillationMap& map, BlochVector start, IterateOptions opt = {});

// 1 - 1/(|x|+|y|+|z|) clamped to [0,1]: the depolarizing rate at which
// (1-p)*target crosses into the stabilizer octahedron.
double p_oct_for(const BlochVector& target);

// Largest p for which iteration from (1-p)*target returns to target (up to
// Clifford rotation), by bisection to 1e-7.
double threshold(const DistillationMap& map, const BlochVector& target);

// Samples the ball-capped face cone of the target uniformly; true iff every
// sample converges to target up to Clifford rotation.
bool tightness(const DistillationMap& map, const BlochVector& target, int samples, uint64_t seed);

// Least-squares slope of log eps_out vs log eps_in over one application of
// `step`, eps_in in {1e-3,...,1e-6} along the depolarizing line toward the
// unit target; eps = (1 - r.target)/2.
double convergence_order(const std::function<BlochVector(const BlochVector&)>& step,
                         const BlochVector& target);
double convergence_order(const DistillationMap& map, const BlochVector& target);

struct YieldResult {
  double value = 1.0;      // prod_k p_s^(k)/n
  double log_value = 0.0;  // sum of log(p_s/n), safe against underflow
  int rounds = 0;
};

// Iterates from (1-p)*target until infidelity <= target_eps, accumulating
// p_s/n per round. Throws if the rate is not distillable.
YieldResult yield(const DistillationMap& map, const BlochVector& target, double p,
                  double target_eps = 1e-10);

struct CodeReport {
  BlochVector fixed_point;
  BlochVector canonical_fixed_point;
  double threshold = 0.0;
  double p_oct = 0.0;
  bool tight = false;
  double convergence_order = 0.0;
  int correction = -1;
  double p_success_at_fixed_point = 0.0;
};

// Full per-fixed-point report. Tightness sampling is skipped (verdict false)
// when the threshold sits more than 1e-3 below p_oct.
CodeReport analyze_fixed_point(const DistillationMap& map, const BlochVector& fixed_point,
                               int tightness_samples, uint64_t seed);

}  // namespace msd
