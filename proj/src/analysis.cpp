#include "msd/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "msd/rng.hpp"

namespace msd {

namespace {

constexpr double kInteriorMargin = 1e-6;
constexpr int kInteriorStreak = 10;
constexpr double kMatchTol = 1e-6;  // "same fixed point" up to rotation

// Rotations that fix the start point and commute with the map. The exact
// trajectory from such a start stays inside the common fixed subspace, so
// averaging each iterate over these rotations is exact in exact arithmetic.
// Without it, rounding noise seeds transverse modes, and a map whose fixed
// point is a saddle (stable along the symmetric line, unstable off it, as for
// the 7-qubit code at the H-type point) amplifies that noise until the
// trajectory escapes a line it provably never leaves.
std::vector<int> start_symmetries(const DistillationMap& map, const BlochVector& start) {
  std::vector<int> out;
  const auto& rots = octahedral_rotations();
  static const BlochVector probes[3] = {
      {0.31, 0.47, 0.11}, {-0.23, 0.41, -0.67}, {0.59, -0.13, 0.17}};
  for (int i = 1; i < static_cast<int>(rots.size()); ++i) {
    const CliffordRotation& rot = rots[i];
    if (distance(rot.apply(start), start) > 1e-9) continue;
    bool commutes = true;
    for (const BlochVector& pr : probes) {
      const BlochVector lhs = map.evaluate(rot.apply(pr)).out;
      const BlochVector rhs = rot.apply(map.evaluate(pr).out);
      if (distance(lhs, rhs) > 1e-10) {
        commutes = false;
        break;
      }
    }
    if (commutes) out.push_back(i);
  }
  return out;
}

BlochVector symmetrize(const BlochVector& r, const std::vector<int>& syms) {
  if (syms.empty()) return r;
  const auto& rots = octahedral_rotations();
  BlochVector acc = r;
  for (const int i : syms) {
    const BlochVector img = rots[i].apply(r);
    acc = {acc.x + img.x, acc.y + img.y, acc.z + img.z};
  }
  return acc.scaled(1.0 / (1.0 + syms.size()));
}

}  // namespace

IterationOutcome iterate(const DistillationMap& map, BlochVector start, IterateOptions opt) {
  IterationOutcome out;
  const std::vector<int> syms = start_symmetries(map, start);
  BlochVector r = start;
  int streak = 0;
  if (opt.record_trajectory) out.trajectory.reserve(64);
  for (int it = 1; it <= opt.max_iters; ++it) {
    EvalResult ev = map.evaluate(r);
    ev.out = symmetrize(ev.out, syms);
    out.iterations = it;
    if (ev.dead) {
      out.status = IterStatus::dead;
      out.fixed_point = r;
      return out;
    }
    if (opt.record_trajectory) out.trajectory.emplace_back(ev.out, ev.p_success);
    const double step = distance(ev.out, r);
    r = ev.out;
    if (r.oct_norm() < 1.0 - kInteriorMargin) {
      if (++streak >= kInteriorStreak) {
        out.status = IterStatus::entered_octahedron;
        out.fixed_point = r;
        return out;
      }
    } else {
      streak = 0;
      if (step < opt.tol) {
        out.status = IterStatus::converged;
        out.fixed_point = r;
        return out;
      }
    }
  }
  out.status = IterStatus::max_iters;
  out.fixed_point = r;
  return out;
}

double p_oct_for(const BlochVector& target) {
  const double l1 = target.oct_norm();
  if (l1 < 1e-12) throw Error("p_oct_for: zero target vector");
  return std::clamp(1.0 - 1.0 / l1, 0.0, 1.0);
}

namespace {

bool returns_to_target(const DistillationMap& map, const BlochVector& target, double p) {
  IterateOptions opt;
  opt.max_iters = 2000;  // near-threshold trajectories escape the boundary slowly
  const IterationOutcome out = iterate(map, target.scaled(1.0 - p), opt);
  return out.status == IterStatus::converged &&
         canonical_distance(out.fixed_point, target) <= kMatchTol;
}

// Sharpens a target quoted to a few decimals into the map's actual fixed
// point, so that kMatchTol can stay tight.
BlochVector refine_target(const DistillationMap& map, const BlochVector& target) {
  const double norm = target.norm();
  IterateOptions opt;
  opt.max_iters = 2000;
  const IterationOutcome out =
      iterate(map, norm > 1.0 ? target.scaled(1.0 / norm) : target, opt);
  if (out.status == IterStatus::converged && canonical_distance(out.fixed_point, target) < 1e-3)
    return out.fixed_point;
  return target;
}

}  // namespace

double threshold(const DistillationMap& map, const BlochVector& raw_target) {
  const BlochVector target = refine_target(map, raw_target);
  if (!returns_to_target(map, target, 0.0)) return 0.0;
  const double p_oct = p_oct_for(target);
  double lo = 0.0;
  double hi = std::min(1.0, p_oct + 0.05);
  if (!returns_to_target(map, target, hi)) {
    while (hi - lo > 1e-7) {
      const double mid = 0.5 * (lo + hi);
      (returns_to_target(map, target, mid) ? lo : hi) = mid;
    }
  } else {
    lo = hi;
  }
  // Distillation cannot beat the octahedron bound: an apparent excess only
  // means the target sits on or inside the octahedron (a stabilizer
  // direction), where "returning to the target" is not purification.
  return std::min(lo, p_oct);
}

bool tightness(const DistillationMap& map, const BlochVector& raw_target, int samples,
               uint64_t seed) {
  if (std::abs(raw_target.norm() - 1.0) > 1e-4)
    throw Error("tightness: target must be on the sphere surface");
  const BlochVector target = refine_target(map, raw_target);
  // Face cone: components with a definite sign must match it, and the signed
  // sum must exceed 1, i.e. the sample lies beyond the octahedron face whose
  // outward normal carries the target's signs.
  int sgn[3] = {0, 0, 0};
  int nonzero = 0;
  const double t[3] = {target.x, target.y, target.z};
  for (int i = 0; i < 3; ++i)
    if (std::abs(t[i]) > 1e-9) {
      sgn[i] = t[i] > 0 ? 1 : -1;
      ++nonzero;
    }
  // With a single nonzero component the region {s.r > 1, |r| <= 1} has zero
  // volume, so an on-axis target cannot be certified by sampling.
  if (nonzero < 2) return false;

  Rng rng(seed);
  int accepted = 0;
  long long attempts = 0;
  while (accepted < samples) {
    if (++attempts > 20000000LL) throw Error("tightness: acceptance region too small to sample");
    const BlochVector r = {rng.symmetric(), rng.symmetric(), rng.symmetric()};
    if (r.norm() > 1.0) continue;
    const double v[3] = {r.x, r.y, r.z};
    double sum = 0.0;
    bool sign_ok = true;
    for (int i = 0; i < 3; ++i) {
      if (sgn[i] == 0) continue;
      if (sgn[i] * v[i] <= 0.0) sign_ok = false;
      sum += sgn[i] * v[i];
    }
    if (!sign_ok || sum <= 1.0) continue;
    ++accepted;
    IterateOptions opt;
    opt.max_iters = 5000;  // points near the cone boundary converge slowly
    const IterationOutcome out = iterate(map, r, opt);
    if (out.status != IterStatus::converged ||
        canonical_distance(out.fixed_point, target) > kMatchTol)
      return false;
  }
  return true;
}

double convergence_order(const std::function<BlochVector(const BlochVector&)>& step,
                         const BlochVector& target) {
  std::vector<double> lx, ly;
  for (const double eps_in : {1e-3, 1e-4, 1e-5, 1e-6}) {
    const double p = 2.0 * eps_in;  // infidelity along the depolarizing line is p/2
    const BlochVector out = step(target.scaled(1.0 - p));
    const double eps_out = 0.5 * (1.0 - out.dot(target));
    if (eps_out < 1e-14) continue;
    lx.push_back(std::log(eps_in));
    ly.push_back(std::log(eps_out));
  }
  if (lx.size() < 2) throw Error("convergence_order: too few usable samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  const double m = static_cast<double>(lx.size());
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

double convergence_order(const DistillationMap& map, const BlochVector& target) {
  const BlochVector refined = refine_target(map, target);
  return convergence_order(
      [&](const BlochVector& r) { return map.evaluate(r).out; }, refined);
}

YieldResult yield(const DistillationMap& map, const BlochVector& target, double p,
                  double target_eps) {
  YieldResult res;
  BlochVector r = target.scaled(1.0 - p);
  const double inv_n = 1.0 / map.n;
  // Same noise suppression as iterate(): when the start lies in a subspace
  // fixed by rotations commuting with the map, keep the trajectory there.
  const std::vector<int> syms = start_symmetries(map, r);
  int stalled = 0;
  for (int round = 0; round < 10000; ++round) {
    const double eps = 0.5 * (1.0 - r.dot(target));
    if (eps <= target_eps) return res;
    EvalResult ev = map.evaluate(r);
    if (ev.dead) throw Error("yield: not distillable at this rate");
    ev.out = symmetrize(ev.out, syms);
    const double eps_next = 0.5 * (1.0 - ev.out.dot(target));
    stalled = eps_next >= eps ? stalled + 1 : 0;
    if (stalled >= 50) throw Error("yield: not distillable at this rate");
    r = ev.out;
    res.value *= ev.p_success * inv_n;
    res.log_value += std::log(ev.p_success * inv_n);
    ++res.rounds;
  }
  throw Error("yield: did not reach the target infidelity");
}

CodeReport analyze_fixed_point(const DistillationMap& map, const BlochVector& fixed_point,
                               int tightness_samples, uint64_t seed) {
  CodeReport rep;
  rep.fixed_point = fixed_point;
  rep.canonical_fixed_point = canonicalize_bloch(fixed_point);
  rep.correction = map.correction;
  rep.p_oct = p_oct_for(fixed_point);
  rep.threshold = threshold(map, fixed_point);
  rep.tight = rep.p_oct > 1e-6 && std::abs(rep.p_oct - rep.threshold) <= 1e-3 &&
              std::abs(fixed_point.norm() - 1.0) <= 1e-4 &&
              tightness(map, fixed_point, tightness_samples, seed);
  rep.convergence_order = convergence_order(map, fixed_point);
  rep.p_success_at_fixed_point = map.evaluate(fixed_point).p_success;
  return rep;
}

}  // namespace msd
