#include "msd/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <thread>

#include "msd/rng.hpp"

namespace msd {

namespace {

std::vector<BlochVector> start_grid(uint64_t seed, int random_starts) {
  std::vector<BlochVector> pts;
  const double s2 = 1.0 / std::sqrt(2.0), s3 = 1.0 / std::sqrt(3.0);
  // Octahedron vertices.
  for (int axis = 0; axis < 3; ++axis)
    for (int sign : {1, -1}) {
      BlochVector v;
      (axis == 0 ? v.x : axis == 1 ? v.y : v.z) = sign;
      pts.push_back(v);
    }
  // Edge midpoints (normalized).
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      for (int sa : {1, -1})
        for (int sb : {1, -1}) {
          double v[3] = {0, 0, 0};
          v[a] = sa * s2;
          v[b] = sb * s2;
          pts.push_back({v[0], v[1], v[2]});
        }
  // Face centers.
  for (int sx : {1, -1})
    for (int sy : {1, -1})
      for (int sz : {1, -1}) pts.push_back({sx * s3, sy * s3, sz * s3});

  Rng rng(seed);
  for (int i = 0; i < random_starts; ++i) {
    for (;;) {
      const BlochVector v = {rng.symmetric(), rng.symmetric(), rng.symmetric()};
      const double n = v.norm();
      if (n < 1e-3 || n > 1.0) continue;
      pts.push_back(v.scaled(1.0 / n));
      break;
    }
  }
  return pts;
}

constexpr double kDedupTol = 1e-5;

}  // namespace

std::vector<std::pair<BlochVector, int>> discover_fixed_points(const DistillationMap& map,
                                                               bool enable_corrections,
                                                               uint64_t seed, int random_starts) {
  const std::vector<BlochVector> starts = start_grid(seed, random_starts);
  std::vector<std::pair<BlochVector, int>> found;
  std::vector<BlochVector> canon;

  auto sweep = [&](const DistillationMap& m, int correction) {
    IterateOptions opt;
    opt.max_iters = 1000;
    for (const BlochVector& s : starts) {
      const IterationOutcome out = iterate(m, s, opt);
      if (out.status != IterStatus::converged) continue;
      const BlochVector c = canonicalize_bloch(out.fixed_point);
      bool known = false;
      for (const BlochVector& k : canon)
        if (distance(c, k) <= kDedupTol) {
          known = true;
          break;
        }
      if (known) continue;
      canon.push_back(c);
      found.emplace_back(out.fixed_point, correction);
    }
  };

  sweep(map, -1);
  if (enable_corrections) {
    const auto& rots = octahedral_rotations();
    for (size_t i = 1; i < rots.size(); ++i)  // index 0 is the identity
      sweep(map.with_correction(static_cast<int>(i)), static_cast<int>(i));
  }
  return found;
}

std::vector<SearchRecord> run_search(const SearchConfig& config,
                                     const std::function<void(size_t, size_t)>& progress) {
  struct Job {
    int n;
    Graph graph;
    uint32_t canon_bits;
    unsigned w;
  };
  std::vector<Job> jobs;
  for (int n : config.n_values) {
    if (n < 2 || n > 6) throw Error("run_search: n must be in [2,6]");
    GraphMode gmode;
    switch (config.mode) {
      case SearchConfig::Mode::all:
        gmode = GraphMode::all;
        break;
      case SearchConfig::Mode::non_isomorphic:
        gmode = GraphMode::non_isomorphic;
        break;
      default:
        gmode = n <= 4 ? GraphMode::all : GraphMode::non_isomorphic;
    }
    for (const Graph& g : enumerate_graphs(n, gmode)) {
      const uint32_t canon = canonical_graph(g).upper_bits();
      for (unsigned w = 1; w < (1u << n); ++w) jobs.push_back({n, g, canon, w});
    }
  }

  std::vector<std::vector<SearchRecord>> slots(jobs.size());
  std::atomic<size_t> next{0};
  std::atomic<size_t> done{0};
  std::mutex progress_mu;

  auto worker = [&]() {
    for (;;) {
      const size_t j = next.fetch_add(1);
      if (j >= jobs.size()) return;
      const Job& job = jobs[j];
      SearchRecord base;
      base.n = job.n;
      base.code = CwsCode{job.graph, job.w, -1};
      base.canonical_graph_bits = job.canon_bits;
      const uint64_t code_seed =
          mix_seed(mix_seed(mix_seed(config.seed, job.n), job.graph.upper_bits()), job.w);
      try {
        const DistillationMap map = compile_map(logical_basis(base.code), job.n);
        const auto fps =
            discover_fixed_points(map, config.enable_corrections, mix_seed(code_seed, 1),
                                  config.random_starts);
        size_t k = 0;
        for (const auto& [fp, corr] : fps) {
          const DistillationMap& mv = corr < 0 ? map : map.with_correction(corr);
          SearchRecord rec = base;
          rec.code.correction = corr;
          rec.report =
              analyze_fixed_point(mv, fp, config.tightness_samples, mix_seed(code_seed, 2 + k++));
          slots[j].push_back(std::move(rec));
        }
      } catch (const Error& e) {
        SearchRecord rec = base;
        rec.failed = true;
        rec.error = e.what();
        slots[j].push_back(std::move(rec));
      }
      const size_t d = done.fetch_add(1) + 1;
      if (progress) {
        std::lock_guard<std::mutex> lock(progress_mu);
        progress(d, jobs.size());
      }
    }
  };

  unsigned nthreads = config.threads > 0 ? static_cast<unsigned>(config.threads)
                                         : std::max(1u, std::thread::hardware_concurrency());
  if (jobs.size() < nthreads) nthreads = static_cast<unsigned>(std::max<size_t>(jobs.size(), 1));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<SearchRecord> out;
  for (auto& s : slots)
    for (auto& r : s) out.push_back(std::move(r));
  return out;
}

std::vector<std::vector<SearchRecord>> dedupe(const std::vector<SearchRecord>& records) {
  using Key = std::array<long long, 4>;
  std::map<Key, std::vector<SearchRecord>> groups;
  for (const SearchRecord& r : records) {
    if (r.failed) continue;
    const BlochVector& c = r.report.canonical_fixed_point;
    const Key key = {std::llround(c.x * 1e4), std::llround(c.y * 1e4), std::llround(c.z * 1e4),
                     std::llround(r.report.threshold * 1e3)};
    groups[key].push_back(r);
  }
  std::vector<std::vector<SearchRecord>> out;
  for (auto& [key, grp] : groups) {
    std::sort(grp.begin(), grp.end(), [](const SearchRecord& a, const SearchRecord& b) {
      if (a.n != b.n) return a.n < b.n;
      if (a.canonical_graph_bits != b.canonical_graph_bits)
        return a.canonical_graph_bits < b.canonical_graph_bits;
      return a.code.codeword < b.code.codeword;
    });
    out.push_back(std::move(grp));
  }
  return out;
}

}  // namespace msd
