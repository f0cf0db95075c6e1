#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "msd/analysis.hpp"
#include "msd/cws.hpp"

namespace msd {

struct SearchConfig {
  std::vector<int> n_values;  // subset of {2..6}
  // paper_faithful forces all graphs for n <= 4 and non-isomorphic
  // representatives for n in {5,6}.
  enum class Mode { paper_faithful, all, non_isomorphic };
  Mode mode = Mode::paper_faithful;
  int tightness_samples = 1000;
  uint64_t seed = 0;
  bool enable_corrections = false;
  int random_starts = 50;
  int threads = 0;  // 0 = hardware concurrency
};

struct SearchRecord {
  int n = 0;
  CwsCode code;
  uint32_t canonical_graph_bits = 0;
  CodeReport report;
  bool failed = false;
  std::string error;
};

// Fixed points of the map discovered from a deterministic start grid (26
// octahedral directions plus seeded random points), deduplicated at 1e-5
// after canonicalization. When corrections are enabled, every octahedral
// rotation is also tried as an inter-round correction; a corrected variant is
// kept only for fixed points unreachable without correction (no-correction
// preferred, then the smallest rotation index).
std::vector<std::pair<BlochVector, int>> discover_fixed_points(const DistillationMap& map,
                                                               bool enable_corrections,
                                                               uint64_t seed, int random_starts);

// Exhaustive sweep over (graph, nonzero codeword) pairs, one record per
// discovered fixed point. Deterministic given the seed; parallel over codes.
std::vector<SearchRecord> run_search(const SearchConfig& config,
                                     const std::function<void(size_t, size_t)>& progress = {});

// Groups records by (canonical fixed point rounded to 1e-4, threshold rounded
// to 1e-3); each group is led by the lexicographically smallest
// (n, canonical graph, codeword) representative.
std::vector<std::vector<SearchRecord>> dedupe(const std::vector<SearchRecord>& records);

}  // namespace msd
