#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "awez/convert.hpp"
#include "awez/instance.hpp"

namespace awez {

constexpr std::uint64_t kDefaultSeed = 20240917;

struct SuiteOptions {
  int hdeg = 3;
  int gdeg = 3;
  std::uint64_t seed = kDefaultSeed;
  // All coefficient pairs in bimodule checks instead of a seeded sample.
  bool exhaustive = false;
  int samples = 8;
};

// Basis words sampled per homological degree when there are more.
constexpr std::size_t kMaxSampledWords = 2000;

// f(a w b) = a f(w) b for `samples` seeded pairs (a, b) per basis word, drawn
// from the algebra basis up to degree a_max; at most kMaxSampledWords seeded
// words per homological degree. The seed is recorded.
CheckReport check_bimodule_map_sampled(const ChainMap& f, int n_max, int d_max, int a_max, std::uint64_t seed,
                                       int samples);

// For A = k[V] # kG: the unshuffle and shuffle against the closed group
// formulas on all basis words of B_A and Y, and AW_B, EZ_B, AW, EZ against the
// closed formulas on all free generators, n <= n_max, degree <= d_max.
CheckReport check_group_closed_forms(const AwEz& maps, const GroupHopfAlgebra& hopf, const HopfAction& action,
                                     int n_max, int d_max);

// The conversion checks for a smash-Koszul pipeline, by name, unevaluated.
std::vector<std::pair<std::string, std::function<CheckReport()>>> pipeline_checks(const SmashKoszulPipeline& p,
                                                                               int n_max, int d_max);

// The full battery on one instance: twist axiom and inverse, action axioms,
// d^2 = 0 and truncated exactness of every constructed complex, chain-map and
// bimodule-map squares, AW EZ = 1, group closed forms, the smash-Koszul
// conversion, the instance's own expectations, and negative controls.
std::vector<CheckReport> run_suite(const Instance& inst, const SuiteOptions& opt);

// "name: PASS" (plus witness lines on failure).
std::string format_report(const CheckReport& r, bool with_time);
// Deterministic: wall time is left out.
Json report_to_json(const CheckReport& r);

}  // namespace awez
