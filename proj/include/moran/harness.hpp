#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "moran/pmf.hpp"
#include "moran/rng.hpp"

namespace moran {

enum class Statistic {
  NTrees,        // N_n
  Degree,        // degree of a fixed vertex
  TreeU,         // size of a uniformly chosen tree
  Tree1,         // size of the tree containing vertex 1
  H1,            // steps after the arrival of vertex 1's root
  MaxDegree,     // D^max
  MaxTree,       // T^max
  LocalDegree,   // focal degree of the local weak limit
};

enum class SamplerKind { UA, Backward, ViaUniformTree, LocalLimit };

std::string statistic_name(Statistic s);
std::string sampler_name(SamplerKind s);
Statistic parse_statistic(const std::string& name);
SamplerKind parse_sampler(const std::string& name);

struct Experiment {
  int n = 0;
  long long replicates = 1;
  Statistic statistic = Statistic::NTrees;
  SamplerKind sampler = SamplerKind::UA;
  std::uint64_t master_seed = 0;
  int jobs = 1;
};

struct Histogram {
  std::map<long long, long long> counts;

  long long total() const;
  double mean() const;
  RealPmf to_pmf() const;
};

// Runs the replicates (threaded when jobs > 1; results do not depend on the
// worker count) and histograms the chosen statistic.
Histogram collect(const Experiment& e);

struct ChiSquareResult {
  double statistic = 0;
  int dof = 0;
  int bins = 0;
  double p_value = 1;
};

// Goodness of fit of observed counts against a reference law. Bins with
// expected count below min_expected are pooled with their neighbors; the last
// bin absorbs all reference mass beyond the observed range.
ChiSquareResult chi_square(const Histogram& h, const RealPmf& reference,
                           double min_expected = 5.0);

struct TestReport {
  Experiment experiment;
  Histogram empirical;
  RealPmf reference;
  bool has_reference = false;
  ChiSquareResult chi;
  double empirical_mean = 0;
  double runtime_seconds = 0;
};

// Collects the experiment and tests it against the matching exact law.
// Throws IncompatibleReference when no exact reference exists for the
// statistic (use uniform_tree_statistic or extremes_scan for those).
TestReport run(const Experiment& e);

// T^U against the limiting law truncated at kmax.
TestReport uniform_tree_statistic(const Experiment& e, int kmax = 20);

struct ExtremesRow {
  int n = 0;
  double mean = 0;
  double prediction = 0;
  double ratio = 0;
};

struct ExtremesReport {
  Statistic statistic = Statistic::MaxDegree;
  std::vector<ExtremesRow> rows;
  double runtime_seconds = 0;
};

// Empirical mean of D^max or T^max over the n-grid, with the ratio to the
// paper's centering prediction.
ExtremesReport extremes_scan(Statistic stat, const std::vector<int>& n_grid,
                             long long reps, std::uint64_t master_seed,
                             int jobs = 1);

}  // namespace moran
