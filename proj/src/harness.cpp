#include "moran/harness.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include <boost/math/distributions/chi_squared.hpp>

#include "moran/exactdist.hpp"
#include "moran/samplers.hpp"

namespace moran {

std::string statistic_name(Statistic s) {
  switch (s) {
    case Statistic::NTrees: return "ntrees";
    case Statistic::Degree: return "degree";
    case Statistic::TreeU: return "treeU";
    case Statistic::Tree1: return "tree1";
    case Statistic::H1: return "h1";
    case Statistic::MaxDegree: return "maxdegree";
    case Statistic::MaxTree: return "maxtree";
    case Statistic::LocalDegree: return "localdegree";
  }
  throw InternalCheckError("statistic_name: unknown value");
}

std::string sampler_name(SamplerKind s) {
  switch (s) {
    case SamplerKind::UA: return "ua";
    case SamplerKind::Backward: return "backward";
    case SamplerKind::ViaUniformTree: return "uniformtree";
    case SamplerKind::LocalLimit: return "locallimit";
  }
  throw InternalCheckError("sampler_name: unknown value");
}

Statistic parse_statistic(const std::string& name) {
  for (Statistic s : {Statistic::NTrees, Statistic::Degree, Statistic::TreeU,
                      Statistic::Tree1, Statistic::H1, Statistic::MaxDegree,
                      Statistic::MaxTree, Statistic::LocalDegree})
    if (statistic_name(s) == name) return s;
  throw ValidationError("unknown statistic: " + name);
}

SamplerKind parse_sampler(const std::string& name) {
  for (SamplerKind s : {SamplerKind::UA, SamplerKind::Backward,
                        SamplerKind::ViaUniformTree, SamplerKind::LocalLimit})
    if (sampler_name(s) == name) return s;
  throw ValidationError("unknown sampler: " + name);
}

long long Histogram::total() const {
  long long t = 0;
  for (const auto& [k, c] : counts) t += c;
  return t;
}

double Histogram::mean() const {
  double s = 0;
  const double t = static_cast<double>(total());
  for (const auto& [k, c] : counts) s += static_cast<double>(k) * c;
  return t > 0 ? s / t : 0;
}

RealPmf Histogram::to_pmf() const {
  if (counts.empty()) return RealPmf(0, {});
  const long long lo = counts.begin()->first;
  const long long hi = counts.rbegin()->first;
  const double t = static_cast<double>(total());
  std::vector<double> p(static_cast<std::size_t>(hi - lo + 1), 0.0);
  for (const auto& [k, c] : counts)
    p[static_cast<std::size_t>(k - lo)] = static_cast<double>(c) / t;
  return RealPmf(lo, std::move(p));
}

namespace {

int degree_of_vertex(const RootedForest& f, int v) {
  int d = f.parent(v) != 0 ? 1 : 0;
  for (int w = 1; w <= f.n(); ++w)
    if (f.parent(w) == v) ++d;
  return d;
}

long long forest_statistic(const RootedForest& f, Statistic stat, RngStream& rng) {
  switch (stat) {
    case Statistic::NTrees:
      return static_cast<long long>(f.roots().size());
    case Statistic::Degree:
      return degree_of_vertex(f, 1);
    case Statistic::Tree1:
      return static_cast<long long>(f.tree_of(1).size());
    case Statistic::TreeU: {
      const std::vector<int> roots = f.roots();
      const int r = roots[rng.next_below(roots.size())];
      return static_cast<long long>(f.tree_of(r).size());
    }
    case Statistic::MaxDegree: {
      int best = 0;
      for (int v = 1; v <= f.n(); ++v)
        best = std::max(best, degree_of_vertex(f, v));
      return best;
    }
    case Statistic::MaxTree: {
      int best = 0;
      for (int r : f.roots())
        best = std::max(best, static_cast<int>(f.tree_of(r).size()));
      return best;
    }
    default:
      throw ValidationError("statistic unavailable for this sampler");
  }
}

long long eval_replicate(const Experiment& e, std::uint64_t index) {
  RngStream rng = derive_stream(e.master_seed, index);
  switch (e.sampler) {
    case SamplerKind::UA: {
      const FastForestStats s = sample_ua_stats(e.n, rng);
      switch (e.statistic) {
        case Statistic::NTrees: return s.num_trees;
        case Statistic::Degree: return s.degree_of_random_vertex;
        case Statistic::TreeU: return s.uniform_tree_size;
        case Statistic::Tree1: return s.vertex1_tree_size;
        case Statistic::H1: return s.vertex1_root_steps;
        case Statistic::MaxDegree: return s.max_degree;
        case Statistic::MaxTree: return s.max_tree_size;
        default:
          throw ValidationError("statistic unavailable for the UA sampler");
      }
    }
    case SamplerKind::Backward:
      return forest_statistic(sample_backward(e.n, rng).forest, e.statistic, rng);
    case SamplerKind::ViaUniformTree:
      return forest_statistic(sample_via_uniform_tree(e.n, rng), e.statistic, rng);
    case SamplerKind::LocalLimit:
      for (;;) {
        try {
          return sample_local_limit(rng).focal_degree;
        } catch (const BudgetExceeded&) {
          // astronomically rare; draw again from the same stream
        }
      }
  }
  throw InternalCheckError("eval_replicate: unknown sampler");
}

void validate_experiment(const Experiment& e) {
  if (e.replicates < 1) throw ValidationError("experiment: replicates must be >= 1");
  const bool local = e.sampler == SamplerKind::LocalLimit;
  if (local != (e.statistic == Statistic::LocalDegree))
    throw ValidationError("experiment: localdegree pairs only with the locallimit sampler");
  if (!local && e.n < 2) throw ValidationError("experiment: n must be >= 2");
  if (e.sampler != SamplerKind::UA && e.statistic == Statistic::H1)
    throw ValidationError("experiment: h1 requires the ua sampler");
}

}  // namespace

Histogram collect(const Experiment& e) {
  validate_experiment(e);
  const int jobs = std::max(1, e.jobs);
  std::vector<std::map<long long, long long>> partial(jobs);
  const long long reps = e.replicates;

  auto worker = [&](int w) {
    const long long lo = reps * w / jobs;
    const long long hi = reps * (w + 1) / jobs;
    auto& local = partial[w];
    for (long long i = lo; i < hi; ++i)
      ++local[eval_replicate(e, static_cast<std::uint64_t>(i))];
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (auto& t : threads) t.join();
  }

  Histogram h;
  for (const auto& local : partial)
    for (const auto& [k, c] : local) h.counts[k] += c;
  return h;
}

ChiSquareResult chi_square(const Histogram& h, const RealPmf& reference,
                           double min_expected) {
  const double total = static_cast<double>(h.total());
  if (total <= 0) throw ValidationError("chi_square: empty histogram");

  long long lo = reference.min_support();
  long long hi = reference.max_support();
  if (!h.counts.empty()) {
    lo = std::min(lo, h.counts.begin()->first);
    hi = std::max(hi, h.counts.rbegin()->first);
  }

  std::vector<std::pair<double, double>> bins;  // (observed, expected)
  double ob = 0, eb = 0;
  for (long long k = lo; k <= hi; ++k) {
    const auto it = h.counts.find(k);
    ob += it == h.counts.end() ? 0.0 : static_cast<double>(it->second);
    eb += total * reference.at(k);
    if (eb >= min_expected) {
      bins.emplace_back(ob, eb);
      ob = eb = 0;
    }
  }
  // Reference mass beyond the enumerated range belongs to the tail bin, as
  // does any unfinished partial bin.
  eb += total * std::max(0.0, 1.0 - reference.total());
  if (ob > 0 || eb > 0) {
    if (!bins.empty() && eb < min_expected) {
      bins.back().first += ob;
      bins.back().second += eb;
    } else {
      bins.emplace_back(ob, eb);
    }
  }

  ChiSquareResult r;
  r.bins = static_cast<int>(bins.size());
  for (const auto& [o, x] : bins) {
    if (x <= 0) throw InternalCheckError("chi_square: zero-expectation bin");
    const double d = o - x;
    r.statistic += d * d / x;
  }
  r.dof = r.bins - 1;
  if (r.dof < 1) {
    r.p_value = 1;
    return r;
  }
  const boost::math::chi_squared dist(r.dof);
  r.p_value = boost::math::cdf(boost::math::complement(dist, r.statistic));
  return r;
}

namespace {

RealPmf reference_for(const Experiment& e) {
  switch (e.statistic) {
    case Statistic::NTrees:
      if (e.n <= 300) return to_real(ntrees_pmf<Rational>(e.n));
      if (e.n <= 5000) return ntrees_pmf<double>(e.n);
      throw IncompatibleReference("ntrees reference limited to n <= 5000");
    case Statistic::Degree:
      if (e.n <= 20000) return degree_pmf<double>(e.n);
      throw IncompatibleReference("degree reference limited to n <= 20000");
    case Statistic::H1:
      return h1_pmf<double>(e.n);
    case Statistic::Tree1:
      if (e.n <= 2000) return t1_pmf<double>(e.n);
      throw IncompatibleReference("tree1 reference limited to n <= 2000");
    case Statistic::LocalDegree:
      return degree_limit_pmf(25);
    default:
      throw IncompatibleReference("no exact reference for statistic " +
                                  statistic_name(e.statistic));
  }
}

}  // namespace

TestReport run(const Experiment& e) {
  const auto t0 = std::chrono::steady_clock::now();
  TestReport rep;
  rep.experiment = e;
  rep.reference = reference_for(e);
  rep.has_reference = true;
  rep.empirical = collect(e);
  rep.empirical_mean = rep.empirical.mean();
  rep.chi = chi_square(rep.empirical, rep.reference);
  rep.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

TestReport uniform_tree_statistic(const Experiment& e, int kmax) {
  const auto t0 = std::chrono::steady_clock::now();
  Experiment exp = e;
  exp.statistic = Statistic::TreeU;

  std::vector<double> p(kmax);
  for (int k = 1; k <= kmax; ++k) p[k - 1] = limit_treeU_pmf(k);

  TestReport rep;
  rep.experiment = exp;
  rep.reference = RealPmf(1, std::move(p));
  rep.has_reference = true;
  rep.empirical = collect(exp);
  rep.empirical_mean = rep.empirical.mean();
  rep.chi = chi_square(rep.empirical, rep.reference);
  rep.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

ExtremesReport extremes_scan(Statistic stat, const std::vector<int>& n_grid,
                             long long reps, std::uint64_t master_seed,
                             int jobs) {
  if (stat != Statistic::MaxDegree && stat != Statistic::MaxTree)
    throw ValidationError("extremes_scan: statistic must be maxdegree or maxtree");
  const auto t0 = std::chrono::steady_clock::now();
  ExtremesReport rep;
  rep.statistic = stat;
  for (int n : n_grid) {
    ExtremesRow row;
    row.n = n;
    row.prediction = stat == Statistic::MaxDegree
                         ? maxdegree_prediction(static_cast<double>(n))
                         : maxtree_prediction(static_cast<double>(n));
    Experiment e;
    e.n = n;
    e.replicates = reps;
    e.statistic = stat;
    e.sampler = SamplerKind::UA;
    e.master_seed = splitmix64(master_seed ^ static_cast<std::uint64_t>(n));
    e.jobs = jobs;
    row.mean = collect(e).mean();
    row.ratio = row.mean / row.prediction;
    rep.rows.push_back(row);
  }
  rep.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace moran
