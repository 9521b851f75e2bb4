#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "moran/bijection.hpp"
#include "moran/chain.hpp"
#include "moran/exactdist.hpp"
#include "moran/forest.hpp"
#include "moran/harness.hpp"
#include "moran/oracle.hpp"
#include "moran/samplers.hpp"

namespace {

using namespace moran;

std::uint64_t resolve_seed(CLI::Option* seed_opt, std::uint64_t seed) {
  if (seed_opt->count() > 0) return seed;
  std::random_device rd;
  const auto now = static_cast<std::uint64_t>(
      std::chrono::steady_clock::now().time_since_epoch().count());
  const std::uint64_t s = splitmix64(now ^ (static_cast<std::uint64_t>(rd()) << 32 | rd()));
  std::cerr << "seed: " << s << "\n";
  return s;
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

void print_pmf(const RationalPmf& p) {
  for (long long k = p.min_support(); k <= p.max_support(); ++k)
    std::cout << k << "," << p.at(k) << "\n";
}

void print_pmf(const RealPmf& p) {
  for (long long k = p.min_support(); k <= p.max_support(); ++k)
    std::cout << k << "," << fmt(p.at(k)) << "\n";
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(std::stoi(tok));
  return out;
}

int cmd_sample(int n, long long count, std::uint64_t seed, const std::string& sampler,
               bool as_stats) {
  const SamplerKind kind = parse_sampler(sampler);
  if (kind == SamplerKind::LocalLimit)
    throw ValidationError("sample: use the mc subcommand for the local limit");
  if (as_stats) std::cout << "num_trees,num_edges,max_degree,max_tree_size\n";
  for (long long i = 0; i < count; ++i) {
    RngStream rng = derive_stream(seed, static_cast<std::uint64_t>(i));
    RootedForest f = [&] {
      switch (kind) {
        case SamplerKind::Backward: return sample_backward(n, rng).forest;
        case SamplerKind::ViaUniformTree: return sample_via_uniform_tree(n, rng);
        default: return sample_ua(n, rng).forest;
      }
    }();
    if (as_stats) {
      const ForestStats s = stats(f);
      std::cout << s.num_trees << "," << s.num_edges << "," << s.max_degree << ","
                << s.max_tree_size << "\n";
    } else {
      std::cout << serialize(f) << "\n";
    }
  }
  return 0;
}

int cmd_chain(int n, long long steps, std::uint64_t seed, const std::string& start,
              bool trace) {
  std::set<std::pair<int, int>> edges;
  if (start == "complete") {
    for (int u = 1; u <= n; ++u)
      for (int v = 1; v <= n; ++v)
        if (u != v) edges.insert({u, v});
  } else if (start != "empty") {
    throw ValidationError("chain: --start must be empty or complete");
  }
  DirectedGraph g(n, std::move(edges));
  RngStream rng(seed);
  const auto on_step = [&](const ChainTraceEntry& e, const DirectedGraph&) {
    if (trace)
      std::cout << "{\"t\":" << e.t << ",\"u\":" << e.step.u << ",\"v\":" << e.step.v
                << ",\"is_forest\":" << (e.is_forest ? "true" : "false") << "}\n";
  };
  const DirectedGraph out = run_chain(g, steps, rng, on_step);
  if (is_forest(out)) {
    std::cout << serialize(validate_forest(out)) << "\n";
  } else {
    std::cout << "nonforest " << out.n();
    for (const auto& [u, v] : out.edges()) std::cout << " " << u << ">" << v;
    std::cout << "\n";
  }
  return 0;
}

int cmd_exact(const std::string& law, int n, int kmax, const std::string& backend) {
  const bool rational = backend == "rational";
  if (!rational && backend != "float")
    throw ValidationError("exact: --backend must be rational or float");
  if (law == "ntrees") {
    rational ? print_pmf(ntrees_pmf<Rational>(n)) : print_pmf(ntrees_pmf<double>(n));
  } else if (law == "ntrees-via-a") {
    print_pmf(ntrees_pmf_via_a(n));
  } else if (law == "degree") {
    rational ? print_pmf(degree_pmf<Rational>(n)) : print_pmf(degree_pmf<double>(n));
  } else if (law == "h1") {
    rational ? print_pmf(h1_pmf<Rational>(n)) : print_pmf(h1_pmf<double>(n));
  } else if (law == "t1") {
    rational ? print_pmf(t1_pmf<Rational>(n)) : print_pmf(t1_pmf<double>(n));
  } else if (law == "degree-limit") {
    print_pmf(degree_limit_pmf(kmax));
  } else if (law == "treeu-limit") {
    for (int k = 1; k <= kmax; ++k) std::cout << k << "," << fmt(limit_treeU_pmf(k)) << "\n";
  } else if (law == "tree1-limit") {
    for (int k = 1; k <= kmax; ++k) std::cout << k << "," << fmt(limit_tree1_pmf(k)) << "\n";
  } else if (law == "degree-tail") {
    for (int k = 1; k <= kmax; ++k) {
      const auto [lo, hi] = degree_tail_bounds(k);
      std::cout << k << "," << fmt(lo) << "," << fmt(hi) << "\n";
    }
  } else {
    throw ValidationError("exact: unknown law " + law);
  }
  return 0;
}

int cmd_bijection(int n, const std::string& vector_csv, const std::string& tree_line,
                  bool inverse, bool selftest) {
  if (selftest) {
    // Exhaustive Phi round trip over S*_{n-1}.
    if (n < 3 || n > 7) throw ValidationError("bijection: selftest needs 3 <= n <= 7");
    long long total = 0;
    std::vector<int> entries(n - 2, 0);
    RestrictedVector v{n, entries};
    const std::function<bool(int)> rec = [&](int idx) -> bool {
      if (idx == n - 2) {
        ++total;
        return phi_inv(phi(v)).entries == v.entries;
      }
      for (int val = 1; val <= n; ++val) {
        if (val == idx + 2) continue;
        v.entries[idx] = val;
        if (!rec(idx + 1)) return false;
      }
      return true;
    };
    const bool ok = rec(0);
    std::cout << "phi round-trip over " << total << " vectors: "
              << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 2;
  }
  if (inverse) {
    if (tree_line.empty()) throw ValidationError("bijection: --tree required with --inverse");
    const RestrictedVector v = phi_inv(deserialize(tree_line));
    for (std::size_t i = 0; i < v.entries.size(); ++i)
      std::cout << (i ? "," : "") << v.entries[i];
    std::cout << "\n";
    return 0;
  }
  if (vector_csv.empty()) throw ValidationError("bijection: --vector required");
  const std::vector<int> entries = parse_int_list(vector_csv);
  if (n == 0) n = static_cast<int>(entries.size()) + 2;
  std::cout << serialize(phi(RestrictedVector{n, entries})) << "\n";
  return 0;
}

int cmd_verify(int n) {
  bool all_ok = true;
  const auto report = [&](const std::string& name, bool ok) {
    std::cout << name << ": " << (ok ? "PASS" : "FAIL") << "\n";
    all_ok = all_ok && ok;
  };

  const int n_solve = std::min(n, 4);
  report("stationary == ua_exact",
         tv_distance(stationary_solve(n_solve), ua_exact(n_solve)) == 0);

  const ExactForestDistribution ua = ua_exact(std::min(n, 5));
  report("ua_exact sums to 1", ua.total() == 1);

  const RationalPmf nn = marginal(ua, [](const RootedForest& f) {
    return static_cast<int>(f.roots().size());
  });
  report("marginal N == ntrees_pmf",
         tv_distance(nn, ntrees_pmf<Rational>(ua.n)) == 0);

  const RationalPmf dd = marginal(ua, [](const RootedForest& f) {
    int d = f.parent(1) != 0 ? 1 : 0;
    for (int w = 2; w <= f.n(); ++w)
      if (f.parent(w) == 1) ++d;
    return d;
  });
  report("marginal degree == degree_pmf",
         tv_distance(dd, degree_pmf<Rational>(ua.n)) == 0);

  const int m = std::min(n + 2, 6);
  const auto brute = count_trees_by_increasing_edges(m);
  const auto poly = a_table(m);
  report("a_table == tree enumeration (m=" + std::to_string(m) + ")", brute == poly);

  return all_ok ? 0 : 2;
}

int cmd_mc(int n, long long reps, const std::string& statistic,
           const std::string& sampler, std::uint64_t seed, int jobs) {
  Experiment e;
  e.n = n;
  e.replicates = reps;
  e.statistic = parse_statistic(statistic);
  e.sampler = parse_sampler(sampler);
  e.master_seed = seed;
  e.jobs = jobs;

  TestReport rep = e.statistic == Statistic::TreeU
                       ? uniform_tree_statistic(e)
                       : run(e);
  std::cout << "k,count,empirical,reference\n";
  const double total = static_cast<double>(rep.empirical.total());
  long long lo = rep.empirical.counts.begin()->first;
  long long hi = rep.empirical.counts.rbegin()->first;
  lo = std::min(lo, rep.reference.min_support());
  hi = std::max(hi, rep.reference.max_support());
  for (long long k = lo; k <= hi; ++k) {
    const auto it = rep.empirical.counts.find(k);
    const long long c = it == rep.empirical.counts.end() ? 0 : it->second;
    std::cout << k << "," << c << "," << fmt(c / total) << ","
              << fmt(rep.reference.at(k)) << "\n";
  }
  std::cout << "# mean=" << fmt(rep.empirical_mean) << " chi2=" << fmt(rep.chi.statistic)
            << " dof=" << rep.chi.dof << " p=" << fmt(rep.chi.p_value) << "\n";
  std::cerr << "runtime: " << rep.runtime_seconds << "s\n";
  return 0;
}

int cmd_asymptotics(const std::string& statistic, const std::string& grid_csv,
                    long long reps, std::uint64_t seed, int jobs) {
  const ExtremesReport rep = extremes_scan(parse_statistic(statistic),
                                           parse_int_list(grid_csv), reps, seed, jobs);
  std::cout << "n,mean,prediction,ratio\n";
  for (const auto& row : rep.rows)
    std::cout << row.n << "," << fmt(row.mean) << "," << fmt(row.prediction) << ","
              << fmt(row.ratio) << "\n";
  std::cerr << "runtime: " << rep.runtime_seconds << "s\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moran forest toolkit: samplers, exact laws, and Monte Carlo checks"};
  app.require_subcommand(1);

  int n = 0, kmax = 20, jobs = 1;
  long long count = 1, steps = 0, reps = 10000;
  std::uint64_t seed = 0;
  std::string sampler = "ua", backend = "rational", law, start = "empty";
  std::string statistic = "ntrees", vector_csv, tree_line, grid_csv = "1000,10000,100000";
  bool as_stats = false, trace = false, inverse = false, selftest = false;

  auto* sample = app.add_subcommand("sample", "Draw Moran forests");
  sample->add_option("--n", n, "number of vertices")->required();
  sample->add_option("--count", count, "number of samples");
  auto* sample_seed = sample->add_option("--seed", seed, "master seed");
  sample->add_option("--sampler", sampler, "ua | backward | uniformtree");
  sample->add_flag("--stats", as_stats, "emit ForestStats CSV instead of parent arrays");

  auto* chain = app.add_subcommand("chain", "Run the disconnect-and-reattach chain");
  chain->add_option("--n", n, "number of vertices")->required();
  chain->add_option("--steps", steps, "number of transitions")->required();
  auto* chain_seed = chain->add_option("--seed", seed, "master seed");
  chain->add_option("--start", start, "empty | complete");
  chain->add_flag("--trace", trace, "emit one JSON line per transition");

  auto* exact = app.add_subcommand("exact", "Print exact laws as CSV");
  exact->add_option("law", law,
                    "ntrees | ntrees-via-a | degree | h1 | t1 | degree-limit | "
                    "treeu-limit | tree1-limit | degree-tail")
      ->required();
  exact->add_option("--n", n, "number of vertices");
  exact->add_option("--kmax", kmax, "truncation for limit laws");
  exact->add_option("--backend", backend, "rational | float");

  auto* bijection = app.add_subcommand("bijection", "Apply Phi or its inverse");
  bijection->add_option("--n", n, "vector length + 2 (inferred when omitted)");
  bijection->add_option("--vector", vector_csv, "entries u_2..u_{n-1}, comma-separated");
  bijection->add_option("--tree", tree_line, "serialized tree for --inverse");
  bijection->add_flag("--inverse", inverse, "apply Phi^{-1} to --tree");
  bijection->add_flag("--selftest", selftest, "exhaustive round-trip check");

  auto* verify = app.add_subcommand("verify", "Run the brute-force oracle suite");
  verify->add_option("--n", n, "oracle size (2..4 for the stationary solve)")
      ->default_val(4);

  auto* mc = app.add_subcommand("mc", "Monte Carlo experiment vs exact law");
  mc->add_option("--n", n, "number of vertices");
  mc->add_option("--reps", reps, "replicates");
  mc->add_option("--statistic", statistic,
                 "ntrees | degree | treeU | tree1 | h1 | localdegree");
  mc->add_option("--sampler", sampler, "ua | backward | uniformtree | locallimit");
  auto* mc_seed = mc->add_option("--seed", seed, "master seed");
  mc->add_option("--jobs", jobs, "worker threads (does not affect output)");

  auto* asym = app.add_subcommand("asymptotics", "Extreme-value scan over an n-grid");
  asym->add_option("--statistic", statistic, "maxdegree | maxtree")->required();
  asym->add_option("--grid", grid_csv, "comma-separated n values");
  asym->add_option("--reps", reps, "replicates per grid point");
  auto* asym_seed = asym->add_option("--seed", seed, "master seed");
  asym->add_option("--jobs", jobs, "worker threads (does not affect output)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sample->parsed())
      return cmd_sample(n, count, resolve_seed(sample_seed, seed), sampler, as_stats);
    if (chain->parsed())
      return cmd_chain(n, steps, resolve_seed(chain_seed, seed), start, trace);
    if (exact->parsed()) return cmd_exact(law, n, kmax, backend);
    if (bijection->parsed())
      return cmd_bijection(n, vector_csv, tree_line, inverse, selftest);
    if (verify->parsed()) return cmd_verify(n);
    if (mc->parsed())
      return cmd_mc(n, reps, statistic, sampler, resolve_seed(mc_seed, seed), jobs);
    if (asym->parsed())
      return cmd_asymptotics(statistic, grid_csv, reps, resolve_seed(asym_seed, seed),
                             jobs);
  } catch (const moran::InternalCheckError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const moran::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
