#pragma once

#include <utility>
#include <vector>

#include "moran/pmf.hpp"

namespace moran {

// ---------------------------------------------------------------------------
// Number of trees N_n
// ---------------------------------------------------------------------------

// Poisson-binomial law of the number of trees: PGF
// prod_{k=1}^{n-1} (1 + k/(n-1) (z-1)). Support {1..n-1} for n >= 3,
// {1} for n = 2. T is Rational or double.
template <class T>
BasicPmf<T> ntrees_pmf(int n);

// Integer table a(m, k), k = 0..m-1: rooted trees on {1..m} with k increasing
// edges; coefficients of prod_{j=1}^{m-1} ((m-j) + j z).
std::vector<BigInt> a_table(int m);

// P(N_n = k) = a(n-1, k-1) / (n-1)^{n-2}; equals ntrees_pmf(n) exactly.
RationalPmf ntrees_pmf_via_a(int n);

// ---------------------------------------------------------------------------
// Degree of a fixed vertex
// ---------------------------------------------------------------------------

// Law of D_n: uniform-over-L mixture of Ber(1 - L/(n-1)) + Bin(L, 1/(n-1)).
template <class T>
BasicPmf<T> degree_pmf(int n);

// Closed form (iii') of the PGF of D_n, for cross-checking degree_pmf.
double degree_pgf_closed_form(int n, double z);

// Limit law of the degree: P(D=0) = 1 - 2/e, P(D=k) = (2/e) sum_{j>k} 1/j!.
// Truncated at kmax inclusive (tail mass beyond ~1e-15 by kmax ~ 18).
RealPmf degree_limit_pmf(int kmax);

// P(D >= k).
double degree_limit_tail(int k);

// Sandwich (2/e)/(k+1)! <= P(D >= k) <= (1+1/k)^2 (2/e)/(k+1)!, k >= 1.
std::pair<double, double> degree_tail_bounds(int k);

// ---------------------------------------------------------------------------
// The discrete-time pure-birth chain Upsilon_n
// ---------------------------------------------------------------------------

enum class YuleVariant { Plain, SizeBiased };

// Laws of Upsilon_n(l) (step-up probability i/(n-1)) or of its size-biased
// version Upsilon*_n (step-up probability (i+1)/n), for l = 0..lmax.
template <class T>
struct YuleChainLaw {
  int n = 0;
  YuleVariant variant = YuleVariant::Plain;
  std::vector<BasicPmf<T>> rows;  // rows[l] = pmf at step l

  const BasicPmf<T>& pmf_at(int l) const {
    if (l < 0 || l >= static_cast<int>(rows.size()))
      throw DomainError("YuleChainLaw: step out of range");
    return rows[l];
  }
};

template <class T>
YuleChainLaw<T> yule_law(int n, int lmax, YuleVariant variant = YuleVariant::Plain);

// P(Upsilon_n(L) > k) with L uniform on {0..n-1}; O(n k) tail DP that never
// materializes the full law.
double yule_tail_mixture(int n, int k);

// Yule-process sandwich for P(Upsilon_n(l) > k):
//   P(Y((l-k+1)/(n-1)) > k)  <=  .  <=  P(Y(lambda_n(k) l/(n-1)) > k),
// with P(Y(t) > k) = (1-e^{-t})^k.
std::pair<double, double> yule_sandwich(int n, int l, int k);

double yule_lambda(int n, int k);

// ---------------------------------------------------------------------------
// Tree containing vertex 1
// ---------------------------------------------------------------------------

// P(H_n^{(1)} = h) = h/(n(n-1)) (1 + 1/(n-1))^h, h = 1..n-1.
template <class T>
BasicPmf<T> h1_pmf(int n);

// Law of T_n^{(1)} given H_n^{(1)} = h: the size-biasing of Upsilon_n(h).
template <class T>
BasicPmf<T> t1_conditional(int n, int h);

// Unconditional law of T_n^{(1)} (mixture of t1_conditional over h1_pmf,
// plus the atom at sizes reached when vertex 1 roots no fresh tree).
template <class T>
BasicPmf<T> t1_pmf(int n);

// ---------------------------------------------------------------------------
// Limit laws of tree sizes
// ---------------------------------------------------------------------------

// P(T^U = k) = 2 int_0^1 x e^{-x} (1-e^{-x})^{k-1} dx.
double limit_treeU_pmf(int k);
// P(T^(1) = k) = k int_0^1 x e^{-x} (1-e^{-x})^{k-1} dx = (k/2) P(T^U = k).
double limit_tree1_pmf(int k);

// (e/k) (1 - 1/e)^{k+1}, the asymptotic tail of Upsilon_n(L).
double tree_tail_asymptotic(int k);

// ---------------------------------------------------------------------------
// Extreme-value centering sequences
// ---------------------------------------------------------------------------

// log n/log log n + log n * log log log n / (log log n)^2. Requires n > e^e.
double maxdegree_prediction(double n);
// alpha (log n - log log n), alpha = -1/log(1 - 1/e). Requires n > e^e.
double maxtree_prediction(double n);

// alpha = (1 - log(e-1))^{-1} = -1/log(1 - 1/e) ~ 2.18019.
double maxtree_alpha();

// ---------------------------------------------------------------------------
// CLT for N_n
// ---------------------------------------------------------------------------

// Exact law of (N_n - n/2)/sqrt(n/6): support points with probabilities.
struct NormalizedPmf {
  std::vector<double> x;
  std::vector<double> p;

  double mean() const;
  double variance() const;
  // sup_t |F(t) - Phi(t)| against the standard normal CDF.
  double kolmogorov_to_std_normal() const;
};

NormalizedPmf clt_normalized_dist(int n);

double std_normal_cdf(double x);

}  // namespace moran
