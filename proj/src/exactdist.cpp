#include "moran/exactdist.hpp"

#include <cmath>

namespace moran {

namespace {

template <class T>
T frac(long long num, long long den);

template <>
Rational frac<Rational>(long long num, long long den) {
  return Rational(num, den);
}
template <>
double frac<double>(long long num, long long den) {
  return static_cast<double>(num) / static_cast<double>(den);
}

// In-place convolution with the two-point law {P(0)=1-p, P(1)=p}.
template <class T>
void conv_bernoulli(std::vector<T>& c, const T& p) {
  const T q = T(1) - p;
  c.push_back(T(0));
  for (std::size_t i = c.size(); i-- > 1;) c[i] = c[i] * q + c[i - 1] * p;
  c[0] *= q;
}

}  // namespace

template <class T>
BasicPmf<T> ntrees_pmf(int n) {
  if (n < 2) throw DomainError("ntrees_pmf: n must be >= 2");
  std::vector<T> c{T(1)};
  for (int k = 1; k <= n - 1; ++k) conv_bernoulli(c, frac<T>(k, n - 1));
  return BasicPmf<T>(0, std::move(c)).trimmed();
}

template BasicPmf<Rational> ntrees_pmf<Rational>(int);
template BasicPmf<double> ntrees_pmf<double>(int);

std::vector<BigInt> a_table(int m) {
  if (m < 1) throw DomainError("a_table: m must be >= 1");
  std::vector<BigInt> c{1};
  for (int j = 1; j <= m - 1; ++j) {
    // multiply by (m-j) + j z
    c.push_back(0);
    for (std::size_t i = c.size(); i-- > 1;)
      c[i] = c[i] * (m - j) + c[i - 1] * j;
    c[0] *= (m - j);
  }
  return c;
}

RationalPmf ntrees_pmf_via_a(int n) {
  if (n < 2) throw DomainError("ntrees_pmf_via_a: n must be >= 2");
  const auto a = a_table(n - 1);
  const BigInt denom = ipow(n - 1, n - 2);
  std::vector<Rational> p(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) p[k] = Rational(a[k], denom);
  return RationalPmf(1, std::move(p));  // P(N_n = k) = a(n-1, k-1)/(n-1)^{n-2}
}

template <class T>
BasicPmf<T> degree_pmf(int n) {
  if (n < 2) throw DomainError("degree_pmf: n must be >= 2");
  const T q = frac<T>(1, n - 1);
  std::vector<T> bin{T(1)};  // Bin(L, q), grown incrementally in L
  std::vector<T> acc;
  const T inv_n = frac<T>(1, n);
  for (int L = 0; L <= n - 1; ++L) {
    std::vector<T> mix = bin;
    conv_bernoulli(mix, T(1) - frac<T>(L, n - 1));  // Ber(1 - L/(n-1))
    if (acc.size() < mix.size()) acc.resize(mix.size(), T(0));
    for (std::size_t i = 0; i < mix.size(); ++i) acc[i] += mix[i] * inv_n;
    if (L < n - 1) conv_bernoulli(bin, q);
  }
  return BasicPmf<T>(0, std::move(acc)).trimmed();
}

template BasicPmf<Rational> degree_pmf<Rational>(int);
template BasicPmf<double> degree_pmf<double>(int);

double degree_pgf_closed_form(int n, double z) {
  if (std::abs(z - 1.0) < 1e-12) return 1.0;
  const double base = 1.0 + (z - 1.0) / (n - 1);
  return 2.0 * (1.0 - 1.0 / n) * (std::pow(base, n) - 1.0) / (z - 1.0) - 1.0;
}

RealPmf degree_limit_pmf(int kmax) {
  if (kmax < 0) throw DomainError("degree_limit_pmf: kmax must be >= 0");
  const double two_over_e = 2.0 * std::exp(-1.0);
  std::vector<double> p(kmax + 1);
  p[0] = 1.0 - two_over_e;
  for (int k = 1; k <= kmax; ++k) {
    // r_k = sum_{j > k} 1/j!, summed smallest terms first
    double r = 0.0, term = 1.0;
    std::vector<double> terms;
    for (int j = 1; j <= k + 45; ++j) {
      term /= j;
      if (j > k) terms.push_back(term);
    }
    for (std::size_t i = terms.size(); i-- > 0;) r += terms[i];
    p[k] = two_over_e * r;
  }
  return RealPmf(0, std::move(p));
}

double degree_limit_tail(int k) {
  if (k <= 0) return 1.0;
  // P(D >= k) = (2/e) sum_{l > k} (l - k)/l!
  double s = 0.0, invfact = 1.0;
  for (int l = 1; l <= k + 50; ++l) {
    invfact /= l;
    if (l > k) s += (l - k) * invfact;
  }
  return 2.0 * std::exp(-1.0) * s;
}

std::pair<double, double> degree_tail_bounds(int k) {
  if (k < 1) throw DomainError("degree_tail_bounds: k must be >= 1");
  double fact = 1.0;
  for (int j = 2; j <= k + 1; ++j) fact *= j;
  const double lower = 2.0 * std::exp(-1.0) / fact;
  const double ratio = 1.0 + 1.0 / k;
  return {lower, ratio * ratio * lower};
}

template <class T>
YuleChainLaw<T> yule_law(int n, int lmax, YuleVariant variant) {
  if (n < 2) throw DomainError("yule_law: n must be >= 2");
  if (lmax < 0 || lmax > n - 1) throw DomainError("yule_law: steps limited to n-1");
  YuleChainLaw<T> law;
  law.n = n;
  law.variant = variant;
  std::vector<T> row{T(1)};  // state 1 with probability 1
  law.rows.emplace_back(1, row);
  for (int l = 1; l <= lmax; ++l) {
    std::vector<T> next(std::min<std::size_t>(row.size() + 1, n), T(0));
    for (std::size_t idx = 0; idx < row.size(); ++idx) {
      const int i = static_cast<int>(idx) + 1;
      T up = variant == YuleVariant::Plain ? frac<T>(i, n - 1) : frac<T>(i + 1, n);
      if (i >= n) up = T(0);  // stopped at n
      next[idx] += row[idx] * (T(1) - up);
      if (up != T(0)) next[idx + 1] += row[idx] * up;
    }
    row = std::move(next);
    law.rows.emplace_back(1, row);
  }
  return law;
}

template YuleChainLaw<Rational> yule_law<Rational>(int, int, YuleVariant);
template YuleChainLaw<double> yule_law<double>(int, int, YuleVariant);

double yule_tail_mixture(int n, int k) {
  if (n < 2 || k < 0) throw DomainError("yule_tail_mixture: bad arguments");
  if (k >= n) return 0.0;  // Upsilon_n is capped at n
  // States 1..k, plus absorbing "exceeded" state.
  std::vector<double> p(k + 2, 0.0);
  p[1] = 1.0;
  double exceeded = 0.0, total = 0.0;
  for (int l = 0; l <= n - 1; ++l) {
    total += exceeded;
    for (int i = k; i >= 1; --i) {
      const double move = p[i] * i / (n - 1);
      p[i] -= move;
      if (i == k)
        exceeded += move;
      else
        p[i + 1] += move;
    }
  }
  return total / n;
}

double yule_lambda(int n, int k) {
  if (k < 1 || k >= n - 1) throw DomainError("yule_lambda: need 1 <= k < n-1");
  return -static_cast<double>(n - 1) / k * std::log1p(-static_cast<double>(k) / (n - 1));
}

std::pair<double, double> yule_sandwich(int n, int l, int k) {
  if (n < 2 || k < 0 || l < k || l > n - 1)
    throw DomainError("yule_sandwich: need 0 <= k <= l <= n-1");
  if (k == 0) return {1.0, 1.0};  // Upsilon_n(l) >= 1 always
  if (k >= n - 1) throw DomainError("yule_sandwich: lambda undefined for k >= n-1");
  const auto yule_tail = [](double t, int kk) {
    return std::pow(-std::expm1(-t), kk);  // P(Y(t) > k), Y(t) ~ Geom(e^{-t})
  };
  const double lower = yule_tail(static_cast<double>(l - k + 1) / (n - 1), k);
  const double upper = yule_tail(yule_lambda(n, k) * l / (n - 1), k);
  return {lower, upper};
}

template <class T>
BasicPmf<T> h1_pmf(int n) {
  if (n < 2) throw DomainError("h1_pmf: n must be >= 2");
  std::vector<T> p(n - 1);
  T growth = frac<T>(n, n - 1);  // (1 + 1/(n-1))^h, h = 1
  for (int h = 1; h <= n - 1; ++h) {
    p[h - 1] = frac<T>(h, static_cast<long long>(n) * (n - 1)) * growth;
    growth *= frac<T>(n, n - 1);
  }
  return BasicPmf<T>(1, std::move(p));
}

template BasicPmf<Rational> h1_pmf<Rational>(int);
template BasicPmf<double> h1_pmf<double>(int);

namespace {

template <class T>
BasicPmf<T> size_biased(const BasicPmf<T>& pmf) {
  const T mean = pmf.mean();
  std::vector<T> p(pmf.size());
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    const long long k = pmf.min_support() + static_cast<long long>(i);
    p[i] = T(k) * pmf.probs()[i] / mean;
  }
  return BasicPmf<T>(pmf.min_support(), std::move(p));
}

}  // namespace

template <class T>
BasicPmf<T> t1_conditional(int n, int h) {
  if (h < 0 || h > n - 1) throw DomainError("t1_conditional: h out of range");
  return size_biased(yule_law<T>(n, h).pmf_at(h));
}

template BasicPmf<Rational> t1_conditional<Rational>(int, int);
template BasicPmf<double> t1_conditional<double>(int, int);

template <class T>
BasicPmf<T> t1_pmf(int n) {
  const auto h1 = h1_pmf<T>(n);
  const auto law = yule_law<T>(n, n - 1);
  std::vector<T> acc(n, T(0));  // sizes 1..n at index size-1
  for (int h = 1; h <= n - 1; ++h) {
    const auto cond = size_biased(law.pmf_at(h));
    for (std::size_t i = 0; i < cond.size(); ++i)
      acc[cond.min_support() + i - 1] += h1.at(h) * cond.probs()[i];
  }
  return BasicPmf<T>(1, std::move(acc)).trimmed();
}

template BasicPmf<Rational> t1_pmf<Rational>(int);
template BasicPmf<double> t1_pmf<double>(int);

namespace {

// int_0^1 x e^{-x} (1-e^{-x})^{k-1} dx
double tree_limit_integral(int k) {
  if (k <= 20) {
    // Binomial expansion; cancellation is mild in this range.
    double sum = 0.0, binom = 1.0;
    for (int j = 0; j < k; ++j) {
      const double a = j + 1;
      const double g = (1.0 - (1.0 + a) * std::exp(-a)) / (a * a);
      sum += (j % 2 == 0 ? 1.0 : -1.0) * binom * g;
      binom = binom * (k - 1 - j) / (j + 1);
    }
    return sum;
  }
  // Composite Simpson; the integrand is smooth on [0,1].
  const int intervals = 1 << 12;
  const auto f = [k](double x) {
    return x * std::exp(-x) * std::pow(-std::expm1(-x), k - 1);
  };
  const double h = 1.0 / intervals;
  double s = f(0.0) + f(1.0);
  for (int i = 1; i < intervals; ++i) s += f(i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace

double limit_treeU_pmf(int k) {
  if (k < 1) throw DomainError("limit_treeU_pmf: k must be >= 1");
  return 2.0 * tree_limit_integral(k);
}

double limit_tree1_pmf(int k) {
  if (k < 1) throw DomainError("limit_tree1_pmf: k must be >= 1");
  return k * tree_limit_integral(k);
}

double tree_tail_asymptotic(int k) {
  if (k < 1) throw DomainError("tree_tail_asymptotic: k must be >= 1");
  const double e = std::exp(1.0);
  return e / k * std::pow(1.0 - 1.0 / e, k + 1);
}

namespace {
const double kEE = std::exp(std::exp(1.0));
}

double maxdegree_prediction(double n) {
  if (!(n > kEE)) throw DomainError("maxdegree_prediction: need n > e^e");
  const double ln = std::log(n), ll = std::log(ln), lll = std::log(ll);
  return ln / ll + ln * lll / (ll * ll);
}

double maxtree_alpha() { return -1.0 / std::log1p(-std::exp(-1.0)); }

double maxtree_prediction(double n) {
  if (!(n > kEE)) throw DomainError("maxtree_prediction: need n > e^e");
  const double ln = std::log(n);
  return maxtree_alpha() * (ln - std::log(ln));
}

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double NormalizedPmf::mean() const {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * p[i];
  return s;
}

double NormalizedPmf::variance() const {
  const double m = mean();
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - m) * (x[i] - m) * p[i];
  return s;
}

double NormalizedPmf::kolmogorov_to_std_normal() const {
  double cdf = 0.0, d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double phi = std_normal_cdf(x[i]);
    d = std::max(d, std::abs(cdf - phi));  // just below the atom
    cdf += p[i];
    d = std::max(d, std::abs(cdf - phi));  // at the atom
  }
  return d;
}

NormalizedPmf clt_normalized_dist(int n) {
  const auto pmf = ntrees_pmf<double>(n);
  const double scale = std::sqrt(n / 6.0);
  NormalizedPmf out;
  out.x.resize(pmf.size());
  out.p = pmf.probs();
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    const double k = static_cast<double>(pmf.min_support() + static_cast<long long>(i));
    out.x[i] = (k - n / 2.0) / scale;
  }
  return out;
}

}  // namespace moran
