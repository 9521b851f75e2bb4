#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "moran/errors.hpp"
#include "moran/rational.hpp"

namespace moran {

// Finite probability table over a contiguous integer support. T is either
// Rational (exact backend) or double (float backend).
template <class T>
class BasicPmf {
 public:
  BasicPmf() : min_(0) {}
  BasicPmf(long long min_support, std::vector<T> prob)
      : min_(min_support), prob_(std::move(prob)) {}

  long long min_support() const { return min_; }
  long long max_support() const {
    return min_ + static_cast<long long>(prob_.size()) - 1;
  }
  std::size_t size() const { return prob_.size(); }

  T at(long long k) const {
    if (k < min_ || k > max_support()) return T(0);
    return prob_[static_cast<std::size_t>(k - min_)];
  }
  T& operator[](long long k) { return prob_[static_cast<std::size_t>(k - min_)]; }

  const std::vector<T>& probs() const { return prob_; }

  T total() const {
    T s(0);
    for (const T& p : prob_) s += p;
    return s;
  }

  T mean() const {
    T s(0);
    for (std::size_t i = 0; i < prob_.size(); ++i)
      s += T(min_ + static_cast<long long>(i)) * prob_[i];
    return s;
  }

  T variance() const {
    const T m = mean();
    T s(0);
    for (std::size_t i = 0; i < prob_.size(); ++i) {
      const T d = T(min_ + static_cast<long long>(i)) - m;
      s += d * d * prob_[i];
    }
    return s;
  }

  // E[z^X]
  T pgf(const T& z) const {
    // Horner from the top of the support, then shift by z^min.
    T acc(0);
    for (std::size_t i = prob_.size(); i-- > 0;) acc = acc * z + prob_[i];
    T zmin(1);
    for (long long k = 0; k < min_; ++k) zmin *= z;
    return acc * zmin;
  }

  // P(X > k)
  T tail_above(long long k) const {
    T s(0);
    for (std::size_t i = 0; i < prob_.size(); ++i)
      if (min_ + static_cast<long long>(i) > k) s += prob_[i];
    return s;
  }

  // Drop leading/trailing zero-probability points.
  BasicPmf trimmed() const {
    std::size_t lo = 0, hi = prob_.size();
    while (lo < hi && prob_[lo] == T(0)) ++lo;
    while (hi > lo && prob_[hi - 1] == T(0)) --hi;
    return BasicPmf(min_ + static_cast<long long>(lo),
                    std::vector<T>(prob_.begin() + lo, prob_.begin() + hi));
  }

 private:
  long long min_;
  std::vector<T> prob_;
};

using RationalPmf = BasicPmf<Rational>;
using RealPmf = BasicPmf<double>;

inline RealPmf to_real(const RationalPmf& p) {
  std::vector<double> q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    q[i] = to_double(p.probs()[i]);
  return RealPmf(p.min_support(), std::move(q));
}

template <class T>
T tv_distance(const BasicPmf<T>& a, const BasicPmf<T>& b) {
  const long long lo = std::min(a.min_support(), b.min_support());
  const long long hi = std::max(a.max_support(), b.max_support());
  T s(0);
  for (long long k = lo; k <= hi; ++k) {
    T d = a.at(k) - b.at(k);
    if (d < T(0)) d = -d;
    s += d;
  }
  return s / 2;
}

// Kolmogorov distance between two integer-supported distributions.
inline double ks_distance(const RealPmf& a, const RealPmf& b) {
  const long long lo = std::min(a.min_support(), b.min_support());
  const long long hi = std::max(a.max_support(), b.max_support());
  double fa = 0, fb = 0, d = 0;
  for (long long k = lo; k <= hi; ++k) {
    fa += a.at(k);
    fb += b.at(k);
    d = std::max(d, std::abs(fa - fb));
  }
  return d;
}

}  // namespace moran
