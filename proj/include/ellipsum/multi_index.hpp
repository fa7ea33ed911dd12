#ifndef ELLIPSUM_MULTI_INDEX_HPP
#define ELLIPSUM_MULTI_INDEX_HPP

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ellipsum/context.hpp"
#include "ellipsum/numeric.hpp"

namespace ellipsum {

// Vector of integers indexing rows/columns of the multidimensional matrices
// and terms of the multiple sums.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(int r) : e_(size_t(r), 0) {}
  MultiIndex(std::initializer_list<int> init) : e_(init) {}
  explicit MultiIndex(std::vector<int> v) : e_(std::move(v)) {}

  int r() const { return int(e_.size()); }
  int operator[](int i) const { return e_[size_t(i)]; }
  int& operator[](int i) { return e_[size_t(i)]; }

  long sum() const {  // |k|
    long s = 0;
    for (int v : e_) s += v;
    return s;
  }
  long e2() const {  // sum_{i<j} k_i k_j
    long s = 0;
    for (size_t i = 0; i < e_.size(); ++i)
      for (size_t j = i + 1; j < e_.size(); ++j) s += long(e_[i]) * e_[j];
    return s;
  }

  bool all_nonneg() const {
    for (int v : e_)
      if (v < 0) return false;
    return true;
  }

  // Componentwise partial order.
  bool leq(const MultiIndex& o) const {
    if (r() != o.r()) return false;
    for (int i = 0; i < r(); ++i)
      if (e_[size_t(i)] > o[i]) return false;
    return true;
  }

  MultiIndex minus(const MultiIndex& o) const {
    MultiIndex d(r());
    for (int i = 0; i < r(); ++i) d[i] = e_[size_t(i)] - o[i];
    return d;
  }
  MultiIndex plus(const MultiIndex& o) const {
    MultiIndex s(r());
    for (int i = 0; i < r(); ++i) s[i] = e_[size_t(i)] + o[i];
    return s;
  }

  bool operator==(const MultiIndex& o) const { return e_ == o.e_; }

  const std::vector<int>& entries() const { return e_; }
  std::string to_string() const;

 private:
  std::vector<int> e_;
};

struct Weights {
  long abs;  // |k|
  long e2;   // second elementary symmetric weight
};

inline Weights weights(const MultiIndex& k) { return {k.sum(), k.e2()}; }

// 0 <= k <= n componentwise, lexicographic (last coordinate fastest),
// exactly prod(n_i + 1) points.
class BoxDomain {
 public:
  explicit BoxDomain(MultiIndex upper);

  const MultiIndex& upper() const { return n_; }
  long size() const;
  void for_each(const std::function<void(const MultiIndex&)>& fn) const;
  std::vector<MultiIndex> points() const;

 private:
  MultiIndex n_;
};

// k >= 0 with |k| <= N (or 2|k| <= N when half_cap), lexicographic;
// C(N + r, r) points in the plain case.
class SimplexDomain {
 public:
  SimplexDomain(int r, int cap, bool half_cap = false);

  int r() const { return r_; }
  int cap() const { return cap_; }
  bool half_cap() const { return half_; }
  long size() const;
  void for_each(const std::function<void(const MultiIndex&)>& fn) const;
  std::vector<MultiIndex> points() const;

 private:
  int r_;
  int cap_;
  bool half_;
};

// Delta(x; p) = prod_{i<j} x_j theta(x_i / x_j; p); 1 for r = 1.
Complex weyl_delta(std::span<const Complex> x, const EllipticContext& ctx);

// Delta evaluated at (x_i q^{m k_i}; p).
Complex delta_shift(std::span<const Complex> x, Complex q, int m,
                    const MultiIndex& k, const EllipticContext& ctx);

}  // namespace ellipsum

#endif
