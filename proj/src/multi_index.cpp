#include "ellipsum/multi_index.hpp"

#include <sstream>

#include "ellipsum/errors.hpp"
#include "ellipsum/product.hpp"
#include "ellipsum/theta.hpp"

namespace ellipsum {

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < r(); ++i) {
    if (i) os << ',';
    os << e_[size_t(i)];
  }
  os << ')';
  return os.str();
}

BoxDomain::BoxDomain(MultiIndex upper) : n_(std::move(upper)) {
  if (n_.r() < 1 || !n_.all_nonneg())
    throw domain_error("box domain requires n >= 0 with r >= 1");
}

long BoxDomain::size() const {
  long s = 1;
  for (int i = 0; i < n_.r(); ++i) s *= n_[i] + 1;
  return s;
}

void BoxDomain::for_each(const std::function<void(const MultiIndex&)>& fn) const {
  MultiIndex k(n_.r());
  const int r = n_.r();
  while (true) {
    fn(k);
    int i = r - 1;
    while (i >= 0 && k[i] == n_[i]) {
      k[i] = 0;
      --i;
    }
    if (i < 0) return;
    ++k[i];
  }
}

std::vector<MultiIndex> BoxDomain::points() const {
  std::vector<MultiIndex> out;
  out.reserve(size_t(size()));
  for_each([&](const MultiIndex& k) { out.push_back(k); });
  return out;
}

SimplexDomain::SimplexDomain(int r, int cap, bool half_cap)
    : r_(r), cap_(cap), half_(half_cap) {
  if (r < 1 || cap < 0)
    throw domain_error("simplex domain requires r >= 1 and cap >= 0");
}

long SimplexDomain::size() const {
  long n = 0;
  for_each([&](const MultiIndex&) { ++n; });
  return n;
}

void SimplexDomain::for_each(
    const std::function<void(const MultiIndex&)>& fn) const {
  const long budget = half_ ? cap_ / 2 : cap_;
  MultiIndex k(r_);
  // Lexicographic walk of {k >= 0 : |k| <= budget}.
  std::function<void(int, long)> rec = [&](int i, long used) {
    if (i == r_) {
      fn(k);
      return;
    }
    for (int v = 0; v <= budget - used; ++v) {
      k[i] = v;
      rec(i + 1, used + v);
    }
    k[i] = 0;
  };
  rec(0, 0);
}

std::vector<MultiIndex> SimplexDomain::points() const {
  std::vector<MultiIndex> out;
  for_each([&](const MultiIndex& k) { out.push_back(k); });
  return out;
}

Complex weyl_delta(std::span<const Complex> x, const EllipticContext& ctx) {
  ScaledComplex acc;
  const int r = int(x.size());
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      acc.mul(x[size_t(j)]);
      acc.mul(theta_scaled(x[size_t(i)] / x[size_t(j)], ctx));
    }
  return acc.value();
}

Complex delta_shift(std::span<const Complex> x, Complex q, int m,
                    const MultiIndex& k, const EllipticContext& ctx) {
  if (int(x.size()) != k.r())
    throw domain_error("delta_shift: length mismatch between x and k");
  std::vector<Complex> shifted(x.begin(), x.end());
  for (int i = 0; i < k.r(); ++i) shifted[size_t(i)] *= ipow(q, long(m) * k[i]);
  return weyl_delta(shifted, ctx);
}

void mul_delta_ratio(Product& pr, std::span<const Complex> x, Complex base,
                     int mult, const MultiIndex& k) {
  const int r = int(x.size());
  if (r != k.r()) throw domain_error("delta ratio: length mismatch");
  for (int i = 0; i < r; ++i) {
    const Complex xi = x[size_t(i)] * ipow(base, long(mult) * k[i]);
    for (int j = i + 1; j < r; ++j) {
      const Complex xj = x[size_t(j)] * ipow(base, long(mult) * k[j]);
      pr.mul(xj).mul_theta(xi / xj);
      pr.div(x[size_t(j)]).div_theta(x[size_t(i)] / x[size_t(j)]);
    }
  }
}

}  // namespace ellipsum
