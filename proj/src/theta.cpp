#include "ellipsum/theta.hpp"

#include <algorithm>
#include <cmath>

#include "ellipsum/errors.hpp"
#include "ellipsum/product.hpp"

namespace ellipsum {

void EllipticContext::validate() const {
  double ap = std::abs(p);
  if (!(ap < 1.0) || !is_finite(p))
    throw domain_error("elliptic nome requires |p| < 1");
  if (q == Complex{0.0, 0.0} || !is_finite(q))
    throw domain_error("base q must be nonzero and finite");
  if (!(trunc_eps > 0.0)) throw domain_error("trunc_eps must be positive");
  if (!(zero_guard > 0.0)) throw domain_error("zero_guard must be positive");

  // Genericity screen: reject q^k within zero_guard of p^m over a small
  // window, so (q; q, p)_k style denominators cannot vanish.
  constexpr int kKMax = 12;
  constexpr int kMMax = 8;
  Complex qk{1.0, 0.0};
  for (int k = 1; k <= kKMax; ++k) {
    qk *= q;
    if (p_is_zero()) {
      if (std::abs(qk - Complex{1.0, 0.0}) < zero_guard || std::abs(qk) < zero_guard)
        throw domain_error("q fails the genericity screen (q^k near p^m)");
      continue;
    }
    Complex pm{1.0, 0.0};
    if (std::abs(qk - pm) < zero_guard)
      throw domain_error("q fails the genericity screen (q^k near 1)");
    Complex pneg{1.0, 0.0};
    for (int m = 1; m <= kMMax; ++m) {
      pm *= p;
      pneg /= p;
      if (std::abs(qk - pm) < zero_guard || std::abs(qk - pneg) < zero_guard)
        throw domain_error("q fails the genericity screen (q^k near p^m)");
    }
  }
}

ScaledComplex theta_scaled(Complex x, const EllipticContext& ctx) {
  if (x == Complex{0.0, 0.0})
    throw domain_error("theta argument must be nonzero");
  if (!is_finite(x)) throw domain_error("theta argument must be finite");
  if (ctx.p_is_zero()) return ScaledComplex(Complex{1.0, 0.0} - x);

  double ap = std::abs(ctx.p);
  double ax = std::abs(x);
  double big = std::max(ax, 1.0 / ax);
  // Smallest J with |p|^J * max(|x|, 1/|x|) < trunc_eps, plus 4 guard factors.
  long J = long(std::ceil((std::log(ctx.trunc_eps) - std::log(big)) / std::log(ap)));
  J = std::max(J, 1L) + 4;

  ScaledComplex acc;
  Complex pj{1.0, 0.0};
  const Complex inv_x = 1.0 / x;
  for (long j = 0; j < J; ++j) {
    acc.mul(Complex{1.0, 0.0} - pj * x);
    acc.mul(Complex{1.0, 0.0} - pj * ctx.p * inv_x);
    pj *= ctx.p;
  }
  return acc;
}

Complex theta_eval(Complex x, const EllipticContext& ctx) {
  return theta_scaled(x, ctx).value();
}

Complex theta_product(std::span<const Complex> xs, std::optional<Complex> y_pm,
                      const EllipticContext& ctx) {
  ScaledComplex acc;
  for (Complex x : xs) {
    if (y_pm) {
      acc.mul(theta_scaled(x * (*y_pm), ctx));
      acc.mul(theta_scaled(x / (*y_pm), ctx));
    } else {
      acc.mul(theta_scaled(x, ctx));
    }
  }
  return acc.value();
}

namespace {

ScaledComplex pochhammer_scaled(Complex a, long k, const EllipticContext& ctx) {
  ScaledComplex acc;
  if (k >= 0) {
    Complex arg = a;
    for (long j = 0; j < k; ++j) {
      acc.mul(theta_scaled(arg, ctx));
      arg *= ctx.q;
    }
    return acc;
  }
  // (a; q, p)_{-n} = 1 / (a q^{-n}; q, p)_n
  long n = -k;
  Complex arg = a * ipow(ctx.q, -n);
  for (long j = 0; j < n; ++j) {
    ScaledComplex t = theta_scaled(arg, ctx);
    if (t.is_zero() || t.abs() < ctx.zero_guard)
      throw degenerate_parameter_error(
          "vanishing theta factor in negative-subscript shifted factorial");
    acc.div(t);
    arg *= ctx.q;
  }
  return acc;
}

}  // namespace

Complex elliptic_pochhammer(Complex a, long k, const EllipticContext& ctx) {
  if (a == Complex{0.0, 0.0})
    throw domain_error("shifted factorial requires a nonzero argument");
  return pochhammer_scaled(a, k, ctx).value();
}

Complex pochhammer_multi(std::span<const Complex> as, long k,
                         const EllipticContext& ctx) {
  ScaledComplex acc;
  for (Complex a : as) {
    if (a == Complex{0.0, 0.0})
      throw domain_error("shifted factorial requires a nonzero argument");
    acc.mul(pochhammer_scaled(a, k, ctx));
  }
  return acc.value();
}

SumResult gustafson_sum(std::span<const Complex> as,
                        std::span<const Complex> bs, Complex lambda,
                        const EllipticContext& ctx) {
  const size_t k = as.size();
  if (k < 2) throw domain_error("gustafson_sum requires k >= 2");
  if (bs.size() + 2 != k)
    throw domain_error("gustafson_sum requires exactly k - 2 b-parameters");

  const bool plain = (lambda == Complex{1.0, 0.0});
  CompensatedSum sum;
  CompensatedRealSum mag;
  for (size_t l = 0; l < k; ++l) {
    Product term(ctx);
    if (plain) {
      // a_l prod_j theta(a_l b_j^±) / prod_{j != l} theta(a_l a_j^±)
      term.mul(as[l]);
      for (Complex b : bs) term.mul_theta_pm(as[l], b);
      for (size_t j = 0; j < k; ++j)
        if (j != l) term.div_theta_pm(as[l], as[j]);
    } else {
      // prod_j theta(b_j a_l, b_j lambda / a_l)
      //   / (a_l prod_{j != l} theta(a_j a_l / lambda, a_j / a_l))
      for (Complex b : bs) {
        term.mul_theta(b * as[l]);
        term.mul_theta(b * lambda / as[l]);
      }
      term.div(as[l]);
      for (size_t j = 0; j < k; ++j) {
        if (j == l) continue;
        term.div_theta(as[j] * as[l] / lambda);
        term.div_theta(as[j] / as[l]);
      }
    }
    Complex v = term.value();
    sum.add(v);
    mag.add(std::abs(v));
  }
  return {sum.value(), mag.value()};
}

double degree_norm_check(const std::function<Complex(Complex)>& f,
                         const ThetaProfile& profile, const EllipticContext& ctx,
                         int samples) {
  if (samples <= 0) throw domain_error("degree_norm_check requires samples > 0");
  if (profile.degree < 0) throw domain_error("profile degree must be >= 0");
  if (profile.norm == Complex{0.0, 0.0})
    throw domain_error("profile norm must be nonzero");

  SplitMix64 rng(0x5eedu);
  double worst = 0.0;
  int usable = 0;
  for (int s = 0; s < samples; ++s) {
    double rho = 0.75 + 0.5 * rng.uniform01();
    double phi = 6.283185307179586476925286766559 * rng.uniform01();
    Complex z = std::polar(rho, phi);
    Complex fz = f(z);
    Complex fpz = f(ctx.p * z);
    Complex expected = double(profile.degree % 2 == 0 ? 1 : -1) * profile.norm *
                       ipow(z, -long(profile.degree)) * fz;
    double denom = std::max(std::abs(fpz), std::abs(expected));
    if (denom < ctx.zero_guard) continue;  // sample landed near a zero of f
    ++usable;
    worst = std::max(worst, std::abs(fpz - expected) / denom);
  }
  if (usable == 0)
    throw domain_error("degree_norm_check: all samples hit zeros of f");
  return worst;
}

// --- Product -----------------------------------------------------------

Product& Product::div(Complex z) {
  if (z == Complex{0.0, 0.0}) throw domain_error("division by zero factor");
  acc_.div(z);
  return *this;
}

Product& Product::mul_theta(Complex arg) {
  acc_.mul(theta_scaled(arg, *ctx_));
  return *this;
}

Product& Product::div_theta(Complex arg) {
  ScaledComplex t = theta_scaled(arg, *ctx_);
  if (t.is_zero() || t.abs() < ctx_->zero_guard)
    throw degenerate_parameter_error("vanishing theta factor in a denominator");
  acc_.div(t);
  return *this;
}

Product& Product::mul_poch(Complex a, Complex base, long k) {
  if (k >= 0) {
    Complex arg = a;
    for (long j = 0; j < k; ++j) {
      mul_theta(arg);
      arg *= base;
    }
  } else {
    Complex arg = a * ipow(base, k);
    for (long j = 0; j < -k; ++j) {
      div_theta(arg);
      arg *= base;
    }
  }
  return *this;
}

Product& Product::div_poch(Complex a, Complex base, long k) {
  if (k >= 0) {
    Complex arg = a;
    for (long j = 0; j < k; ++j) {
      div_theta(arg);
      arg *= base;
    }
  } else {
    Complex arg = a * ipow(base, k);
    for (long j = 0; j < -k; ++j) {
      mul_theta(arg);
      arg *= base;
    }
  }
  return *this;
}

Product& Product::mul_qpow(long long e) {
  acc_.mul(ipow(ctx_->q, e));
  return *this;
}

}  // namespace ellipsum
