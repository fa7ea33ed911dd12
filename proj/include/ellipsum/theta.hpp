#ifndef ELLIPSUM_THETA_HPP
#define ELLIPSUM_THETA_HPP

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ellipsum/context.hpp"
#include "ellipsum/numeric.hpp"

namespace ellipsum {

// theta(x; p) = prod_{j>=0} (1 - p^j x)(1 - p^{j+1}/x), truncated once the
// tail factors are within ctx.trunc_eps of 1 (plus four guard factors).
// p = 0 gives exactly 1 - x.
Complex theta_eval(Complex x, const EllipticContext& ctx);

// Same value carried as mantissa * 2^e so huge arguments do not overflow.
ScaledComplex theta_scaled(Complex x, const EllipticContext& ctx);

// theta(x_1, ..., x_n; p), or with y present
// prod_i theta(x_i y; p) theta(x_i / y; p).
Complex theta_product(std::span<const Complex> xs, std::optional<Complex> y_pm,
                      const EllipticContext& ctx);

// Elliptic shifted factorial (a; q, p)_k. Negative subscripts follow
// (a; q, p)_{-n} = 1 / (a q^{-n}; q, p)_n; the denominator factors are
// screened against ctx.zero_guard.
Complex elliptic_pochhammer(Complex a, long k, const EllipticContext& ctx);

// (a_1, ..., a_m; q, p)_k.
Complex pochhammer_multi(std::span<const Complex> as, long k,
                         const EllipticContext& ctx);

struct SumResult {
  Complex sum;             // compensated sum of the terms
  double term_magnitude;   // sum of |term| over the same terms
  double normalized() const {
    return term_magnitude == 0.0 ? 0.0 : std::abs(sum) / term_magnitude;
  }
};

// Gustafson's theta-function sum. With lambda = 1 this is
//   sum_{l=1}^k a_l prod_j theta(a_l b_j^±) / prod_{j != l} theta(a_l a_j^±),
// which vanishes identically for k >= 2; general lambda evaluates the
// rescaled variant
//   sum_{l=1}^k prod_j theta(b_j a_l, b_j lambda / a_l)
//             / (a_l prod_{j != l} theta(a_j a_l / lambda, a_j / a_l)).
// Requires as.size() >= 2 and bs.size() == as.size() - 2.
SumResult gustafson_sum(std::span<const Complex> as,
                        std::span<const Complex> bs, Complex lambda,
                        const EllipticContext& ctx);

// Degree/norm profile of a theta function: f(pz) = (-1)^k t z^{-k} f(z).
struct ThetaProfile {
  int degree = 0;
  Complex norm{1.0, 0.0};
};

// Max over sampled z of the normalized deviation from the quasi-periodicity
// law for the given profile. Sample points are deterministic.
double degree_norm_check(const std::function<Complex(Complex)>& f,
                         const ThetaProfile& profile, const EllipticContext& ctx,
                         int samples);

}  // namespace ellipsum

#endif
