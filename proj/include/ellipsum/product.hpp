#ifndef ELLIPSUM_PRODUCT_HPP
#define ELLIPSUM_PRODUCT_HPP

#include <span>

#include "ellipsum/context.hpp"
#include "ellipsum/numeric.hpp"

namespace ellipsum {

// Accumulates one summand or matrix entry as a ratio of theta products.
// Multiplication is overflow-safe (power-of-two scaled); every theta factor
// that lands in the denominator is screened against ctx.zero_guard and trips
// a degenerate_parameter_error instead of producing a huge quotient.
class Product {
 public:
  explicit Product(const EllipticContext& ctx) : ctx_(&ctx) {}

  Product& mul(Complex z) {
    acc_.mul(z);
    return *this;
  }
  Product& div(Complex z);

  Product& mul_theta(Complex arg);
  Product& div_theta(Complex arg);

  // theta(x y; p) theta(x / y; p)
  Product& mul_theta_pm(Complex x, Complex y) {
    return mul_theta(x * y).mul_theta(x / y);
  }
  Product& div_theta_pm(Complex x, Complex y) {
    return div_theta(x * y).div_theta(x / y);
  }

  // (a; base, p)_k with the negative-subscript convention.
  Product& mul_poch(Complex a, Complex base, long k);
  Product& div_poch(Complex a, Complex base, long k);

  // Integer power of the context base q.
  Product& mul_qpow(long long e);

  Complex value() const { return acc_.value(); }
  const ScaledComplex& scaled() const { return acc_; }

  const EllipticContext& ctx() const { return *ctx_; }

 private:
  const EllipticContext* ctx_;
  ScaledComplex acc_;
};

// Multiplies pr by Delta(x * base^{mult * k}; p) / Delta(x; p), the elliptic
// Weyl denominator ratio, with the denominator factors screened.
class MultiIndex;
void mul_delta_ratio(Product& pr, std::span<const Complex> x, Complex base,
                     int mult, const MultiIndex& k);

}  // namespace ellipsum

#endif
