#ifndef ELLIPSUM_NUMERIC_HPP
#define ELLIPSUM_NUMERIC_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>

#include "ellipsum/errors.hpp"

namespace ellipsum {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Integer power by repeated squaring; negative exponents divide.
inline Complex ipow(Complex base, long long e) {
  if (e < 0) return 1.0 / ipow(base, -e);
  Complex r{1.0, 0.0};
  Complex b = base;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

// Complex value carried as mantissa * 2^exp2 so that long products of theta
// factors never overflow or underflow while being accumulated.
class ScaledComplex {
 public:
  ScaledComplex() = default;
  explicit ScaledComplex(Complex v) : m_(v) { normalize(); }

  void mul(Complex z) {
    m_ *= z;
    normalize();
  }
  void div(Complex z) {
    m_ /= z;
    normalize();
  }
  void mul(const ScaledComplex& o) {
    m_ *= o.m_;
    e2_ += o.e2_;
    normalize();
  }
  void div(const ScaledComplex& o) {
    m_ /= o.m_;
    e2_ -= o.e2_;
    normalize();
  }

  bool is_zero() const { return m_ == Complex{0.0, 0.0}; }

  // Magnitude as log2, valid for nonzero values.
  double log2_abs() const { return std::log2(std::abs(m_)) + double(e2_); }

  // Recombine; throws overflow_error when the value leaves binary64 range.
  // Values that underflow binary64 are flushed to zero.
  Complex value() const {
    if (is_zero()) return {0.0, 0.0};
    if (log2_abs() > 1020.0)
      throw overflow_error("product exceeds representable range");
    Complex r{std::ldexp(m_.real(), int(e2_)), std::ldexp(m_.imag(), int(e2_))};
    return r;
  }

  double abs() const {
    if (is_zero()) return 0.0;
    double l = log2_abs();
    if (l > 1020.0) throw overflow_error("magnitude exceeds representable range");
    return std::exp2(l);
  }

 private:
  void normalize() {
    double a = std::abs(m_);
    if (a == 0.0) {
      e2_ = 0;
      return;
    }
    if (a > 1e150 || a < 1e-150) {
      int ex = 0;
      std::frexp(a, &ex);
      m_ = Complex(std::ldexp(m_.real(), -ex), std::ldexp(m_.imag(), -ex));
      e2_ += ex;
    }
  }

  Complex m_{1.0, 0.0};
  long e2_ = 0;
};

// Kahan-compensated accumulator; addition order is fixed by the caller so
// sums are bit-reproducible run to run.
class CompensatedSum {
 public:
  void add(Complex x) {
    Complex y = x - c_;
    Complex t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  Complex value() const { return s_; }

 private:
  Complex s_{0.0, 0.0};
  Complex c_{0.0, 0.0};
};

class CompensatedRealSum {
 public:
  void add(double x) {
    double y = x - c_;
    double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

// SplitMix64: tiny splittable generator; the stream for trial i of a run with
// seed s starts at scramble(s + i*GAMMA), so trials are order-independent.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static SplitMix64 for_stream(std::uint64_t seed, std::uint64_t stream) {
    return SplitMix64(seed + stream * kGamma);
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += kGamma);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform01() { return double(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Relative difference |a-b| / max(|a|, |b|); zero when both vanish.
inline double rel_diff(Complex a, Complex b) {
  double denom = std::max(std::abs(a), std::abs(b));
  if (denom == 0.0) return 0.0;
  return std::abs(a - b) / denom;
}

}  // namespace ellipsum

#endif
