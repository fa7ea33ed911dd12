#ifndef ELLIPSUM_CONTEXT_HPP
#define ELLIPSUM_CONTEXT_HPP

#include "ellipsum/numeric.hpp"

namespace ellipsum {

// Evaluation context shared by every theta-based operation: the nome p, the
// base q, the product truncation threshold and the denominator zero guard.
//
// Construction screens the pair (p, q) for near-coincidences q^k ~ p^m over a
// small index window. Such coincidences make the factor (q;q,p)_k, which sits
// in virtually every denominator, vanish.
struct EllipticContext {
  Complex p{0.0, 0.0};
  Complex q{1.0, 0.0};
  double trunc_eps = 1e-17;
  double zero_guard = 1e-13;

  EllipticContext() = default;

  EllipticContext(Complex nome, Complex base, double trunc = 1e-17,
                  double guard = 1e-13)
      : p(nome), q(base), trunc_eps(trunc), zero_guard(guard) {
    validate();
  }

  void validate() const;

  bool p_is_zero() const { return p == Complex{0.0, 0.0}; }
};

}  // namespace ellipsum

#endif
