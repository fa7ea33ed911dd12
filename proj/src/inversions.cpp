#include "ellipsum/inversions.hpp"

#include <cmath>

#include "ellipsum/errors.hpp"
#include "ellipsum/product.hpp"
#include "ellipsum/theta.hpp"

namespace ellipsum {

Complex SequenceOracle::a_at(long t) const {
  if (!a) throw domain_error("oracle has no a-sequence");
  Complex v = a(t);
  if (v == Complex{0.0, 0.0}) throw domain_error("oracle returned a(t) = 0");
  return v;
}

Complex SequenceOracle::c_at(int j, long k) const {
  if (!c) throw domain_error("oracle has no c-sequences");
  Complex v = c(j, k);
  if (v == Complex{0.0, 0.0}) throw domain_error("oracle returned c_j(k) = 0");
  return v;
}

SequenceOracle TableOracle::oracle(bool with_a) const {
  SequenceOracle o;
  if (with_a)
    o.a = [this](long t) {
      if (t < 0 || size_t(t) >= a_values.size())
        throw domain_error("oracle a-table index out of range");
      return a_values[size_t(t)];
    };
  o.c = [this](int j, long k) {
    if (j < 1 || size_t(j) > c_values.size() || k < 0 ||
        size_t(k) >= c_values[size_t(j - 1)].size())
      throw domain_error("oracle c-table index out of range");
    return c_values[size_t(j - 1)][size_t(k)];
  };
  return o;
}

InversionKind InversionKind::geom(InversionFamily fam, int m, Complex a,
                                  std::vector<Complex> x) {
  if (fam != InversionFamily::GeomArPos && fam != InversionFamily::GeomArNeg &&
      fam != InversionFamily::GeomBCr)
    throw domain_error("geom() requires a geometric family");
  if (m < 1) throw domain_error("geometric kinds require m >= 1");
  InversionKind k;
  k.family = fam;
  k.m = m;
  k.a = a;
  k.x = std::move(x);
  return k;
}

namespace {

Complex prod_c(const SequenceOracle& s, const MultiIndex& k) {
  Complex out{1.0, 0.0};
  for (int j = 1; j <= k.r(); ++j) out *= s.c_at(j, k[j - 1]);
  return out;
}

// --- general A_r pair -----------------------------------------------------

ScaledComplex ar_f(const SequenceOracle& s, const MultiIndex& n,
                   const MultiIndex& k, const EllipticContext& ctx) {
  const int r = n.r();
  Product pr(ctx);
  const Complex Ck = prod_c(s, k);
  for (long t = k.sum(); t < n.sum(); ++t) {
    const Complex at = s.a_at(t);
    pr.mul_theta(at * Ck);
    for (int j = 1; j <= r; ++j) pr.mul_theta(at / s.c_at(j, k[j - 1]));
  }
  for (int i = 1; i <= r; ++i)
    for (long t = k[i - 1] + 1; t <= n[i - 1]; ++t) {
      const Complex ct = s.c_at(i, t);
      pr.div_theta(ct * Ck);
      for (int j = 1; j <= r; ++j) pr.div_theta(ct / s.c_at(j, k[j - 1]));
    }
  return pr.scaled();
}

ScaledComplex ar_g(const SequenceOracle& s, const MultiIndex& k,
                   const MultiIndex& l, const EllipticContext& ctx) {
  const int r = k.r();
  Product pr(ctx);
  const Complex Ck = prod_c(s, k);
  const Complex Cl = prod_c(s, l);
  const Complex a_l = s.a_at(l.sum());
  const Complex a_k = s.a_at(k.sum());

  pr.mul_theta(a_l * Cl).div_theta(a_k * Ck);
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) {
      pr.mul_theta(s.c_at(i, l[i - 1]) / s.c_at(j, l[j - 1]));
      pr.div_theta(s.c_at(i, k[i - 1]) / s.c_at(j, k[j - 1]));
    }
  for (int j = 1; j <= r; ++j) {
    const Complex cl = s.c_at(j, l[j - 1]);
    const Complex ck = s.c_at(j, k[j - 1]);
    pr.mul(ipow(cl, j)).div(ipow(ck, j));
    pr.mul_theta(a_l / cl).div_theta(a_k / ck);
  }
  for (long t = l.sum() + 1; t <= k.sum(); ++t) {
    const Complex at = s.a_at(t);
    pr.mul_theta(at * Ck);
    for (int j = 1; j <= r; ++j) pr.mul_theta(at / s.c_at(j, k[j - 1]));
  }
  for (int i = 1; i <= r; ++i)
    for (long t = l[i - 1]; t < k[i - 1]; ++t) {
      const Complex ct = s.c_at(i, t);
      pr.div_theta(ct * Ck);
      for (int j = 1; j <= r; ++j) pr.div_theta(ct / s.c_at(j, k[j - 1]));
    }
  return pr.scaled();
}

// --- general BC_r pair ----------------------------------------------------

ScaledComplex bcr_f(const SequenceOracle& s, const MultiIndex& n,
                    const MultiIndex& k, const EllipticContext& ctx) {
  const int r = n.r();
  Product pr(ctx);
  for (int j = 1; j <= r; ++j) {
    const Complex cj = s.c_at(j, k[j - 1]);
    for (long t = k.sum(); t < n.sum(); ++t) pr.mul_theta_pm(cj, s.a_at(t));
  }
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) {
      const Complex cj = s.c_at(j, k[j - 1]);
      for (long t = k[i - 1] + 1; t <= n[i - 1]; ++t)
        pr.div_theta_pm(cj, s.c_at(i, t));
    }
  return pr.scaled();
}

ScaledComplex bcr_g(const SequenceOracle& s, const MultiIndex& k,
                    const MultiIndex& l, const EllipticContext& ctx) {
  const int r = k.r();
  Product pr(ctx);
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) {
      pr.mul_theta_pm(s.c_at(j, l[j - 1]), s.c_at(i, l[i - 1]));
      pr.div_theta_pm(s.c_at(j, k[j - 1]), s.c_at(i, k[i - 1]));
    }
  for (int j = 1; j <= r; ++j) {
    const Complex cl = s.c_at(j, l[j - 1]);
    const Complex ck = s.c_at(j, k[j - 1]);
    pr.mul(ipow(ck, j)).div(ipow(cl, j));
    pr.mul_theta_pm(cl, s.a_at(l.sum()));
    pr.div_theta_pm(ck, s.a_at(k.sum()));
  }
  for (int j = 1; j <= r; ++j) {
    const Complex ck = s.c_at(j, k[j - 1]);
    for (long t = l.sum() + 1; t <= k.sum(); ++t)
      pr.mul_theta_pm(ck, s.a_at(t));
  }
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) {
      const Complex ck = s.c_at(j, k[j - 1]);
      for (long t = l[i - 1]; t < k[i - 1]; ++t)
        pr.div_theta_pm(ck, s.c_at(i, t));
    }
  return pr.scaled();
}

// --- general C_r pair -----------------------------------------------------

ScaledComplex cr_f(const SequenceOracle& s, Complex b, const MultiIndex& n,
                   const MultiIndex& k, const EllipticContext& ctx) {
  const int r = n.r();
  Product pr(ctx);
  const Complex Ck = prod_c(s, k);
  for (int i = 1; i <= r; ++i) {
    for (long t = k[i - 1]; t < n[i - 1]; ++t) {
      const Complex ct = s.c_at(i, t);
      pr.mul_theta(ct * b / Ck);
      for (int j = 1; j <= r; ++j) pr.mul_theta(ct * s.c_at(j, k[j - 1]));
    }
    for (long t = k[i - 1] + 1; t <= n[i - 1]; ++t) {
      const Complex ct = s.c_at(i, t);
      pr.div_theta(ct * Ck / b);
      for (int j = 1; j <= r; ++j) pr.div_theta(ct / s.c_at(j, k[j - 1]));
    }
  }
  return pr.scaled();
}

ScaledComplex cr_g(const SequenceOracle& s, Complex b, const MultiIndex& k,
                   const MultiIndex& l, const EllipticContext& ctx) {
  const int r = k.r();
  Product pr(ctx);
  const Complex Ck = prod_c(s, k);
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) {
      pr.mul_theta_pm(s.c_at(j, l[j - 1]), s.c_at(i, l[i - 1]));
      pr.div_theta_pm(s.c_at(j, k[j - 1]), s.c_at(i, k[i - 1]));
    }
  for (int j = 1; j <= r; ++j) {
    const Complex cl = s.c_at(j, l[j - 1]);
    const Complex ck = s.c_at(j, k[j - 1]);
    pr.mul(ipow(cl, r + 1 - j)).div(ipow(ck, r + 1 - j));
    pr.mul_theta(cl * cl).div_theta(ck * ck);
  }
  for (int i = 1; i <= r; ++i) {
    for (long t = l[i - 1] + 1; t <= k[i - 1]; ++t) {
      const Complex ct = s.c_at(i, t);
      pr.mul_theta(ct * b / Ck);
      for (int j = 1; j <= r; ++j) pr.mul_theta(ct * s.c_at(j, k[j - 1]));
    }
    for (long t = l[i - 1]; t < k[i - 1]; ++t) {
      const Complex ct = s.c_at(i, t);
      pr.div_theta(ct * Ck / b);
      for (int j = 1; j <= r; ++j) pr.div_theta(ct / s.c_at(j, k[j - 1]));
    }
  }
  return pr.scaled();
}

// --- geometric specializations ---------------------------------------------

Complex prod_x(const std::vector<Complex>& x) {
  Complex X{1.0, 0.0};
  for (Complex v : x) X *= v;
  return X;
}

// A_r with positive m.
ScaledComplex geom_ar_pos_F(const InversionKind& kd, const MultiIndex& n,
                            const MultiIndex& k, const EllipticContext& ctx) {
  const int r = n.r();
  const int m = kd.m;
  const Complex q = ctx.q;
  const Complex qm = ipow(q, m);
  const Complex X = prod_x(kd.x);
  const long K = k.sum(), Nn = n.sum();
  Product pr(ctx);

  mul_delta_ratio(pr, kd.x, q, m, k);
  pr.mul_poch(kd.a * X * ipow(q, Nn), q, m * K);
  pr.div_poch(kd.a * X * q, q, m * K);
  pr.mul_qpow(long(m) * K);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      pr.mul_poch(ipow(q, -long(m) * n[j]) * kd.x[size_t(i)] / kd.x[size_t(j)],
                  qm, k[i]);
      pr.div_poch(qm * kd.x[size_t(i)] / kd.x[size_t(j)], qm, k[i]);
    }
  for (int i = 0; i < r; ++i) {
    const Complex xi = kd.x[size_t(i)];
    pr.mul_theta(X * xi * ipow(q, long(m) * (K + k[i]))).div_theta(X * xi);
    pr.mul_poch(xi / kd.a, q, long(m) * k[i]);
    pr.mul_poch(X * xi, qm, K);
    pr.div_poch(xi * ipow(q, 1 - Nn) / kd.a, q, long(m) * k[i]);
    pr.div_poch(X * xi * ipow(q, long(m) * (n[i] + 1)), qm, K);
  }
  return pr.scaled();
}

ScaledComplex geom_ar_pos_G(const InversionKind& kd, const MultiIndex& k,
                            const MultiIndex& l, const EllipticContext& ctx) {
  const int r = k.r();
  const int m = kd.m;
  const Complex q = ctx.q;
  const Complex qm = ipow(q, m);
  const Complex X = prod_x(kd.x);
  const long K = k.sum(), L = l.sum();
  Product pr(ctx);

  mul_delta_ratio(pr, kd.x, q, m, l);
  pr.mul_theta(kd.a * X * ipow(q, long(m + 1) * L)).div_theta(kd.a * X);
  pr.mul_poch(kd.a * X, q, L);
  pr.div_poch(kd.a * X * ipow(q, long(m) * K + 1), q, L);
  pr.mul_qpow(long(m) * L);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      pr.mul_poch(ipow(q, -long(m) * k[j]) * kd.x[size_t(i)] / kd.x[size_t(j)],
                  qm, l[i]);
      pr.div_poch(qm * kd.x[size_t(i)] / kd.x[size_t(j)], qm, l[i]);
    }
  for (int i = 0; i < r; ++i) {
    const Complex xi = kd.x[size_t(i)];
    pr.mul_theta(kd.a * ipow(q, L - long(m) * l[i]) / xi).div_theta(kd.a / xi);
    pr.mul_poch(kd.a / xi, q, L);
    pr.mul_poch(X * xi * ipow(q, long(m) * K), qm, l[i]);
    pr.div_poch(kd.a * ipow(q, 1 - long(m) * k[i]) / xi, q, L);
    pr.div_poch(X * xi * qm, qm, l[i]);
  }
  return pr.scaled();
}

// A_r with negative m, stated for positive m after inverting x.
ScaledComplex geom_ar_neg_F(const InversionKind& kd, const MultiIndex& n,
                            const MultiIndex& k, const EllipticContext& ctx) {
  const int r = n.r();
  const int m = kd.m;
  const Complex q = ctx.q;
  const Complex qm = ipow(q, m);
  const Complex X = prod_x(kd.x);
  const long K = k.sum(), Nn = n.sum();
  Product pr(ctx);

  mul_delta_ratio(pr, kd.x, q, m, k);
  pr.mul_poch(X / kd.a, q, m * K);
  pr.div_poch(X * ipow(q, 1 - Nn) / kd.a, q, m * K);
  pr.mul_qpow(long(m) * K);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      pr.mul_poch(ipow(q, -long(m) * n[j]) * kd.x[size_t(i)] / kd.x[size_t(j)],
                  qm, k[i]);
      pr.div_poch(qm * kd.x[size_t(i)] / kd.x[size_t(j)], qm, k[i]);
    }
  for (int i = 0; i < r; ++i) {
    const Complex xi = kd.x[size_t(i)];
    pr.mul_theta(X * xi * ipow(q, long(m) * (K + k[i]))).div_theta(X * xi);
    pr.mul_poch(kd.a * xi * ipow(q, Nn), q, long(m) * k[i]);
    pr.mul_poch(X * xi, qm, K);
    pr.div_poch(kd.a * xi * q, q, long(m) * k[i]);
    pr.div_poch(X * xi * ipow(q, long(m) * (n[i] + 1)), qm, K);
  }
  return pr.scaled();
}

ScaledComplex geom_ar_neg_G(const InversionKind& kd, const MultiIndex& k,
                            const MultiIndex& l, const EllipticContext& ctx) {
  const int r = k.r();
  const int m = kd.m;
  const Complex q = ctx.q;
  const Complex qm = ipow(q, m);
  const Complex X = prod_x(kd.x);
  const long K = k.sum(), L = l.sum();
  Product pr(ctx);

  mul_delta_ratio(pr, kd.x, q, m, l);
  pr.mul_theta(X * ipow(q, long(m - 1) * L) / kd.a).div_theta(X / kd.a);
  pr.mul_poch(kd.a / X, q, L);
  pr.div_poch(kd.a * ipow(q, 1 - long(m) * K) / X, q, L);
  pr.mul_qpow(L);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      pr.mul_poch(ipow(q, -long(m) * k[j]) * kd.x[size_t(i)] / kd.x[size_t(j)],
                  qm, l[i]);
      pr.div_poch(qm * kd.x[size_t(i)] / kd.x[size_t(j)], qm, l[i]);
    }
  for (int i = 0; i < r; ++i) {
    const Complex xi = kd.x[size_t(i)];
    pr.mul_theta(kd.a * xi * ipow(q, L + long(m) * l[i])).div_theta(kd.a * xi);
    pr.mul_poch(kd.a * xi, q, L);
    pr.mul_poch(X * xi * ipow(q, long(m) * K), qm, l[i]);
    pr.div_poch(kd.a * xi * ipow(q, long(m) * k[i] + 1), q, L);
    pr.div_poch(X * xi * qm, qm, l[i]);
  }
  return pr.scaled();
}

// BC_r geometric specialization.
ScaledComplex geom_bcr_F(const InversionKind& kd, const MultiIndex& n,
                         const MultiIndex& k, const EllipticContext& ctx) {
  const int r = n.r();
  const int m = kd.m;
  const Complex q = ctx.q;
  const Complex qm = ipow(q, m);
  const long K = k.sum(), Nn = n.sum();
  Product pr(ctx);

  mul_delta_ratio(pr, kd.x, q, m, k);
  pr.mul_qpow(long(m) * K);
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      const Complex xx = kd.x[size_t(i)] * kd.x[size_t(j)];
      pr.mul_theta(xx * ipow(q, long(m) * (k[i] + k[j]))).div_theta(xx);
    }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const Complex xr = kd.x[size_t(i)] / kd.x[size_t(j)];
      const Complex xx = kd.x[size_t(i)] * kd.x[size_t(j)];
      pr.mul_poch(ipow(q, -long(m) * n[j]) * xr, qm, k[i]);
      pr.mul_poch(xx, qm, k[i]);
      pr.div_poch(qm * xr, qm, k[i]);
      pr.div_poch(ipow(q, long(m) * (n[j] + 1)) * xx, qm, k[i]);
    }
  for (int i = 0; i < r; ++i) {
    const Complex xi = kd.x[size_t(i)];
    pr.mul_poch(kd.a * xi * ipow(q, Nn), q, long(m) * k[i]);
    pr.mul_poch(xi / kd.a, q, long(m) * k[i]);
    pr.div_poch(kd.a * xi * q, q, long(m) * k[i]);
    pr.div_poch(xi * ipow(q, 1 - Nn) / kd.a, q, long(m) * k[i]);
  }
  return pr.scaled();
}

ScaledComplex geom_bcr_G(const InversionKind& kd, const MultiIndex& k,
                         const MultiIndex& l, const EllipticContext& ctx) {
  const int r = k.r();
  const int m = kd.m;
  const Complex q = ctx.q;
  const Complex qm = ipow(q, m);
  const long L = l.sum();
  Product pr(ctx);

  mul_delta_ratio(pr, kd.x, q, m, l);
  pr.mul_qpow(long(m) * L);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      const Complex xx = kd.x[size_t(i)] * kd.x[size_t(j)];
      pr.mul_theta(xx * ipow(q, long(m) * (l[i] + l[j]))).div_theta(xx);
    }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const Complex xr = kd.x[size_t(i)] / kd.x[size_t(j)];
      const Complex xx = kd.x[size_t(i)] * kd.x[size_t(j)];
      pr.mul_poch(ipow(q, -long(m) * k[j]) * xr, qm, l[i]);
      pr.mul_poch(xx * ipow(q, long(m) * k[j]), qm, l[i]);
      pr.div_poch(qm * xr, qm, l[i]);
      pr.div_poch(xx * qm, qm, l[i]);
    }
  for (int i = 0; i < r; ++i) {
    const Complex xi = kd.x[size_t(i)];
    pr.mul_theta(kd.a * xi * ipow(q, L + long(m) * l[i]));
    pr.mul_theta(kd.a * ipow(q, L - long(m) * l[i]) / xi);
    pr.div_theta(kd.a * xi).div_theta(kd.a / xi);
    pr.mul_poch(kd.a * xi, q, L).mul_poch(kd.a / xi, q, L);
    pr.div_poch(kd.a * ipow(q, 1 + long(m) * k[i]) * xi, q, L);
    pr.div_poch(kd.a * ipow(q, 1 - long(m) * k[i]) / xi, q, L);
  }
  return pr.scaled();
}

ScaledComplex entry_scaled(const InversionKind& kind, const MultiIndex& row,
                           const MultiIndex& col, bool f_side,
                           const SequenceOracle* seqs,
                           const EllipticContext& ctx) {
  if (!col.leq(row)) return ScaledComplex(Complex{0.0, 0.0});
  // Diagonal entries of the general pairs are exactly 1: the factor ranges
  // are empty and the prefactor ratios cancel identically.
  if (row == col && !kind.is_geometric())
    return ScaledComplex(Complex{1.0, 0.0});
  switch (kind.family) {
    case InversionFamily::GeneralAr:
      if (!seqs) throw domain_error("general inversion requires an oracle");
      return f_side ? ar_f(*seqs, row, col, ctx) : ar_g(*seqs, row, col, ctx);
    case InversionFamily::GeneralBCr:
      if (!seqs) throw domain_error("general inversion requires an oracle");
      return f_side ? bcr_f(*seqs, row, col, ctx) : bcr_g(*seqs, row, col, ctx);
    case InversionFamily::GeneralCr:
      if (!seqs) throw domain_error("general inversion requires an oracle");
      if (seqs->a) throw domain_error("the C_r inversion takes no a-sequence");
      return f_side ? cr_f(*seqs, kind.b, row, col, ctx)
                    : cr_g(*seqs, kind.b, row, col, ctx);
    case InversionFamily::GeomArPos:
      return f_side ? geom_ar_pos_F(kind, row, col, ctx)
                    : geom_ar_pos_G(kind, row, col, ctx);
    case InversionFamily::GeomArNeg:
      return f_side ? geom_ar_neg_F(kind, row, col, ctx)
                    : geom_ar_neg_G(kind, row, col, ctx);
    case InversionFamily::GeomBCr:
      return f_side ? geom_bcr_F(kind, row, col, ctx)
                    : geom_bcr_G(kind, row, col, ctx);
  }
  throw domain_error("unknown inversion family");
}

}  // namespace

Complex entry(const MatrixEntryRequest& req, const SequenceOracle* seqs,
              const EllipticContext& ctx) {
  const bool f_side = req.which == EntrySide::f || req.which == EntrySide::F;
  return entry_scaled(req.kind, req.row, req.col, f_side, seqs, ctx).value();
}

Residual delta_residual(const InversionKind& kind, const SequenceOracle* seqs,
                        const MultiIndex& n, const MultiIndex& l,
                        const EllipticContext& ctx, bool swapped) {
  if (!l.leq(n)) throw domain_error("delta_residual requires l <= n");
  CompensatedSum sum;
  CompensatedRealSum mass;
  BoxDomain box(n.minus(l));
  box.for_each([&](const MultiIndex& off) {
    const MultiIndex k = off.plus(l);
    ScaledComplex left = entry_scaled(kind, n, k, !swapped, seqs, ctx);
    ScaledComplex right = entry_scaled(kind, k, l, swapped, seqs, ctx);
    left.mul(right);
    const Complex term = left.value();
    sum.add(term);
    mass.add(std::abs(term));
  });
  const bool diag = n == l;
  Complex raw = sum.value() - (diag ? Complex{1.0, 0.0} : Complex{0.0, 0.0});
  double denom = mass.value() + (diag ? 1.0 : 0.0);
  return {raw, denom == 0.0 ? 0.0 : std::abs(raw) / denom};
}

double normalization_link(const InversionKind& geom_kind, const MultiIndex& n,
                          const MultiIndex& k, const EllipticContext& ctx) {
  if (!geom_kind.is_geometric())
    throw domain_error("normalization_link requires a geometric kind");
  if (!k.leq(n)) throw domain_error("normalization_link requires k <= n");
  const int r = n.r();
  if (int(geom_kind.x.size()) != r)
    throw domain_error("normalization_link: x length must match r");

  // General counterpart carrying the geometric sequences.
  const Complex q = ctx.q;
  const Complex a = geom_kind.a;
  const int m = geom_kind.m;
  const std::vector<Complex>& x = geom_kind.x;
  SequenceOracle s;
  s.a = [a, q](long t) { return a * ipow(q, t); };
  if (geom_kind.family == InversionFamily::GeomArNeg)
    s.c = [&x, q, m](int j, long kk) {
      return 1.0 / (x[size_t(j - 1)] * ipow(q, long(m) * kk));
    };
  else
    s.c = [&x, q, m](int j, long kk) {
      return x[size_t(j - 1)] * ipow(q, long(m) * kk);
    };

  InversionKind general = geom_kind.family == InversionFamily::GeomBCr
                              ? InversionKind::general_bcr()
                              : InversionKind::general_ar();

  const MultiIndex zero(r);
  ScaledComplex f_nk = entry_scaled(general, n, k, true, &s, ctx);
  ScaledComplex f_n0 = entry_scaled(general, n, zero, true, &s, ctx);
  ScaledComplex g_k0 = entry_scaled(general, k, zero, false, &s, ctx);
  ScaledComplex g_nk = entry_scaled(general, n, k, false, &s, ctx);
  ScaledComplex g_n0 = entry_scaled(general, n, zero, false, &s, ctx);
  ScaledComplex f_k0 = entry_scaled(general, k, zero, true, &s, ctx);
  if (f_n0.is_zero() || g_n0.is_zero())
    throw degenerate_parameter_error("normalization entries vanished");

  ScaledComplex F_general = g_k0;
  F_general.mul(f_nk);
  F_general.div(f_n0);
  ScaledComplex G_general = f_k0;
  G_general.mul(g_nk);
  G_general.div(g_n0);

  Complex F_geom = entry_scaled(geom_kind, n, k, true, nullptr, ctx).value();
  Complex G_geom = entry_scaled(geom_kind, n, k, false, nullptr, ctx).value();

  return std::max(rel_diff(F_geom, F_general.value()),
                  rel_diff(G_geom, G_general.value()));
}

Residual vanishing_lemma_sum(VanishingVariant variant, const MultiIndex& n,
                             const SequenceOracle& seqs, Complex b,
                             const EllipticContext& ctx) {
  if (!n.all_nonneg() || n.sum() < 1)
    throw domain_error("vanishing lemma requires n >= 0 with |n| >= 1");
  const int r = n.r();
  CompensatedSum sum;
  CompensatedRealSum mass;
  BoxDomain box(n);
  box.for_each([&](const MultiIndex& k) {
    Product pr(ctx);
    const Complex Ck = prod_c(seqs, k);
    if (variant == VanishingVariant::afg) {
      for (long t = 1; t < n.sum(); ++t) {
        const Complex at = seqs.a_at(t);
        pr.mul_theta(at * Ck);
        for (int j = 1; j <= r; ++j) pr.mul_theta(at / seqs.c_at(j, k[j - 1]));
      }
      for (int i = 1; i <= r; ++i)
        for (long t = 0; t <= n[i - 1]; ++t) {
          if (t == k[i - 1]) continue;
          const Complex ct = seqs.c_at(i, t);
          pr.div_theta(ct * Ck);
          for (int j = 1; j <= r; ++j)
            pr.div_theta(ct / seqs.c_at(j, k[j - 1]));
        }
      for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j)
          pr.div_theta(seqs.c_at(i, k[i - 1]) / seqs.c_at(j, k[j - 1]));
      for (int j = 1; j <= r; ++j) pr.div(ipow(seqs.c_at(j, k[j - 1]), j));
    } else {
      // Product form obtained from sum_k f_nk g_k0 of the C_r inversion.
      // For n_i >= 1 everywhere it coincides termwise with the usual display
      // carrying theta(c_j(k_j) b / C) factors; unlike that display it also
      // vanishes when some n_i = 0.
      for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) {
          pr.div_theta(seqs.c_at(j, k[j - 1]) * seqs.c_at(i, k[i - 1]));
          pr.div_theta(seqs.c_at(j, k[j - 1]) / seqs.c_at(i, k[i - 1]));
        }
      for (int j = 1; j <= r; ++j) {
        pr.div(ipow(seqs.c_at(j, k[j - 1]), r + 1 - j));
        pr.div_theta(seqs.c_at(j, k[j - 1]) * seqs.c_at(j, k[j - 1]));
      }
      for (int i = 1; i <= r; ++i) {
        auto num_factor = [&](long t) {
          const Complex ct = seqs.c_at(i, t);
          pr.mul_theta(ct * b / Ck);
          for (int j = 1; j <= r; ++j)
            pr.mul_theta(ct * seqs.c_at(j, k[j - 1]));
        };
        for (long t = k[i - 1]; t < n[i - 1]; ++t) num_factor(t);
        for (long t = 1; t <= k[i - 1]; ++t) num_factor(t);
        for (long t = 0; t <= n[i - 1]; ++t) {
          if (t == k[i - 1]) continue;
          const Complex ct = seqs.c_at(i, t);
          pr.div_theta(ct * Ck / b);
          for (int j = 1; j <= r; ++j)
            pr.div_theta(ct / seqs.c_at(j, k[j - 1]));
        }
      }
    }
    const Complex term = pr.value();
    sum.add(term);
    mass.add(std::abs(term));
  });
  Complex raw = sum.value();
  double denom = mass.value();
  return {raw, denom == 0.0 ? 0.0 : std::abs(raw) / denom};
}

}  // namespace ellipsum
