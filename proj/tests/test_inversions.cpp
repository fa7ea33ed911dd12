#include <cmath>
#include <vector>

#include "doctest.h"
#include "ellipsum/inversions.hpp"
#include "ellipsum/theta.hpp"

using namespace ellipsum;

namespace {

Complex rand_unit(SplitMix64& g, double lo = 0.5, double hi = 1.5) {
  return std::polar(lo + (hi - lo) * g.uniform01(), 6.283185307179586 * g.uniform01());
}

Complex rand_nome(SplitMix64& g, double pmax = 0.5) {
  return std::polar(pmax * (1.0 - g.uniform01()), 6.283185307179586 * g.uniform01());
}

TableOracle random_tables(SplitMix64& g, const MultiIndex& n) {
  TableOracle t;
  const long alen = n.sum() + 1;
  for (long i = 0; i < alen; ++i) t.a_values.push_back(rand_unit(g));
  for (int j = 0; j < n.r(); ++j) {
    std::vector<Complex> row;
    for (int k = 0; k <= n[j]; ++k) row.push_back(rand_unit(g));
    t.c_values.push_back(std::move(row));
  }
  return t;
}

std::vector<MultiIndex> multi_indices_upto(int r, int cap) {
  std::vector<MultiIndex> out;
  SimplexDomain(r, cap).for_each([&](const MultiIndex& k) { out.push_back(k); });
  return out;
}

}  // namespace

TEST_CASE("entries are zero outside the triangle and one on the diagonal") {
  SplitMix64 g(41);
  EllipticContext ctx(rand_nome(g), rand_unit(g));
  MultiIndex n{2, 1}, k{1, 2};
  TableOracle tab = random_tables(g, MultiIndex{2, 2});
  SequenceOracle with_a = tab.oracle(true);
  SequenceOracle no_a = tab.oracle(false);

  for (auto fam : {InversionFamily::GeneralAr, InversionFamily::GeneralBCr,
                   InversionFamily::GeneralCr}) {
    InversionKind kind;
    kind.family = fam;
    kind.b = rand_unit(g);
    const SequenceOracle* s = fam == InversionFamily::GeneralCr ? &no_a : &with_a;
    CHECK(entry({kind, n, k, EntrySide::f}, s, ctx) == Complex{0.0, 0.0});
    CHECK(entry({kind, n, n, EntrySide::f}, s, ctx) == Complex{1.0, 0.0});
    CHECK(entry({kind, n, n, EntrySide::g}, s, ctx) == Complex{1.0, 0.0});
  }
}

TEST_CASE("the C_r kind rejects an oracle with an a-sequence") {
  SplitMix64 g(43);
  EllipticContext ctx(rand_nome(g), rand_unit(g));
  TableOracle tab = random_tables(g, MultiIndex{1});
  SequenceOracle with_a = tab.oracle(true);
  InversionKind kind = InversionKind::general_cr(rand_unit(g));
  MultiIndex n{1}, l{0};
  CHECK_THROWS_AS(entry({kind, n, l, EntrySide::f}, &with_a, ctx), domain_error);
}

TEST_CASE("delta residual vanishes for the three general inversions") {
  SplitMix64 g(47);
  for (int r = 1; r <= 3; ++r) {
    for (const MultiIndex& n : multi_indices_upto(r, 3)) {
      for (int trial = 0; trial < 3; ++trial) {
        EllipticContext ctx(rand_nome(g), rand_unit(g));
        TableOracle tab = random_tables(g, n);
        SequenceOracle with_a = tab.oracle(true);
        SequenceOracle no_a = tab.oracle(false);
        BoxDomain(n).for_each([&](const MultiIndex& l) {
          {
            InversionKind kind = InversionKind::general_ar();
            auto res = delta_residual(kind, &with_a, n, l, ctx);
            CHECK(res.normalized < 1e-9);
          }
          {
            InversionKind kind = InversionKind::general_bcr();
            auto res = delta_residual(kind, &with_a, n, l, ctx);
            CHECK(res.normalized < 1e-9);
          }
          {
            InversionKind kind = InversionKind::general_cr(rand_unit(g));
            auto res = delta_residual(kind, &no_a, n, l, ctx);
            CHECK(res.normalized < 1e-9);
          }
        });
      }
    }
  }
}

TEST_CASE("mutual inversion holds in both orders") {
  SplitMix64 g(53);
  MultiIndex n{2, 1}, l{0, 0};
  for (int trial = 0; trial < 5; ++trial) {
    EllipticContext ctx(rand_nome(g), rand_unit(g));
    TableOracle tab = random_tables(g, n);
    SequenceOracle with_a = tab.oracle(true);
    SequenceOracle no_a = tab.oracle(false);
    InversionKind ar = InversionKind::general_ar();
    InversionKind bcr = InversionKind::general_bcr();
    InversionKind cr = InversionKind::general_cr(rand_unit(g));
    CHECK(delta_residual(ar, &with_a, n, l, ctx, true).normalized < 1e-9);
    CHECK(delta_residual(bcr, &with_a, n, l, ctx, true).normalized < 1e-9);
    CHECK(delta_residual(cr, &no_a, n, l, ctx, true).normalized < 1e-9);
  }
}

TEST_CASE("translation covariance reduces (n, l) to (n - l, 0)") {
  SplitMix64 g(59);
  MultiIndex n{3, 2}, l{1, 1};
  for (int trial = 0; trial < 5; ++trial) {
    EllipticContext ctx(rand_nome(g), rand_unit(g));
    TableOracle tab = random_tables(g, n);
    SequenceOracle base = tab.oracle(true);
    const long lsum = l.sum();
    SequenceOracle shifted;
    shifted.a = [&base, lsum](long t) { return base.a(t + lsum); };
    shifted.c = [&base, &l](int j, long k) { return base.c(j, k + l[j - 1]); };

    InversionKind kind = InversionKind::general_ar();
    auto full = delta_residual(kind, &base, n, l, ctx);
    auto reduced = delta_residual(kind, &shifted, n.minus(l), MultiIndex{0, 0}, ctx);
    CHECK(full.normalized < 1e-10);
    CHECK(reduced.normalized < 1e-10);
    CHECK(std::abs(full.normalized - reduced.normalized) < 1e-10);
  }
}

TEST_CASE("BC_r entries are invariant under inverting every c_j(k)") {
  SplitMix64 g(61);
  MultiIndex n{2, 1}, k{1, 1}, l{0, 1};
  for (int trial = 0; trial < 5; ++trial) {
    EllipticContext ctx(rand_nome(g), rand_unit(g));
    TableOracle tab = random_tables(g, n);
    SequenceOracle plain = tab.oracle(true);
    SequenceOracle inverted;
    inverted.a = plain.a;
    inverted.c = [&plain](int j, long kk) { return 1.0 / plain.c(j, kk); };

    InversionKind kind = InversionKind::general_bcr();
    Complex f0 = entry({kind, n, k, EntrySide::f}, &plain, ctx);
    Complex f1 = entry({kind, n, k, EntrySide::f}, &inverted, ctx);
    CHECK(rel_diff(f0, f1) < 1e-12);
    Complex g0 = entry({kind, k, l, EntrySide::g}, &plain, ctx);
    Complex g1 = entry({kind, k, l, EntrySide::g}, &inverted, ctx);
    CHECK(rel_diff(g0, g1) < 1e-12);
  }
}

TEST_CASE("geometric corollaries: normalized, triangular, self-inverse") {
  SplitMix64 g(67);
  for (auto fam : {InversionFamily::GeomArPos, InversionFamily::GeomArNeg,
                   InversionFamily::GeomBCr}) {
    for (int m = 1; m <= 3; ++m) {
      EllipticContext ctx(rand_nome(g), rand_unit(g));
      std::vector<Complex> x{rand_unit(g), rand_unit(g)};
      InversionKind kind = InversionKind::geom(fam, m, rand_unit(g), x);
      MultiIndex n{2, 1};
      // F_{n0} = G_{n0} = 1
      MultiIndex zero{0, 0};
      CHECK(rel_diff(entry({kind, n, zero, EntrySide::F}, nullptr, ctx),
                     Complex{1.0, 0.0}) < 1e-11);
      CHECK(rel_diff(entry({kind, n, zero, EntrySide::G}, nullptr, ctx),
                     Complex{1.0, 0.0}) < 1e-11);
      // triangularity
      CHECK(entry({kind, MultiIndex{1, 0}, MultiIndex{0, 1}, EntrySide::F},
                  nullptr, ctx) == Complex{0.0, 0.0});
      // delta residual over the full grid below n
      BoxDomain(n).for_each([&](const MultiIndex& l) {
        CHECK(delta_residual(kind, nullptr, n, l, ctx).normalized < 1e-9);
        CHECK(delta_residual(kind, nullptr, n, l, ctx, true).normalized < 1e-9);
      });
    }
  }
}

TEST_CASE("geometric corollaries match the normalized general entries") {
  SplitMix64 g(71);
  for (auto fam : {InversionFamily::GeomArPos, InversionFamily::GeomArNeg,
                   InversionFamily::GeomBCr}) {
    for (int m : {1, 2, 4}) {
      for (int trial = 0; trial < 3; ++trial) {
        EllipticContext ctx(rand_nome(g), rand_unit(g));
        std::vector<Complex> x{rand_unit(g), rand_unit(g)};
        InversionKind kind = InversionKind::geom(fam, m, rand_unit(g), x);
        MultiIndex n{2, 1};
        BoxDomain(n).for_each([&](const MultiIndex& k) {
          CHECK(normalization_link(kind, n, k, ctx) < 1e-10);
        });
      }
    }
  }
}

TEST_CASE("vanishing lemmas") {
  SplitMix64 g(73);
  for (int r = 1; r <= 3; ++r) {
    for (const MultiIndex& n : multi_indices_upto(r, 3)) {
      if (n.sum() < 1) continue;
      for (int trial = 0; trial < 3; ++trial) {
        EllipticContext ctx(rand_nome(g), rand_unit(g));
        TableOracle tab = random_tables(g, n);
        SequenceOracle with_a = tab.oracle(true);
        SequenceOracle no_a = tab.oracle(false);
        auto afg = vanishing_lemma_sum(VanishingVariant::afg, n, with_a, {}, ctx);
        CHECK(afg.normalized < 1e-10);
        auto cfg = vanishing_lemma_sum(VanishingVariant::cfg, n, no_a,
                                       rand_unit(g), ctx);
        CHECK(cfg.normalized < 1e-10);
      }
    }
  }
}

TEST_CASE("Krattenthaler reduction at p = 0, r = 1") {
  // At p = 0 with the oracle values scaled by a common epsilon, the general
  // A_r entries converge to the rational inverse pair
  //   f_nk = prod_{j=k}^{n-1}(a_j - c_k) / prod_{j=k+1}^{n}(c_j - c_k),
  //   g_kl = (a_l - c_l) prod_{j=l+1}^{k}(a_j - c_k)
  //        / ((a_k - c_k) prod_{j=l}^{k-1}(c_j - c_k)).
  SplitMix64 g(79);
  EllipticContext ctx({0.0, 0.0}, {0.7, 0.2});
  const int N = 4;
  std::vector<Complex> av, cv;
  for (int i = 0; i <= N; ++i) {
    av.push_back(rand_unit(g));
    cv.push_back(rand_unit(g));
  }
  auto kr_f = [&](int n, int k) {
    Complex num{1.0, 0.0}, den{1.0, 0.0};
    for (int j = k; j < n; ++j) num *= av[size_t(j)] - cv[size_t(k)];
    for (int j = k + 1; j <= n; ++j) den *= cv[size_t(j)] - cv[size_t(k)];
    return num / den;
  };
  auto kr_g = [&](int k, int l) {
    Complex num = av[size_t(l)] - cv[size_t(l)];
    for (int j = l + 1; j <= k; ++j) num *= av[size_t(j)] - cv[size_t(k)];
    Complex den = av[size_t(k)] - cv[size_t(k)];
    for (int j = l; j < k; ++j) den *= cv[size_t(j)] - cv[size_t(k)];
    return num / den;
  };

  const double eps = 1e-7;
  SequenceOracle scaled;
  scaled.a = [&](long t) { return eps * av[size_t(t)]; };
  scaled.c = [&](int, long k) { return eps * cv[size_t(k)]; };
  InversionKind kind = InversionKind::general_ar();

  for (int n = 0; n <= N; ++n)
    for (int k = 0; k <= n; ++k) {
      Complex fe = entry({kind, MultiIndex{n}, MultiIndex{k}, EntrySide::f},
                         &scaled, ctx);
      CHECK(rel_diff(fe, kr_f(n, k)) < 1e-8);
      Complex ge = entry({kind, MultiIndex{n}, MultiIndex{k}, EntrySide::g},
                         &scaled, ctx);
      CHECK(rel_diff(ge, kr_g(n, k)) < 1e-8);
    }

  // Mutual inversion of the rational pair itself.
  for (int n = 0; n <= N; ++n)
    for (int l = 0; l <= n; ++l) {
      Complex s{0.0, 0.0};
      double mag = 0.0;
      for (int k = l; k <= n; ++k) {
        Complex t = kr_f(n, k) * kr_g(k, l);
        s += t;
        mag += std::abs(t);
      }
      Complex want = n == l ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
      CHECK(std::abs(s - want) / (mag + (n == l ? 1.0 : 0.0)) < 1e-12);
    }
}
