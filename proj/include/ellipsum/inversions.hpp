#ifndef ELLIPSUM_INVERSIONS_HPP
#define ELLIPSUM_INVERSIONS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ellipsum/multi_index.hpp"

namespace ellipsum {

// Arbitrary scalar sequences feeding the general inversions: t -> a(t) and
// (j, k) -> c_j(k) with j in 1..r. Values must be nonzero and deterministic.
struct SequenceOracle {
  std::function<Complex(long)> a;           // may be empty for the C_r kind
  std::function<Complex(int, long)> c;      // j is 1-based

  Complex a_at(long t) const;
  Complex c_at(int j, long k) const;
};

enum class InversionFamily {
  GeneralAr,    // arbitrary sequences, A_r type
  GeneralBCr,   // arbitrary sequences, BC_r type
  GeneralCr,    // arbitrary c-sequences plus the scalar b
  GeomArPos,    // geometric specialization a(t) = a q^t, c_j(k) = x_j q^{mk}
  GeomArNeg,    // same with m negated and x inverted, stated for positive m
  GeomBCr       // geometric specialization of the BC_r inversion
};

struct InversionKind {
  InversionFamily family = InversionFamily::GeneralAr;
  Complex b{0.0, 0.0};          // GeneralCr only
  int m = 1;                    // geometric kinds, m >= 1
  Complex a{0.0, 0.0};          // geometric kinds
  std::vector<Complex> x;       // geometric kinds, length r

  static InversionKind general_ar() { return {InversionFamily::GeneralAr, {}, 1, {}, {}}; }
  static InversionKind general_bcr() { return {InversionFamily::GeneralBCr, {}, 1, {}, {}}; }
  static InversionKind general_cr(Complex b) {
    return {InversionFamily::GeneralCr, b, 1, {}, {}};
  }
  static InversionKind geom(InversionFamily fam, int m, Complex a,
                            std::vector<Complex> x);

  bool is_geometric() const {
    return family == InversionFamily::GeomArPos ||
           family == InversionFamily::GeomArNeg ||
           family == InversionFamily::GeomBCr;
  }
};

enum class EntrySide { f, g, F, G };

struct MatrixEntryRequest {
  InversionKind kind;
  MultiIndex row;
  MultiIndex col;
  EntrySide which = EntrySide::f;
};

// One entry of the selected inversion pair: the exact displayed product, zero
// whenever col <= row fails. General families require an oracle (the C_r kind
// rejects one whose a-sequence is set); geometric families ignore it.
Complex entry(const MatrixEntryRequest& req, const SequenceOracle* seqs,
              const EllipticContext& ctx);

struct Residual {
  Complex raw{0.0, 0.0};
  double normalized = 0.0;
};

// sum_{l <= k <= n} f_{nk} g_{kl} - delta_{nl}, normalized by the term mass
// (plus the delta contribution when n = l). With swapped = true checks the
// equivalent g.f order instead.
Residual delta_residual(const InversionKind& kind, const SequenceOracle* seqs,
                        const MultiIndex& n, const MultiIndex& l,
                        const EllipticContext& ctx, bool swapped = false);

// Normalized difference between the geometric-corollary entries F, G at
// (n, k) and the same entries rebuilt from the general inversion through
// F = g_{k0} f_{nk} / f_{n0}, G = f_{k0}... (the normalized pair). Returns the
// worse of the F and G deviations.
double normalization_link(const InversionKind& geom_kind, const MultiIndex& n,
                          const MultiIndex& k, const EllipticContext& ctx);

enum class VanishingVariant { afg, cfg };

// The two vanishing-lemma sums behind the inversions; both are identically
// zero. afg consumes a(1..|n|-1) and c_j(0..n_j); cfg consumes b and
// c_j(0..n_j).
Residual vanishing_lemma_sum(VanishingVariant variant, const MultiIndex& n,
                             const SequenceOracle& seqs, Complex b,
                             const EllipticContext& ctx);

// Oracle backed by dense tables, the form used for random testing.
struct TableOracle {
  std::vector<Complex> a_values;               // a(t) for t in 0..len-1
  std::vector<std::vector<Complex>> c_values;  // c_values[j-1][k]

  SequenceOracle oracle(bool with_a = true) const;
};

}  // namespace ellipsum

#endif
