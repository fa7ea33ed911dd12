#ifndef ELLIPSUM_SUMMATIONS_HPP
#define ELLIPSUM_SUMMATIONS_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ellipsum/inversions.hpp"
#include "ellipsum/multi_index.hpp"
#include "ellipsum/theta.hpp"

namespace ellipsum {

enum class IdentityId {
  ArJackson,
  CrJackson,
  NewArJackson,
  NewArJacksonSimplex,
  ArQuadraticI,
  ArQuadraticISimplex,
  ArQuadraticII,
  ArQuadraticIISimplex,
  DrQuadratic,
  DrQuadraticSimplex1,
  DrQuadraticSimplex2,
  DrCubic,
  DrCubicSimplexA,
  DrCubicSimplexB,
  DrQuartic,
  QuarticR1
};

enum class DomainKind { Box, Simplex, HalfSimplex };

struct IdentityMeta {
  IdentityId id;
  std::string name;         // CLI identifier
  std::string description;  // identity family, human readable
  DomainKind domain;
  std::vector<std::string> scalars;  // scalar parameter names, sampling order
  std::string vec;                   // name of the vector parameter, "" if none
  int vec_extra;                     // vector length = r + vec_extra
  bool has_x;                        // carries an x-vector of length r
  std::string constraint;            // balancing constraint, "" if none
  std::string free_param;            // parameter solved by complete_params
};

const std::vector<IdentityMeta>& identity_catalog();
const IdentityMeta& identity_meta(IdentityId id);
std::optional<IdentityId> identity_from_name(std::string_view name);

// A fully specified evaluation point of one identity: dimension, summation
// cap, parameter assignment and the elliptic context.
struct IdentityInstance {
  IdentityId id = IdentityId::ArJackson;
  int r = 1;
  MultiIndex n;  // box identities
  int N = 0;     // simplex identities
  std::map<std::string, Complex> scalars;
  std::vector<Complex> x;    // length r when the identity carries x
  std::vector<Complex> vec;  // the named vector parameter
  EllipticContext ctx;

  Complex scalar(const std::string& name) const;
  long cap_sum() const;  // |n| or N, whichever applies
};

// Solves the single multiplicative balancing constraint for the designated
// free parameter (left unset by the caller); identities without a constraint
// pass through. If every parameter is supplied, the constraint is checked to
// 1e-13 instead and a constraint_error is raised on violation.
IdentityInstance complete_params(IdentityInstance partial);

Complex summand(const IdentityInstance& inst, const MultiIndex& k);
SumResult lhs_sum(const IdentityInstance& inst);
Complex lhs(const IdentityInstance& inst);
Complex rhs(const IdentityInstance& inst);

enum class TrialStatus { pass, fail, degenerate };

struct VerifyOutcome {
  Complex lhs_value{0.0, 0.0};
  Complex rhs_value{0.0, 0.0};
  double rel_error = 0.0;
  double condition = 0.0;  // sum |summand| / |lhs|
  TrialStatus status = TrialStatus::pass;
  std::string note;
};

VerifyOutcome verify(const IdentityInstance& inst, double tol);

// --- inverse-pipeline (Bailey pair) checks --------------------------------

enum class BaileyDerivation {
  NewArJacksonPair,   // F from the positive A_r corollary, m = 1
  ArQuadraticIPair,   // F from the positive A_r corollary, m = 2
  ArQuadraticIIPair,  // F from the negative A_r corollary, m = 2
  DrQuadraticPair,    // F from the BC_r corollary, m = 2
  DrCubicPair,        // F from the BC_r corollary, m = 3
  DrQuarticPair       // F from the BC_r corollary, m = 4, a = i q^{-1/2}
};

struct BaileyPairSpec {
  BaileyDerivation derivation = BaileyDerivation::NewArJacksonPair;
  int r = 1;
  std::map<std::string, Complex> params;
  std::vector<Complex> x;
  // Selects the non-principal branch of q^{1/2} in the quartic derivation.
  bool other_sqrt_branch = false;
  EllipticContext ctx;
};

// |sum_{0<=k<=n} F_nk a_k - b_n| / sum |F_nk a_k|. For the quartic pair
// b_form selects between the two displayed forms of b_k (1 or 2; other
// derivations have a single form and ignore it).
double bailey_pair_residual(const BaileyPairSpec& spec, const MultiIndex& n,
                            int b_form = 1);

// --- simplex <-> box specializations --------------------------------------

enum class SpecializationPair {
  NewArJackson,  // simplex corollary at c_j = q^{-n_j}/x_j vs box at c = q^{-N}
  ArQuadraticI,
  ArQuadraticII,
  DrQuadratic,
  DrCubicA
};

struct SpecializationParams {
  std::map<std::string, Complex> scalars;  // parameters shared by both sides
  std::vector<Complex> x;
  EllipticContext ctx;
};

// Evaluates both members of the pair on matched parameters (N = |n|) and
// returns the worse of the normalized LHS and RHS differences.
double simplex_specialization_residual(SpecializationPair pair,
                                       const MultiIndex& n,
                                       const SpecializationParams& params);

}  // namespace ellipsum

#endif
