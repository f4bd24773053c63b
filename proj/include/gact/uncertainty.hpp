#ifndef GACT_UNCERTAINTY_HPP
#define GACT_UNCERTAINTY_HPP

#include <optional>
#include <string>

#include "gact/fourier.hpp"

namespace gact {

/**
 * Certificate for equality in the classical bound |supp(f)| * dim = |X|:
 * the support S is a block, its lift through x0 is a subgroup, and on the
 * lift f(beta x0) = scalar * eta(beta) for a character eta of the lift.
 */
struct EqualityCertificate {
  PointSet block_points;   // S itself, which must be a block
  ElemSet lifted_subgroup; // the lift of S through x0
  Character eta;
  FieldValue scalar;
};

/**
 * Both sides of the sharpened and classical support bounds for one function:
 *   lhs          = |supp(f)| * dim of the submodule generated by f
 *   rhs_sharp    = |X| + |supp(f)| - |X_supp(f)|
 *   rhs_classical= |X|
 * rhs_classical <= rhs_sharp <= lhs always holds; construction aborts with
 * BoundViolation otherwise.
 */
struct UncertaintyReport {
  std::string group_name;
  std::string action_label;
  std::string field_spec;
  int x0 = 0;
  int supp_size = 0;
  int dim = 0;
  int block_size = 0;
  long long lhs = 0;
  long long rhs_sharp = 0;
  long long rhs_classical = 0;
  bool sharp_equality = false;
  bool classical_equality = false;
  std::optional<int> rank_support_value;
  std::optional<EqualityCertificate> certificate;
};

/// full report for a nonzero function on a transitive set; x0 defaults to the
/// minimal support point
UncertaintyReport analyze(const PointFunction& f, std::optional<int> x0 = std::nullopt);

/// regular-set variant: the block size is the order of the right stabilizer
/// of the support
UncertaintyReport regular_analyze(const PointFunction& f);

/**
 * The iterative translate covering behind the sharpened bound: pick
 * translates of S by inverses of the complement lift, each adding new
 * support, until they cover what they can; one final translate from the lift
 * finishes the cover of X. Returns t = number of translates used, with
 * t <= dim and |X| <= t|S| - |S| + |X_S| (both asserted). Candidates are
 * scanned in element-index order.
 */
struct GreedyBound {
  int t = 0;
  ElemSet chosen;
};
GreedyBound greedy_translate_bound(const PointFunction& f, int x0);

/**
 * Decides classical equality by testing its structural characterization (lift
 * of the support is a subgroup carrying f as a scaled character) and returns
 * the validated certificate when it holds. The characterization is provably
 * equivalent to lhs = |X|; both sides are evaluated and any disagreement
 * aborts.
 */
std::optional<EqualityCertificate> classify_equality_classical(const PointFunction& f, int x0);

/// f on the regular set with support gamma H and f(gamma beta) = c eta(beta);
/// such functions meet the classical bound with equality
PointFunction coset_indicator(const GroupRef& g, const Subgroup& h, int gamma,
                              const Character& eta, const FieldValue& c, const FieldRef& fc);

/// analyze plus the transform-side count; rank support must equal dim
UncertaintyReport rank_support_analyze(const PointFunction& f, const DualSetRef& ds);

/**
 * Classical and sharpened product bounds for an abelian group in terms of the
 * transform support, with the coset-character decomposition recovered
 * whenever the classical bound is met with equality.
 */
struct CosetCharacterDecomposition {
  int gamma = 0;
  ElemSet subgroup;
  std::vector<FieldValue> chi_values;  // a full-group character, indexed by element
  FieldValue scalar;
};
struct BoundLedger {
  int supp_f = 0;
  int supp_fhat = 0;
  long long product = 0;
  long long classical_rhs = 0;
  long long sharpened_rhs = 0;
  bool classical_equality = false;
  bool sharpened_equality = false;
  std::optional<CosetCharacterDecomposition> decomposition;
};
BoundLedger donoho_stark_check(const PointFunction& f);

}  // namespace gact

#endif
