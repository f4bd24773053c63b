#ifndef GACT_FOURIER_HPP
#define GACT_FOURIER_HPP

#include <memory>
#include <vector>

#include "gact/function.hpp"

namespace gact {

/**
 * A full set of irreducible matrix representations of a group over a
 * splitting field. Bundles are always input data or built from characters;
 * validation enforces, for each irrep rho:
 *   rho(1) = I and rho(ab) = rho(a) rho(b) for all pairs,
 * the squared degrees summing to |G|, and the convolution orthogonality
 *   sum_b rho^psi_ij(b^-1) rho^phi_kl(b a) = (n / n_psi) [psi=phi][j=k] rho^psi_il(a)
 * (exhaustive for |G| <= 8, sampled above that).
 */
struct Irrep {
  int degree = 0;
  std::vector<Matrix> matrices;  // indexed by group element
};

class RepresentationBundle {
 public:
  static std::shared_ptr<const RepresentationBundle> validated(GroupRef g, FieldRef e,
                                                               std::vector<Irrep> irreps,
                                                               unsigned sample_seed = 2026);

  const GroupRef& group() const { return group_; }
  const FieldRef& field() const { return field_; }
  const std::vector<Irrep>& irreps() const { return irreps_; }

 private:
  RepresentationBundle() = default;
  GroupRef group_;
  FieldRef field_;
  std::vector<Irrep> irreps_;
};

using BundleRef = std::shared_ptr<const RepresentationBundle>;

/// degree-1 irreps of an abelian group: the full character group
BundleRef abelian_characters(const GroupRef& g, const FieldRef& e);

/**
 * Basis of the function space transforming blockwise by the bundle: for each
 * irrep an m_psi x n_psi array of functions lambda with
 * (alpha lambda)_ij = sum_k lambda_ik rho_kj(alpha). The m functions together
 * are a basis (the m x m evaluation matrix is invertible). Multiplicities
 * satisfy sum m_psi n_psi = m. Both facts are enforced at construction; any
 * construction satisfying them is equivalent for every result downstream.
 */
class DualSet {
 public:
  struct Block {
    int multiplicity = 0;                              // m_psi
    int degree = 0;                                    // n_psi
    std::vector<std::vector<std::vector<FieldValue>>> lambda;  // [i][j] -> length-m vector
  };

  static std::shared_ptr<const DualSet> build(GSetRef xs, BundleRef bundle);

  const GSetRef& gset() const { return gset_; }
  const BundleRef& bundle() const { return bundle_; }
  const FieldRef& field() const { return bundle_->field(); }
  const std::vector<Block>& blocks() const { return blocks_; }

  /// the m x m matrix of all lambda functions evaluated at all points
  Matrix evaluation_matrix() const;

 private:
  DualSet() = default;
  void validate() const;

  GSetRef gset_;
  BundleRef bundle_;
  std::vector<Block> blocks_;
};

using DualSetRef = std::shared_ptr<const DualSet>;

/// blockwise transform coefficients: one m_psi x n_psi matrix per irrep
struct FourierTransform {
  DualSetRef dual;
  std::vector<Matrix> blocks;
};

/// fhat(lambda_ij) = sum_x f(x) lambda_ij(x); f's field embeds canonically
FourierTransform fourier_transform(const PointFunction& f, const DualSetRef& ds);

/// (alpha f)^ = fhat . rho(alpha^-1) blockwise; exhaustive for |G| <= 12,
/// otherwise `trials` sampled group elements
bool equivariance_check(const PointFunction& f, const DualSetRef& ds, int trials, Rng& rng);

/// sum over irreps of degree * rank of the transform block
int rank_support(const FourierTransform& ft);

/**
 * Per-block invertible (Q, P) with Q fhat(lambda) P diagonal 0/1; the
 * weighted count of ones is exactly rank_support, which certifies the
 * minimum weighted support over all base changes. Random (Q, P) samples are
 * drawn as a lower-bound guard: no sample may produce fewer weighted
 * nonzeros.
 */
struct MinSuppWitness {
  struct BlockWitness {
    Matrix q;
    Matrix p;
    int ones = 0;
  };
  std::vector<BlockWitness> per_block;
  int weighted_count = 0;
};
MinSuppWitness min_supp_witness(const FourierTransform& ft, Rng& rng, int samples = 5);

/**
 * Checks that every square minor of the p x p matrix (omega^(ij)) over
 * Q(zeta_p) is nonzero (p prime). True for every prime; a false return
 * signals an arithmetic bug rather than mathematics.
 */
bool chebotarev_minor_check(long long p, long long cap = 7);

// --- abelian regular-set helpers --------------------------------------------

/// coefficients of f against the sorted character list of the group
std::vector<FieldValue> abelian_transform(const PointFunction& f,
                                          const std::vector<Character>& chars);

/// inverse of abelian_transform: f(b) = |G|^-1 sum_chi coeff(chi) chi(b^-1)
PointFunction abelian_inverse_transform(const std::vector<FieldValue>& coeffs,
                                        const std::vector<Character>& chars, const GSetRef& regular,
                                        const FieldRef& e);

}  // namespace gact

#endif
