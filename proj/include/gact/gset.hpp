#ifndef GACT_GSET_HPP
#define GACT_GSET_HPP

#include <optional>
#include <string>
#include <vector>

#include "gact/group.hpp"

namespace gact {

// sorted duplicate-free index sets; dense vectors keep serialization canonical
using PointSet = std::vector<int>;
using ElemSet = std::vector<int>;

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> set_intersect(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b);
bool set_contains(const std::vector<int>& a, int x);
bool is_subset(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> full_range(int n);

class GSet;
using GSetRef = std::shared_ptr<const GSet>;

/**
 * Finite left action of a group on points 0..m-1, held as an n x m table and
 * validated exhaustively: identity row, compatibility with the group product,
 * bijectivity of every row. Transitivity is computed once at construction.
 */
class GSet {
 public:
  static GSetRef from_table(GroupRef g, std::vector<std::vector<int>> table, std::string label);
  /// X = G acting on itself by left multiplication
  static GSetRef regular(GroupRef g);
  /// the defining point action of a permutation-generator group
  static GSetRef natural(GroupRef g);
  /// left translation on the cosets of h, points in left_cosets order
  static GSetRef cosets(GroupRef g, const Subgroup& h);

  const GroupRef& group() const { return group_; }
  int size() const { return size_; }
  int apply(int elem, int point) const { return table_[elem][point]; }
  bool transitive() const { return transitive_; }
  bool is_regular() const { return regular_; }
  const std::string& label() const { return label_; }
  const std::vector<std::vector<int>>& table() const { return table_; }

 private:
  GSet() = default;
  void validate();

  GroupRef group_;
  int size_ = 0;
  std::vector<std::vector<int>> table_;
  bool transitive_ = false;
  bool regular_ = false;
  std::string label_;
};

/// {alpha y : y in points}
PointSet translate_set(const GSet& xs, int elem, const PointSet& points);
/// union of alpha Y over alpha in elems
PointSet translate_set_by(const GSet& xs, const ElemSet& elems, const PointSet& points);

ElemSet elem_product_set(const GroupRef& g, const ElemSet& a, const ElemSet& b);
ElemSet elem_inverse_set(const GroupRef& g, const ElemSet& a);

/// stabilizer {alpha : alpha x0 = x0}; |G| = |stab| * |X| on transitive sets
Subgroup point_stabilizer(const GSet& xs, int x0);

/// full preimage of ys under alpha -> alpha x0
ElemSet point_preimage(const GSet& xs, int x0, const PointSet& ys);

/**
 * The three equivalent descriptions of a base-point-closed subset, evaluated
 * independently: the set equals the full preimage of its image, it is a union
 * of left stabilizer cosets, and its size is |stabilizer| times its image
 * size. They are provably equivalent, so any disagreement aborts.
 */
struct ClosureVerdict {
  bool preimage_criterion = false;
  bool coset_criterion = false;
  bool size_criterion = false;
  bool closed() const { return preimage_criterion; }
};
ClosureVerdict check_base_closed(const GSet& xs, int x0, const ElemSet& a);

/// {alpha : S alpha = S}, always a subgroup
Subgroup right_stabilizer(const GroupRef& g, const ElemSet& s);

/// true iff every translate of b meets b in b or not at all; cross-checked
/// against the subgroup criterion on the lift of b
bool is_block(const GSet& xs, const PointSet& b);

/**
 * The block carried by a subset: lift S through x0, take the right stabilizer
 * of the lift, and push it back down. The result contains x0, is a block,
 * satisfies |lift stabilizer| = |point stabilizer| * |block|, and equals the
 * intersection of alpha^{-1} S over alpha in the lift (all checked).
 */
PointSet associated_block(const GSet& xs, int x0, const PointSet& s);

/// minimal-representative translates of the associated block partitioning s
std::vector<std::pair<int, PointSet>> block_decomposition(const GSet& xs, int x0,
                                                          const PointSet& s);

/// X as the disjoint union of (lift of complement)^{-1} S and the block
struct CoverReport {
  PointSet translate_cover;  // (S'-lift)^{-1} S
  PointSet block;            // the associated block
};
CoverReport complement_cover_check(const GSet& xs, int x0, const PointSet& s);

/// point bijection phi with phi(alpha x) = alpha phi(x), when one exists
std::optional<std::vector<int>> equivariant_bijection(const GSet& from, const GSet& to);

}  // namespace gact

#endif
