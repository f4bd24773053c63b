#ifndef GACT_GROUP_HPP
#define GACT_GROUP_HPP

#include <memory>
#include <string>
#include <vector>

#include "gact/field.hpp"

namespace gact {

class Group;
using GroupRef = std::shared_ptr<const Group>;

/**
 * Finite group on element indices 0..n-1 with a fully validated Cayley table.
 * Validation is exhaustive (identity, inverses, associativity over all
 * triples, row/column bijectivity), so orders are capped at a size where the
 * O(n^3) scan is cheap.
 *
 * Groups built from permutation generators keep the image lists; element
 * order is breadth-first discovery from the identity, generators applied on
 * the left in input order.
 */
class Group {
 public:
  static GroupRef from_cayley(std::string name, std::vector<std::vector<int>> cayley,
                              std::vector<std::vector<int>> permutation_images = {});
  static GroupRef from_permutations(std::string name, int degree,
                                    const std::vector<std::vector<int>>& generators,
                                    int closure_cap = 256);

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return cayley_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  const std::vector<std::vector<int>>& cayley() const { return cayley_; }
  const std::string& name() const { return name_; }

  bool has_permutation_form() const { return !perm_images_.empty(); }
  int permutation_degree() const;
  const std::vector<std::vector<int>>& permutation_images() const { return perm_images_; }

  int element_order(int a) const;
  long long exponent() const;
  bool is_abelian() const;

 private:
  Group() = default;
  void validate() const;

  std::string name_;
  int order_ = 0;
  int identity_ = 0;
  std::vector<std::vector<int>> cayley_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> perm_images_;
};

/// Validated subgroup: sorted element set containing the identity, closed
/// under product and inverse; the order divides the parent order.
struct Subgroup {
  Subgroup(GroupRef parent_group, std::vector<int> elems);

  GroupRef parent;
  std::vector<int> elements;

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int a) const;
  bool is_whole_group() const { return order() == parent->order(); }
};

/// Homomorphism from a subgroup into the unit group of a field.
struct Character {
  Character(Subgroup dom, std::vector<FieldValue> vals);

  Subgroup domain;
  std::vector<FieldValue> values;  // aligned with domain.elements

  const FieldValue& value_on(int element) const;
};

Character character_inverse(const Character& chi);
Character character_product(const Character& a, const Character& b);

bool is_subgroup(const GroupRef& g, const std::vector<int>& subset);

/// Closure of a generating set inside g (always a subgroup's element set).
std::vector<int> subgroup_closure(const GroupRef& g, std::vector<int> generators);

/**
 * Every subgroup, duplicate-free, sorted by (order, elements). Seeds with
 * the cyclic subgroups and closes under pairwise join; since every subgroup
 * is the join of the cyclic subgroups it contains, the fixed point is the
 * complete lattice.
 */
std::vector<Subgroup> all_subgroups(const GroupRef& g, int order_cap = 24);

/// Partition of g into left cosets of h, each sorted, listed by minimal
/// representative.
std::vector<std::vector<int>> left_cosets(const GroupRef& g, const Subgroup& h);

/**
 * The complete set Hom(h, F^x): assigns to each member of a greedy generating
 * sequence a root of unity whose order divides the element order, then keeps
 * the assignments that extend to fully multiplicative maps. Sorted by value
 * tuple. A field with few roots of unity just yields fewer characters.
 */
std::vector<Character> homs_to_units(const Subgroup& h, const FieldRef& fc);

Subgroup whole_group(const GroupRef& g);
Subgroup trivial_subgroup(const GroupRef& g);

/// same object or identical Cayley tables (e.g. two loads of one file)
bool same_group(const GroupRef& a, const GroupRef& b);

std::vector<int> conjugate_subgroup(const GroupRef& g, const std::vector<int>& elems, int by);

/// One representative per conjugacy class (the lexicographically smallest
/// element set), preserving the all_subgroups ordering.
std::vector<Subgroup> subgroup_conjugacy_representatives(const GroupRef& g, int order_cap = 24);

}  // namespace gact

#endif
