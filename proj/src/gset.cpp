#include "gact/gset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace gact {

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_contains(const std::vector<int>& a, int x) {
  return std::binary_search(a.begin(), a.end(), x);
}

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> full_range(int n) {
  std::vector<int> out(n);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

// ---------------------------------------------------------------------------

GSetRef GSet::from_table(GroupRef g, std::vector<std::vector<int>> table, std::string label) {
  auto xs = std::shared_ptr<GSet>(new GSet());
  xs->group_ = std::move(g);
  xs->table_ = std::move(table);
  require(static_cast<int>(xs->table_.size()) == xs->group_->order(),
          ErrorCode::ActionAxiomViolation, "one row per group element required");
  require(!xs->table_.empty() && !xs->table_[0].empty(), ErrorCode::ActionAxiomViolation,
          "empty action");
  xs->size_ = static_cast<int>(xs->table_[0].size());
  xs->label_ = std::move(label);
  xs->validate();
  return xs;
}

void GSet::validate() {
  const int n = group_->order(), m = size_;
  for (int a = 0; a < n; ++a) {
    require(static_cast<int>(table_[a].size()) == m, ErrorCode::ActionAxiomViolation,
            "ragged action table");
    std::vector<bool> seen(m, false);
    for (int x = 0; x < m; ++x) {
      int y = table_[a][x];
      require(y >= 0 && y < m && !seen[y], ErrorCode::ActionAxiomViolation,
              "row " + std::to_string(a) + " is not a permutation of the points");
      seen[y] = true;
    }
  }
  for (int x = 0; x < m; ++x)
    require(table_[group_->identity()][x] == x, ErrorCode::ActionAxiomViolation,
            "identity must act trivially");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int x = 0; x < m; ++x)
        require(table_[group_->mul(a, b)][x] == table_[a][table_[b][x]],
                ErrorCode::ActionAxiomViolation, "action is not compatible with the product");

  // orbit of point 0
  std::vector<bool> reached(m, false);
  int count = 0;
  std::queue<int> todo;
  reached[0] = true;
  ++count;
  todo.push(0);
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop();
    for (int a = 0; a < n; ++a) {
      int y = table_[a][x];
      if (!reached[y]) {
        reached[y] = true;
        ++count;
        todo.push(y);
      }
    }
  }
  transitive_ = count == m;

  regular_ = m == n;
  if (regular_) {
    for (int a = 0; a < n && regular_; ++a)
      for (int x = 0; x < m; ++x)
        if (table_[a][x] != group_->mul(a, x)) {
          regular_ = false;
          break;
        }
  }
}

GSetRef GSet::regular(GroupRef g) {
  std::vector<std::vector<int>> table = g->cayley();
  return from_table(std::move(g), std::move(table), "regular");
}

GSetRef GSet::natural(GroupRef g) {
  require(g->has_permutation_form(), ErrorCode::InputError,
          "natural action needs a permutation-generator group");
  std::vector<std::vector<int>> table = g->permutation_images();
  return from_table(std::move(g), std::move(table), "natural");
}

GSetRef GSet::cosets(GroupRef g, const Subgroup& h) {
  auto cosets = left_cosets(g, h);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < cosets.size(); ++i) index[cosets[i]] = static_cast<int>(i);
  const int m = static_cast<int>(cosets.size());
  std::vector<std::vector<int>> table(g->order(), std::vector<int>(m));
  for (int a = 0; a < g->order(); ++a) {
    for (int x = 0; x < m; ++x) {
      std::vector<int> image;
      image.reserve(cosets[x].size());
      for (int y : cosets[x]) image.push_back(g->mul(a, y));
      std::sort(image.begin(), image.end());
      table[a][x] = index.at(image);
    }
  }
  // '.' separator keeps the label safe inside CSV rows
  std::string label = "cosets[";
  for (size_t i = 0; i < h.elements.size(); ++i)
    label += (i ? "." : "") + std::to_string(h.elements[i]);
  label += "]";
  return from_table(std::move(g), std::move(table), std::move(label));
}

// ---------------------------------------------------------------------------

PointSet translate_set(const GSet& xs, int elem, const PointSet& points) {
  PointSet out;
  out.reserve(points.size());
  for (int y : points) out.push_back(xs.apply(elem, y));
  std::sort(out.begin(), out.end());
  return out;
}

PointSet translate_set_by(const GSet& xs, const ElemSet& elems, const PointSet& points) {
  std::vector<bool> in(xs.size(), false);
  for (int a : elems)
    for (int y : points) in[xs.apply(a, y)] = true;
  PointSet out;
  for (int x = 0; x < xs.size(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

ElemSet elem_product_set(const GroupRef& g, const ElemSet& a, const ElemSet& b) {
  std::vector<bool> in(g->order(), false);
  for (int x : a)
    for (int y : b) in[g->mul(x, y)] = true;
  ElemSet out;
  for (int z = 0; z < g->order(); ++z)
    if (in[z]) out.push_back(z);
  return out;
}

ElemSet elem_inverse_set(const GroupRef& g, const ElemSet& a) {
  ElemSet out;
  out.reserve(a.size());
  for (int x : a) out.push_back(g->inv(x));
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup point_stabilizer(const GSet& xs, int x0) {
  require(xs.transitive(), ErrorCode::NotTransitive, "point stabilizer needs a transitive action");
  require(x0 >= 0 && x0 < xs.size(), ErrorCode::InputError, "base point out of range");
  ElemSet stab;
  for (int a = 0; a < xs.group()->order(); ++a)
    if (xs.apply(a, x0) == x0) stab.push_back(a);
  Subgroup result(xs.group(), std::move(stab));
  require(result.order() * xs.size() == xs.group()->order(), ErrorCode::NotTransitive,
          "orbit-stabilizer size check failed");
  return result;
}

ElemSet point_preimage(const GSet& xs, int x0, const PointSet& ys) {
  require(xs.transitive(), ErrorCode::NotTransitive, "lift needs a transitive action");
  require(x0 >= 0 && x0 < xs.size(), ErrorCode::InputError, "base point out of range");
  ElemSet out;
  for (int a = 0; a < xs.group()->order(); ++a)
    if (set_contains(ys, xs.apply(a, x0))) out.push_back(a);
  return out;
}

ClosureVerdict check_base_closed(const GSet& xs, int x0, const ElemSet& a) {
  Subgroup stab = point_stabilizer(xs, x0);
  ClosureVerdict v;

  PointSet image;
  for (int e : a) image.push_back(xs.apply(e, x0));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());

  v.preimage_criterion = point_preimage(xs, x0, image) == a;
  v.coset_criterion = elem_product_set(xs.group(), a, stab.elements) == a;
  v.size_criterion = a.size() == stab.elements.size() * image.size();
  if (a.empty()) v.coset_criterion = true;  // empty product set is empty

  if (v.preimage_criterion != v.coset_criterion || v.coset_criterion != v.size_criterion)
    throw std::logic_error("closure criteria disagree; they are provably equivalent");
  return v;
}

Subgroup right_stabilizer(const GroupRef& g, const ElemSet& s) {
  require(!s.empty(), ErrorCode::InputError, "right stabilizer of the empty set");
  ElemSet stab;
  for (int a = 0; a < g->order(); ++a) {
    ElemSet translated;
    translated.reserve(s.size());
    for (int x : s) translated.push_back(g->mul(x, a));
    std::sort(translated.begin(), translated.end());
    if (translated == s) stab.push_back(a);
  }
  return Subgroup(g, std::move(stab));
}

bool is_block(const GSet& xs, const PointSet& b) {
  require(xs.transitive(), ErrorCode::NotTransitive, "blocks live in transitive actions");
  require(!b.empty(), ErrorCode::InputError, "empty block candidate");
  bool verdict = true;
  for (int a = 0; a < xs.group()->order(); ++a) {
    PointSet moved = translate_set(xs, a, b);
    PointSet common = set_intersect(moved, b);
    if (!(common.empty() || common == b)) {
      verdict = false;
      break;
    }
  }
  // independent criterion: the lift through a point of b is a subgroup
  // exactly when b is a block
  int x0 = b[0];
  bool lift_is_subgroup = is_subgroup(xs.group(), point_preimage(xs, x0, b));
  if (verdict != lift_is_subgroup)
    throw std::logic_error("block criteria disagree; they are provably equivalent");
  return verdict;
}

PointSet associated_block(const GSet& xs, int x0, const PointSet& s) {
  require(!s.empty(), ErrorCode::InputError, "empty subset has no associated block");
  require(set_contains(s, x0), ErrorCode::InputError, "base point must lie in the subset");
  const GroupRef& g = xs.group();

  ElemSet lift = point_preimage(xs, x0, s);
  Subgroup stab_of_lift = right_stabilizer(g, lift);
  PointSet block;
  for (int a : stab_of_lift.elements) block.push_back(xs.apply(a, x0));
  std::sort(block.begin(), block.end());
  block.erase(std::unique(block.begin(), block.end()), block.end());

  // provable facts about the construction, kept as hard checks
  Subgroup stab = point_stabilizer(xs, x0);
  if (!set_contains(block, x0)) throw std::logic_error("associated block must contain x0");
  if (!is_block(xs, block)) throw std::logic_error("associated block is not a block");
  if (stab_of_lift.order() != stab.order() * static_cast<int>(block.size()))
    throw std::logic_error("lift-stabilizer size identity failed");
  PointSet meet = full_range(xs.size());
  for (int a : lift) meet = set_intersect(meet, translate_set(xs, g->inv(a), s));
  if (meet != block) throw std::logic_error("block does not match the intersection formula");
  return block;
}

std::vector<std::pair<int, PointSet>> block_decomposition(const GSet& xs, int x0,
                                                          const PointSet& s) {
  PointSet block = associated_block(xs, x0, s);
  ElemSet lift = point_preimage(xs, x0, s);

  std::vector<std::pair<int, PointSet>> parts;
  std::vector<bool> covered(xs.size(), false);
  size_t covered_count = 0;
  for (int gamma : lift) {
    PointSet translated = translate_set(xs, gamma, block);
    if (covered[translated[0]]) {
      if (!std::all_of(translated.begin(), translated.end(), [&](int y) { return covered[y]; }))
        throw std::logic_error("block translates must be disjoint or equal");
      continue;
    }
    for (int y : translated) {
      if (covered[y]) throw std::logic_error("block translates must be disjoint or equal");
      covered[y] = true;
    }
    covered_count += translated.size();
    if (!is_subset(translated, s)) throw std::logic_error("translate escapes the subset");
    parts.emplace_back(gamma, std::move(translated));
  }
  if (covered_count != s.size() || parts.size() * block.size() != s.size())
    throw std::logic_error("translates fail to partition the subset");
  return parts;
}

CoverReport complement_cover_check(const GSet& xs, int x0, const PointSet& s) {
  require(!s.empty() && static_cast<int>(s.size()) < xs.size(), ErrorCode::InputError,
          "need a proper nonempty subset");
  require(set_contains(s, x0), ErrorCode::InputError, "base point must lie in the subset");
  const GroupRef& g = xs.group();

  PointSet complement = set_difference(full_range(xs.size()), s);
  ElemSet lift_complement = point_preimage(xs, x0, complement);
  CoverReport report;
  report.translate_cover = translate_set_by(xs, elem_inverse_set(g, lift_complement), s);
  report.block = associated_block(xs, x0, s);

  if (!set_intersect(report.translate_cover, report.block).empty())
    throw std::logic_error("cover parts must be disjoint");
  if (set_union(report.translate_cover, report.block) != full_range(xs.size()))
    throw std::logic_error("cover parts must fill the whole point set");
  return report;
}

std::optional<std::vector<int>> equivariant_bijection(const GSet& from, const GSet& to) {
  if (from.group().get() != to.group().get()) return std::nullopt;
  if (from.size() != to.size()) return std::nullopt;
  const GroupRef& g = from.group();
  const int m = from.size();
  // a transitive equivariant map is pinned by the image of one point
  for (int y0 = 0; y0 < m; ++y0) {
    std::vector<int> phi(m, -1);
    bool ok = true;
    for (int a = 0; a < g->order() && ok; ++a) {
      int x = from.apply(a, 0), y = to.apply(a, y0);
      if (phi[x] < 0)
        phi[x] = y;
      else
        ok = phi[x] == y;
    }
    if (!ok) continue;
    std::vector<bool> hit(m, false);
    for (int x = 0; x < m && ok; ++x) {
      if (phi[x] < 0 || hit[phi[x]]) ok = false;
      else hit[phi[x]] = true;
    }
    if (!ok) continue;
    for (int a = 0; a < g->order() && ok; ++a)
      for (int x = 0; x < m && ok; ++x) ok = phi[from.apply(a, x)] == to.apply(a, phi[x]);
    if (ok) return phi;
  }
  return std::nullopt;
}

}  // namespace gact
