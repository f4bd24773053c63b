#include "gact/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace gact {

namespace {

std::vector<int> compose_perm(const std::vector<int>& outer, const std::vector<int>& inner) {
  std::vector<int> out(inner.size());
  for (size_t x = 0; x < inner.size(); ++x) out[x] = outer[inner[x]];
  return out;
}

bool is_permutation_vec(const std::vector<int>& v, int n) {
  if (static_cast<int>(v.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int x : v) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

}  // namespace

GroupRef Group::from_cayley(std::string name, std::vector<std::vector<int>> cayley,
                            std::vector<std::vector<int>> permutation_images) {
  auto g = std::shared_ptr<Group>(new Group());
  g->name_ = std::move(name);
  g->order_ = static_cast<int>(cayley.size());
  require(g->order_ > 0, ErrorCode::AxiomViolation, "empty Cayley table");
  g->cayley_ = std::move(cayley);

  // locate the identity
  int identity = -1;
  for (int e = 0; e < g->order_; ++e) {
    bool ok = true;
    for (int a = 0; a < g->order_ && ok; ++a) {
      if (a >= static_cast<int>(g->cayley_[e].size())) fail(ErrorCode::AxiomViolation, "ragged table");
      ok = g->cayley_[e][a] == a && g->cayley_[a][e] == a;
    }
    if (ok) {
      identity = e;
      break;
    }
  }
  require(identity >= 0, ErrorCode::AxiomViolation, "no identity element");
  g->identity_ = identity;

  g->inverse_.assign(g->order_, -1);
  for (int a = 0; a < g->order_; ++a) {
    for (int b = 0; b < g->order_; ++b) {
      if (g->cayley_[a][b] == identity && g->cayley_[b][a] == identity) {
        g->inverse_[a] = b;
        break;
      }
    }
    require(g->inverse_[a] >= 0, ErrorCode::AxiomViolation,
            "element " + std::to_string(a) + " has no inverse");
  }

  if (!permutation_images.empty()) {
    require(static_cast<int>(permutation_images.size()) == g->order_, ErrorCode::AxiomViolation,
            "permutation image list size mismatch");
    g->perm_images_ = std::move(permutation_images);
  }

  g->validate();
  return g;
}

void Group::validate() const {
  const int n = order_;
  for (int a = 0; a < n; ++a) {
    require(static_cast<int>(cayley_[a].size()) == n, ErrorCode::AxiomViolation, "ragged table");
    std::vector<bool> row(n, false), col(n, false);
    for (int b = 0; b < n; ++b) {
      int ab = cayley_[a][b], ba = cayley_[b][a];
      require(ab >= 0 && ab < n && ba >= 0 && ba < n, ErrorCode::AxiomViolation,
              "entry out of range");
      require(!row[ab], ErrorCode::AxiomViolation,
              "row " + std::to_string(a) + " repeats an entry");
      require(!col[ba], ErrorCode::AxiomViolation,
              "column " + std::to_string(a) + " repeats an entry");
      row[ab] = col[ba] = true;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        require(cayley_[cayley_[a][b]][c] == cayley_[a][cayley_[b][c]], ErrorCode::AxiomViolation,
                "associativity fails");
  if (!perm_images_.empty()) {
    const int degree = static_cast<int>(perm_images_[0].size());
    for (const auto& img : perm_images_)
      require(is_permutation_vec(img, degree), ErrorCode::AxiomViolation,
              "permutation image is not a bijection");
    for (int x = 0; x < degree; ++x)
      require(perm_images_[identity_][x] == x, ErrorCode::AxiomViolation,
              "identity permutation image is not trivial");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        require(perm_images_[cayley_[a][b]] == compose_perm(perm_images_[a], perm_images_[b]),
                ErrorCode::AxiomViolation, "permutation images are not a homomorphism");
  }
}

GroupRef Group::from_permutations(std::string name, int degree,
                                  const std::vector<std::vector<int>>& generators,
                                  int closure_cap) {
  require(degree > 0, ErrorCode::InputError, "degree must be positive");
  require(!generators.empty(), ErrorCode::InputError, "no generators given");
  for (const auto& gen : generators)
    require(is_permutation_vec(gen, degree), ErrorCode::InputError,
            "generator is not a permutation of 0..degree-1");

  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);

  // breadth-first closure; left-multiplying by generators in input order
  // fixes the element numbering
  std::vector<std::vector<int>> elems = {id};
  std::map<std::vector<int>, int> index = {{id, 0}};
  std::queue<int> todo;
  todo.push(0);
  while (!todo.empty()) {
    int cur = todo.front();
    todo.pop();
    for (const auto& gen : generators) {
      std::vector<int> prod = compose_perm(gen, elems[cur]);
      if (index.emplace(prod, static_cast<int>(elems.size())).second) {
        require(static_cast<int>(elems.size()) < closure_cap, ErrorCode::NotClosed,
                "generator closure exceeds cap " + std::to_string(closure_cap));
        elems.push_back(prod);
        todo.push(static_cast<int>(elems.size()) - 1);
      }
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> cayley(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      cayley[a][b] = index.at(compose_perm(elems[a], elems[b]));
  return from_cayley(std::move(name), std::move(cayley), std::move(elems));
}

int Group::permutation_degree() const {
  require(has_permutation_form(), ErrorCode::InputError, "group has no permutation form");
  return static_cast<int>(perm_images_[0].size());
}

int Group::element_order(int a) const {
  int ord = 1, x = a;
  while (x != identity_) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

long long Group::exponent() const {
  long long e = 1;
  for (int a = 0; a < order_; ++a) e = lcm_ll(e, element_order(a));
  return e;
}

bool Group::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(GroupRef parent_group, std::vector<int> elems)
    : parent(std::move(parent_group)), elements(std::move(elems)) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  require(!elements.empty(), ErrorCode::InputError, "empty subgroup");
  for (int a : elements)
    require(a >= 0 && a < parent->order(), ErrorCode::InputError, "element index out of range");
  require(is_subgroup(parent, elements), ErrorCode::InputError,
          "set is not closed under product and inverse");
  require(parent->order() % order() == 0, ErrorCode::InputError,
          "subgroup order does not divide the group order");
}

bool Subgroup::contains(int a) const {
  return std::binary_search(elements.begin(), elements.end(), a);
}

Character::Character(Subgroup dom, std::vector<FieldValue> vals)
    : domain(std::move(dom)), values(std::move(vals)) {
  require(values.size() == domain.elements.size(), ErrorCode::InputError,
          "one value per domain element required");
  for (const auto& v : values)
    require(!v.is_zero(), ErrorCode::InputError, "character values must be units");
  require(value_on(domain.parent->identity()).is_one(), ErrorCode::InputError,
          "character must map the identity to 1");
  for (int a : domain.elements)
    for (int b : domain.elements)
      require(value_on(domain.parent->mul(a, b)) == value_on(a) * value_on(b),
              ErrorCode::InputError, "character is not multiplicative");
}

const FieldValue& Character::value_on(int element) const {
  auto it = std::lower_bound(domain.elements.begin(), domain.elements.end(), element);
  require(it != domain.elements.end() && *it == element, ErrorCode::InputError,
          "element outside the character domain");
  return values[static_cast<size_t>(it - domain.elements.begin())];
}

Character character_inverse(const Character& chi) {
  std::vector<FieldValue> vals;
  vals.reserve(chi.values.size());
  for (const auto& v : chi.values) vals.push_back(v.inverse());
  return Character(chi.domain, std::move(vals));
}

Character character_product(const Character& a, const Character& b) {
  require(a.domain.elements == b.domain.elements, ErrorCode::InputError,
          "characters on different domains");
  std::vector<FieldValue> vals;
  vals.reserve(a.values.size());
  for (size_t i = 0; i < a.values.size(); ++i) vals.push_back(a.values[i] * b.values[i]);
  return Character(a.domain, std::move(vals));
}

// ---------------------------------------------------------------------------

bool is_subgroup(const GroupRef& g, const std::vector<int>& subset) {
  require(!subset.empty(), ErrorCode::InputError, "empty subset");
  std::vector<bool> in(g->order(), false);
  for (int a : subset) {
    require(a >= 0 && a < g->order(), ErrorCode::InputError, "element index out of range");
    in[a] = true;
  }
  if (!in[g->identity()]) return false;
  for (int a : subset) {
    if (!in[g->inv(a)]) return false;
    for (int b : subset)
      if (!in[g->mul(a, b)]) return false;
  }
  return true;
}

std::vector<int> subgroup_closure(const GroupRef& g, std::vector<int> generators) {
  std::vector<bool> in(g->order(), false);
  std::vector<int> members = {g->identity()};
  in[g->identity()] = true;
  std::queue<int> todo;
  todo.push(g->identity());
  for (int a : generators) {
    if (!in[a]) {
      in[a] = true;
      members.push_back(a);
      todo.push(a);
    }
  }
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop();
    for (size_t i = 0; i < members.size(); ++i) {
      for (int y : {g->mul(x, members[i]), g->mul(members[i], x)}) {
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
          todo.push(y);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<Subgroup> all_subgroups(const GroupRef& g, int order_cap) {
  require(g->order() <= order_cap, ErrorCode::CapExceeded,
          "group order " + std::to_string(g->order()) + " above subgroup-enumeration cap");
  std::set<std::vector<int>> found;
  found.insert({g->identity()});
  for (int a = 0; a < g->order(); ++a) found.insert(subgroup_closure(g, {a}));

  // close under pairwise join until stable
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> snapshot(found.begin(), found.end());
    for (size_t i = 0; i < snapshot.size(); ++i) {
      for (size_t j = i + 1; j < snapshot.size(); ++j) {
        std::vector<int> gens = snapshot[i];
        gens.insert(gens.end(), snapshot[j].begin(), snapshot[j].end());
        if (found.insert(subgroup_closure(g, std::move(gens))).second) grew = true;
      }
    }
  }

  std::vector<std::vector<int>> ordered(found.begin(), found.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return a < b;
                   });
  std::vector<Subgroup> out;
  out.reserve(ordered.size());
  for (auto& elems : ordered) out.emplace_back(g, std::move(elems));
  return out;
}

std::vector<std::vector<int>> left_cosets(const GroupRef& g, const Subgroup& h) {
  std::vector<bool> seen(g->order(), false);
  std::vector<std::vector<int>> cosets;
  for (int a = 0; a < g->order(); ++a) {
    if (seen[a]) continue;
    std::vector<int> coset;
    coset.reserve(h.order());
    for (int x : h.elements) {
      int ax = g->mul(a, x);
      seen[ax] = true;
      coset.push_back(ax);
    }
    std::sort(coset.begin(), coset.end());
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

std::vector<Character> homs_to_units(const Subgroup& h, const FieldRef& fc) {
  const GroupRef& g = h.parent;

  // greedy generating sequence
  std::vector<int> gens;
  std::vector<int> current = {g->identity()};
  for (int a : h.elements) {
    if (!std::binary_search(current.begin(), current.end(), a)) {
      gens.push_back(a);
      std::vector<int> seed = current;
      seed.push_back(a);
      current = subgroup_closure(g, std::move(seed));
    }
  }

  std::vector<std::vector<FieldValue>> candidates;
  for (int a : gens) candidates.push_back(roots_of_unity_dividing(fc, g->element_order(a)));

  std::vector<Character> result;
  std::vector<size_t> pick(gens.size(), 0);
  for (;;) {
    // extend the generator assignment over the whole subgroup by breadth-first
    // products, then keep it only if it is multiplicative everywhere
    std::map<int, FieldValue> value;
    value.emplace(g->identity(), FieldValue::one(fc));
    std::queue<int> todo;
    todo.push(g->identity());
    while (!todo.empty()) {
      int x = todo.front();
      todo.pop();
      for (size_t i = 0; i < gens.size(); ++i) {
        int y = g->mul(x, gens[i]);
        if (!value.count(y)) {
          value.emplace(y, value.at(x) * candidates[i][pick[i]]);
          todo.push(y);
        }
      }
    }
    bool multiplicative = value.size() == h.elements.size();
    for (int a : h.elements) {
      if (!multiplicative) break;
      for (int b : h.elements)
        if (!(value.at(g->mul(a, b)) == value.at(a) * value.at(b))) {
          multiplicative = false;
          break;
        }
    }
    if (multiplicative) {
      std::vector<FieldValue> vals;
      vals.reserve(h.elements.size());
      for (int a : h.elements) vals.push_back(value.at(a));
      result.emplace_back(h, std::move(vals));
    }
    // advance the assignment counter
    size_t i = 0;
    while (i < pick.size() && ++pick[i] == candidates[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
    if (pick.empty()) break;
  }

  std::sort(result.begin(), result.end(), [](const Character& a, const Character& b) {
    for (size_t i = 0; i < a.values.size(); ++i) {
      int c = FieldValue::cmp(a.values[i], b.values[i]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  return result;
}

bool same_group(const GroupRef& a, const GroupRef& b) {
  if (a.get() == b.get()) return true;
  return a && b && a->order() == b->order() && a->cayley() == b->cayley();
}

Subgroup whole_group(const GroupRef& g) {
  std::vector<int> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(g, std::move(all));
}

Subgroup trivial_subgroup(const GroupRef& g) { return Subgroup(g, {g->identity()}); }

std::vector<int> conjugate_subgroup(const GroupRef& g, const std::vector<int>& elems, int by) {
  std::vector<int> out;
  out.reserve(elems.size());
  for (int a : elems) out.push_back(g->mul(g->mul(by, a), g->inv(by)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> subgroup_conjugacy_representatives(const GroupRef& g, int order_cap) {
  std::vector<Subgroup> subs = all_subgroups(g, order_cap);
  std::set<std::vector<int>> claimed;
  std::vector<Subgroup> reps;
  for (const Subgroup& h : subs) {
    if (claimed.count(h.elements)) continue;
    std::vector<int> smallest = h.elements;
    for (int by = 0; by < g->order(); ++by) {
      std::vector<int> conj = conjugate_subgroup(g, h.elements, by);
      smallest = std::min(smallest, conj);
      claimed.insert(std::move(conj));
    }
    reps.emplace_back(g, std::move(smallest));
  }
  return reps;
}

}  // namespace gact
