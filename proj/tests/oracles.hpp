// Test-only oracles, kept independent of the library's own algorithms:
// plain-integer arithmetic, exhaustive enumeration, brute-force search.
#ifndef GACT_TESTS_ORACLES_HPP
#define GACT_TESTS_ORACLES_HPP

#include <algorithm>
#include <set>
#include <vector>

namespace oracles {

// rank over GF(p) as "largest linearly independent subset of rows", deciding
// independence by enumerating every coefficient vector
inline bool rows_dependent(const std::vector<std::vector<int>>& rows, long long p) {
  const size_t k = rows.size();
  if (k == 0) return false;
  std::vector<int> coef(k, 0);
  for (;;) {
    size_t i = 0;
    while (i < k && ++coef[i] == p) coef[i++] = 0;
    if (i == k) return false;  // wrapped: all combos tried
    std::vector<long long> acc(rows[0].size(), 0);
    for (size_t r = 0; r < k; ++r)
      for (size_t c = 0; c < rows[r].size(); ++c) acc[c] += coef[r] * rows[r][c];
    bool zero = true;
    for (long long v : acc)
      if (v % p != 0) {
        zero = false;
        break;
      }
    if (zero) return true;
  }
}

inline int brute_rank_mod_p(const std::vector<std::vector<int>>& rows, long long p) {
  const size_t n = rows.size();
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::vector<int>> subset;
    for (size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) subset.push_back(rows[i]);
    if (static_cast<int>(subset.size()) <= best) continue;
    if (!rows_dependent(subset, p)) best = static_cast<int>(subset.size());
  }
  return best;
}

// every subgroup of a small group by scanning all subsets of its elements
inline std::vector<std::vector<int>> brute_subgroups(const std::vector<std::vector<int>>& cayley,
                                                     int identity) {
  const int n = static_cast<int>(cayley.size());
  std::vector<std::vector<int>> found;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & (1u << identity))) continue;
    std::vector<int> subset;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) subset.push_back(i);
    bool closed = true;
    for (int a : subset) {
      for (int b : subset)
        if (!(mask & (1u << cayley[a][b]))) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) found.push_back(subset);  // finite closure makes inverses automatic
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return found;
}

// closure of a generating set by repeated products, independent of the library
inline std::vector<int> brute_closure(const std::vector<std::vector<int>>& cayley, int identity,
                                      std::vector<int> gens) {
  std::set<int> members(gens.begin(), gens.end());
  members.insert(identity);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> snapshot(members.begin(), members.end());
    for (int a : snapshot)
      for (int b : snapshot)
        if (members.insert(cayley[a][b]).second) grew = true;
  }
  return {members.begin(), members.end()};
}

// integer polynomial division (exact), for cyclotomic-polynomial expectations
inline std::vector<long long> poly_divide_exact(std::vector<long long> a,
                                                const std::vector<long long>& b) {
  std::vector<long long> q(a.size() - b.size() + 1, 0);
  for (size_t k = q.size(); k > 0; --k) {
    size_t i = k - 1;
    long long coef = a[i + b.size() - 1] / b.back();
    q[i] = coef;
    for (size_t j = 0; j < b.size(); ++j) a[i + j] -= coef * b[j];
  }
  for (long long c : a)
    if (c != 0) throw std::logic_error("inexact division in oracle");
  return q;
}

inline long long order_mod_oracle(long long a, long long m) {
  long long acc = a % m, ord = 1;
  while (acc != 1) {
    acc = (acc * a) % m;
    ++ord;
  }
  return ord;
}

}  // namespace oracles

#endif
