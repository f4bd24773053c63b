#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gact/linalg.hpp"
#include "oracles.hpp"

using namespace gact;

namespace {

Matrix from_ints(const FieldRef& ctx, const std::vector<std::vector<int>>& rows) {
  Matrix m;
  for (const auto& row : rows) {
    std::vector<FieldValue> r;
    for (int v : row) r.push_back(FieldValue::from_integer(ctx, v));
    m.push_back(std::move(r));
  }
  return m;
}

}  // namespace

TEST_CASE("rank basics") {
  auto gf7 = field_from_spec("GF(7)");
  CHECK(exact_rank(identity_matrix(gf7, 3)) == 3);
  CHECK(exact_rank(zero_matrix(gf7, 3, 4)) == 0);
  auto q = field_from_spec("Q");
  CHECK(exact_rank(from_ints(q, {{1, 2}, {2, 4}})) == 1);
  CHECK(exact_rank(from_ints(q, {{1, 2}, {2, 5}})) == 2);
}

TEST_CASE("rank agrees with the independent-subset oracle") {
  // exhaustive on small shapes, seeded random up to 5x5
  for (long long p : {2LL, 3LL}) {
    FieldRef ctx = FieldContext::prime(p);
    for (int rows = 1; rows <= 3; ++rows) {
      for (int cols = 1; cols <= 3; ++cols) {
        long long cells = 1;
        for (int i = 0; i < rows * cols; ++i) cells *= p;
        if (cells > 20000) continue;
        for (long long code = 0; code < cells; ++code) {
          std::vector<std::vector<int>> ints(rows, std::vector<int>(cols));
          long long t = code;
          for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
              ints[i][j] = static_cast<int>(t % p);
              t /= p;
            }
          CHECK(exact_rank(from_ints(ctx, ints)) == oracles::brute_rank_mod_p(ints, p));
        }
      }
    }
    Rng rng(99);
    for (int trial = 0; trial < 400; ++trial) {
      int rows = 4 + rng.below(2), cols = 4 + rng.below(2);
      std::vector<std::vector<int>> ints(rows, std::vector<int>(cols));
      for (auto& row : ints)
        for (auto& v : row) v = rng.below(static_cast<int>(p));
      CHECK(exact_rank(from_ints(ctx, ints)) == oracles::brute_rank_mod_p(ints, p));
    }
  }
}

TEST_CASE("fraction-free and finite-field paths agree mod p") {
  // the same integer matrix, reduced over Q and over GF(p), has rank over Q
  // at least the rank mod p; embed -1..1 entries and compare det mod p
  auto q = field_from_spec("Q");
  auto gf5 = field_from_spec("GF(5)");
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + rng.below(3);
    std::vector<std::vector<int>> ints(n, std::vector<int>(n));
    for (auto& row : ints)
      for (auto& v : row) v = static_cast<int>(rng.range(-2, 2));
    FieldValue det_q = exact_det(from_ints(q, ints), q);
    FieldValue det_p = exact_det(from_ints(gf5, ints), gf5);
    CHECK(FieldValue::from_rational(gf5, parse_rational(det_q.to_string())) == det_p);
  }
}

TEST_CASE("determinants") {
  auto q = field_from_spec("Q");
  CHECK(exact_det(from_ints(q, {{2, 0}, {0, 3}}), q) == FieldValue::from_integer(q, 6));
  CHECK(exact_det(from_ints(q, {{0, 1}, {1, 0}}), q) == FieldValue::from_integer(q, -1));
  CHECK(exact_det(from_ints(q, {{1, 2}, {2, 4}}), q).is_zero());
  // 3x3 with known value: det = -2
  CHECK(exact_det(from_ints(q, {{1, 1, 1}, {1, -1, 1}, {1, 1, -1}}), q) ==
        FieldValue::from_integer(q, -2));
}

TEST_CASE("pivot columns span the column space") {
  auto gf3 = field_from_spec("GF(3)");
  Matrix m = from_ints(gf3, {{1, 2, 0, 1}, {2, 1, 0, 2}, {0, 0, 0, 0}});
  auto pivots = pivot_columns(m);
  CHECK(pivots == std::vector<int>{0, 1});
}

TEST_CASE("rank-form diagonalization produces a verified witness") {
  for (const char* spec : {"Q", "GF(5)", "Q(zeta_3)"}) {
    FieldRef ctx = field_from_spec(spec);
    Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
      int rows = 1 + rng.below(4), cols = 1 + rng.below(4);
      Matrix m = zero_matrix(ctx, rows, cols);
      for (auto& row : m)
        for (auto& v : row) v = random_value(ctx, rng);
      Diagonalization d = diagonalize_to_rank_form(m, ctx);
      CHECK(d.rank == exact_rank(m));
      CHECK(exact_rank(d.q) == rows);
      CHECK(exact_rank(d.p) == cols);
      Matrix product = mat_mul(mat_mul(d.q, m), d.p);
      int ones = 0;
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
          if (i == j && product[i][j].is_one())
            ++ones;
          else
            CHECK(product[i][j].is_zero());
        }
      CHECK(ones == d.rank);
    }
  }
}

TEST_CASE("random invertible matrices are invertible") {
  auto gf3 = field_from_spec("GF(3)");
  Rng rng(5);
  for (int t = 0; t < 30; ++t) CHECK(exact_rank(random_invertible(gf3, 3, rng)) == 3);
}
