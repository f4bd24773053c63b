#include "gact/linalg.hpp"

#include <utility>

namespace gact {

Matrix identity_matrix(const FieldRef& ctx, int n) {
  Matrix m(n, std::vector<FieldValue>(n, FieldValue::zero(ctx)));
  for (int i = 0; i < n; ++i) m[i][i] = FieldValue::one(ctx);
  return m;
}

Matrix zero_matrix(const FieldRef& ctx, int rows, int cols) {
  return Matrix(rows, std::vector<FieldValue>(cols, FieldValue::zero(ctx)));
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require(!a.empty() && !b.empty() && a[0].size() == b.size(), ErrorCode::InputError,
          "dimension mismatch in matrix product");
  const size_t rows = a.size(), inner = b.size(), cols = b[0].size();
  const FieldRef& ctx = a[0][0].context();
  Matrix c = zero_matrix(ctx, static_cast<int>(rows), static_cast<int>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < cols; ++j) c[i][j] = c[i][j] + a[i][k] * b[k][j];
    }
  return c;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  Matrix c = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) c[i][j] = a[i][j] + b[i][j];
  return c;
}

Matrix mat_scale(const FieldValue& c, const Matrix& a) {
  Matrix out = a;
  for (auto& row : out)
    for (auto& v : row) v = c * v;
  return out;
}

bool mat_eq(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != b[i][j]) return false;
  }
  return true;
}

int nonzero_entries(const Matrix& a) {
  int count = 0;
  for (const auto& row : a)
    for (const auto& v : row)
      if (!v.is_zero()) ++count;
  return count;
}

namespace {

struct EliminationResult {
  int rank = 0;
  int swap_sign = 1;
  std::vector<int> pivot_cols;
  FieldValue last_pivot;  // Bareiss only
};

// shared by rank / det / pivot-column queries
EliminationResult eliminate(Matrix& m) {
  EliminationResult res;
  if (m.empty() || m[0].empty()) return res;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  const FieldRef& ctx = m[0][0].context();
  const bool fraction_free = ctx->characteristic() == 0;
  FieldValue prev = FieldValue::one(ctx);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot_row = -1;
    for (int i = r; i < rows; ++i) {
      if (!m[i][c].is_zero()) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != r) {
      std::swap(m[pivot_row], m[r]);
      res.swap_sign = -res.swap_sign;
    }
    const FieldValue pivot = m[r][c];
    if (fraction_free) {
      // one-step fraction-free update: entries stay minors of the input,
      // so the division by the previous pivot is exact
      const FieldValue prev_inv = prev.inverse();
      for (int i = r + 1; i < rows; ++i) {
        for (int j = c + 1; j < cols; ++j)
          m[i][j] = (pivot * m[i][j] - m[i][c] * m[r][j]) * prev_inv;
        m[i][c] = FieldValue::zero(ctx);
      }
      prev = pivot;
    } else {
      const FieldValue inv = pivot.inverse();
      for (int i = r + 1; i < rows; ++i) {
        if (m[i][c].is_zero()) continue;
        const FieldValue factor = m[i][c] * inv;
        for (int j = c + 1; j < cols; ++j) m[i][j] = m[i][j] - factor * m[r][j];
        m[i][c] = FieldValue::zero(ctx);
      }
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  res.last_pivot = fraction_free ? prev : FieldValue::one(ctx);
  return res;
}

}  // namespace

int exact_rank(Matrix m) { return eliminate(m).rank; }

FieldValue exact_det(Matrix m, const FieldRef& ctx) {
  require(m.size() == (m.empty() ? 0 : m[0].size()), ErrorCode::InputError,
          "determinant of a non-square matrix");
  if (m.empty()) return FieldValue::one(ctx);
  const int n = static_cast<int>(m.size());
  Matrix copy = m;
  EliminationResult res = eliminate(copy);
  if (res.rank < n) return FieldValue::zero(ctx);
  FieldValue det = FieldValue::one(ctx);
  if (ctx->characteristic() == 0) {
    det = res.last_pivot;  // final Bareiss pivot is the determinant
  } else {
    for (int i = 0; i < n; ++i) det = det * copy[i][i];
  }
  if (res.swap_sign < 0) det = -det;
  return det;
}

std::vector<int> pivot_columns(Matrix m) { return eliminate(m).pivot_cols; }

Diagonalization diagonalize_to_rank_form(const Matrix& a, const FieldRef& ctx) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  Diagonalization out;
  out.q = identity_matrix(ctx, rows);
  out.p = identity_matrix(ctx, cols);
  Matrix m = a;

  // row stage: Gauss-Jordan, mirrored into q
  int r = 0;
  std::vector<int> pivots;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot_row = -1;
    for (int i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) {
        pivot_row = i;
        break;
      }
    if (pivot_row < 0) continue;
    if (pivot_row != r) {
      std::swap(m[pivot_row], m[r]);
      std::swap(out.q[pivot_row], out.q[r]);
    }
    FieldValue inv = m[r][c].inverse();
    for (int j = 0; j < cols; ++j) m[r][j] = inv * m[r][j];
    for (int j = 0; j < rows; ++j) out.q[r][j] = inv * out.q[r][j];
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      FieldValue factor = m[i][c];
      for (int j = 0; j < cols; ++j) m[i][j] = m[i][j] - factor * m[r][j];
      for (int j = 0; j < rows; ++j) out.q[i][j] = out.q[i][j] - factor * out.q[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  out.rank = r;

  // column stage: move pivot columns into place, clear the rest of each pivot row
  auto apply_col_swap = [&](int c1, int c2) {
    if (c1 == c2) return;
    for (int i = 0; i < rows; ++i) std::swap(m[i][c1], m[i][c2]);
    for (int i = 0; i < cols; ++i) std::swap(out.p[i][c1], out.p[i][c2]);
  };
  auto apply_col_axpy = [&](int dst, int src, const FieldValue& factor) {
    // col_dst -= factor * col_src
    for (int i = 0; i < rows; ++i) m[i][dst] = m[i][dst] - factor * m[i][src];
    for (int i = 0; i < cols; ++i) out.p[i][dst] = out.p[i][dst] - factor * out.p[i][src];
  };
  for (int i = 0; i < out.rank; ++i) apply_col_swap(i, pivots[i]);
  for (int i = 0; i < out.rank; ++i)
    for (int j = out.rank; j < cols; ++j)
      if (!m[i][j].is_zero()) apply_col_axpy(j, i, m[i][j]);
  return out;
}

Matrix random_invertible(const FieldRef& ctx, int n, Rng& rng) {
  if (n == 0) return {};
  for (;;) {
    Matrix m(n, std::vector<FieldValue>(n, FieldValue::zero(ctx)));
    for (auto& row : m)
      for (auto& v : row) v = random_value(ctx, rng);
    if (exact_rank(m) == n) return m;
  }
}

}  // namespace gact
