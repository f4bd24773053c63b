#ifndef GACT_LINALG_HPP
#define GACT_LINALG_HPP

#include <vector>

#include "gact/field.hpp"

namespace gact {

// dense row-major matrix of exact field values
using Matrix = std::vector<std::vector<FieldValue>>;

Matrix identity_matrix(const FieldRef& ctx, int n);
Matrix zero_matrix(const FieldRef& ctx, int rows, int cols);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_scale(const FieldValue& c, const Matrix& a);
bool mat_eq(const Matrix& a, const Matrix& b);
int nonzero_entries(const Matrix& a);

/**
 * Rank over the exact field. Finite characteristic uses plain elimination
 * with modular inverses; characteristic zero uses fraction-free (Bareiss)
 * elimination so intermediate entries stay minors of the input. Pivoting is
 * deterministic: columns left to right, first nonzero row from the top.
 */
int exact_rank(Matrix m);

/// Determinant of a square matrix, same elimination strategy as exact_rank.
FieldValue exact_det(Matrix m, const FieldRef& ctx);

/// Indices of a deterministic set of columns spanning the column space.
std::vector<int> pivot_columns(Matrix m);

/// Invertible q (rows x rows) and p (cols x cols) with q*a*p diagonal 0/1,
/// the number of ones equal to rank(a).
struct Diagonalization {
  Matrix q;
  Matrix p;
  int rank = 0;
};
Diagonalization diagonalize_to_rank_form(const Matrix& a, const FieldRef& ctx);

Matrix random_invertible(const FieldRef& ctx, int n, Rng& rng);

}  // namespace gact

#endif
