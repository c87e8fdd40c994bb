#pragma once

#include <cstddef>
#include <vector>

#include "hfq/field.hpp"

namespace hfq {

/// Dense row-major matrix over F_q.
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Elem> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Elem& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  Elem operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  friend bool operator==(const Matrix&, const Matrix&) = default;
};

/// Reduced row echelon form; pivots chosen in the leftmost column with a
/// non-zero entry, topmost such row. Returns the pivot columns.
std::vector<std::size_t> rref_inplace(const Field& f, Matrix& m);
std::size_t rank(const Field& f, Matrix m);

/// Rank of a row-major rows x cols block stored at m; m is overwritten.
std::size_t rank_inplace(const Field& f, Elem* m, std::size_t rows, std::size_t cols);

/// One vector per free column (entry 1 there), read off the reduced form.
std::vector<std::vector<Elem>> kernel_basis(const Field& f, const Matrix& m);

Matrix mat_mul(const Field& f, const Matrix& x, const Matrix& y);
std::vector<Elem> mat_vec(const Field& f, const Matrix& x, const std::vector<Elem>& v);

/// Solution of x * sol = b for invertible square x; throws PreconditionViolated
/// when x is singular.
std::vector<Elem> solve_square(const Field& f, Matrix x, std::vector<Elem> b);

}  // namespace hfq
