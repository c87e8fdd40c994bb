#include "hfq/matrix.hpp"

#include <utility>

#include "hfq/error.hpp"

namespace hfq {

namespace {

// Forward elimination shared by the rank and echelon routines. When `reduce`
// is set, pivots are scaled to one and cleared above as well.
std::size_t eliminate(const Field& f, Elem* m, std::size_t rows, std::size_t cols, bool reduce,
                      std::vector<std::size_t>* pivots) {
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t piv = row;
    while (piv < rows && m[piv * cols + c].id == 0) ++piv;
    if (piv == rows) continue;
    if (piv != row)
      for (std::size_t j = c; j < cols; ++j) std::swap(m[piv * cols + j], m[row * cols + j]);
    Elem* pr = m + row * cols;
    if (reduce) {
      const Elem inv = f.inv(pr[c]);
      for (std::size_t j = c; j < cols; ++j) pr[j] = f.mul(pr[j], inv);
    }
    const Elem pinv = reduce ? f.one() : f.inv(pr[c]);
    for (std::size_t i = reduce ? 0 : row + 1; i < rows; ++i) {
      if (i == row) continue;
      Elem* ri = m + i * cols;
      if (ri[c].id == 0) continue;
      const Elem factor = f.neg(f.mul(ri[c], pinv));
      for (std::size_t j = c; j < cols; ++j) ri[j] = f.add(ri[j], f.mul(factor, pr[j]));
    }
    if (pivots) pivots->push_back(c);
    ++row;
  }
  return row;
}

}  // namespace

std::size_t rank_inplace(const Field& f, Elem* m, std::size_t rows, std::size_t cols) {
  return eliminate(f, m, rows, cols, false, nullptr);
}

std::vector<std::size_t> rref_inplace(const Field& f, Matrix& m) {
  std::vector<std::size_t> piv;
  eliminate(f, m.a.data(), m.rows, m.cols, true, &piv);
  return piv;
}

std::size_t rank(const Field& f, Matrix m) { return rank_inplace(f, m.a.data(), m.rows, m.cols); }

std::vector<std::vector<Elem>> kernel_basis(const Field& f, const Matrix& m) {
  Matrix r = m;
  const auto piv = rref_inplace(f, r);
  std::vector<bool> is_piv(m.cols, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::vector<Elem>> out;
  for (std::size_t fc = 0; fc < m.cols; ++fc) {
    if (is_piv[fc]) continue;
    std::vector<Elem> v(m.cols, f.zero());
    v[fc] = f.one();
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = f.neg(r(i, fc));
    out.push_back(std::move(v));
  }
  return out;
}

Matrix mat_mul(const Field& f, const Matrix& x, const Matrix& y) {
  if (x.cols != y.rows) fail(Errc::LengthMismatch, "matrix shapes do not chain");
  Matrix z(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const Elem a = x(i, k);
      if (a.id == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) z(i, j) = f.add(z(i, j), f.mul(a, y(k, j)));
    }
  return z;
}

std::vector<Elem> mat_vec(const Field& f, const Matrix& x, const std::vector<Elem>& v) {
  if (x.cols != v.size()) fail(Errc::LengthMismatch, "vector length does not match matrix");
  std::vector<Elem> out(x.rows, f.zero());
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j) out[i] = f.add(out[i], f.mul(x(i, j), v[j]));
  return out;
}

std::vector<Elem> solve_square(const Field& f, Matrix x, std::vector<Elem> b) {
  const std::size_t n = x.rows;
  if (x.cols != n || b.size() != n) fail(Errc::LengthMismatch, "solve needs a square system");
  Matrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = x(i, j);
    aug(i, n) = b[i];
  }
  const auto piv = rref_inplace(f, aug);
  if (piv.size() < n || piv.back() >= n) fail(Errc::PreconditionViolated, "singular system");
  std::vector<Elem> sol(n);
  for (std::size_t i = 0; i < n; ++i) sol[i] = aug(i, n);
  return sol;
}

}  // namespace hfq
