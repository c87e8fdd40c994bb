#include "hfq/hankel.hpp"

#include <algorithm>
#include <array>

#include "hfq/error.hpp"

namespace hfq {

Seq::Seq(const Field& f, std::vector<Elem> a) : f_(&f), a_(std::move(a)) {
  if (a_.empty()) fail(Errc::TooShort, "a sequence needs at least one entry");
}

Seq Seq::from_ints(const Field& f, std::initializer_list<long long> a) {
  std::vector<Elem> v;
  for (auto x : a) v.push_back(f.from_int(x));
  return Seq(f, std::move(v));
}

Seq Seq::from_index(const Field& f, std::uint64_t index, int n) {
  std::vector<Elem> v(static_cast<std::size_t>(n) + 1);
  for (auto& e : v) {
    e = Elem{static_cast<std::uint32_t>(index % f.q())};
    index /= f.q();
  }
  return Seq(f, std::move(v));
}

bool Seq::is_zero() const noexcept {
  return std::all_of(a_.begin(), a_.end(), [](Elem e) { return e.id == 0; });
}

Seq Seq::truncated(int m) const {
  if (m < 0 || m > n()) fail(Errc::OutOfRange, "truncation index out of range");
  return Seq(*f_, std::vector<Elem>(a_.begin(), a_.begin() + m + 1));
}

std::string Seq::literal() const {
  std::string s;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (i) s += ',';
    s += f_->format(a_[i]);
  }
  return s;
}

HankelView::HankelView(const Seq& s, std::size_t rows, std::size_t cols)
    : seq_(s), rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) fail(Errc::ShapeTooSmall, "Hankel view needs rows, cols >= 1");
  const int top = static_cast<int>(rows + cols) - 2;
  if (top > s.n()) fail(Errc::TooShort, "sequence too short for the requested Hankel shape");
  seq_ = s.truncated(top);
}

Matrix HankelView::matrix() const {
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

std::size_t rank(const HankelView& v) { return rank(v.seq().field(), v.matrix()); }

std::vector<std::vector<Elem>> kernel_basis(const HankelView& v) {
  return kernel_basis(v.seq().field(), v.matrix());
}

std::size_t hankel_rank(const Field& f, std::span<const Elem> a, std::size_t rows, std::size_t cols) {
  constexpr std::size_t kStack = 1024;
  std::array<Elem, kStack> buf;
  std::vector<Elem> heap;
  Elem* m = buf.data();
  if (rows * cols > kStack) {
    heap.resize(rows * cols);
    m = heap.data();
  }
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i * cols + j] = a[i + j];
  return rank_inplace(f, m, rows, cols);
}

namespace {

// Largest k <= cap with H_{k,k} invertible, 0 if none.
int largest_invertible_leading(const Field& f, std::span<const Elem> a, int cap) {
  for (int k = cap; k >= 1; --k)
    if (hankel_rank(f, a, k, k) == static_cast<std::size_t>(k)) return k;
  return 0;
}

}  // namespace

Profile profile(const Field& f, std::span<const Elem> a) {
  const int n = static_cast<int>(a.size()) - 1;
  const int n1 = (n + 2) / 2, n2 = (n + 3) / 2;
  Profile p;
  p.r = static_cast<int>(hankel_rank(f, a, n1, n2));
  // rho <= r, since H_{rho,rho} sits inside H_{n1,n2}
  p.rho = largest_invertible_leading(f, a, std::min(n1, p.r));
  p.strict_rho = p.rho <= n2 - 1 ? p.rho : largest_invertible_leading(f, a, n2 - 1);
  p.pi = p.r - p.rho;
  p.strict_pi = p.r - p.strict_rho;
  return p;
}

Profile profile(const Seq& s) { return profile(s.field(), s.entries()); }

std::pair<int, int> rank_and_strict_pi(const Field& f, std::span<const Elem> a) {
  const int n = static_cast<int>(a.size()) - 1;
  const int n1 = (n + 2) / 2, n2 = (n + 3) / 2;
  const int r = static_cast<int>(hankel_rank(f, a, n1, n2));
  const int srho = largest_invertible_leading(f, a, std::min(n2 - 1, r));
  return {r, r - srho};
}

namespace {

// x solving H_{rho,rho} x = (alpha_rho, ..., alpha_{2 rho - 1}), reading
// entries past the end of alpha as zero.
std::vector<Elem> leading_solution(const Seq& s, int rho) {
  const Field& f = s.field();
  Matrix h(rho, rho);
  std::vector<Elem> rhs(rho);
  for (int i = 0; i < rho; ++i) {
    for (int j = 0; j < rho; ++j) h(i, j) = s[i + j];
    rhs[i] = rho + i <= s.n() ? s[rho + i] : f.zero();
  }
  return solve_square(f, std::move(h), std::move(rhs));
}

Poly a1_from_solution(const Field& f, const std::vector<Elem>& x) {
  std::vector<Elem> c(x.size() + 1);
  for (std::size_t j = 0; j < x.size(); ++j) c[j] = f.neg(x[j]);
  c[x.size()] = f.one();
  return Poly(f, std::move(c));
}

}  // namespace

RhoPiForm rhopi_form(const HankelView& v) {
  const Seq& s = v.seq();
  const Field& f = s.field();
  const Profile p = profile(s);
  if (v.rows() < static_cast<std::size_t>(p.r) || v.cols() < static_cast<std::size_t>(p.r))
    fail(Errc::ShapeTooSmall, "view smaller than the rank");
  RhoPiForm out{v.matrix(), {}, p.rho, p.pi};
  if (p.rho == 0) return out;
  out.x = leading_solution(s, p.rho);
  Matrix& m = out.m;
  for (std::size_t i = v.rows(); i-- > static_cast<std::size_t>(p.rho);) {
    for (int j = 0; j < p.rho; ++j) {
      const Elem c = f.neg(out.x[j]);
      if (c.id == 0) continue;
      const std::size_t src = i - p.rho + j;
      for (std::size_t col = 0; col < m.cols; ++col) m(i, col) = f.add(m(i, col), f.mul(c, m(src, col)));
    }
  }
  return out;
}

bool rhopi_shape_ok(const RhoPiForm& form) {
  const Matrix& m = form.m;
  const std::size_t rho = form.rho;
  for (std::size_t i = rho; i < m.rows; ++i)
    for (std::size_t j = 0; j < rho && j < m.cols; ++j)
      if (m(i, j).id != 0) return false;
  if (rho >= m.rows || rho >= m.cols) return form.pi == 0;
  const int dmax = static_cast<int>(m.rows + m.cols - 2 - 2 * rho);
  const int first = dmax - form.pi + 1;  // first non-zero skew-diagonal
  for (std::size_t i = rho; i < m.rows; ++i)
    for (std::size_t j = rho; j < m.cols; ++j) {
      const int d = static_cast<int>(i + j - 2 * rho);
      const Elem e = m(i, j);
      // Hankel within the block
      if (i > rho && j + 1 < m.cols && m(i - 1, j + 1) != e) return false;
      if (d < first && e.id != 0) return false;
      if (d == first && e.id == 0) return false;
    }
  return true;
}

CharPolys char_polys(const Seq& s) {
  const Field& f = s.field();
  const Profile p = profile(s);
  const int n = s.n();
  const Poly one = Poly::constant(f, f.one());
  CharPolys out{one, Poly(f), false};
  if (p.rho > 0) out.a1 = a1_from_solution(f, leading_solution(s, p.rho));
  if (p.r == 0) {
    out.canonical = true;
    return out;
  }
  if (p.r == 1) {
    out.a2 = p.rho == 1 ? one : Poly::monomial(f, f.one(), n + 1);
    out.canonical = true;
    return out;
  }
  const int r = p.r;
  const HankelView view(s, static_cast<std::size_t>(r - 1), static_cast<std::size_t>(n + 3 - r));
  for (const auto& v : kernel_basis(view)) {
    Poly c(f, v);
    if (p.rho == r) {
      if (divides(out.a1, c)) continue;
      out.a2 = (c % out.a1).monic();
      out.canonical = true;
    } else {
      // a1 multiples in this kernel stop short of the last entry
      if (v.back().id == 0) continue;
      out.a2 = c.monic();
    }
    return out;
  }
  fail(Errc::PreconditionViolated, "no kernel vector outside the a1 multiples");
}

Seq seq_extend(const Seq& s, int extra) {
  const Field& f = s.field();
  const Profile p = profile(s);
  if (p.pi != 0) fail(Errc::NotPiZero, "recurrence extension needs pi == 0");
  const CharPolys cp = char_polys(s);
  const int r = cp.a1.deg();
  std::vector<Elem> a(s.entries().begin(), s.entries().end());
  for (int e = 0; e < extra; ++e) {
    const int i = static_cast<int>(a.size()) - r;  // alpha_{i+r} from alpha_i..alpha_{i+r-1}
    Elem v = f.zero();
    for (int j = 0; j < r; ++j) v = f.sub(v, f.mul(cp.a1.coeff(j), a[i + j]));
    a.push_back(v);
  }
  return Seq(f, std::move(a));
}

Seq odot(const Seq& s, const Poly& W, int width) {
  if (W.deg() > width) fail(Errc::WidthTooSmall, "deg W exceeds the declared width");
  if (width < 0 || width > s.n()) fail(Errc::TooShort, "width exceeds the sequence top index");
  const Field& f = s.field();
  std::vector<Elem> out(static_cast<std::size_t>(s.n() - width) + 1, f.zero());
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int j = 0; j <= W.deg(); ++j) out[i] = f.add(out[i], f.mul(W.coeff(j), s[static_cast<int>(i) + j]));
  return Seq(f, std::move(out));
}

Matrix toeplitz_mat(const Poly& W, int s, int k) {
  if (W.deg() > s) fail(Errc::WidthTooSmall, "deg W exceeds the declared width");
  if (k < 1) fail(Errc::ShapeTooSmall, "Toeplitz matrix needs k >= 1");
  Matrix m(static_cast<std::size_t>(k + s), static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i <= W.deg(); ++i) m(j + i, j) = W.coeff(i);
  return m;
}

Reduction reduction_profile(const Seq& s, const Poly& W, int width) {
  if (W.is_zero()) fail(Errc::PreconditionViolated, "W must be non-zero");
  if (W.deg() > width) fail(Errc::WidthTooSmall, "deg W exceeds the declared width");
  const int n = s.n();
  if (width > n) fail(Errc::TooShort, "width exceeds the sequence top index");
  const Profile p = profile(s);
  const int slack = width - W.deg();
  if (n >= 2 && n >= 2 * p.r + width - 1) {
    const CharPolys cp = char_polys(s);
    const Poly g = gcd(cp.a1, W);
    const int dg = g.deg();
    const int r = p.r - dg - std::min(slack, p.pi);
    return {ReductionClaim::Standard, r, p.rho - dg, std::max(0, p.pi - slack), cp.a1 / g};
  }
  const int half = (n - width) / 2 + 1;
  // with deg W < width the reduced sequence keeps extra leading zeros and
  // its rank drops, so the class is only preserved for deg W == width
  if (slack == 0 && n - width >= 2 && (n - width) % 2 == 0 && p.r == half && p.strict_rho == 0)
    return {ReductionClaim::Strict, half, 0, half, std::nullopt};
  fail(Errc::PreconditionViolated, "neither reduction claim applies");
}

std::pair<Poly, Poly> bijection_map(const Seq& s, int h) {
  const Field& f = s.field();
  const Profile p = profile(s);
  const int r = p.r;
  if (!(p.rho == r && p.pi == 0 && r > 2 && r <= s.n2() - 1 && h < r))
    fail(Errc::WrongClass, "sequence outside L_n^h(r, r, 0) with 2 < r <= n2 - 1, h < r");
  for (int i = 0; i < h; ++i)
    if (s[i].id != 0) fail(Errc::WrongClass, "sequence has a non-zero entry before h");
  const Poly A = char_polys(s).a1;
  // polynomial part of A * sum_i alpha_i T^{-i-1}
  std::vector<Elem> b(static_cast<std::size_t>(r), f.zero());
  for (int k = 0; k < r; ++k)
    for (int j = k + 1; j <= r; ++j) b[k] = f.add(b[k], f.mul(A.coeff(j), s[j - k - 1]));
  return {A, Poly(f, std::move(b))};
}

Seq bijection_inverse(const Poly& A, const Poly& B, int n, int h) {
  const Field& f = A.field();
  if (!A.is_monic()) fail(Errc::NotMonic, "A must be monic");
  const int r = A.deg();
  if (B.deg() >= r - h) fail(Errc::DegreeTooLarge, "deg B must be below r - h");
  if (gcd(A, B).deg() != 0) fail(Errc::NotCoprime, "A and B must be coprime");
  const auto series = laurent_expand(B, A, n + 1);
  return Seq(f, std::vector<Elem>(series.begin() + 1, series.end()));
}

}  // namespace hfq
