#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hfq/matrix.hpp"
#include "hfq/poly.hpp"

namespace hfq {

/// alpha_0..alpha_n over F_q.
class Seq {
 public:
  Seq(const Field& f, std::vector<Elem> a);
  static Seq from_ints(const Field& f, std::initializer_list<long long> a);
  /// Base-q digits of index, alpha_0 least significant; length n+1.
  static Seq from_index(const Field& f, std::uint64_t index, int n);

  const Field& field() const noexcept { return *f_; }
  int n() const noexcept { return static_cast<int>(a_.size()) - 1; }
  int n1() const noexcept { return (n() + 2) / 2; }
  int n2() const noexcept { return (n() + 3) / 2; }
  Elem operator[](int i) const noexcept { return a_[i]; }
  std::span<const Elem> entries() const noexcept { return a_; }
  bool is_zero() const noexcept;
  /// alpha_0..alpha_m
  Seq truncated(int m) const;
  std::string literal() const;

  friend bool operator==(const Seq& x, const Seq& y) { return x.a_ == y.a_; }

 private:
  const Field* f_;
  std::vector<Elem> a_;
};

/// H_{rows,cols}(alpha) with entry (i,j) = alpha_{i+j}, using the truncation
/// alpha_0..alpha_{rows+cols-2}.
class HankelView {
 public:
  HankelView(const Seq& s, std::size_t rows, std::size_t cols);
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Seq& seq() const noexcept { return seq_; }
  Elem operator()(std::size_t i, std::size_t j) const noexcept { return seq_[static_cast<int>(i + j)]; }
  Matrix matrix() const;

 private:
  Seq seq_;
  std::size_t rows_, cols_;
};

std::size_t rank(const HankelView& v);
std::vector<std::vector<Elem>> kernel_basis(const HankelView& v);

/// Rank of H_{rows,cols} read directly from a raw sequence.
std::size_t hankel_rank(const Field& f, std::span<const Elem> a, std::size_t rows, std::size_t cols);

struct Profile {
  int r = 0, rho = 0, pi = 0, strict_rho = 0, strict_pi = 0;
  friend bool operator==(const Profile&, const Profile&) = default;
};

Profile profile(const Seq& s);
Profile profile(const Field& f, std::span<const Elem> a);
/// r and strict pi only, for the character-sum fast path.
std::pair<int, int> rank_and_strict_pi(const Field& f, std::span<const Elem> a);

struct RhoPiForm {
  Matrix m;
  std::vector<Elem> x;  // empty when rho == 0
  int rho = 0, pi = 0;
};
/// Row-reduced block form of the view. Throws ShapeTooSmall unless rows and
/// cols are at least r of the viewed sequence.
RhoPiForm rhopi_form(const HankelView& v);
/// Checks the block shape of a rhopi_form result.
bool rhopi_shape_ok(const RhoPiForm& form);

struct CharPolys {
  Poly a1, a2;
  bool canonical = false;
};
CharPolys char_polys(const Seq& s);

/// Continue the recurrence given by a1. Throws NotPiZero.
Seq seq_extend(const Seq& s, int extra);

struct ClassKey {
  int r = 0, rho = 0, pi = 0;
  friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
};

struct Census {
  std::map<ClassKey, std::uint64_t> standard, strict;
  friend bool operator==(const Census&, const Census&) = default;
};

/// |L_n^h(r, rho, pi)| by the closed forms, 0 outside every covered case.
BigInt census_formula(int n, int h, int r, int rho, int pi, std::uint32_t q);
/// |L_n^h(r)|
BigInt census_aggregate(int n, int h, int r, std::uint32_t q);
/// Exhaustive tally over alpha with alpha_0 = ... = alpha_{h-1} = 0.
/// Throws TooLarge when q^{n+1-h} exceeds guard.
Census census_enumerate(const Field& f, int n, int h, std::uint64_t guard = 100000000);

/// alpha (.) [W]_s. Throws WidthTooSmall (deg W > s) or TooShort (s > n).
Seq odot(const Seq& s, const Poly& W, int width);
/// (k+s) x k, column j holding [W]_s starting at row j.
Matrix toeplitz_mat(const Poly& W, int s, int k);

enum class ReductionClaim { Standard, Strict };
struct Reduction {
  ReductionClaim claim;
  int r, rho, pi;          // strict values under the Strict claim
  std::optional<Poly> a1;  // predicted a1 under the Standard claim
};
/// Predicted class of alpha (.) [W]_s. Throws PreconditionViolated.
Reduction reduction_profile(const Seq& s, const Poly& W, int width);

/// alpha in L_n^h(r, r, 0) -> (a1, a1 * L(alpha)) truncated to its polynomial part.
std::pair<Poly, Poly> bijection_map(const Seq& s, int h);
Seq bijection_inverse(const Poly& A, const Poly& B, int n, int h);

namespace reference {
Census census_enumerate(const Field& f, int n, int h, std::uint64_t guard = 100000000);
}

}  // namespace hfq
