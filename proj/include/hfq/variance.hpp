#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "hfq/params.hpp"

namespace hfq {

/// #{(E, F) : B = U E^2 + V F^2}, by direct search.
std::uint64_t s_count(const Poly& U, const Poly& V, const Poly& B);
/// Sum of s_count over I(A; < h).
std::uint64_t interval_sum(const Poly& U, const Poly& V, const Poly& A, int h);
/// 2 q^{h - deg U / 2 - deg V / 2 + 1/2}. Throws ExponentNotInteger when
/// deg U + deg V is even.
Rational mean_formula(const Poly& U, const Poly& V, int n, int h);

/// (1/q^n) sum over A in M_n of (interval sum - mean)^2, from a tally of
/// U E^2 + V F^2 over all (E, F). Throws TooLarge past the guard.
Rational variance_bruteforce(const Poly& U, const Poly& V, int n, int h, std::uint64_t guard = 100000000);

/// Interval sums of every class I(A; < h), A in M_n, in index order of the
/// top n - h coefficients below T^n.
std::vector<std::uint64_t> interval_class_sums(const Poly& U, const Poly& V, int n, int h,
                                               std::uint64_t guard = 100000000);

/// sum over C1 in A_{<=k1}, C2 in (M or A)_{<=k2} with (C2, W) | C1 of |(C2, W)|.
BigInt gcd_weight_sum(const Poly& W, int k1, int k2, bool c2_monic);

Rational f_formula(const Poly& U, const Poly& V, int n, int h);
/// 4 q^{(deg UV + 1)/2} log_q(deg U) log_q(deg V). Throws BoundUndefined when
/// deg U < 2 or deg V < 2.
long double f_bound(const Poly& U, const Poly& V);
Rational m_factor(const Poly& U, const Poly& V);

enum class CaseLabel { Case1, Case2, Case3, Uncovered };
std::string_view case_name(CaseLabel c) noexcept;
CaseLabel case_classify(const Poly& U, const Poly& V, int n, int h);

struct VarianceReport {
  ThmParams params;
  std::uint32_t q = 0;
  CaseLabel label = CaseLabel::Uncovered;
  std::optional<Rational> oracle, charsum, theorem, main_term, secondary_term, residual;
  std::optional<std::pair<Rational, Rational>> error_scale;
};

/// Theorem side only; oracle and charsum are left for the caller.
VarianceReport theorem_predict(const Poly& U, const Poly& V, int n, int h);

struct IdentitySides {
  Rational lhs, rhs;
  bool holds() const { return lhs == rhs; }
};

/// Counting side over A in M_{n-r1+1} against the closed form
/// q^{n-r1+1} / |UV| times the two gcd-weight sums. Throws RangeEmpty, TooLarge.
IdentitySides kernel_sum_identity(const Poly& U, const Poly& V, int n, int h, int r1,
                                  std::uint64_t guard = 100000000);

/// Sum over the strict class (r, r, 0) of L_{n-1}^h of |(a1, U)| |(a1, V)|
/// against the stratified count of coprime (A, B) in M_r x A_{<r-h}.
IdentitySides w_sum_identity(const Poly& U, const Poly& V, int n, int h, int r,
                             std::uint64_t guard = 100000000);

namespace reference {
Rational variance_bruteforce(const Poly& U, const Poly& V, int n, int h, std::uint64_t guard = 100000000);
}

}  // namespace hfq
