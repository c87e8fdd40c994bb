#pragma once

#include <cstdint>
#include <optional>

#include "hfq/hankel.hpp"
#include "hfq/params.hpp"

namespace hfq {

struct QuadSumResult {
  CycInt value;
  std::optional<BigInt> mag_sq;
  Profile profile_used;
};

/// sum over E in A_{<=l} of psi([E]^T H_{l+1,l+1}(alpha) [E]); alpha has
/// length 2l+1. Throws LengthMismatch.
QuadSumResult quad_sum_all(const Seq& alpha, int l);
/// Same sum restricted to E in M_l.
QuadSumResult quad_sum_monic(const Seq& alpha, int l);
/// |sum|^2 from the rank and strict pi of alpha, without summing.
BigInt magsq_via_profile(const Seq& alpha, int l, bool monic);

enum class SumMode { Exact, Fast };

/// 4 q^{2h} / q^{2n+1} times the sum over alpha in L_n^h, minus the sequences
/// vanishing except possibly at alpha_n, of |X(alpha)|^2 |Y(alpha)|^2 where X, Y
/// are the quadratic-form sums of alpha (.) [U]_s and alpha (.) [V]_t.
/// Throws TooLarge when the work estimate exceeds guard.
Rational variance_charsum(const Poly& U, const Poly& V, int n, int h, SumMode mode,
                          std::uint64_t guard = 100000000);

namespace reference {
/// Serial evaluation through quad_sum_all / quad_sum_monic.
Rational variance_charsum(const Poly& U, const Poly& V, int n, int h,
                          std::uint64_t guard = 100000000);
}

}  // namespace hfq
