// Exhaustive verification campaigns shared by the CLI and the acceptance run.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hfq/hankel.hpp"
#include "hfq/variance.hpp"

namespace hfq {

struct Tally {
  std::uint64_t checked = 0, failed = 0;
  std::string first_failure;  // empty when failed == 0
  bool ok() const noexcept { return failed == 0 && checked > 0; }
  void merge(const Tally& o);
};

struct CensusRow {
  int n, h, r, rho, pi;
  BigInt formula;
  std::uint64_t enumerated;
  bool match() const { return formula == enumerated; }
};

/// Per-class formula against enumeration for n, h in the given ranges (h is
/// clipped to n + 1), plus one aggregate row per r with rho = pi = -1 and one
/// partition row per (n, h) with r = rho = pi = -1.
std::vector<CensusRow> census_rows(const Field& f, int n_lo, int n_hi, int h_lo, int h_hi,
                                   std::uint64_t guard = 100000000);

/// For every alpha of length n + 1 and every split l + m = n, the kernel of
/// H_{l+1,m+1} enumerated vector by vector equals the set B1 A1 + B2 A2.
Tally check_kernel_structure(const Field& f, int n, std::uint64_t guard = 100000000);

/// Cyclotomic |sum|^2 of both quadratic-form sums against the powers of q
/// predicted from the profile, for every alpha of length 2l + 1.
Tally check_quadform(const Field& f, int l, std::uint64_t guard = 100000000);

/// Predicted class (and a1) of alpha (.) [W]_s against the computed one, for
/// every alpha of length n + 1 and every width deg W <= s <= n where a claim
/// applies.
Tally check_reduction(const Field& f, int n, const std::vector<Poly>& ws, std::uint64_t guard = 100000000);

/// Forward map lands in coprime pairs, round trips, and the class size equals
/// the number of coprime pairs.
Tally check_bijection(const Field& f, int n, int r, int h, std::uint64_t guard = 100000000);

/// kernel_sum_identity over every r1 and w_sum_identity over every r that the
/// parameters admit. Infeasible tuples are skipped; TooLarge propagates.
Tally check_kernel_sums(const Poly& U, const Poly& V, int n, int h, std::uint64_t guard = 100000000);
Tally check_w_sums(const Poly& U, const Poly& V, int n, int h, std::uint64_t guard = 100000000);

}  // namespace hfq
