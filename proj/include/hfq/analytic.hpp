#pragma once

#include <cstdint>
#include <vector>

#include "hfq/poly.hpp"

namespace hfq {

struct PhiSumReport {
  Poly w2, w3;
  int k_max = 0;
  std::vector<Rational> partial_sums;  // S(0..k_max)
  std::vector<Rational> increments;    // S(k) - S(k-1), with S(-1) = 0
  Rational slope;
};

/// Sum over non-zero B in A_{<=k} with rad((B, W2 W3)) = rad W3 of
/// phi(B) / |B|^2. Throws NotMonic, NotCoprime, TooLarge.
Rational phi_ratio_sum(const Poly& w2, const Poly& w3, int k, std::uint64_t guard = 100000000);

/// ((q-1)^2 / q) prod_{P | W} (1 + |P|^{-1})^{-1} prod_{P | W3} |P|^{-1}.
Rational phi_slope(const Poly& w2, const Poly& w3);

PhiSumReport convergence_report(const Poly& w2, const Poly& w3, int k_max, std::uint64_t guard = 100000000);

namespace reference {
/// Same sum, term by term, with phi from factorization.
Rational phi_ratio_sum(const Poly& w2, const Poly& w3, int k);
}

}  // namespace hfq
