#pragma once

#include "hfq/poly.hpp"

namespace hfq {

/// Parity-dependent widths for the pair (U, V) at degree n and interval
/// exponent h. For n even the U side runs over monic E, for n odd the V side
/// runs over monic F.
struct ThmParams {
  int n = 0, h = 0;
  bool even = true;
  int deg_u = 0, deg_v = 0;
  int s = 0, t = 0;    // widths used in alpha (.) [U]_s and alpha (.) [V]_t
  int sp = 0, tp = 0;  // s' = (n - s) / 2, t' = (n - t) / 2
  int n1 = 0, n2 = 0;
};

/// U, V monic, coprime, deg U even, deg V odd. Throws NotMonic, BadParity,
/// NotCoprime.
void check_pair(const Poly& U, const Poly& V);

/// Validates the pair and 0 <= h <= n. Also requires n large enough that the
/// monic side has s' (or t') >= 0; throws OutOfRange otherwise.
ThmParams make_params(const Poly& U, const Poly& V, int n, int h);

}  // namespace hfq
