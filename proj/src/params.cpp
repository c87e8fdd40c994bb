#include "hfq/params.hpp"

#include "hfq/error.hpp"

namespace hfq {

void check_pair(const Poly& U, const Poly& V) {
  if (!U.is_monic() || !V.is_monic()) fail(Errc::NotMonic, "U and V must be monic");
  if (U.deg() % 2 != 0 || V.deg() % 2 == 0) fail(Errc::BadParity, "need deg U even and deg V odd");
  if (gcd(U, V).deg() != 0) fail(Errc::NotCoprime, "U and V must be coprime");
}

ThmParams make_params(const Poly& U, const Poly& V, int n, int h) {
  check_pair(U, V);
  if (n < 0 || h < 0 || h > n) fail(Errc::OutOfRange, "need 0 <= h <= n");
  ThmParams p;
  p.n = n;
  p.h = h;
  p.even = n % 2 == 0;
  p.deg_u = U.deg();
  p.deg_v = V.deg();
  p.s = p.even ? p.deg_u : p.deg_u + 1;
  p.t = p.even ? p.deg_v + 1 : p.deg_v;
  p.n1 = (n + 2) / 2;
  p.n2 = (n + 3) / 2;
  if (n < p.s - 2 || n < p.t - 2) fail(Errc::OutOfRange, "n too small for deg U, deg V");
  p.sp = (n - p.s) / 2;
  p.tp = (n - p.t) / 2;
  const int monic_side = p.even ? p.sp : p.tp;
  if (monic_side < 0) fail(Errc::OutOfRange, "n too small for deg U, deg V");
  return p;
}

}  // namespace hfq
