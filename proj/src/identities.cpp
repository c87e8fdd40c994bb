#include <vector>

#include <omp.h>

#include "hfq/error.hpp"
#include "hfq/hankel.hpp"
#include "hfq/variance.hpp"

namespace hfq {

namespace {

// #{(X2, X) : X2 in (M|A)_{<=k2}, X in (M_l | A_{<=l}), deg(W X - X2 A) <= k1}
std::uint64_t side_count(const Poly& W, const Poly& A, int l, bool x_monic, int k2, bool x2_monic, int k1) {
  const Field& f = W.field();
  const PolySet xs(f, x_monic ? PolyKind::Monic : PolyKind::AllUpTo, l);
  const PolySet x2s(f, x2_monic ? PolyKind::MonicUpTo : PolyKind::AllUpTo, k2);
  std::vector<Poly> prods;
  prods.reserve(x2s.size());
  for (const Poly& X2 : x2s) prods.push_back(X2 * A);
  std::uint64_t count = 0;
  for (const Poly& X : xs) {
    const Poly wx = W * X;
    for (const Poly& p : prods)
      if ((wx - p).deg() <= k1) ++count;
  }
  return count;
}

}  // namespace

IdentitySides kernel_sum_identity(const Poly& U, const Poly& V, int n, int h, int r1, std::uint64_t guard) {
  const ThmParams tp = make_params(U, V, n, h);
  const Field& f = U.field();
  const int lo = tp.even ? tp.sp + 1 : tp.tp + 1;
  if (r1 < lo || r1 > n - h) fail(Errc::RangeEmpty, "r1 outside its summation range");
  const int sp = tp.sp, tpp = tp.tp, s = tp.s, t = tp.t;

  // per-side parameters: (l, X monic, k2, X2 monic, k1)
  struct Side {
    int l;
    bool xm;
    int k2;
    bool x2m;
    int k1;
  };
  const Side bu = tp.even ? Side{sp, true, r1 - sp - 1, true, sp + s - r1}
                          : Side{sp, false, r1 - sp - 2, false, sp + s - r1 - 1};
  const Side cv = tp.even ? Side{tpp, false, r1 - tpp - 2, false, tpp + t - r1 - 1}
                          : Side{tpp, true, r1 - tpp - 1, true, tpp + t - r1};

  const PolySet as(f, PolyKind::Monic, n - r1 + 1);
  auto set_size = [&](const Side& sd) {
    const std::uint64_t x = PolySet(f, sd.xm ? PolyKind::Monic : PolyKind::AllUpTo, sd.l).size();
    const std::uint64_t x2 = PolySet(f, sd.x2m ? PolyKind::MonicUpTo : PolyKind::AllUpTo, sd.k2).size();
    return x * x2;
  };
  const std::uint64_t work = set_size(bu) + set_size(cv);
  if (work != 0 && as.size() > guard / work) fail(Errc::TooLarge, "kernel-sum enumeration exceeds the guard");

  BigInt lhs = 0;
#pragma omp parallel
  {
    BigInt local = 0;
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(as.size()); ++i) {
      const Poly A = as.at(static_cast<std::uint64_t>(i));
      const std::uint64_t b = side_count(U, A, bu.l, bu.xm, bu.k2, bu.x2m, bu.k1);
      if (b == 0) continue;
      const std::uint64_t c = side_count(V, A, cv.l, cv.xm, cv.k2, cv.x2m, cv.k1);
      local += BigInt(static_cast<unsigned long>(b)) * BigInt(static_cast<unsigned long>(c));
    }
#pragma omp critical
    lhs += local;
  }

  const BigInt bsum = gcd_weight_sum(U, bu.k1, bu.k2, bu.x2m);
  const BigInt csum = gcd_weight_sum(V, cv.k1, cv.k2, cv.x2m);
  Rational rhs(big_pow(f.q(), n - r1 + 1) * bsum * csum, (U * V).norm());
  rhs.canonicalize();
  return {Rational(lhs), rhs};
}

IdentitySides w_sum_identity(const Poly& U, const Poly& V, int n, int h, int r, std::uint64_t guard) {
  const ThmParams tp = make_params(U, V, n, h);
  const Field& f = U.field();
  const int m = n - 1;  // sequences alpha_0..alpha_{n-1}
  const int n2 = (m + 3) / 2;
  if (!(h + 1 <= r && r <= std::min(tp.sp, tp.tp) && r > 2 && r <= n2 - 1))
    fail(Errc::RangeEmpty, "r outside h+1 <= r <= min(s', t'), 2 < r <= n2 - 1");
  const std::uint64_t n_alpha = checked_pow(f.q(), m + 1 - h);
  const PolySet as(f, PolyKind::Monic, r), bs(f, PolyKind::AllUpTo, r - h - 1);
  if (n_alpha > guard || as.size() > guard / bs.size()) fail(Errc::TooLarge, "w-sum enumeration exceeds the guard");

  BigInt lhs = 0;
#pragma omp parallel
  {
    BigInt local = 0;
    std::vector<Elem> a(static_cast<std::size_t>(m) + 1, f.zero());
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t ii = 0; ii < static_cast<std::int64_t>(n_alpha); ++ii) {
      std::uint64_t x = static_cast<std::uint64_t>(ii);
      for (int i = h; i <= m; ++i, x /= f.q()) a[i] = Elem{static_cast<std::uint32_t>(x % f.q())};
      const Profile p = profile(f, a);
      if (p.r != r || p.strict_rho != r) continue;
      const Poly a1 = char_polys(Seq(f, a)).a1;
      local += gcd(a1, U).norm() * gcd(a1, V).norm();
    }
#pragma omp critical
    lhs += local;
  }

  // stratify coprime pairs by W1 = (A, W)
  const Poly W = U * V;
  BigInt rhs = 0;
  for (const Poly& A : as) {
    const BigInt w1 = gcd(A, W).norm();
    for (const Poly& B : bs)
      if (!B.is_zero() && gcd(A, B).deg() == 0) rhs += w1;
  }
  return {Rational(lhs), Rational(rhs)};
}

}  // namespace hfq
