#include "hfq/charsum.hpp"

#include <algorithm>
#include <vector>

#include <omp.h>

#include "hfq/error.hpp"

namespace hfq {

namespace {

void check_length(const Seq& alpha, int l) {
  if (l < 0 || alpha.n() != 2 * l) fail(Errc::LengthMismatch, "sequence length must be 2l + 1");
}

// [E]^T H_{l+1,l+1}(alpha) [E] evaluated as a bilinear form.
Elem bilinear(const Seq& alpha, const Poly& E, int l) {
  const Field& f = alpha.field();
  Elem acc = f.zero();
  for (int i = 0; i <= l; ++i) {
    const Elem ei = E.coeff(i);
    if (ei.id == 0) continue;
    for (int j = 0; j <= l; ++j) acc = f.add(acc, f.mul(f.mul(ei, E.coeff(j)), alpha[i + j]));
  }
  return acc;
}

QuadSumResult quad_sum(const Seq& alpha, int l, PolyKind kind) {
  check_length(alpha, l);
  const Field& f = alpha.field();
  std::vector<std::int64_t> counts(f.p(), 0);
  for (const Poly& E : PolySet(f, kind, l)) ++counts[f.psi_exponent(bilinear(alpha, E, l))];
  QuadSumResult out{CycInt::from_counts(f.p(), counts), std::nullopt, profile(alpha)};
  out.mag_sq = out.value.mag_sq().as_integer();
  return out;
}

// Exponent e with |sum|^2 = q^e, or -1 when the sum vanishes.
int magsq_exponent(int l, int r, int strict_pi, bool monic) {
  if (!monic) return 2 * l + 2 - r;
  if (strict_pi == 0) return 2 * l - r;
  if (strict_pi == 1) return 2 * l + 1 - r;
  return -1;
}

// Coefficients of E^2 for every E of one side, stored contiguously.
struct SquareTable {
  int width = 0;  // 2l + 1
  std::uint64_t count = 0;
  std::vector<Elem> sq;
};

SquareTable squares(const Field& f, int l, bool monic) {
  SquareTable t;
  if (l < 0) return t;
  t.width = 2 * l + 1;
  PolySet set(f, monic ? PolyKind::Monic : PolyKind::AllUpTo, l);
  t.count = set.size();
  t.sq.assign(t.count * static_cast<std::uint64_t>(t.width), f.zero());
  for (std::uint64_t i = 0; i < t.count; ++i) {
    const Poly E = set.at(i);
    const Poly E2 = E * E;
    for (int k = 0; k <= E2.deg(); ++k) t.sq[i * t.width + k] = E2.coeff(k);
  }
  return t;
}

// |sum over the table of psi(beta . E^2)|^2, exactly.
BigInt table_magsq(const Field& f, const SquareTable& t, const Elem* beta, std::vector<std::int64_t>& counts) {
  std::fill(counts.begin(), counts.end(), 0);
  for (std::uint64_t i = 0; i < t.count; ++i) {
    const Elem* e = &t.sq[i * t.width];
    Elem acc = f.zero();
    for (int k = 0; k < t.width; ++k) acc = f.add(acc, f.mul(beta[k], e[k]));
    ++counts[f.psi_exponent(acc)];
  }
  auto v = CycInt::from_counts(f.p(), counts).mag_sq().as_integer();
  if (!v) fail(Errc::PreconditionViolated, "quadratic-form magnitude is not a rational integer");
  return *v;
}

// beta_i = sum_j W_j alpha_{i+j}, i < out_len.
void odot_raw(const Field& f, const std::vector<Elem>& alpha, const Poly& W, int out_len, Elem* out) {
  for (int i = 0; i < out_len; ++i) {
    Elem acc = f.zero();
    for (int j = 0; j <= W.deg(); ++j) acc = f.add(acc, f.mul(W.coeff(j), alpha[i + j]));
    out[i] = acc;
  }
}

Rational scale(std::uint32_t q, int n, int h, const BigInt& sum) {
  Rational r(4 * sum * big_pow(q, 2 * h), big_pow(q, 2 * n + 1));
  r.canonicalize();
  return r;
}

}  // namespace

QuadSumResult quad_sum_all(const Seq& alpha, int l) { return quad_sum(alpha, l, PolyKind::AllUpTo); }
QuadSumResult quad_sum_monic(const Seq& alpha, int l) { return quad_sum(alpha, l, PolyKind::Monic); }

BigInt magsq_via_profile(const Seq& alpha, int l, bool monic) {
  check_length(alpha, l);
  const Profile p = profile(alpha);
  const int e = magsq_exponent(l, p.r, p.strict_pi, monic);
  return e < 0 ? BigInt(0) : big_pow(alpha.field().q(), e);
}

Rational variance_charsum(const Poly& U, const Poly& V, int n, int h, SumMode mode, std::uint64_t guard) {
  const ThmParams tp = make_params(U, V, n, h);
  const Field& f = U.field();
  const std::uint64_t q = f.q();
  const std::uint64_t n_alpha = checked_pow(q, n + 1 - h);
  const std::uint64_t block = checked_pow(q, n - h);  // alpha_h..alpha_{n-1} all zero iff idx % block == 0
  const bool u_monic = tp.even, v_monic = !tp.even;

  if (mode == SumMode::Fast) {
    if (n_alpha > guard) fail(Errc::TooLarge, "fast character sum exceeds the guard");
    const int max_e = 2 * (tp.sp + tp.tp) + 5;
    std::vector<std::uint64_t> total(static_cast<std::size_t>(max_e), 0);
#pragma omp parallel
    {
      std::vector<std::uint64_t> tally(total.size(), 0);
      std::vector<Elem> alpha(static_cast<std::size_t>(n) + 1);
      std::vector<Elem> bu(static_cast<std::size_t>(2 * tp.sp + 1)), bv(static_cast<std::size_t>(2 * tp.tp + 2));
#pragma omp for schedule(dynamic, 256)
      for (std::int64_t ii = 0; ii < static_cast<std::int64_t>(n_alpha); ++ii) {
        const auto idx = static_cast<std::uint64_t>(ii);
        if (idx % block == 0) continue;
        std::uint64_t x = idx;
        for (int i = 0; i < h; ++i) alpha[i] = f.zero();
        for (int i = h; i <= n; ++i, x /= q) alpha[i] = Elem{static_cast<std::uint32_t>(x % q)};
        int ex = 0, ey = 0;
        if (tp.sp >= 0) {
          odot_raw(f, alpha, U, 2 * tp.sp + 1, bu.data());
          auto [r, spi] = rank_and_strict_pi(f, std::span<const Elem>(bu.data(), 2 * tp.sp + 1));
          ex = magsq_exponent(tp.sp, r, spi, u_monic);
        }
        if (ex < 0) continue;
        if (tp.tp >= 0) {
          odot_raw(f, alpha, V, 2 * tp.tp + 1, bv.data());
          auto [r, spi] = rank_and_strict_pi(f, std::span<const Elem>(bv.data(), 2 * tp.tp + 1));
          ey = magsq_exponent(tp.tp, r, spi, v_monic);
        }
        if (ey < 0) continue;
        ++tally[static_cast<std::size_t>(ex + ey)];
      }
#pragma omp critical
      for (std::size_t e = 0; e < total.size(); ++e) total[e] += tally[e];
    }
    BigInt sum = 0;
    for (std::size_t e = 0; e < total.size(); ++e)
      if (total[e]) sum += BigInt(static_cast<unsigned long>(total[e])) * big_pow(f.q(), static_cast<long>(e));
    return scale(f.q(), n, h, sum);
  }

  const SquareTable tu = squares(f, tp.sp, u_monic);
  const SquareTable tv = squares(f, tp.tp, v_monic);
  const std::uint64_t per_alpha = tu.count + tv.count;
  if (per_alpha != 0 && n_alpha > guard / per_alpha) fail(Errc::TooLarge, "exact character sum exceeds the guard");
  BigInt sum = 0;
#pragma omp parallel
  {
    BigInt local = 0;
    std::vector<std::int64_t> counts(f.p());
    std::vector<Elem> alpha(static_cast<std::size_t>(n) + 1);
    std::vector<Elem> bu(static_cast<std::size_t>(tu.width + 1)), bv(static_cast<std::size_t>(tv.width + 1));
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t ii = 0; ii < static_cast<std::int64_t>(n_alpha); ++ii) {
      const auto idx = static_cast<std::uint64_t>(ii);
      if (idx % block == 0) continue;
      std::uint64_t x = idx;
      for (int i = 0; i < h; ++i) alpha[i] = f.zero();
      for (int i = h; i <= n; ++i, x /= q) alpha[i] = Elem{static_cast<std::uint32_t>(x % q)};
      BigInt mx = 1, my = 1;
      if (tp.sp >= 0) {
        odot_raw(f, alpha, U, tu.width, bu.data());
        mx = table_magsq(f, tu, bu.data(), counts);
      }
      if (mx == 0) continue;
      if (tp.tp >= 0) {
        odot_raw(f, alpha, V, tv.width, bv.data());
        my = table_magsq(f, tv, bv.data(), counts);
      }
      local += mx * my;
    }
#pragma omp critical
    sum += local;
  }
  return scale(f.q(), n, h, sum);
}

namespace reference {

Rational variance_charsum(const Poly& U, const Poly& V, int n, int h, std::uint64_t guard) {
  const ThmParams tp = make_params(U, V, n, h);
  const Field& f = U.field();
  const std::uint64_t n_alpha = checked_pow(f.q(), n + 1 - h);
  if (n_alpha > guard) fail(Errc::TooLarge, "character sum exceeds the guard");
  BigInt sum = 0;
  for (std::uint64_t idx = 0; idx < n_alpha; ++idx) {
    std::vector<Elem> a(static_cast<std::size_t>(n) + 1, f.zero());
    std::uint64_t x = idx;
    for (int i = h; i <= n; ++i, x /= f.q()) a[i] = Elem{static_cast<std::uint32_t>(x % f.q())};
    if (std::all_of(a.begin(), a.end() - 1, [](Elem e) { return e.id == 0; })) continue;
    const Seq alpha(f, a);
    BigInt mx = 1, my = 1;
    if (tp.sp >= 0) {
      const Seq bu = odot(alpha, U, tp.s);
      mx = *(tp.even ? quad_sum_monic(bu, tp.sp) : quad_sum_all(bu, tp.sp)).mag_sq;
    }
    if (tp.tp >= 0) {
      const Seq bv = odot(alpha, V, tp.t);
      my = *(tp.even ? quad_sum_all(bv, tp.tp) : quad_sum_monic(bv, tp.tp)).mag_sq;
    }
    sum += mx * my;
  }
  Rational r(4 * sum * big_pow(f.q(), 2 * h), big_pow(f.q(), 2 * n + 1));
  r.canonicalize();
  return r;
}

}  // namespace reference

}  // namespace hfq
