#include "hfq/variance.hpp"

#include <cmath>
#include <map>
#include <vector>

#include <omp.h>

#include "hfq/error.hpp"

namespace hfq {

namespace {

// Largest e with 2e + d <= deg B, or -1 when no non-zero term fits.
int half_range(int deg_b, int d) { return deg_b < d ? -1 : (deg_b - d) / 2; }

// Coefficients 0..n of W X^2 for every X in A_{<=l}; row-major, n+1 wide.
std::vector<Elem> scaled_squares(const Poly& W, int l, int n) {
  const Field& f = W.field();
  PolySet xs(f, PolyKind::AllUpTo, l);
  std::vector<Elem> out(xs.size() * static_cast<std::size_t>(n + 1), f.zero());
  for (std::uint64_t i = 0; i < xs.size(); ++i) {
    const Poly X = xs.at(i);
    const Poly P = W * X * X;
    for (int k = 0; k <= P.deg(); ++k) out[i * (n + 1) + k] = P.coeff(k);
  }
  return out;
}

Rational variance_from_classes(std::uint32_t q, int n, int h, const std::vector<std::uint64_t>& sums) {
  BigInt total = 0;
  for (auto x : sums) total += BigInt(static_cast<unsigned long>(x));
  const Rational mean(total, BigInt(static_cast<unsigned long>(sums.size())));
  Rational acc = 0;
  for (auto x : sums) {
    Rational d = Rational(BigInt(static_cast<unsigned long>(x))) - mean;
    acc += d * d;
  }
  Rational r = acc * rational_pow(q, h - n);
  r.canonicalize();
  return r;
}

std::vector<std::uint64_t> fold_classes(const std::vector<std::uint64_t>& tally, std::uint64_t block) {
  std::vector<std::uint64_t> sums(tally.size() / block, 0);
  for (std::size_t i = 0; i < tally.size(); ++i) sums[i / block] += tally[i];
  return sums;
}

}  // namespace

std::uint64_t s_count(const Poly& U, const Poly& V, const Poly& B) {
  check_pair(U, V);
  if (B.is_zero()) return 1;
  const Field& f = U.field();
  const int eu = half_range(B.deg(), U.deg());
  const int ev = half_range(B.deg(), V.deg());
  std::uint64_t count = 0;
  for (const Poly& E : PolySet(f, PolyKind::AllUpTo, eu)) {
    const Poly rest = B - U * E * E;
    for (const Poly& F : PolySet(f, PolyKind::AllUpTo, ev))
      if (V * F * F == rest) ++count;
  }
  return count;
}

std::uint64_t interval_sum(const Poly& U, const Poly& V, const Poly& A, int h) {
  std::uint64_t total = 0;
  for (const Poly& C : PolySet(A.field(), PolyKind::AllUpTo, h - 1)) total += s_count(U, V, A + C);
  return total;
}

Rational mean_formula(const Poly& U, const Poly& V, int n, int h) {
  if (!U.is_monic() || !V.is_monic()) fail(Errc::NotMonic, "U and V must be monic");
  if (h < 0 || h > n) fail(Errc::OutOfRange, "need 0 <= h <= n");
  const int twice = 2 * h + 1 - U.deg() - V.deg();
  if (twice % 2 != 0) fail(Errc::ExponentNotInteger, "deg U + deg V must be odd");
  Rational r = 2 * rational_pow(U.field().q(), twice / 2);
  r.canonicalize();
  return r;
}

std::vector<std::uint64_t> interval_class_sums(const Poly& U, const Poly& V, int n, int h, std::uint64_t guard) {
  const ThmParams tp = make_params(U, V, n, h);
  const Field& f = U.field();
  const std::uint64_t q = f.q();
  const int eu = half_range(n, tp.deg_u), ev = half_range(n, tp.deg_v);
  const std::uint64_t ne = checked_pow(q, eu + 1), nf = checked_pow(q, ev + 1);
  const std::uint64_t cells = checked_pow(q, n);
  if (cells > guard || ne > guard / nf) fail(Errc::TooLarge, "brute-force variance exceeds the guard");
  const std::vector<Elem> ue = scaled_squares(U, eu, n), vf = scaled_squares(V, ev, n);
  const std::size_t w = static_cast<std::size_t>(n) + 1;

  std::vector<std::uint64_t> tally(cells, 0);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(cells, 0);
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t ie = 0; ie < static_cast<std::int64_t>(ne); ++ie) {
      const Elem* a = &ue[static_cast<std::size_t>(ie) * w];
      for (std::uint64_t jf = 0; jf < nf; ++jf) {
        const Elem* b = &vf[jf * w];
        if (f.add(a[n], b[n]) != f.one()) continue;
        std::uint64_t idx = 0;
        for (int k = n - 1; k >= 0; --k) idx = idx * q + f.add(a[k], b[k]).id;
        ++local[idx];
      }
    }
#pragma omp critical
    for (std::size_t i = 0; i < cells; ++i) tally[i] += local[i];
  }
  return fold_classes(tally, checked_pow(q, h));
}

Rational variance_bruteforce(const Poly& U, const Poly& V, int n, int h, std::uint64_t guard) {
  return variance_from_classes(U.field().q(), n, h, interval_class_sums(U, V, n, h, guard));
}

namespace reference {

Rational variance_bruteforce(const Poly& U, const Poly& V, int n, int h, std::uint64_t guard) {
  const ThmParams tp = make_params(U, V, n, h);
  const Field& f = U.field();
  PolySet es(f, PolyKind::AllUpTo, half_range(n, tp.deg_u));
  PolySet fs(f, PolyKind::AllUpTo, half_range(n, tp.deg_v));
  if (es.size() > guard / fs.size()) fail(Errc::TooLarge, "brute-force variance exceeds the guard");
  std::map<std::uint64_t, std::uint64_t> tally;
  for (const Poly& E : es)
    for (const Poly& F : fs) {
      const Poly B = U * E * E + V * F * F;
      if (B.deg() == n && B.is_monic()) ++tally[index_of_low(B, n)];
    }
  const std::uint64_t block = checked_pow(f.q(), h);
  std::vector<std::uint64_t> sums(checked_pow(f.q(), n - h), 0);
  for (const auto& [idx, c] : tally) sums[idx / block] += c;
  return variance_from_classes(f.q(), n, h, sums);
}

}  // namespace reference

BigInt gcd_weight_sum(const Poly& W, int k1, int k2, bool c2_monic) {
  const Field& f = W.field();
  BigInt total = 0;
  for (const Poly& C2 : PolySet(f, c2_monic ? PolyKind::MonicUpTo : PolyKind::AllUpTo, k2)) {
    const Poly g = gcd(C2, W);
    // C1 in A_{<=k1} divisible by g: the multiples g * D with deg D <= k1 - deg g, plus 0
    const long free = k1 >= g.deg() ? k1 - g.deg() + 1 : 0;
    total += big_pow(f.q(), free) * g.norm();
  }
  return total;
}

Rational f_formula(const Poly& U, const Poly& V, int n, int h) {
  const ThmParams tp = make_params(U, V, n, h);
  const std::uint32_t q = U.field().q();
  const int sp = tp.sp, tpp = tp.tp, s = tp.s, t = tp.t;
  BigInt acc = 0;  // scaled by q^{n-h}
  const int lo = tp.even ? sp + 1 : tpp + 1;
  for (int r1 = lo; r1 <= n - h; ++r1) {
    BigInt b, c;
    if (tp.even) {
      b = gcd_weight_sum(U, sp + s - r1, r1 - sp - 1, true);
      c = gcd_weight_sum(V, tpp + t - r1 - 1, r1 - tpp - 2, false);
    } else {
      b = gcd_weight_sum(U, sp + s - r1 - 1, r1 - sp - 2, false);
      c = gcd_weight_sum(V, tpp + t - r1, r1 - tpp - 1, true);
    }
    acc += big_pow(q, r1) * b * c;
  }
  const int half = (tp.deg_u + tp.deg_v + 1) / 2;
  Rational r = Rational(4 * (q - 1) * acc) * rational_pow(q, -(n - h) - half);
  r.canonicalize();
  return r;
}

long double f_bound(const Poly& U, const Poly& V) {
  check_pair(U, V);
  if (U.deg() < 2 || V.deg() < 2) fail(Errc::BoundUndefined, "bound needs deg U, deg V >= 2");
  const long double q = U.field().q();
  const long double lq = std::log(q);
  const int half = (U.deg() + V.deg() + 1) / 2;
  return 4.0L * std::pow(q, static_cast<long double>(half)) * (std::log(static_cast<long double>(U.deg())) / lq) *
         (std::log(static_cast<long double>(V.deg())) / lq);
}

Rational m_factor(const Poly& U, const Poly& V) {
  if (gcd(U, V).deg() != 0) fail(Errc::NotCoprime, "U and V must be coprime");
  const Poly W = U * V;
  if (W.deg() < 1) fail(Errc::PreconditionViolated, "UV must be non-constant");
  Rational r(BigInt(1), W.norm());
  for (const auto& fc : factor(W).factors) {
    const BigInt p = fc.prime.norm();
    r *= 1 + Rational(p - 1, p + 1) * fc.mult;
  }
  r.canonicalize();
  return r;
}

std::string_view case_name(CaseLabel c) noexcept {
  switch (c) {
    case CaseLabel::Case1: return "Case1";
    case CaseLabel::Case2: return "Case2";
    case CaseLabel::Case3: return "Case3";
    case CaseLabel::Uncovered: return "Uncovered";
  }
  return "Uncovered";
}

namespace {

CaseLabel classify(const ThmParams& tp) {
  const int bound = tp.even ? tp.sp + tp.s : tp.tp + tp.t;
  if (tp.h >= bound) return CaseLabel::Case1;
  if (tp.n2 - 1 <= tp.h) return CaseLabel::Case2;
  if (3 * (tp.deg_u + tp.deg_v + 1) <= tp.h && tp.h < std::min(tp.sp, tp.tp) - 1) return CaseLabel::Case3;
  return CaseLabel::Uncovered;
}

}  // namespace

CaseLabel case_classify(const Poly& U, const Poly& V, int n, int h) { return classify(make_params(U, V, n, h)); }

VarianceReport theorem_predict(const Poly& U, const Poly& V, int n, int h) {
  VarianceReport rep;
  rep.params = make_params(U, V, n, h);
  rep.q = U.field().q();
  rep.label = classify(rep.params);
  const std::uint32_t q = rep.q;
  switch (rep.label) {
    case CaseLabel::Case1: rep.theorem = Rational(0); break;
    case CaseLabel::Case2: rep.theorem = rational_pow(q, h) * f_formula(U, V, n, h); break;
    case CaseLabel::Case3: {
      const Rational qh = rational_pow(q, h);
      Rational main = 4 * (1 - Rational(1, q)) * qh * m_factor(U, V) * (Rational(n, 2) - h);
      main.canonicalize();
      const int n1 = rep.params.n1, n2 = rep.params.n2;
      Rational second = rational_pow(q, 2 * h - (n2 - 1)) * f_formula(U, V, n, n1 - 1);
      second.canonicalize();
      rep.main_term = main;
      rep.secondary_term = second;
      rep.theorem = main + second;
      const Poly W = U * V;
      Rational e1 = qh / Rational(W.norm());
      e1.canonicalize();
      rep.error_scale = std::make_pair(e1, rational_pow(q, h + 2) * W.deg());
      break;
    }
    case CaseLabel::Uncovered: break;
  }
  return rep;
}

}  // namespace hfq
