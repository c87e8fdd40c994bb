#include "hfq/analytic.hpp"

#include <omp.h>

#include "hfq/error.hpp"

namespace hfq {

namespace {

void check_pair(const Poly& w2, const Poly& w3) {
  if (!w2.is_monic() || !w3.is_monic()) fail(Errc::NotMonic, "W2 and W3 must be monic");
  if (gcd(w2, w3).deg() != 0) fail(Errc::NotCoprime, "W2 and W3 must be coprime");
}

// Monic polynomials of degree <= k laid out degree by degree; offset[d] is
// the first index of M_d.
struct MonicSieve {
  std::vector<std::uint64_t> offset;
  std::vector<std::uint64_t> phi;
  std::vector<std::uint32_t> wmask;  // bit i set when the i-th prime of W divides
};

std::uint64_t monic_index(const Poly& p, const std::vector<std::uint64_t>& offset) {
  return offset[static_cast<std::size_t>(p.deg())] + index_of_low(p, p.deg());
}

MonicSieve sieve(const Field& f, int k, const std::vector<Poly>& wprimes) {
  MonicSieve s;
  const std::uint64_t q = f.q();
  s.offset.assign(static_cast<std::size_t>(k) + 2, 0);
  for (int d = 0; d <= k; ++d) s.offset[d + 1] = s.offset[d] + checked_pow(q, d);
  const std::uint64_t total = s.offset[k + 1];
  s.phi.assign(total, 0);
  s.wmask.assign(total, 0);
  std::vector<bool> composite(total, false);
  for (int d = 0; d <= k; ++d) {
    const std::uint64_t norm = checked_pow(q, d);
    for (std::uint64_t i = s.offset[d]; i < s.offset[d + 1]; ++i) s.phi[i] = norm;
  }
  for (int d = 1; d <= k; ++d) {
    const std::uint64_t norm = checked_pow(q, d);
    for (std::uint64_t i = s.offset[d]; i < s.offset[d + 1]; ++i) {
      if (composite[i]) continue;
      const Poly P = poly_from_index(f, i - s.offset[d], d, true);
      std::uint32_t bit = 0;
      for (std::size_t w = 0; w < wprimes.size(); ++w)
        if (wprimes[w] == P) bit = 1u << w;
      for (int e = 0; e + d <= k; ++e) {
        const std::uint64_t count = checked_pow(q, e);
        for (std::uint64_t j = 0; j < count; ++j) {
          const Poly C = poly_from_index(f, j, e, true);
          const std::uint64_t m = monic_index(P * C, s.offset);
          if (e > 0) composite[m] = true;
          s.phi[m] = s.phi[m] / norm * (norm - 1);
          s.wmask[m] |= bit;
        }
      }
    }
  }
  return s;
}

struct Target {
  std::vector<Poly> primes;  // primes of W = W2 W3
  std::uint32_t need = 0;    // bits for the primes of W3
};

Target target_of(const Poly& w2, const Poly& w3) {
  Target t;
  const Poly W = w2 * w3;
  if (W.deg() >= 1)
    for (const auto& fc : factor(W).factors) {
      if (divides(fc.prime, w3)) t.need |= 1u << t.primes.size();
      t.primes.push_back(fc.prime);
    }
  if (t.primes.size() > 31) fail(Errc::TooLarge, "too many prime factors in W");
  return t;
}

// Per-degree sums of phi(B) over monic B of that degree meeting the radical condition.
std::vector<BigInt> degree_sums(const Field& f, const Target& t, int k, std::uint64_t guard) {
  if (checked_pow(f.q(), k + 1) > guard) fail(Errc::TooLarge, "phi-sum enumeration exceeds the guard");
  const MonicSieve s = sieve(f, k, t.primes);
  std::vector<BigInt> out(static_cast<std::size_t>(k) + 1, 0);
  for (int d = 0; d <= k; ++d) {
    const auto lo = static_cast<std::int64_t>(s.offset[d]), hi = static_cast<std::int64_t>(s.offset[d + 1]);
    unsigned long long acc = 0;
#pragma omp parallel for reduction(+ : acc) schedule(static)
    for (std::int64_t i = lo; i < hi; ++i)
      if (s.wmask[static_cast<std::size_t>(i)] == t.need) acc += s.phi[static_cast<std::size_t>(i)];
    out[d] = BigInt(static_cast<unsigned long>(acc));
  }
  return out;
}

Rational degree_term(std::uint32_t q, int d, const BigInt& phisum) {
  Rational r = Rational((q - 1) * phisum) * rational_pow(q, -2 * d);
  r.canonicalize();
  return r;
}

}  // namespace

Rational phi_ratio_sum(const Poly& w2, const Poly& w3, int k, std::uint64_t guard) {
  check_pair(w2, w3);
  const Field& f = w2.field();
  Rational total = 0;
  if (k < 0) return total;
  const auto sums = degree_sums(f, target_of(w2, w3), k, guard);
  for (int d = 0; d <= k; ++d) total += degree_term(f.q(), d, sums[d]);
  return total;
}

Rational phi_slope(const Poly& w2, const Poly& w3) {
  check_pair(w2, w3);
  const std::uint32_t q = w2.field().q();
  Rational r(BigInt((q - 1) * (q - 1)), BigInt(q));
  for (const Poly& P : target_of(w2, w3).primes) {
    const BigInt n = P.norm();
    r *= Rational(n, n + 1);
    if (divides(P, w3)) r /= Rational(n);
  }
  r.canonicalize();
  return r;
}

PhiSumReport convergence_report(const Poly& w2, const Poly& w3, int k_max, std::uint64_t guard) {
  check_pair(w2, w3);
  if (k_max < 0) fail(Errc::OutOfRange, "k_max must be non-negative");
  const Field& f = w2.field();
  const auto sums = degree_sums(f, target_of(w2, w3), k_max, guard);
  PhiSumReport rep{w2, w3, k_max, {}, {}, phi_slope(w2, w3)};
  Rational running = 0;
  for (int d = 0; d <= k_max; ++d) {
    const Rational inc = degree_term(f.q(), d, sums[d]);
    running += inc;
    rep.increments.push_back(inc);
    rep.partial_sums.push_back(running);
  }
  return rep;
}

namespace reference {

Rational phi_ratio_sum(const Poly& w2, const Poly& w3, int k) {
  check_pair(w2, w3);
  const Poly W = w2 * w3;
  const Poly target = w3.deg() >= 1 ? rad(w3) : w3;
  Rational total = 0;
  for (const Poly& B : PolySet(w2.field(), PolyKind::AllUpTo, k)) {
    if (B.is_zero()) continue;
    const Poly g = gcd(B, W);
    const Poly rg = g.deg() >= 1 ? rad(g) : g;
    if (!(rg == target)) continue;
    const BigInt nb = B.norm();
    total += Rational(phi(B.monic()), nb * nb);
  }
  total.canonicalize();
  return total;
}

}  // namespace reference

}  // namespace hfq
