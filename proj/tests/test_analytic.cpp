#include <doctest.h>

#include "hfq/analytic.hpp"
#include "hfq/error.hpp"

using namespace hfq;

namespace {

Poly P(const Field& f, std::initializer_list<long long> c) { return Poly::from_ints(f, c); }

// Direct sum with phi counted by enumeration rather than factorization.
Rational naive_sum(const Poly& w2, const Poly& w3, int k) {
  const Field& f = w2.field();
  const Poly W = w2 * w3;
  Rational total = 0;
  for (const Poly& B : PolySet(f, PolyKind::AllUpTo, k)) {
    if (B.is_zero()) continue;
    // every prime of W divides B exactly when it divides W3
    bool ok = true;
    for (const Poly& Pm : PolySet(f, PolyKind::MonicUpTo, W.deg())) {
      if (Pm.deg() < 1 || !divides(Pm, W) || !is_irreducible(Pm)) continue;
      ok = ok && divides(Pm, B) == divides(Pm, w3);
    }
    if (!ok) continue;
    std::uint64_t ph = 0;
    if (B.deg() == 0) {
      ph = 1;
    } else {
      for (const Poly& C : PolySet(f, PolyKind::AllUpTo, B.deg() - 1))
        if (!C.is_zero() && gcd(C, B).deg() == 0) ++ph;
    }
    const BigInt nb = B.norm();
    total += Rational(BigInt(static_cast<unsigned long>(ph)), nb * nb);
  }
  total.canonicalize();
  return total;
}

}  // namespace

TEST_CASE("small sums") {
  Field f(3);
  const Poly one = P(f, {1}), T = P(f, {0, 1});
  CHECK(phi_ratio_sum(one, one, 0) == 2);
  // deg <= 1, coprime to T: the two units plus 2 * #{T + 1, T + 2} with phi = 2 over 9
  CHECK(phi_ratio_sum(T, one, 1) == 2 + Rational(8, 9));
  CHECK(phi_ratio_sum(T, one, 1) == naive_sum(T, one, 1));
  CHECK_THROWS_AS(phi_ratio_sum(T, P(f, {0, 0, 1}), 2), Error);
  CHECK_THROWS_AS(phi_ratio_sum(P(f, {0, 2}), one, 2), Error);
}

TEST_CASE("sieve matches direct enumeration") {
  Field f(3);
  const Poly one = P(f, {1}), T = P(f, {0, 1}), T1 = P(f, {1, 1});
  const std::vector<std::pair<Poly, Poly>> ws{{one, one}, {T, one}, {one, T}, {T1, T}, {T * T1, one},
                                               {P(f, {1, 0, 1}), T * T}};
  for (const auto& [w2, w3] : ws)
    for (int k = 0; k <= 4; ++k) {
      const Rational s = phi_ratio_sum(w2, w3, k);
      CHECK(s == reference::phi_ratio_sum(w2, w3, k));
      if (k <= 3) CHECK(s == naive_sum(w2, w3, k));
    }
}

TEST_CASE("slopes") {
  Field f(3);
  const Poly one = P(f, {1}), T = P(f, {0, 1}), T1 = P(f, {1, 1});
  CHECK(phi_slope(one, one) == Rational(4, 3));
  CHECK(phi_slope(T * T1, one) == Rational(3, 4));
  CHECK(phi_slope(T * T1, one) == phi_slope(T1 * T, one));
  CHECK(phi_slope(T, T1) == phi_slope(T, T1 * T1));
}

TEST_CASE("convergence report") {
  Field f(3);
  const Poly one = P(f, {1}), T = P(f, {0, 1});
  const PhiSumReport a = convergence_report(one, one, 10);
  REQUIRE(a.partial_sums.size() == 11);
  for (std::size_t k = 0; k < a.increments.size(); ++k) {
    CHECK(a.increments[k] >= 0);
    if (k > 0) CHECK(a.partial_sums[k] >= a.partial_sums[k - 1]);
    CHECK(a.partial_sums[k] == phi_ratio_sum(one, one, static_cast<int>(k)));
  }
  // with W = 1 every degree d >= 1 contributes (q - 1) q^{-2d} sum phi = (q - 1)^2 / q
  for (std::size_t k = 1; k < a.increments.size(); ++k) CHECK(a.increments[k] == Rational(4, 3));

  const PhiSumReport b = convergence_report(T, one, 5);
  const PhiSumReport c = convergence_report(T, one, 10);
  for (std::size_t k = 0; k < b.partial_sums.size(); ++k) CHECK(b.partial_sums[k] == c.partial_sums[k]);
  CHECK(b.slope == c.slope);
  CHECK_THROWS_AS(convergence_report(one, one, 30, 1000), Error);
}
