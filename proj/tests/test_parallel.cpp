// Parallel kernels against their serial reference versions, and against
// themselves under different thread counts.
#include <doctest.h>

#include <omp.h>

#include "hfq/analytic.hpp"
#include "hfq/charsum.hpp"
#include "hfq/hankel.hpp"
#include "hfq/variance.hpp"

using namespace hfq;

namespace {

Poly P(const Field& f, std::initializer_list<long long> c) { return Poly::from_ints(f, c); }

template <class Fn>
auto with_threads(int n, Fn&& fn) {
  const int saved = omp_get_max_threads();
  omp_set_num_threads(n);
  auto out = fn();
  omp_set_num_threads(saved);
  return out;
}

}  // namespace

TEST_CASE("census") {
  Field f(5);
  for (int n = 2; n <= 5; ++n) {
    const Census ref = reference::census_enumerate(f, n, 1);
    CHECK(with_threads(1, [&] { return census_enumerate(f, n, 1); }) == ref);
    CHECK(with_threads(4, [&] { return census_enumerate(f, n, 1); }) == ref);
  }
}

TEST_CASE("brute-force variance") {
  Field f(3);
  const Poly U = P(f, {1, 0, 1}), V = P(f, {0, 0, 0, 1});
  for (int n = 4; n <= 8; ++n)
    for (int h : {0, 2, n / 2}) {
      const Rational ref = reference::variance_bruteforce(U, V, n, h);
      CHECK(with_threads(1, [&] { return variance_bruteforce(U, V, n, h); }) == ref);
      CHECK(with_threads(3, [&] { return variance_bruteforce(U, V, n, h); }) == ref);
    }
}

TEST_CASE("character sum") {
  Field f(3);
  const Poly U = P(f, {1, 0, 1}), V = P(f, {0, 1});
  for (int n = 3; n <= 6; ++n)
    for (int h : {0, 1, 3}) {
      const Rational ref = reference::variance_charsum(U, V, n, h);
      CHECK(with_threads(1, [&] { return variance_charsum(U, V, n, h, SumMode::Exact); }) == ref);
      CHECK(with_threads(4, [&] { return variance_charsum(U, V, n, h, SumMode::Exact); }) == ref);
      CHECK(with_threads(4, [&] { return variance_charsum(U, V, n, h, SumMode::Fast); }) == ref);
    }
}

TEST_CASE("phi sums") {
  Field f(3);
  const Poly T = P(f, {0, 1}), T1 = P(f, {1, 1});
  for (int k = 0; k <= 6; ++k) {
    const Rational ref = reference::phi_ratio_sum(T1, T, k);
    CHECK(with_threads(1, [&] { return phi_ratio_sum(T1, T, k); }) == ref);
    CHECK(with_threads(4, [&] { return phi_ratio_sum(T1, T, k); }) == ref);
  }
}

TEST_CASE("identities are thread-count independent") {
  Field f(3);
  const Poly U = P(f, {1, 0, 1}), T = P(f, {0, 1}), one = P(f, {1});
  const auto a1 = with_threads(1, [&] { return kernel_sum_identity(U, T, 6, 3, 3).lhs; });
  const auto a4 = with_threads(4, [&] { return kernel_sum_identity(U, T, 6, 3, 3).lhs; });
  CHECK(a1 == a4);
  const auto b1 = with_threads(1, [&] { return w_sum_identity(one, T, 8, 0, 3).lhs; });
  const auto b4 = with_threads(4, [&] { return w_sum_identity(one, T, 8, 0, 3).lhs; });
  CHECK(b1 == b4);
}
