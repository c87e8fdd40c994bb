#include <algorithm>
#include <vector>

#include <omp.h>

#include "hfq/error.hpp"
#include "hfq/hankel.hpp"

namespace hfq {

namespace {

std::uint64_t space_size(const Field& f, int n, int h, std::uint64_t guard) {
  if (n < 0 || h < 0 || h > n + 1) fail(Errc::OutOfRange, "need n >= 0 and 0 <= h <= n + 1");
  const std::uint64_t size = checked_pow(f.q(), n + 1 - h);
  if (size > guard) fail(Errc::TooLarge, "enumeration of " + std::to_string(size) + " sequences exceeds the guard");
  return size;
}

// Flat tally indexed by r * (n1 + 1) + rho.
struct Tally {
  int width;
  std::vector<std::uint64_t> standard, strict;
  explicit Tally(int n1)
      : width(n1 + 1), standard(static_cast<std::size_t>(width * width)), strict(standard.size()) {}
  void add(const Profile& p) {
    ++standard[static_cast<std::size_t>(p.r * width + p.rho)];
    ++strict[static_cast<std::size_t>(p.r * width + p.strict_rho)];
  }
  void merge(const Tally& o) {
    for (std::size_t i = 0; i < standard.size(); ++i) {
      standard[i] += o.standard[i];
      strict[i] += o.strict[i];
    }
  }
  Census to_census() const {
    Census c;
    for (int r = 0; r < width; ++r)
      for (int rho = 0; rho <= r; ++rho) {
        const auto i = static_cast<std::size_t>(r * width + rho);
        if (standard[i]) c.standard[{r, rho, r - rho}] = standard[i];
        if (strict[i]) c.strict[{r, rho, r - rho}] = strict[i];
      }
    return c;
  }
};

void fill(const Field& f, std::uint64_t idx, int h, std::vector<Elem>& a) {
  std::fill(a.begin(), a.begin() + h, f.zero());
  for (std::size_t i = static_cast<std::size_t>(h); i < a.size(); ++i, idx /= f.q())
    a[i] = Elem{static_cast<std::uint32_t>(idx % f.q())};
}

}  // namespace

BigInt census_formula(int n, int h, int r, int rho, int pi, std::uint32_t q) {
  if (n < 0 || h < 0 || h > n + 1 || r != rho + pi || rho < 0 || pi < 0) return 0;
  const int n1 = (n + 2) / 2;
  const int even = n % 2 == 0 ? 1 : 0;
  if (rho == 0 && r <= std::min(n1 - even, n - h + 1)) return r == 0 ? BigInt(1) : (q - 1) * big_pow(q, r - 1);
  if (h + 1 <= rho && rho <= n1 - 1 && pi <= n1 - rho - even) {
    if (pi == 0) return (q - 1) * big_pow(q, 2 * rho - h - 1);
    return BigInt((q - 1) * (q - 1)) * big_pow(q, 2 * rho + pi - h - 2);
  }
  if (rho == n1 && pi == 0 && h + 1 <= n1) return (q - 1) * big_pow(q, n - h);
  return 0;
}

BigInt census_aggregate(int n, int h, int r, std::uint32_t q) {
  if (n < 0 || h < 0 || h > n + 1 || r < 0) return 0;
  const int n1 = (n + 2) / 2;
  if (r == 0) return 1;
  if (r <= std::min(h, n - h + 1)) return (q - 1) * big_pow(q, r - 1);
  if (h + 1 <= r && r <= n1 - 1) return BigInt(q * q - 1) * big_pow(q, 2 * r - h - 2);
  if (r == n1 && h + 1 <= n1) return big_pow(q, n - h + 1) - big_pow(q, 2 * n1 - h - 2);
  return 0;
}

Census census_enumerate(const Field& f, int n, int h, std::uint64_t guard) {
  const std::uint64_t size = space_size(f, n, h, guard);
  const int n1 = (n + 2) / 2;
  Tally total(n1);
#pragma omp parallel
  {
    Tally local(n1);
    std::vector<Elem> a(static_cast<std::size_t>(n) + 1);
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(size); ++idx) {
      fill(f, static_cast<std::uint64_t>(idx), h, a);
      local.add(profile(f, a));
    }
#pragma omp critical
    total.merge(local);
  }
  return total.to_census();
}

namespace reference {

Census census_enumerate(const Field& f, int n, int h, std::uint64_t guard) {
  const std::uint64_t size = space_size(f, n, h, guard);
  Census c;
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    std::vector<Elem> a(static_cast<std::size_t>(n) + 1, f.zero());
    std::uint64_t x = idx;
    for (int i = h; i <= n; ++i, x /= f.q()) a[i] = Elem{static_cast<std::uint32_t>(x % f.q())};
    const Profile p = profile(Seq(f, a));
    ++c.standard[{p.r, p.rho, p.pi}];
    ++c.strict[{p.r, p.strict_rho, p.strict_pi}];
  }
  return c;
}

}  // namespace reference

}  // namespace hfq
