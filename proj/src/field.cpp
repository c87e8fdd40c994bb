#include "hfq/field.hpp"

#include <algorithm>

#include "hfq/error.hpp"

namespace hfq {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t checked_pow(std::uint64_t base, int e) {
  if (e < 0) fail(Errc::OutOfRange, "negative exponent");
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (base != 0 && r > UINT64_MAX / base) fail(Errc::TooLarge, "power overflows 64 bits");
    r *= base;
  }
  return r;
}

BigInt big_pow(std::uint32_t q, long e) {
  if (e < 0) fail(Errc::OutOfRange, "negative exponent");
  BigInt b;
  mpz_ui_pow_ui(b.get_mpz_t(), q, static_cast<unsigned long>(e));
  return b;
}

Rational rational_pow(std::uint32_t q, long e) {
  BigInt b;
  mpz_ui_pow_ui(b.get_mpz_t(), q, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(b);
  Rational r(BigInt(1), b);
  r.canonicalize();
  return r;
}

namespace {

using Res = std::vector<std::uint32_t>;

// Remainder of a modulo monic g over F_p; both low-to-high.
Res residue_mod(Res a, const Res& g, std::uint32_t p) {
  const std::size_t dg = g.size() - 1;
  while (a.size() > dg) {
    const std::uint32_t c = a.back();
    const std::size_t shift = a.size() - 1 - dg;
    for (std::size_t i = 0; i < dg; ++i)
      a[shift + i] = (a[shift + i] + (p - c) * g[i] % p) % p;
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

bool has_small_factor(const Res& m, std::uint32_t p) {
  const std::size_t k = m.size() - 1;
  for (std::size_t d = 1; 2 * d <= k; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Res g(d + 1);
      std::uint64_t x = idx;
      for (std::size_t i = 0; i < d; ++i, x /= p) g[i] = static_cast<std::uint32_t>(x % p);
      g[d] = 1;
      if (residue_mod(m, g, p).empty()) return true;
    }
  }
  return false;
}

}  // namespace

Field::Field(std::uint32_t p) : Field(p, 1, {}) {}

Field::Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (p == 2) fail(Errc::EvenCharacteristic, "characteristic 2 is not supported");
  if (k == 0) fail(Errc::InvalidModulus, "extension degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) fail(Errc::TooLarge, "field order exceeds " + std::to_string(kMaxOrder));
  }
  q_ = static_cast<std::uint32_t>(q);
  if (k == 1) {
    if (!modulus_.empty()) fail(Errc::InvalidModulus, "prime field takes no modulus");
  } else {
    if (modulus_.size() != k + 1 || modulus_.back() != 1)
      fail(Errc::InvalidModulus, "modulus must be monic of degree k");
    for (auto c : modulus_)
      if (c >= p) fail(Errc::InvalidModulus, "modulus residue out of range");
    if (modulus_[0] == 0 || has_small_factor(modulus_, p))
      fail(Errc::ReducibleModulus, "modulus is reducible over F_p");
  }
  build_tables();
}

std::vector<std::uint32_t> Field::residues(Elem a) const {
  std::vector<std::uint32_t> r(k_);
  std::uint32_t x = a.id;
  for (std::uint32_t i = 0; i < k_; ++i, x /= p_) r[i] = x % p_;
  return r;
}

Elem Field::from_residues(std::span<const std::uint32_t> r) const {
  std::uint32_t id = 0;
  for (std::size_t i = r.size(); i-- > 0;) {
    if (i >= k_ && r[i] % p_ != 0) fail(Errc::InvalidModulus, "too many residues for field element");
    if (i < k_) id = id * p_ + r[i] % p_;
  }
  return Elem{id};
}

Elem Field::from_int(long long v) const noexcept {
  long long m = v % static_cast<long long>(p_);
  if (m < 0) m += p_;
  return Elem{static_cast<std::uint32_t>(m)};
}

Elem Field::inv(Elem a) const {
  if (a.id == 0) fail(Errc::DivideByZero, "inverse of zero");
  return Elem{inv_[a.id]};
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  Elem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::string Field::format(Elem a) const {
  if (k_ == 1) return std::to_string(a.id);
  std::string s = "[";
  auto r = residues(a);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(r[i]);
  }
  return s + "]";
}

void Field::build_tables() {
  const std::size_t qq = static_cast<std::size_t>(q_) * q_;
  add_.assign(qq, 0);
  mul_.assign(qq, 0);
  neg_.assign(q_, 0);
  inv_.assign(q_, 0);
  trace_.assign(q_, 0);

  std::vector<Res> res(q_);
  for (std::uint32_t a = 0; a < q_; ++a) res[a] = residues(Elem{a});
  auto index_of = [&](const Res& r) {
    std::uint32_t id = 0;
    for (std::size_t i = r.size(); i-- > 0;) id = id * p_ + r[i];
    return id;
  };

  for (std::uint32_t a = 0; a < q_; ++a) {
    Res n(k_);
    for (std::uint32_t i = 0; i < k_; ++i) n[i] = (p_ - res[a][i]) % p_;
    neg_[a] = static_cast<std::uint16_t>(index_of(n));
    for (std::uint32_t b = 0; b < q_; ++b) {
      Res s(k_);
      for (std::uint32_t i = 0; i < k_; ++i) s[i] = (res[a][i] + res[b][i]) % p_;
      add_[a * q_ + b] = static_cast<std::uint16_t>(index_of(s));

      Res prod(2 * k_ - 1, 0);
      for (std::uint32_t i = 0; i < k_; ++i)
        for (std::uint32_t j = 0; j < k_; ++j)
          prod[i + j] = (prod[i + j] + res[a][i] * res[b][j]) % p_;
      Res red = k_ == 1 ? prod : residue_mod(prod, modulus_, p_);
      red.resize(k_, 0);
      mul_[a * q_ + b] = static_cast<std::uint16_t>(index_of(red));
    }
  }
  for (std::uint32_t a = 1; a < q_; ++a)
    for (std::uint32_t b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = static_cast<std::uint16_t>(b);
        break;
      }
  for (std::uint32_t a = 0; a < q_; ++a) {
    Elem x{a}, t = zero();
    for (std::uint32_t i = 0; i < k_; ++i) {
      t = add(t, x);
      x = pow(x, p_);
    }
    trace_[a] = t.id;  // lies in F_p, so the index is the residue
  }
}

}  // namespace hfq
