#include "hfq/error.hpp"
#include "hfq/field.hpp"

namespace hfq {

CycInt::CycInt(std::uint32_t p) : p_(p), c_(p) {
  if (p < 2) fail(Errc::NotPrime, "cyclotomic ring needs p >= 2");
}

CycInt CycInt::integer(std::uint32_t p, const BigInt& v) {
  CycInt z(p);
  z.c_[0] = v;
  return z;
}

CycInt CycInt::zeta_pow(std::uint32_t p, std::uint64_t i) {
  CycInt z(p);
  z.c_[i % p] = 1;
  z.canonicalize();
  return z;
}

CycInt CycInt::from_counts(std::uint32_t p, std::span<const std::int64_t> counts) {
  if (counts.size() != p) fail(Errc::LengthMismatch, "count vector length must equal p");
  CycInt z(p);
  for (std::uint32_t i = 0; i < p; ++i) z.c_[i] = static_cast<long>(counts[i]);
  z.canonicalize();
  return z;
}

void CycInt::check_same(const CycInt& o) const {
  if (p_ != o.p_) fail(Errc::MixedCharacteristic, "cyclotomic integers over different p");
}

void CycInt::canonicalize() {
  const BigInt top = c_[p_ - 1];
  if (top == 0) return;
  for (auto& c : c_) c -= top;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  check_same(o);
  for (std::uint32_t i = 0; i < p_; ++i) c_[i] += o.c_[i];
  canonicalize();
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  check_same(o);
  for (std::uint32_t i = 0; i < p_; ++i) c_[i] -= o.c_[i];
  canonicalize();
  return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  a.check_same(b);
  const std::uint32_t p = a.p_;
  CycInt r(p);
  for (std::uint32_t i = 0; i < p; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::uint32_t j = 0; j < p; ++j) {
      if (b.c_[j] == 0) continue;
      r.c_[(i + j) % p] += a.c_[i] * b.c_[j];
    }
  }
  r.canonicalize();
  return r;
}

CycInt CycInt::conj() const {
  CycInt r(p_);
  for (std::uint32_t i = 0; i < p_; ++i) r.c_[(p_ - i) % p_] = c_[i];
  r.canonicalize();
  return r;
}

std::optional<BigInt> CycInt::as_integer() const {
  for (std::uint32_t i = 1; i + 1 < p_; ++i)
    if (c_[i] != 0) return std::nullopt;
  return c_[0];
}

bool CycInt::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

}  // namespace hfq
