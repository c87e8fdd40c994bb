#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hfq {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Element of F_q stored as its index sum c_i p^i over the residues c_i
/// of the polynomial basis (constant term first). Index 0 is zero, 1 is one.
struct Elem {
  std::uint32_t id = 0;
  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

/// F_q with q = p^k, p odd. Arithmetic goes through precomputed tables, so
/// q is capped at kMaxOrder. Immutable after construction.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1024;

  /// Prime field F_p.
  explicit Field(std::uint32_t p);
  /// F_{p^k} = F_p[X]/(modulus); modulus lists residues low-to-high and must
  /// be monic of degree k. For k == 1 the modulus must be empty.
  Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t k() const noexcept { return k_; }
  std::uint32_t q() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return Elem{1}; }
  /// i-th element in index order, i < q.
  Elem at(std::uint32_t i) const noexcept { return Elem{i}; }
  /// Image of an integer in the prime subfield.
  Elem from_int(long long v) const noexcept;
  Elem from_residues(std::span<const std::uint32_t> r) const;
  std::vector<std::uint32_t> residues(Elem a) const;

  Elem add(Elem a, Elem b) const noexcept { return Elem{add_[a.id * q_ + b.id]}; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem neg(Elem a) const noexcept { return Elem{neg_[a.id]}; }
  Elem mul(Elem a, Elem b) const noexcept { return Elem{mul_[a.id * q_ + b.id]}; }
  /// Throws DivideByZero on a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  bool is_zero(Elem a) const noexcept { return a.id == 0; }

  /// Absolute trace to F_p, as a residue.
  std::uint32_t trace(Elem a) const noexcept { return trace_[a.id]; }
  /// psi(a) = zeta_p^psi_exponent(a).
  std::uint32_t psi_exponent(Elem a) const noexcept { return trace_[a.id]; }

  /// "2" for k == 1, "[1,2]" otherwise.
  std::string format(Elem a) const;

  bool same_as(const Field& o) const noexcept {
    return this == &o || (p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_);
  }

 private:
  void build_tables();

  std::uint32_t p_, k_, q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint16_t> add_, mul_, neg_, inv_;
  std::vector<std::uint32_t> trace_;
};

bool is_prime(std::uint64_t n) noexcept;

/// base^e in 64 bits; throws TooLarge on overflow. e < 0 is rejected.
std::uint64_t checked_pow(std::uint64_t base, int e);
/// q^e for e >= 0.
BigInt big_pow(std::uint32_t q, long e);
/// q^e exactly, e may be negative.
Rational rational_pow(std::uint32_t q, long e);

/// Exact element sum c_i zeta^i of Z[zeta_p]. Kept in canonical form with
/// c_{p-1} == 0, using 1 + zeta + ... + zeta^{p-1} == 0.
class CycInt {
 public:
  CycInt() = default;
  explicit CycInt(std::uint32_t p);
  static CycInt integer(std::uint32_t p, const BigInt& v);
  static CycInt zeta_pow(std::uint32_t p, std::uint64_t i);
  /// sum_i counts[i] zeta^i; counts.size() == p.
  static CycInt from_counts(std::uint32_t p, std::span<const std::int64_t> counts);

  std::uint32_t p() const noexcept { return p_; }
  const std::vector<BigInt>& coeffs() const noexcept { return c_; }

  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  friend bool operator==(const CycInt& a, const CycInt& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }

  /// zeta^i -> zeta^{-i}
  CycInt conj() const;
  CycInt mag_sq() const { return *this * conj(); }
  /// c_0 when the value is a rational integer.
  std::optional<BigInt> as_integer() const;
  bool is_zero() const;

 private:
  void canonicalize();
  void check_same(const CycInt& o) const;

  std::uint32_t p_ = 0;
  std::vector<BigInt> c_;
};

}  // namespace hfq
