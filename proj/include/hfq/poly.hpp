#pragma once

#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <string>
#include <vector>

#include "hfq/field.hpp"

namespace hfq {

/// Degree of the zero polynomial; compares below every real degree.
inline constexpr int kNegInf = std::numeric_limits<int>::min();

/// Polynomial over F_q, coefficients low-to-high with no trailing zeros.
class Poly {
 public:
  explicit Poly(const Field& f) : f_(&f) {}
  Poly(const Field& f, std::vector<Elem> coeffs);

  static Poly constant(const Field& f, Elem c);
  static Poly monomial(const Field& f, Elem c, int d);
  static Poly T(const Field& f) { return monomial(f, f.one(), 1); }
  /// Coefficients taken as integers mod p; handy for prime fields.
  static Poly from_ints(const Field& f, std::initializer_list<long long> c);
  static Poly from_ints(const Field& f, const std::vector<long long>& c);

  const Field& field() const noexcept { return *f_; }
  int deg() const noexcept { return c_.empty() ? kNegInf : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == f_->one(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  Elem lead() const noexcept { return c_.empty() ? f_->zero() : c_.back(); }
  Elem coeff(int i) const noexcept {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : f_->zero();
  }
  const std::vector<Elem>& coeffs() const noexcept { return c_; }

  /// |A| = q^deg A, |0| = 0.
  BigInt norm() const;
  /// A divided by its leading coefficient; zero stays zero.
  Poly monic() const;
  Poly scaled(Elem c) const;
  /// A * T^k
  Poly shifted(int k) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.f_->same_as(*b.f_) && a.c_ == b.c_;
  }

  /// Comma-separated coefficients, low-to-high ("0" for zero).
  std::string literal() const;
  /// Human form such as "T^2 + 2T + 1".
  std::string pretty() const;

 private:
  void normalize();
  void check_field(const Poly& o) const;

  const Field* f_;
  std::vector<Elem> c_;
};

struct DivMod {
  Poly quot, rem;
};

/// Throws DivideByZero when b == 0.
DivMod divmod(const Poly& a, const Poly& b);
inline Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quot; }
inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).rem; }
bool divides(const Poly& d, const Poly& a);

/// Monic gcd; throws BothZero.
Poly gcd(const Poly& a, const Poly& b);

struct Xgcd {
  Poly g, s, t;  // s*a + t*b == g, g monic
};
Xgcd xgcd(const Poly& a, const Poly& b);

Poly poly_pow(const Poly& a, unsigned e);

struct Factor {
  Poly prime;
  int mult;
};
struct Factorization {
  Elem unit;
  std::vector<Factor> factors;  // monic primes in enumeration order
};

/// Trial division by monic polynomials in degree order. Throws Zero.
Factorization factor(const Poly& a);
bool is_irreducible(const Poly& p);
/// Product of the distinct monic primes dividing a. Throws Zero.
Poly rad(const Poly& a);
/// Largest e with P^e | a. Throws Zero for a == 0, NotPrime when P is not
/// monic irreducible.
int multiplicity(const Poly& a, const Poly& P);
/// #{C : deg C < deg A, gcd(C, A) = 1} via the Euler product; phi(1) = 1.
BigInt phi(const Poly& a);

bool in_interval(const Poly& b, const Poly& a, int h);
/// [B]_k: entries 0..k. Throws DegreeTooLarge.
std::vector<Elem> coeff_vector(const Poly& b, int k);
/// alpha_0..alpha_depth with B/A = sum alpha_i T^{-i} + O(T^{-depth-1}).
std::vector<Elem> laurent_expand(const Poly& b, const Poly& a, int depth);

enum class PolyKind { All, Monic, AllUpTo, MonicUpTo };

/// The sets A_n, M_n, A_{<=n}, M_{<=n} in a fixed order: coefficient tuples
/// read low-to-high, constant term varying fastest. A_{<=n} for n < 0 is {0};
/// M_{<=n} for n < 0, and A_n, M_n for n < 0, are empty.
class PolySet {
 public:
  PolySet(const Field& f, PolyKind kind, int n);

  std::uint64_t size() const noexcept { return size_; }
  Poly at(std::uint64_t i) const;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Poly;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(const PolySet* s, std::uint64_t i) : s_(s), i_(i) {}
    Poly operator*() const { return s_->at(i_); }
    iterator& operator++() {
      ++i_;
      return *this;
    }
    iterator operator++(int) {
      auto t = *this;
      ++i_;
      return t;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.i_ == b.i_; }

   private:
    const PolySet* s_ = nullptr;
    std::uint64_t i_ = 0;
  };
  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size_}; }

 private:
  const Field* f_;
  PolyKind kind_;
  int n_;
  std::uint64_t size_ = 0;
};

/// Polynomial with the given low-to-high digits (base q indices) and an
/// optional forced leading coefficient one at degree len.
Poly poly_from_index(const Field& f, std::uint64_t index, int len, bool monic_top);
/// Inverse of poly_from_index for the low len coefficients.
std::uint64_t index_of_low(const Poly& p, int len);

}  // namespace hfq
