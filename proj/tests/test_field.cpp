#include <doctest.h>

#include <random>

#include "hfq/error.hpp"
#include "hfq/field.hpp"

using namespace hfq;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an hfq::Error");
  return Errc::ParseError;
}

CycInt zeta(std::uint32_t p, std::uint64_t i) { return CycInt::zeta_pow(p, i); }

}  // namespace

TEST_CASE("field construction and validation") {
  Field f3(3), f5(5);
  CHECK(f3.q() == 3);
  CHECK(f5.q() == 5);
  Field f9(3, 2, {1, 0, 1});
  CHECK(f9.q() == 9);

  CHECK(code_of([] { Field f(9); }) == Errc::NotPrime);
  CHECK(code_of([] { Field f(2); }) == Errc::EvenCharacteristic);
  // T^2 + 2 = (T + 1)(T + 2) over F_3
  CHECK(code_of([] { Field f(3, 2, {2, 0, 1}); }) == Errc::ReducibleModulus);
  CHECK(code_of([] { Field f(3, 2, {1, 1}); }) == Errc::InvalidModulus);
}

TEST_CASE("prime field arithmetic matches integers mod p") {
  Field f(5);
  for (std::uint32_t a = 0; a < 5; ++a)
    for (std::uint32_t b = 0; b < 5; ++b) {
      CHECK(f.add(Elem{a}, Elem{b}).id == (a + b) % 5);
      CHECK(f.mul(Elem{a}, Elem{b}).id == (a * b) % 5);
      CHECK(f.sub(Elem{a}, Elem{b}).id == (a + 5 - b) % 5);
    }
  for (std::uint32_t a = 1; a < 5; ++a) CHECK(f.mul(Elem{a}, f.inv(Elem{a})) == f.one());
  CHECK(code_of([&] { f.inv(f.zero()); }) == Errc::DivideByZero);
}

TEST_CASE("F_9 is a field") {
  Field f(3, 2, {1, 0, 1});
  for (std::uint32_t a = 1; a < 9; ++a) {
    CHECK(f.mul(Elem{a}, f.inv(Elem{a})) == f.one());
    CHECK(f.pow(Elem{a}, 8) == f.one());
  }
  // T = residues (0, 1), T^2 = -1
  const Elem t = f.from_residues(std::vector<std::uint32_t>{0, 1});
  CHECK(f.mul(t, t) == f.neg(f.one()));
  CHECK(f.format(t) == "[0,1]");
}

TEST_CASE("trace") {
  Field f3(3);
  CHECK(f3.trace(Elem{2}) == 2);
  CHECK(f3.trace(Elem{0}) == 0);
  CHECK(f3.psi_exponent(Elem{1}) == 1);

  Field f9(3, 2, {1, 0, 1});
  const Elem t = f9.from_residues(std::vector<std::uint32_t>{0, 1});
  // T + T^3 with T^3 computed by repeated squaring: T^2 = -1 so T^3 = -T
  const Elem t3 = f9.mul(f9.mul(t, t), t);
  CHECK(t3 == f9.neg(t));
  CHECK(f9.trace(t) == 0);
  // additivity over every pair
  for (std::uint32_t a = 0; a < 9; ++a)
    for (std::uint32_t b = 0; b < 9; ++b)
      CHECK(f9.trace(f9.add(Elem{a}, Elem{b})) == (f9.trace(Elem{a}) + f9.trace(Elem{b})) % 3);
  // trace of the prime subfield element c is k * c
  CHECK(f9.trace(f9.one()) == 2);
}

TEST_CASE("orthogonality of psi in exact arithmetic") {
  for (auto mod : {std::vector<std::uint32_t>{}, std::vector<std::uint32_t>{1, 0, 1}}) {
    for (std::uint32_t p : {3u, 5u}) {
      if (!mod.empty() && p != 3) continue;
      Field f(p, mod.empty() ? 1 : 2, mod);
      for (std::uint32_t b = 0; b < f.q(); ++b) {
        CycInt sum(f.p());
        for (std::uint32_t a = 0; a < f.q(); ++a) sum += zeta(f.p(), f.psi_exponent(f.mul(Elem{a}, Elem{b})));
        if (b == 0)
          CHECK(sum == CycInt::integer(f.p(), f.q()));
        else
          CHECK(sum.is_zero());
      }
    }
  }
}

TEST_CASE("cyclotomic integer ring operations") {
  CHECK((zeta(3, 1) + zeta(3, 2)) == CycInt::integer(3, -1));
  CHECK(*(zeta(3, 1) + zeta(3, 2)).as_integer() == -1);
  CHECK(zeta(3, 1) * zeta(3, 2) == CycInt::integer(3, 1));
  CHECK(zeta(5, 1).conj() == zeta(5, 4));
  CHECK(*CycInt::integer(3, 3).mag_sq().as_integer() == 9);
  CHECK((zeta(3, 0) + zeta(3, 1) + zeta(3, 2)).mag_sq().is_zero());

  // Gauss-type sum over F_3: sum_a zeta^{a^2} = 1 + 2 zeta
  CycInt g = zeta(3, 0) + zeta(3, 1) + zeta(3, 1);
  CHECK(*g.mag_sq().as_integer() == 3);
  CHECK(!zeta(5, 1).as_integer().has_value());
  CHECK(*CycInt::integer(5, 9).as_integer() == 9);

  bool threw = false;
  try {
    (void)(zeta(3, 1) + zeta(5, 1));
  } catch (const Error& e) {
    threw = e.code() == Errc::MixedCharacteristic;
  }
  CHECK(threw);
}

TEST_CASE("cyclotomic ring axioms on random triples") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    auto rnd = [&] {
      std::vector<std::int64_t> c(p);
      for (auto& x : c) x = coef(rng);
      return CycInt::from_counts(p, c);
    };
    for (int trial = 0; trial < 50; ++trial) {
      const CycInt a = rnd(), b = rnd(), c = rnd();
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a.coeffs()[p - 1] == 0);
      CHECK(a.conj().conj() == a);
      // |a|^2 is fixed by conjugation
      CHECK(a.mag_sq().conj() == a.mag_sq());
    }
  }
}
