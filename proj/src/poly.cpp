#include "hfq/poly.hpp"

#include <algorithm>
#include <utility>

#include "hfq/error.hpp"

namespace hfq {

Poly::Poly(const Field& f, std::vector<Elem> coeffs) : f_(&f), c_(std::move(coeffs)) { normalize(); }

Poly Poly::constant(const Field& f, Elem c) { return Poly(f, {c}); }

Poly Poly::monomial(const Field& f, Elem c, int d) {
  if (d < 0) fail(Errc::OutOfRange, "negative monomial degree");
  std::vector<Elem> v(static_cast<std::size_t>(d) + 1, f.zero());
  v.back() = c;
  return Poly(f, std::move(v));
}

Poly Poly::from_ints(const Field& f, std::initializer_list<long long> c) {
  return from_ints(f, std::vector<long long>(c));
}

Poly Poly::from_ints(const Field& f, const std::vector<long long>& c) {
  std::vector<Elem> v;
  v.reserve(c.size());
  for (auto x : c) v.push_back(f.from_int(x));
  return Poly(f, std::move(v));
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == f_->zero()) c_.pop_back();
}

void Poly::check_field(const Poly& o) const {
  if (!f_->same_as(*o.f_)) fail(Errc::MixedField, "polynomials over different fields");
}

BigInt Poly::norm() const {
  if (is_zero()) return 0;
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), f_->q(), static_cast<unsigned long>(deg()));
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(f_->inv(lead()));
}

Poly Poly::scaled(Elem c) const {
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = f_->mul(c_[i], c);
  return Poly(*f_, std::move(v));
}

Poly Poly::shifted(int k) const {
  if (is_zero()) return *this;
  std::vector<Elem> v(static_cast<std::size_t>(k), f_->zero());
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(*f_, std::move(v));
}

Poly Poly::operator-() const {
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = f_->neg(c_[i]);
  return Poly(*f_, std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
  check_field(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), f_->zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = f_->add(c_[i], o.c_[i]);
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_field(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), f_->zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = f_->sub(c_[i], o.c_[i]);
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_field(b);
  const Field& f = *a.f_;
  if (a.is_zero() || b.is_zero()) return Poly(f);
  std::vector<Elem> v(a.c_.size() + b.c_.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == f.zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = f.add(v[i + j], f.mul(a.c_[i], b.c_[j]));
  }
  return Poly(f, std::move(v));
}

std::string Poly::literal() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ',';
    s += f_->format(c_[i]);
  }
  return s;
}

std::string Poly::pretty() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = deg(); i >= 0; --i) {
    Elem c = c_[i];
    if (c == f_->zero()) continue;
    if (!s.empty()) s += " + ";
    if (i == 0 || c != f_->one()) s += f_->format(c);
    if (i >= 1) s += "T";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(Errc::DivideByZero, "division by the zero polynomial");
  const Field& f = a.field();
  if (a.deg() < b.deg()) return {Poly(f), a};
  std::vector<Elem> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.deg();
  const Elem li = f.inv(b.lead());
  std::vector<Elem> qv(static_cast<std::size_t>(a.deg() - db) + 1, f.zero());
  for (int i = a.deg(); i >= db; --i) {
    const Elem c = f.mul(r[i], li);
    qv[i - db] = c;
    if (c == f.zero()) continue;
    for (int j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(c, bc[j]));
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly(f, std::move(qv)), Poly(f, std::move(r))};
}

bool divides(const Poly& d, const Poly& a) { return (a % d).is_zero(); }

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) fail(Errc::BothZero, "gcd(0, 0) is undefined");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Xgcd xgcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) fail(Errc::BothZero, "gcd(0, 0) is undefined");
  const Field& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f, f.one()), s1(f);
  Poly t0(f), t1 = Poly::constant(f, f.one());
  while (!r1.is_zero()) {
    auto [qt, rm] = divmod(r0, r1);
    r0 = std::exchange(r1, rm);
    s0 = std::exchange(s1, s0 - qt * s1);
    t0 = std::exchange(t1, t0 - qt * t1);
  }
  const Elem li = f.inv(r0.lead());
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

Poly poly_pow(const Poly& a, unsigned e) {
  Poly r = Poly::constant(a.field(), a.field().one());
  Poly b = a;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Factorization factor(const Poly& a) {
  if (a.is_zero()) fail(Errc::Zero, "cannot factor zero");
  const Field& f = a.field();
  Factorization out{a.lead(), {}};
  Poly rest = a.monic();
  for (int d = 1; 2 * d <= rest.deg(); ++d) {
    PolySet cands(f, PolyKind::Monic, d);
    for (std::uint64_t i = 0; i < cands.size() && 2 * d <= rest.deg(); ++i) {
      Poly P = cands.at(i);
      int e = 0;
      for (;;) {
        auto [qt, rm] = divmod(rest, P);
        if (!rm.is_zero()) break;
        rest = std::move(qt);
        ++e;
      }
      if (e) out.factors.push_back({std::move(P), e});
    }
  }
  if (rest.deg() >= 1) {
    auto it = std::find_if(out.factors.begin(), out.factors.end(),
                           [&](const Factor& x) { return x.prime == rest; });
    if (it != out.factors.end())
      ++it->mult;
    else
      out.factors.push_back({rest, 1});
  }
  return out;
}

bool is_irreducible(const Poly& p) {
  if (p.deg() < 1) return false;
  auto fz = factor(p);
  return fz.factors.size() == 1 && fz.factors[0].mult == 1;
}

Poly rad(const Poly& a) {
  Poly r = Poly::constant(a.field(), a.field().one());
  for (const auto& fc : factor(a).factors) r = r * fc.prime;
  return r;
}

int multiplicity(const Poly& a, const Poly& P) {
  if (a.is_zero()) fail(Errc::Zero, "multiplicity in zero");
  if (!P.is_monic() || !is_irreducible(P)) fail(Errc::NotPrime, "P must be monic irreducible");
  int e = 0;
  Poly rest = a;
  for (;;) {
    auto [qt, rm] = divmod(rest, P);
    if (!rm.is_zero()) return e;
    rest = std::move(qt);
    ++e;
  }
}

BigInt phi(const Poly& a) {
  if (a.is_zero()) fail(Errc::Zero, "phi(0)");
  if (!a.is_monic()) fail(Errc::NotMonic, "phi needs a monic argument");
  BigInt r = 1;
  for (const auto& fc : factor(a).factors) {
    BigInt n = fc.prime.norm();
    BigInt t;
    mpz_pow_ui(t.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(fc.mult - 1));
    r *= t * (n - 1);
  }
  return r;
}

bool in_interval(const Poly& b, const Poly& a, int h) { return (b - a).deg() < h; }

std::vector<Elem> coeff_vector(const Poly& b, int k) {
  if (b.deg() > k) fail(Errc::DegreeTooLarge, "deg B exceeds vector width");
  std::vector<Elem> v(static_cast<std::size_t>(k) + 1, b.field().zero());
  for (int i = 0; i <= b.deg(); ++i) v[i] = b.coeff(i);
  return v;
}

std::vector<Elem> laurent_expand(const Poly& b, const Poly& a, int depth) {
  if (a.is_zero()) fail(Errc::ZeroDenominator, "Laurent expansion over zero");
  if (!a.is_monic()) fail(Errc::NotMonic, "denominator must be monic");
  if (b.deg() > a.deg()) fail(Errc::DegreeMismatch, "deg B > deg A");
  const Field& f = a.field();
  const int d = a.deg();
  std::vector<Elem> al(static_cast<std::size_t>(std::max(depth, -1) + 1), f.zero());
  for (int i = 0; i <= depth; ++i) {
    Elem v = b.coeff(d - i);
    for (int j = std::max(0, i - d); j < i; ++j) v = f.sub(v, f.mul(a.coeff(d - i + j), al[j]));
    al[i] = v;
  }
  return al;
}

}  // namespace hfq
