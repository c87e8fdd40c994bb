#include "hfq/error.hpp"
#include "hfq/poly.hpp"

namespace hfq {

Poly poly_from_index(const Field& f, std::uint64_t index, int len, bool monic_top) {
  std::vector<Elem> v(static_cast<std::size_t>(len) + (monic_top ? 1 : 0), f.zero());
  for (int i = 0; i < len; ++i, index /= f.q()) v[i] = Elem{static_cast<std::uint32_t>(index % f.q())};
  if (monic_top) v[len] = f.one();
  return Poly(f, std::move(v));
}

std::uint64_t index_of_low(const Poly& p, int len) {
  std::uint64_t idx = 0;
  for (int i = len - 1; i >= 0; --i) idx = idx * p.field().q() + p.coeff(i).id;
  return idx;
}

PolySet::PolySet(const Field& f, PolyKind kind, int n) : f_(&f), kind_(kind), n_(n) {
  const std::uint64_t q = f.q();
  switch (kind) {
    case PolyKind::All: size_ = n < 0 ? 0 : (q - 1) * checked_pow(q, n); break;
    case PolyKind::Monic: size_ = n < 0 ? 0 : checked_pow(q, n); break;
    case PolyKind::AllUpTo: size_ = n < 0 ? 1 : checked_pow(q, n + 1); break;
    case PolyKind::MonicUpTo:
      size_ = 0;
      for (int m = 0; m <= n; ++m) size_ += checked_pow(q, m);
      break;
  }
}

Poly PolySet::at(std::uint64_t i) const {
  if (i >= size_) fail(Errc::OutOfRange, "enumeration index out of range");
  const Field& f = *f_;
  switch (kind_) {
    case PolyKind::All: {
      const std::uint64_t block = checked_pow(f.q(), n_);
      Poly low = poly_from_index(f, i % block, n_, false);
      return low + Poly::monomial(f, Elem{static_cast<std::uint32_t>(1 + i / block)}, n_);
    }
    case PolyKind::Monic: return poly_from_index(f, i, n_, true);
    case PolyKind::AllUpTo: return n_ < 0 ? Poly(f) : poly_from_index(f, i, n_ + 1, false);
    case PolyKind::MonicUpTo: {
      for (int m = 0;; ++m) {
        const std::uint64_t block = checked_pow(f.q(), m);
        if (i < block) return poly_from_index(f, i, m, true);
        i -= block;
      }
    }
  }
  return Poly(f);
}

}  // namespace hfq
