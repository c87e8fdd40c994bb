#include "hfq/checks.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

#include <omp.h>

#include "hfq/charsum.hpp"
#include "hfq/error.hpp"

namespace hfq {

void Tally::merge(const Tally& o) {
  checked += o.checked;
  if (o.failed != 0 && failed == 0) first_failure = o.first_failure;
  failed += o.failed;
}

namespace {

// Failures found by parallel loops; the lowest index wins so reports do not
// depend on the thread count.
struct Worst {
  std::uint64_t index = std::numeric_limits<std::uint64_t>::max();
  std::string what;
  void offer(std::uint64_t i, const std::string& w) {
    if (i < index) {
      index = i;
      what = w;
    }
  }
};

std::uint64_t seq_count(const Field& f, int len, std::uint64_t guard, std::uint64_t per_item) {
  const std::uint64_t n = checked_pow(f.q(), len);
  if (per_item != 0 && n > guard / per_item) fail(Errc::TooLarge, "campaign exceeds the guard");
  return n;
}

std::uint64_t index_of(const Field& f, const std::vector<Elem>& v) {
  std::uint64_t x = 0;
  for (std::size_t i = v.size(); i-- > 0;) x = x * f.q() + v[i].id;
  return x;
}

BigInt power_or_zero(std::uint32_t q, int e) { return e < 0 ? BigInt(0) : big_pow(q, e); }

// Runs body(i, tally) for i < count in parallel and merges deterministically.
template <class Body>
Tally parallel_tally(std::uint64_t count, Body body) {
  Tally out;
  Worst worst;
#pragma omp parallel
  {
    Tally local;
    Worst lw;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t ii = 0; ii < static_cast<std::int64_t>(count); ++ii) {
      const auto i = static_cast<std::uint64_t>(ii);
      std::string why;
      local.checked += 1;
      bool ok;
      try {
        ok = body(i, why);
      } catch (const Error& e) {
        ok = false;
        why = std::string(errc_name(e.code())) + ": " + e.what();
      }
      if (!ok) {
        ++local.failed;
        lw.offer(i, why);
      }
    }
#pragma omp critical
    {
      out.checked += local.checked;
      out.failed += local.failed;
      if (lw.index != std::numeric_limits<std::uint64_t>::max()) worst.offer(lw.index, lw.what);
    }
  }
  out.first_failure = worst.what;
  return out;
}

}  // namespace

std::vector<CensusRow> census_rows(const Field& f, int n_lo, int n_hi, int h_lo, int h_hi, std::uint64_t guard) {
  std::vector<CensusRow> rows;
  const std::uint32_t q = f.q();
  for (int n = std::max(0, n_lo); n <= n_hi; ++n)
    for (int h = std::max(0, h_lo); h <= std::min(h_hi, n + 1); ++h) {
      const Census c = census_enumerate(f, n, h, guard);
      const int n1 = (n + 2) / 2;
      BigInt total_formula = 0;
      for (int r = 0; r <= n1; ++r) {
        std::uint64_t agg = 0;
        for (int rho = 0; rho <= r; ++rho) {
          const auto it = c.standard.find({r, rho, r - rho});
          const std::uint64_t got = it == c.standard.end() ? 0 : it->second;
          agg += got;
          rows.push_back({n, h, r, rho, r - rho, census_formula(n, h, r, rho, r - rho, q), got});
        }
        const BigInt fa = census_aggregate(n, h, r, q);
        rows.push_back({n, h, r, -1, -1, fa, agg});
        total_formula += fa;
      }
      // classes missing from the formulas show up here as a shortfall
      std::uint64_t seen = 0;
      for (const auto& kv : c.standard) seen += kv.second;
      rows.push_back({n, h, -1, -1, -1, total_formula, seen});
    }
  return rows;
}

Tally check_kernel_structure(const Field& f, int n, std::uint64_t guard) {
  const std::uint32_t q = f.q();
  std::uint64_t per = 0;
  for (int m = 0; m <= n; ++m) per += checked_pow(q, m + 1);
  const std::uint64_t count = seq_count(f, n + 1, guard, per);

  return parallel_tally(count, [&](std::uint64_t idx, std::string& why) {
    const Seq a = Seq::from_index(f, idx, n);
    const int r = profile(a).r;
    const CharPolys cp = char_polys(a);
    for (int l = 0; l <= n; ++l) {
      const int m = n - l;
      const Matrix h = HankelView(a, l + 1, m + 1).matrix();
      std::vector<std::uint64_t> kernel;
      const std::uint64_t total = checked_pow(q, m + 1);
      std::vector<Elem> v(m + 1);
      for (std::uint64_t x = 0; x < total; ++x) {
        std::uint64_t y = x;
        for (auto& e : v) {
          e = Elem{static_cast<std::uint32_t>(y % q)};
          y /= q;
        }
        bool zero = true;
        for (std::size_t i = 0; i < h.rows && zero; ++i) {
          Elem acc = f.zero();
          for (std::size_t j = 0; j < h.cols; ++j) acc = f.add(acc, f.mul(h(i, j), v[j]));
          zero = acc.id == 0;
        }
        if (zero) kernel.push_back(x);
      }
      std::vector<std::uint64_t> claimed;
      for (const Poly& B1 : PolySet(f, PolyKind::AllUpTo, m - r))
        for (const Poly& B2 : PolySet(f, PolyKind::AllUpTo, m - (n - r + 2))) {
          const Poly c = B1 * cp.a1 + B2 * cp.a2;
          if (c.deg() > m) {
            why = "generator too long for " + a.literal();
            return false;
          }
          claimed.push_back(index_of(f, coeff_vector(c, m)));
        }
      std::sort(claimed.begin(), claimed.end());
      claimed.erase(std::unique(claimed.begin(), claimed.end()), claimed.end());
      if (claimed != kernel) {
        std::ostringstream os;
        os << "alpha=" << a.literal() << " l=" << l << " m=" << m << ": kernel " << kernel.size()
           << " vectors, span " << claimed.size();
        why = os.str();
        return false;
      }
    }
    return true;
  });
}

Tally check_quadform(const Field& f, int l, std::uint64_t guard) {
  const std::uint32_t q = f.q();
  const std::uint64_t count = seq_count(f, 2 * l + 1, guard, 2 * checked_pow(q, l + 1));
  return parallel_tally(count, [&](std::uint64_t idx, std::string& why) {
    const Seq a = Seq::from_index(f, idx, 2 * l);
    const Profile pr = profile(a);
    const QuadSumResult all = quad_sum_all(a, l);
    const QuadSumResult mon = quad_sum_monic(a, l);
    const BigInt want_all = big_pow(q, 2 * l + 2 - pr.r);
    const int e = pr.strict_pi == 0 ? 2 * l - pr.r : pr.strict_pi == 1 ? 2 * l + 1 - pr.r : -1;
    const BigInt want_mon = power_or_zero(q, e);
    const bool ok = all.mag_sq && mon.mag_sq && *all.mag_sq == want_all && *mon.mag_sq == want_mon &&
                    magsq_via_profile(a, l, false) == want_all && magsq_via_profile(a, l, true) == want_mon;
    if (!ok) why = "alpha=" + a.literal();
    return ok;
  });
}

Tally check_reduction(const Field& f, int n, const std::vector<Poly>& ws, std::uint64_t guard) {
  const std::uint64_t count = seq_count(f, n + 1, guard, ws.size() * static_cast<std::uint64_t>(n + 1));
  Tally out;
  for (const Poly& W : ws)
    for (int s = std::max(0, W.deg()); s <= n; ++s) {
      std::uint64_t applicable = 0;
      Tally t = parallel_tally(count, [&](std::uint64_t idx, std::string& why) {
        const Seq al = Seq::from_index(f, idx, n);
        std::optional<Reduction> pred;
        try {
          pred = reduction_profile(al, W, s);
        } catch (const Error& e) {
          if (e.code() != Errc::PreconditionViolated) throw;
          return true;  // outside both claims
        }
        const Reduction& red = *pred;
#pragma omp atomic
        ++applicable;
        const Seq out = odot(al, W, s);
        const Profile got = profile(out);
        bool ok;
        if (red.claim == ReductionClaim::Standard)
          ok = got.r == red.r && got.rho == red.rho && got.pi == red.pi && char_polys(out).a1 == *red.a1;
        else
          ok = got.r == red.r && got.strict_rho == red.rho && got.strict_pi == red.pi;
        if (!ok) why = "alpha=" + al.literal() + " W=" + W.literal() + " s=" + std::to_string(s);
        return ok;
      });
      // sequences outside both claims are not checks
      t.checked = applicable;
      out.merge(t);
    }
  return out;
}

Tally check_bijection(const Field& f, int n, int r, int h, std::uint64_t guard) {
  const std::uint64_t count = seq_count(f, n + 1 - h, guard, 1);
  std::vector<std::pair<Poly, Poly>> images(count, {Poly(f), Poly(f)});
  std::vector<char> member(count, 0);
  Tally out = parallel_tally(count, [&](std::uint64_t idx, std::string& why) {
    std::vector<Elem> a(n + 1, f.zero());
    std::uint64_t x = idx;
    for (int i = h; i <= n; ++i, x /= f.q()) a[i] = Elem{static_cast<std::uint32_t>(x % f.q())};
    const Seq s(f, a);
    const Profile pr = profile(s);
    if (pr.r != r || pr.rho != r) return true;
    member[idx] = 1;
    auto [A, B] = bijection_map(s, h);
    const bool ok = A.is_monic() && A.deg() == r && !B.is_zero() && B.deg() < r - h && gcd(A, B).deg() == 0 &&
                    bijection_inverse(A, B, n, h) == s;
    if (!ok) why = "alpha=" + s.literal();
    images[idx] = {std::move(A), std::move(B)};
    return ok;
  });
  out.checked = 0;
  std::set<std::pair<std::string, std::string>> image;
  for (std::uint64_t i = 0; i < count; ++i)
    if (member[i]) {
      ++out.checked;
      image.insert({images[i].first.literal(), images[i].second.literal()});
    }
  std::uint64_t pairs = 0;
  const PolySet as(f, PolyKind::Monic, r), bs(f, PolyKind::AllUpTo, r - h - 1);
  if (as.size() > guard / std::max<std::uint64_t>(1, bs.size())) fail(Errc::TooLarge, "campaign exceeds the guard");
  for (const Poly& A : as)
    for (const Poly& B : bs)
      if (!B.is_zero() && gcd(A, B).deg() == 0) ++pairs;
  // cardinality: (q - 1) q^{2r - h - 1} members, all images distinct
  const BigInt want = BigInt(f.q() - 1) * big_pow(f.q(), 2 * r - h - 1);
  ++out.checked;
  if (image.size() != out.checked - 1 || image.size() != pairs || want != static_cast<unsigned long>(pairs)) {
    ++out.failed;
    if (out.first_failure.empty()) {
      std::ostringstream os;
      os << "cardinality: members " << out.checked - 1 << ", distinct images " << image.size() << ", coprime pairs "
         << pairs << ", closed form " << want;
      out.first_failure = os.str();
    }
  }
  return out;
}

namespace {

template <class Fn>
Tally identity_sweep(Fn fn, int lo, int hi, const char* what) {
  Tally out;
  for (int r = lo; r <= hi; ++r) {
    IdentitySides sides;
    try {
      sides = fn(r);
    } catch (const Error& e) {
      if (e.code() == Errc::RangeEmpty || e.code() == Errc::OutOfRange) continue;
      throw;
    }
    ++out.checked;
    if (!sides.holds()) {
      ++out.failed;
      if (out.first_failure.empty())
        out.first_failure = std::string(what) + "=" + std::to_string(r) + ": " + sides.lhs.get_str() +
                            " vs " + sides.rhs.get_str();
    }
  }
  return out;
}

}  // namespace

Tally check_kernel_sums(const Poly& U, const Poly& V, int n, int h, std::uint64_t guard) {
  return identity_sweep([&](int r1) { return kernel_sum_identity(U, V, n, h, r1, guard); }, 0, n, "r1");
}

Tally check_w_sums(const Poly& U, const Poly& V, int n, int h, std::uint64_t guard) {
  return identity_sweep([&](int r) { return w_sum_identity(U, V, n, h, r, guard); }, 0, n, "r");
}

}  // namespace hfq
