// One line per acceptance criterion. Exit status is the number of failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hfq/analytic.hpp"
#include "hfq/charsum.hpp"
#include "hfq/checks.hpp"
#include "hfq/error.hpp"
#include "hfq/variance.hpp"

using namespace hfq;

namespace {

Poly P(const Field& f, std::initializer_list<long long> c) { return Poly::from_ints(f, c); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

bool g_quadform_ok = false, g_reduction_ok = false;

std::string tally_text(const Tally& t) {
  std::ostringstream os;
  os << t.checked << " checks, " << t.failed << " failed";
  if (!t.first_failure.empty()) os << " (first: " << t.first_failure << ")";
  return os.str();
}

Outcome census() {
  Field f(3);
  const auto rows = census_rows(f, 0, 7, 0, 8);
  std::uint64_t bad = 0;
  std::string first;
  for (const CensusRow& r : rows)
    if (!r.match()) {
      if (bad++ == 0)
        first = "n=" + std::to_string(r.n) + " h=" + std::to_string(r.h) + " r=" + std::to_string(r.r) +
                " rho=" + std::to_string(r.rho);
    }
  return {bad == 0 && !rows.empty(), std::to_string(rows.size()) + " rows, " + std::to_string(bad) + " mismatched" +
                                         (first.empty() ? "" : " (first: " + first + ")")};
}

Outcome kernel_structure() {
  Field f(3);
  Tally t;
  for (int n = 0; n <= 6; ++n) t.merge(check_kernel_structure(f, n));
  return {t.ok(), tally_text(t)};
}

Outcome quadform() {
  Tally t;
  {
    Field f(3);
    for (int l = 0; l <= 3; ++l) t.merge(check_quadform(f, l));
  }
  {
    Field f(5);
    for (int l = 0; l <= 2; ++l) t.merge(check_quadform(f, l));
  }
  g_quadform_ok = t.ok();
  return {t.ok(), tally_text(t)};
}

Outcome reduction() {
  Field f(3);
  const std::vector<Poly> ws{P(f, {1}), P(f, {0, 1}), P(f, {1, 1}), P(f, {1, 0, 1})};
  Tally t;
  for (int n = 0; n <= 6; ++n) t.merge(check_reduction(f, n, ws));
  g_reduction_ok = t.ok();
  return {t.ok(), tally_text(t)};
}

Outcome bijection() {
  Field f(3);
  Tally t;
  for (int h = 0; h <= 2; ++h) t.merge(check_bijection(f, 6, 3, h));
  return {t.ok(), tally_text(t)};
}

Outcome variance_identity() {
  std::uint64_t checked = 0, bad = 0;
  std::string first;
  for (std::uint32_t p : {3u, 5u}) {
    Field f(p);
    const Poly U = P(f, {1}), V = P(f, {0, 1});
    for (int n = 0; n <= 6; ++n)
      for (int h = 0; h <= n; ++h) {
        const Rational brute = variance_bruteforce(U, V, n, h);
        const Rational cs = variance_charsum(U, V, n, h, SumMode::Exact);
        ++checked;
        if (brute != cs && bad++ == 0)
          first = "q=" + std::to_string(p) + " n=" + std::to_string(n) + " h=" + std::to_string(h);
      }
  }
  Field f(3);
  const Poly U = P(f, {1}), V = P(f, {0, 1});
  const bool fix = variance_bruteforce(U, V, 2, 0) == Rational(40, 9) && variance_bruteforce(U, V, 2, 1) == 0 &&
                   variance_charsum(U, V, 2, 0, SumMode::Exact) == Rational(40, 9);
  std::string d = std::to_string(checked) + " (q,n,h) compared, " + std::to_string(bad) + " differ";
  if (!first.empty()) d += " (first: " + first + ")";
  d += fix ? "; fixtures 40/9 and 0 hold" : "; fixture mismatch";
  return {bad == 0 && fix, d};
}

Outcome case1() {
  Field f(3);
  const std::vector<std::pair<Poly, Poly>> prs{{P(f, {1}), P(f, {0, 1})}, {P(f, {1, 0, 1}), P(f, {0, 1})}};
  std::uint64_t checked = 0, bad = 0;
  for (const auto& [U, V] : prs)
    for (int n = 0; n <= 8; ++n)
      for (int h = 0; h <= n; ++h) {
        CaseLabel c;
        try {
          c = case_classify(U, V, n, h);
        } catch (const Error&) {
          continue;
        }
        if (c != CaseLabel::Case1) continue;
        ++checked;
        if (variance_bruteforce(U, V, n, h) != 0) ++bad;
      }
  return {checked > 0 && bad == 0, std::to_string(checked) + " Case 1 instances, " + std::to_string(bad) + " non-zero"};
}

Outcome case2() {
  Field f(3);
  const Poly U = P(f, {1, 0, 1}), V = P(f, {0, 1});
  std::uint64_t checked = 0, bad = 0;
  std::ostringstream os;
  for (int n = 0; n <= 8; ++n)
    for (int h = 0; h <= n; ++h) {
      CaseLabel c;
      try {
        c = case_classify(U, V, n, h);
      } catch (const Error&) {
        continue;
      }
      if (c != CaseLabel::Case2) continue;
      ++checked;
      const Rational brute = variance_bruteforce(U, V, n, h);
      const Rational pred = *theorem_predict(U, V, n, h).theorem;
      if (brute != pred) {
        ++bad;
        Rational ratio = brute == 0 ? Rational(0) : pred / brute;
        ratio.canonicalize();
        os << " (n=" << n << ",h=" << h << ": observed " << brute << ", q^h f " << pred << ", ratio " << ratio << ")";
      }
    }
  const Rational fixture = variance_bruteforce(U, V, 6, 3);
  const bool fixture_ok = fixture == 648;

  // the bound needs deg U, deg V >= 2
  const Poly U2 = P(f, {1, 0, 1}), V2 = P(f, {0, 0, 0, 1});
  const long double bound = f_bound(U2, V2);
  std::uint64_t bound_checked = 0, bound_bad = 0;
  long double worst = 0;
  for (int n = 0; n <= 12; ++n)
    for (int h = 0; h <= n; ++h) {
      try {
        if (case_classify(U2, V2, n, h) != CaseLabel::Case2) continue;
      } catch (const Error&) {
        continue;
      }
      ++bound_checked;
      const long double fv = f_formula(U2, V2, n, h).get_d();
      worst = std::max(worst, fv);
      if (fv > bound) ++bound_bad;
    }
  std::ostringstream d;
  d << checked << " Case 2 instances, " << bad << " differ;" << os.str() << " fixture (6,3) observed " << fixture
    << (fixture_ok ? "" : " not 648") << "; f bound " << static_cast<double>(bound) << " vs max f "
    << static_cast<double>(worst) << " over " << bound_checked << " rows, " << bound_bad << " exceed";
  return {checked > 0 && bad == 0 && fixture_ok && bound_checked > 0 && bound_bad == 0, d.str()};
}

// Closed form with the monic B2 (or C2) of exact degree instead of degree
// at most k2; used only to classify failures of the stated identity.
BigInt exact_degree_weight(const Poly& W, int k1, int k2, bool monic) {
  BigInt total = 0;
  for (const Poly& C2 : PolySet(W.field(), monic ? PolyKind::Monic : PolyKind::AllUpTo, k2)) {
    const Poly g = gcd(C2, W);
    total += big_pow(W.field().q(), k1 >= g.deg() ? k1 - g.deg() + 1 : 0) * g.norm();
  }
  return total;
}

Rational exact_degree_rhs(const Poly& U, const Poly& V, int n, int h, int r1) {
  const ThmParams tp = make_params(U, V, n, h);
  BigInt b, c;
  if (tp.even) {
    b = exact_degree_weight(U, tp.sp + tp.s - r1, r1 - tp.sp - 1, true);
    c = exact_degree_weight(V, tp.tp + tp.t - r1 - 1, r1 - tp.tp - 2, false);
  } else {
    b = exact_degree_weight(U, tp.sp + tp.s - r1 - 1, r1 - tp.sp - 2, false);
    c = exact_degree_weight(V, tp.tp + tp.t - r1, r1 - tp.tp - 1, true);
  }
  Rational r(big_pow(U.field().q(), n - r1 + 1) * b * c, (U * V).norm());
  r.canonicalize();
  return r;
}

Outcome identities() {
  Field f(3);
  const std::vector<std::pair<Poly, Poly>> prs{{P(f, {1}), P(f, {0, 1})},
                                              {P(f, {1, 0, 1}), P(f, {0, 1})},
                                              {P(f, {1}), P(f, {0, 0, 0, 1})},
                                              {P(f, {1, 0, 1}), P(f, {0, 0, 0, 1})}};
  Tally ks, ws;
  std::uint64_t skipped = 0, fixed_by_degree = 0, short_modulus = 0, other = 0;
  for (const auto& [U, V] : prs)
    for (int n = 0; n <= 8; ++n)
      for (int h = 0; h <= n; ++h) {
        try {
          ks.merge(check_kernel_sums(U, V, n, h));
          for (int r1 = 0; r1 <= n; ++r1) {
            IdentitySides sd;
            try {
              sd = kernel_sum_identity(U, V, n, h, r1);
            } catch (const Error& e) {
              if (e.code() == Errc::TooLarge) throw;
              continue;
            }
            if (sd.holds()) continue;
            if (sd.lhs == exact_degree_rhs(U, V, n, h, r1))
              ++fixed_by_degree;
            else if (n - r1 + 1 <= (U * V).deg())
              ++short_modulus;
            else
              ++other;
          }
        } catch (const Error& e) {
          if (e.code() != Errc::TooLarge) continue;
          ++skipped;
        }
        try {
          ws.merge(check_w_sums(U, V, n, h));
        } catch (const Error& e) {
          if (e.code() != Errc::TooLarge) continue;
          ++skipped;
        }
      }
  std::ostringstream os;
  os << "kernel sums: " << tally_text(ks);
  if (ks.failed != 0)
    os << " [" << fixed_by_degree << " agree once the monic range is exact degree, " << short_modulus
       << " more have n-r1+1 <= deg UV, " << other << " unexplained]";
  os << "; w sums: " << tally_text(ws) << "; " << skipped << " tuples past the guard";
  return {ks.ok() && ws.ok(), os.str()};
}

Outcome phi_convergence() {
  Field f(3);
  const Poly one = P(f, {1}), T = P(f, {0, 1}), T1 = P(f, {1, 1});
  const std::vector<std::pair<Poly, Poly>> fx{{one, one}, {T, one}, {one, T}, {T1, T}};
  bool ok = true;
  std::ostringstream os;
  for (const auto& [w2, w3] : fx) {
    const PhiSumReport rep = convergence_report(w2, w3, 12);
    auto dev = [&](int k) {
      Rational d = rep.increments[k] / rep.slope - 1;
      return std::fabs(d.get_d());
    };
    bool mono = true;
    for (int k = 7; k <= 12; ++k) mono = mono && dev(k) <= dev(k - 1);
    const double d12 = dev(12);
    ok = ok && mono && d12 < 0.05;
    os << " (" << w2.literal() << ";" << w3.literal() << "): dev(12)=" << d12 << (mono ? "" : " not monotone");
  }
  return {ok, "slopes checked for 4 fixtures;" + os.str()};
}

Outcome case3_smoke() {
  if (!g_quadform_ok || !g_reduction_ok) return {false, "skipped: fast path requires criteria 3 and 4"};
  Field f(3);
  const Poly U = P(f, {1}), V = P(f, {0, 1});
  const VarianceReport rep = theorem_predict(U, V, 18, 6);
  if (rep.label != CaseLabel::Case3) return {false, "(18, 6) is not classified as Case 3"};
  const Rational exact = variance_charsum(U, V, 18, 6, SumMode::Fast, 2000000000ull);
  Rational resid = exact - *rep.main_term - *rep.secondary_term;
  resid.canonicalize();
  if (resid < 0) resid = -resid;
  const Rational scale = 10 * (rep.error_scale->first + rep.error_scale->second);
  Rational ratio = exact / *rep.main_term;
  ratio.canonicalize();
  std::ostringstream os;
  os << "exact " << exact << ", main " << *rep.main_term << ", secondary " << *rep.secondary_term << ", |residual| "
     << resid << " vs allowance " << scale << ", exact/main " << ratio << " (~" << ratio.get_d() << ")";
  return {resid <= scale, os.str()};
}

Outcome mean() {
  std::uint64_t checked = 0, bad = 0, skipped = 0;
  for (std::uint32_t p : {3u, 5u}) {
    Field f(p);
    for (const Poly& U : {P(f, {1}), P(f, {1, 0, 1})})
      for (const Poly& V : {P(f, {0, 1}), P(f, {0, 0, 0, 1})})
        for (int n = 0; n <= 8; ++n)
          for (int h = 0; h <= n; ++h) {
            std::vector<std::uint64_t> sums;
            try {
              sums = interval_class_sums(U, V, n, h);
            } catch (const Error& e) {
              if (e.code() == Errc::TooLarge) ++skipped;
              continue;
            }
            BigInt total = 0;
            for (auto x : sums) total += BigInt(static_cast<unsigned long>(x));
            ++checked;
            if (Rational(total * big_pow(p, h)) != Rational(big_pow(p, n)) * mean_formula(U, V, n, h)) ++bad;
          }
  }
  return {checked > 0 && bad == 0, std::to_string(checked) + " (q,U,V,n,h) checked, " + std::to_string(bad) +
                                       " differ, " + std::to_string(skipped) + " past the guard"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"census formulas", census},
      {"kernel structure", kernel_structure},
      {"quadratic-form magnitudes", quadform},
      {"reduction lemma", reduction},
      {"bijection", bijection},
      {"variance identity", variance_identity},
      {"Case 1 exactness", case1},
      {"Case 2 exactness and f bound", case2},
      {"internal identities", identities},
      {"phi-sum convergence", phi_convergence},
      {"Case 3 smoke", case3_smoke},
      {"mean", mean},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += o.pass ? 0 : 1;
    std::printf("criterion %2zu %s: %s [%.1fs] %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failures;
}
