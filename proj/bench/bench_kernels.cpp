// Wall-clock comparison of the OpenMP kernels with their serial references.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <CLI11.hpp>
#include <omp.h>

#include "hfq/analytic.hpp"
#include "hfq/charsum.hpp"
#include "hfq/hankel.hpp"
#include "hfq/variance.hpp"

using namespace hfq;

namespace {

double best_of(int reps, const std::function<void()>& fn) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const std::string& name, int reps, const std::function<bool()>& par, const std::function<bool()>& ref) {
  bool same = true;
  const double tp = best_of(reps, [&] { same = par() && same; });
  const double tr = best_of(reps, [&] { same = ref() && same; });
  std::printf("%-36s %10.4f %10.4f %8.2fx %s\n", name.c_str(), tp, tr, tr / tp, same ? "" : "  RESULTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  int threads = 0, reps = 3;
  CLI::App app{"Parallel kernels against serial references"};
  app.add_option("--threads", threads, "OpenMP threads (0 = runtime default)");
  app.add_option("--reps", reps, "Repetitions, best time is reported");
  CLI11_PARSE(app, argc, argv);
  if (threads > 0) omp_set_num_threads(threads);

  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-36s %10s %10s %9s\n", "kernel", "parallel", "serial", "speedup");

  Field f(3);
  const Poly one = Poly::from_ints(f, {1}), T = Poly::from_ints(f, {0, 1});
  const Poly U = Poly::from_ints(f, {1, 0, 1});

  Census c_par, c_ref;
  row("census_enumerate n=11 h=0", reps, [&] { c_par = census_enumerate(f, 11, 0); return true; },
      [&] { c_ref = reference::census_enumerate(f, 11, 0); return c_ref == c_par; });

  Rational v_par, v_ref;
  row("variance_bruteforce T^2+1,T n=12", reps, [&] { v_par = variance_bruteforce(U, T, 12, 5); return true; },
      [&] { v_ref = reference::variance_bruteforce(U, T, 12, 5); return v_ref == v_par; });

  Rational s_par, s_ref;
  row("variance_charsum exact U=1 V=T n=8", reps,
      [&] { s_par = variance_charsum(one, T, 8, 2, SumMode::Exact); return true; },
      [&] { s_ref = reference::variance_charsum(one, T, 8, 2); return s_ref == s_par; });
  row("variance_charsum fast vs exact n=8", reps,
      [&] { return variance_charsum(one, T, 8, 2, SumMode::Fast) == s_ref; },
      [&] { return variance_charsum(one, T, 8, 2, SumMode::Exact) == s_ref; });

  Rational p_par, p_ref;
  row("phi_ratio_sum W2=T W3=1 k=9", reps, [&] { p_par = phi_ratio_sum(T, one, 9); return true; },
      [&] { p_ref = reference::phi_ratio_sum(T, one, 9); return p_ref == p_par; });
  return 0;
}
