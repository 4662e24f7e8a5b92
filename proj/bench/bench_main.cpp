// Serial-vs-parallel timing comparison for the three OpenMP kernels: sieve
// construction, lattice verification sweeps, and full table regeneration.
// Prints wall times and speedups; no assertions.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dk/bigpoint.hpp"
#include "dk/divisor.hpp"
#include "dk/encl.hpp"
#include "dk/mainterm.hpp"
#include "dk/methods.hpp"
#include "dk/tables.hpp"
#include "dk/verify.hpp"

using namespace dk;
using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double timed(F&& f) {
  auto t0 = Clock::now();
  f();
  return seconds(t0, Clock::now());
}

void report(const char* name, double serial, double parallel, int workers) {
  std::printf("%-28s serial %8.3fs   %d-way %8.3fs   speedup %.2fx\n", name,
              serial, workers, parallel, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"timing: serial reference vs OpenMP kernels"};
  bool quick = false;
  int workers = 8;
  app.add_flag("--quick", quick, "smaller problem sizes");
  app.add_option("--workers", workers, "parallel worker count");
  CLI11_PARSE(app, argc, argv);
  set_work_prec(128);

  const uint64_t sieve_n = quick ? 500000 : 5000000;
  const uint64_t sweep_hi = quick ? 200000 : 1000000;

  // sieve construction: k-fold divisor convolution passes
  {
    DivisorSieve keep;  // reused below
    double ts = timed([&] { keep = build_sieve(6, sieve_n, kDefaultSieveBudget, 0); });
    DivisorSieve par;
    double tp = timed([&] { par = build_sieve(6, sieve_n, kDefaultSieveBudget, workers); });
    std::string name = "sieve build k=6 N=" + std::to_string(sieve_n);
    report(name.c_str(), ts, tp, workers);
    std::printf("%-28s outputs identical: %s\n", "",
                keep.d == par.d ? "yes" : "NO");
  }

  // verification sweep: fast-path ratios with certified escalation
  {
    DivisorSieve s = build_sieve(2, sweep_hi, kDefaultSieveBudget, workers);
    MainTermPolynomial P = mainterm_poly(2);
    ExplicitBound b;
    b.k = 2;
    b.omega = Encl::from_string("0.961");
    b.gamma = Frac(1, 2);
    b.beta = Frac(0);
    b.x1 = BigPoint::parse("1");
    b.domain = Domain::Integers;
    VerifyOptions o1, o8;
    o1.workers = 1;
    o8.workers = workers;
    VerificationReport r1, r8;
    double ts = timed([&] { r1 = verify_bound(s, P, b, 4, 2 * sweep_hi, o1); });
    double tp = timed([&] { r8 = verify_bound(s, P, b, 4, 2 * sweep_hi, o8); });
    std::string name = "sweep k=2 x<=" + std::to_string(sweep_hi);
    report(name.c_str(), ts, tp, workers);
    std::printf("%-28s reports identical: %s\n", "",
                r1.render() == r8.render() ? "yes" : "NO");
  }

  // full table regeneration: 31 parameter rows
  {
    auto specs = load_method_rows("data/method_rows.json");
    auto lit = load_literature("data/literature.json");
    TableBundle b1, b8;
    double ts = timed([&] { b1 = build_tables(specs, lit, 1); });
    double tp = timed([&] { b8 = build_tables(specs, lit, workers); });
    report("table regeneration (31 rows)", ts, tp, workers);
    std::printf("%-28s outputs identical: %s\n", "",
                emit_table1(b1, "csv") == emit_table1(b8, "csv") ? "yes" : "NO");
  }
  return 0;
}
