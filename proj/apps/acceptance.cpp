// Acceptance gate: eight self-contained checks, one per invocation, each
// printing a single "CRITERION n: PASS/FAIL — detail" line.  Exit 0 iff the
// requested criterion passes.

#include <gmp.h>

#include <cmath>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dk/bigpoint.hpp"
#include "dk/divisor.hpp"
#include "dk/encl.hpp"
#include "dk/errors.hpp"
#include "dk/lambertw.hpp"
#include "dk/mainterm.hpp"
#include "dk/methods.hpp"
#include "dk/quadrature.hpp"
#include "dk/tables.hpp"
#include "dk/verify.hpp"
#include "dk/zeta.hpp"

using namespace dk;

namespace {

constexpr int kWorkers = 8;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct DiffBundle {
  TableBundle b;
  std::vector<DiffEntry> diff;
};

DiffBundle make_bundle(const std::string& data) {
  auto specs = load_method_rows(data + "/method_rows.json");
  auto lit = load_literature(data + "/literature.json");
  DiffBundle db{build_tables(specs, lit, kWorkers), {}};
  db.diff = diff_against_reference(data + "/reference_tables.json", db.b);
  return db;
}

double mag(const Encl& e) {
  double lo = std::fabs(mpfr_get_d(e.lo().raw(), MPFR_RNDD));
  double hi = std::fabs(mpfr_get_d(e.hi().raw(), MPFR_RNDU));
  return std::max(lo, hi);
}

// ---------------------------------------------------- criteria 1-3: tables

// Panel reproduction: omega within printed tolerance or certified one-sided
// low; x1 exact at its printed precision or flagged with the dominating
// constraint named.  Exponent mismatches are acceptable only when the diff
// attributes them (misprint notes), never silently.
Outcome panel_criterion(const DiffBundle& db, std::vector<std::string> panels) {
  size_t rows = 0, om_match = 0, om_tol = 0, om_low = 0;
  size_t x1_ok = 0, x1_attr = 0;
  std::vector<std::string> bad;
  for (const DiffEntry& e : db.diff) {
    bool in_panel = false;
    for (const std::string& p : panels) in_panel |= e.panel == p;
    if (!in_panel) continue;
    if (e.field == "omega") {
      ++rows;
      switch (e.status) {
        case DiffStatus::Match: ++om_match; break;
        case DiffStatus::WithinTol: ++om_tol; break;
        case DiffStatus::OneSidedLow: ++om_low; break;
        case DiffStatus::Flag:
          bad.push_back(e.key + " omega: " + e.note);
          break;
      }
    } else if (e.field == "x1") {
      if (e.status == DiffStatus::Match || e.status == DiffStatus::WithinTol)
        ++x1_ok;
      else if (e.status == DiffStatus::Flag && !e.note.empty())
        ++x1_attr;  // dominating constraint named in the report
      else
        bad.push_back(e.key + " x1: unattributed mismatch");
    }
  }
  Outcome o;
  o.pass = bad.empty() && rows > 0;
  std::ostringstream os;
  os << rows << " rows; omega: " << om_match << " match, " << om_tol
     << " within 5e-4, " << om_low << " certified one-sided low; x1: " << x1_ok
     << " exact at printed precision";
  if (x1_attr) os << ", " << x1_attr << " attributed to a named constraint";
  for (const std::string& s : bad) os << "; PROBLEM " << s;
  o.detail = os.str();
  return o;
}

Outcome criterion1(const std::string& data) {
  return panel_criterion(make_bundle(data), {"table3"});
}

Outcome criterion2(const std::string& data) {
  return panel_criterion(make_bundle(data), {"table4", "table5"});
}

Outcome criterion3(const std::string& data) {
  DiffBundle db = make_bundle(data);
  size_t rows = 0, a_match = 0, a_tol = 0, a_low = 0, ex_ok = 0, x_ok = 0;
  std::vector<std::string> bad;
  std::string k9;
  for (const DiffEntry& e : db.diff) {
    if (e.panel != "table1") continue;
    if (e.field == "alpha") {
      ++rows;
      switch (e.status) {
        case DiffStatus::Match: ++a_match; break;
        case DiffStatus::WithinTol: ++a_tol; break;
        case DiffStatus::OneSidedLow: ++a_low; break;
        case DiffStatus::Flag:
          bad.push_back(e.key + " alpha: " + e.note);
          break;
      }
      if (e.key.find("k=9") != std::string::npos)
        k9 = "k=9 carries alpha " + e.regenerated + " " +
             (e.status == DiffStatus::OneSidedLow ? "certified <= printed "
                                                  : "vs printed ") +
             e.printed;
    } else if (e.field == "gamma" || e.field == "beta") {
      if (e.status == DiffStatus::Match)
        ++ex_ok;
      else
        bad.push_back(e.key + " " + e.field + ": exponent mismatch");
    } else if (e.field == "x") {
      if (e.status == DiffStatus::Match)
        ++x_ok;
      else
        bad.push_back(e.key + " x: threshold mismatch");
    }
  }
  Outcome o;
  o.pass = bad.empty() && rows == 11 && ex_ok == 22 && x_ok == 11;
  std::ostringstream os;
  os << rows << " rows; alpha: " << a_match << " print-exact, " << a_tol
     << " within 2e-3 relative, " << a_low << " certified one-sided low; "
     << ex_ok << "/22 exponents exact as rationals; " << x_ok
     << "/11 thresholds exact";
  if (!k9.empty()) os << "; " << k9;
  for (const std::string& s : bad) os << "; PROBLEM " << s;
  o.detail = os.str();
  return o;
}

// ------------------------------------------------- criterion 4: desk sweeps

ExplicitBound literal_bound(int k, const std::string& omega, Frac gamma,
                            Frac beta, const std::string& x1, Domain dom) {
  ExplicitBound b;
  b.k = k;
  b.omega = BigPoint::parse(omega).value();
  b.gamma = gamma;
  b.beta = beta;
  b.x1 = BigPoint::parse(x1);
  b.domain = dom;
  return b;
}

Outcome criterion4(const std::string&) {
  VerifyOptions opt;
  opt.workers = kWorkers;

  struct Sweep {
    ExplicitBound b;
    uint64_t n, t_lo, t_hi;
  };
  std::vector<Sweep> sweeps = {
      {literal_bound(5, "9.272", Frac(11, 14), Frac(41, 7), "1667",
                     Domain::IntegersAndHalfIntegers),
       1000000, 2 * 1667, 2 * 1000000},
      {literal_bound(6, "0.274", Frac(33, 40), Frac(27, 4), "162727",
                     Domain::IntegersAndHalfIntegers),
       5000000, 2 * 162727, 2 * 5000000},
      {literal_bound(2, "0.961", Frac(1, 2), Frac(0), "1", Domain::Integers),
       1000000, 2 * 2, 2 * 1000000},
  };
  bool pass = true;
  std::ostringstream os;
  for (const Sweep& sw : sweeps) {
    DivisorSieve s =
        build_sieve(sw.b.k, sw.n, kDefaultSieveBudget, kWorkers);
    MainTermPolynomial P = mainterm_poly(sw.b.k);
    VerificationReport rep = verify_bound(s, P, sw.b, sw.t_lo, sw.t_hi, opt);
    pass = pass && rep.pass;
    os << "k=" << sw.b.k << ": " << rep.count << " sites, max ratio "
       << rep.max_ratio << " at x=" << rep.worst_x << ", "
       << (rep.pass ? "ok" : "VIOLATED") << "; ";
  }
  os << "zero violations across all three sweeps";
  return {pass, os.str()};
}

// -------------------------------------------- criterion 5: main-term suite

Outcome criterion5(const std::string&) {
  std::ostringstream os;
  bool pass = true;

  // leading coefficient 1/(k-1)! exactly (containment of the exact rational
  // by a near-point enclosure)
  long fact = 1;
  for (int k = 2; k <= 9; ++k) {
    fact *= (k - 1) > 1 ? (k - 1) : 1;
    MainTermPolynomial P = mainterm_poly(k);
    Encl exact = Frac(1, fact).encl();
    bool ok = P.a[k - 1].contains(exact) && P.a[k - 1].wid_d() < 1e-25;
    pass = pass && ok;
    if (!ok) os << "PROBLEM a_" << k - 1 << " != 1/" << fact << " for k=" << k << "; ";
  }
  os << "a_{k-1} = 1/(k-1)! exact for k=2..9; ";

  // P_2 = (log x) + (2 gamma - 1) to 25 digits
  MainTermPolynomial P2 = mainterm_poly(2);
  Encl two_gamma_m1 = const_euler() * Encl::exact(2) - Encl::exact(1);
  double d1 = mag(P2.a[1] - Encl::exact(1));
  double d0 = mag(P2.a[0] - two_gamma_m1);
  bool p2ok = d1 < 1e-25 && d0 < 1e-25;
  pass = pass && p2ok;
  os << "P_2 coefficients (1, 2*gamma-1) to 25 digits (dev " << d1 << ", "
     << d0 << "); ";

  // normalized residual sweep: |Delta_k(x)| / x^{(k-1)/k + 1/20} < 1e3 on a
  // 60-point log grid over [1e4, 1e7]
  double worst = 0;
  int worst_k = 0;
  for (int k = 2; k <= 6; ++k) {
    // one past the endpoint: exp(log 1e7) can land an ulp above 1e7
    DivisorSieve s = build_sieve(k, 10000001, kDefaultSieveBudget, kWorkers);
    MainTermPolynomial P = mainterm_poly(k);
    Frac expo = Frac(k - 1, k) + Frac(1, 20);
    for (int i = 0; i < 60; ++i) {
      double lx = std::log(1e4) + (std::log(1e7) - std::log(1e4)) * i / 59.0;
      Encl x = Encl::from_double(std::exp(lx));
      Encl ratio =
          abs_e(delta_empirical(s, P, x)) / pow_q(x, expo.num, expo.den);
      double r = mpfr_get_d(ratio.hi().raw(), MPFR_RNDU);
      if (r > worst) {
        worst = r;
        worst_k = k;
      }
    }
  }
  pass = pass && worst < 1000.0;
  os << "normalized residual max " << worst << " (k=" << worst_k
     << ") over 60-point log grids [1e4,1e7], k=2..6, threshold 1e3";
  return {pass, os.str()};
}

// ------------------------------------- criterion 6: rigorous-numerics suite

// Random expression tree over enclosures mirrored in exact rational
// arithmetic; the enclosure must contain the exact value at every node.
struct TreeCheck {
  std::mt19937_64 rng{20240817};
  size_t nodes = 0, failures = 0;

  struct Val {
    Encl e;
    mpq_t q;
  };

  Val leaf() {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    long n = num(rng), d = den(rng);
    Val v;
    mpq_init(v.q);
    mpq_set_si(v.q, n, d);
    mpq_canonicalize(v.q);
    v.e = Frac(n, d).encl();
    return v;
  }

  Val combine(Val a, Val b) {
    std::uniform_int_distribution<int> op(0, 3);
    Val r;
    mpq_init(r.q);
    switch (op(rng)) {
      case 0:
        r.e = a.e + b.e;
        mpq_add(r.q, a.q, b.q);
        break;
      case 1:
        r.e = a.e - b.e;
        mpq_sub(r.q, a.q, b.q);
        break;
      case 2:
        r.e = a.e * b.e;
        mpq_mul(r.q, a.q, b.q);
        break;
      default:
        if (mpq_sgn(b.q) != 0 && !b.e.contains_zero()) {
          r.e = a.e / b.e;
          mpq_div(r.q, a.q, b.q);
        } else {
          r.e = a.e + b.e;
          mpq_add(r.q, a.q, b.q);
        }
    }
    mpq_clear(a.q);
    mpq_clear(b.q);
    return r;
  }

  bool run_tree(int depth) {
    std::vector<Val> stack;
    stack.push_back(leaf());
    for (int i = 0; i < depth; ++i) {
      Val b = leaf();
      Val top = stack.back();
      stack.pop_back();
      stack.push_back(combine(top, b));
      ++nodes;
      if (!stack.back().e.contains_q(stack.back().q)) {
        ++failures;
        mpq_clear(stack.back().q);
        return false;
      }
    }
    mpq_clear(stack.back().q);
    return true;
  }
};

Outcome criterion6(const std::string&) {
  std::ostringstream os;
  bool pass = true;

  TreeCheck tc;
  std::uniform_int_distribution<int> depth(3, 12);
  for (int i = 0; i < 10000; ++i) tc.run_tree(depth(tc.rng));
  pass = pass && tc.failures == 0;
  os << "10000 random expression trees (" << tc.nodes
     << " interior nodes) vs exact rationals: " << tc.failures
     << " containment failures; ";

  // Lambert W residuals on both branches
  double worst_res = 0;
  for (int i = 0; i < 40; ++i) {
    double x = -0.3578 + (10.0 + 0.3578) * i / 39.0;  // principal branch
    Encl w = lambert_w(WBranch::Principal, Encl::from_double(x));
    worst_res = std::max(
        worst_res, mag(w * exp_e(w) - Encl::from_double(x)));
  }
  for (int i = 0; i < 40; ++i) {
    double x = -0.3578 + (0.3578 - 0.01) * i / 39.0;  // W_{-1}: [-1/e, 0)
    Encl w = lambert_w(WBranch::MinusOne, Encl::from_double(x));
    worst_res = std::max(
        worst_res, mag(w * exp_e(w) - Encl::from_double(x)));
  }
  pass = pass && worst_res < 1e-25;
  os << "Lambert W residual max " << worst_res << " on both branches; ";

  // zeta(2) contains the point pi^2/6 (computed much tighter than the
  // zeta enclosure so containment tests the number, not a wide box)
  Encl z2 = zeta_real(Encl::exact(2));
  Encl pi26 = const_pi(320) * const_pi(320) / Encl::exact(6, 320);
  bool zok = z2.contains(pi26);
  pass = pass && zok;
  os << "zeta(2) " << (zok ? "contains" : "MISSES") << " pi^2/6; ";

  // Laurent truncation vs direct evaluation at w = 1.01
  LaurentSeries L = zeta_laurent(15);
  Encl u = Encl::from_string("0.01");
  Encl lv = L.at(-1) / u;
  Encl upow = Encl::exact(1);
  for (int j = 0; j <= 13; ++j) {
    lv = lv + L.at(j) * upow;
    upow = upow * u;
  }
  Encl direct = zeta_real(Encl::from_string("1.01"));
  double ldev = mag(lv - direct);
  pass = pass && ldev < 1e-20;
  os << "Laurent-vs-direct zeta at 1.01 deviation " << ldev << "; ";

  // sieve vs multiplicative point oracle
  size_t mism = 0;
  for (int k = 2; k <= 6; ++k) {
    DivisorSieve s = build_sieve(k, 10000, kDefaultSieveBudget, kWorkers);
    for (uint64_t n = 1; n <= 10000; ++n)
      if (s.dk(n) != dk_point(k, n)) ++mism;
  }
  pass = pass && mism == 0;
  os << "sieve/point-oracle mismatches for n<=1e4, k<=6: " << mism;
  return {pass, os.str()};
}

// -------------------------------- criterion 7: remainder monotonicity

Outcome criterion7(const std::string& data) {
  auto specs = load_method_rows(data + "/method_rows.json");
  size_t increases = 0, rows = 0;
  std::string where;
  for (const TableRowSpec& spec : specs) {
    RowResult rr = evaluate_row(spec.params);
    ++rows;
    Encl lnx1 = log_e(rr.x1_pub.value());
    Encl ln10 = log_e(Encl::exact(10));
    Encl prev_half, prev_int;
    for (int i = 0; i < 50; ++i) {
      Encl x = exp_e(lnx1 + ln10 * Encl::exact(i) / Encl::exact(49));
      OmegaParts parts = omega_components(spec.params, rr.kap, x);
      if (i > 0) {
        // a certified increase needs the new lower end above the old upper
        if (mpfr_greater_p(parts.half.lo().raw(), prev_half.hi().raw()) ||
            mpfr_greater_p(parts.intg.lo().raw(), prev_int.hi().raw())) {
          ++increases;
          if (where.empty())
            where = "first at table " + std::to_string(spec.table) + " k=" +
                    std::to_string(spec.params.k) + " grid point " +
                    std::to_string(i);
        }
      }
      prev_half = parts.half;
      prev_int = parts.intg;
    }
  }
  std::ostringstream os;
  os << rows << " rows x 50-point log grids over [x1, 10 x1]: " << increases
     << " certified increases in the normalized remainder arms";
  if (!where.empty()) os << " (" << where << ")";
  return {increases == 0 && rows == 31, os.str()};
}

// ----------------------------- criterion 8: moment-constant re-verification

Outcome criterion8(const std::string&) {
  std::ostringstream os;
  bool pass = true;
  struct Check {
    int kpow;
    double t0, t1, printed;
  };
  std::vector<Check> checks = {{4, 0, 3, 1.039}, {2, 0, 3, 0.748},
                               {2, 3, 4, 0.030}};
  for (const Check& c : checks) {
    Encl v = zeta_moment_integral(c.kpow, Encl::from_double(c.t0),
                                  Encl::from_double(c.t1), 2.5e-4);
    double up = mpfr_get_d(v.hi().raw(), MPFR_RNDU);
    double down = mpfr_get_d(v.lo().raw(), MPFR_RNDD);
    bool ok = up <= c.printed && down > 0.9 * c.printed;
    pass = pass && ok;
    os << "(2/pi) int |zeta(1/2+it)|^" << c.kpow << " on [" << c.t0 << ","
       << c.t1 << "] in [" << down << ", " << up << "] vs printed "
       << c.printed << (ok ? " ok; " : " VIOLATED; ");
  }
  os << "certified quadrature at 2.5e-4 absolute tolerance";
  return {pass, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance gate: one criterion per run"};
  int criterion = 0;
  std::string data = "data";
  app.add_option("--criterion", criterion, "criterion number 1..8")
      ->required()
      ->check(CLI::Range(1, 8));
  app.add_option("--data", data, "data directory");
  CLI11_PARSE(app, argc, argv);

  set_work_prec(128);
  Outcome o;
  try {
    switch (criterion) {
      case 1: o = criterion1(data); break;
      case 2: o = criterion2(data); break;
      case 3: o = criterion3(data); break;
      case 4: o = criterion4(data); break;
      case 5: o = criterion5(data); break;
      case 6: o = criterion6(data); break;
      case 7: o = criterion7(data); break;
      case 8: o = criterion8(data); break;
    }
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  std::cout << "CRITERION " << criterion << ": " << (o.pass ? "PASS" : "FAIL")
            << " — " << o.detail << "\n";
  return o.pass ? 0 : 1;
}
