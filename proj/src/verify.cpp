#include "dk/verify.hpp"

#include <mpfr.h>
#include <omp.h>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace dk {

namespace {

// Double-precision shadow of a bound for the fast filter.  om_up is rounded
// up, so the shadow never understates the bound's leading constant... the
// filter still only *selects* sites; certification happens in Encl space.
struct FastBound {
  double om_up;
  double gamma, beta;
  double x1;  // validity floor (rounded down)
  bool integers, halves;

  double value(double x) const {
    double lx = std::log(x);
    return om_up * std::exp(gamma * lx) * (beta == 0.0 ? 1.0 : std::pow(lx, beta));
  }
};

std::string describe(const ExplicitBound& b) {
  char desc[160];
  std::snprintf(desc, sizeof desc, "|Delta_%d| < %.6g x^{%s} (log x)^{%s} [%s]",
                b.k, mpfr_get_d(b.omega.hi().raw(), MPFR_RNDN),
                b.gamma.str().c_str(), b.beta.str().c_str(),
                domain_name(b.domain));
  return desc;
}

FastBound shadow(const ExplicitBound& b) {
  FastBound f;
  f.om_up = mpfr_get_d(b.omega.hi().raw(), MPFR_RNDU);
  f.gamma = b.gamma.d();
  f.beta = b.beta.d();
  f.x1 = mpfr_get_d(b.x1.value().lo().raw(), MPFR_RNDD);
  f.integers = b.domain == Domain::Integers ||
               b.domain == Domain::IntegersAndHalfIntegers ||
               b.domain == Domain::Reals;
  f.halves = b.domain == Domain::HalfIntegers ||
             b.domain == Domain::IntegersAndHalfIntegers ||
             b.domain == Domain::Reals;
  return f;
}

// Certified |Delta_k(x)| / (omega x^gamma log^beta x) at one abscissa.
Encl site_ratio(const DivisorSieve& s, const MainTermPolynomial& P,
                const ExplicitBound& b, const Encl& x, Prec p) {
  Encl delta = delta_empirical(s, P, x);
  Encl lnx = log_e(x);
  Encl bnd = b.omega * exp_e(b.gamma.encl(p) * lnx);
  if (!b.beta.is_zero()) bnd = bnd * pow_q(lnx, b.beta.num, b.beta.den);
  return abs_e(delta) / bnd;
}

// One multiplicative-congruential step per site keeps the off-lattice
// offsets reproducible for any worker count: no sequential generator state
// crosses chunk boundaries.
uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double offlattice_u(uint64_t seed, uint64_t t) {
  uint64_t z = mix64(seed ^ t) * 6364136223846793005ull + 1442695040888963407ull;
  double u = (double)(z >> 11) * 0x1.0p-53;  // [0,1)
  // keep the sample strictly inside (t/2, t/2 + 1/2)
  return 0.5 * (0.015625 + 0.96875 * u);
}

struct ChunkResult {
  double max_ratio = -1;  // certified at the argmax site
  uint64_t worst_t = 0;
  bool worst_off = false;
  double worst_xoff = 0;
  uint64_t count = 0;
  std::vector<Violation> violations;
};

}  // namespace

std::string VerificationReport::render() const {
  std::ostringstream os;
  os << "k=" << k << " " << bound_desc << " | x in [" << (double)t_lo / 2
     << ", " << (double)t_hi / 2 << "] | sites=" << count << " | max_ratio="
     << max_ratio << " at x=" << worst_x << " | "
     << (pass ? "PASS" : "FAIL");
  if (!violations.empty()) os << " (" << violations.size() << " violations)";
  os << "\n";
  for (const Violation& v : violations)
    os << "  violation at x=" << (double)v.t / 2
       << (v.offlattice ? " (off-lattice)" : "") << " ratio>=" << v.ratio_up
       << "\n";
  return os.str();
}

VerificationReport verify_bound(const DivisorSieve& s,
                                const MainTermPolynomial& P,
                                const ExplicitBound& bound, uint64_t t_lo,
                                uint64_t t_hi, const VerifyOptions& opt) {
  if (bound.k != s.k) throw ConfigError("bound k does not match sieve k");
  if (t_lo < 2) t_lo = 2;
  if (t_lo > t_hi) {                       // empty range: vacuous PASS
    VerificationReport rep;
    rep.k = bound.k;
    rep.bound_desc = describe(bound);
    rep.t_lo = t_lo;
    rep.t_hi = t_hi;
    rep.pass = true;
    return rep;
  }
  if (t_hi > 2 * s.N) throw RangeError("sweep range exceeds sieve limit");

  Prec wp = opt.prec > 0 ? opt.prec : work_prec();
  FastBound fb = shadow(bound);
  FastBound fr{};
  if (opt.reals) fr = shadow(*opt.reals);
  if ((double)t_lo / 2 < fb.x1 * (1 - 1e-12))
    throw RangeError("sweep starts below the bound's validity floor");

  // double shadow of the main-term polynomial (midpoints; the 0.95
  // escalation margin dwarfs the coefficient widths)
  std::vector<double> cf(P.a.size());
  for (size_t i = 0; i < P.a.size(); ++i) cf[i] = P.a[i].mid_d();
  auto fast_delta = [&](double x) {
    double lx = std::log(x);
    double pv = 0;
    for (size_t i = cf.size(); i-- > 0;) pv = pv * lx + cf[i];
    uint64_t fl = (uint64_t)x;
    return (double)s.prefix[fl] - x * pv;
  };

  const uint64_t kChunk = 1u << 15;
  uint64_t nchunks = (t_hi - t_lo) / kChunk + 1;
  std::vector<ChunkResult> res(nchunks);
  uint64_t seed = mix64(((uint64_t)bound.k << 32) ^ t_lo);
  int nth = opt.workers > 0 ? opt.workers : 1;

#pragma omp parallel for schedule(dynamic) num_threads(nth)
  for (uint64_t c = 0; c < nchunks; ++c) {
    ChunkResult& r = res[c];
    uint64_t a = t_lo + c * kChunk;
    uint64_t b = std::min(t_hi, a + kChunk - 1);
    double best_f = -1;
    uint64_t best_t = 0;
    bool best_off = false;
    double best_xoff = 0;

    for (uint64_t t = a; t <= b; ++t) {
      bool integer_site = (t & 1) == 0;
      if (integer_site ? fb.integers : fb.halves) {
        double x = (double)t / 2;
        double ratio = std::fabs(fast_delta(x)) / fb.value(x);
        ++r.count;
        if (ratio > best_f) {
          best_f = ratio;
          best_t = t;
          best_off = false;
        }
        if (ratio > 0.95) {
          Encl rr = site_ratio(s, P, bound, Encl::exact((long)t, wp) / 2, wp);
          if (certified_compare(rr, Encl::exact(1, wp)) != Cmp::Less)
            r.violations.push_back(
                {t, false, mpfr_get_d(rr.hi().raw(), MPFR_RNDU)});
        }
      }
      if (opt.reals && t % 10 == 0) {
        double x = (double)t / 2 + offlattice_u(seed, t);
        if (x >= fr.x1) {
          double ratio = std::fabs(fast_delta(x)) / fr.value(x);
          ++r.count;
          if (ratio > best_f) {
            best_f = ratio;
            best_t = t;
            best_off = true;
            best_xoff = x;
          }
          if (ratio > 0.95) {
            Encl rr = site_ratio(s, P, *opt.reals, Encl::from_double(x, wp), wp);
            if (certified_compare(rr, Encl::exact(1, wp)) != Cmp::Less)
              r.violations.push_back(
                  {t, true, mpfr_get_d(rr.hi().raw(), MPFR_RNDU)});
          }
        }
      }
    }

    if (best_f >= 0) {
      // certify the chunk's argmax so the merged maximum is an upper bound
      Encl x = best_off ? Encl::from_double(best_xoff, wp)
                        : Encl::exact((long)best_t, wp) / 2;
      const ExplicitBound& bb = best_off ? *opt.reals : bound;
      Encl rr = site_ratio(s, P, bb, x, wp);
      r.max_ratio = mpfr_get_d(rr.hi().raw(), MPFR_RNDU);
      r.worst_t = best_t;
      r.worst_off = best_off;
      r.worst_xoff = best_xoff;
    }
  }

  // deterministic merge in chunk order; ties keep the earlier site
  VerificationReport rep;
  rep.k = bound.k;
  rep.t_lo = t_lo;
  rep.t_hi = t_hi;
  rep.bound_desc = describe(bound);
  uint64_t worst_t = 0;
  bool worst_off = false;
  double worst_xoff = 0;
  for (const ChunkResult& r : res) {
    rep.count += r.count;
    if (r.max_ratio > rep.max_ratio) {
      rep.max_ratio = r.max_ratio;
      worst_t = r.worst_t;
      worst_off = r.worst_off;
      worst_xoff = r.worst_xoff;
    }
    for (const Violation& v : r.violations)
      if (rep.violations.size() < 16) rep.violations.push_back(v);
  }
  char wx[40];
  if (worst_off)
    std::snprintf(wx, sizeof wx, "%.17g", worst_xoff);
  else if (worst_t & 1)
    std::snprintf(wx, sizeof wx, "%llu.5", (unsigned long long)(worst_t / 2));
  else
    std::snprintf(wx, sizeof wx, "%llu", (unsigned long long)(worst_t / 2));
  rep.worst_x = wx;
  rep.pass = rep.violations.empty() && rep.max_ratio < 1.0;
  return rep;
}

}  // namespace dk
