#include "dk/zeta.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <mutex>
#include <vector>

#include "dk/bernoulli.hpp"

namespace dk {

namespace {

// ln n cache, grown on demand; guarded because verification sweeps may
// escalate into zeta from worker threads.
struct LnCache {
  std::mutex mu;
  Prec prec = 0;
  std::vector<Encl> ln;  // ln[n] valid for n >= 1
};
LnCache g_ln;

Encl cached_ln(unsigned long n, Prec p) {
  std::lock_guard<std::mutex> lock(g_ln.mu);
  if (g_ln.prec < p) {
    g_ln.ln.clear();
    g_ln.prec = p;
  }
  if (g_ln.ln.size() <= n) {
    size_t old = g_ln.ln.size();
    g_ln.ln.resize(n + 1);
    for (size_t m = std::max<size_t>(old, 1); m <= n; ++m)
      g_ln.ln[m] = const_ln((unsigned long)m, g_ln.prec);
  }
  return g_ln.ln[n];
}

Encl factorial_encl(int n, Prec p) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  MpReal lo(p), hi(p);
  mpfr_set_z(lo.raw(), f.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi.raw(), f.get_mpz_t(), MPFR_RNDU);
  return Encl::from_endpoints(lo, hi);
}

}  // namespace

void zeta_em_d(const CEncl& s, CEncl& val, CEncl* dval) {
  Prec p = std::max({s.re.prec(), s.im.prec(), work_prec()}) + 32;
  Encl sigma = s.re;
  if (!sigma.strictly_positive())
    throw DomainError("zeta_em requires Re(s) > 0");
  if (sigma.contains(1L) && s.im.contains_zero())
    throw PoleError("zeta box touches the pole at s = 1");
  double t_hi = std::max(std::abs(s.im.lo().d()), std::abs(s.im.hi().d()));
  unsigned long N =
      (unsigned long)std::max<double>({24.0, (double)p / 3.0, 1.35 * (t_hi + 8.0)});
  CEncl zero{Encl::exact(0, p), Encl::exact(0, p)};
  CEncl one{Encl::exact(1, p), Encl::exact(0, p)};
  // direct sum
  CEncl sum = zero, dsum = zero;
  CEncl ms = -s;
  for (unsigned long n = 2; n < N; ++n) {
    Encl ln_n = cached_ln(n, p);
    CEncl term = exp_c(ms * ln_n);
    sum = sum + term;
    if (dval) dsum = dsum - term * ln_n;
  }
  sum = sum + one;
  Encl lnN = cached_ln(N, p);
  // N^{1-s}/(s-1)
  CEncl n1ms = exp_c((one - s) * lnN);
  CEncl sm1 = s - one;
  sum = sum + n1ms / sm1;
  if (dval) dsum = dsum - (n1ms * lnN) / sm1 - n1ms / (sm1 * sm1);
  // N^{-s}/2
  CEncl nms = exp_c(ms * lnN);
  sum = sum + nms / Encl::exact(2, p);
  if (dval) dsum = dsum - (nms * lnN) / Encl::exact(2, p);
  // W = N^{-s-2j+1}, poch = (s)_{2j-1}; both maintained incrementally.
  // H = sum 1/(s+i) over the pochhammer factors, for the derivative.
  CEncl poch = s;                                  // (s)_1
  CEncl W = nms / Encl::exact((long)N, p);         // N^{-s-1}
  CEncl H = one / s;                               // d(s)_1/(s)_1
  Encl n2 = Encl::exact((long)N, p) * Encl::exact((long)N, p);
  CEncl acc = zero, dacc = zero;
  // hsum = sum_{i=0}^{m} 1/|s+i| upper bounds, extended lazily
  Encl hsum = Encl::exact(0, p);
  int hsum_upto = -1;
  auto extend_hsum = [&](int upto) {
    for (int i = hsum_upto + 1; i <= upto; ++i)
      hsum = hsum + Encl::exact(1, p) /
                        abs_c(s + CEncl{Encl::exact(i, p), Encl::exact(0, p)});
    hsum_upto = std::max(hsum_upto, upto);
  };
  MpReal best_rem(p), best_drem(p);
  mpfr_set_inf(best_rem.raw(), 1);
  mpfr_set_inf(best_drem.raw(), 1);
  CEncl best_acc = acc, best_dacc = dacc;
  int best_j = 0;
  int qmax = std::min(bernoulli_max_index() - 1, 48);
  MpReal target(p);
  mpfr_set_ui_2exp(target.raw(), 1, -(p - 8), MPFR_RNDN);
  for (int j = 1; j <= qmax; ++j) {
    Encl b2j = bernoulli_2n_encl(j, p);
    Encl fact = factorial_encl(2 * j, p);
    Encl coef = b2j / fact;
    CEncl pw = poch * W;
    acc = acc + pw * coef;
    if (dval) dacc = dacc + (pw * H - pw * lnN) * coef;
    // remainder bound for stopping after term j (q = j):
    // |R| <= |B_{2j+2}|/(2j+2)! |(s)_{2j+2}| N^{-sigma-2j-1}/(sigma+2j+1)
    Encl b2 = bernoulli_2n_encl(j + 1, p);
    Encl fact2 = factorial_encl(2 * j + 2, p);
    Encl ap = abs_c(poch);
    for (int i = 2 * j - 1; i <= 2 * j + 1; ++i)
      ap = ap * abs_c(s + CEncl{Encl::exact(i, p), Encl::exact(0, p)});
    Encl wmag = abs_c(W);
    Encl alpha = sigma + Encl::exact(2 * j + 1, p);
    Encl rem = abs_e(b2) / fact2 * ap * (wmag / n2) / alpha;
    MpReal rem_hi(rem.hi());
    if (mpfr_less_p(rem_hi.raw(), best_rem.raw())) {
      best_rem = rem_hi;
      best_acc = acc;
      best_j = j;
      if (dval) {
        // |R'| <= rem * (sum 1/|s+i| + ln N + 1/alpha): the pochhammer
        // log-derivative plus the d/ds of the x^{-s-2j-2} kernel
        extend_hsum(2 * j + 1);
        Encl drem = rem * (hsum + lnN + Encl::exact(1, p) / alpha);
        best_drem = MpReal(drem.hi());
        best_dacc = dacc;
      }
      if (mpfr_less_p(rem_hi.raw(), target.raw())) break;
    } else if (j > best_j + 4) {
      break;  // diverging asymptotic tail; keep the best point
    }
    // advance to (s)_{2j+1} and N^{-s-2j-1}
    CEncl f1 = s + CEncl{Encl::exact(2 * j - 1, p), Encl::exact(0, p)};
    CEncl f2 = s + CEncl{Encl::exact(2 * j, p), Encl::exact(0, p)};
    poch = poch * f1 * f2;
    if (dval) H = H + one / f1 + one / f2;
    W = W / n2;
  }
  val = widen_abs_c(sum + best_acc, best_rem);
  if (dval) *dval = widen_abs_c(dsum + best_dacc, best_drem);
}

CEncl zeta_em(const CEncl& s) {
  CEncl v;
  zeta_em_d(s, v, nullptr);
  return v;
}

Encl zeta_real(const Encl& s) {
  Encl gap = s - Encl::from_string("1.000001", s.prec());
  if (!gap.strictly_positive())
    throw DomainError("zeta_real requires s > 1 + 1e-6");
  CEncl z = zeta_em(CEncl::real(s));
  return z.re;
}

CEncl zeta_critical(const Encl& t) {
  if (mpfr_sgn(t.lo().raw()) < 0) throw DomainError("zeta_critical requires t >= 0");
  if (mpfr_cmp_ui(t.hi().raw(), 10000) > 0)
    throw RangeError("zeta_critical supports t <= 1e4 only");
  Prec p = std::max(t.prec(), work_prec());
  Encl half = Encl::from_string("0.5", p);
  return zeta_em(CEncl{half, t});
}

}  // namespace dk
