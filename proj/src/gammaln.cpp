#include "dk/gammaln.hpp"

#include <algorithm>
#include <cmath>

#include "dk/bernoulli.hpp"

namespace dk {

namespace {

// Stirling for Re(w) >= 26:
//   log Gamma(w) = (w - 1/2) log w - w + ln(2 pi)/2
//                  + sum_{j=1}^{q} B_{2j} / ((2j)(2j-1) w^{2j-1}) + R,
//   |R| <= |B_{2q+2}| / ((2q+1)(2q+2) |w|^{2q+1}) * sec(arg(w)/2)^{2q+2}.
CEncl stirling(const CEncl& w, Prec p) {
  CEncl lw = log_c(w);
  CEncl half{Encl::from_string("0.5", p), Encl::exact(0, p)};
  CEncl res = (w - half) * lw - w;
  Encl twopi = const_pi(p) * Encl::exact(2, p);
  res.re = res.re + log_e(twopi) / 2L;

  // sec(arg/2) upper bound; arg in (-pi/2, pi/2) since Re >= 26 > 0
  Encl arg = atan2_e(w.im, w.re);
  Encl sec = Encl::exact(1, p) / cos_e(arg / 2L);
  Encl wmag = abs_c(w);

  CEncl winv = CEncl{Encl::exact(1, p), Encl::exact(0, p)} / w;
  CEncl wpow = winv;  // w^{-(2j-1)}
  CEncl w2inv = winv * winv;
  CEncl acc{Encl::exact(0, p), Encl::exact(0, p)};
  CEncl best_acc = acc;
  MpReal best_rem(p);
  mpfr_set_inf(best_rem.raw(), 1);
  MpReal target(p);
  mpfr_set_ui_2exp(target.raw(), 1, -(p - 8), MPFR_RNDN);
  int qmax = 40;
  for (int j = 1; j <= qmax; ++j) {
    Encl b = bernoulli_2n_encl(j, p);
    Encl denom = Encl::exact(2L * j, p) * Encl::exact(2L * j - 1, p);
    acc = acc + wpow * (b / denom);
    // remainder for stopping after j terms
    Encl b2 = abs_e(bernoulli_2n_encl(j + 1, p));
    Encl d2 = Encl::exact(2L * j + 1, p) * Encl::exact(2L * j + 2, p);
    Encl rem = b2 / d2 / pow_si(wmag, 2 * j + 1) * pow_si(sec, 2 * j + 2);
    MpReal rem_hi(rem.hi());
    if (mpfr_less_p(rem_hi.raw(), best_rem.raw())) {
      best_rem = rem_hi;
      best_acc = acc;
      if (mpfr_less_p(rem_hi.raw(), target.raw())) break;
    } else if (j > 6) {
      break;
    }
    wpow = wpow * w2inv;
  }
  return widen_abs_c(res + best_acc, best_rem);
}

// Stirling for digamma, Re(w) >= 26:
//   psi(w) = log w - 1/(2w) - sum_{j=1}^{q} B_{2j} / (2j w^{2j}) + R,
//   |R| <= |B_{2q+2}| / ((2q+2) |w|^{2q+2}) * sec(arg(w)/2)^{2q+3};
// the sec power comes from |w+x| >= (|w|+x) cos(arg/2) in the integral form.
CEncl stirling_psi(const CEncl& w, Prec p) {
  CEncl res = log_c(w);
  CEncl winv = CEncl{Encl::exact(1, p), Encl::exact(0, p)} / w;
  res = res - winv / Encl::exact(2, p);

  Encl arg = atan2_e(w.im, w.re);
  Encl sec = Encl::exact(1, p) / cos_e(arg / 2L);
  Encl wmag = abs_c(w);

  CEncl w2inv = winv * winv;
  CEncl wpow = w2inv;  // w^{-2j}
  CEncl acc{Encl::exact(0, p), Encl::exact(0, p)};
  CEncl best_acc = acc;
  MpReal best_rem(p);
  mpfr_set_inf(best_rem.raw(), 1);
  MpReal target(p);
  mpfr_set_ui_2exp(target.raw(), 1, -(p - 8), MPFR_RNDN);
  int qmax = 40;
  for (int j = 1; j <= qmax; ++j) {
    Encl b = bernoulli_2n_encl(j, p);
    acc = acc - wpow * (b / Encl::exact(2L * j, p));
    Encl b2 = abs_e(bernoulli_2n_encl(j + 1, p));
    Encl rem = b2 / Encl::exact(2L * j + 2, p) / pow_si(wmag, 2 * j + 2) *
               pow_si(sec, 2 * j + 3);
    MpReal rem_hi(rem.hi());
    if (mpfr_less_p(rem_hi.raw(), best_rem.raw())) {
      best_rem = rem_hi;
      best_acc = acc;
      if (mpfr_less_p(rem_hi.raw(), target.raw())) break;
    } else if (j > 6) {
      break;
    }
    wpow = wpow * w2inv;
  }
  return widen_abs_c(res + best_acc, best_rem);
}

}  // namespace

CEncl log_gamma(const CEncl& z) {
  Prec p = std::max({z.re.prec(), z.im.prec(), work_prec()}) + 32;
  // pole check: box meets {0, -1, -2, ...}
  if (z.im.contains_zero() && mpfr_cmp_d(z.re.lo().raw(), 0.5) < 0) {
    double lo = z.re.lo().d(), hi = z.re.hi().d();
    long k_lo = (long)std::ceil(lo - 1e-12), k_hi = (long)std::floor(hi + 1e-12);
    for (long k = k_lo; k <= k_hi; ++k)
      if (k <= 0 && z.re.contains(k))
        throw PoleError("log_gamma box meets pole at " + std::to_string(k));
  }
  // deterministic shift: K = max(0, ceil(26 - Re_lo))
  double relo = z.re.lo().d();
  long K = std::max(0L, (long)std::ceil(26.0 - relo));
  CEncl w = z + CEncl{Encl::exact(K, p), Encl::exact(0, p)};
  CEncl res = stirling(w, p);
  // log Gamma(z) = log Gamma(z + K) - sum_{m=0}^{K-1} log(z + m)
  for (long m = 0; m < K; ++m)
    res = res - log_c(z + CEncl{Encl::exact(m, p), Encl::exact(0, p)});
  return res;
}

CEncl digamma(const CEncl& z) {
  Prec p = std::max({z.re.prec(), z.im.prec(), work_prec()}) + 32;
  if (z.im.contains_zero() && mpfr_cmp_d(z.re.lo().raw(), 0.5) < 0) {
    double lo = z.re.lo().d(), hi = z.re.hi().d();
    long k_lo = (long)std::ceil(lo - 1e-12), k_hi = (long)std::floor(hi + 1e-12);
    for (long k = k_lo; k <= k_hi; ++k)
      if (k <= 0 && z.re.contains(k))
        throw PoleError("digamma box meets pole at " + std::to_string(k));
  }
  double relo = z.re.lo().d();
  long K = std::max(0L, (long)std::ceil(26.0 - relo));
  CEncl w = z + CEncl{Encl::exact(K, p), Encl::exact(0, p)};
  CEncl res = stirling_psi(w, p);
  // psi(z) = psi(z + K) - sum_{m=0}^{K-1} 1/(z + m)
  CEncl one{Encl::exact(1, p), Encl::exact(0, p)};
  for (long m = 0; m < K; ++m)
    res = res - one / (z + CEncl{Encl::exact(m, p), Encl::exact(0, p)});
  return res;
}

CEncl chi_factor(const CEncl& s) {
  Prec p = std::max({s.re.prec(), s.im.prec(), work_prec()}) + 32;
  CEncl one{Encl::exact(1, p), Encl::exact(0, p)};
  CEncl half{Encl::from_string("0.5", p), Encl::exact(0, p)};
  CEncl two{Encl::exact(2, p), Encl::exact(0, p)};
  Encl lnpi = log_e(const_pi(p));
  CEncl expo = (s - half) * lnpi;
  CEncl lg = log_gamma((one - s) / two) - log_gamma(s / two);
  return exp_c(expo + lg);
}

Encl chi_modulus_pow(const CEncl& s, int k) {
  Prec p = std::max({s.re.prec(), s.im.prec(), work_prec()}) + 32;
  CEncl one{Encl::exact(1, p), Encl::exact(0, p)};
  CEncl half{Encl::from_string("0.5", p), Encl::exact(0, p)};
  CEncl two{Encl::exact(2, p), Encl::exact(0, p)};
  Encl lnpi = log_e(const_pi(p));
  CEncl expo = (s - half) * lnpi;
  CEncl lg = log_gamma((one - s) / two) - log_gamma(s / two);
  Encl re_total = expo.re + lg.re;  // Re log chi = log |chi|
  return exp_e(re_total * (long)k);
}

}  // namespace dk
