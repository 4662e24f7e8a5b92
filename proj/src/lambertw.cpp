#include "dk/lambertw.hpp"

#include <algorithm>
#include <cmath>

namespace dk {

namespace {

// f(w) = w e^w as enclosure
Encl f_we(const Encl& w) { return w * exp_e(w); }

// double seed for the requested branch (standard iteration, not certified)
double seed(WBranch br, double x) {
  if (br == WBranch::Principal) {
    double w = (x < 1.0) ? x * std::exp(-x * 0.7) : std::log(x) - std::log(std::max(1.0, std::log(x)));
    if (x > -0.3 && x < 0.5) w = x;  // near 0
    for (int i = 0; i < 64; ++i) {
      double e = std::exp(w), g = w * e - x;
      double step = g / (e * (w + 1) - (w + 2) * g / (2 * w + 2));
      if (!std::isfinite(step)) break;
      w -= step;
      if (std::abs(step) < 1e-15 * (std::abs(w) + 1e-15)) break;
    }
    return w;
  }
  // MinusOne branch, x in (-1/e, 0): w <= -1
  double L1 = std::log(-x), L2 = std::log(-L1);
  double w = (x < -0.25) ? -1.0 - std::sqrt(2.0 * (1.0 + M_E * x)) : L1 - L2;
  for (int i = 0; i < 64; ++i) {
    double e = std::exp(w), g = w * e - x;
    double de = e * (w + 1);
    if (de == 0) break;
    double step = g / de;
    if (!std::isfinite(step)) break;
    w -= step;
    if (std::abs(step) < 1e-15 * (std::abs(w) + 1e-15)) break;
  }
  return w;
}

}  // namespace

Encl lambert_w(WBranch branch, const Encl& x) {
  Prec p = std::max(x.prec(), work_prec()) + 32;
  Encl me_inv = neg(exp_e(Encl::exact(-1, p)));  // -1/e

  if (branch == WBranch::Principal) {
    if (certified_compare(x, me_inv) == Cmp::Less)
      throw DomainError("lambert_w principal branch needs x >= -1/e");
  } else {
    if (certified_compare(x, me_inv) == Cmp::Less)
      throw DomainError("lambert_w branch -1 needs x >= -1/e");
    if (!x.strictly_negative())
      throw DomainError("lambert_w branch -1 needs x < 0");
  }

  // Branch-point neighbourhood: enclose via the sqrt envelope around -1.
  // y = 1 + e x in [0, y_hi]; |W + 1| <= s/(1-s) for s = sqrt(2 y) < 1/2.
  Encl y = Encl::exact(1, p) + const_e(p) * x;
  if (mpfr_cmp_d(y.hi().raw(), 1e-12) < 0 || mpfr_sgn(y.lo().raw()) <= 0) {
    Encl y_hi_e = max_e(y, Encl::exact(0, p));
    Encl s = sqrt_e(Encl::exact(2, p) * y_hi_e);
    Encl one = Encl::exact(1, p);
    if (mpfr_cmp_d(s.hi().raw(), 0.5) >= 0)
      throw PrecisionExhausted("lambert_w: branch-point envelope not applicable");
    Encl r = s / (one - s);
    MpReal rad(r.hi());
    Encl w = widen_abs(Encl::exact(-1, p), rad);
    // certify: f over the candidate interval must cover x
    Encl fw = f_we(w);
    if (!fw.contains(x)) throw PrecisionExhausted("lambert_w: branch-point certify failed");
    return w;
  }

  // Newton at double then MPFR, then bracket-certify.
  double xa = x.mid_d();
  double w0 = seed(branch, xa);
  MpReal w(p);
  mpfr_set_d(w.raw(), w0, MPFR_RNDN);
  MpReal e(p), g(p), de(p), step(p);
  for (int i = 0; i < 200; ++i) {
    mpfr_exp(e.raw(), w.raw(), MPFR_RNDN);
    mpfr_mul(g.raw(), w.raw(), e.raw(), MPFR_RNDN);
    mpfr_sub(g.raw(), g.raw(), x.lo().raw(), MPFR_RNDN);
    mpfr_add_ui(de.raw(), w.raw(), 1, MPFR_RNDN);
    mpfr_mul(de.raw(), de.raw(), e.raw(), MPFR_RNDN);
    if (mpfr_zero_p(de.raw())) break;
    mpfr_div(step.raw(), g.raw(), de.raw(), MPFR_RNDN);
    mpfr_sub(w.raw(), w.raw(), step.raw(), MPFR_RNDN);
    mpfr_abs(step.raw(), step.raw(), MPFR_RNDN);
    mpfr_mul_2si(step.raw(), step.raw(), p - 16, MPFR_RNDN);
    MpReal wa(p);
    mpfr_abs(wa.raw(), w.raw(), MPFR_RNDN);
    mpfr_add_d(wa.raw(), wa.raw(), 1e-40, MPFR_RNDN);
    if (mpfr_less_p(step.raw(), wa.raw())) break;
  }
  // bracket radius: a few ulps of w plus widths of x
  MpReal rad(p);
  mpfr_abs(rad.raw(), w.raw(), MPFR_RNDU);
  mpfr_mul_2si(rad.raw(), rad.raw(), -(p - 24), MPFR_RNDU);
  MpReal wx(p);
  mpfr_sub(wx.raw(), x.hi().raw(), x.lo().raw(), MPFR_RNDU);
  mpfr_add(rad.raw(), rad.raw(), wx.raw(), MPFR_RNDU);
  MpReal floorr(p);
  mpfr_set_ui_2exp(floorr.raw(), 1, -(p - 24), MPFR_RNDU);
  mpfr_max(rad.raw(), rad.raw(), floorr.raw(), MPFR_RNDU);

  for (int widen = 0; widen < 60; ++widen) {
    MpReal lo(p), hi(p);
    mpfr_sub(lo.raw(), w.raw(), rad.raw(), MPFR_RNDD);
    mpfr_add(hi.raw(), w.raw(), rad.raw(), MPFR_RNDU);
    Encl cand = Encl::from_endpoints(lo, hi);
    // monotonic bracket: f at endpoints must straddle all of x
    Encl f_lo = f_we(Encl::from_endpoints(lo, lo));
    Encl f_hi = f_we(Encl::from_endpoints(hi, hi));
    bool ok;
    if (branch == WBranch::Principal) {
      // f increasing on [-1, inf)
      ok = mpfr_less_p(f_lo.hi().raw(), x.lo().raw()) &&
           mpfr_greater_p(f_hi.lo().raw(), x.hi().raw());
    } else {
      // f decreasing on (-inf, -1]
      ok = mpfr_greater_p(f_lo.lo().raw(), x.hi().raw()) &&
           mpfr_less_p(f_hi.hi().raw(), x.lo().raw());
    }
    if (ok) return cand;
    mpfr_mul_2ui(rad.raw(), rad.raw(), 1, MPFR_RNDU);
  }
  throw PrecisionExhausted("lambert_w: bracket certification failed");
}

}  // namespace dk
