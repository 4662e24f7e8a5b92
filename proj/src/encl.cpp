#include "dk/encl.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstring>

namespace dk {

namespace {
std::atomic<Prec> g_prec{128};

Prec pick(Prec p) { return p > 0 ? p : work_prec(); }
Prec pick2(const Encl& a, const Encl& b) { return std::max(a.prec(), b.prec()); }
}  // namespace

Prec work_prec() noexcept { return g_prec.load(std::memory_order_relaxed); }
void set_work_prec(Prec bits) {
  if (bits < 64) throw ConfigError("work precision below 64 bits");
  g_prec.store(bits, std::memory_order_relaxed);
}

Encl Encl::exact(long v, Prec p) {
  Encl r;
  r.lo_ = MpReal(pick(p));
  r.hi_ = MpReal(pick(p));
  mpfr_set_si(r.lo_.raw(), v, MPFR_RNDD);
  mpfr_set_si(r.hi_.raw(), v, MPFR_RNDU);
  return r;
}

Encl Encl::exact_i128(__int128 v, Prec p) {
  // 128-bit integers are exact at >= 128 bits of mantissa.
  Prec pp = std::max<Prec>(pick(p), 130);
  bool negv = v < 0;
  unsigned __int128 u = negv ? -(unsigned __int128)v : (unsigned __int128)v;
  uint64_t hi64 = (uint64_t)(u >> 64), lo64 = (uint64_t)u;
  MpReal t(pp);
  mpfr_set_ui(t.raw(), (unsigned long)hi64, MPFR_RNDN);  // ulong is 64-bit here
  mpfr_mul_2ui(t.raw(), t.raw(), 64, MPFR_RNDN);
  MpReal lo_part(pp);
  mpfr_set_ui(lo_part.raw(), (unsigned long)lo64, MPFR_RNDN);
  mpfr_add(t.raw(), t.raw(), lo_part.raw(), MPFR_RNDN);  // exact at pp >= 130
  if (negv) mpfr_neg(t.raw(), t.raw(), MPFR_RNDN);
  Encl r;
  r.lo_ = t;
  r.hi_ = t;
  return r;
}

Encl Encl::from_string(const std::string& dec, Prec p) {
  auto slash = dec.find('/');
  if (slash != std::string::npos) {
    Encl num = from_string(dec.substr(0, slash), p);
    Encl den = from_string(dec.substr(slash + 1), p);
    return div(num, den);
  }
  Encl r;
  r.lo_ = MpReal(pick(p));
  r.hi_ = MpReal(pick(p));
  if (mpfr_set_str(r.lo_.raw(), dec.c_str(), 10, MPFR_RNDD) != 0 &&
      mpfr_nan_p(r.lo_.raw()))
    throw ConfigError("unparseable decimal: " + dec);
  if (mpfr_set_str(r.hi_.raw(), dec.c_str(), 10, MPFR_RNDU) != 0 &&
      mpfr_nan_p(r.hi_.raw()))
    throw ConfigError("unparseable decimal: " + dec);
  return r;
}

Encl Encl::from_endpoints(const MpReal& lo, const MpReal& hi) {
  if (mpfr_greater_p(lo.raw(), hi.raw()))
    throw DomainError("enclosure endpoints out of order");
  Encl r;
  r.lo_ = lo;
  r.hi_ = hi;
  return r;
}

Encl Encl::from_double(double v, Prec p) {
  Encl r;
  r.lo_ = MpReal(pick(p));
  r.hi_ = MpReal(pick(p));
  mpfr_set_d(r.lo_.raw(), v, MPFR_RNDD);
  mpfr_set_d(r.hi_.raw(), v, MPFR_RNDU);
  return r;
}

double Encl::mid_d() const {
  return 0.5 * (mpfr_get_d(lo_.raw(), MPFR_RNDN) + mpfr_get_d(hi_.raw(), MPFR_RNDN));
}

double Encl::wid_d() const {
  MpReal w(prec());
  mpfr_sub(w.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
  return mpfr_get_d(w.raw(), MPFR_RNDU);
}

bool Encl::contains_zero() const {
  return mpfr_sgn(lo_.raw()) <= 0 && mpfr_sgn(hi_.raw()) >= 0;
}
bool Encl::strictly_positive() const { return mpfr_sgn(lo_.raw()) > 0; }
bool Encl::strictly_negative() const { return mpfr_sgn(hi_.raw()) < 0; }

bool Encl::contains(long v) const {
  return mpfr_cmp_si(lo_.raw(), v) <= 0 && mpfr_cmp_si(hi_.raw(), v) >= 0;
}
bool Encl::contains(const Encl& o) const {
  return mpfr_lessequal_p(lo_.raw(), o.lo_.raw()) &&
         mpfr_lessequal_p(o.hi_.raw(), hi_.raw());
}
bool Encl::contains_q(mpq_srcptr q) const {
  return mpfr_cmp_q(lo_.raw(), q) <= 0 && mpfr_cmp_q(hi_.raw(), q) >= 0;
}

std::string Encl::str(int digits) const {
  MpReal m(prec());
  mpfr_add(m.raw(), lo_.raw(), hi_.raw(), MPFR_RNDN);
  mpfr_div_2ui(m.raw(), m.raw(), 1, MPFR_RNDN);
  return decimal_str(m, digits);
}

// ------------------------------------------------------------- arithmetic
Encl add(const Encl& a, const Encl& b) {
  Prec p = pick2(a, b);
  Encl r;
  r.lo_ = MpReal(p);
  r.hi_ = MpReal(p);
  mpfr_add(r.lo_.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
  mpfr_add(r.hi_.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
  return r;
}

Encl sub(const Encl& a, const Encl& b) {
  Prec p = pick2(a, b);
  Encl r;
  r.lo_ = MpReal(p);
  r.hi_ = MpReal(p);
  mpfr_sub(r.lo_.raw(), a.lo_.raw(), b.hi_.raw(), MPFR_RNDD);
  mpfr_sub(r.hi_.raw(), a.hi_.raw(), b.lo_.raw(), MPFR_RNDU);
  return r;
}

Encl neg(const Encl& a) {
  Encl r;
  r.lo_ = MpReal(a.prec());
  r.hi_ = MpReal(a.prec());
  mpfr_neg(r.lo_.raw(), a.hi_.raw(), MPFR_RNDD);
  mpfr_neg(r.hi_.raw(), a.lo_.raw(), MPFR_RNDU);
  return r;
}

Encl mul(const Encl& a, const Encl& b) {
  Prec p = pick2(a, b);
  Encl r;
  r.lo_ = MpReal(p);
  r.hi_ = MpReal(p);
  MpReal t(p);
  // lo: min over the four products rounded down.
  mpfr_mul(r.lo_.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
  mpfr_mul(t.raw(), a.lo_.raw(), b.hi_.raw(), MPFR_RNDD);
  mpfr_min(r.lo_.raw(), r.lo_.raw(), t.raw(), MPFR_RNDD);
  mpfr_mul(t.raw(), a.hi_.raw(), b.lo_.raw(), MPFR_RNDD);
  mpfr_min(r.lo_.raw(), r.lo_.raw(), t.raw(), MPFR_RNDD);
  mpfr_mul(t.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDD);
  mpfr_min(r.lo_.raw(), r.lo_.raw(), t.raw(), MPFR_RNDD);
  // hi: max over the four products rounded up.
  mpfr_mul(r.hi_.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDU);
  mpfr_mul(t.raw(), a.lo_.raw(), b.hi_.raw(), MPFR_RNDU);
  mpfr_max(r.hi_.raw(), r.hi_.raw(), t.raw(), MPFR_RNDU);
  mpfr_mul(t.raw(), a.hi_.raw(), b.lo_.raw(), MPFR_RNDU);
  mpfr_max(r.hi_.raw(), r.hi_.raw(), t.raw(), MPFR_RNDU);
  mpfr_mul(t.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
  mpfr_max(r.hi_.raw(), r.hi_.raw(), t.raw(), MPFR_RNDU);
  return r;
}

Encl div(const Encl& a, const Encl& b) {
  if (b.contains_zero()) throw DomainError("interval division by enclosure of 0");
  Prec p = pick2(a, b);
  Encl r;
  r.lo_ = MpReal(p);
  r.hi_ = MpReal(p);
  MpReal t(p);
  mpfr_div(r.lo_.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
  mpfr_div(t.raw(), a.lo_.raw(), b.hi_.raw(), MPFR_RNDD);
  mpfr_min(r.lo_.raw(), r.lo_.raw(), t.raw(), MPFR_RNDD);
  mpfr_div(t.raw(), a.hi_.raw(), b.lo_.raw(), MPFR_RNDD);
  mpfr_min(r.lo_.raw(), r.lo_.raw(), t.raw(), MPFR_RNDD);
  mpfr_div(t.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDD);
  mpfr_min(r.lo_.raw(), r.lo_.raw(), t.raw(), MPFR_RNDD);
  mpfr_div(r.hi_.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDU);
  mpfr_div(t.raw(), a.lo_.raw(), b.hi_.raw(), MPFR_RNDU);
  mpfr_max(r.hi_.raw(), r.hi_.raw(), t.raw(), MPFR_RNDU);
  mpfr_div(t.raw(), a.hi_.raw(), b.lo_.raw(), MPFR_RNDU);
  mpfr_max(r.hi_.raw(), r.hi_.raw(), t.raw(), MPFR_RNDU);
  mpfr_div(t.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
  mpfr_max(r.hi_.raw(), r.hi_.raw(), t.raw(), MPFR_RNDU);
  return r;
}

Encl abs_e(const Encl& a) {
  Encl r;
  r.lo_ = MpReal(a.prec());
  r.hi_ = MpReal(a.prec());
  if (mpfr_sgn(a.lo_.raw()) >= 0) return a;
  if (mpfr_sgn(a.hi_.raw()) <= 0) return neg(a);
  // straddles 0: [0, max(|lo|, hi)]
  mpfr_set_zero(r.lo_.raw(), 1);
  MpReal t(a.prec());
  mpfr_neg(t.raw(), a.lo_.raw(), MPFR_RNDU);
  mpfr_max(r.hi_.raw(), t.raw(), a.hi_.raw(), MPFR_RNDU);
  return r;
}

Encl sqrt_e(const Encl& a) {
  if (mpfr_sgn(a.hi_.raw()) < 0) throw DomainError("sqrt of negative enclosure");
  Encl r;
  r.lo_ = MpReal(a.prec());
  r.hi_ = MpReal(a.prec());
  if (mpfr_sgn(a.lo_.raw()) < 0)
    mpfr_set_zero(r.lo_.raw(), 1);  // value known >= 0; rounding dust clamped
  else
    mpfr_sqrt(r.lo_.raw(), a.lo_.raw(), MPFR_RNDD);
  mpfr_sqrt(r.hi_.raw(), a.hi_.raw(), MPFR_RNDU);
  return r;
}

Encl exp_e(const Encl& a) {
  Encl r;
  r.lo_ = MpReal(a.prec());
  r.hi_ = MpReal(a.prec());
  mpfr_exp(r.lo_.raw(), a.lo_.raw(), MPFR_RNDD);
  mpfr_exp(r.hi_.raw(), a.hi_.raw(), MPFR_RNDU);
  return r;
}

Encl log_e(const Encl& a) {
  if (mpfr_sgn(a.lo_.raw()) <= 0)
    throw DomainError("log of enclosure touching (-inf, 0]");
  Encl r;
  r.lo_ = MpReal(a.prec());
  r.hi_ = MpReal(a.prec());
  mpfr_log(r.lo_.raw(), a.lo_.raw(), MPFR_RNDD);
  mpfr_log(r.hi_.raw(), a.hi_.raw(), MPFR_RNDU);
  return r;
}

Encl pow_si(const Encl& a, long n) {
  if (n == 0) return Encl::exact(1, a.prec());
  if (n < 0) return div(Encl::exact(1, a.prec()), pow_si(a, -n));
  Encl r;
  r.lo_ = MpReal(a.prec());
  r.hi_ = MpReal(a.prec());
  bool even = (n % 2 == 0);
  if (!even || mpfr_sgn(a.lo_.raw()) >= 0) {
    mpfr_pow_si(r.lo_.raw(), a.lo_.raw(), n, MPFR_RNDD);
    mpfr_pow_si(r.hi_.raw(), a.hi_.raw(), n, MPFR_RNDU);
    return r;
  }
  if (mpfr_sgn(a.hi_.raw()) <= 0) {
    // even power of a nonpositive interval: reversed and positive
    mpfr_pow_si(r.lo_.raw(), a.hi_.raw(), n, MPFR_RNDD);
    mpfr_pow_si(r.hi_.raw(), a.lo_.raw(), n, MPFR_RNDU);
    return r;
  }
  // even power straddling 0: [0, max(lo^n, hi^n)]
  mpfr_set_zero(r.lo_.raw(), 1);
  MpReal t(a.prec());
  mpfr_pow_si(t.raw(), a.lo_.raw(), n, MPFR_RNDU);
  mpfr_pow_si(r.hi_.raw(), a.hi_.raw(), n, MPFR_RNDU);
  mpfr_max(r.hi_.raw(), r.hi_.raw(), t.raw(), MPFR_RNDU);
  return r;
}

Encl pow_q(const Encl& a, long num, long den) {
  if (den == 0) throw DomainError("rational power with zero denominator");
  if (den < 0) { den = -den; num = -num; }
  if (num % den == 0) return pow_si(a, num / den);
  if (mpfr_sgn(a.lo().raw()) <= 0)
    throw DomainError("rational power of nonpositive enclosure");
  Encl q = div(Encl::exact(num, a.prec()), Encl::exact(den, a.prec()));
  return exp_e(mul(q, log_e(a)));
}

Encl pow_e(const Encl& a, const Encl& b) {
  if (mpfr_sgn(a.lo().raw()) <= 0)
    throw DomainError("pow of nonpositive base enclosure");
  return exp_e(mul(b, log_e(a)));
}

Encl max_e(const Encl& a, const Encl& b) {
  Prec p = pick2(a, b);
  Encl r;
  r.lo_ = MpReal(p);
  r.hi_ = MpReal(p);
  mpfr_max(r.lo_.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
  mpfr_max(r.hi_.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
  return r;
}

Encl min_e(const Encl& a, const Encl& b) {
  Prec p = pick2(a, b);
  Encl r;
  r.lo_ = MpReal(p);
  r.hi_ = MpReal(p);
  mpfr_min(r.lo_.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
  mpfr_min(r.hi_.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
  return r;
}

Encl hull(const Encl& a, const Encl& b) {
  Prec p = pick2(a, b);
  Encl r;
  r.lo_ = MpReal(p);
  r.hi_ = MpReal(p);
  mpfr_min(r.lo_.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
  mpfr_max(r.hi_.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
  return r;
}

Encl widen_abs(const Encl& a, const MpReal& rad) {
  if (mpfr_sgn(rad.raw()) < 0) throw DomainError("negative widening radius");
  Encl r;
  r.lo_ = MpReal(a.prec());
  r.hi_ = MpReal(a.prec());
  mpfr_sub(r.lo_.raw(), a.lo_.raw(), rad.raw(), MPFR_RNDD);
  mpfr_add(r.hi_.raw(), a.hi_.raw(), rad.raw(), MPFR_RNDU);
  return r;
}

// -------------------------------------------------- interval trigonometry
namespace {
// Multiples of pi inside [lo, hi] signal cosine extrema (k*pi) or sine
// extrema (pi/2 + k*pi).  Conservative: when in doubt, include the extremum
// (only ever widens).
void trig_hull(const Encl& x, bool is_cos, Encl& out) {
  Prec p = x.prec();
  Encl piv = const_pi(p);
  MpReal lo(p), hi(p), t(p);
  // endpoint values
  if (is_cos) {
    mpfr_cos(lo.raw(), x.lo().raw(), MPFR_RNDD);
    mpfr_cos(t.raw(), x.hi().raw(), MPFR_RNDD);
    mpfr_min(lo.raw(), lo.raw(), t.raw(), MPFR_RNDD);
    mpfr_cos(hi.raw(), x.lo().raw(), MPFR_RNDU);
    mpfr_cos(t.raw(), x.hi().raw(), MPFR_RNDU);
    mpfr_max(hi.raw(), hi.raw(), t.raw(), MPFR_RNDU);
  } else {
    mpfr_sin(lo.raw(), x.lo().raw(), MPFR_RNDD);
    mpfr_sin(t.raw(), x.hi().raw(), MPFR_RNDD);
    mpfr_min(lo.raw(), lo.raw(), t.raw(), MPFR_RNDD);
    mpfr_sin(hi.raw(), x.lo().raw(), MPFR_RNDU);
    mpfr_sin(t.raw(), x.hi().raw(), MPFR_RNDU);
    mpfr_max(hi.raw(), hi.raw(), t.raw(), MPFR_RNDU);
  }
  // extremum scan: critical points are (k + offset) * pi, offset 0 for cos
  // extrema at cos = +-1, 1/2 for sin.
  double offset = is_cos ? 0.0 : 0.5;
  MpReal q(p);
  mpfr_div(q.raw(), x.lo().raw(), piv.lo().raw(), MPFR_RNDD);
  double klo = std::floor(mpfr_get_d(q.raw(), MPFR_RNDD) - offset) - 1;
  mpfr_div(q.raw(), x.hi().raw(), piv.hi().raw(), MPFR_RNDU);
  double khi = std::ceil(mpfr_get_d(q.raw(), MPFR_RNDU) - offset) + 1;
  if (khi - klo > 8) {  // wide interval: full range
    mpfr_set_si(lo.raw(), -1, MPFR_RNDD);
    mpfr_set_si(hi.raw(), 1, MPFR_RNDU);
  } else {
    for (double kd = klo; kd <= khi; kd += 1.0) {
      // critical point c = (kd + offset)*pi; test overlap conservatively
      Encl c = mul(add(Encl::from_double(kd, p), Encl::from_double(offset, p)), piv);
      bool maybe_in = !(mpfr_less_p(c.hi().raw(), x.lo().raw()) ||
                        mpfr_greater_p(c.lo().raw(), x.hi().raw()));
      if (!maybe_in) continue;
      long k = (long)std::llround(kd);
      int val;  // extremum of cos at k*pi is (-1)^k; of sin at pi/2+k*pi is (-1)^k
      val = (((k % 2) + 2) % 2 == 0) ? 1 : -1;
      if (val > 0)
        mpfr_set_si(hi.raw(), 1, MPFR_RNDU);
      else
        mpfr_set_si(lo.raw(), -1, MPFR_RNDD);
    }
  }
  out = Encl::from_endpoints(lo, hi);
}
}  // namespace

Encl cos_e(const Encl& a) {
  Encl r;
  trig_hull(a, true, r);
  return r;
}
Encl sin_e(const Encl& a) {
  Encl r;
  trig_hull(a, false, r);
  return r;
}

Encl atan2_e(const Encl& y, const Encl& x) {
  Prec p = pick2(y, x);
  // Branch-cut cases the formulas need: boxes with im >= 0 or pure-real.
  if (mpfr_sgn(x.lo().raw()) < 0 && mpfr_sgn(y.lo().raw()) == 0 &&
      mpfr_sgn(y.hi().raw()) == 0 && mpfr_sgn(x.hi().raw()) < 0)
    return const_pi(p);  // negative real axis, principal upper-side value
  if (mpfr_sgn(x.lo().raw()) <= 0 && mpfr_sgn(y.lo().raw()) < 0 &&
      mpfr_sgn(y.hi().raw()) > 0)
    throw DomainError("atan2 box straddles the branch cut");
  MpReal lo(p), hi(p), t(p);
  bool first = true;
  auto corner = [&](mpfr_srcptr yy, mpfr_srcptr xx) {
    mpfr_atan2(t.raw(), yy, xx, MPFR_RNDD);
    if (first) mpfr_set(lo.raw(), t.raw(), MPFR_RNDD);
    else mpfr_min(lo.raw(), lo.raw(), t.raw(), MPFR_RNDD);
    mpfr_atan2(t.raw(), yy, xx, MPFR_RNDU);
    if (first) mpfr_set(hi.raw(), t.raw(), MPFR_RNDU);
    else mpfr_max(hi.raw(), hi.raw(), t.raw(), MPFR_RNDU);
    first = false;
  };
  corner(y.lo().raw(), x.lo().raw());
  corner(y.lo().raw(), x.hi().raw());
  corner(y.hi().raw(), x.lo().raw());
  corner(y.hi().raw(), x.hi().raw());
  return Encl::from_endpoints(lo, hi);
}

Cmp certified_compare(const Encl& a, const Encl& b) {
  if (mpfr_less_p(a.hi().raw(), b.lo().raw())) return Cmp::Less;
  if (mpfr_greater_p(a.lo().raw(), b.hi().raw())) return Cmp::Greater;
  return Cmp::Unknown;
}

Cmp certified_compare(const std::function<Encl(Prec)>& fa,
                      const std::function<Encl(Prec)>& fb,
                      Prec start_bits, Prec max_bits) {
  for (Prec p = start_bits; p <= max_bits; p *= 2) {
    Cmp c = certified_compare(fa(p), fb(p));
    if (c != Cmp::Unknown) return c;
  }
  return Cmp::Unknown;
}

// ------------------------------------------------------------- constants
Encl const_pi(Prec p) {
  Prec pp = p > 0 ? p : work_prec();
  MpReal lo(pp), hi(pp);
  mpfr_const_pi(lo.raw(), MPFR_RNDD);
  mpfr_const_pi(hi.raw(), MPFR_RNDU);
  return Encl::from_endpoints(lo, hi);
}

Encl const_euler(Prec p) {
  Prec pp = p > 0 ? p : work_prec();
  MpReal lo(pp), hi(pp);
  mpfr_const_euler(lo.raw(), MPFR_RNDD);
  mpfr_const_euler(hi.raw(), MPFR_RNDU);
  return Encl::from_endpoints(lo, hi);
}

Encl const_e(Prec p) {
  Prec pp = p > 0 ? p : work_prec();
  MpReal one(pp), lo(pp), hi(pp);
  mpfr_set_si(one.raw(), 1, MPFR_RNDN);
  mpfr_exp(lo.raw(), one.raw(), MPFR_RNDD);
  mpfr_exp(hi.raw(), one.raw(), MPFR_RNDU);
  return Encl::from_endpoints(lo, hi);
}

Encl const_ln(unsigned long n, Prec p) {
  if (n == 0) throw DomainError("ln 0");
  Prec pp = p > 0 ? p : work_prec();
  MpReal lo(pp), hi(pp);
  mpfr_log_ui(lo.raw(), n, MPFR_RNDD);
  mpfr_log_ui(hi.raw(), n, MPFR_RNDU);
  return Encl::from_endpoints(lo, hi);
}

// ------------------------------------------------------------ formatting
std::string decimal_str(const MpReal& v, int digits, Dir d) {
  mpfr_exp_t e;
  mpfr_rnd_t rnd = (d == Dir::Down) ? MPFR_RNDD : MPFR_RNDU;
  char* s = mpfr_get_str(nullptr, &e, 10, digits, v.raw(), rnd);
  if (!s) throw PrecisionExhausted("mpfr_get_str failed");
  std::string mant(s);
  mpfr_free_str(s);
  bool negv = !mant.empty() && mant[0] == '-';
  std::string dgs = negv ? mant.substr(1) : mant;
  if (dgs.empty() || dgs.find_first_not_of("0") == std::string::npos)
    return "0";
  std::string out = (negv ? "-" : "");
  out += dgs.substr(0, 1);
  if (dgs.size() > 1) out += "." + dgs.substr(1);
  out += "e" + std::to_string((long)e - 1);
  return out;
}

std::string decimal_str(const MpReal& v, int digits) {
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, digits, v.raw(), MPFR_RNDN);
  if (!s) throw PrecisionExhausted("mpfr_get_str failed");
  std::string mant(s);
  mpfr_free_str(s);
  bool negv = !mant.empty() && mant[0] == '-';
  std::string dgs = negv ? mant.substr(1) : mant;
  if (dgs.empty() || dgs.find_first_not_of("0") == std::string::npos)
    return "0";
  std::string out = (negv ? "-" : "");
  out += dgs.substr(0, 1);
  if (dgs.size() > 1) out += "." + dgs.substr(1);
  out += "e" + std::to_string((long)e - 1);
  return out;
}

}  // namespace dk
