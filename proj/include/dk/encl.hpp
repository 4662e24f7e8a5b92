#pragma once
// Outward-rounded interval arithmetic over MPFR.
//
// Encl [lo, hi] always contains the one exact real it stands for; every
// operation rounds lo toward -inf and hi toward +inf, so chains of operations
// stay certified.  DirectedReal is the one-sided view (an endpoint plus its
// direction) used wherever the formulas only need an Up or Down bound.

#include <mpfr.h>
#include <gmp.h>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dk/errors.hpp"

namespace dk {

using Prec = mpfr_prec_t;

// Process-wide default working precision in bits (>= 64).
Prec work_prec() noexcept;
void set_work_prec(Prec bits);

enum class Dir { Down, Up };
enum class Cmp { Less, Greater, Unknown };

// Value-semantic wrapper of one mpfr_t.
class MpReal {
 public:
  explicit MpReal(Prec p = 0) {
    mpfr_init2(v_, p > 0 ? p : work_prec());
    mpfr_set_zero(v_, 1);
  }
  MpReal(const MpReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  MpReal(MpReal&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  MpReal& operator=(const MpReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  MpReal& operator=(MpReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~MpReal() { mpfr_clear(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  Prec prec() const { return mpfr_get_prec(v_); }
  double d() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

class Encl {
 public:
  Encl() : lo_(), hi_() {}
  // Exact conversions (no rounding).
  static Encl exact(long v, Prec p = 0);
  static Encl exact_i128(__int128 v, Prec p = 0);
  // Decimal string, outward-rounded; accepts "1.6", "-0.05", "4.0772e40",
  // and exact rationals "5/12".
  static Encl from_string(const std::string& dec, Prec p = 0);
  static Encl from_endpoints(const MpReal& lo, const MpReal& hi);
  static Encl from_double(double v, Prec p = 0);  // exact binary double

  const MpReal& lo() const { return lo_; }
  const MpReal& hi() const { return hi_; }
  Prec prec() const { return lo_.prec(); }

  double mid_d() const;
  double wid_d() const;        // hi - lo rounded up, as double
  bool is_point() const { return mpfr_equal_p(lo_.raw(), hi_.raw()); }
  bool contains_zero() const;
  bool strictly_positive() const;  // lo > 0
  bool strictly_negative() const;  // hi < 0
  bool contains(long v) const;
  bool contains(const Encl& other) const;  // other subseteq this
  bool contains_q(mpq_srcptr q) const;

  // One-sided view.
  const MpReal& bound(Dir d) const { return d == Dir::Down ? lo_ : hi_; }

  std::string str(int digits = 20) const;  // midpoint decimal, for reporting

 private:
  MpReal lo_, hi_;
  friend Encl add(const Encl&, const Encl&);
  friend Encl sub(const Encl&, const Encl&);
  friend Encl mul(const Encl&, const Encl&);
  friend Encl div(const Encl&, const Encl&);
  friend Encl neg(const Encl&);
  friend Encl abs_e(const Encl&);
  friend Encl sqrt_e(const Encl&);
  friend Encl exp_e(const Encl&);
  friend Encl log_e(const Encl&);
  friend Encl pow_si(const Encl&, long);
  friend Encl max_e(const Encl&, const Encl&);
  friend Encl min_e(const Encl&, const Encl&);
  friend Encl cos_e(const Encl&);
  friend Encl sin_e(const Encl&);
  friend Encl atan2_e(const Encl&, const Encl&);
  friend Encl hull(const Encl&, const Encl&);
  friend Encl widen_abs(const Encl&, const MpReal&);
  friend Cmp certified_compare(const Encl&, const Encl&);
};

Encl add(const Encl& a, const Encl& b);
Encl sub(const Encl& a, const Encl& b);
Encl mul(const Encl& a, const Encl& b);
Encl div(const Encl& a, const Encl& b);  // DomainError if b straddles 0
Encl neg(const Encl& a);
Encl abs_e(const Encl& a);
Encl sqrt_e(const Encl& a);  // DomainError if a.hi < 0; lo clamped at 0
Encl exp_e(const Encl& a);
Encl log_e(const Encl& a);  // DomainError unless a.lo > 0
Encl pow_si(const Encl& a, long n);
// a^(num/den) for a.lo > 0 (general rational power through exp/log).
Encl pow_q(const Encl& a, long num, long den);
// a^b for a.lo > 0.
Encl pow_e(const Encl& a, const Encl& b);
Encl max_e(const Encl& a, const Encl& b);
Encl min_e(const Encl& a, const Encl& b);
Encl cos_e(const Encl& a);  // interval cosine (handles wide arguments)
Encl sin_e(const Encl& a);
Encl atan2_e(const Encl& y, const Encl& x);  // box excluded from cut handled by caller
Encl hull(const Encl& a, const Encl& b);
// [a.lo - r, a.hi + r] for r >= 0 (fold a symmetric error bound in).
Encl widen_abs(const Encl& a, const MpReal& r);

inline Encl operator+(const Encl& a, const Encl& b) { return add(a, b); }
inline Encl operator-(const Encl& a, const Encl& b) { return sub(a, b); }
inline Encl operator*(const Encl& a, const Encl& b) { return mul(a, b); }
inline Encl operator/(const Encl& a, const Encl& b) { return div(a, b); }
inline Encl operator-(const Encl& a) { return neg(a); }
inline Encl operator+(const Encl& a, long b) { return add(a, Encl::exact(b, a.prec())); }
inline Encl operator-(const Encl& a, long b) { return sub(a, Encl::exact(b, a.prec())); }
inline Encl operator*(const Encl& a, long b) { return mul(a, Encl::exact(b, a.prec())); }
inline Encl operator/(const Encl& a, long b) { return div(a, Encl::exact(b, a.prec())); }
inline Encl operator+(long a, const Encl& b) { return add(Encl::exact(a, b.prec()), b); }
inline Encl operator-(long a, const Encl& b) { return sub(Encl::exact(a, b.prec()), b); }
inline Encl operator*(long a, const Encl& b) { return mul(Encl::exact(a, b.prec()), b); }
inline Encl operator/(long a, const Encl& b) { return div(Encl::exact(a, b.prec()), b); }

// Certified order: Less iff a.hi < b.lo, Greater iff a.lo > b.hi.
Cmp certified_compare(const Encl& a, const Encl& b);

// Escalating variant: re-evaluates both sides at doubling precision until the
// order is certified or max_bits is hit (then Unknown).
Cmp certified_compare(const std::function<Encl(Prec)>& a,
                      const std::function<Encl(Prec)>& b,
                      Prec start_bits, Prec max_bits = 1024);

// Constants as enclosures.
Encl const_pi(Prec p = 0);
Encl const_euler(Prec p = 0);
Encl const_e(Prec p = 0);
Encl const_ln(unsigned long n, Prec p = 0);  // ln n

// One-sided wrapper: endpoint of an enclosure tagged with its direction.
struct DirectedReal {
  MpReal value;
  Dir dir;
};
inline DirectedReal directed(const Encl& e, Dir d) { return {MpReal(e.bound(d)), d}; }

// Directed decimal formatting: shortest decimal with `digits` significant
// figures rounded in direction d (RNDD/RNDU), e.g. for publication rules.
std::string decimal_str(const MpReal& v, int digits, Dir d);
std::string decimal_str(const MpReal& v, int digits);  // round-to-nearest

}  // namespace dk
