#pragma once
// Rectangular complex enclosure: a box [re] x [im] containing one exact
// complex value.  Modulus comes back as a real enclosure (Down >= 0).

#include "dk/encl.hpp"

namespace dk {

struct CEncl {
  Encl re, im;

  CEncl() = default;
  CEncl(Encl r, Encl i) : re(std::move(r)), im(std::move(i)) {}
  static CEncl real(const Encl& r) { return {r, Encl::exact(0, r.prec())}; }
};

inline CEncl operator+(const CEncl& a, const CEncl& b) {
  return {a.re + b.re, a.im + b.im};
}
inline CEncl operator-(const CEncl& a, const CEncl& b) {
  return {a.re - b.re, a.im - b.im};
}
inline CEncl operator-(const CEncl& a) { return {neg(a.re), neg(a.im)}; }
inline CEncl operator*(const CEncl& a, const CEncl& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline CEncl conj_c(const CEncl& a) { return {a.re, neg(a.im)}; }
inline Encl norm2_c(const CEncl& a) { return a.re * a.re + a.im * a.im; }
inline Encl abs_c(const CEncl& a) { return sqrt_e(norm2_c(a)); }
inline CEncl operator/(const CEncl& a, const CEncl& b) {
  Encl n2 = norm2_c(b);
  if (!n2.strictly_positive()) throw DomainError("complex division by box containing 0");
  CEncl num = a * conj_c(b);
  return {num.re / n2, num.im / n2};
}
inline CEncl operator*(const CEncl& a, const Encl& s) { return {a.re * s, a.im * s}; }
inline CEncl operator/(const CEncl& a, const Encl& s) { return {a.re / s, a.im / s}; }

// exp(a) = e^re * (cos im, sin im); interval trig handles wide im.
inline CEncl exp_c(const CEncl& a) {
  Encl m = exp_e(a.re);
  return {m * cos_e(a.im), m * sin_e(a.im)};
}

// Principal log; box must avoid the branch cut except for the pure
// negative-real case (mapped to arg = pi).
inline CEncl log_c(const CEncl& a) {
  Encl n2 = norm2_c(a);
  if (!n2.strictly_positive()) throw PoleError("log of box containing 0");
  return {log_e(n2) / 2L, atan2_e(a.im, a.re)};
}

inline CEncl widen_abs_c(const CEncl& a, const MpReal& r) {
  return {widen_abs(a.re, r), widen_abs(a.im, r)};
}

}  // namespace dk
