#include "dk/mainterm.hpp"

#include <gmpxx.h>

#include <algorithm>

namespace dk {

namespace {
Encl zero_at(Prec p) { return Encl::exact(0, p); }
}  // namespace

const Encl& LaurentSeries::at(int power) const {
  static thread_local Encl zero = Encl::exact(0);
  int idx = power - lowest;
  if (idx < 0 || idx >= (int)coeff.size()) {
    zero = Encl::exact(0, coeff.empty() ? work_prec() : coeff[0].prec());
    return zero;
  }
  return coeff[idx];
}

LaurentSeries zeta_laurent(int terms, Prec p) {
  if (terms < 1) throw DomainError("zeta_laurent needs at least the pole term");
  if (terms - 2 > 14)
    throw TruncationError("zeta_laurent supports at most 14 regular terms");
  Prec pp = p > 0 ? p : work_prec();
  LaurentSeries s;
  s.lowest = -1;
  s.coeff.resize(terms);
  s.coeff[0] = Encl::exact(1, pp);  // 1/u
  if (terms > 1) {
    StieltjesTable tbl = stieltjes_constants(terms - 1, pp);
    mpz_class fact = 1;
    for (int j = 0; j + 1 < terms; ++j) {
      if (j > 0) fact *= j;
      MpReal lo(pp), hi(pp);
      mpfr_set_z(lo.raw(), fact.get_mpz_t(), MPFR_RNDD);
      mpfr_set_z(hi.raw(), fact.get_mpz_t(), MPFR_RNDU);
      Encl f = Encl::from_endpoints(lo, hi);
      Encl c = tbl.values[j] / f;
      if (j % 2 == 1) c = neg(c);
      s.coeff[j + 1] = c;
    }
  }
  return s;
}

LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b, int keep) {
  Prec p = std::max(a.coeff.empty() ? work_prec() : a.coeff[0].prec(),
                    b.coeff.empty() ? work_prec() : b.coeff[0].prec());
  LaurentSeries r;
  r.lowest = a.lowest + b.lowest;
  int n = std::min(keep, (int)(a.coeff.size() + b.coeff.size()) - 1);
  if (n < 1) n = 1;
  r.coeff.assign(n, zero_at(p));
  for (int i = 0; i < (int)a.coeff.size(); ++i)
    for (int j = 0; j < (int)b.coeff.size() && i + j < n; ++j)
      r.coeff[i + j] = r.coeff[i + j] + a.coeff[i] * b.coeff[j];
  return r;
}

LaurentSeries series_pow(const LaurentSeries& a, int k, int keep) {
  if (k < 1) throw DomainError("series_pow needs k >= 1");
  LaurentSeries r = a;
  for (int i = 1; i < k; ++i) r = series_mul(r, a, keep);
  return r;
}

MainTermPolynomial mainterm_poly(int k, Prec p) {
  if (k < 2 || k > 12) throw DomainError("mainterm_poly supports 2 <= k <= 12");
  Prec pp = p > 0 ? p : work_prec();
  // zeta^k needs coefficients of u^{-k}..u^{-1}; guard of two extra orders.
  int terms = k + 2;  // stored length of the base series
  LaurentSeries z = zeta_laurent(terms, pp);
  LaurentSeries zk = series_pow(z, k, terms + 2);
  // Residue of zeta^k(1+u) x^{1+u} / (1+u) at u = 0:
  //   x^{1+u} = x sum_m (log x)^m u^m / m!,  1/(1+u) = sum_q (-1)^q u^q.
  //   a_m = (1/m!) sum_{q=0}^{k-1-m} zk[-1-m-q] (-1)^q.
  MainTermPolynomial P;
  P.k = k;
  P.a.assign(k, zero_at(pp));
  mpz_class fact = 1;
  for (int m = 0; m < k; ++m) {
    if (m > 0) fact *= m;
    Encl s = zero_at(pp);
    for (int q = 0; q + m < k; ++q) {
      Encl c = zk.at(-1 - m - q);
      s = (q % 2 == 0) ? s + c : s - c;
    }
    MpReal lo(pp), hi(pp);
    mpfr_set_z(lo.raw(), fact.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(hi.raw(), fact.get_mpz_t(), MPFR_RNDU);
    P.a[m] = s / Encl::from_endpoints(lo, hi);
  }
  return P;
}

Encl eval_mainterm_log(const MainTermPolynomial& P, const Encl& L) {
  Prec p = std::max(L.prec(), P.a.empty() ? work_prec() : P.a[0].prec());
  Encl acc = Encl::exact(0, p);
  for (int j = (int)P.a.size() - 1; j >= 0; --j) acc = acc * L + P.a[j];
  return acc;
}

Encl eval_mainterm(const MainTermPolynomial& P, const Encl& x) {
  if (!x.strictly_positive()) throw DomainError("eval_mainterm needs x > 0");
  return x * eval_mainterm_log(P, log_e(x));
}

std::vector<Encl> abs_coeff_profile(const MainTermPolynomial& P) {
  std::vector<Encl> r;
  r.reserve(P.a.size());
  for (const Encl& c : P.a) r.push_back(abs_e(c));
  return r;
}

}  // namespace dk
