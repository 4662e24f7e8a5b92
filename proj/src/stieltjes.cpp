#include "dk/stieltjes.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <vector>

#include "dk/bernoulli.hpp"

namespace dk {

namespace {

// Derivative coefficients of f_j(x) = ln^j(x)/x:
//   f_j^{(m)}(x) = x^{-(m+1)} sum_i c[m][i] ln^i x,
//   c[0][i] = [i == j],  c[m+1][i] = (i+1) c[m][i+1] - (m+1) c[m][i].
std::vector<std::vector<mpz_class>> deriv_coeffs(int j, int mmax) {
  std::vector<std::vector<mpz_class>> c(mmax + 1, std::vector<mpz_class>(j + 1));
  c[0][j] = 1;
  for (int m = 0; m < mmax; ++m)
    for (int i = 0; i <= j; ++i) {
      mpz_class v = 0;
      if (i + 1 <= j) v += mpz_class(i + 1) * c[m][i + 1];
      v -= mpz_class(m + 1) * c[m][i];
      c[m + 1][i] = v;
    }
  return c;
}

Encl from_z(const mpz_class& z, Prec p) {
  MpReal lo(p), hi(p);
  mpfr_set_z(lo.raw(), z.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi.raw(), z.get_mpz_t(), MPFR_RNDU);
  return Encl::from_endpoints(lo, hi);
}

}  // namespace

StieltjesTable stieltjes_constants(int count, Prec p) {
  if (count < 1) throw DomainError("stieltjes_constants needs count >= 1");
  int J = count - 1;
  if (J > 16) throw DomainError("stieltjes_constants supports J <= 16");
  Prec pp = std::max<Prec>((p > 0 ? p : work_prec()) + 64, 256);
  const unsigned long N = 120;
  const int qmax = 40;

  // shared per-n data: ln n and its powers up to J
  std::vector<Encl> lnn(N + 1);
  for (unsigned long n = 1; n <= N; ++n) lnn[n] = const_ln(n, pp);

  StieltjesTable table;
  table.values.reserve(count);
  Encl lnN = lnn[N];
  Encl Ne = Encl::exact((long)N, pp);

  for (int j = 0; j <= J; ++j) {
    auto c = deriv_coeffs(j, 2 * qmax + 1);
    // powers of ln N up to j
    std::vector<Encl> lNp(j + 1);
    lNp[0] = Encl::exact(1, pp);
    for (int i = 1; i <= j; ++i) lNp[i] = lNp[i - 1] * lnN;

    // direct sum  sum_{n=1}^{N} ln^j n / n
    Encl sum = Encl::exact(0, pp);
    for (unsigned long n = 1; n <= N; ++n) {
      Encl term = Encl::exact(1, pp);
      for (int i = 0; i < j; ++i) term = term * lnn[n];
      sum = sum + term / Encl::exact((long)n, pp);
    }
    // - ln^{j+1} N / (j+1)
    sum = sum - (lNp[j] * lnN) / Encl::exact(j + 1, pp);
    // - f_j(N)/2
    sum = sum - lNp[j] / (Ne * Encl::exact(2, pp));

    // correction terms with running best remainder
    Encl acc = Encl::exact(0, pp);
    Encl best_acc = acc;
    MpReal best_rem(pp);
    mpfr_set_inf(best_rem.raw(), 1);
    mpz_class fact = 1;  // (2m)!
    // We evaluate f^{(2m-1)}(N) = N^{-2m} sum_i c[2m-1][i] ln^i N
    for (int m = 1; m <= qmax; ++m) {
      fact *= (2 * m - 1);
      fact *= (2 * m);
      // N^{2m}
      Encl N2m = Encl::exact(1, pp);
      {
        // cheap: N^{2m} via repeated square of exact integer is exact in mpz
        mpz_class z;
        mpz_ui_pow_ui(z.get_mpz_t(), N, 2 * (unsigned long)m);
        N2m = from_z(z, pp);
      }
      Encl f_odd = Encl::exact(0, pp);
      for (int i = 0; i <= j; ++i)
        if (c[2 * m - 1][i] != 0) f_odd = f_odd + from_z(c[2 * m - 1][i], pp) * lNp[i];
      f_odd = f_odd / N2m;
      acc = acc - bernoulli_2n_encl(m, pp) / from_z(fact, pp) * f_odd;

      // remainder bound via |f^{(2m)}|:
      //   |R| <= 4/(2pi)^{2m} * sum_i |c[2m][i]| * I_i,
      //   I_i = int_N^inf ln^i x x^{-2m-1} dx
      //       = e^{-2mL} sum_{r<=i} i!/(i-r)! L^{i-r}/(2m)^{r+1},  L = ln N.
      Encl tail = Encl::exact(0, pp);
      Encl twom = Encl::exact(2 * m, pp);
      for (int i = 0; i <= j; ++i) {
        if (c[2 * m][i] == 0) continue;
        Encl I = Encl::exact(0, pp);
        mpz_class fall = 1;  // i!/(i-r)!
        Encl invpow = Encl::exact(1, pp) / twom;  // (2m)^{-(r+1)}
        for (int r = 0; r <= i; ++r) {
          I = I + from_z(fall, pp) * lNp[i - r] * invpow;
          fall *= (i - r);
          invpow = invpow / twom;
        }
        // e^{-2mL} = N^{-2m}
        I = I / N2m;
        Encl ci = abs_e(from_z(c[2 * m][i], pp));
        tail = tail + ci * I;
      }
      Encl twopi = const_pi(pp) * Encl::exact(2, pp);
      Encl pref = Encl::exact(4, pp) / pow_si(twopi, 2 * m);
      Encl rem = pref * tail;
      MpReal rem_hi(rem.hi());
      if (mpfr_less_p(rem_hi.raw(), best_rem.raw())) {
        best_rem = rem_hi;
        best_acc = acc;
        MpReal target(pp);
        mpfr_set_str(target.raw(), "1e-40", 10, MPFR_RNDN);
        if (mpfr_less_p(rem_hi.raw(), target.raw())) break;
      }
    }
    Encl gamma_j = widen_abs(sum + best_acc, best_rem);
    if (gamma_j.wid_d() > 1e-30)
      throw PrecisionExhausted("stieltjes width target 1e-30 unreachable at j=" +
                               std::to_string(j));
    table.values.push_back(gamma_j);
  }
  return table;
}

}  // namespace dk
