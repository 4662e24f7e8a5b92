#include "dk/bernoulli.hpp"

#include <vector>

namespace dk {

namespace {
constexpr int kMaxN = 80;  // B_0 .. B_160

// Full table B_0..B_{2*kMaxN} via the defining recurrence
// sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1, B_0 = 1.
std::vector<mpq_class> build_table() {
  int m_hi = 2 * kMaxN;
  std::vector<mpq_class> B(m_hi + 1);
  B[0] = 1;
  for (int m = 1; m <= m_hi; ++m) {
    mpq_class acc = 0;
    mpz_class binom = 1;  // C(m+1, 0)
    for (int j = 0; j < m; ++j) {
      acc += mpq_class(binom) * B[j];
      binom *= (m + 1 - j);
      binom /= (j + 1);
    }
    // binom now C(m+1, m) = m+1
    B[m] = -acc / mpq_class(binom);
  }
  return B;
}

const std::vector<mpq_class>& table() {
  static const std::vector<mpq_class> t = build_table();  // magic-static init
  return t;
}
}  // namespace

const mpq_class& bernoulli_2n(int n) {
  if (n < 0 || n > kMaxN) throw RangeError("Bernoulli index out of table range");
  return table()[2 * n];
}

int bernoulli_max_index() { return kMaxN; }

Encl bernoulli_2n_encl(int n, Prec p) {
  const mpq_class& q = bernoulli_2n(n);
  Prec pp = p > 0 ? p : work_prec();
  MpReal lo(pp), hi(pp);
  mpfr_set_q(lo.raw(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.raw(), q.get_mpq_t(), MPFR_RNDU);
  return Encl::from_endpoints(lo, hi);
}

}  // namespace dk
