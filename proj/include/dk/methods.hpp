#pragma once
// Bound engine: method parameters -> kappa triple -> admissibility floor x1 ->
// certified omega at the published x1.  Four Perron/moment routes plus the
// functional-equation route share one evaluation pipeline; only the tail
// block differs per route.

#include <string>
#include <utility>
#include <vector>

#include "dk/bigpoint.hpp"
#include "dk/encl.hpp"
#include "dk/mainterm.hpp"

namespace dk {

// Exact rational, gcd-reduced with positive denominator.  Exponent pairs and
// kappa_2/kappa_3 are rationals in eps/eps1 with small decimal denominators,
// so long long arithmetic never overflows.
struct Frac {
  long long num = 0;
  long long den = 1;

  Frac() = default;
  Frac(long long n, long long d = 1);       // normalizes, d != 0
  static Frac parse(const std::string& s);  // "5/12", "0.361", "3"

  Frac operator+(const Frac& o) const;
  Frac operator-(const Frac& o) const;
  Frac operator*(const Frac& o) const;
  Frac operator/(const Frac& o) const;  // o != 0
  bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Frac& o) const { return !(*this == o); }

  bool is_zero() const { return num == 0; }
  double d() const { return (double)num / (double)den; }
  Encl encl(Prec p = 0) const;  // exact binary enclosure of num/den
  std::string str() const;      // "2999/4000", "-6/7", "3"
};

enum class Method {
  FourthSmallT,  // fourth-moment route anchored at T0 = 3000
  FourthLargeT,  // fourth-moment route anchored at T0 = 5.5e7
  SecondSmallT,  // second-moment route anchored at T0 = 4
  SecondLargeT,  // second-moment route anchored at T0 = 1.1e30
  FunctionalEq,  // functional-equation route anchored at T0 = 3
};
Method method_from_string(const std::string& s);  // ConfigError on junk
const char* method_name(Method m);                // names above
bool is_fourth(Method m);
bool is_second(Method m);

struct MethodParams {
  int k = 0;
  Frac eps;      // strip parameter, 0 < eps < eps1
  Frac eps1;     // contour-height parameter
  Frac a;        // tail split, 1.6 <= a <= e^{h_k}
  BigPoint x0;   // requested anchor; the floor includes the arm a * x0
  Method method = Method::FourthSmallT;
  bool small_kappa = false;  // fourth-moment variant taking T1 = x^{kappa3}

  Encl eps_e(Prec p = 0) const { return eps.encl(p); }
  Encl eps1_e(Prec p = 0) const { return eps1.encl(p); }
  Encl a_e(Prec p = 0) const { return a.encl(p); }

  // ConfigError on any broken invariant:
  //   2 <= k <= 12 (k >= 4 on fourth-moment routes),
  //   0 < eps < eps1 < lambda(k)/loglog 3 - 1 for k <= 9,
  //   eps1 <= 0.2 on fourth-moment routes unless small_kappa,
  //   eps1 <= 1.3 on SecondSmallT, eps < 0.31 on FunctionalEq,
  //   1.6 <= a <= e^{h_k}.
  void validate() const;
};

// How T1 (the moment-envelope instantiation height) relates to T.
enum class T1Rule { KappaTimesPow, PowOnly };

struct KappaTriple {
  Encl k1;      // kappa_1 > 0
  Frac k2, k3;  // kappa_2 <= 0 (fourth) / = 0 (second), kappa_3 > 0; exact
  Encl T0;      // method anchor, exact decimal
  T1Rule t1rule = T1Rule::KappaTimesPow;  // PowOnly iff small_kappa variant
};

KappaTriple kappa_select(const MethodParams& mp, Prec p = 0);

// Exponent pair of |Delta_k(x)| < omega x^gamma log^beta x.  `stated` is the
// published pair, `formula` the pair the remainder quotient is evaluated
// with; they differ only in the fourth-moment k = 4 presentation, which
// states the weaker gamma = 3/5 while the formulas give 1/2.
struct ExponentPair {
  Frac gamma, beta;
};
struct Exponents {
  ExponentPair stated, formula;
};
Exponents exponents(const MethodParams& mp);

// Admissibility floor: max over every constraint arm of the route.  Floor
// conditions always use the formula gamma.
struct FloorResult {
  Encl x1;                                         // max of the arms
  std::vector<std::pair<std::string, Encl>> arms;  // name -> value
  std::string active;                              // argmax arm
};
FloorResult x1_floor(const MethodParams& mp, Prec p = 0);

// Remainder components of |Delta_k|(x) / (x^gamma log^beta x) at one
// abscissa, with T instantiated by the route's formula at that x.
struct OmegaParts {
  Encl half;  // half-integer lattice arm (Perron r9 tail)
  Encl intg;  // integer lattice arm (Perron r12 tail, includes pole block)
  Encl T, T1;
};
OmegaParts omega_components(const MethodParams& mp, const KappaTriple& kap,
                            const Encl& x, Prec p = 0);

enum class Domain { Integers, HalfIntegers, IntegersAndHalfIntegers, Reals };
const char* domain_name(Domain d);

// |Delta_k(x)| < omega x^gamma log^beta x for x >= x1 in `domain`.
struct ExplicitBound {
  int k = 0;
  Encl omega;        // Up-certified leading constant
  Frac gamma, beta;  // exact exponents
  BigPoint x1;
  Domain domain = Domain::IntegersAndHalfIntegers;
  Method method = Method::FourthSmallT;
};

// Full pipeline for one parameter row: floor, publication rounding of the
// floor (integer ceiling below 1e6, else 5 significant figures), omega
// evaluated at the published x1 so the stated bound is checkable verbatim.
struct RowResult {
  MethodParams params;
  KappaTriple kap;
  Exponents expo;
  FloorResult floor;
  BigPoint x1_pub;
  OmegaParts parts;  // at x1_pub
  Encl omega;        // max(half, intg)

  ExplicitBound bound() const;       // stated exponents, both lattices
  ExplicitBound bound_half() const;  // half-integer arm alone
  ExplicitBound bound_int() const;   // integer arm alone
};
RowResult evaluate_row(const MethodParams& mp, Prec p = 0);

// Shorthand: evaluate_row(...).bound().
ExplicitBound omega_bound(const MethodParams& mp, Prec p = 0);

// sum_j |a_j| (r7 + r8) with (tau, ups) = (gamma, beta): the price of moving
// from the half-integer lattice to all reals x >= x1 + 1/2.
Encl extension_correction(const MainTermPolynomial& P, const Frac& gamma,
                          const Frac& beta, const Encl& x1, Prec p = 0);

// Splice integer and half-integer bounds into one over all reals
// x >= x1 + 1/2: omega' = max(omega_int, omega_half) + correction.
// MismatchError unless k, exponents, and x1 agree.
ExplicitBound extend_to_reals(const ExplicitBound& b_int,
                              const ExplicitBound& b_half,
                              const MainTermPolynomial& P, Prec p = 0);

// Index of the least omega x^gamma log^beta x among candidates whose domain
// and threshold admit x; certified comparison (PrecisionExhausted on ties
// beyond 512 bits), NoApplicableBound if no candidate covers x.
size_t best_bound(const std::vector<ExplicitBound>& cands, const BigPoint& x,
                  Prec p = 0);

}  // namespace dk
