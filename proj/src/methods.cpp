// Bound engine: kappa selection, admissibility floors, omega evaluation at
// the published threshold, and the lattice -> all-reals extension.

#include "dk/methods.hpp"

#include <mpfr.h>

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "dk/divisor.hpp"
#include "dk/errors.hpp"
#include "dk/lambertw.hpp"
#include "dk/rfuncs.hpp"

namespace dk {

// ------------------------------------------------------------ exact rationals
namespace {

long long checked_ll(__int128 v, const char* what) {
  if (v > (__int128)0x7fffffffffffffffLL || v < -(__int128)0x7fffffffffffffffLL)
    throw CapacityError(std::string("rational overflow in ") + what);
  return (long long)v;
}

Frac make_frac(__int128 n, __int128 d, const char* what) {
  if (d == 0) throw DomainError("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 an = n < 0 ? -n : n;
  __int128 g = 1;
  {
    __int128 x = an, y = d;
    while (y) {
      __int128 t = x % y;
      x = y;
      y = t;
    }
    g = x == 0 ? 1 : x;
  }
  Frac f;
  f.num = checked_ll(n / g, what);
  f.den = checked_ll(d / g, what);
  return f;
}

}  // namespace

Frac::Frac(long long n, long long d) { *this = make_frac(n, d, "Frac()"); }

Frac Frac::parse(const std::string& s) {
  if (s.empty()) throw ConfigError("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    long long n = std::strtoll(s.substr(0, slash).c_str(), nullptr, 10);
    long long d = std::strtoll(s.substr(slash + 1).c_str(), nullptr, 10);
    if (d == 0) throw ConfigError("zero denominator in '" + s + "'");
    return Frac(n, d);
  }
  bool negate = s[0] == '-';
  std::string t = (s[0] == '-' || s[0] == '+') ? s.substr(1) : s;
  auto dot = t.find('.');
  std::string digits = dot == std::string::npos
                           ? t
                           : t.substr(0, dot) + t.substr(dot + 1);
  size_t fraclen = dot == std::string::npos ? 0 : t.size() - dot - 1;
  if (digits.empty() || digits.size() > 18 ||
      digits.find_first_not_of("0123456789") != std::string::npos)
    throw ConfigError("malformed rational literal '" + s + "'");
  long long num = 0, den = 1;
  for (char ch : digits) num = num * 10 + (ch - '0');
  for (size_t i = 0; i < fraclen; ++i) den *= 10;
  return Frac(negate ? -num : num, den);
}

Frac Frac::operator+(const Frac& o) const {
  return make_frac((__int128)num * o.den + (__int128)o.num * den,
                   (__int128)den * o.den, "+");
}
Frac Frac::operator-(const Frac& o) const {
  return make_frac((__int128)num * o.den - (__int128)o.num * den,
                   (__int128)den * o.den, "-");
}
Frac Frac::operator*(const Frac& o) const {
  return make_frac((__int128)num * o.num, (__int128)den * o.den, "*");
}
Frac Frac::operator/(const Frac& o) const {
  if (o.num == 0) throw DomainError("rational division by zero");
  return make_frac((__int128)num * o.den, (__int128)den * o.num, "/");
}

Encl Frac::encl(Prec p) const {
  if (p == 0) p = work_prec();
  return div(Encl::exact(num, p), Encl::exact(den, p));
}

std::string Frac::str() const {
  std::ostringstream os;
  os << num;
  if (den != 1) os << "/" << den;
  return os.str();
}

// ------------------------------------------------------------- method naming
Method method_from_string(const std::string& s) {
  if (s == "FourthSmallT") return Method::FourthSmallT;
  if (s == "FourthLargeT") return Method::FourthLargeT;
  if (s == "SecondSmallT") return Method::SecondSmallT;
  if (s == "SecondLargeT") return Method::SecondLargeT;
  if (s == "FunctionalEq") return Method::FunctionalEq;
  throw ConfigError("unknown method '" + s + "'");
}

const char* method_name(Method m) {
  switch (m) {
    case Method::FourthSmallT: return "FourthSmallT";
    case Method::FourthLargeT: return "FourthLargeT";
    case Method::SecondSmallT: return "SecondSmallT";
    case Method::SecondLargeT: return "SecondLargeT";
    case Method::FunctionalEq: return "FunctionalEq";
  }
  return "?";
}

bool is_fourth(Method m) {
  return m == Method::FourthSmallT || m == Method::FourthLargeT;
}
bool is_second(Method m) {
  return m == Method::SecondSmallT || m == Method::SecondLargeT;
}

const char* domain_name(Domain d) {
  switch (d) {
    case Domain::Integers: return "integers";
    case Domain::HalfIntegers: return "half-integers";
    case Domain::IntegersAndHalfIntegers: return "integers+half-integers";
    case Domain::Reals: return "reals";
  }
  return "?";
}

// ------------------------------------------------------- parameter invariants
void MethodParams::validate() const {
  if (k < 2 || k > 12) throw ConfigError("k outside 2..12");
  if (is_fourth(method) && k < 4)
    throw ConfigError("fourth-moment routes need k >= 4");
  if (small_kappa && !is_fourth(method))
    throw ConfigError("small-kappa variant exists only on fourth-moment routes");
  if (eps.num <= 0) throw ConfigError("eps must be positive");
  if ((eps1 - eps).num <= 0) throw ConfigError("eps1 must exceed eps");
  if (k <= 9) {
    // eps1 < lambda(k)/loglog 3 - 1 (the pole-block exponent stays admissible)
    Prec p = work_prec();
    Encl lim = lambda_growth(k, p) / log_e(log_e(Encl::exact(3, p))) - 1L;
    if (certified_compare(eps1.encl(p), lim) != Cmp::Less)
      throw ConfigError("eps1 not below lambda(k)/loglog 3 - 1");
  }
  if (is_fourth(method) && !small_kappa && (Frac(1, 5) - eps1).num < 0)
    throw ConfigError("eps1 > 0.2 needs the small-kappa fourth-moment variant");
  if (method == Method::SecondSmallT && (Frac(13, 10) - eps1).num < 0)
    throw ConfigError("eps1 > 1.3 unsupported on SecondSmallT");
  if (method == Method::FunctionalEq && (Frac(31, 100) - eps).num <= 0)
    throw ConfigError("eps >= 0.31 unsupported on FunctionalEq");
  if ((a - Frac(8, 5)).num < 0) throw ConfigError("a below 1.6");
  {
    Prec p = work_prec();
    Encl ehk = exp_e(hk_policy(k, p));
    if (certified_compare(a.encl(p), ehk) == Cmp::Greater)
      throw ConfigError("a above e^{h_k}");
  }
}

// ------------------------------------------------------------ kappa selection
KappaTriple kappa_select(const MethodParams& mp, Prec p) {
  if (p == 0) p = work_prec();
  mp.validate();
  const int k = mp.k;
  const Encl eps = mp.eps_e(p);
  const Encl eps1 = mp.eps1_e(p);
  const Encl c = 1L + eps1;
  const Encl pi = const_pi(p);
  auto dec = [&](const char* s) { return Encl::from_string(s, p); };

  KappaTriple kt;
  kt.t1rule = mp.small_kappa ? T1Rule::PowOnly : T1Rule::KappaTimesPow;
  switch (mp.method) {
    case Method::FourthSmallT:
    case Method::FourthLargeT: {
      const bool small = mp.method == Method::FourthSmallT;
      kt.T0 = small ? Encl::exact(3000, p) : dec("5.5e7");
      // kappa1 = (5 pi^2 (k+2) a1(c,c,T0)^k / (q 0.611^{k-4}))^{6/(k+2)},
      // q = 6 at T0 = 3000 and 3 at T0 = 5.5e7
      Encl denom = Encl::exact(small ? 6 : 3, p) * pow_si(dec("0.611"), k - 4);
      Encl base =
          5L * pow_si(pi, 2) * (long)(k + 2) *
          pow_si(zeta_line_a1(c, c, kt.T0), k) / denom;
      kt.k1 = pow_q(base, 6, k + 2);
      kt.k2 = Frac(-6, k + 2);
      kt.k3 = Frac(3) * (Frac(1) + Frac(2) * mp.eps1) / Frac(k + 2);
      break;
    }
    case Method::SecondSmallT: {
      kt.T0 = Encl::exact(4, p);
      Encl lead = dec("0.611");
      Encl base = pow_si(lead, 2) * (1L + 2L * eps1) *
                  pow_si(zeta_line_a1(c, c, kt.T0) / lead, k);
      kt.k1 = pow_q(base, 6, k + 4);
      kt.k2 = Frac(0);
      kt.k3 = Frac(3) * (Frac(1) + Frac(2) * mp.eps1) / Frac(k + 4);
      break;
    }
    case Method::SecondLargeT: {
      kt.T0 = dec("1.1e30");
      Encl base = (1L + 2L * eps1) * pow_si(zeta_line_a3(c, c, kt.T0), k) /
                  pow_si(dec("0.566"), k - 2);
      kt.k1 = pow_q(base, 6, k + 4);
      kt.k2 = Frac(0);
      kt.k3 = Frac(3) * (Frac(1) + Frac(2) * mp.eps1) / Frac(k + 4);
      break;
    }
    case Method::FunctionalEq: {
      kt.T0 = Encl::exact(3, p);
      const Frac D = Frac(k) * (Frac(1) + Frac(2) * mp.eps) + Frac(1);
      kt.k3 = Frac(2) * (Frac(1) + mp.eps1 + mp.eps) / D;
      kt.k2 = Frac(2 * k) / D;
      Encl num = (dec("0.5") + eps1) *
                 pow_si(zeta_line_a1(c, c, kt.T0) * kt.k3.encl(p), k);
      Encl den = fe_C_k2(neg(eps), k) * pi;
      const Frac ex = Frac(2) / D;
      kt.k1 = pow_q(num / den, ex.num, ex.den);
      break;
    }
  }
  if (!kt.k1.strictly_positive())
    throw PrecisionExhausted("kappa1 enclosure lost positivity");
  return kt;
}

// ------------------------------------------------------------ exponent pairs
Exponents exponents(const MethodParams& mp) {
  const int k = mp.k;
  Exponents E;
  if (is_fourth(mp.method)) {
    E.formula = {(Frac(k - 1) + mp.eps1 * Frac(k - 4)) / Frac(k + 2),
                 Frac(k * k + 2 * k + 6, k + 2)};
    // k = 4 publishes the weaker x^{3/5} presentation of the x^{1/2} result
    E.stated = (k == 4) ? ExponentPair{Frac(3, 5), Frac(5)} : E.formula;
  } else if (is_second(mp.method)) {
    E.formula = {(Frac(k + 1) + mp.eps1 * Frac(k - 2)) / Frac(k + 4), Frac(k)};
    E.stated = E.formula;
  } else {
    const Frac one2e = Frac(1) + Frac(2) * mp.eps;
    const Frac D = Frac(k) * one2e + Frac(1);
    E.formula = {(one2e * Frac(k - 1) + mp.eps1 * (Frac(k) * one2e - Frac(1))) / D,
                 Frac(k) * (Frac(k) * one2e - Frac(1)) / D};
    E.stated = E.formula;
  }
  return E;
}

// ------------------------------------------------------- admissibility floor
FloorResult x1_floor(const MethodParams& mp, Prec p) {
  if (p == 0) p = work_prec();
  const KappaTriple kt = kappa_select(mp, p);
  const Exponents E = exponents(mp);
  // floor conditions always use the formula gamma, also at k = 4
  const Encl gform = E.formula.gamma.encl(p);
  const Encl lam = lambda_growth(mp.k, p);
  const Encl eps = mp.eps_e(p);
  const Encl eps1 = mp.eps1_e(p);
  const Encl a = mp.a_e(p);
  const Encl ee = const_e(p);

  FloorResult fr;
  fr.arms.emplace_back("a*x0", a * mp.x0.value());
  fr.arms.emplace_back("e^e+1/2", exp_e(ee) + Encl::from_string("0.5", p));
  fr.arms.emplace_back("4a", 4L * a);

  auto lambda_disc = [&]() {
    // the exp(exp(.)) floor of the pole block applies only when the
    // discriminant lambda^2 - 4 lambda gamma is certified nonnegative
    Cmp cm = certified_compare(lam, 4L * gform);
    if (cm == Cmp::Less) return;
    Encl disc = lam * lam - 4L * lam * gform;
    if (disc.strictly_negative())
      throw ConstraintUnsatisfiable("negative lambda discriminant");
    fr.arms.emplace_back(
        "lambda-disc",
        exp_e(exp_e((lam + sqrt_e(disc)) / (2L * gform))));
  };

  switch (mp.method) {
    case Method::FourthSmallT:
    case Method::FourthLargeT: {
      // T(x1) >= T0 via the W_{-1} branch when the argument stays above -1/e
      Encl ratio = pow_q(kt.k1 / kt.T0, mp.k + 2, 6);
      Encl rhs = 2L / ((1L + 2L * eps1) * ee);
      Cmp cm = certified_compare(ratio, rhs);
      if (cm == Cmp::Unknown)
        throw PrecisionExhausted("Lambert floor condition undecidable");
      if (cm == Cmp::Less) {
        Encl w = lambert_w(WBranch::MinusOne,
                           neg((1L + 2L * eps1) / 2L * ratio));
        fr.arms.emplace_back("lambert",
                             exp_e(neg(2L / (1L + 2L * eps1)) * w));
      }
      lambda_disc();
      break;
    }
    case Method::SecondSmallT: {
      // power solve of kappa1 x^{kappa3} >= T0 (kappa2 = 0)
      fr.arms.emplace_back("T0-power",
                           pow_q(kt.T0 / kt.k1, kt.k3.den, kt.k3.num));
      lambda_disc();
      break;
    }
    case Method::SecondLargeT: {
      Encl arm = pow_e(Encl::from_string("1.1e30", p),
                       Encl::exact(mp.k + 4, p) / (3L * (1L + eps1))) *
                 pow_e(kt.k1, neg(2L / (1L + eps)));
      fr.arms.emplace_back("T0-statement", arm);
      lambda_disc();
      break;
    }
    case Method::FunctionalEq: {
      Encl s = 1L + eps1 + eps;
      Encl w0 = lambert_w(
          WBranch::Principal,
          s / (long)mp.k * pow_q(3L / kt.k1, kt.k2.den, kt.k2.num));
      fr.arms.emplace_back("W0", exp_e(Encl::exact(mp.k, p) / s * w0));
      fr.arms.emplace_back("kappa-log",
                           exp_e(pow_q(kt.k1, -kt.k2.den, kt.k2.num)));
      lambda_disc();
      break;
    }
  }

  fr.x1 = fr.arms.front().second;
  size_t best = 0;
  for (size_t i = 1; i < fr.arms.size(); ++i) {
    fr.x1 = max_e(fr.x1, fr.arms[i].second);
    // arms of real parameter rows are far apart; upper endpoints order them
    if (mpfr_cmp(fr.arms[i].second.hi().raw(),
                 fr.arms[best].second.hi().raw()) > 0)
      best = i;
  }
  fr.active = fr.arms[best].first;
  return fr;
}

// -------------------------------------------------------- omega at one point
OmegaParts omega_components(const MethodParams& mp, const KappaTriple& kap,
                            const Encl& x, Prec p) {
  if (p == 0) p = work_prec();
  const int k = mp.k;
  const Encl eps = mp.eps_e(p);
  const Encl eps1 = mp.eps1_e(p);
  const Encl a = mp.a_e(p);
  const Encl c = 1L + eps1;
  const Encl lx = log_e(x);
  const Encl powk3 = pow_q(x, kap.k3.num, kap.k3.den);

  OmegaParts parts;
  parts.T = kap.k1 * powk3;
  if (!kap.k2.is_zero())
    parts.T = parts.T * pow_q(lx, kap.k2.num, kap.k2.den);

  if (is_fourth(mp.method)) {
    parts.T1 = kap.t1rule == T1Rule::PowOnly ? powk3 : kap.k1 * powk3;
  } else if (mp.method == Method::SecondLargeT) {
    // statement instantiates T1 = kappa1 x^{kappa3} only when kappa1 >= 1
    Cmp cm = certified_compare(kap.k1, Encl::exact(1, p));
    if (cm == Cmp::Unknown)
      throw PrecisionExhausted("kappa1 vs 1 undecidable for the T1 rule");
    parts.T1 = cm == Cmp::Greater ? kap.k1 * powk3 : powk3;
  } else {
    parts.T1 = parts.T;
  }

  const Exponents E = exponents(mp);
  // evaluation always uses the formula exponents; the k = 4 table states the
  // weaker x^{3/5} form, which the same omega serves a fortiori
  const Encl den =
      pow_q(x, E.formula.gamma.num, E.formula.gamma.den) *
      pow_q(lx, E.formula.beta.num, E.formula.beta.den);

  const Encl r9 = perron_r9(x, parts.T, k, eps, eps1, a);
  const Encl r12 =
      perron_r12(x, parts.T, kap.T0, k, eps, eps1, a, lambda_growth(k, p));

  Encl tail;
  if (mp.method == Method::FunctionalEq) {
    Encl b = neg(eps);
    tail = horiz_r5(x, b, c, parts.T, Encl::exact(3, p), parts.T, k) +
           pow_si(Encl::exact(2, p), k) +
           pow_e(x, b) * (fe_B(b, parts.T, k) + fe_A(b, k));
  } else {
    Encl f;
    Encl gterm;
    if (mp.method == Method::SecondLargeT) {
      f = moment_envelope(EnvelopeKind::G, EnvelopeVariant::New, k, parts.T1);
      gterm = horiz_r6(x, parts.T, kap.T0, parts.T1, k, c);
    } else {
      EnvelopeKind kind = mp.method == Method::FourthSmallT
                              ? EnvelopeKind::S
                              : mp.method == Method::FourthLargeT
                                    ? EnvelopeKind::H
                                    : EnvelopeKind::V;
      f = moment_envelope(kind, EnvelopeVariant::New, k, parts.T1);
      gterm = horiz_r10(x, parts.T, kap.T0, parts.T1, k, c);
    }
    tail = gterm + sqrt_e(x) * f;
  }

  parts.half = (r9 + tail) / den;
  parts.intg = (r12 + tail) / den;
  return parts;
}

// ------------------------------------------------------------- row pipeline
RowResult evaluate_row(const MethodParams& mp, Prec p) {
  if (p == 0) p = work_prec();
  RowResult rr;
  rr.params = mp;
  rr.kap = kappa_select(mp, p);
  rr.expo = exponents(mp);
  rr.floor = x1_floor(mp, p);
  rr.x1_pub = BigPoint::parse(round_up_pub(rr.floor.x1, 5), p);
  if (rr.kap.t1rule == T1Rule::PowOnly) {
    // numeric admission of the small-kappa variant, no whitelist:
    // kappa1 (log x1)^{kappa2} must certify < 1
    Encl q = rr.kap.k1 * pow_q(log_e(rr.x1_pub.value()), rr.kap.k2.num,
                               rr.kap.k2.den);
    if (certified_compare(q, Encl::exact(1, p)) != Cmp::Less)
      throw UnsupportedCombination(
          "small-kappa variant inadmissible: kappa1 (log x1)^{kappa2} >= 1");
  }
  rr.parts = omega_components(mp, rr.kap, rr.x1_pub.value(), p);
  rr.omega = max_e(rr.parts.half, rr.parts.intg);
  return rr;
}

ExplicitBound RowResult::bound() const {
  ExplicitBound b;
  b.k = params.k;
  b.omega = omega;
  b.gamma = expo.stated.gamma;
  b.beta = expo.stated.beta;
  b.x1 = x1_pub;
  b.domain = Domain::IntegersAndHalfIntegers;
  b.method = params.method;
  return b;
}

ExplicitBound RowResult::bound_half() const {
  ExplicitBound b = bound();
  b.omega = parts.half;
  b.domain = Domain::HalfIntegers;
  return b;
}

ExplicitBound RowResult::bound_int() const {
  ExplicitBound b = bound();
  b.omega = parts.intg;
  b.domain = Domain::Integers;
  return b;
}

ExplicitBound omega_bound(const MethodParams& mp, Prec p) {
  return evaluate_row(mp, p).bound();
}

// ------------------------------------------------------- reals extension
Encl extension_correction(const MainTermPolynomial& P, const Frac& gamma,
                          const Frac& beta, const Encl& x1, Prec p) {
  if (p == 0) p = work_prec();
  const Encl tau = gamma.encl(p);
  const Encl ups = beta.encl(p);
  const std::vector<Encl> ab = abs_coeff_profile(P);
  Encl s = Encl::exact(0, p);
  for (int j = 0; j < P.k; ++j)
    s = s + ab[(size_t)j] *
                (ext_r7(tau, ups, j, x1) + ext_r8(tau, ups, j, x1));
  return s;
}

ExplicitBound extend_to_reals(const ExplicitBound& b_int,
                              const ExplicitBound& b_half,
                              const MainTermPolynomial& P, Prec p) {
  if (p == 0) p = work_prec();
  if (b_int.k != b_half.k || b_int.k != P.k)
    throw MismatchError("extend_to_reals: k mismatch");
  if (b_int.gamma != b_half.gamma || b_int.beta != b_half.beta)
    throw MismatchError("extend_to_reals: exponent mismatch");
  if (b_int.x1.format() != b_half.x1.format())
    throw MismatchError("extend_to_reals: threshold mismatch");
  if (b_int.method != b_half.method)
    throw MismatchError("extend_to_reals: method mismatch");
  if (b_int.domain == Domain::HalfIntegers || b_int.domain == Domain::Reals)
    throw MismatchError("extend_to_reals: first bound does not cover integers");
  if (b_half.domain == Domain::Integers || b_half.domain == Domain::Reals)
    throw MismatchError(
        "extend_to_reals: second bound does not cover half-integers");

  ExplicitBound b = b_int;
  b.omega = max_e(b_int.omega, b_half.omega) +
            extension_correction(P, b_int.gamma, b_int.beta,
                                 b_int.x1.value(), p);
  b.x1 = BigPoint::from_encl(b_int.x1.value() + Encl::from_string("0.5", p));
  b.domain = Domain::Reals;
  return b;
}

// ------------------------------------------------------------- bound choice
size_t best_bound(const std::vector<ExplicitBound>& cands, const BigPoint& x,
                  Prec p) {
  if (p == 0) p = work_prec();
  auto value_at = [&](const ExplicitBound& b) {
    return b.omega * pow_q(x.value(), b.gamma.num, b.gamma.den) *
           pow_q(x.ln(), b.beta.num, b.beta.den);
  };
  size_t best = cands.size();
  Encl best_val;
  for (size_t i = 0; i < cands.size(); ++i) {
    const ExplicitBound& c = cands[i];
    // applicable iff x >= x1; an exactly-equal threshold counts
    bool applicable = c.x1.format() == x.format();
    if (!applicable &&
        certified_compare(x.value(), c.x1.value()) == Cmp::Greater)
      applicable = true;
    if (!applicable) continue;
    Encl v = value_at(c);
    if (best == cands.size()) {
      best = i;
      best_val = v;
      continue;
    }
    // Unknown (overlapping enclosures) keeps the earlier candidate: the
    // published candidates are separated far beyond enclosure widths
    if (certified_compare(v, best_val) == Cmp::Less) {
      best = i;
      best_val = v;
    }
  }
  if (best == cands.size())
    throw NoApplicableBound("query point below every threshold");
  return best;
}

}  // namespace dk
