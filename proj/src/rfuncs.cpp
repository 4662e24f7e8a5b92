#include "dk/rfuncs.hpp"

#include <algorithm>
#include <string>

#include "dk/divisor.hpp"
#include "dk/quadrature.hpp"
#include "dk/zeta.hpp"

namespace dk {

namespace {

Prec pk(std::initializer_list<const Encl*> es) {
  Prec p = work_prec();
  for (const Encl* e : es) p = std::max(p, e->prec());
  return p;
}

Encl dec(const char* s, Prec p) { return Encl::from_string(s, p); }

void require(bool ok, const char* msg) {
  if (!ok) throw DomainError(msg);
}

// exact binomial as Encl
Encl binom_e(int n, int m, Prec p) {
  long v = 1;
  for (int i = 1; i <= m; ++i) v = v * (n - m + i) / i;
  return Encl::exact(v, p);
}

}  // namespace

Encl lambda_growth(int k, Prec p) {
  Prec pp = p > 0 ? p : work_prec();
  switch (k) {
    case 2: return dec("1.5379", pp);
    case 3: return dec("1.5914", pp);
    case 4: return dec("1.6337", pp);
    case 5: return dec("1.6714", pp);
    case 6: return dec("1.7029", pp);
    case 7: return dec("1.7299", pp);
    case 8: return dec("1.7549", pp);
    case 9: return dec("1.7782", pp);
    default:
      throw DomainError("lambda(k) table covers 2 <= k <= 9");
  }
}

// ---------------------------------------------------------------- line bounds
static Encl a1_impl(const Encl& c, const Encl& sigma, const Encl& t0,
                    const Encl& lead) {
  Prec p = pk({&c, &sigma, &t0});
  require((c - Encl::exact(1, p)).strictly_positive(), "a1 needs c > 1");
  Encl half = dec("0.5", p);
  require(!(sigma - half).strictly_negative(), "a1 needs sigma >= 1/2");
  require(!(c - sigma).strictly_negative(), "a1 needs sigma <= c");
  require(!(t0 - Encl::exact(3, p)).strictly_negative(), "a1 needs t0 >= 3");
  Encl lt = log_e(t0);
  Encl cmh = c - half;
  Encl c131 = c + dec("1.31", p);
  Encl pi = const_pi(p);
  Encl term1 = pow_e(lead, (c - sigma) / cmh);
  Encl term2 = pow_e(zeta_real(c) / lt, (sigma - half) / cmh);
  Encl term3 = Encl::exact(1, p) + pi / (lt * 2L) +
               pi * pow_si(c131, 2) / (t0 * pow_si(lt, 2) * 4L) +
               c131 / (pow_si(t0, 2) * lt * 2L);
  Encl term4 = pow_e((c131 + t0) / t0, (c - sigma) / (cmh * 6L));
  return term1 * term2 * term3 * term4;
}

Encl zeta_line_a1(const Encl& c, const Encl& sigma, const Encl& t0) {
  return a1_impl(c, sigma, t0, dec("0.611", pk({&c, &sigma, &t0})));
}

Encl zeta_line_a3(const Encl& c, const Encl& sigma, const Encl& t0) {
  Prec p = pk({&c, &sigma, &t0});
  require(!(t0 - dec("8.97e17", p)).strictly_negative(),
          "a3 needs t0 >= 8.97e17");
  return a1_impl(c, sigma, t0, dec("0.566", p));
}

Encl zeta_line_a2(const Encl& b, const Encl& sigma, const Encl& t0) {
  Prec p = pk({&b, &sigma, &t0});
  require(b.strictly_negative(), "a2 needs b < 0");
  require((b + dec("0.31", p)).strictly_positive(), "a2 needs b > -0.31");
  Encl half = dec("0.5", p);
  require(!(sigma - b).strictly_negative(), "a2 needs sigma >= b");
  require(!(half - sigma).strictly_negative(), "a2 needs sigma <= 1/2");
  require(!(t0 - Encl::exact(3, p)).strictly_negative(), "a2 needs t0 >= 3");
  Encl lt = log_e(t0);
  Encl one = Encl::exact(1, p);
  Encl hmb = half - b;
  Encl twopi = const_pi(p) * 2L;
  Encl term1 = pow_e(dec("0.611", p), (sigma - b) / hmb);
  Encl z = (one - b) * zeta_real(one - b) /
           ((one + b) * pow_e(twopi, (one - b * 2L) / 2L) * lt);
  Encl term2 = pow_e(z, (half - sigma) / hmb);
  Encl expnum =
      (b * sigma * 3L - sigma - b * 5L) * 4L + Encl::exact(9, p);
  Encl term3 = pow_e((dec("1.81", p) + t0) / Encl::exact(3, p),
                     expnum / ((one - b * 2L) * 6L));
  Encl term4 = log_e((dec("1.81", p) + t0) / t0) / lt;
  return term1 * term2 * term3 * term4;
}

// ----------------------------------------------------------------- tail terms
static void tail_checks(const Encl& x, const Encl& a, Prec p) {
  require((a - Encl::exact(1, p)).strictly_positive(), "tail term needs a > 1");
  Encl slack = x * (Encl::exact(1, p) - Encl::exact(1, p) / a);
  require(!(slack - dec("1.5", p)).strictly_negative(),
          "tail term needs x(1 - 1/a) >= 3/2");
  require((x - a * 3L).strictly_positive(), "tail term needs x > 3a");
}

Encl tail_r1(const Encl& x, int k, const Encl& eps, const Encl& c,
             const Encl& a) {
  Prec p = pk({&x, &eps, &c, &a});
  tail_checks(x, a, p);
  require((c - eps - Encl::exact(1, p)).strictly_positive(),
          "r1 needs c > 1 + eps");
  Encl one = Encl::exact(1, p);
  Encl la = log_e(a);
  Encl xa = x / a;
  Encl ax = a * x;
  Encl cme = c - eps;
  Encl h = hk_policy(k, p);
  Encl first = (one + c) * pow_e(xa, one - c) *
               pow_si(log_e(xa) + h, k - 1) / la;
  Encl inner = one / (pow_e(ax, cme) * 2L) +
               pow_e(ax, one + eps - c) / (cme - one) +
               cme / (pow_e(ax, one + cme) * 12L) +
               cme * (one + cme) * (Encl::exact(2, p) + cme) /
                   (pow_e(ax, cme + Encl::exact(3, p)) * 720L);
  return first + inner / la;
}

Encl tail_r2(const Encl& x, const Encl& a) {
  Prec p = pk({&x, &a});
  tail_checks(x, a, p);
  Encl one = Encl::exact(1, p);
  Encl s = x * (one - one / a);
  return log_e(s - dec("0.5", p)) + const_euler(p) + one / (s * 2L - one);
}

Encl tail_r3(const Encl& x, const Encl& a) {
  Prec p = pk({&x, &a});
  tail_checks(x, a, p);
  Encl one = Encl::exact(1, p);
  return log_e(x) + log_e(a - one) + const_euler(p) +
         one / ((a - one) * x * 2L);
}

Encl tail_r4(const Encl& x, const Encl& a) {
  Prec p = pk({&x, &a});
  tail_checks(x, a, p);
  Encl one = Encl::exact(1, p);
  Encl s = one - one / a;
  return log_e(x) + log_e(s) + const_euler(p) - dec("0.5", p) +
         one / (a * 2L) + one / (x * s * 2L);
}

// ------------------------------------------------------- horizontal segments
static void horiz_checks(const Encl& T, const Encl& T0, const Encl& T1,
                         Prec p) {
  require(!(T0 - Encl::exact(3, p)).strictly_negative(), "needs T0 >= 3");
  require(!(T - T0).strictly_negative(), "needs T >= T0");
  require(!(T1 - T).strictly_negative(), "needs T1 >= T");
}

Encl horiz_r10(const Encl& x, const Encl& T, const Encl& T0, const Encl& T1,
               int k, const Encl& c) {
  Prec p = pk({&x, &T, &T0, &T1, &c});
  horiz_checks(T, T0, T1, p);
  Encl half = dec("0.5", p);
  Encl pref = pow_si(log_e(T1), k) / (T * const_pi(p)) * (c - half);
  Encl arm1 = pow_si(zeta_line_a1(c, half, T0), k) * pow_q(T, k, 6) * sqrt_e(x);
  Encl arm2 = pow_si(zeta_line_a1(c, c, T0), k) * pow_e(x, c);
  return pref * max_e(arm1, arm2);
}

Encl horiz_r5(const Encl& x, const Encl& b, const Encl& c, const Encl& T,
              const Encl& T0, const Encl& T1, int k) {
  Prec p = pk({&x, &b, &c, &T, &T0, &T1});
  horiz_checks(T, T0, T1, p);
  bool b_is_half = b.is_point() && mpfr_cmp_d(b.lo().raw(), 0.5) == 0;
  Encl second = horiz_r10(x, T, T0, T1, k, c);
  if (b_is_half) return second;
  require(b.strictly_negative() && !(b + dec("0.31", p)).strictly_negative(),
          "r5 needs b in [-0.31, 0) or b = 1/2");
  Encl half = dec("0.5", p);
  Encl one = Encl::exact(1, p);
  Encl pref = pow_si(log_e(T1), k) / (T * const_pi(p)) * (half - b);
  Encl arm1 = pow_si(zeta_line_a2(b, b, T0), k) *
              pow_e(T, (one - b * 2L) * k / 2L) * pow_e(x, b);
  Encl arm2 = pow_si(zeta_line_a2(b, half, T0), k) * pow_q(T, k, 6) * sqrt_e(x);
  return pref * max_e(arm1, arm2) + second;
}

Encl horiz_r6(const Encl& x, const Encl& T, const Encl& T0, const Encl& T1,
              int k, const Encl& c) {
  Prec p = pk({&x, &T, &T0, &T1, &c});
  horiz_checks(T, T0, T1, p);
  require(!(T0 - dec("8.97e17", p)).strictly_negative(),
          "r6 needs T0 >= 8.97e17");
  Encl half = dec("0.5", p);
  Encl pref =
      pow_si(log_e(T1), k) / (T * const_pi(p)) * (half + (c - Encl::exact(1, p)));
  Encl arm1 = pow_si(zeta_line_a3(c, half, T0), k) * pow_q(T, k, 6) * sqrt_e(x);
  Encl arm2 = pow_si(zeta_line_a3(c, c, T0), k) * pow_e(x, c);
  return pref * max_e(arm1, arm2);
}

// ---------------------------------------------------------- extension cascade
Encl ext_r7(const Encl& tau, const Encl& ups, int j, const Encl& x) {
  Prec p = pk({&tau, &ups, &x});
  require(j >= 0, "r7 needs j >= 0");
  Encl half = dec("0.5", p);
  Encl X = x + half;
  require((X - Encl::exact(1, p)).strictly_positive(), "r7 needs x + 1/2 > 1");
  Encl L = log_e(X);
  Encl pref = pow_e(X, neg(tau)) * pow_e(L, neg(ups));
  if (j == 0) return pref * half;
  Encl s = Encl::exact(0, p);
  Encl two_x = x * 2L;
  for (int m = 1; m <= j; ++m)
    s = s + binom_e(j, m, p) * X / (pow_si(two_x, m) * pow_si(L, m - 1));
  return pref * s;
}

Encl ext_r8(const Encl& tau, const Encl& ups, int j, const Encl& x) {
  Prec p = pk({&tau, &ups, &x});
  require(j >= 0, "r8 needs j >= 0");
  if (j == 0) return Encl::exact(0, p);
  Encl half = dec("0.5", p);
  Encl X = x + half;
  require((X - Encl::exact(1, p)).strictly_positive(), "r8 needs x + 1/2 > 1");
  Encl L = log_e(X);
  Encl je = Encl::exact(j, p);
  Encl q = tau * L + ups;
  Encl small_case = pow_si(L, j) / (pow_e(X, tau) * pow_e(L, ups) * 2L);
  if ((q - je).strictly_positive()) return small_case;
  Encl w = je - ups;
  if (w.strictly_positive()) {
    Encl big_case = pow_e(w / tau, w) * exp_e(ups - je) * half;
    if ((je - q).strictly_positive()) return big_case;
    return max_e(small_case, big_case);  // boundary dust: both arms are sound
  }
  return small_case;
}

// ---------------------------------------------------------- Perron truncation
Encl perron_r9(const Encl& x, const Encl& T, int k, const Encl& eps,
               const Encl& eps1, const Encl& a) {
  Prec p = pk({&x, &T, &eps, &eps1, &a});
  Encl one = Encl::exact(1, p);
  Encl half = dec("0.5", p);
  Encl pi = const_pi(p);
  Encl c = one + eps1;
  Encl pref = (one + pi) * pow_e(x, one + eps1) / (pi * T);
  Encl body = tail_r1(x, k, eps, c, a) +
              x * pow_e(x - half, eps - one - eps1) * 4L +
              x * pow_e(x / a, eps - one - eps1) * tail_r2(x, a) * 2L +
              (a + one) * pow_e(x + half, eps - eps1) * tail_r3(x, a);
  return pref * body;
}

Encl perron_r12(const Encl& x, const Encl& T, const Encl& T0, int k,
                const Encl& eps, const Encl& eps1, const Encl& a,
                const Encl& lambda_k) {
  Prec p = pk({&x, &T, &T0, &eps, &eps1, &a});
  Encl one = Encl::exact(1, p);
  Encl pi = const_pi(p);
  Encl c = one + eps1;
  Encl lx = log_e(x);
  require(log_e(lx).strictly_positive(), "r12 needs x > e");
  Encl pref = (one + pi) * pow_e(x, one + eps1) / (pi * T);
  Encl body = tail_r1(x, k, eps, c, a) +
              x * pow_e(x / a, eps - one - eps1) *
                  (tail_r4(x, a) + dec("0.6", p)) +
              (one + one / (x * 2L)) * pow_e(x + one, eps - eps1) *
                  (tail_r3(x, a) + dec("0.5", p));
  Encl t0sq = pow_si(T0, 2) - pow_si(c, 2);
  require(t0sq.strictly_positive(), "r12 needs T0 > 1 + eps1");
  Encl pole = pow_e(x, lambda_k / log_e(lx)) / (pi * 2L) *
              (pi + T0 * c * 2L / t0sq);
  return pref * body + pole;
}

// ------------------------------------------------------------------ envelopes
Encl moment_constant(MomentConstantKind kind, EnvelopeVariant variant, int k,
                     Prec p) {
  Prec pp = p > 0 ? p : work_prec();
  auto geo = [&](const char* coef, const char* base, int expo) {
    return dec(coef, pp) * pow_si(dec(base, pp), expo);
  };
  switch (kind) {
    case MomentConstantKind::C: {
      if (variant != EnvelopeVariant::Paper)
        throw UnsupportedCombination("c_k exists only in the paper variant");
      require(k >= 4, "c_k needs k >= 4");
      return geo("1.039", "1.461", k - 4) + geo("28.553", "7.624", k - 4) +
             dec("1.910", pp) / Encl::exact(k, pp) *
                 (pow_si(dec("205.760", pp), k) -
                  pow_si(dec("25.515", pp), k));
    }
    case MomentConstantKind::L: {
      if (variant != EnvelopeVariant::Paper)
        throw UnsupportedCombination("l_k exists only in the paper variant");
      require(k >= 4, "l_k needs k >= 4");
      return geo("1.039", "1.461", k - 4) + geo("28.553", "7.624", k - 4) +
             geo("194.306", "18.001", k - 4);
    }
    case MomentConstantKind::U: {
      require(k >= 2, "u_k needs k >= 2");
      Encl u = geo("0.748", "1.461", k - 2) + geo("0.030", "1.040", k - 2);
      if (variant == EnvelopeVariant::New)
        u = u - geo("0.458", "1.067", k - 2);
      return u;
    }
    case MomentConstantKind::B: {
      require(k >= 2, "b_k needs k >= 2");
      Encl s = pow_si(dec("3.978e6", pp), k) +
               pow_si(dec("24803.958", pp), k) +
               pow_si(dec("205.760", pp), k) -
               pow_si(dec("38448.929", pp), k) -
               pow_si(dec("492.548", pp), k) - pow_si(dec("25.515", pp), k);
      Encl b = dec("1.910", pp) / Encl::exact(k, pp) * s +
               geo("0.748", "1.461", k - 2) + geo("3.329", "7.624", k - 2);
      if (variant == EnvelopeVariant::New)
        b = b - geo("756.444", "3.977e6", k - 2);
      return b;
    }
  }
  throw DomainError("unreachable moment constant kind");
}

Encl moment_envelope(EnvelopeKind kind, EnvelopeVariant variant, int k,
                     const Encl& T) {
  Prec p = std::max(T.prec(), work_prec());
  Encl pi = const_pi(p);
  Encl lT = log_e(T);
  auto floor_check = [&](const char* fl, const char* what) {
    require(!(T - dec(fl, p)).strictly_negative(), what);
  };
  switch (kind) {
    case EnvelopeKind::S: {
      require(k >= 4, "S envelope needs k >= 4");
      floor_check("3000", "S envelope needs T >= 3000");
      Encl l2 = log_e(T / 2L);
      Encl pref = pow_si(dec("0.611", p) * pow_q(T, 1, 6) * lT, k - 4);
      if (variant == EnvelopeVariant::New)
        return pref * pow_q(l2, 7, 2) *
               (pow_q(l2, 3, 2) / (pow_si(pi, 3) * 5L) +
                dec("1.466", p) * l2 + sqrt_e(l2) / pow_si(pi, 3) +
                dec("6.597", p));
      return pref * (pow_si(l2, 5) / (pow_si(pi, 3) * 5L) +
                     dec("1.466", p) * pow_q(l2, 9, 2) +
                     pow_si(l2, 4) / pow_si(pi, 3) +
                     dec("6.597", p) * pow_q(l2, 7, 2) - dec("11266.536", p));
    }
    case EnvelopeKind::H: {
      require(k >= 4, "H envelope needs k >= 4");
      floor_check("5.5e7", "H envelope needs T >= 5.5e7");
      Encl l2 = log_e(T / 2L);
      Encl pref = pow_si(dec("0.611", p) * pow_q(T, 1, 6) * lT, k - 4);
      Encl poly = pow_si(l2, 5) / (pow_si(pi, 3) * 10L) +
                  dec("3.177", p) * pow_si(l2, 4) +
                  dec("12.644", p) * pow_si(l2, 3);
      if (variant == EnvelopeVariant::New)
        return pref * poly +
               pow_si(dec("205.760", p), k) * dec("1.910", p) /
                   Encl::exact(k, p) -
               dec("445579.419", p);
      return pref * (poly - dec("243234.568", p));
    }
    case EnvelopeKind::V: {
      require(k >= 2, "V envelope needs k >= 2");
      floor_check("4", "V envelope needs T >= 4");
      Encl pref = pow_si(dec("0.611", p) * pow_q(T, 1, 6) * lT, k - 2);
      Encl poly = pow_si(lT, 2) / (pi * 2L) +
                  dec("0.425", p) * pow_q(lT, 3, 2) + dec("7.658", p) * lT +
                  dec("0.637", p) * sqrt_e(lT);
      if (variant == EnvelopeVariant::New)
        return pref * poly +
               moment_constant(MomentConstantKind::U, EnvelopeVariant::New, k,
                               p);
      return pref * (poly - dec("0.458", p));
    }
    case EnvelopeKind::G: {
      require(k >= 2, "G envelope needs k >= 2");
      floor_check("1.1e30", "G envelope needs T >= 1.1e30");
      Encl ups = dec("1271506.721", p);
      Encl pref = pow_si(dec("0.566", p) * pow_q(T, 1, 6) * lT, k - 2);
      Encl core = pow_si(lT, 2) / (pi * 2L) +
                  ups * pow_q(lT, 5, 3) * 3L /
                      (pow_q(dec("1.1e30", p), 2, 3) * pi * 2L);
      if (variant == EnvelopeVariant::New)
        return pref * core +
               moment_constant(MomentConstantKind::B, EnvelopeVariant::New, k,
                               p);
      return pref * (core - dec("0.217", p) * lT -
                     ups * pow_q(lT, 5, 3) / (pi * pow_q(T, 2, 3) * 2L) -
                     dec("741.434", p));
    }
  }
  throw DomainError("unreachable envelope kind");
}

// --------------------------------------------- functional-equation components
static void fe_checks(const Encl& b, int k, Prec p) {
  require(k >= 2, "functional-equation bound needs k >= 2");
  require(b.strictly_negative() && (b + dec("0.31", p)).strictly_positive(),
          "functional-equation bound needs -0.31 < b < 0");
}

Encl fe_C_k1(const Encl& b, int k) {
  Prec p = std::max(b.prec(), work_prec());
  fe_checks(b, k, p);
  Encl pi = const_pi(p);
  Encl e = const_e(p);
  Encl half = dec("0.5", p);
  Encl ke = Encl::exact(k, p);
  return pow_e(pi * e, ke * (b - half)) *
         exp_e(ke * pi / 4L + ke * (Encl::exact(1, p) - b * 2L) / 2L);
}

Encl fe_C_k2(const Encl& b, int k) {
  Prec p = std::max(b.prec(), work_prec());
  fe_checks(b, k, p);
  Encl pi = const_pi(p);
  Encl one = Encl::exact(1, p);
  Encl ke = Encl::exact(k, p);
  Encl z = zeta_real(one - b);
  Encl t36 = Encl::exact(36, p);
  Encl f1 = (pow_si(one - b, 2) + Encl::exact(9, p)) / t36;
  Encl f2 = (pow_si(b, 2) + Encl::exact(9, p)) / t36;
  return pow_si(z, k) * 8L / (pi * sqrt_e(ke)) *
         pow_e(f1, neg(ke * b) / 4L) * pow_e(f2, ke * (one - b) / 4L) *
         exp_e(ke * (pow_si(b, 2) * 18L - b * 18L + Encl::exact(19, p)) /
               t36) *
         fe_C_k1(b, k);
}

Encl fe_A(const Encl& b, int k) {
  Prec p = std::max(b.prec(), work_prec());
  fe_checks(b, k, p);
  Encl g = g_k_quadrature(b, k);
  return g * pow_si(zeta_real(Encl::exact(1, p) - b), k) / const_pi(p);
}

Encl fe_B(const Encl& b, const Encl& T, int k) {
  Prec p = pk({&b, &T});
  fe_checks(b, k, p);
  require(!(T - Encl::exact(3, p)).strictly_negative(), "B needs T >= 3");
  Encl half = dec("0.5", p);
  Encl ke = Encl::exact(k, p);
  return fe_C_k2(b, k) * pow_e(T, ke * (half - b) - half) *
         (Encl::exact(1, p) + abs_e(b) / T);
}

FunctionalEqParts functional_eq_bound(const Encl& b, const Encl& T, int k) {
  FunctionalEqParts parts;
  parts.Ck1 = fe_C_k1(b, k);
  parts.Ck2 = fe_C_k2(b, k);
  parts.gk = g_k_quadrature(b, k);
  Prec p = std::max(b.prec(), work_prec());
  parts.A = parts.gk *
            pow_si(zeta_real(Encl::exact(1, p) - b), k) / const_pi(p);
  parts.B = fe_B(b, T, k);
  return parts;
}

}  // namespace dk
