#pragma once
// Explicit bound building blocks: the zeta line bounds a1/a2/a3, tail terms
// r1..r4, horizontal-segment bounds r5/r6/r10, the real-extension cascade
// r7/r8, Perron truncation terms r9/r12, the fourth/second moment envelopes
// with their constants, and the functional-equation components.
// All results are enclosures; callers take the Up endpoint at the boundary.

#include "dk/encl.hpp"

namespace dk {

// d_k(n) <= n^{lambda(k)/loglog n} growth exponents, k in [2, 9]
Encl lambda_growth(int k, Prec p = 0);

// --- zeta line bounds ------------------------------------------------------
// a1: |zeta(sigma+it)| interpolation with lead 0.611, c > 1, sigma in
// [1/2, c], t0 >= 3.  a3: lead 0.566, t0 >= 8.97e17.  a2: -0.31 < b < 0,
// sigma in [b, 1/2], t0 >= 3.
Encl zeta_line_a1(const Encl& c, const Encl& sigma, const Encl& t0);
Encl zeta_line_a2(const Encl& b, const Encl& sigma, const Encl& t0);
Encl zeta_line_a3(const Encl& c, const Encl& sigma, const Encl& t0);

// --- tail terms ------------------------------------------------------------
// Hypotheses of the tail-sum lemma: a > 1, x(1 - 1/a) >= 3/2, x > 3a.
Encl tail_r1(const Encl& x, int k, const Encl& eps, const Encl& c,
             const Encl& a);
Encl tail_r2(const Encl& x, const Encl& a);
Encl tail_r3(const Encl& x, const Encl& a);
Encl tail_r4(const Encl& x, const Encl& a);

// --- horizontal-segment bounds --------------------------------------------
// r5: b in [-0.31, 0) or b = 1/2 exactly; T1 >= T >= T0 >= 3.
// r6: the 0.566-lead replacement, T0 >= 8.97e17.
// r10: the a1 arm of r5 alone (the b = 1/2 case keeps only this block).
Encl horiz_r5(const Encl& x, const Encl& b, const Encl& c, const Encl& T,
              const Encl& T0, const Encl& T1, int k);
Encl horiz_r6(const Encl& x, const Encl& T, const Encl& T0, const Encl& T1,
              int k, const Encl& c);
Encl horiz_r10(const Encl& x, const Encl& T, const Encl& T0, const Encl& T1,
               int k, const Encl& c);

// --- real-extension cascade (Lemma 4.1 shape) ------------------------------
Encl ext_r7(const Encl& tau, const Encl& ups, int j, const Encl& x);
Encl ext_r8(const Encl& tau, const Encl& ups, int j, const Encl& x);

// --- Perron truncation -----------------------------------------------------
// r9: non-integer (half-integer) pipeline; r12: integer pipeline including
// the pole term with x^{lambda/loglog x}.
Encl perron_r9(const Encl& x, const Encl& T, int k, const Encl& eps,
               const Encl& eps1, const Encl& a);
Encl perron_r12(const Encl& x, const Encl& T, const Encl& T0, int k,
                const Encl& eps, const Encl& eps1, const Encl& a,
                const Encl& lambda_k);

// --- moment envelopes ------------------------------------------------------
enum class EnvelopeKind { H, S, G, V };
enum class EnvelopeVariant { Paper, New };
// Floors: S needs T >= 3000, H >= 5.5e7, V >= 4, G >= 1.1e30; k >= 4 for
// S/H, k >= 2 for V/G.  New-variant V and G include their shifted constants
// (u_new, b_new); New-variant H folds its constant in; New-variant S has none.
Encl moment_envelope(EnvelopeKind kind, EnvelopeVariant variant, int k,
                     const Encl& T);
enum class MomentConstantKind { C, L, B, U };
// C/L exist only in the Paper variant (UnsupportedCombination otherwise).
Encl moment_constant(MomentConstantKind kind, EnvelopeVariant variant, int k,
                     Prec p = 0);

// --- functional-equation components ----------------------------------------
struct FunctionalEqParts {
  Encl Ck1, Ck2, gk, A, B;
};
Encl fe_C_k1(const Encl& b, int k);
Encl fe_C_k2(const Encl& b, int k);
Encl fe_A(const Encl& b, int k);  // g_k zeta(1-b)^k / pi, quadrature inside
Encl fe_B(const Encl& b, const Encl& T, int k);
FunctionalEqParts functional_eq_bound(const Encl& b, const Encl& T, int k);

}  // namespace dk
