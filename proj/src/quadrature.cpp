#include "dk/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "dk/gammaln.hpp"
#include "dk/zeta.hpp"

namespace dk {

namespace {

struct Piece {
  Encl a, b, value;
  double radius;
  bool dead = false;
};

Piece make_piece(const std::function<Encl(const Encl&)>& f_point,
                 const std::function<Encl(const Encl&)>& f_deriv, const Encl& a,
                 const Encl& b, Prec p) {
  Piece pc;
  pc.a = a;
  pc.b = b;
  Encl h = b - a;
  Encl m = (a + b) / Encl::exact(2, p);
  Encl fm = f_point(m);
  Encl fp = f_deriv(hull(a, b));
  // error radius: h^2 (fp_hi - fp_lo) / 8
  Encl wfp = Encl::from_endpoints(fp.hi(), fp.hi()) -
             Encl::from_endpoints(fp.lo(), fp.lo());
  Encl err = pow_si(h, 2) * wfp / Encl::exact(8, p);
  pc.value = widen_abs(h * fm, err.hi());
  pc.radius = pc.value.wid_d() * 0.5;
  return pc;
}

}  // namespace

QuadResult integrate_centered(const std::function<Encl(const Encl&)>& f_point,
                              const std::function<Encl(const Encl&)>& f_deriv,
                              const Encl& a, const Encl& b, double tol_abs,
                              size_t max_pieces) {
  Prec p = std::max({a.prec(), b.prec(), work_prec()});
  std::vector<Piece> pieces;
  // (radius, index) max-heap; dead entries skipped on pop
  std::priority_queue<std::pair<double, size_t>> heap;
  double total_rad = 0;
  auto push = [&](const Encl& lo, const Encl& hi) {
    pieces.push_back(make_piece(f_point, f_deriv, lo, hi, p));
    total_rad += pieces.back().radius;
    heap.emplace(pieces.back().radius, pieces.size() - 1);
  };
  push(a, b);
  size_t live = 1;
  // incremental total_rad drifts when early pieces carry huge radii (the
  // add/subtract residue can exceed the tolerance in either direction), so
  // convergence is only declared after an exact re-sum over live pieces
  auto resum = [&] {
    total_rad = 0;
    for (const Piece& pc : pieces)
      if (!pc.dead) total_rad += pc.radius;
  };
  size_t since_resum = 0;
  while (true) {
    if (total_rad <= tol_abs || ++since_resum >= 1024) {
      resum();
      since_resum = 0;
      if (total_rad <= tol_abs) break;
    }
    if (live >= max_pieces)
      throw QuadratureError("quadrature failed to meet tolerance " +
                            std::to_string(tol_abs) + " within " +
                            std::to_string(max_pieces) + " pieces");
    size_t idx = heap.top().second;
    heap.pop();
    if (pieces[idx].dead) continue;
    pieces[idx].dead = true;
    total_rad -= pieces[idx].radius;
    --live;
    Encl mid = (pieces[idx].a + pieces[idx].b) / Encl::exact(2, p);
    push(pieces[idx].a, mid);
    push(mid, pieces[idx].b);
    live += 2;
  }
  Encl sum = Encl::exact(0, p);
  size_t n = 0;
  for (const Piece& pc : pieces)
    if (!pc.dead) {
      sum = sum + pc.value;
      ++n;
    }
  return {sum, n};
}

Encl g_k_quadrature(const Encl& b, int k, double tol_abs) {
  Prec p = std::max<Prec>(b.prec(), work_prec());
  Encl nb = -b;
  if (!nb.strictly_positive() ||
      !(Encl::from_string("0.31", p) - nb).strictly_positive())
    throw DomainError("g_k requires -0.31 < b < 0");
  if (k < 2) throw DomainError("g_k requires k >= 2");
  Encl b2 = pow_si(b, 2);
  auto f_point = [&](const Encl& t) -> Encl {
    CEncl s{b, t};
    return chi_modulus_pow(s, k) / sqrt_e(b2 + pow_si(t, 2));
  };
  auto f_deriv = [&](const Encl& t) -> Encl {
    CEncl s{b, t};
    CEncl one{Encl::exact(1, p), Encl::exact(0, p)};
    CEncl two{Encl::exact(2, p), Encl::exact(0, p)};
    // u'(t) = (Im psi((1-s)/2) + Im psi(s/2)) / 2 for u = log|chi(b+it)|
    Encl up = (digamma((one - s) / two).im + digamma(s / two).im) /
              Encl::exact(2, p);
    Encl q = b2 + pow_si(t, 2);
    Encl fbox = chi_modulus_pow(s, k) / sqrt_e(q);
    return fbox * (up * (long)k - t / q);
  };
  QuadResult r =
      integrate_centered(f_point, f_deriv, Encl::exact(0, p),
                         Encl::exact(3, p), tol_abs, 400000);
  return r.value;
}

Encl zeta_moment_integral(int kpow, const Encl& t0, const Encl& t1,
                          double tol_abs, size_t max_pieces) {
  if (kpow != 2 && kpow != 4)
    throw DomainError("zeta_moment_integral supports kpow in {2, 4}");
  if (mpfr_sgn(t0.lo().raw()) < 0 || !(t1 - t0).strictly_positive())
    throw DomainError("zeta_moment_integral needs 0 <= t0 < t1");
  Prec p = std::max({t0.prec(), t1.prec(), work_prec()});
  Encl half = Encl::from_string("0.5", p);
  auto weight = [&](const Encl& t) {
    return sqrt_e(pow_si(t, 2) * 4L + Encl::exact(1, p));
  };
  auto f_point = [&](const Encl& t) -> Encl {
    CEncl z = zeta_em(CEncl{half, t});
    Encl M = norm2_c(z);
    Encl P = (kpow == 4) ? pow_si(M, 2) : M;
    return P / weight(t);
  };
  // On a too-wide box the zeta machinery can fail to exclude zero from an
  // internal denominator; a huge finite enclosure just forces bisection.
  const Encl huge =
      Encl::from_endpoints(Encl::from_double(-1e30).lo(),
                           Encl::from_double(1e30).hi());
  auto f_deriv = [&](const Encl& t) -> Encl {
    CEncl z, dz;
    try {
      zeta_em_d(CEncl{half, t}, z, &dz);
    } catch (const DomainError&) {
      return huge;
    }
    Encl M = norm2_c(z);
    // dM/dt = 2 Re(conj(zeta) * i zeta') = -2 Im(conj(zeta) zeta')
    CEncl w = conj_c(z) * dz;
    Encl dM = neg(w.im) * 2L;
    Encl P, dP;
    if (kpow == 4) {
      P = pow_si(M, 2);
      dP = M * dM * 2L;
    } else {
      P = M;
      dP = dM;
    }
    Encl den = weight(t);
    Encl den3 = pow_si(den, 3);
    return dP / den - P * (t * 4L) / den3;
  };
  QuadResult r = integrate_centered(f_point, f_deriv, t0, t1, tol_abs,
                                    max_pieces);
  Encl two_over_pi = Encl::exact(2, p) / const_pi(p);
  return r.value * two_over_pi;
}

}  // namespace dk
