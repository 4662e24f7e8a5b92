#pragma once
// Certified adaptive quadrature on the centered form: for a piece [a,b] with
// midpoint m and h = b - a,
//   integral over [a,b]  in  h f(m) + [-1,1] h^2 w(f'([a,b])) / 8,
// where w() is the enclosure width.  The error contracts like h^3 |f''|
// while only first-derivative enclosures are required.

#include <functional>

#include "dk/encl.hpp"

namespace dk {

struct QuadResult {
  Encl value;
  size_t pieces;
};

// f_point evaluates f at a thin midpoint; f_deriv encloses f' over a wide
// subinterval.  The worst piece (by radius) is bisected until the summed
// radius is <= tol_abs; QuadratureError once max_pieces is exceeded.
QuadResult integrate_centered(const std::function<Encl(const Encl&)>& f_point,
                              const std::function<Encl(const Encl&)>& f_deriv,
                              const Encl& a, const Encl& b, double tol_abs,
                              size_t max_pieces);

// g_k(b) = int_0^3 |chi(b+it)|^k / sqrt(b^2 + t^2) dt  (functional-equation
// method); requires -0.31 < b < 0.  The default tolerance keeps the cost of
// one call near a thousand gamma/digamma boxes; A carries the width Up.
Encl g_k_quadrature(const Encl& b, int k, double tol_abs = 1e-6);

// (2/pi) int_{t0}^{t1} |zeta(1/2+it)|^kpow / sqrt(4 t^2 + 1) dt for
// kpow in {2, 4}; the small-t moment literals 1.039 / 0.748 / 0.030 are
// instances of this with ranges [0,3], [0,3], [3,4].
Encl zeta_moment_integral(int kpow, const Encl& t0, const Encl& t1,
                          double tol_abs, size_t max_pieces = 200000);

}  // namespace dk
