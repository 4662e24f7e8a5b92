#!/usr/bin/env python3
"""Reference regeneration of every explicit-bound table row.

Independent implementation of the bound machinery (r1..r17, zeta line bounds
a1/a2/a3, moment envelopes, kappa selection, x1 floors, real-extension
correction) in mpmath at 60 digits.  Regenerates each table row from its
(k, eps, eps1, a, x0, method) inputs, diffs against the printed values, and
dumps frozen reference numbers for the compiled test suite.

Method codes:
  F1 fourth moment, T0=3000 envelope S_new     (omega_1)
  F2 fourth moment, T0=5.5e7 envelope H_new    (omega_2)
  S3 second moment, T0=4 envelope V_new        (omega_3)
  S4 second moment, T0=1.1e30 envelope G_new   (omega_4)
  FE functional-equation method, T0=3          (omega_5)
"""
import json
from fractions import Fraction
from mpmath import (mp, mpf, mpc, log, exp, sqrt, pi, e, zeta, gamma,
                    lambertw, quad, euler, binomial, stieltjes, fabs, power)

mp.dps = 60

LAMBDA = {2: mpf('1.5379'), 3: mpf('1.5914'), 4: mpf('1.6337'),
          5: mpf('1.6714'), 6: mpf('1.7029'), 7: mpf('1.7299'),
          8: mpf('1.7549'), 9: mpf('1.7782')}

def h_k(k):
    # divisor-sum log-shift constant; k <= 10 range
    return 1 if k == 2 else k - 2

# ---------------------------------------------------------------- line bounds
def a1(c, sig, t0, lead=mpf('0.611')):
    c, sig, t0 = mpf(c), mpf(sig), mpf(t0)
    return (lead**((c - sig)/(c - mpf('0.5')))
            * (zeta(c)/log(t0))**((sig - mpf('0.5'))/(c - mpf('0.5')))
            * (1 + pi/(2*log(t0)) + pi*(c + mpf('1.31'))**2/(4*t0*log(t0)**2)
               + (c + mpf('1.31'))/(2*t0**2*log(t0)))
            * ((c + mpf('1.31') + t0)/t0)**((c - sig)/(6*(c - mpf('0.5')))))

def a3(c, sig, t0):
    return a1(c, sig, t0, lead=mpf('0.566'))

def a2(b, sig, t0):
    b, sig, t0 = mpf(b), mpf(sig), mpf(t0)
    return (mpf('0.611')**((sig - b)/(mpf('0.5') - b))
            * ((1 - b)*zeta(1 - b)/((1 + b)*(2*pi)**((1 - 2*b)/2)*log(t0)))
              **((mpf('0.5') - sig)/(mpf('0.5') - b))
            * ((mpf('1.81') + t0)/3)**((4*(3*b*sig - sig - 5*b) + 9)/(6*(1 - 2*b)))
            * log((mpf('1.81') + t0)/t0)/log(t0))

# ------------------------------------------------------------------- r1 .. r8
def r1(x, k, eps, c, a):
    x, eps, c, a = mpf(x), mpf(eps), mpf(c), mpf(a)
    return ((1 + c)*(x/a)**(1 - c)*(log(x/a) + h_k(k))**(k - 1)/log(a)
            + (1/log(a))*(1/(2*(a*x)**(c - eps))
                          + (a*x)**(1 + eps - c)/(c - eps - 1)
                          + (c - eps)/(12*(a*x)**(1 + c - eps))
                          + (c - eps)*(1 + c - eps)*(2 + c - eps)
                            / (720*(a*x)**(c - eps + 3))))

def r2(x, a):
    x, a = mpf(x), mpf(a)
    return log(x*(1 - 1/a) - mpf('0.5')) + euler + 1/(2*x*(1 - 1/a) - 1)

def r3(x, a):
    x, a = mpf(x), mpf(a)
    return log(x) + log(a - 1) + euler + 1/(2*(a - 1)*x)

def r4(x, a):
    x, a = mpf(x), mpf(a)
    return (log(x) + log(1 - 1/a) + euler - mpf('0.5') + 1/(2*a)
            + 1/(2*x*(1 - 1/a)))

def r5(x, b, c, T, T0, T1, k):
    x, b, c, T, T0, T1 = map(mpf, (x, b, c, T, T0, T1))
    first = 0
    if b != mpf('0.5'):
        first = ((log(T1))**k/(T*pi)*(mpf('0.5') - b)
                 * max(a2(b, b, T0)**k * T**((1 - 2*b)*k/2) * x**b,
                       a2(b, mpf('0.5'), T0)**k * T**(mpf(k)/6) * sqrt(x)))
    second = ((log(T1))**k/(T*pi)*(c - mpf('0.5'))
              * max(a1(c, mpf('0.5'), T0)**k * T**(mpf(k)/6) * sqrt(x),
                    a1(c, c, T0)**k * x**c))
    return first + second

def r6(x, T, T0, T1, k, c):
    x, T, T0, T1, c = map(mpf, (x, T, T0, T1, c))
    return ((log(T1))**k/(T*pi)*(mpf('0.5') + (c - 1))
            * max(a3(c, mpf('0.5'), T0)**k * T**(mpf(k)/6) * sqrt(x),
                  a3(c, c, T0)**k * x**c))

def r7(tau, ups, j, x):
    tau, ups, x = mpf(tau), mpf(ups), mpf(x)
    pref = (x + mpf('0.5'))**(-tau) * log(x + mpf('0.5'))**(-ups)
    if j == 0:
        return pref * mpf('0.5')
    s = sum(binomial(j, m)*(x + mpf('0.5'))/((2*x)**m * log(x + mpf('0.5'))**(m - 1))
            for m in range(1, j + 1))
    return pref * s

def r8(tau, ups, j, x):
    tau, ups, x = mpf(tau), mpf(ups), mpf(x)
    if j == 0:
        return mpf(0)
    if j < tau*log(x + mpf('0.5')) + ups:
        return log(x + mpf('0.5'))**j / (2*(x + mpf('0.5'))**tau
                                         * log(x + mpf('0.5'))**ups)
    return mpf('0.5')*((j - ups)/tau)**(j - ups)*exp(ups - j)

# ------------------------------------------------------------------ r9 .. r12
def r9(x, T, k, eps, eps1, a):
    x, T, eps, eps1, a = map(mpf, (x, T, eps, eps1, a))
    return ((1 + pi)*x**(1 + eps1)/(pi*T)
            * (r1(x, k, eps, 1 + eps1, a)
               + 4*x*(x - mpf('0.5'))**(eps - 1 - eps1)
               + 2*x*(x/a)**(eps - 1 - eps1)*r2(x, a)
               + (a + 1)*(x + mpf('0.5'))**(eps - eps1)*r3(x, a)))

def r10(x, T, T0, T1, k, c):
    x, T, T0, T1, c = map(mpf, (x, T, T0, T1, c))
    return ((log(T1))**k/(T*pi)*(c - mpf('0.5'))
            * max(a1(c, mpf('0.5'), T0)**k * T**(mpf(k)/6) * sqrt(x),
                  a1(c, c, T0)**k * x**c))

def r12(x, T, T0, k, eps, eps1, a):
    x, T, T0, eps, eps1, a = map(mpf, (x, T, T0, eps, eps1, a))
    lam = LAMBDA[k]
    return ((1 + pi)*x**(1 + eps1)/(pi*T)
            * (r1(x, k, eps, 1 + eps1, a)
               + x*(x/a)**(eps - 1 - eps1)*(r4(x, a) + mpf('0.6'))
               + (1 + 1/(2*x))*(x + 1)**(eps - eps1)*(r3(x, a) + mpf('0.5')))
            + x**(lam/log(log(x)))/(2*pi)
              * (pi + 2*T0*(1 + eps1)/(T0**2 - (1 + eps1)**2)))

# -------------------------------------------------------------- envelope f(T)
def S_new(k, T):
    T = mpf(T)
    l2 = log(T/2)
    return ((mpf('0.611')*T**(mpf(1)/6)*log(T))**(k - 4) * l2**mpf('3.5')
            * (l2**mpf('1.5')/(5*pi**3) + mpf('1.466')*l2
               + l2**mpf('0.5')/pi**3 + mpf('6.597')))

def H_new(k, T):
    T = mpf(T)
    l2 = log(T/2)
    return ((mpf('0.611')*T**(mpf(1)/6)*log(T))**(k - 4)
            * (l2**5/(10*pi**3) + mpf('3.177')*l2**4 + mpf('12.644')*l2**3)
            + mpf('205.760')**k*mpf('1.910')/k - mpf('445579.419'))

def u_k(k):
    return mpf('0.748')*mpf('1.461')**(k - 2) + mpf('0.030')*mpf('1.040')**(k - 2)

def u_new(k):
    return u_k(k) - mpf('0.458')*mpf('1.067')**(k - 2)

def V_new(k, T):
    T = mpf(T)
    lT = log(T)
    return ((mpf('0.611')*T**(mpf(1)/6)*lT)**(k - 2)
            * (lT**2/(2*pi) + mpf('0.425')*lT**mpf('1.5') + mpf('7.658')*lT
               + mpf('0.637')*sqrt(lT))
            + u_new(k))

def b_k(k):
    return (mpf('1.910')/k*(mpf('3.978e6')**k + mpf('24803.958')**k
                            + mpf('205.760')**k - mpf('38448.929')**k
                            - mpf('492.548')**k - mpf('25.515')**k)
            + mpf('0.748')*mpf('1.461')**(k - 2)
            + mpf('3.329')*mpf('7.624')**(k - 2))

def b_new(k):
    return b_k(k) - mpf('756.444')*mpf('3.977e6')**(k - 2)

def G_new(k, T):
    T = mpf(T)
    lT = log(T)
    ups = mpf('1271506.721')
    return ((mpf('0.566')*T**(mpf(1)/6)*lT)**(k - 2)
            * (lT**2/(2*pi) + 3*ups*lT**(mpf(5)/3)/(2*mpf('1.1e30')**(mpf(2)/3)*pi))
            + b_new(k))

# ------------------------------------------- functional-equation method parts
def chi(s):
    s = mpc(s)
    return pi**(s - mpf('0.5'))*gamma((1 - s)/2)/gamma(s/2)

def g_k(b, k):
    b = mpf(b)
    return quad(lambda t: abs(chi(mpc(b, t)))**k/sqrt(b*b + t*t), [0, 3],
                maxdegree=10)

def C_k1(b, k):
    b = mpf(b)
    return (pi*e)**(k*(b - mpf('0.5')))*exp(k*pi/4 + k*(1 - 2*b)/2)

def C_k2(b, k):
    b = mpf(b)
    return (8*zeta(1 - b)**k/(pi*sqrt(mpf(k)))
            * (((1 - b)**2 + 9)/36)**(-k*b/4)
            * ((b*b + 9)/36)**(k*(1 - b)/4)
            * exp(k*(18*b*b - 18*b + 19)/36)
            * C_k1(b, k))

def B_fn(b, T, k):
    b, T = mpf(b), mpf(T)
    return C_k2(b, k)*T**(k*(mpf('0.5') - b) - mpf('0.5'))*(1 + abs(b)/T)

def A_fn(b, k):
    return g_k(b, k)*zeta(1 - mpf(b))**k/pi

# ------------------------------------------------------------ method machinery
def exact_gamma_beta(method, k, eps_fr, eps1_fr):
    if method in ('F1', 'F2'):
        if k == 4:
            return Fraction(3, 5), Fraction(5)
        return (Fraction(k - 1) + eps1_fr*(k - 4))/Fraction(k + 2), \
               Fraction(k*k + 2*k + 6, k + 2)
    if method in ('S3', 'S4'):
        return (Fraction(k + 1) + eps1_fr*(k - 2))/Fraction(k + 4), Fraction(k)
    if method == 'FE':
        one2e = 1 + 2*eps_fr
        return ((one2e*(k - 1) + eps1_fr*(k*one2e - 1))/(k*one2e + 1),
                Fraction(k)*(k*one2e - 1)/(k*one2e + 1))
    raise ValueError(method)

def kappas(method, k, eps, eps1):
    eps, eps1 = mpf(eps), mpf(eps1)
    c = 1 + eps1
    if method == 'F1':
        T0 = mpf(3000)
        k1 = (5*pi**2*(k + 2)*a1(c, c, T0)**k
              / (6*mpf('0.611')**(k - 4)))**(mpf(6)/(k + 2))
        return k1, -mpf(6)/(k + 2), 3*(1 + 2*eps1)/(k + 2), T0
    if method == 'F2':
        T0 = mpf('5.5e7')
        k1 = (5*pi**2*(k + 2)*a1(c, c, T0)**k
              / (3*mpf('0.611')**(k - 4)))**(mpf(6)/(k + 2))
        return k1, -mpf(6)/(k + 2), 3*(1 + 2*eps1)/(k + 2), T0
    if method == 'S3':
        T0 = mpf(4)
        k1 = (mpf('0.611')**2*(1 + 2*eps1)
              * (a1(c, c, T0)/mpf('0.611'))**k)**(mpf(6)/(k + 4))
        return k1, mpf(0), 3*(1 + 2*eps1)/(k + 4), T0
    if method == 'S4':
        T0 = mpf('1.1e30')
        k1 = ((1 + 2*eps1)*a3(c, c, T0)**k
              / mpf('0.566')**(k - 2))**(mpf(6)/(k + 4))
        return k1, mpf(0), 3*(1 + 2*eps1)/(k + 4), T0
    if method == 'FE':
        T0 = mpf(3)
        k3 = 2*(1 + eps1 + eps)/(k*(1 + 2*eps) + 1)
        k2 = 2*mpf(k)/(k*(1 + 2*eps) + 1)
        k1 = ((mpf('0.5') + eps1)*(a1(c, c, T0)*k3)**k
              / (C_k2(-eps, k)*pi))**(mpf(2)/(k*(1 + 2*eps) + 1))
        return k1, k2, k3, T0
    raise ValueError(method)

def x1_floors(method, k, eps, eps1, a, x0, gamma_mp):
    """Return (x1, arms) with arms a list of (name, value)."""
    eps, eps1, a, x0 = map(mpf, (eps, eps1, a, x0))
    lam = LAMBDA[k]
    k1, k2, k3, T0 = kappas(method, k, eps, eps1)
    arms = [('a*x0', a*x0), ('e^e+1/2', exp(e) + mpf('0.5')), ('4a', 4*a)]
    if method in ('F1', 'F2'):
        ratio = (k1/T0)**(mpf(k + 2)/6)
        if ratio <= 2/((1 + 2*eps1)*e):
            w = lambertw(-(1 + 2*eps1)/2*ratio, -1)
            arms.append(('lambert', exp(-2/(1 + 2*eps1)*w.real)))
        if lam >= 4*gamma_mp:
            g4 = gamma_mp
            arms.append(('lambda-disc',
                         exp(exp((lam + sqrt(lam*lam - 4*lam*g4))/(2*g4)))))
    elif method == 'S3':
        # T >= T0 with kappa2 = 0: power solve; proof shows it's always
        # below e^e+1/2 but keep the arm for reporting
        arms.append(('T0-power', (T0/k1)**(1/k3)))
        if lam >= 4*gamma_mp:
            g4 = gamma_mp
            arms.append(('lambda-disc',
                         exp(exp((lam + sqrt(lam*lam - 4*lam*g4))/(2*g4)))))
    elif method == 'S4':
        arms.append(('T0-statement',
                     mpf('1.1e30')**(mpf(k + 4)/(3*(1 + eps1)))
                     * k1**(-2/(1 + eps))))
        if lam >= 4*gamma_mp:
            g4 = gamma_mp
            arms.append(('lambda-disc',
                         exp(exp((lam + sqrt(lam*lam - 4*lam*g4))/(2*g4)))))
    elif method == 'FE':
        arms.append(('W0', exp(mpf(k)/(1 + eps1 + eps)
                               * lambertw((1 + eps1 + eps)/k*(3/k1)**(1/k2)).real)))
        arms.append(('kappa-log', exp(k1**(-1/k2))))
        if lam >= 4*gamma_mp:
            g4 = gamma_mp
            arms.append(('lambda-disc',
                         exp(exp((lam + sqrt(lam*lam - 4*lam*g4))/(2*g4)))))
    x1 = max(v for _, v in arms)
    active = max(arms, key=lambda t: t[1])[0]
    return x1, arms, active

def omega_eval(method, k, eps, eps1, a, x, pow_only_T1):
    """Normalized remainder pair (half-integer, integer) at the point x,
    with T = T(x) per the theorem."""
    eps, eps1, a, x = map(mpf, (eps, eps1, a, x))
    k1, k2, k3, T0 = kappas(method, k, eps, eps1)
    T = k1*log(x)**k2*x**k3
    if method in ('S3', 'S4'):
        T = k1*x**k3
    if method == 'S4':
        T1 = k1*x**k3 if k1 >= 1 else x**k3
    elif method in ('F1', 'F2'):
        T1 = x**k3 if pow_only_T1 else k1*x**k3
    elif method == 'S3':
        T1 = T
    else:
        T1 = T
    if method in ('F1', 'F2'):
        # evaluation always uses the formula exponents; at k=4 they reduce to
        # (1/2, 5) and the table states the weaker x^{3/5} form
        gam = (k - 1 + eps1*(k - 4))/mpf(k + 2)
        bet = mpf(k*k + 2*k + 6)/(k + 2)
        f = S_new if method == 'F1' else H_new
        den = x**gam*log(x)**bet
        half = (r9(x, T, k, eps, eps1, a) + r10(x, T, T0, T1, k, 1 + eps1)
                + sqrt(x)*f(k, T1))/den
        intg = (r12(x, T, T0, k, eps, eps1, a) + r10(x, T, T0, T1, k, 1 + eps1)
                + sqrt(x)*f(k, T1))/den
        return half, intg, T, T1
    if method in ('S3', 'S4'):
        gam = (k + 1 + eps1*(k - 2))/mpf(k + 4)
        bet = mpf(k)
        den = x**gam*log(x)**bet
        if method == 'S3':
            f = V_new
            gterm = r10(x, T, T0, T1, k, 1 + eps1)
        else:
            f = G_new
            gterm = r6(x, T, T0, T1, k, 1 + eps1)
        half = (r9(x, T, k, eps, eps1, a) + gterm + sqrt(x)*f(k, T1))/den
        intg = (r12(x, T, T0, k, eps, eps1, a) + gterm + sqrt(x)*f(k, T1))/den
        return half, intg, T, T1
    if method == 'FE':
        one2e = 1 + 2*eps
        gam = (one2e*(k - 1) + eps1*(k*one2e - 1))/(k*one2e + 1)
        bet = mpf(k)*(k*one2e - 1)/(k*one2e + 1)
        den = x**gam*log(x)**bet
        tail = (r5(x, -eps, 1 + eps1, T, 3, T, k) + mpf(2)**k
                + x**(-eps)*(B_fn(-eps, T, k) + A_fn(-eps, k)))
        half = (r9(x, T, k, eps, eps1, a) + tail)/den
        intg = (r12(x, T, T0, k, eps, eps1, a) + tail)/den
        return half, intg, T, T
    raise ValueError(method)

# ------------------------------------------------------- main-term polynomial
def mainterm_coeffs(k, dps_digits=50):
    """P_k coefficients a_0..a_{k-1}: residue of zeta^k(w) x^w / w at w=1."""
    n = k  # series length in u needed: u^0..u^{k-1}
    # g(u) = u*zeta(1+u) = 1 + sum_{j>=0} (-1)^j gamma_j u^{j+1}/j!
    g = [mpf(0)]*n
    g[0] = mpf(1)
    for j in range(0, n - 1):
        g[j + 1] = (-1)**j*stieltjes(j)/gamma(j + 1)
    # gk = g(u)^k mod u^n
    gk = [mpf(1)] + [mpf(0)]*(n - 1)
    for _ in range(k):
        nxt = [mpf(0)]*n
        for i in range(n):
            if gk[i] == 0:
                continue
            for j in range(0, n - i):
                nxt[i + j] += gk[i]*g[j]
        gk = nxt
    # a_m = sum_{i=0}^{k-1-m} gk[i] (-1)^{k-1-m-i} / m!
    coeffs = []
    for m_ in range(k):
        s = mpf(0)
        for i in range(0, k - m_):
            s += gk[i]*(-1)**(k - 1 - m_ - i)
        coeffs.append(s/gamma(m_ + 1))
    return coeffs  # index = power of log x

def extension_correction(k, tau, ups, x1):
    co = mainterm_coeffs(k)
    return sum(abs(co[j])*(r7(tau, ups, j, x1) + r8(tau, ups, j, x1))
               for j in range(k))

# ---------------------------------------------------------------- table rows
# (table, k, eps, eps1, a, x0, method, pow_only, printed omega, printed x1)
ROWS = [
    (3, 5, '0.6',   '0.8',  '1.6', '10969414',  'F1', True,  '0.6449',    '1.7552e7'),
    (3, 5, '0.6',   '0.8',  '1.6', '10969414',  'F2', True,  '24.1196',   '7.1314e9'),
    (3, 5, '0.863', '1.5',  '1.6', '1029',      'F1', True,  '9.2710',    '1666'),
    (3, 5, '0.619', '1.5',  '1.6', '2905558',   'F2', True,  '194.5861',  '4.8769e6'),
    (3, 5, '0.398', '0.448','1.6', '1e29',      'F2', True,  '0.0207',    '1.6000e29'),
    (3, 6, '1/3',   '5/12', '1.6', '7.1821e71', 'F1', True,  '0.0144',    '1.1492e72'),
    (3, 6, '1/3',   '5/12', '1.6', '7.1821e71', 'F2', True,  '0.0031',    '1.1492e72'),
    (3, 6, '0.697', '0.8',  '1.6', '99673',     'F1', True,  '0.2737',    '162726'),
    (3, 6, '0.524', '0.8',  '1.6', '1.5794e11', 'F2', True,  '1.3359',    '2.5590e11'),
    (3, 6, '0.379', '0.429','1.6', '1e39',      'F2', True,  '0.0050',    '1.6000e39'),
    (3, 7, '0.45',  '0.5',  '1.6', '1.9555e20', 'F1', True,  '0.0090',    '3.1288e20'),
    (3, 7, '0.45',  '0.5',  '1.6', '1.9555e20', 'F2', True,  '0.0036',    '3.1288e20'),
    (3, 8, '0.35',  '0.4',  '1.6', '2.3107e65', 'F1', True,  '0.0007',    '3.6972e65'),
    (3, 8, '0.35',  '0.4',  '1.6', '2.3107e65', 'F2', True,  '0.0002',    '3.6972e65'),
    (3, 9, '0.349', '0.35', '1.6', '7.7210e70', 'F1', True,  '7.0882e-5', '1.2354e71'),
    (3, 9, '0.349', '0.35', '1.6', '7.7210e70', 'F2', True,  '1.8080e-5', '1.2354e71'),
    (3, 9, '0.348', '0.349','1.6', '1e72',      'F2', True,  '1.7754e-5', '1.6000e72'),
    (4, 4, '0.360', '0.361','7',   '4.0772e40', 'F1', True,  '0.0839',    '2.8541e41'),
    (4, 4, '0.360', '0.361','3',   '4.0772e40', 'F2', True,  '0.1348',    '1.2232e41'),
    (5, 3, '0.3',   '1/3',  '1.6', '2.5832e87', 'S3', False, '0.2797',    '4.1332e87'),
    (5, 3, '0.3',   '1/3',  '1.6', '2.5832e87', 'S4', False, '181.1755',  '4.1332e87'),
    (5, 3, '0.649', '0.65', '1.6', '110468',    'S3', False, '3.6127',    '176749'),
    (5, 3, '0.649', '0.65', '1.6', '110468',    'S4', False, '744585.9864','3.2663e46'),
    (5, 3, '0.294', '0.295','1.6', '1e98',      'S3', False, '0.2475',    '1.6000e98'),
    (5, 4, '0.498', '0.499','1.6', '3.5298e11', 'S3', False, '2.1207',    '5.6477e11'),
    (5, 4, '0.498', '0.499','1.6', '3.5298e11', 'S4', False, '1010.5609', '2.0140e58'),
    (5, 4, '0.304', '0.305','1.6', '1e94',      'S4', False, '0.0168',    '1.6000e94'),
    (5, 5, '0.398', '0.399','1.6', '8.8503e28', 'S3', False, '1.0586',    '1.4161e29'),
    (5, 5, '0.398', '0.399','1.6', '8.8503e28', 'S4', False, '4.1503',    '7.0277e69'),
    (5, 6, '0.332', '0.333','1.6', '2.2169e73', 'S3', False, '0.6040',    '3.5471e73'),
    (5, 6, '0.332', '0.333','1.6', '2.2169e73', 'S4', False, '0.0333',    '8.2243e80'),
]

def parse_q(s):
    if '/' in s:
        n, d = s.split('/')
        return mpf(n)/mpf(d), Fraction(int(n), int(d))
    return mpf(s), Fraction(s)

def fmt(v, n=10):
    return mp.nstr(mpf(v), n)

def print_round_up_x1(v):
    """Publication rule: exact integer ceil below 1e6, else round-up at 5
    significant figures.  Relative guard strips decimal->binary dust."""
    from mpmath import ceil as mceil, floor as mfloor
    g = v*(1 - mpf('1e-40'))
    if v < mpf('1e6'):
        return mpf(mceil(g))
    e10 = int(mfloor(log(v)/log(10)))
    scale = mpf(10)**(e10 - 4)
    r = mpf(mceil(g/scale))*scale
    return r

def main():
    out = []
    print(f"{'tbl':>3} {'k':>2} {'meth':>4} {'eps':>6} {'eps1':>6} "
          f"{'omega':>14} {'printed':>12} {'x1pub':>12} {'printed':>11} "
          f"{'active':>11} flags")
    for (tbl, k, eps_s, eps1_s, a_s, x0_s, method, pow_only,
         omega_p, x1_p) in ROWS:
        eps, eps_fr = parse_q(eps_s)
        eps1, eps1_fr = parse_q(eps1_s)
        a = mpf(a_s)
        x0 = mpf(x0_s)
        gam_fr, bet_fr = exact_gamma_beta(method, k, eps_fr, eps1_fr)
        # floor conditions use the formula exponent even where the table
        # states a weaker presentation exponent (k=4)
        gform = (Fraction(k - 1) + eps1_fr*(k - 4))/Fraction(k + 2) \
            if method in ('F1', 'F2') else gam_fr
        gam_mp = mpf(gform.numerator)/gform.denominator
        x1_raw, arms, active = x1_floors(method, k, eps, eps1, a, x0, gam_mp)
        x1 = print_round_up_x1(x1_raw)
        results = {}
        for po in ([pow_only] if pow_only is not None else [False, True]):
            half, intg, T, T1 = omega_eval(method, k, eps, eps1, a, x1, po)
            results[po] = (max(half, intg), half, intg, T, T1)
        if pow_only is None:
            # undetermined rows: report both, pick closer to printed
            tgt = mpf(omega_p)
            pow_only = min(results, key=lambda p: abs(results[p][0] - tgt))
            note = (f" [T1 rules: kxp={fmt(results[False][0], 8)}"
                    f" pow={fmt(results[True][0], 8)} -> chose "
                    f"{'pow' if pow_only else 'kxp'}]")
        else:
            note = ''
        omega, half, intg, T, T1 = results[pow_only]
        flags = []
        dw = omega - mpf(omega_p)
        if abs(dw) > mpf('5e-4') and omega > mpf(omega_p):
            flags.append(f"OMEGA-DIFF {fmt(dw, 4)}")
        if abs(dw/mpf(omega_p)) > mpf('2e-3'):
            flags.append(f"OMEGA-REL {fmt(dw/mpf(omega_p), 4)}")
        rel_x1 = (x1 - mpf(x1_p))/mpf(x1_p)
        if abs(rel_x1) > mpf('1e-9'):
            flags.append(f"X1-DIFF rel {fmt(rel_x1, 4)}")
        if method in ('F1', 'F2'):
            k1_, k2_, k3_, _ = kappas(method, k, eps, eps1)
            cond_pow = k1_*log(x1)**k2_ <= 1
            if cond_pow != pow_only:
                flags.append("T1-RULE-MISMATCH")
        print(f"{tbl:>3} {k:>2} {method:>4} {eps_s:>6} {eps1_s:>6} "
              f"{fmt(omega, 8):>14} {omega_p:>12} {fmt(x1, 6):>12} {x1_p:>11} "
              f"{active:>11} {' '.join(flags)}{note}")
        out.append(dict(table=tbl, k=k, eps=eps_s, eps1=eps1_s, a=a_s,
                        x0=x0_s, method=method, pow_only=bool(pow_only),
                        gamma=str(gam_fr), beta=str(bet_fr),
                        omega=fmt(omega, 20), omega_half=fmt(half, 20),
                        omega_int=fmt(intg, 20), x1_raw=fmt(x1_raw, 25),
                        x1=fmt(x1, 25),
                        T=fmt(T, 20), T1=fmt(T1, 20), active_floor=active,
                        arms={n: fmt(v, 20) for n, v in arms},
                        printed_omega=omega_p, printed_x1=x1_p))
    with open('tools/oracle/out/rows.json', 'w') as f:
        json.dump(out, f, indent=1)

    # Table 1: extension to all reals on the final selections
    print("\nTable 1 alpha values (omega + extension correction):")
    t1rows = [  # (k, row index in out[] for the omega source, printed alpha)
        (3, ('S3', '0.294'), '0.248'),
        (4, ('F1', '0.360'), '0.084'),
        (5, ('F1', '0.863'), '9.272'),
        (5, ('F1', '0.6'),   '0.645'),
        (5, ('F2', '0.398'), '0.021'),
        (6, ('F1', '0.697'), '0.274'),
        (6, ('F2', '0.379'), '0.006'),
        (6, ('F2', '1/3'),   '0.004'),
        (7, ('F2', '0.45'),  '0.004'),
        (8, ('F2', '0.35'),  '0.001'),
        (9, ('F2', '0.348'), '2.100e-5'),
    ]
    for k, (meth, eps_s), alpha_p in t1rows:
        row = next(r for r in out
                   if r['k'] == k and r['method'] == meth and r['eps'] == eps_s)
        gam = Fraction(row['gamma'])
        bet = Fraction(row['beta'])
        tau = mpf(gam.numerator)/gam.denominator
        ups = mpf(bet.numerator)/bet.denominator
        x1 = mpf(row['x1'])
        corr = extension_correction(k, tau, ups, x1)
        alpha = mpf(row['omega']) + corr
        print(f"  k={k} {meth} eps={eps_s:>6}: alpha={fmt(alpha, 8)} "
              f"(omega={fmt(row['omega'], 8)}, corr={fmt(corr, 4)}) "
              f"printed={alpha_p}")
    # functional-equation smoke values (no table anchor)
    print("\nFE smoke (k=3, eps=0.05, eps1=0.1, a=1.6):")
    print("  g_3(-0.05) =", fmt(g_k('-0.05', 3), 12))
    print("  C_3,1(-0.05) =", fmt(C_k1(mpf('-0.05'), 3), 12))
    print("  C_3,2(-0.05) =", fmt(C_k2(mpf('-0.05'), 3), 12))
    print("  A(-0.05, 3) =", fmt(A_fn(mpf('-0.05'), 3), 12))
    print("  B(-0.05, 1e6, 3) =", fmt(B_fn(mpf('-0.05'), mpf('1e6'), 3), 12))

if __name__ == '__main__':
    main()
