"""Check the derived quotient against direct divergence-form H in high precision."""
import pickle
import sympy as sp
import mpmath as mp

mp.mp.dps = 50

r, m, n1, n2, n11, n12, n22 = sp.symbols('r m n1 n2 n11 n12 n22')
with open('/root/pkg/tools/psi_rat.pkl', 'rb') as fh:
    psi_rat = pickle.load(fh)

psi_fun = sp.lambdify((r, m, n1, n2, n11, n12, n22), psi_rat, modules='mpmath')

fser = None
def f_tail_G(X):
    # G(X) = (f(X) - 1/2 - 3/8 X + 1/16 X^2)/X^3 with f = (1+X)/(1+sqrt(1+X))
    f = (1 + X)/(1 + mp.sqrt(1 + X))
    return (f - mp.mpf(1)/2 - mp.mpf(3)/8*X + mp.mpf(1)/16*X**2)/X**3

def psi_full(rv, mv, j1, j2, j11, j12, j22):
    u = 1 - rv**2; q = 1 + rv**2
    x1 = 2*rv*j1/q
    x2 = j1**2/4 + (mv - 1)/q**2
    x4 = j2**2/(4*rv**2*q**2)
    X = x1*u + x2*u**2 + x4*u**4
    rat = psi_fun(rv, mv, j1, j2, j11, j12, j22)
    tail = -8*q**2*(X/u)**4*f_tail_G(X) if X != 0 else 0
    return rat + tail

def H_direct(rv, eta, j1, j2, j11, j12, j22):
    """Divergence-form mean curvature, graph h = 2 e^eta (1+r^2)/(1-r^2)."""
    u = 1 - rv**2; q = 1 + rv**2
    P = q/u; Pp = 4*rv/u**2; Ppp = (4 + 12*rv**2)/u**3
    e = mp.e**eta
    h1 = 2*e*(j1*P + Pp)
    h2 = 2*e*j2*P
    h11 = 2*e*((j1**2 + j11)*P + 2*j1*Pp + Ppp)
    h12 = 2*e*((j1*j2 + j12)*P + j2*Pp)
    h22 = 2*e*((j2**2 + j22)*P)
    s11 = 16/u**2; s22 = 16*rv**2*q**2/u**4
    g11 = s11 + h1**2; g12 = h1*h2; g22 = s22 + h2**2
    det = g11*g22 - g12**2
    G111 = 2*rv/u
    G122 = (1 + 6*rv**2 + rv**4)/(rv*q*u)
    G221 = -rv*q*(1 + 6*rv**2 + rv**4)/u**3
    W = mp.sqrt(1 + (g22*h1**2 - 2*g12*h1*h2 + g11*h2**2)/det)
    # W = sqrt(1+|grad_sigma h|^2) ; |grad h|^2 = sigma^{ij} hi hj
    W = mp.sqrt(1 + h1**2/s11 + h2**2/s22)
    T = ((g22*(h11 - G111*h1) )/det
         + 2*(-g12/det)*(h12 - G122*h2)
         + (g11/det)*(h22 - G221*h1))
    return T/(2*W)

import random
random.seed(7)
print("point check: psi vs 16 q^2 w^3 (H-1/2)/u^4")
maxrel = 0
for k in range(12):
    rv = mp.mpf(random.uniform(0.05, 0.995))
    eta = mp.mpf(random.uniform(-0.4, 0.4))
    jets = [mp.mpf(random.uniform(-0.5, 0.5)) for _ in range(5)]
    j1, j2, j11, j12, j22 = jets
    mv = mp.e**(-2*eta)
    u = 1 - rv**2; q = 1 + rv**2
    x1 = 2*rv*j1/q; x2 = j1**2/4 + (mv-1)/q**2; x4 = j2**2/(4*rv**2*q**2)
    X = x1*u + x2*u**2 + x4*u**4
    w = mp.sqrt(1 + X)
    H = H_direct(rv, eta, j1, j2, j11, j12, j22)
    lhs = psi_full(rv, mv, j1, j2, j11, j12, j22)
    rhs = 16*q**2*w**3*(H - mp.mpf(1)/2)/u**4
    rel = abs(lhs - rhs)/max(abs(rhs), mp.mpf(1e-30))
    maxrel = max(maxrel, rel)
print("max rel error:", mp.nstr(maxrel, 5))
# zero field
print("psi(0 jet) at r=0.3:", mp.nstr(psi_full(mp.mpf('0.3'), mp.mpf(1), 0,0,0,0,0), 5))
# r = 1 exactly, zero field and nonzero field
print("psi at r=1 zero jet:", mp.nstr(psi_fun(mp.mpf(1), mp.mpf(1), 0,0,0,0,0), 5))
v = psi_full(mp.mpf(1), mp.e**mp.mpf(-0.2), mp.mpf('0.1'), mp.mpf('0.2'), mp.mpf('0.3'), mp.mpf('-0.1'), mp.mpf('0.15'))
print("psi at r=1 generic jet:", mp.nstr(v, 8))
