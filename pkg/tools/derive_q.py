"""Closed form of the Sturm potential of the rotational annulus.

q = sigma22 * (phi^2 - 2 kappa1 kappa2) on the upper graph:
  phi^2   = u^2 S / (16 r^2 q^2)
  2 k1k2 -> second term; the difference has an exact u^2 division.
"""
import sympy as sp

r, beta = sp.symbols('r beta', positive=True)
u = 1 - r**2
q = 1 + r**2
Q = u**2 + 8*r**2
S = 2*beta*Q - (1 + beta**2)*u**2
a = Q - beta*u**2
ap = sp.diff(a, r)
Sp = sp.diff(S, r)

# profile slope hbar' = 4 a/(u^2 sqrt(S)); W = 4 r q/(u sqrt(S))
hb = 4*a/(u**2*sp.sqrt(S))
hbp = sp.simplify(sp.diff(hb, r))
G111 = 2*r/u
G221 = -r*q*Q/u**3
W2 = 16*r**2*q**2/(u**2*S)
sigma11 = 16/u**2
sigma22 = 16*r**2*q**2/u**4

II11 = (sp.diff(hb, r) - G111*hb)
II22 = (-G221*hb)
k1k2 = II11*II22/(sigma11*sigma22*W2**2)
phi2 = u**2*S/(16*r**2*q**2)
qpot = sp.together(sp.simplify(sigma22*(phi2 - 2*k1k2)))
num, den = sp.fraction(qpot)
print("denominator:", sp.factor(den))
quo, rem = sp.div(sp.expand(num), sp.expand(u**2), r)
print("u^2 divides numerator:", sp.simplify(rem) == 0)
qfinal = sp.cancel(sp.together(quo/sp.cancel(den/u**2)))
qfinal = sp.simplify(qfinal)
print("q =", qfinal)
print("ops:", sp.count_ops(qfinal))
# check value at r -> 1
print("q at r=1:", sp.simplify(qfinal.subs(r, 1)))
print("q at neck beta=4:", sp.nsimplify(0), float(qfinal.subs({beta: 4, r: sp.Rational(1,3)})))
import pickle
with open('/root/pkg/tools/q_closed.pkl','wb') as fh:
    pickle.dump(qfinal, fh)
