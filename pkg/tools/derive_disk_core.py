"""Derivation scratch: stable bracket form of the graph-chart curvature residual.

Builds {} = N + u*q*Rest, splits off the sqrt tail via f(X) = (1+X)/(1+sqrt(1+X)),
verifies the rational part is exactly divisible by u^4 = (1-r^2)^4, and emits
the quotient for code generation.
"""
import sympy as sp

r, m, n1, n2, n11, n12, n22 = sp.symbols('r m n1 n2 n11 n12 n22', positive=False)
# m = exp(-2*eta); exp(2*eta) = 1/m
u = 1 - r**2
q = 1 + r**2
Q = u**2 + 8*r**2   # = 1 + 6 r^2 + r^4

x1 = 2*r*n1/q
x2 = n1**2/sp.Integer(4) + (m - 1)/q**2
x4 = n2**2/(4*r**2*q**2)
X = x1*u + x2*u**2 + x4*u**4

br11 = 1 + x1*u + x2*u**2
br22 = 1 + n2**2*(1/m)*u**2/(4*r**2)
br12 = 2*r/q + n1*u/2

Rest = (br11*Q*n1/r
        + br11*(n2**2 + n22)*u**3/(r**2*q)
        + br12*n2**2*u**3/r**3
        - br12*n2*(n1*n2 + n12)*u**4/(r**2*q)
        + m*br22*(4*u/q + 2*r*(3 - r**2)*n1*u**2/q**2 + (n1**2 + n11)*u**3/q))

# f(X) = (1+X)/(1+sqrt(1+X)) = sum f_k X^k ; need f0..f2 and the tail
Xs = sp.symbols('Xs')
f = (1 + Xs)/(1 + sp.sqrt(1 + Xs))
ser = sp.series(f, Xs, 0, 10).removeO()
coeffs = [ser.coeff(Xs, k) for k in range(10)]
print("f coefficients:", coeffs[:8])
f0, f1, f2 = coeffs[0], coeffs[1], coeffs[2]

RatPart = (-4*(1 + X)*u**2
           - 8*q**2*(f0*X + f1*X**2 + f2*X**3)
           - n2**2*u**4*(u**2 + 8*r**2)/(r**2*q**2)
           + u*q*Rest)

RatPart = sp.together(sp.expand(RatPart))
num, den = sp.fraction(RatPart)
print("denominator:", den)

num_poly = sp.Poly(sp.expand(num), r)
# divide numerator by u^4 = (1-r^2)^4
quo, rem = sp.div(sp.expand(num), sp.expand(u**4), r)
print("remainder zero:", sp.simplify(rem) == 0)
if sp.simplify(rem) == 0:
    psi_rat = sp.cancel(sp.together(quo/den))
    n2_, d2_ = sp.fraction(psi_rat)
    print("final denominator:", sp.factor(d2_))
    import pickle
    with open('/root/pkg/tools/psi_rat.pkl', 'wb') as fh:
        pickle.dump(sp.expand(psi_rat), fh)
    print("num ops:", sp.count_ops(psi_rat))
