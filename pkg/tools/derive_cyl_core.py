"""Derivation: mean curvature of the cylindrical-chart annulus immersion.

Immersion (s,theta) -> (rho_e, Theta, z) in ambient coords with metric
diag(lam^2, lam^2 rho^2, 1), lam = 2/(1-rho^2):
    rho_e = exp(-chi(s) eta(s,t)) * Ft(R(s)),  Ft(R) = 2R/(1+R^2)
    Theta = t
    z     = exp((1-chi(s)) eta(s,t)) * h(s)
Emits H, the vertical normal component, and the normal pairing of the
deformation direction, as code with cse.
"""
import sympy as sp

s, t = sp.symbols('s t')
R = sp.Function('R')(s)
h = sp.Function('h')(s)
chi = sp.Function('chi')(s)
eta = sp.Function('eta')(s, t)

Ft = 2*R/(1 + R**2)
rho = sp.exp(-chi*eta)*Ft
z = sp.exp((1 - chi)*eta)*h
X = sp.Matrix([rho, t, z])          # coordinates (rho_e, Theta, x3)

Xs = X.diff(s)
Xt = X.diff(t)

rr = sp.symbols('rho_pos', positive=True)
lam = 2/(1 - rr**2)
G = sp.diag(lam**2, lam**2*rr**2, sp.Integer(1))

def subs_rho(e):
    return e.subs(rr, rho)

g_ss = subs_rho((Xs.T*G*Xs)[0])
g_st = subs_rho((Xs.T*G*Xt)[0])
g_tt = subs_rho((Xt.T*G*Xt)[0])

# normal covector via permutation symbol
n_co = sp.Matrix([
    Xs[1]*Xt[2] - Xs[2]*Xt[1],
    Xs[2]*Xt[0] - Xs[0]*Xt[2],
    Xs[0]*Xt[1] - Xs[1]*Xt[0],
])
Ginv = sp.diag(1/lam**2, 1/(lam**2*rr**2), sp.Integer(1))
norm2 = subs_rho((n_co.T*Ginv*n_co)[0])

# ambient Christoffels, coords x^0=rho, x^1=theta, x^2=z
lamp = sp.diff(lam, rr)
Gam = [[[sp.Integer(0)]*3 for _ in range(3)] for _ in range(3)]
Gam[0][0][0] = lamp/lam
Gam[0][1][1] = -(rr**2*lamp/lam + rr)
Gam[1][0][1] = lamp/lam + 1/rr
Gam[1][1][0] = Gam[1][0][1]

def second_ff(Xi, Xj, Xij):
    comp = []
    for a in range(3):
        acc = Xij[a]
        for b in range(3):
            for c in range(3):
                if Gam[a][b][c] != 0:
                    acc += subs_rho(Gam[a][b][c])*Xi[b]*Xj[c]
        comp.append(acc)
    v = sum(comp[a]*n_co[a] for a in range(3))
    return v

II_ss_n = second_ff(Xs, Xs, X.diff(s, 2))
II_st_n = second_ff(Xs, Xt, X.diff(s).diff(t))
II_tt_n = second_ff(Xt, Xt, X.diff(t, 2))

detg = g_ss*g_tt - g_st**2
# H = (g_tt II_ss - 2 g_st II_st + g_ss II_tt) / (2 detg), II = II_n/sqrt(norm2)
Hnum = (g_tt*II_ss_n - 2*g_st*II_st_n + g_ss*II_tt_n)
# H = Hnum/(2 detg sqrt(norm2))
phi_n = n_co[2]          # z-component of covector; <N,e3> = n_z/sqrt(norm2)

# deformation pairing: d/deps X^{eta + eps} at eps=0 -> direction
dXdeta = sp.Matrix([-chi*rho, 0, (1 - chi)*z])
pair_n = sum(dXdeta[a]*n_co[a] for a in range(3))   # <Xdot, N>*sqrt(norm2)

# replace function derivatives by plain symbols
Rv, Rp, Rpp = sp.symbols('Rv Rp Rpp')
hv, hp, hpp = sp.symbols('hv hp hpp')
cv, cp, cpp = sp.symbols('cv cp cpp')
e0, e1, e2, e11, e12, e22 = sp.symbols('e0 es et ess est ett')

repl = [
    (sp.Derivative(R, (s, 2)), Rpp), (sp.Derivative(R, s), Rp), (R, Rv),
    (sp.Derivative(h, (s, 2)), hpp), (sp.Derivative(h, s), hp), (h, hv),
    (sp.Derivative(chi, (s, 2)), cpp), (sp.Derivative(chi, s), cp), (chi, cv),
    (sp.Derivative(eta, (s, 2)), e11), (sp.Derivative(eta, s, t), e12),
    (sp.Derivative(eta, (t, 2)), e22),
    (sp.Derivative(eta, s), e1), (sp.Derivative(eta, t), e2), (eta, e0),
]

def finalize(expr):
    out = expr
    for a, b in repl:
        out = out.subs(a, b)
    return out

exprs = dict(
    g_ss=finalize(g_ss), g_st=finalize(g_st), g_tt=finalize(g_tt),
    Hnum=finalize(Hnum), detg=finalize(detg), norm2=finalize(norm2),
    phi_n=finalize(phi_n), pair_n=finalize(pair_n),
)
import pickle
with open('/root/pkg/tools/cyl_core.pkl', 'wb') as fh:
    pickle.dump({k: v for k, v in exprs.items()}, fh)
for k, v in exprs.items():
    print(k, 'ops:', sp.count_ops(v))
