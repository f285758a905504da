"""Generate the frozen curvature kernels.

Derives (i) the graph-chart residual core: the bracket polynomial of the
compactified curvature excess, exactly divided by (1-r^2)^4, and (ii) the
cylindrical-chart mean curvature of the deformed annulus immersion, together
with the jet partial derivatives both assemblies need.  Emits
src/cmchalf/_gen_disk.py and src/cmchalf/_gen_cyl.py.

Run from the repository root:  python3 tools/generate_kernels.py
"""
import sympy as sp
from sympy.printing.numpy import NumPyPrinter

HEADER = '''"""Generated by tools/generate_kernels.py -- do not edit by hand."""
from numpy import exp, sqrt

'''


def emit(fname, funcname, argnames, exprs, retnames):
    subexprs, reduced = sp.cse(exprs, optimizations='basic')
    printer = NumPyPrinter({'fully_qualified_modules': False})
    lines = [f"def {funcname}({', '.join(argnames)}):"]
    for sym, val in subexprs:
        lines.append(f"    {sym} = {printer.doprint(val)}")
    for name, val in zip(retnames, reduced):
        lines.append(f"    {name} = {printer.doprint(val)}")
    lines.append(f"    return {', '.join(retnames)}")
    return "\n".join(lines) + "\n"


def gen_disk():
    r, m, n1, n2, n11, n12, n22 = sp.symbols('r m n1 n2 n11 n12 n22')
    u = 1 - r**2
    q = 1 + r**2
    Q = u**2 + 8*r**2

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
            + m*br22*(4*u/q + 2*r*(3 - r**2)*n1*u**2/q**2
                      + (n1**2 + n11)*u**3/q))

    f0, f1, f2 = sp.Rational(1, 2), sp.Rational(3, 8), sp.Rational(-1, 16)
    RatPart = (-4*(1 + X)*u**2
               - 8*q**2*(f0*X + f1*X**2 + f2*X**3)
               - n2**2*u**4*Q/(r**2*q**2)
               + u*q*Rest)
    num, den = sp.fraction(sp.together(sp.expand(RatPart)))
    quo, rem = sp.div(sp.expand(num), sp.expand(u**4), r)
    assert sp.simplify(rem) == 0, "bracket not divisible by (1-r^2)^4"
    psi = sp.cancel(sp.together(quo/den))

    jets = (m, n1, n2, n11, n12, n22)
    exprs = [psi] + [sp.diff(psi, v) for v in jets]
    names = ['p0', 'pm', 'p1', 'p2', 'p11', 'p12', 'p22']
    return emit('_gen_disk.py', 'psi_terms',
                ['r', 'm', 'n1', 'n2', 'n11', 'n12', 'n22'], exprs, names)


def gen_cyl():
    s, t = sp.symbols('s t')
    R = sp.Function('R')(s)
    h = sp.Function('h')(s)
    chi = sp.Function('chi')(s)
    eta = sp.Function('eta')(s, t)

    Ft = 2*R/(1 + R**2)
    rho = sp.exp(-chi*eta)*Ft
    z = sp.exp((1 - chi)*eta)*h
    X = sp.Matrix([rho, t, z])
    Xs, Xt = X.diff(s), X.diff(t)

    rr = sp.symbols('rho_pos', positive=True)
    lam = 2/(1 - rr**2)
    G = sp.diag(lam**2, lam**2*rr**2, sp.Integer(1))
    Ginv = sp.diag(1/lam**2, 1/(lam**2*rr**2), sp.Integer(1))

    def at_rho(e):
        return e.subs(rr, rho)

    g_ss = at_rho((Xs.T*G*Xs)[0])
    g_st = at_rho((Xs.T*G*Xt)[0])
    g_tt = at_rho((Xt.T*G*Xt)[0])

    n_co = sp.Matrix([
        Xs[1]*Xt[2] - Xs[2]*Xt[1],
        Xs[2]*Xt[0] - Xs[0]*Xt[2],
        Xs[0]*Xt[1] - Xs[1]*Xt[0],
    ])
    norm2 = at_rho((n_co.T*Ginv*n_co)[0])

    lamp = sp.diff(lam, rr)
    Gam = {}
    Gam[(0, 0, 0)] = lamp/lam
    Gam[(0, 1, 1)] = -(rr**2*lamp/lam + rr)
    Gam[(1, 0, 1)] = lamp/lam + 1/rr
    Gam[(1, 1, 0)] = Gam[(1, 0, 1)]

    def ff(Xi, Xj, Xij):
        comp = []
        for a in range(3):
            acc = Xij[a]
            for (aa, b, c), gam in Gam.items():
                if aa == a:
                    acc += at_rho(gam)*Xi[b]*Xj[c]
            comp.append(acc)
        return sum(comp[a]*n_co[a] for a in range(3))

    II_ss = ff(Xs, Xs, X.diff(s, 2))
    II_st = ff(Xs, Xt, X.diff(s).diff(t))
    II_tt = ff(Xt, Xt, X.diff(t, 2))
    detg = g_ss*g_tt - g_st**2
    Hnum = g_tt*II_ss - 2*g_st*II_st + g_ss*II_tt
    phi_n = n_co[2]
    pair_n = -chi*rho*n_co[0]*at_rho(lam**2) + (1 - chi)*z*n_co[2]

    Rv, Rp, Rpp = sp.symbols('Rv Rp Rpp')
    hv, hp, hpp = sp.symbols('hv hp hpp')
    cv, cp, cpp = sp.symbols('cv cp cpp')
    e0, e1, e2, e11, e12, e22 = sp.symbols('e0 es et ess est ett')
    repl = [
        (sp.Derivative(R, (s, 2)), Rpp), (sp.Derivative(R, s), Rp), (R, Rv),
        (sp.Derivative(h, (s, 2)), hpp), (sp.Derivative(h, s), hp), (h, hv),
        (sp.Derivative(chi, (s, 2)), cpp), (sp.Derivative(chi, s), cp),
        (chi, cv),
        (sp.Derivative(eta, (s, 2)), e11), (sp.Derivative(eta, s, t), e12),
        (sp.Derivative(eta, (t, 2)), e22),
        (sp.Derivative(eta, s), e1), (sp.Derivative(eta, t), e2), (eta, e0),
    ]

    def fin(expr):
        out = expr
        for a, b in repl:
            out = out.subs(a, b)
        return out

    Hnum, detg, norm2 = fin(Hnum), fin(detg), fin(norm2)
    phi_n, pair_n = fin(phi_n), fin(pair_n)
    g_ss, g_st, g_tt = fin(g_ss), fin(g_st), fin(g_tt)

    jets = (e0, e1, e2, e11, e12, e22)
    exprs = ([Hnum, detg, norm2, phi_n, pair_n, g_ss, g_st, g_tt]
             + [sp.diff(Hnum, v) for v in jets]
             + [sp.diff(detg, v) for v in jets[:3]]
             + [sp.diff(norm2, v) for v in jets[:3]])
    names = (['Hnum', 'detg', 'norm2', 'phi_n', 'pair_n', 'gss', 'gst', 'gtt']
             + [f'Hn_{k}' for k in ('e0', 'es', 'et', 'ess', 'est', 'ett')]
             + [f'dg_{k}' for k in ('e0', 'es', 'et')]
             + [f'n2_{k}' for k in ('e0', 'es', 'et')])
    args = ['Rv', 'Rp', 'Rpp', 'hv', 'hp', 'hpp', 'cv', 'cp', 'cpp',
            'e0', 'es', 'et', 'ess', 'est', 'ett']
    return emit('_gen_cyl.py', 'immersion_terms', args, exprs, names)


if __name__ == '__main__':
    import pathlib
    out = pathlib.Path(__file__).resolve().parent.parent / 'src' / 'cmchalf'
    out.mkdir(parents=True, exist_ok=True)
    (out / '_gen_disk.py').write_text(HEADER + gen_disk())
    print("wrote _gen_disk.py")
    (out / '_gen_cyl.py').write_text(HEADER + gen_cyl())
    print("wrote _gen_cyl.py")
