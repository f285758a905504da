import pickle
import numpy as np
import sympy as sp
from scipy.integrate import quad
from scipy.optimize import brentq

with open('/root/pkg/tools/cyl_core.pkl', 'rb') as fh:
    E = pickle.load(fh)

syms = sp.symbols('Rv Rp Rpp hv hp hpp cv cp cpp e0 es et ess est ett')
fns = {k: sp.lambdify(syms, v, modules='numpy') for k, v in E.items()}

def profile(beta):
    Rb = abs(1 - np.sqrt(beta))/(1 + np.sqrt(beta))
    S = lambda x: 16*beta*x**2 - (1-beta)**2*(1-x**2)**2
    # psi via x = Rb cosh v substitution
    v1 = np.arccosh(1.0/Rb)
    def psi(x):
        vx = np.arccosh(x/Rb)
        f = lambda v: 4.0/abs(1-beta)/np.sqrt(1.0/Rb**2 - Rb**2*np.cosh(v)**2)
        val, err = quad(f, 0, vx, epsabs=1e-14, epsrel=1e-13, limit=200)
        return val
    T = psi(1.0)
    def r_of_s(sv):
        sv = abs(sv)
        if sv >= T: return 1.0
        return brentq(lambda x: psi(x) - sv, Rb, 1.0, xtol=1e-15)
    t0 = abs(np.log(beta))
    def hbar(r):
        # t = t0 + tau^2 substitution
        chi_r = 2*np.log((1+r)/(1-r))
        if chi_r <= t0: return 0.0
        tmax = np.sqrt(chi_r - t0)
        f = lambda tau: 2*tau*(np.cosh(t0+tau**2) - beta)/np.sqrt(2*beta*np.cosh(t0+tau**2) - 1 - beta**2)
        val, err = quad(f, 0, tmax, epsabs=1e-13, epsrel=1e-12, limit=200)
        return val
    return Rb, T, psi, r_of_s, hbar, S

def chi_fun(s, T):
    # smooth even cutoff: 1 on |s|<=T/3, 0 on |s|>=2T/3
    x = (abs(s) - T/3)/(T/3)
    if x <= 0: return 1.0, 0.0, 0.0
    if x >= 1: return 0.0, 0.0, 0.0
    # C-infinity bump-based transition on (0,1): f(x)=g(1-x)/(g(x)+g(1-x)), g(x)=exp(-1/x)
    g = lambda y: np.exp(-1.0/y) if y > 0 else 0.0
    a, b = g(x), g(1-x)
    val = b/(a+b)
    # derivatives numerically here (scratch only)
    dd = 1e-6
    gp = lambda y: (g(y+dd)-g(y-dd))/(2*dd)
    return val, None, None

for beta in (4.0, 0.25):
    Rb, T, psi, r_of_s, hbar, S = profile(beta)
    print(f"beta={beta}: R_beta={Rb:.6f} T={T:.10f}")
    print("  r(2T/3) =", r_of_s(2*T/3), " 1-r^2:", 1-r_of_s(2*T/3)**2)
    print("  r(T/3) =", r_of_s(T/3))
    # check H = 1/2 at several s with eta=0
    for sv in (0.08*T, 0.3*T, 0.55*T, 0.8*T, 0.95*T):
        r = r_of_s(sv)
        Sr = S(r)
        Rp = np.sqrt(Sr)/4
        Sp = 32*beta*r + 4*(1-beta)**2*r*(1-r**2)
        Rpp = Sp/32
        u = 1-r**2; q=1+r**2; Q = u**2+8*r**2
        hp = (Q - beta*u**2)/u**2
        hv = hbar(r)*np.sign(sv)
        dhp_dr = ( (4*r*u - 2*beta*u*(-2*r))*u**2 - (Q-beta*u**2)*2*u*(-2*r) ) / u**4
        # d/dr[(Q-beta u^2)/u^2]; Q' = 2u*(-2r)+16r = -4ru+16r
        Qp = -4*r*u + 16*r
        dhp_dr = (Qp - beta*2*u*(-2*r))/u**2 - (Q-beta*u**2)*2*(-2*r)/u**3
        hpp = dhp_dr*Rp
        cv_, _, _ = chi_fun(sv, T)
        # chi derivatives: central differences of chi_fun value
        dd = 1e-5*T
        cp_ = (chi_fun(sv+dd,T)[0]-chi_fun(sv-dd,T)[0])/(2*dd)
        cpp_ = (chi_fun(sv+dd,T)[0]-2*cv_+chi_fun(sv-dd,T)[0])/dd**2
        args = (r, Rp, Rpp, hv, hp, hpp, cv_, cp_, cpp_, 0.0,0,0,0,0,0)
        Hn = fns['Hnum'](*args); dg = fns['detg'](*args); n2 = fns['norm2'](*args)
        H = Hn/(2*dg*np.sqrt(n2))
        gss, gst, gtt = fns['g_ss'](*args), fns['g_st'](*args), fns['g_tt'](*args)
        phi = fns['phi_n'](*args)/np.sqrt(n2)
        pair = fns['pair_n'](*args)/np.sqrt(n2)
        s22 = 16*r**2*q**2/u**4
        print(f"   s/T={sv/T:.2f} r={r:.4f} H={H:.12f} conf={(gss-gtt)/gtt:.2e} "
              f"gst={gst:.2e} phi={phi:.6f} 1/pair={1/pair if pair!=0 else np.inf:.4f} pair={pair:.6f}")
    # phi'(T): finite difference near T
    for eps in (1e-4, 1e-5):
        sv = T - eps
        r = r_of_s(sv); Sr = S(r); Rp = np.sqrt(Sr)/4
        u=1-r**2; q=1+r**2; Q=u**2+8*r**2
        hp=(Q-beta*u**2)/u**2; hv=hbar(r)
        Qp = -4*r*u + 16*r
        dhp_dr = (Qp + 4*beta*u*r)/u**2 + 4*r*(Q-beta*u**2)/u**3
        hpp = dhp_dr*Rp
        args = (r, Rp, Sp/32 if False else (32*beta*r + 4*(1-beta)**2*r*u)/32, hv, hp, hpp, 0.0,0.0,0.0, 0.0,0,0,0,0,0)
        phi = fns['phi_n'](*args)/np.sqrt(fns['norm2'](*args))
        print(f"   phi(T-{eps:g})/{eps:g} = {phi/eps:.6f}  (expect ~ -phi'(T))")
