"""Offline oracle: high-precision reference values, frozen into the test suite.

Run manually (mpmath required); the library itself never imports mpmath.
"""
import mpmath as mp

mp.mp.dps = 50

def show(name, v):
    print(f"{name:28s} = {mp.nstr(v, 20)}")

# gamma / special function goldens
show("gamma(0.25)", mp.gamma(mp.mpf(1)/4))
show("gamma(0.5)", mp.gamma(mp.mpf(1)/2))
show("struve_h(3/4, 1)", mp.struveh(mp.mpf(3)/4, 1))
show("struve_h(3/4, 5)", mp.struveh(mp.mpf(3)/4, 5))
show("J_{1/2}(pi/2)", mp.besselj(mp.mpf(1)/2, mp.pi/2))
show("J_{-1/2}(pi)", mp.besselj(-mp.mpf(1)/2, mp.pi))
show("J_{1/4}(0.5)", mp.besselj(mp.mpf(1)/4, mp.mpf(1)/2))
show("J_{-3/4}(0.5)", mp.besselj(-mp.mpf(3)/4, mp.mpf(1)/2))

# series coefficient c(n;l) = (-1)^l n / ((2n)^(2l+1/(2n)) Gamma(l+1/(2n)) l!)
def coeff_c(n, l):
    n = mp.mpf(n)
    return (-1)**l * n / ((2*n)**(2*l + 1/(2*n)) * mp.gamma(l + 1/(2*n)) * mp.factorial(l))

show("c(1;0)", coeff_c(1, 0))
show("c(1;1)", coeff_c(1, 1))
show("c(2;0)", coeff_c(2, 0))
show("1/sqrt(2pi)", 1/mp.sqrt(2*mp.pi))

# even kernel at a point: c_n(eta) = 0.5*|eta|^(n-1/2) * J_{-1+1/(2n)}(|eta|^n/n)
def c_n(n, eta):
    n = mp.mpf(n); eta = mp.mpf(eta)
    if eta == 0:
        return n * (2*n)**(-1/(2*n)) / mp.gamma(1/(2*n))
    return mp.mpf(1)/2 * abs(eta)**(n - mp.mpf(1)/2) * mp.besselj(-1 + 1/(2*n), abs(eta)**n / n)

show("c_2(0)", c_n(2, 0))
show("c_2(1)", c_n(2, 1))
show("c_3(2)", c_n(3, 2))

# odd kernel for n=2 via the Struve closed form (imag part of phi_2)
def s_2(eta):
    eta = mp.mpf(eta)
    z = eta**2 / 2
    g54 = mp.gamma(mp.mpf(5)/4)
    return eta/(4*mp.sqrt(mp.pi)*g54) * (2 + mp.sqrt(2*mp.pi*abs(eta))*g54*(mp.besselj(mp.mpf(3)/4, z) - mp.struveh(mp.mpf(3)/4, z)))

show("s_2(1)", s_2(1))
show("s_2(3)", s_2(3))
show("s_1(pi/2)", -1/mp.sqrt(2*mp.pi))

# atom image for n=2, j=0, k=0 at omega=1: integral of c_2 over [0,1], and closed form
q = mp.quad(lambda t: c_n(2, t), [0, 1])
show("int_0^1 c_2", q)
show("E2(1) closed", mp.mpf(1)/2 * mp.besselj(mp.mpf(1)/4, mp.mpf(1)/2))

# inner products
show("<g1,g1> = sqrt(pi)", mp.sqrt(mp.pi))
show("<g1, D2 g1>", mp.sqrt(2) * mp.sqrt(mp.pi / (mp.mpf(5)/8)))

# STFT golden: V(0,0) with normalized g1 window, h = g1, n=1
show("stft V(0,0)", (2*mp.pi)**(-mp.mpf(1)/2) * mp.pi**(mp.mpf(1)/4))

# transform of unit odd atom (n=1, j=0, k=0) at omega=2: -i sin(2)/(2 sqrt(2 pi))
show("odd atom img Im", -mp.sin(2)/(2*mp.sqrt(2*mp.pi)))

# eigenfunction spot value: n=2, m=2 at x=0.7 via direct differentiation in alpha
def eig(n, m, x):
    n = mp.mpf(n); x = mp.mpf(x)
    f = lambda a: a**(1/(4*n)) * mp.exp(-a * x**(2*n)/(2*n))
    # (alpha d/dalpha)^m at alpha=1: expand via repeated derivative
    g = f
    for _ in range(m):
        g_prev = g
        g = lambda a, gp=g_prev: a * mp.diff(gp, a)
    return g(mp.mpf(1))

show("eig n=2 m=2 x=0.7", eig(2, 2, mp.mpf(7)/10))
show("eig n=1 m=1 x=1", eig(1, 1, 1))
show("eig n=1 m=0 x=0", eig(1, 0, 0))

# Watson targets (1/(2 mu)) (alpha/beta)^mu
for mu, al, be in [(mp.mpf(1)/2, 1, 1), (mp.mpf(1)/4, 1, 2), (mp.mpf(1)/6, mp.mpf(1)/2, 3)]:
    show(f"watson mu={mu} a={al} b={be}", 1/(2*mu) * (mp.mpf(al)/be)**mu)

# struve J-H asymptotic cross-check values for the large-argument s_2 path
for z in [15, 25, 60, 500]:
    jh = mp.besselj(mp.mpf(3)/4, z) - mp.struveh(mp.mpf(3)/4, z)
    show(f"(J-H)(3/4, {z})", jh)
