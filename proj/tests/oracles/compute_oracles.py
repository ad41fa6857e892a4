"""Independent high-precision reference values frozen into the C++ tests.

Run with mpmath installed; prints the constants pasted into tests/*.cpp.
"""
import mpmath as mp

mp.mp.dps = 40


def show(name, v):
    v = mp.mpc(v)
    print(f"{name}: {mp.nstr(v.real, 20)} {mp.nstr(v.imag, 20)}")


# log Gamma(2+3i)
show("loggamma(2+3i)", mp.loggamma(mp.mpc(2, 3)))
# W_{0,1,1}(1) = J_0(1)
show("J0(1)", mp.besselj(0, 1))
# W_{0.3+0.2i,1.5,-0.7}(1.3) from the defining series
p, b, c, z = mp.mpc(0.3, 0.2), mp.mpf(1.5), mp.mpf(-0.7), mp.mpf(1.3)
kap = p + (b + 1) / 2
show("W(0.3+0.2i,1.5,-0.7; 1.3)",
     mp.nsum(lambda k: (-c) ** k / (mp.gamma(kap + k) * mp.factorial(k)) * (z / 2) ** (2 * k + p), [0, mp.inf]))
# Riemann-Liouville integral of J_0 on (0,1): left image at alpha=...=0, gamma=1, rho=1
show("int_0^1 J0", mp.quad(lambda t: mp.besselj(0, t), [0, 1]))
# Right operator, (alpha,alpha',beta,beta',gamma)=(2,2,0,1,1), f(t)=t^{-2} J0(1/t), x=1
show("right J0 image",
     mp.quad(lambda t: t ** -2 * mp.hyp2f1(2, 1, 1, 1 - t) * t ** -2 * mp.besselj(0, 1 / t), [1, 2, 10, mp.inf]))
# Left MSM image with the general F3 kernel on an integrand supported in
# (0.6, 1), which keeps 1 - 1/t inside the unit disk; x = 1.
al, alp, be, bep, ga = mp.mpf(0.4), mp.mpf(0.3), mp.mpf(0.2), mp.mpf(0.6), mp.mpf(1.5)


def f3(a, ap, b_, bp, g, X, Y):
    # x-series with each y-series summed as a Gauss function
    total, m, term = mp.mpf(0), 0, mp.mpf(1)
    while True:
        piece = term * mp.hyp2f1(ap, bp, g + m, Y)
        total += piece
        if m > 5 and abs(piece) < mp.mpf(10) ** (-mp.mp.dps):
            return total
        term *= (a + m) * (b_ + m) / ((g + m) * (m + 1)) * X
        m += 1


show("appell F3(0.4,0.3,0.2,0.6;1.5;0.3,-0.4)", f3(al, alp, be, bep, ga, mp.mpf(0.3), mp.mpf(-0.4)))
# t = 1 - s^2 removes the (1-t)^{1/2} endpoint behaviour
mp.mp.dps = 20
show("left F3 compact",
     mp.quad(lambda s: 2 * s * s * (1 - s * s) ** (-alp)
             * f3(al, alp, be, bep, ga, s * s, 1 - 1 / (1 - s * s)) * (mp.mpf(0.4) - s * s) ** 2,
             [0, mp.sqrt(mp.mpf(0.4))]) / mp.gamma(ga))
