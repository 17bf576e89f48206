"""Adaptive interval quadrature: integrals with certificates.

Cells carry the crude enclosure f([u,v]) * (v-u); bisection is driven by a
priority queue on enclosure width, so the budget flows to where the integrand
is hardest.  Stopping early never invalidates the answer, it only widens it.
"""

import math

from khintchine.interval import Interval, SQRT2, pow_real
from khintchine.quad import QuadConfig, integrate, tail_bound_mu_p

print("== warm-up: enclosing int_0^pi sin t dt = 2 ==")
for width in (1e-2, 1e-4, 3e-5):
    r = integrate(lambda t: t.sin(), 0.0, math.pi, QuadConfig(target_width=width))
    print(f"target {width:7.0e}: {r.value}  ({r.cells} cells, {r.status})")

print()
print("== an oscillatory proof integrand: int_{pi/2}^inf cos^2 t / t^4 dt ==")
f = lambda t: (t.cos() ** 2) * pow_real(t, Interval(-4.0, -4.0))
fin = integrate(f, math.pi / 2, 50.0, QuadConfig(target_width=2e-5))
tail = tail_bound_mu_p("cos_power", SQRT2, Interval(3.0, 3.0), 50.0)
total = fin.value + tail
print(f"finite part to 50: {fin.value}  ({fin.cells} cells)")
print(f"tail bound beyond: {tail}")
print(f"total enclosure:   {total}")
print("reference value:   0.02477944066413...")
print()
print("1.75 times this integral is 0.0433640..., which certifiably refutes")
print("the printed tail constant 0.043369 and certifies the repaired 0.0433.")

print()
print("== gaussian tails are nearly free ==")
g = tail_bound_mu_p("gauss", SQRT2, Interval(2.0, 2.0), 5.0)
print(f"int_5^inf e^(-sqrt2 t^2/2)/t^3 dt <= {g.hi:.3g}")
