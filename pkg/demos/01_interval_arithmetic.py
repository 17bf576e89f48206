"""A tour of the outward-rounded interval kernel.

Every quantity the verifier touches is an Interval: a pair of floats
guaranteed to bracket the exact real value.  This script shows the basic
contract on a few operations.
"""

import math

from khintchine.interval import PI, SQRT2, Interval, pow_real

print("== enclosures survive arithmetic ==")
third = Interval(1, 1) / Interval(3, 3)
print(f"1/3 lives in {third}  (width {third.width:.3g})")

x = Interval(0.1, 0.1)
acc = Interval(0.0, 0.0)
for _ in range(10):
    acc = acc + x
print(f"0.1 added ten times: {acc}  -- contains 1: {acc.contains(1.0)}")
print("   (plain floats give", repr(sum([0.1] * 10)), "with no certificate)")

print()
print("== transcendental functions stay honest ==")
print(f"pi is enclosed by        {PI}")
print(f"cos([0, 4]) = {Interval(0, 4).cos()}   (hits the minimum at pi)")
print(f"sin([1.4, 1.8]) = {Interval(1.4, 1.8).sin()}   (top clamped at the true max 1)")
big = Interval(1000.0, 1000.0)
print(f"cos(1000) in {big.cos()}  vs math.cos: {math.cos(1000.0):.17f}")

print()
print("== real powers through exp/ln ==")
print(f"[4,4]^0.5      = {pow_real(Interval(4, 4), Interval(0.5, 0.5))}")
print(f"[0,1]^2        = {pow_real(Interval(0, 1), Interval(2, 2))}")
print(f"0.5^sqrt(2)    = {pow_real(Interval(0.5, 0.5), SQRT2)}")

print()
print("== the point of it all ==")
print("an inequality check is just: evaluate the margin as an interval and")
print("look at the sign of its lower endpoint.  For instance, the value")
m = PI ** 2 - Interval(9.8696, 9.8696)
print(f"pi^2 - 9.8696 = {m}: certainly positive" if m.lo > 0 else f"{m}")
