"""Certified evaluations of the special functions used by the verifier.

Series with hard-coded exact rational coefficients, explicit tail bounds, and
interval evaluation throughout.  Tail rule for the exponential-type series
(ei/si/ci): the term-ratio magnitude is monotonically decreasing in the index,
so once it is provably <= 1/2 the remainder is dominated by a geometric series
and bounded by twice the first omitted term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .interval import (
    EULER_GAMMA,
    PI,
    SQRT2,
    DomainError,
    Interval,
    pow_real,
)
from .polytools import Poly, p_eval_iv


@dataclass(frozen=True)
class SeriesPolicy:
    """Budget and safety margin for all series evaluations."""

    max_terms: int = 200
    tail_safety: float = 1.0

    def __post_init__(self):
        if self.max_terms < 8:
            raise ValueError("max_terms must be at least 8")
        if self.tail_safety < 1.0:
            raise ValueError("tail_safety must be >= 1")


DEFAULT_POLICY = SeriesPolicy()

# |B_2|, |B_4|, ..., |B_40| as exact rationals; the series for -ln cos and cot
# are never extended past these.
BERNOULLI_ABS: dict[int, Fraction] = {
    2: Fraction(1, 6),
    4: Fraction(1, 30),
    6: Fraction(1, 42),
    8: Fraction(1, 30),
    10: Fraction(5, 66),
    12: Fraction(691, 2730),
    14: Fraction(7, 6),
    16: Fraction(3617, 510),
    18: Fraction(43867, 798),
    20: Fraction(174611, 330),
    22: Fraction(854513, 138),
    24: Fraction(236364091, 2730),
    26: Fraction(8553103, 6),
    28: Fraction(23749461029, 870),
    30: Fraction(8615841276005, 14322),
    32: Fraction(7709321041217, 510),
    34: Fraction(2577687858367, 6),
    36: Fraction(26315271553053477373, 1919190),
    38: Fraction(2929993913841559, 6),
    40: Fraction(261082718496449122051, 13530),
}

MAX_LNCOS_TERMS = len(BERNOULLI_ABS)

# -ln cos t = sum_{k>=1} c_k t^{2k};  c_k = 2^{2k-1} (2^{2k}-1) |B_{2k}| / (k (2k)!)
LN_COS_COEFFS: list[Fraction] = [
    Fraction(2 ** (2 * k - 1) * (2 ** (2 * k) - 1), k * math.factorial(2 * k))
    * BERNOULLI_ABS[2 * k]
    for k in range(1, MAX_LNCOS_TERMS + 1)
]

# cot t = 1/t - t/3 - sum_{k>=2} d_k t^{2k-1};  d_k = 2^{2k} |B_{2k}| / (2k)!
COT_COEFFS: dict[int, Fraction] = {
    k: Fraction(2 ** (2 * k), math.factorial(2 * k)) * BERNOULLI_ABS[2 * k]
    for k in range(2, MAX_LNCOS_TERMS + 1)
}


def neg_ln_cos_lower(t: Interval, K: int) -> Interval:
    """Enclosure of the K-term partial sum of the -ln cos series.

    All coefficients are positive, so this is a certified lower bound of
    -ln cos t on [0, pi/2).
    """
    if not (0.0 <= t.lo and t.hi <= 1.55):
        raise DomainError(f"neg_ln_cos_lower domain is [0, 1.55], got {t}")
    if K < 1:
        raise ValueError("K must be >= 1")
    K = min(K, MAX_LNCOS_TERMS)
    u = t * t
    acc = Interval.from_fraction(LN_COS_COEFFS[K - 1])
    for k in range(K - 2, -1, -1):
        acc = acc * u + Interval.from_fraction(LN_COS_COEFFS[k])
    return acc * u


def neg_ln_cos_excess(t: Interval, K: int = 14) -> Interval:
    """Two-sided enclosure of -ln cos t - t^2/2 on [0, 1.2].

    Partial sum of c_k t^{2k} for k = 2..K plus a geometric tail: since
    c_k = (2^{2k}-1) zeta(2k) / (k pi^{2k}), every dropped coefficient obeys
    c_k <= zeta(4) (2/pi)^{2k} / k, so the tail is below
    zeta(4)/(K+1) * q^{K+1}/(1-q) with q = (2t/pi)^2 < 1.

    Unlike cos/ln composition this form has no cancellation, which matters for
    integrands built from exp(-s t^2/2) - |cos t|^s at small t.
    """
    if not (0.0 <= t.lo and t.hi <= 1.2):
        raise DomainError(f"neg_ln_cos_excess domain is [0, 1.2], got {t}")
    K = max(2, min(K, MAX_LNCOS_TERMS))
    u = t * t
    acc = Interval.from_fraction(LN_COS_COEFFS[K - 1])
    for k in range(K - 2, 0, -1):
        acc = acc * u + Interval.from_fraction(LN_COS_COEFFS[k])
    acc = acc * (u * u)
    q = (t * 2.0 / PI) ** 2
    zeta4 = Interval.from_fraction(Fraction(11, 10))  # >= zeta(4) = 1.0823...
    tail_hi = (zeta4 / (K + 1.0) * pow_real(q, Interval(K + 1, K + 1)) / (1.0 - q)).hi
    return acc + Interval(0.0, tail_hi)


def cos_upper_bounds(t: Interval) -> tuple[Interval, Interval, Interval]:
    """The chain of cosine majorants exp(-t^2/2 - ... ) on [0, pi/2)."""
    if t.lo < 0.0:
        raise DomainError(f"cos_upper_bounds needs t >= 0, got {t}")
    u = t * t
    s1 = u * Fraction(1, 2)
    s2 = s1 + (u**2) * Fraction(1, 12)
    s3 = s2 + (u**3) * Fraction(1, 45)
    return (-s1).exp(), (-s2).exp(), (-s3).exp()


def _series_with_geometric_tail(
    first_term: Interval,
    ratio_fn,
    ratio_sup_fn,
    policy: SeriesPolicy,
) -> Interval:
    """Sum term_1 + term_2 + ... where term_{k+1} = term_k * ratio_fn(k).

    ratio_sup_fn(k) must be a monotonically nonincreasing upper bound of the
    term-ratio magnitude; once it is <= 1/2 the remainder past any later term
    is enclosed by [-2|next term|, 2|next term|] (times the safety factor).
    Terms keep being added until that band stops mattering at double
    precision, then the band is attached.
    """
    term = first_term
    acc = term
    tail = None
    for k in range(1, policy.max_terms):
        nxt = term * ratio_fn(k)
        if ratio_sup_fn(k) <= 0.5:
            bound = 2.0 * nxt.mag * policy.tail_safety
            if bound <= 1e-16 * (acc.mag + 1e-300) or bound < 5e-324:
                tail = Interval(-bound, bound)
                break
        acc = acc + nxt
        term = nxt
    else:
        k_last = policy.max_terms - 1
        if ratio_sup_fn(k_last) > 0.5:
            raise DomainError("series did not reach the geometric-tail regime")
        nxt = term * ratio_fn(k_last)
        bound = 2.0 * nxt.mag * policy.tail_safety
        tail = Interval(-bound, bound)
    return acc + tail


def ei_neg(x: Interval, policy: SeriesPolicy = DEFAULT_POLICY) -> Interval:
    """Enclosure of Ei(x) for x < 0 via C + ln(-x) + sum x^k/(k k!)."""
    if not (-30.0 <= x.lo and x.hi <= -1e-6):
        raise DomainError(f"ei_neg domain is [-30, -1e-6], got {x}")
    mag = x.mag
    series = _series_with_geometric_tail(
        x,
        lambda k: x * Fraction(k, (k + 1) ** 2),
        lambda k: mag * k / (k + 1) ** 2,
        policy,
    )
    return EULER_GAMMA + (-x).ln() + series


def si(x: Interval, policy: SeriesPolicy = DEFAULT_POLICY) -> Interval:
    """Enclosure of si(x) = Si(x) - pi/2 for x in (0, 50]."""
    if not (0.0 < x.lo and x.hi <= 50.0):
        raise DomainError(f"si domain is (0, 50], got {x}")
    x2 = x * x
    m2 = x2.hi
    series = _series_with_geometric_tail(
        -x,  # k=1 term of sum (-1)^k x^{2k-1}/((2k-1)(2k-1)!)
        lambda k: -x2 * Fraction(2 * k - 1, (2 * k + 1) ** 2 * (2 * k)),
        lambda k: m2 * (2 * k - 1) / ((2 * k + 1) ** 2 * (2 * k)),
        policy,
    )
    return -(PI * 0.5) - series


def ci(x: Interval, policy: SeriesPolicy = DEFAULT_POLICY) -> Interval:
    """Enclosure of ci(x) = C + ln x + sum (-1)^k x^{2k}/(2k (2k)!), x in (0, 50]."""
    if not (0.0 < x.lo and x.hi <= 50.0):
        raise DomainError(f"ci domain is (0, 50], got {x}")
    x2 = x * x
    m2 = x2.hi
    series = _series_with_geometric_tail(
        -x2 * Fraction(1, 4),
        lambda k: -x2 * Fraction(k, (k + 1) * (2 * k + 2) * (2 * k + 1)),
        lambda k: m2 * k / ((k + 1) * (2 * k + 2) * (2 * k + 1)),
        policy,
    )
    return EULER_GAMMA + x.ln() + series


def zeta_sum(q: Interval, terms: int = 10000) -> Interval:
    """Enclosure of zeta(q) = sum k^-q for q in [2, 4.5].

    Partial sum plus the integral bracket
    [ int_{K+1}^inf x^-q dx,  int_K^inf x^-q dx ].
    """
    if not (2.0 <= q.lo and q.hi <= 4.5):
        raise DomainError(f"zeta_sum domain is [2, 4.5], got {q}")
    K = int(terms)
    if K < 10:
        raise ValueError("terms must be >= 10")
    neg_q = -q
    acc = Interval(1.0, 1.0)
    for k in range(2, K + 1):
        acc = acc + pow_real(Interval(k, k), neg_q)
    qm1 = q - 1.0
    lo_tail = pow_real(Interval(K + 1, K + 1), 1.0 - q) / qm1
    hi_tail = pow_real(Interval(K, K), 1.0 - q) / qm1
    return acc + Interval(lo_tail.lo, hi_tail.hi)


# -- gamma and the Khintchine constant --------------------------------------

# Lanczos (g=5, n=6) coefficients; documented empirical relative error below
# 2e-10 for positive arguments, widened 10x here.
_LANCZOS_C0 = Interval.literal("1.000000000190015")
_LANCZOS_COEFFS = [
    Interval.literal("76.18009172947146"),
    Interval.literal("-86.50532032941677"),
    Interval.literal("24.01409824083091"),
    Interval.literal("-1.231739572450155"),
    Interval.literal("0.001208650973866179"),
    Interval.literal("-0.000005395239384953"),
]
_LANCZOS_ERR = Interval(1.0 - 2e-9, 1.0 + 2e-9)


def gamma_iv(x: Interval) -> Interval:
    """Certified Gamma(x) on [1, 3] (needed range is [1.5, 2])."""
    if not (1.0 <= x.lo and x.hi <= 3.0):
        raise DomainError(f"gamma_iv domain is [1, 3], got {x}")
    acc = _LANCZOS_C0
    for j, c in enumerate(_LANCZOS_COEFFS, start=1):
        acc = acc + c / (x + float(j))
    base = x + 5.5
    val = (
        (PI * 2.0).sqrt()
        * pow_real(base, x + 0.5)
        * (-base).exp()
        * acc
        / x
    )
    return val * _LANCZOS_ERR


def b_constant(p: Interval) -> tuple[Interval, Interval]:
    """Optimal Khintchine constants (A_p, B_p) on 2 <= p <= 3.

    A_p = 1 there; B_p = sqrt(2) (Gamma((p+1)/2)/sqrt(pi))^(1/p).
    """
    if not (2.0 <= p.lo and p.hi <= 3.0):
        raise DomainError(f"b_constant domain is [2, 3], got {p}")
    g = gamma_iv((p + 1.0) * 0.5)
    ratio = g / PI.sqrt()
    B = SQRT2 * pow_real(ratio, Interval(1.0, 1.0) / p)
    return Interval(1.0, 1.0), B


# -- Taylor enclosures for the near-zero reductions --------------------------


@dataclass(frozen=True)
class TaylorEnclosure:
    """Polynomial plus a rigorous remainder band: f(t) in poly(t) +- rem."""

    poly: Poly
    rem_coeff: Fraction
    rem_power: int
    t_limit: float

    def eval(self, t: Interval) -> Interval:
        if t.mag > self.t_limit:
            raise DomainError(f"Taylor enclosure valid to |t|<={self.t_limit}")
        band = Interval.from_fraction(self.rem_coeff) * (t.abs() ** self.rem_power)
        return p_eval_iv(self.poly, t) + Interval(-band.hi, band.hi)


def cos_taylor(K: int) -> TaylorEnclosure:
    """cos t with 2K-degree partial sum; remainder twice the next term."""
    poly = [Fraction(0)] * (2 * K + 1)
    for j in range(K + 1):
        poly[2 * j] = Fraction((-1) ** j, math.factorial(2 * j))
    t_limit = math.sqrt((2 * K + 3) * (2 * K + 4) / 2.0)
    return TaylorEnclosure(
        poly, Fraction(2, math.factorial(2 * K + 2)), 2 * K + 2, t_limit
    )


def sin_taylor(K: int) -> TaylorEnclosure:
    """sin t with (2K+1)-degree partial sum; remainder twice the next term."""
    poly = [Fraction(0)] * (2 * K + 2)
    for j in range(K + 1):
        poly[2 * j + 1] = Fraction((-1) ** j, math.factorial(2 * j + 1))
    t_limit = math.sqrt((2 * K + 4) * (2 * K + 5) / 2.0)
    return TaylorEnclosure(
        poly, Fraction(2, math.factorial(2 * K + 3)), 2 * K + 3, t_limit
    )


def exp_taylor(K: int) -> TaylorEnclosure:
    """exp t with K-degree partial sum, |t| <= (K+2)/2."""
    poly = [Fraction(1, math.factorial(k)) for k in range(K + 1)]
    return TaylorEnclosure(
        poly, Fraction(2, math.factorial(K + 1)), K + 1, (K + 2) / 2.0
    )
