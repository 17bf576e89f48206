"""Non-interval brute-force oracles: exact Rademacher moments and friends.

Everything here is floating-point (not enclosure) arithmetic; it exists to
cross-check the rigorous machinery from a completely different direction:
exhaustive sign enumeration, binomial weights, and seeded Monte Carlo.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .interval import Interval
from .specfun import b_constant

ENUM_LIMIT = 26  # 2^(n-1) patterns with the sign symmetry; keeps runs fast


@dataclass(frozen=True)
class CoefficientVector:
    a: tuple[float, ...]

    def __post_init__(self):
        if len(self.a) < 1:
            raise ValueError("need at least one coefficient")

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def norm2(self) -> float:
        return math.sqrt(math.fsum(x * x for x in self.a))


def _half_pattern_sums(a: tuple[float, ...]) -> np.ndarray:
    """Values of sum a_k e_k over all sign patterns with e_1 = +1 fixed."""
    n = len(a)
    rest = np.array([0.0])
    for x in a[1:]:
        rest = np.concatenate([rest + x, rest - x])
    return rest + a[0]


def exact_moment(a: CoefficientVector, p: float) -> float:
    """E|sum a_k e_k|^p by exhaustive enumeration (n <= 26).

    Uses the e -> -e symmetry: only the 2^(n-1) patterns with the first sign
    positive are enumerated.  Deterministic: fixed enumeration order, fsum
    reduction over fixed-size chunks.
    """
    if p <= 0:
        raise ValueError("p must be positive")
    if a.n > ENUM_LIMIT:
        raise ValueError(f"enumeration capped at n = {ENUM_LIMIT}")
    if a.n <= 16:
        sums = _half_pattern_sums(a.a)
        return float((np.abs(sums) ** p).mean())
    # chunked meet-in-the-middle for larger n
    k = a.n // 2
    left = _half_pattern_sums(a.a[:k])  # first sign fixed positive
    right = np.array([0.0])
    for x in a.a[k:]:
        right = np.concatenate([right + x, right - x])
    total = 0.0
    count = 0
    for chunk_start in range(0, len(right), 1 << 14):
        chunk = right[chunk_start : chunk_start + (1 << 14)]
        block = np.abs(left[:, None] + chunk[None, :]) ** p
        total += float(block.sum())
        count += block.size
    return total / count


def khintchine_check(a: CoefficientVector, p: float) -> tuple[float, float, bool]:
    """(moment ratio, B_p midpoint, ratio within [1, B_p])."""
    if not 2.0 <= p <= 3.0:
        raise ValueError("khintchine_check covers p in [2, 3]")
    norm = a.norm2
    if norm == 0.0:
        raise ValueError("zero coefficient vector")
    ratio = exact_moment(a, p) ** (1.0 / p) / norm
    _, B = b_constant(Interval(p, p))
    bound = B.mid
    ok = (ratio <= bound + 1e-12) and (ratio >= 1.0 - 1e-12)
    return ratio, bound, ok


def steckin_convergence(p: float, n_list) -> list[tuple[int, float, float]]:
    """E|n^{-1/2} sum_{k<=n} e_k|^p per n, with the gaussian-moment target.

    Binomial weights make this exact for any n up to 10^4: the sum takes the
    value (2k - n)/sqrt(n) with probability C(n, k) 2^-n.
    """
    target = 2.0 ** (p / 2.0) * math.gamma((p + 1.0) / 2.0) / math.sqrt(math.pi)
    out = []
    for n in n_list:
        if n > 10_000:
            raise ValueError("binomial mode capped at n = 10^4")
        out.append((n, _binomial_moment(n, p), target))
    return out


def _binomial_moment(n: int, p: float) -> float:
    if n <= 64:
        scale = 2**n
        return math.fsum(
            math.comb(n, k) * abs((2 * k - n) / math.sqrt(n)) ** p / scale
            for k in range(n + 1)
        )
    # lgamma-based weights for large n (relative error ~1e-13)
    ks = np.arange(n + 1, dtype=np.float64)
    logw = (
        math.lgamma(n + 1)
        - np.vectorize(math.lgamma)(ks + 1)
        - np.vectorize(math.lgamma)(n - ks + 1)
        - n * math.log(2.0)
    )
    vals = np.abs((2.0 * ks - n) / math.sqrt(n)) ** p
    return float(np.sum(np.exp(logw) * vals))


def monte_carlo_moment(
    a: CoefficientVector, p: float, trials: int, seed: int
) -> tuple[float, float]:
    """Seeded sample mean of |sum a_k e_k|^p with its standard error."""
    if trials < 1000:
        raise ValueError("need at least 10^3 trials")
    rng = np.random.default_rng(seed)
    coeffs = np.array(a.a)
    total = 0.0
    total_sq = 0.0
    done = 0
    while done < trials:
        m = min(trials - done, 1 << 16)
        signs = rng.integers(0, 2, size=(m, a.n)) * 2 - 1
        vals = np.abs(signs @ coeffs) ** p
        total += float(vals.sum())
        total_sq += float((vals * vals).sum())
        done += m
    mean = total / trials
    var = max(total_sq / trials - mean * mean, 0.0)
    return mean, math.sqrt(var / trials)


def random_unit_vectors(count: int, n_max: int, seed: int) -> list[CoefficientVector]:
    """Seeded uniform-on-sphere vectors with dimensions cycling 2..n_max."""
    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        n = 2 + (i % (n_max - 1))
        v = rng.standard_normal(n)
        while float(np.linalg.norm(v)) < 1e-9:
            v = rng.standard_normal(n)
        v = v / np.linalg.norm(v)
        out.append(CoefficientVector(tuple(float(x) for x in v)))
    return out
