"""Correlation and cyclic linear-complexity analysis of a sequence family.

Sequences are ints with bit j = s_j; correlations are computed word-packed
as N - 2*popcount(a XOR rot(b, u)).  The cyclic linear complexity of s is
N - deg gcd(S(x), x^N + 1) over GF(2), with the connection polynomial
lambda = (x^N + 1) / gcd verified to annihilate every cyclic shift.
"""

from __future__ import annotations

import math
import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .family import SequenceFamily
from .gf2 import ValidationError, poly_divmod, poly_gcd

EXHAUSTIVE_Q_CAP = {2: 256, 3: 64}  # per-degree default budget gates
_OPS_PER_MS = 5000  # conservative xor+popcount throughput for budget estimates


class BoundViolationError(AssertionError):
    """An asserted correlation or linear-complexity bound failed."""


def rotate(v: int, u: int, N: int) -> int:
    """Cyclic right rotation: bit j of the result is bit (j+u) mod N of v."""
    u %= N
    return (v >> u) | ((v & ((1 << u) - 1)) << (N - u))


def autocorrelation(s: int, u: int, N: int) -> int:
    if not 1 <= u <= N - 1:
        raise ValidationError(f"delay {u} outside 1..{N - 1}")
    return N - 2 * (s ^ rotate(s, u, N)).bit_count()


def crosscorrelation(a: int, b: int, u: int, N: int) -> int:
    if not 0 <= u <= N - 1:
        raise ValidationError(f"delay {u} outside 0..{N - 1}")
    return N - 2 * (a ^ rotate(b, u, N)).bit_count()


def corr_bound(q: int, t: int, d: int) -> int:
    """(2d+1) * floor(2*sqrt(q)) + |t|, exactly."""
    return (2 * d + 1) * math.isqrt(4 * q) + abs(t)


@dataclass
class CorrelationReport:
    N: int
    M: int
    bound: int
    max_auto: int
    max_cross: int | None
    cor: int
    histogram: dict[int, int]
    auto_witness: tuple[int, int]          # (i, u)
    cross_witness: tuple[int, int, int] | None  # (i, j, u)
    mode: str                               # "exhaustive" or "sampled"
    samples: int | None = None
    seed: int | None = None

    def as_dict(self) -> dict:
        return {
            "N": self.N, "M": self.M, "bound": self.bound,
            "max_auto": self.max_auto, "max_cross": self.max_cross,
            "cor": self.cor,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "auto_witness": list(self.auto_witness),
            "cross_witness": list(self.cross_witness) if self.cross_witness else None,
            "mode": self.mode, "samples": self.samples, "seed": self.seed,
        }


@dataclass
class LinearComplexityReport:
    N: int
    q: int
    t: int
    d: int
    lc_per_sequence: list[int] = field(default_factory=list)
    lc_min: int = 0
    lc_bound_ceil: int = 0

    def as_dict(self) -> dict:
        return {
            "N": self.N, "q": self.q, "t": self.t, "d": self.d,
            "lc_per_sequence": self.lc_per_sequence,
            "lc_min": self.lc_min, "lc_bound_ceil": self.lc_bound_ceil,
        }


def exhaustive_allowed(family: SequenceFamily, budget_ms: int | None = None) -> bool:
    """Budget gate for exhaustive pair sweeps; ECSEQ_BUDGET_MS overrides."""
    if budget_ms is None:
        env = os.environ.get("ECSEQ_BUDGET_MS")
        budget_ms = int(env) if env else None
    if budget_ms is not None:
        ops = (family.M * (family.M - 1) // 2 + family.M) * family.N
        return ops <= budget_ms * _OPS_PER_MS
    return family.q <= EXHAUSTIVE_Q_CAP.get(family.d, 64)


def _check_value(c: int, N: int, bound: int, where: str) -> None:
    if (c - N) % 2:
        raise AssertionError(f"correlation parity broken at {where}")
    if abs(c) > bound:
        raise BoundViolationError(f"|{c}| > bound {bound} at {where}")


def _pair_block(bits, pairs, N, bound):
    best = (-N - 1, None)
    hist: dict[int, int] = {}
    for i, j in pairs:
        a, b = bits[i], bits[j]
        for u in range(N):
            c = N - 2 * (a ^ rotate(b, u, N)).bit_count()
            _check_value(c, N, bound, f"cross i={i} j={j} u={u}")
            # C_u(s_i, s_j) = C_{N-u}(s_j, s_i): count the mirrored pair too
            hist[c] = hist.get(c, 0) + 2
            if c > best[0]:
                best = (c, (i, j, u))
    return best, hist


def family_correlation(family: SequenceFamily, sampled: int | None = None,
                       seed: int = 0, threads: int = 1,
                       budget_ms: int | None = None) -> CorrelationReport:
    """Max correlation with witnesses; asserts the family bound.

    sampled=None runs the exhaustive sweep over all pairs and delays
    (subject to the budget gate); sampled=k probes k uniform (i, j, u)
    cross triples and still sweeps every autocorrelation.
    """
    N, M, bits = family.N, family.M, family.bits
    bound = corr_bound(family.q, family.t, family.d)
    hist: dict[int, int] = {}
    max_auto, auto_wit = -N - 1, (0, 1)
    for i, s in enumerate(bits):
        for u in range(1, N):
            c = N - 2 * (s ^ rotate(s, u, N)).bit_count()
            _check_value(c, N, bound, f"auto i={i} u={u}")
            hist[c] = hist.get(c, 0) + 1
            if c > max_auto:
                max_auto, auto_wit = c, (i, u)
    max_cross, cross_wit = None, None
    if M > 1 and sampled is None:
        if not exhaustive_allowed(family, budget_ms):
            raise ValidationError(
                f"exhaustive sweep over M={M} rows exceeds the budget; "
                "use sampled mode or raise ECSEQ_BUDGET_MS")
        pairs = [(i, j) for i in range(M) for j in range(i + 1, M)]
        if threads > 1:
            chunks = [pairs[k::threads] for k in range(threads)]
            with ThreadPoolExecutor(max_workers=threads) as pool:
                parts = list(pool.map(
                    lambda ch: _pair_block(bits, ch, N, bound), chunks))
        else:
            parts = [_pair_block(bits, pairs, N, bound)]
        max_cross, cross_wit = -N - 1, None
        for (best, h) in parts:
            if best[0] > max_cross:
                max_cross, cross_wit = best
            for k, v in h.items():
                hist[k] = hist.get(k, 0) + v
        mode, samples = "exhaustive", None
    elif M > 1:
        rng = random.Random(seed)
        max_cross, cross_wit = -N - 1, None
        for _ in range(sampled):
            i = rng.randrange(M)
            j = rng.randrange(M - 1)
            if j >= i:
                j += 1
            u = rng.randrange(N)
            c = N - 2 * (bits[i] ^ rotate(bits[j], u, N)).bit_count()
            _check_value(c, N, bound, f"cross i={i} j={j} u={u}")
            hist[c] = hist.get(c, 0) + 1
            if c > max_cross:
                max_cross, cross_wit = c, (i, j, u)
        mode, samples = "sampled", sampled
    else:
        mode, samples = "exhaustive", None
    cor = max_auto if max_cross is None else max(max_auto, max_cross)
    if cor > bound:
        raise BoundViolationError(f"Cor(S) = {cor} exceeds bound {bound}")
    return CorrelationReport(
        N=N, M=M, bound=bound, max_auto=max_auto, max_cross=max_cross,
        cor=cor, histogram=hist, auto_witness=auto_wit,
        cross_witness=cross_wit, mode=mode, samples=samples,
        seed=seed if mode == "sampled" else None)


# ----------------------------------------------------------------------
# Cyclic linear complexity.

def linear_complexity_cyclic(s: int, N: int) -> int:
    """Smallest ell with a length-ell recurrence killing all cyclic shifts."""
    if s == 0:
        raise ValidationError("zero sequence has no linear complexity")
    xn1 = (1 << N) | 1
    g = poly_gcd(s, xn1)
    lc = N - (g.bit_length() - 1)
    lam, rem = poly_divmod(xn1, g)
    assert rem == 0 and lam & 1 and lam.bit_length() - 1 == lc
    # sum_i lambda_i s_{i+u} = 0 uses the reciprocal of the annihilator,
    # with indices taken mod N (lc = N folds the x^N term onto the constant)
    rec = 0
    for i in range(lc + 1):
        if (lam >> i) & 1:
            rec ^= 1 << (lc - i) % N
    for u in range(N):
        if (rec & rotate(s, u, N)).bit_count() & 1:
            raise AssertionError("connection polynomial fails to annihilate")
    return lc


def lc_bound_check(lc_min: int, q: int, t: int, d: int) -> bool:
    """lc_min >= (q+1+2t-2(d+1)*sqrt(q)) / (2d*sqrt(q)), compared exactly.

    The inequality rearranges to sqrt(q)*(2d*lc + 2(d+1)) >= q+1+2t; both
    sides are compared by squaring since the left side is positive.
    """
    A = q + 1 + 2 * t
    if A <= 0:
        return True
    K = 2 * d * lc_min + 2 * (d + 1)
    return q * K * K >= A * A


def lc_bound_ceil(q: int, t: int, d: int) -> int:
    """Smallest integer linear complexity the bound forces."""
    lc = 0
    while not lc_bound_check(lc, q, t, d):
        lc += 1
    return lc


def family_linear_complexity(family: SequenceFamily) -> LinearComplexityReport:
    """Per-row cyclic linear complexity; asserts the family lower bound.

    All-zero rows (which occur only at degenerate tiny lengths) are
    reported as complexity 0 and still held to the exact bound.
    """
    if not any(family.bits):
        raise ValidationError("zero sequence family has no linear complexity")
    lcs = [linear_complexity_cyclic(s, family.N) if s else 0
           for s in family.bits]
    lc_min = min(lcs)
    if not lc_bound_check(lc_min, family.q, family.t, family.d):
        raise BoundViolationError(
            f"lc_min = {lc_min} below the exact lower bound "
            f"(q={family.q}, t={family.t}, d={family.d})")
    return LinearComplexityReport(
        N=family.N, q=family.q, t=family.t, d=family.d,
        lc_per_sequence=lcs, lc_min=lc_min,
        lc_bound_ceil=lc_bound_ceil(family.q, family.t, family.d))


# ----------------------------------------------------------------------
# Proof-level counting identities.

def counting_identity_check(family: SequenceFamily, samples: int = 10_000,
                            seed: int = 0) -> bool:
    """Per (row, delay): A_u = 2*N_0 - N with N_0 the agreement count,
    |2*N_0 - q - 1| <= (2d+1)*floor(2*sqrt(q)), and |A_u| within the
    family bound.  Exhaustive at N <= 300, sampled above.
    """
    N, q, d = family.N, family.q, family.d
    serre = (2 * d + 1) * math.isqrt(4 * q)
    bound = corr_bound(q, family.t, d)
    if N <= 300:
        probes = ((i, u) for i in range(family.M) for u in range(1, N))
    else:
        rng = random.Random(seed)
        probes = ((rng.randrange(family.M), rng.randrange(1, N))
                  for _ in range(samples))
    for i, u in probes:
        s = family.bits[i]
        n0 = N - (s ^ rotate(s, u, N)).bit_count()
        a_u = autocorrelation(s, u, N)
        if a_u != 2 * n0 - N:
            return False
        if abs(2 * n0 - q - 1) > serre or abs(a_u) > bound:
            return False
    return True
