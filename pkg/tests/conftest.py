"""Shared cached constructions so expensive instances are built once."""

from __future__ import annotations

import functools
import math

from ecseq.curves import CurveSearchSpec, search_cyclic_curve
from ecseq.family import gen_family
from ecseq.gf2 import make_ext
from ecseq.places import find_place
from ecseq.rrspace import rr_basis


@functools.lru_cache(maxsize=None)
def cached_curve(n: int, t: int):
    """(curve, generator) for the deterministic sweep at (n, t)."""
    return search_cyclic_curve(CurveSearchSpec(n, t))


@functools.lru_cache(maxsize=None)
def cached_instance(n: int, t: int, d: int):
    """(curve, P, ext, place, space) — the full pipeline minus bit output."""
    curve, P = cached_curve(n, t)
    if math.gcd(d, curve.N) != 1:
        raise ValueError(f"gcd(d={d}, N={curve.N}) != 1")
    ext = make_ext(curve.ctx, d)
    place = find_place(curve, ext, d)
    space = rr_basis(curve, ext, place)
    return curve, P, ext, place, space


@functools.lru_cache(maxsize=None)
def cached_family(n: int, t: int, d: int):
    curve, P, ext, place, space = cached_instance(n, t, d)
    return gen_family(curve, P, space, ext)
