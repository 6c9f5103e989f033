"""Riemann-Roch space L(Q) = F_q (+) V in common-denominator form.

Every function is represented as N(x, y) / D(x) with D the place's
x-minimal polynomial and N a combination of the pole-order-bounded
monomials x^i y^j (j <= 1, 2i + 3j <= 2d).  D's divisor is
orbit + neg(orbit) - 2d*O, so requiring N to vanish at the negated
representative (the conjugate conditions follow for free) carves out
exactly L(Q) as a d-dimensional GF(q)-nullspace.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curves import Curve, Point
from .gf2 import ExtFieldContext, FieldContext, elem_to_hex
from .places import PlaceD


def monomials_L2dO(d: int) -> list[tuple[int, int]]:
    """Exponent pairs (i, j) with j <= 1 and 2i + 3j <= 2d, by pole order."""
    if d < 2:
        raise ValueError("degree must be at least 2")
    mons = [(i, j) for j in (0, 1) for i in range(d + 1) if 2 * i + 3 * j <= 2 * d]
    mons.sort(key=lambda ij: (2 * ij[0] + 3 * ij[1], ij[1]))
    assert len(mons) == 2 * d
    return mons


@dataclass(frozen=True)
class CurveFunction:
    """Numerator coefficients (aligned with monomials_L2dO(d)) over D(x)."""

    d: int
    coeffs: tuple[int, ...]
    dpoly: tuple[int, ...]

    def serialize(self) -> dict:
        mons = monomials_L2dO(self.d)
        return {
            "monomials": [[i, j, elem_to_hex(c)] for (i, j), c in zip(mons, self.coeffs) if c],
            "dpoly": [elem_to_hex(c) for c in self.dpoly],
        }


@dataclass(frozen=True)
class RRSpace:
    place: PlaceD
    full_basis: tuple[CurveFunction, ...]  # full_basis[0] is the constant 1
    V_basis: tuple[CurveFunction, ...]


class IrregularPlaceError(RuntimeError):
    """Nullspace dimension != d: the place is unusable for the construction."""


# -- GF(q) row reduction ------------------------------------------------

def _reduce_row(ctx: FieldContext, row: list[int], echelon: list[tuple[int, list[int]]]) -> list[int]:
    for lead, base in echelon:
        if row[lead]:
            f = row[lead]
            row = [r ^ ctx.mul(f, b) for r, b in zip(row, base)]
    return row


def _normalize(ctx: FieldContext, row: list[int]) -> tuple[int, list[int]]:
    lead = next(i for i, v in enumerate(row) if v)
    inv = ctx.inv(row[lead])
    return lead, [ctx.mul(inv, v) for v in row]


def gfq_nullspace(ctx: FieldContext, rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Reduced nullspace basis, free columns in increasing order."""
    echelon: list[tuple[int, list[int]]] = []
    for row in rows:
        row = _reduce_row(ctx, list(row), echelon)
        if any(row):
            echelon.append(_normalize(ctx, row))
    # back-substitute to reduced row echelon form
    for k in range(len(echelon) - 1, -1, -1):
        lead, base = echelon[k]
        for j in range(k):
            jl, jb = echelon[j]
            if jb[lead]:
                f = jb[lead]
                echelon[j] = (jl, [a ^ ctx.mul(f, b) for a, b in zip(jb, base)])
    echelon.sort(key=lambda e: e[0])
    pivots = [lead for lead, _ in echelon]
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        vec = [0] * ncols
        vec[free] = 1
        for lead, base in echelon:
            vec[lead] = base[free]  # char 2: negation is identity
        basis.append(vec)
    return basis


# -- basis construction ---------------------------------------------------

def _dpoly_vector(dpoly: tuple[int, ...], mons: list[tuple[int, int]]) -> list[int]:
    vec = [0] * len(mons)
    for i, c in enumerate(dpoly):
        vec[mons.index((i, 0))] = c
    return vec


def rr_basis(curve: Curve, ext: ExtFieldContext, place: PlaceD) -> RRSpace:
    """Basis of L(Q) split as the constant 1 plus the complement V."""
    ctx = curve.ctx
    d = place.d
    mons = monomials_L2dO(d)
    negR = curve.neg(place.representative, ext)
    vals = [ext.mul(ext.pow(negR.x, i), ext.pow(negR.y, j)) for i, j in mons]
    coords = [ext.coords(v) for v in vals]
    rows = [[coords[col][k] for col in range(len(mons))] for k in range(d)]
    nullspace = gfq_nullspace(ctx, rows, len(mons))
    if len(nullspace) != d:
        raise IrregularPlaceError(
            f"nullspace dimension {len(nullspace)} != d={d}; irregular place")
    dvec = _dpoly_vector(place.dpoly, mons)
    for row in rows:
        acc = 0
        for r, v in zip(row, dvec):
            acc ^= ctx.mul(r, v)
        assert acc == 0, "D(x) itself must represent the constant 1 in L(Q)"
    # row-reduce the nullspace against D's vector so V complements the constants
    echelon = [_normalize(ctx, list(dvec))]
    v_rows = []
    for vec in nullspace:
        red = _reduce_row(ctx, list(vec), echelon)
        if any(red):
            entry = _normalize(ctx, red)
            echelon.append(entry)
            v_rows.append(entry[1])
    assert len(v_rows) == d - 1
    mk = lambda vec: CurveFunction(d=d, coeffs=tuple(vec), dpoly=place.dpoly)
    return RRSpace(place=place,
                   full_basis=(mk(dvec),) + tuple(mk(v) for v in v_rows),
                   V_basis=tuple(mk(v) for v in v_rows))


# -- evaluation -----------------------------------------------------------

def eval_function(curve: Curve, z: CurveFunction, P: Point) -> int:
    """z(P) for a rational point P (including the infinity place)."""
    ctx = curve.ctx
    mons = monomials_L2dO(z.d)
    if P.is_infinity:
        # only x^d can match D's pole order 2d at O; D is monic
        return z.coeffs[mons.index((z.d, 0))]
    num = 0
    for (i, j), c in zip(mons, z.coeffs):
        if c:
            num ^= ctx.mul(c, ctx.mul(ctx.pow(P.x, i), ctx.pow(P.y, j)))
    den = 0
    for c in reversed(z.dpoly):
        den = ctx.mul(den, P.x) ^ c
    assert den != 0, "D(x) has a rational root; place is not regular"
    return ctx.div(num, den)


def check_sum_nonconstant(ctx: FieldContext, z1: CurveFunction, z2: CurveFunction) -> bool:
    """True iff z1 + z2 is not a constant (no F_q multiple of D as numerator)."""
    s = [a ^ b for a, b in zip(z1.coeffs, z2.coeffs)]
    if not any(s):
        return False  # z1 == z2: the sum is the zero constant
    mons = monomials_L2dO(z1.d)
    dvec = _dpoly_vector(z1.dpoly, mons)
    lead = next(i for i, v in enumerate(dvec) if v)
    if s[lead] == 0:
        return True
    f = ctx.div(s[lead], dvec[lead])
    return any(sv != ctx.mul(f, dv) for sv, dv in zip(s, dvec))
