"""Weierstrass curves over GF(2^n): group law, counting, cyclicity, search.

A curve is the long Weierstrass model y^2 + a1*x*y + a3*y = x^3 + a2*x^2 +
a4*x + a6 with coefficients in the base field.  Points may live over the
base field or over an extension; group-law methods take the field context
the coordinates belong to (curve coefficients are embedded as needed).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .gf2 import (
    ExtFieldContext,
    FieldContext,
    ValidationError,
    elem_to_hex,
    factorize,
    make_field,
)


@dataclass(frozen=True)
class Point:
    """Affine point or the infinity place O (x is None)."""

    x: int | None = None
    y: int | None = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def serialize(self):
        if self.is_infinity:
            return "O"
        return {"x": elem_to_hex(self.x), "y": elem_to_hex(self.y)}


INFINITY = Point()


def _sort_key(P: Point) -> tuple[int, int]:
    return (-1, -1) if P.is_infinity else (P.x, P.y)


class SearchExhaustedError(RuntimeError):
    """No cyclic curve found in the swept model family."""


class Curve:
    """Smooth long-Weierstrass curve over GF(2^n) with cached point count."""

    def __init__(self, ctx: FieldContext, a1: int, a2: int, a3: int, a4: int, a6: int):
        self.ctx = ctx
        self.a1, self.a2, self.a3, self.a4, self.a6 = a1, a2, a3, a4, a6
        if self._discriminant() == 0:
            raise ValidationError("singular curve")
        self._embedded: dict[int, tuple[int, ...]] = {}
        self.N = self._count_points()
        self.t = self.N - ctx.q - 1
        if self.t * self.t > 4 * ctx.q:
            raise AssertionError("Serre bound violated; counting bug")

    def _discriminant(self) -> int:
        m = self.ctx.mul
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        b2 = m(a1, a1)
        b4 = m(a1, a3)
        b6 = m(a3, a3)
        b8 = m(b2, a6) ^ m(a1, m(a3, a4)) ^ m(a2, b6) ^ m(a4, a4)
        # char-2 reduction of -b2^2*b8 - 8*b4^3 - 27*b6^2 + 9*b2*b4*b6
        return m(m(b2, b2), b8) ^ m(b6, b6) ^ m(b2, m(b4, b6))

    # -- coordinate fields ------------------------------------------------

    def coeffs_in(self, fld: FieldContext) -> tuple[int, int, int, int, int]:
        if fld is self.ctx:
            return (self.a1, self.a2, self.a3, self.a4, self.a6)
        key = id(fld)
        if key not in self._embedded:
            assert isinstance(fld, ExtFieldContext) and fld.base is self.ctx
            self._embedded[key] = tuple(
                fld.embed(c) for c in (self.a1, self.a2, self.a3, self.a4, self.a6)
            )
        return self._embedded[key]

    # -- point predicates --------------------------------------------------

    def on_curve(self, P: Point, fld: FieldContext | None = None) -> bool:
        if P.is_infinity:
            return True
        fld = fld or self.ctx
        a1, a2, a3, a4, a6 = self.coeffs_in(fld)
        m = fld.mul
        x, y = P.x, P.y
        lhs = m(y, y) ^ m(a1, m(x, y)) ^ m(a3, y)
        rhs = m(x, m(x, x)) ^ m(a2, m(x, x)) ^ m(a4, x) ^ a6
        return lhs == rhs

    def _require_on_curve(self, P: Point, fld: FieldContext) -> None:
        if not self.on_curve(P, fld):
            raise ValidationError(f"point {P} not on curve")

    # -- group law ----------------------------------------------------------

    def neg(self, P: Point, fld: FieldContext | None = None) -> Point:
        if P.is_infinity:
            return P
        fld = fld or self.ctx
        a1, _, a3, _, _ = self.coeffs_in(fld)
        return Point(P.x, P.y ^ fld.mul(a1, P.x) ^ a3)

    def add(self, P: Point, Q: Point, fld: FieldContext | None = None) -> Point:
        fld = fld or self.ctx
        if P.is_infinity:
            return Q
        if Q.is_infinity:
            return P
        a1, a2, a3, a4, _ = self.coeffs_in(fld)
        m = fld.mul
        x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
        if x1 == x2:
            if y1 != y2:  # Q = -P
                return INFINITY
            den = m(a1, x1) ^ a3
            if den == 0:  # P is its own negative
                return INFINITY
            lam = fld.div(m(x1, x1) ^ a4 ^ m(a1, y1), den)
            x3 = m(lam, lam) ^ m(a1, lam) ^ a2
        else:
            lam = fld.div(y1 ^ y2, x1 ^ x2)
            x3 = m(lam, lam) ^ m(a1, lam) ^ a2 ^ x1 ^ x2
        y3 = m(lam, x1 ^ x3) ^ y1 ^ m(a1, x3) ^ a3
        return Point(x3, y3)

    def scalar_mul(self, k: int, P: Point, fld: FieldContext | None = None) -> Point:
        fld = fld or self.ctx
        if k < 0:
            k, P = -k, self.neg(P, fld)
        R = INFINITY
        while k:
            if k & 1:
                R = self.add(R, P, fld)
            P = self.add(P, P, fld)
            k >>= 1
        return R

    # -- point enumeration ---------------------------------------------------

    def points_over(self, fld: FieldContext | None = None) -> list[Point]:
        """All points with coordinates in fld, plus O, by x-sweep."""
        fld = fld or self.ctx
        a1, a2, a3, a4, a6 = self.coeffs_in(fld)
        m = fld.mul
        pts = [INFINITY]
        for x in fld.elements():
            c = m(a1, x) ^ a3
            u = m(x, m(x, x)) ^ m(a2, m(x, x)) ^ m(a4, x) ^ a6
            for y in fld.solve_quadratic(c, u):
                pts.append(Point(x, y))
        return pts

    def _count_points(self) -> int:
        fld = self.ctx
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        m = fld.mul
        n = 1
        for x in fld.elements():
            c = m(a1, x) ^ a3
            u = m(x, m(x, x)) ^ m(a2, m(x, x)) ^ m(a4, x) ^ a6
            if c == 0:
                n += 1
            elif fld.trace(fld.div(u, m(c, c))) == 0:
                n += 2
        return n

    def serialize(self) -> dict:
        out = self.ctx.serialize()
        out.update(
            a1=elem_to_hex(self.a1), a2=elem_to_hex(self.a2), a3=elem_to_hex(self.a3),
            a4=elem_to_hex(self.a4), a6=elem_to_hex(self.a6), N=self.N, t=self.t,
        )
        return out

    def __repr__(self) -> str:
        return (f"Curve(n={self.ctx.n}, a=({self.a1},{self.a2},{self.a3},"
                f"{self.a4},{self.a6}), N={self.N})")


# ----------------------------------------------------------------------
# Admissible traces and curve search.

def isqrt_exact(v: int) -> int | None:
    r = math.isqrt(v)
    return r if r * r == v else None


def special_traces(n: int) -> list[int]:
    """The even admissible traces: 0 and +/-sqrt(q) or +/-sqrt(2q)."""
    q = 1 << n
    s = isqrt_exact(q) if n % 2 == 0 else isqrt_exact(2 * q)
    assert s is not None
    return [-s, 0, s]


def admissible_t(n: int) -> list[int]:
    """All traces t for which a cyclic curve with N = q+1+t exists."""
    if not 2 <= n <= 12:
        raise ValidationError(f"n={n} outside supported range [2, 12]")
    q = 1 << n
    ts = set(special_traces(n))
    bound = math.isqrt(4 * q)
    for t in range(-bound, bound + 1):
        if t % 2 != 0:
            ts.add(t)
    return sorted(ts)


@dataclass(frozen=True)
class CurveSearchSpec:
    """Target (n, t) for the deterministic cyclic-curve sweep."""

    n: int
    t: int

    @property
    def model_family(self) -> str:
        return "ordinary" if self.t % 2 else "supersingular"

    def validate(self) -> None:
        if self.t not in admissible_t(self.n):
            raise ValidationError(f"t={self.t} is not admissible for n={self.n}")


def enumerate_rational_points(curve: Curve) -> list[Point]:
    """Oracle: the full rational point set (x-sweep), O first then (x, y) order."""
    return sorted(curve.points_over(), key=_sort_key)


def point_order(curve: Curve, P: Point, factored_N: dict[int, int]) -> int:
    o = curve.N
    for p in factored_N:
        while o % p == 0:
            if curve.scalar_mul(o // p, P).is_infinity:
                o //= p
            else:
                break
    return o


def is_cyclic(curve: Curve) -> tuple[bool, Point | None]:
    """Whether the rational-point group is cyclic; witness generator if so.

    The witness is the order-N point with the smallest (x, y) integer pair.
    """
    factored = factorize(curve.N)
    for P in enumerate_rational_points(curve):
        if P.is_infinity:
            continue
        if point_order(curve, P, factored) == curve.N:
            return True, P
    return curve.N == 1, None


# Cached count tables for the ordinary sweep: h0[a6] counts x != 0 with
# Tr(x + sqrt(a6)/x) == 0; the point count only depends on (Tr(a2), a6).
_ordinary_h0: dict[int, list[int]] = {}


def _ordinary_count_table(ctx: FieldContext) -> list[int]:
    tbl = _ordinary_h0.get(ctx.n)
    if tbl is None:
        tbl = [0] * ctx.q
        for a6 in range(1, ctx.q):
            s = ctx.sqrt(a6)
            cnt = 0
            for x in range(1, ctx.q):
                if ctx.trace(x ^ ctx.div(s, x)) == 0:
                    cnt += 1
            tbl[a6] = cnt
        _ordinary_h0[ctx.n] = tbl
    return tbl


def _search_ordinary(ctx: FieldContext, N: int):
    """Sweep y^2 + xy = x^3 + a2 x^2 + a6 (a6 != 0) in (a2, a6) lex order."""
    h0 = _ordinary_count_table(ctx)
    q = ctx.q
    for a2 in range(q):
        tr2 = ctx.trace(a2)
        for a6 in range(1, q):
            h = h0[a6] if tr2 == 0 else (q - 1 - h0[a6])
            if 2 + 2 * h != N:
                continue
            curve = Curve(ctx, 1, a2, 0, 0, a6)
            assert curve.N == N
            ok, gen = is_cyclic(curve)
            if ok:
                return curve, gen
    raise SearchExhaustedError(f"no cyclic ordinary curve with N={N} over GF(2^{ctx.n})")


def _search_supersingular(ctx: FieldContext, N: int):
    """Sweep y^2 + a3 y = x^3 + a4 x + a6 (a3 != 0) in (a3, a4, a6) lex order."""
    q = ctx.q
    for a3 in range(1, q):
        w = ctx.inv(ctx.mul(a3, a3))
        for a4 in range(q):
            wa4 = ctx.mul(w, a4)
            cnt0 = 0
            for x in range(q):
                if ctx.trace(ctx.mul(w, ctx.mul(x, ctx.mul(x, x))) ^ ctx.mul(wa4, x)) == 0:
                    cnt0 += 1
            for a6 in range(q):
                h = cnt0 if ctx.trace(ctx.mul(w, a6)) == 0 else q - cnt0
                if 1 + 2 * h != N:
                    continue
                curve = Curve(ctx, 0, 0, a3, a4, a6)
                assert curve.N == N
                ok, gen = is_cyclic(curve)
                if ok:
                    return curve, gen
    raise SearchExhaustedError(
        f"no cyclic supersingular curve with N={N} over GF(2^{ctx.n})")


def search_cyclic_curve(spec: CurveSearchSpec) -> tuple[Curve, Point]:
    """First cyclic curve (lexicographic coefficient order) with N = q+1+t."""
    spec.validate()
    ctx = make_field(spec.n)
    N = ctx.q + 1 + spec.t
    if spec.t % 2:
        return _search_ordinary(ctx, N)
    return _search_supersingular(ctx, N)


def ordered_points(curve: Curve, P: Point) -> list[Point]:
    """[O, P, [2]P, ..., [N-1]P]; requires P of order N."""
    pts = [INFINITY]
    R = P
    for _ in range(curve.N - 1):
        if R.is_infinity:  # order of P properly divides N
            raise ValidationError("generator order does not equal the point count")
        pts.append(R)
        R = curve.add(R, P)
    if not R.is_infinity:
        raise ValidationError("generator order does not equal the point count")
    return pts
