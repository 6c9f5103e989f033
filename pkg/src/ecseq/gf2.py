"""Arithmetic in GF(2^m) on integer-coded polynomials.

An element of GF(2^m) is a plain Python int whose bit i is the coefficient
of x^i (low bit = constant term).  A :class:`FieldContext` fixes the modulus
and owns all arithmetic; elements carry no state of their own, so contexts
are safely shareable and every operation is a pure function of its inputs.

Field elements serialize as lowercase hex of the coefficient bit vector;
a context serializes as ``{"n": ..., "modulus": <hex>}``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

# Log/exp tables are built for fields up to this size (2^20 elements).
TABLE_LIMIT = 1 << 20

MIN_DEGREE = 2
MAX_DEGREE = 12
MAX_EXT_DEGREE = 24


class ValidationError(ValueError):
    """Bad user-supplied parameters (out of range, inadmissible, ...)."""


# ----------------------------------------------------------------------
# GF(2)[x] helpers on integer-coded polynomials.

def clmul(a: int, b: int) -> int:
    """Carry-less product of two GF(2) polynomials."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def poly_mod(a: int, mod: int) -> int:
    mb = mod.bit_length()
    ab = a.bit_length()
    while ab >= mb:
        a ^= mod << (ab - mb)
        ab = a.bit_length()
    return a


def poly_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    q = 0
    bb = b.bit_length()
    while a.bit_length() >= bb:
        shift = a.bit_length() - bb
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, poly_mod(a, b)
    return a


def factorize(m: int) -> dict[int, int]:
    """Prime factorization by trial division (desk-scale inputs only)."""
    f: dict[int, int] = {}
    p = 2
    while p * p <= m:
        while m % p == 0:
            f[p] = f.get(p, 0) + 1
            m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        f[m] = f.get(m, 0) + 1
    return f


def is_irreducible(p: int) -> bool:
    """Rabin test for a GF(2)[x] polynomial coded as an int."""
    m = p.bit_length() - 1
    if m < 1:
        return False
    if m == 1:
        return True
    if p & 1 == 0:  # divisible by x
        return False
    # x^(2^i) mod p for i = 1..m
    pow2 = [2]
    cur = 2
    for _ in range(m):
        cur = poly_mod(clmul(cur, cur), p)
        pow2.append(cur)
    if pow2[m] != 2:
        return False
    for r in factorize(m):
        if poly_gcd(pow2[m // r] ^ 2, p) != 1:
            return False
    return True


def smallest_irreducible(m: int) -> int:
    """Lexicographically smallest irreducible of degree m (int comparison)."""
    for p in range(1 << m, 1 << (m + 1)):
        if is_irreducible(p):
            return p
    raise AssertionError("no irreducible polynomial found")  # unreachable


# ----------------------------------------------------------------------
# GF(2) linear systems (bit-vector columns).

class GF2Solver:
    """Solve ``sum_j z_j * col_j = w`` over GF(2) for fixed columns.

    Columns and right-hand sides are bit-vector ints.  The solution is
    returned as an int whose bit j selects column j; ``None`` means w is
    outside the column span.
    """

    def __init__(self, cols: list[int]):
        self.pivots: list[tuple[int, int, int]] = []  # (lead bit, value, combo)
        self.null_combos: list[int] = []
        for j, c in enumerate(cols):
            combo = 1 << j
            for pb, pv, pc in self.pivots:
                if (c >> pb) & 1:
                    c ^= pv
                    combo ^= pc
            if c == 0:
                self.null_combos.append(combo)
                continue
            pb = c.bit_length() - 1
            # keep every pivot free of the other pivots' leading bits
            self.pivots = [
                (qb, qv ^ c, qc ^ combo) if (qv >> pb) & 1 else (qb, qv, qc)
                for qb, qv, qc in self.pivots
            ]
            self.pivots.append((pb, c, combo))

    def solve(self, w: int) -> int | None:
        z = 0
        for pb, pv, pc in self.pivots:
            if (w >> pb) & 1:
                w ^= pv
                z ^= pc
        return z if w == 0 else None


# ----------------------------------------------------------------------
# Field contexts.

class FieldContext:
    """GF(2^n) with a fixed modulus; all ops take and return ints."""

    def __init__(self, modulus: int):
        if not is_irreducible(modulus):
            raise ValidationError(f"modulus {modulus:#x} is not irreducible")
        self.modulus = modulus
        self.n = modulus.bit_length() - 1
        self.q = 1 << self.n
        self._exp: list[int] | None = None
        self._log: list[int | None] | None = None
        self.trace_mask = self._compute_trace_mask()
        self._as_solver: GF2Solver | None = None

    # -- construction helpers ------------------------------------------

    def _compute_trace_mask(self) -> int:
        mask = 0
        for i in range(self.n):
            a = 1 << i
            acc = a
            t = a
            for _ in range(self.n - 1):
                t = poly_mod(clmul(t, t), self.modulus)
                acc ^= t
            if acc == 1:
                mask |= 1 << i
            elif acc != 0:  # pragma: no cover - trace lands in GF(2)
                raise AssertionError("trace escaped GF(2)")
        return mask

    def build_tables(self) -> None:
        """Build log/exp tables over a primitive element (idempotent)."""
        if self._exp is not None:
            return
        if self.q > TABLE_LIMIT:
            raise ValidationError(f"field of size 2^{self.n} too large for tables")
        order = self.q - 1
        factors = list(factorize(order))
        gamma = None
        for g in range(2, self.q):
            if all(self._pow_raw(g, order // p) != 1 for p in factors):
                gamma = g
                break
        assert gamma is not None
        exp = [0] * order
        log: list[int | None] = [None] * self.q
        acc = 1
        for i in range(order):
            exp[i] = acc
            log[acc] = i
            acc = poly_mod(clmul(acc, gamma), self.modulus)
        assert acc == 1
        self._exp = exp
        self._log = log

    # -- arithmetic ----------------------------------------------------

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    def _mul_raw(self, a: int, b: int) -> int:
        return poly_mod(clmul(a, b), self.modulus)

    def mul(self, a: int, b: int) -> int:
        if self._exp is None:
            return self._mul_raw(a, b)
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero")
        if self._exp is None:
            return self._pow_raw(a, self.q - 2)
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def _pow_raw(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_raw(r, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return r

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a = self.inv(a)
            e = -e
        if self._exp is not None:
            if a == 0:
                return 0 if e else 1
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        return self._pow_raw(a, e)

    def sqrt(self, a: int) -> int:
        # squaring is bijective in characteristic 2
        return self.pow(a, self.q >> 1)

    def trace(self, a: int) -> int:
        """Absolute trace GF(2^n) -> GF(2)."""
        return (a & self.trace_mask).bit_count() & 1

    def elements(self) -> range:
        return range(self.q)

    # -- char-2 quadratics ---------------------------------------------

    def _artin_schreier_root(self, w: int) -> int:
        """One root z of z^2 + z = w, assuming trace(w) == 0."""
        if self.n & 1:
            z = w
            t = w
            for _ in range((self.n - 1) // 2):
                t = self.mul(t, t)
                t = self.mul(t, t)
                z ^= t
            return z
        if self._as_solver is None:
            cols = [self._mul_raw(1 << i, 1 << i) ^ (1 << i) for i in range(self.n)]
            self._as_solver = GF2Solver(cols)
        z = self._as_solver.solve(w)
        assert z is not None
        return z

    def solve_quadratic(self, c: int, u: int) -> tuple[int, ...]:
        """All roots y of y^2 + c*y = u, sorted."""
        if c == 0:
            return (self.sqrt(u),)
        w = self.div(u, self.mul(c, c))
        if self.trace(w):
            return ()
        z = self._artin_schreier_root(w)
        y0 = self.mul(c, z)
        y1 = y0 ^ c
        return (y0, y1) if y0 < y1 else (y1, y0)

    # -- serialization ---------------------------------------------------

    def serialize(self) -> dict:
        return {"n": self.n, "modulus": format(self.modulus, "x")}

    def __repr__(self) -> str:
        return f"FieldContext(n={self.n}, modulus={self.modulus:#x})"


class ExtFieldContext(FieldContext):
    """GF(2^(n*d)) together with an explicit embedding of GF(2^n).

    The embedding sends the base field's polynomial generator to
    ``embed_image``, the smallest root (by integer representation) of the
    base modulus inside the extension.
    """

    def __init__(self, base: FieldContext, d: int):
        super().__init__(smallest_irreducible(base.n * d))
        self.base = base
        self.d = d
        self.embed_image = self._find_embed_image()
        self._beta_pow = [1]
        for _ in range(base.n - 1):
            self._beta_pow.append(self._mul_raw(self._beta_pow[-1], self.embed_image))
        self._decode_solver = GF2Solver(self._beta_pow)
        # GF(q)-coordinates of the extension w.r.t. the basis 1, g, ..., g^(d-1)
        # where g is the extension's own polynomial generator (the class of x).
        gpow = [1]
        for _ in range(d - 1):
            gpow.append(self._mul_raw(gpow[-1], 2))
        cols = [self._mul_raw(self._beta_pow[i], gpow[k])
                for k in range(d) for i in range(base.n)]
        self._coord_solver = GF2Solver(cols)

    def _find_embed_image(self) -> int:
        # Roots of the base modulus lie in the Frobenius-fixed subfield, so
        # scan only the kernel of a -> a^(2^n) + a (same smallest root as a
        # full scan of the extension, much cheaper).
        cols = [self._frobenius_q_raw(1 << i) ^ (1 << i) for i in range(self.n)]
        basis = GF2Solver(cols).null_combos
        assert len(basis) == self.base.n
        subfield = [0]
        for b in basis:
            subfield += [e ^ b for e in subfield]
        best = None
        for e in subfield:
            if e and self._eval_gf2_poly(self.base.modulus, e) == 0:
                if best is None or e < best:
                    best = e
        assert best is not None, "base modulus has no root in the extension"
        return best

    def _eval_gf2_poly(self, p: int, e: int) -> int:
        r = 0
        for i in range(p.bit_length() - 1, -1, -1):
            r = self._mul_raw(r, e)
            if (p >> i) & 1:
                r ^= 1
        return r

    def _frobenius_q_raw(self, a: int) -> int:
        for _ in range(self.base.n):
            a = self._mul_raw(a, a)
        return a

    def embed(self, a: int) -> int:
        """Ring embedding GF(2^n) -> GF(2^(n*d))."""
        r = 0
        i = 0
        while a:
            if a & 1:
                r ^= self._beta_pow[i]
            a >>= 1
            i += 1
        return r

    def decode(self, e: int) -> int:
        """Inverse of :meth:`embed`; raises if e is outside the subfield."""
        a = self._decode_solver.solve(e)
        if a is None:
            raise ValueError("element not in the embedded base field")
        return a

    def frobenius_q(self, a: int) -> int:
        """q-power Frobenius a -> a^(2^n)."""
        if self._exp is not None and a:
            return self._exp[(self._log[a] << self.base.n) % (self.q - 1)]
        return self._frobenius_q_raw(a)

    def coords(self, e: int) -> tuple[int, ...]:
        """GF(q)-coordinates of e w.r.t. the basis 1, g, ..., g^(d-1)."""
        z = self._coord_solver.solve(e)
        assert z is not None
        n = self.base.n
        mask = (1 << n) - 1
        return tuple((z >> (k * n)) & mask for k in range(self.d))

    def serialize(self) -> dict:
        out = super().serialize()
        out["base_n"] = self.base.n
        out["d"] = self.d
        out["embed_image"] = format(self.embed_image, "x")
        return out

    def __repr__(self) -> str:
        return f"ExtFieldContext(n={self.base.n}, d={self.d})"


# ----------------------------------------------------------------------
# Cached constructors.

@functools.lru_cache(maxsize=None)
def make_field(n: int) -> FieldContext:
    """GF(2^n) with the lexicographically smallest irreducible modulus."""
    if not MIN_DEGREE <= n <= MAX_DEGREE:
        raise ValidationError(f"n={n} outside supported range [{MIN_DEGREE}, {MAX_DEGREE}]")
    ctx = FieldContext(smallest_irreducible(n))
    ctx.build_tables()
    return ctx


@functools.lru_cache(maxsize=None)
def _make_ext_cached(n: int, d: int) -> ExtFieldContext:
    return ExtFieldContext(make_field(n), d)


def make_ext(base: FieldContext, d: int) -> ExtFieldContext:
    """GF(2^(n*d)) with a verified embedding of the given base field."""
    if d < 1:
        raise ValidationError("relative degree must be positive")
    if base.n * d > MAX_EXT_DEGREE:
        raise ValidationError(f"extension degree {base.n * d} exceeds {MAX_EXT_DEGREE}")
    return _make_ext_cached(base.n, d)


def elem_to_hex(a: int) -> str:
    return format(a, "x")


def elem_from_hex(s: str) -> int:
    return int(s, 16)
