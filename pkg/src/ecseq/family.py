"""Sequence family generation s_{i,j} = Tr(z_i(P_j)) and the ECSEQ v1 file.

Rows are stored as Python ints with bit j (1 << j) holding s_{i,j}; the
on-disk format packs each row MSB-first and pads the last byte with zeros.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .curves import Curve, Point, ordered_points
from .gf2 import FieldContext
from .rrspace import CurveFunction, RRSpace, eval_function


class FormatError(ValueError):
    """Malformed ECSEQ file."""


@dataclass
class SequenceFamily:
    n: int
    t: int
    d: int
    N: int
    M: int
    bits: list[int]  # bits[i] bit j = s_{i,j}
    provenance: dict = field(default_factory=dict)

    @property
    def q(self) -> int:
        return 1 << self.n


def enumerate_V(ctx: FieldContext, space: RRSpace) -> list[CurveFunction]:
    """V \\ {0} indexed by coefficient vectors in lexicographic order.

    z = sum_k c_k * V_basis[k] with (c_1, ..., c_{d-1}) running over the
    nonzero vectors of GF(q)^{d-1}, compared as integer tuples.
    """
    basis = space.V_basis
    r = len(basis)
    q = ctx.q
    out = []
    for idx in range(1, q**r):
        cs = [(idx // q ** (r - 1 - k)) % q for k in range(r)]
        coeffs = [0] * len(basis[0].coeffs)
        for ck, vb in zip(cs, basis):
            if ck:
                for m, v in enumerate(vb.coeffs):
                    coeffs[m] ^= ctx.mul(ck, v)
        out.append(CurveFunction(d=basis[0].d, coeffs=tuple(coeffs), dpoly=basis[0].dpoly))
    return out


def gen_family(curve: Curve, P: Point, space: RRSpace, ext=None) -> SequenceFamily:
    """The full M x N bit matrix with regeneration provenance.

    Rows are filled through the V-basis evaluations: z = sum c_k b_k gives
    z(P_j) = sum c_k b_k(P_j), so each point is evaluated d-1 times total.
    """
    ctx = curve.ctx
    pts = ordered_points(curve, P)
    N = curve.N
    d = space.place.d
    basis_vals = [[eval_function(curve, b, pt) for pt in pts] for b in space.V_basis]
    r = len(space.V_basis)
    q = ctx.q
    mul, trace = ctx.mul, ctx.trace
    bits = []
    for idx in range(1, q**r):
        cs = [(idx // q ** (r - 1 - k)) % q for k in range(r)]
        row = 0
        for j in range(N):
            v = 0
            for ck, bv in zip(cs, basis_vals):
                if ck:
                    v ^= mul(ck, bv[j])
            if trace(v):
                row |= 1 << j
        bits.append(row)
    M = q ** (d - 1) - 1
    assert len(bits) == M
    prov = {
        "field": ctx.serialize(),
        "ext_field": ext.serialize() if ext is not None else None,
        "curve": curve.serialize(),
        "generator": P.serialize(),
        "place": space.place.serialize(),
        "V_basis": [b.serialize() for b in space.V_basis],
    }
    return SequenceFamily(n=ctx.n, t=curve.t, d=d, N=N, M=M, bits=bits, provenance=prov)


def shift_identity_check(family: SequenceFamily, curve: Curve, P: Point,
                         space: RRSpace, pairs=None) -> bool:
    """Index shift equals point translation: s_{i,j+u} == Tr(z_i(P_j + [u]P)).

    pairs is an iterable of (i, u); None checks every (i, u) pair.
    """
    pts = ordered_points(curve, P)
    N = family.N
    zs = enumerate_V(curve.ctx, space)
    if pairs is None:
        pairs = ((i, u) for i in range(family.M) for u in range(N))
    for i, u in pairs:
        Pu = curve.scalar_mul(u, P)
        row = family.bits[i]
        z = zs[i]
        for j in range(N):
            shifted = (row >> ((j + u) % N)) & 1
            direct = curve.ctx.trace(eval_function(curve, z, curve.add(pts[j], Pu)))
            if shifted != direct:
                return False
    return True


# ----------------------------------------------------------------------
# ECSEQ v1 serialization.

def _pack_row(row: int, N: int) -> bytes:
    nbytes = (N + 7) // 8
    out = bytearray(nbytes)
    for j in range(N):
        if (row >> j) & 1:
            out[j // 8] |= 1 << (7 - j % 8)
    return bytes(out)


def _unpack_row(data: bytes, N: int) -> int:
    row = 0
    for j in range(N):
        if (data[j // 8] >> (7 - j % 8)) & 1:
            row |= 1 << j
    return row


def write_family(family: SequenceFamily, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"ECSEQ v1 n={family.n} t={family.t} d={family.d} "
                 f"N={family.N} M={family.M}\n")
        fh.write(json.dumps(family.provenance, sort_keys=True,
                            separators=(",", ":")) + "\n")
        for row in family.bits:
            fh.write(_pack_row(row, family.N).hex() + "\n")


def read_family(path) -> SequenceFamily:
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines or not lines[0].startswith("ECSEQ v1 "):
        raise FormatError("missing ECSEQ v1 header")
    try:
        fields = dict(kv.split("=") for kv in lines[0].split()[2:])
        n, t, d = int(fields["n"]), int(fields["t"]), int(fields["d"])
        N, M = int(fields["N"]), int(fields["M"])
        provenance = json.loads(lines[1])
    except (KeyError, ValueError, IndexError) as exc:
        raise FormatError(f"bad ECSEQ header or provenance: {exc}") from exc
    if len(lines) != 2 + M:
        raise FormatError(f"expected {M} rows, found {len(lines) - 2}")
    nbytes = (N + 7) // 8
    bits = []
    for ln in lines[2:]:
        try:
            raw = bytes.fromhex(ln)
        except ValueError as exc:
            raise FormatError(f"bad hex row: {exc}") from exc
        if len(raw) != nbytes:
            raise FormatError("row length does not match N")
        bits.append(_unpack_row(raw, N))
    return SequenceFamily(n=n, t=t, d=d, N=N, M=M, bits=bits, provenance=provenance)
