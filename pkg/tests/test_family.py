"""Sequence generation, the shift identity, and the ECSEQ v1 file format."""

import hashlib

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import cached_family, cached_instance
from ecseq.curves import ordered_points
from ecseq.family import (FormatError, _pack_row, _unpack_row, enumerate_V,
                          gen_family, read_family, shift_identity_check,
                          write_family)
from ecseq.rrspace import eval_function


def test_smallest_family_shape():
    fam = cached_family(3, 4, 2)
    assert (fam.N, fam.M, fam.q) == (13, 7, 8)
    assert len(fam.bits) == 7
    assert all(0 < row < (1 << 13) for row in fam.bits)
    assert len(set(fam.bits)) == 7  # pairwise distinct sequences


def test_rows_match_direct_trace_evaluation():
    curve, P, ext, place, space = cached_instance(3, 4, 2)
    fam = cached_family(3, 4, 2)
    pts = ordered_points(curve, P)
    for i, z in enumerate(enumerate_V(curve.ctx, space)):
        row = 0
        for j, pt in enumerate(pts):
            if curve.ctx.trace(eval_function(curve, z, pt)):
                row |= 1 << j
        assert row == fam.bits[i]


def test_rows_are_trace_linear_in_coefficients():
    # row index i encodes coefficient vector i+1; XOR of rows tracks GF(2)
    # addition of coefficient vectors (trace and evaluation are additive)
    fam = cached_family(3, 4, 2)
    for a in range(1, 8):
        for b in range(1, 8):
            if a ^ b:
                assert fam.bits[a - 1] ^ fam.bits[b - 1] == fam.bits[(a ^ b) - 1]


def test_shift_identity_full():
    curve, P, ext, place, space = cached_instance(3, 4, 2)
    fam = cached_family(3, 4, 2)
    assert shift_identity_check(fam, curve, P, space)


def test_shift_identity_d3_sampled():
    curve, P, ext, place, space = cached_instance(3, 4, 3)
    fam = cached_family(3, 4, 3)
    pairs = [(0, 1), (7, 5), (fam.M - 1, fam.N - 1), (30, 0)]
    assert shift_identity_check(fam, curve, P, space, pairs=pairs)


def test_enumerate_v_ordering_and_size():
    curve, P, ext, place, space = cached_instance(3, 4, 3)
    zs = enumerate_V(curve.ctx, space)
    assert len(zs) == 8**2 - 1
    assert len({z.coeffs for z in zs}) == len(zs)
    # first function is the last basis vector (coefficient vector (0, 1))
    assert zs[0].coeffs == space.V_basis[1].coeffs
    assert zs[7].coeffs == space.V_basis[0].coeffs  # vector (1, 0)


@given(st.integers(1, 200), st.data())
def test_pack_unpack_roundtrip(N, data):
    row = data.draw(st.integers(0, (1 << N) - 1))
    packed = _pack_row(row, N)
    assert len(packed) == (N + 7) // 8
    assert _unpack_row(packed, N) == row


def test_file_roundtrip_byte_identical(tmp_path):
    fam = cached_family(3, 4, 2)
    p1, p2 = tmp_path / "a.ecseq", tmp_path / "b.ecseq"
    write_family(fam, p1)
    fam2 = read_family(p1)
    assert fam2.bits == fam.bits
    assert fam2.provenance == fam.provenance
    assert (fam2.n, fam2.t, fam2.d, fam2.N, fam2.M) == (3, 4, 2, 13, 7)
    write_family(fam2, p2)
    assert hashlib.sha256(p1.read_bytes()).digest() == hashlib.sha256(p2.read_bytes()).digest()


def test_header_line_format(tmp_path):
    fam = cached_family(3, 4, 2)
    path = tmp_path / "fam.ecseq"
    write_family(fam, path)
    lines = path.read_text().splitlines()
    assert lines[0] == "ECSEQ v1 n=3 t=4 d=2 N=13 M=7"
    assert len(lines) == 2 + fam.M
    assert all(len(ln) == 4 for ln in lines[2:])  # ceil(13/8)=2 bytes as hex


@pytest.mark.parametrize("mutate", [
    lambda lines: ["BOGUS"] + lines[1:],
    lambda lines: lines[:3],                             # missing rows
    lambda lines: lines[:2] + ["zz" * 2] + lines[3:],    # bad hex
    lambda lines: lines[:2] + ["ff"] + lines[3:],        # short row
])
def test_malformed_files_rejected(tmp_path, mutate):
    fam = cached_family(3, 4, 2)
    path = tmp_path / "fam.ecseq"
    write_family(fam, path)
    broken = tmp_path / "broken.ecseq"
    broken.write_text("\n".join(mutate(path.read_text().splitlines())) + "\n")
    with pytest.raises(FormatError):
        read_family(broken)
