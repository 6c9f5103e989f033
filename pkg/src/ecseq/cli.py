"""Command-line front end: generate / analyze / reproduce-table /
count-places / admissible.

Exit codes: 0 success, 2 validation failure, 3 bound-assertion failure,
4 I/O or format error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import sys
import time

from .analysis import (BoundViolationError, corr_bound, counting_identity_check,
                       family_correlation, family_linear_complexity)
from .curves import CurveSearchSpec, admissible_t, search_cyclic_curve
from .family import FormatError, gen_family, read_family, write_family
from .gf2 import ValidationError, make_ext
from .places import (FIND_PLACE_LIMIT, PlaceCountReport, count_places_formula,
                     enumerate_places_deg_d, find_place)
from .rrspace import rr_basis

# Published reference values, reported alongside our results but never
# asserted: the instances behind them (curve, place, generator) are not
# pinned anywhere, so observed correlations legitimately differ.
TABLE3_REFERENCE = {
    64: {"t": 8, "N": 73, "M": 63, "corr": 39},
    128: {"t": 16, "N": 145, "M": 127, "corr": 57},
    256: {"t": 16, "N": 273, "M": 255, "corr": 89},
    512: {"t": 32, "N": 545, "M": 511, "corr": 137},
    1024: {"t": 32, "N": 1057, "M": 1023, "corr": 191},
}
TABLE2_REFERENCE = {
    64: {"size": 63, "corr": 38},
    128: {"size": 127, "corr": 60},
    256: {"size": 255, "corr": 86},
    512: {"size": 511, "corr": 124},
    1024: {"size": 31, "corr": 184},
    2048: {"size": 63, "corr": 276},
    4096: {"size": 127, "corr": 416},
}


def _emit(obj, out_path=None):
    text = json.dumps(obj, sort_keys=True, indent=2) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _pipeline(n: int, t: int, d: int):
    """Steps 1-7: curve search, place, function space, bit matrix."""
    spec = CurveSearchSpec(n, t)
    spec.validate()
    curve, P = search_cyclic_curve(spec)
    if math.gcd(d, curve.N) != 1:
        raise ValidationError(f"gcd(d={d}, N={curve.N}) != 1")
    ext = make_ext(curve.ctx, d)
    place = find_place(curve, ext, d)
    space = rr_basis(curve, ext, place)
    return curve, P, ext, place, space


def cmd_generate(args) -> int:
    n, t, d = args.n, args.t, args.d
    curve, P, ext, place, space = _pipeline(n, t, d)
    fam = gen_family(curve, P, space, ext)
    out = args.out or f"ecseq_n{n}_t{t}_d{d}.ecseq"
    write_family(fam, out)
    with open(out, "rb") as fh:
        digest = hashlib.sha256(fh.read()).hexdigest()
    cv = fam.provenance["curve"]
    coeffs = ",".join(cv[k] for k in ("a1", "a2", "a3", "a4", "a6"))
    print(f"wrote {out}: N={fam.N} M={fam.M} curve=[{coeffs}] "
          f"generator={fam.provenance['generator']} sha256={digest}")
    return 0


def cmd_analyze(args) -> int:
    with open(args.family, "rb") as fh:
        digest = hashlib.sha256(fh.read()).hexdigest()
    fam = read_family(args.family)
    timings = {}
    t0 = time.perf_counter()
    corr = family_correlation(fam, sampled=args.sampled, seed=args.seed,
                              threads=args.threads)
    timings["correlation_s"] = round(time.perf_counter() - t0, 3)
    t0 = time.perf_counter()
    lc = family_linear_complexity(fam)
    timings["linear_complexity_s"] = round(time.perf_counter() - t0, 3)
    t0 = time.perf_counter()
    identities_ok = counting_identity_check(fam)
    timings["counting_identity_s"] = round(time.perf_counter() - t0, 3)
    bundle = {
        "family_file": args.family,
        "family_sha256": digest,
        "config": {"n": fam.n, "t": fam.t, "d": fam.d, "N": fam.N, "M": fam.M},
        "correlation": corr.as_dict(),
        "linear_complexity": lc.as_dict(),
        "counting_identities_ok": identities_ok,
        "timings": timings,
    }
    _emit(bundle, args.out)
    if not identities_ok:
        raise BoundViolationError("counting identity check failed")
    return 0


def cmd_reproduce_table(args) -> int:
    rows = []
    if args.table == 3:
        ns = args.n_values or [6, 7, 8]
        for n in ns:
            q = 1 << n
            t = math.isqrt(q) if n % 2 == 0 else math.isqrt(2 * q)
            curve, P, ext, place, space = _pipeline(n, t, 2)
            fam = gen_family(curve, P, space, ext)
            rep = family_correlation(fam, threads=args.threads)
            ref = TABLE3_REFERENCE.get(q, {})
            rows.append({"q": q, "t": t, "N": fam.N, "M": fam.M,
                         "observed_cor": rep.cor, "bound": rep.bound,
                         "reference_cor": ref.get("corr")})
    else:
        ns = args.n_values or [4, 5, 6]
        for n in ns:
            q = 1 << n
            curve, P, ext, place, space = _pipeline(n, -1, 3)
            fam = gen_family(curve, P, space, ext)
            sampled = args.sampled if q > 32 else None
            rep = family_correlation(fam, sampled=sampled, seed=args.seed,
                                     threads=args.threads)
            ref = TABLE2_REFERENCE.get(q, {})
            rows.append({"q": q, "t": -1, "N": fam.N, "M": fam.M,
                         "observed_cor": rep.cor, "bound": rep.bound,
                         "mode": rep.mode,
                         "reference_cor": ref.get("corr"),
                         "reference_size": ref.get("size"),
                         "note": "reference used an unexplained subset"
                                 if ref.get("size") not in (None, fam.M) else None})
    _emit({"table": args.table, "rows": rows}, args.out)
    return 0


def cmd_count_places(args) -> int:
    q = 1 << args.n
    formula = count_places_formula(q, args.t, args.d)
    enumerated = None
    if args.verify:
        if q**args.d > FIND_PLACE_LIMIT:
            raise ValidationError(f"q^d = {q ** args.d} exceeds the enumeration cap")
        curve, P, ext, place, space = None, None, None, None, None
        spec = CurveSearchSpec(args.n, args.t)
        spec.validate()
        curve, P = search_cyclic_curve(spec)
        ext = make_ext(curve.ctx, args.d)
        enumerated = len(enumerate_places_deg_d(curve, ext, args.d))
    report = PlaceCountReport(d=args.d, q=q, t=args.t, formula=formula,
                              enumerated=enumerated)
    _emit({"d": report.d, "q": report.q, "t": report.t,
           "formula": report.formula, "enumerated": report.enumerated,
           "consistent": report.consistent}, args.out)
    if not report.consistent:
        raise BoundViolationError(
            f"place count mismatch: formula {formula} != enumerated {enumerated}")
    return 0


def cmd_admissible(args) -> int:
    rows = []
    for t in admissible_t(args.n):
        N = (1 << args.n) + 1 + t
        ds = [d for d in (2, 3) if math.gcd(d, N) == 1]
        rows.append({"t": t, "N": N, "d_choices": ds,
                     "family": "ordinary" if t % 2 else "supersingular"})
    _emit({"n": args.n, "q": 1 << args.n, "rows": rows}, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ecseq",
        description="Binary sequence families with provably low correlation "
                    "from cyclic elliptic curves over GF(2^n).")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="run the full construction and write an ECSEQ file")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--t", type=int, required=True)
    g.add_argument("--d", type=int, required=True, choices=(2, 3))
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)

    a = sub.add_parser("analyze", help="correlation / linear-complexity report for an ECSEQ file")
    a.add_argument("family")
    a.add_argument("--sampled", type=int, default=None, metavar="K")
    a.add_argument("--seed", type=int, default=0)
    a.add_argument("--threads", type=int, default=1)
    a.add_argument("--out")
    a.set_defaults(func=cmd_analyze)

    r = sub.add_parser("reproduce-table", help="rebuild published result tables at desk scale")
    r.add_argument("--table", type=int, required=True, choices=(2, 3))
    r.add_argument("--n", type=int, action="append", dest="n_values")
    r.add_argument("--sampled", type=int, default=1_000_000, metavar="K")
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--threads", type=int, default=1)
    r.add_argument("--out")
    r.set_defaults(func=cmd_reproduce_table)

    c = sub.add_parser("count-places", help="degree-d place count, optionally verified by enumeration")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--t", type=int, required=True)
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--verify", action="store_true")
    c.add_argument("--out")
    c.set_defaults(func=cmd_count_places)

    m = sub.add_parser("admissible", help="list admissible traces t and coprime degrees for n")
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--out")
    m.set_defaults(func=cmd_admissible)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BoundViolationError as exc:
        print(f"bound assertion failed: {exc}", file=sys.stderr)
        return 3
    except (FormatError, OSError) as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
