"""Command line frontend: compute any configuration sum by any method, run
verification matrices, and check the hard-hexagon identities.

Exit codes: 0 success, 1 verification disagreement, 2 parse error,
3 unsupported combination, 4 size cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import bosonic, energy, fermionic, hardhex
from .cartan import cartan_data
from .crystal import FactorDescriptor
from .errors import CapExceeded, CrystalSumsError, UnsupportedError
from .qpoly import QLaurent, invert_q

Shape = tuple[FactorDescriptor, ...]


class ShapeSyntaxError(ValueError):
    pass


def parse_shape(text: str) -> Shape:
    """Parse 'A:2;1,1*4' style shape specs: type, rank, then r,s[*mult]
    factor pairs, leftmost factor first."""
    try:
        head, _, body = text.partition(";")
        kind, _, rank = head.partition(":")
        n = int(rank)
        if kind not in ("A", "C") or not body:
            raise ValueError
        tokens = body.split(",")
        if len(tokens) % 2:
            raise ValueError
        factors: list[FactorDescriptor] = []
        for j in range(0, len(tokens), 2):
            r = int(tokens[j])
            s_tok, _, mult_tok = tokens[j + 1].partition("*")
            s = int(s_tok)
            mult = int(mult_tok) if mult_tok else 1
            if mult < 1:
                raise ValueError
            factors.extend([FactorDescriptor(kind, n, r, s)] * mult)
        return tuple(factors)
    except UnsupportedError:
        raise
    except ValueError as exc:
        raise ShapeSyntaxError(f"cannot parse shape spec {text!r}") from exc


def parse_weight(text: str, dim: int) -> tuple[int, ...]:
    try:
        coords = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ShapeSyntaxError(f"cannot parse weight {text!r}") from exc
    if len(coords) != dim:
        raise ShapeSyntaxError(
            f"weight {text!r} needs {dim} coordinates")
    return coords


def _emit_poly(p: QLaurent, fmt: str) -> None:
    if fmt == "csv":
        for e, c in p.terms:
            print(f"{e},{c}")
    else:
        print(p.to_json())


# ---------------------------------------------------------------------------
# sum

def compute_sum(shape: Shape, weight: tuple[int, ...], restriction: str,
                method: str, statistic: str, level: int | None) -> QLaurent:
    kind = shape[0].kind
    n = shape[0].n
    if restriction == "level" and level is None:
        raise UnsupportedError("--restrict level needs --level")

    if method == "direct":
        return energy.direct_sum(shape, weight, restriction, statistic, level)

    # the remaining methods produce the coenergy grading natively
    if method == "bosonic":
        if restriction == "none":
            out = bosonic.supernomial(shape, weight)
        elif restriction == "classical":
            out = bosonic.bosonic_classical(shape, weight)
        else:
            out = bosonic.bosonic_level(shape, weight, level)
    elif method in ("fermionic", "rc"):
        L, det = fermionic.shape_L(shape)
        lam = tuple(x - det for x in weight)
        if restriction == "classical":
            if any(x < 0 for x in lam):
                return QLaurent()
            if method == "fermionic":
                out = fermionic.closed_form_F(cartan_data(kind, n), L, lam)
            else:
                out = fermionic.rc_generating_function(kind, n, L, lam)
        elif restriction == "level":
            mode = "closed_form" if method == "fermionic" else "rc_sum"
            if kind == "A":
                out = fermionic.level_restricted_A(n, L, lam, level, mode)
            else:
                cols = {a: m for (a, _), m in L.items()}
                out = fermionic.level_restricted_C(n, cols, lam, level, mode)
        else:
            raise UnsupportedError(
                f"method {method} needs a classical or level restriction")
    else:
        raise UnsupportedError(f"unknown method {method!r}")
    return invert_q(out) if statistic == "energy" else out


def cmd_sum(args) -> int:
    shape = parse_shape(args.shape)
    dim = shape[0].n + 1 if shape[0].kind == "A" else shape[0].n
    weight = parse_weight(args.weight, dim)
    out = compute_sum(shape, weight, args.restrict, args.method,
                      args.stat, args.level)
    _emit_poly(out, args.format)
    return 0


# ---------------------------------------------------------------------------
# verify

def _dominant_A(n: int, total: int):
    out = []

    def rec(prev, rem, acc):
        if len(acc) == n + 1:
            if rem == 0:
                out.append(tuple(acc))
            return
        for v in range(min(prev, rem), -1, -1):
            rec(v, rem - v, acc + [v])

    rec(total, total, [])
    return out


def _dominant_C(n: int, boxes: int):
    from itertools import product as iproduct
    out = []
    for t in iproduct(range(boxes + 1), repeat=n):
        if all(t[i] >= t[i + 1] for i in range(n - 1)) \
                and sum(t) <= boxes and (boxes - sum(t)) % 2 == 0:
            out.append(t)
    return out


def _instances(suite: str, n: int, max_L: int, level: int):
    if suite == "rr":
        for L in range(max_L + 1):
            for primed in (False, True):
                yield ("rr", L, primed)
    elif suite == "typeA":
        for L in range(1, max_L + 1):
            for lam in _dominant_A(n, L):
                yield ("typeA", n, L, lam)
    elif suite == "typeC":
        for L in range(1, max_L + 1):
            for lam in _dominant_C(n, L):
                yield ("typeC", n, L, lam)
    elif suite == "level":
        for L in range(1, max_L + 1):
            for lam in _dominant_A(n, L):
                if lam[0] - lam[n] <= level:
                    yield ("level", n, L, lam, level)
    elif suite == "involution":
        for L in range(1, max_L + 1):
            for lam in _dominant_A(n, L):
                yield ("involution", "A", n, L, lam, None)
            for lam in _dominant_C(n, L):
                yield ("involution", "C", n, L, lam, None)
            for lam in _dominant_A(n, L):
                if lam[0] - lam[n] <= level:
                    yield ("involution", "A", n, L, lam, level)
    else:
        raise UnsupportedError(f"unknown suite {suite!r}")


def run_instance(inst: tuple) -> dict:
    t0 = time.perf_counter()
    kind = inst[0]
    values: dict[str, str] = {}
    if kind == "rr":
        _, L, primed = inst
        polys = {m: hardhex.hh_X(L, m, primed)
                 for m in ("enumerate", "recurrence", "fermionic", "bosonic")}
        values = {m: p.to_json() for m, p in polys.items()}
        agree = len({p for p in values.values()}) == 1
        desc = {"L": L, "primed": primed}
    elif kind == "typeA":
        _, n, L, lam = inst
        shape = tuple(FactorDescriptor("A", n) for _ in range(L))
        Lmap = {(1, 1): L}
        polys = {
            "direct": energy.direct_sum(shape, lam, "classical", "coenergy"),
            "bosonic": bosonic.bosonic_classical(shape, lam),
            "fermionic": fermionic.closed_form_F(cartan_data("A", n), Lmap, lam),
            "rc": fermionic.rc_generating_function("A", n, Lmap, lam),
        }
        values = {m: p.to_json() for m, p in polys.items()}
        agree = len(set(values.values())) == 1
        desc = {"n": n, "L": L, "weight": list(lam)}
    elif kind == "typeC":
        _, n, L, lam = inst
        shape = tuple(FactorDescriptor("C", n) for _ in range(L))
        Lmap = {(1, 1): L}
        polys = {
            "bosonic": bosonic.bosonic_classical(shape, lam),
            "fermionic": fermionic.closed_form_F(cartan_data("C", n), Lmap, lam),
            "rc": fermionic.rc_generating_function("C", n, Lmap, lam),
        }
        values = {m: p.to_json() for m, p in polys.items()}
        agree = len(set(values.values())) == 1
        desc = {"n": n, "L": L, "weight": list(lam)}
    elif kind == "level":
        _, n, L, lam, ell = inst
        shape = tuple(FactorDescriptor("A", n) for _ in range(L))
        Lmap = {(1, 1): L}
        polys = {
            "direct": energy.direct_sum(shape, lam, "level", "coenergy", ell),
            "bosonic": bosonic.bosonic_level(shape, lam, ell),
            "rc": fermionic.level_restricted_A(n, Lmap, lam, ell, "rc_sum"),
            "closed": fermionic.level_restricted_A(n, Lmap, lam, ell,
                                                   "closed_form"),
        }
        if lam == fermionic.vacuum_weight(cartan_data("A", n), Lmap):
            polys["vacuum"] = fermionic.closed_form_F_level(
                cartan_data("A", n), Lmap, ell)
        values = {m: p.to_json() for m, p in polys.items()}
        agree = len(set(values.values())) == 1
        desc = {"n": n, "L": L, "weight": list(lam), "level": ell}
    elif kind == "involution":
        _, k, n, L, lam, ell = inst
        shape = tuple(FactorDescriptor(k, n) for _ in range(L))
        mode = "classical" if ell is None else "level"
        rep = bosonic.involution_phi(shape, lam, mode, ell)
        agree = rep.passed
        values = {"size": str(rep.size), "fixed": str(rep.fixed_points)}
        desc = {"kind": k, "n": n, "L": L, "weight": list(lam), "level": ell}
    else:
        raise UnsupportedError(kind)
    return {"suite": kind, "instance": desc, "values": values,
            "agree": agree, "ms": round(1000 * (time.perf_counter() - t0), 3)}


def cmd_verify(args) -> int:
    insts = list(_instances(args.suite, args.n, args.max_L, args.level))
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(run_instance, insts))
    else:
        reports = [run_instance(i) for i in insts]
    bad = 0
    for rep in reports:
        if not rep["agree"]:
            bad += 1
        if args.format == "csv":
            print(f"{rep['suite']},{json.dumps(rep['instance'])!r},"
                  f"{rep['agree']},{rep['ms']}")
        else:
            print(json.dumps(rep, sort_keys=True))
    print(f"# {len(reports)} instances, {bad} disagreements", file=sys.stderr)
    return 1 if bad else 0


# ---------------------------------------------------------------------------
# rr

def cmd_rr(args) -> int:
    if args.series is not None:
        rep = hardhex.rr_series_check(args.series, args.N)
        print(json.dumps({
            "identity": rep.which, "cutoff": rep.cutoff,
            "fermionic_eq_product": rep.fermionic_eq_product,
            "fermionic_eq_alternating": rep.fermionic_eq_alternating,
            "finite_limit_ok": rep.finite_limit_ok,
            "stable_prefix": rep.stable_prefix,
            "pass": rep.passed}, sort_keys=True))
        return 0 if rep.passed else 1
    if args.L is None:
        raise ShapeSyntaxError("rr needs --L or --series")
    _emit_poly(hardhex.hh_X(args.L, args.method, args.primed), args.format)
    return 0


# ---------------------------------------------------------------------------
# entry point

def _apply_config(args, parser_defaults: dict) -> None:
    if not getattr(args, "config", None):
        return
    with open(args.config) as fh:
        conf = json.load(fh)
    for key, val in conf.items():
        attr = key.replace("-", "_")
        if hasattr(args, attr) and getattr(args, attr) == parser_defaults.get(attr):
            setattr(args, attr, val)


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="crystalsums",
        description="configuration sums of crystal paths, three ways")
    sub = top.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--config", help="JSON file with flag defaults")
    common.add_argument("--cap", type=int, default=None,
                        help="override the enumeration caps")

    p_sum = sub.add_parser("sum", parents=[common],
                           help="one configuration sum")
    p_sum.add_argument("shape", help="e.g. A:2;1,1*4 or C:2;1,1*3")
    p_sum.add_argument("--weight", required=True)
    p_sum.add_argument("--restrict", choices=("none", "classical", "level"),
                       default="none")
    p_sum.add_argument("--level", type=int, default=None)
    p_sum.add_argument("--method",
                       choices=("direct", "bosonic", "fermionic", "rc"),
                       default="direct")
    p_sum.add_argument("--stat", choices=("energy", "coenergy"),
                       default="coenergy")
    p_sum.set_defaults(func=cmd_sum)

    p_ver = sub.add_parser("verify", parents=[common],
                           help="run a verification matrix")
    p_ver.add_argument("suite",
                       choices=("rr", "typeA", "typeC", "level", "involution"))
    p_ver.add_argument("--n", type=int, default=1)
    p_ver.add_argument("--max-L", dest="max_L", type=int, default=4)
    p_ver.add_argument("--level", type=int, default=1)
    p_ver.add_argument("--jobs", type=int, default=1)
    p_ver.set_defaults(func=cmd_verify)

    p_rr = sub.add_parser("rr", parents=[common],
                          help="hard-hexagon polynomials and series")
    p_rr.add_argument("--L", type=int, default=None)
    p_rr.add_argument("--primed", action="store_true")
    p_rr.add_argument("--method",
                      choices=("enumerate", "recurrence", "fermionic",
                               "bosonic"), default="recurrence")
    p_rr.add_argument("--series", type=int, choices=(1, 2), default=None)
    p_rr.add_argument("--N", type=int, default=100)
    p_rr.set_defaults(func=cmd_rr)

    for p in (p_sum, p_ver, p_rr):
        p.set_defaults(_defaults={a.dest: a.default for a in p._actions})
    return top


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_config(args, args._defaults)
        if getattr(args, "cap", None):
            _override_caps(args.cap)
        return args.func(args)
    except ShapeSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (UnsupportedError, CrystalSumsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def _override_caps(cap: int) -> None:
    from . import crystal as _crystal
    _crystal.VERTEX_CAP = cap
    fermionic.RC_CAP = cap
    hardhex.ENUMERATE_CAP = cap


if __name__ == "__main__":
    sys.exit(main())
