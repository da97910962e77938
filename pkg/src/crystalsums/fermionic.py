"""Fermionic evaluations: rigged configurations and their closed forms.

The multiplicity array L maps (a, i) to the number of B^{a,i} factors.
Type A weights are content vectors in N^{n+1}; type C weights live in Z^n
and type C factors must be single columns B^{a,1}.

Two independent routes are kept deliberately separate: the closed forms
evaluate the bilinear-form vacancy and charge expressions in the generic
index space, while the rigged-configuration side works with column counts
of the actual partitions.  Their agreement is one of the package's checks.

Type C bookkeeping: nu^(n) is stored unhalved, so its parts are even; a
generic index i at the long row corresponds to the actual part size 2i.
Vacancy numbers at odd actual sizes on that row can be half-integral and
are kept as Fractions.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct

from .cartan import CartanData, cartan_data
from .errors import CapExceeded, CrystalSumsError, UnsupportedError
from .partitions import (conjugate, num_parts_of_size, part, partitions_in_box,
                         partitions_of, q_columns)
from .qpoly import QLaurent, ZERO, invert_q, q_power, qbinomial

LMap = dict[tuple[int, int], int]
RC_CAP = 10 ** 6
CST_CAP = 20


# ---------------------------------------------------------------------------
# configuration shapes

def config_sizes(data: CartanData, L: LMap, lam: tuple[int, ...]) -> tuple[int, ...] | None:
    """|nu^(a)| for a = 1..n (unhalved), or None when the weight constraint
    has no admissible solution."""
    n = data.n
    sizes = []
    for a in range(1, n + 1):
        s = -sum(lam[:a]) + sum(i * mult * min(a, b)
                                for (b, i), mult in L.items())
        if s < 0:
            return None
        sizes.append(s)
    if data.kind == "C" and sizes[-1] % 2:
        return None
    return tuple(sizes)


def _nu_choices(data: CartanData, sizes: tuple[int, ...],
                max_part: int | None = None):
    """All shape sequences nu with the given row sizes; the long row of a
    type C configuration gets even parts only."""
    per_row = []
    for a in range(1, data.n + 1):
        if data.kind == "C" and a == data.n:
            half_cap = None if max_part is None else max_part // 2
            halves = partitions_of(sizes[a - 1] // 2, half_cap)
            per_row.append(tuple(tuple(2 * p for p in mu) for mu in halves))
        else:
            per_row.append(partitions_of(sizes[a - 1], max_part))
    return iproduct(*per_row)


def _occupied(nu) -> list[tuple[int, int, int]]:
    """(row, actual part size, multiplicity) for every occupied site."""
    out = []
    for a, row in enumerate(nu, start=1):
        for i in sorted(set(row)):
            out.append((a, i, num_parts_of_size(row, i)))
    return out


# ---------------------------------------------------------------------------
# vacancy numbers and charges, both routes

def vacancy(data: CartanData, L: LMap, nu, a: int, i: int) -> Fraction:
    """P_i^(a)(nu) from column counts, at the actual part size i."""
    n = data.n
    above = nu[a] if a < n else ()
    below = nu[a - 2] if a >= 2 else ()
    here = nu[a - 1]
    if data.kind == "A" or a < n:
        base = (q_columns(below, i) - 2 * q_columns(here, i)
                + q_columns(above, i))
        src = sum(mult * min(i, j) for (b, j), mult in L.items() if b == a)
        return Fraction(base + src)
    base = q_columns(below, i) - q_columns(here, i)
    return base + Fraction(L.get((n, 1), 0) * min(i, 2), 2)


def _generic_m(data: CartanData, nu) -> list[dict[int, int]]:
    """Per-row multiplicity maps in generic indices (long type C row
    halved)."""
    out = []
    for a, row in enumerate(nu, start=1):
        scale = 2 if data.kind == "C" and a == data.n else 1
        d: dict[int, int] = {}
        for p in row:
            assert p % scale == 0
            d[p // scale] = d.get(p // scale, 0) + 1
        out.append(d)
    return out


def _vacancy_generic(data: CartanData, L: LMap, gm, a: int, i: int,
                     grid: int | None = None) -> Fraction:
    """p_i^(a) from the bilinear form, at generic index i.  With ``grid``
    set, source terms are truncated to the level grid."""
    src = sum(mult * min(i, j) for (b, j), mult in L.items()
              if b == a and (grid is None or j <= data.t[a - 1] * grid))
    acc = Fraction(0)
    alpha = data.simple_roots
    for b in range(1, data.n + 1):
        pair = data.pairing(alpha[a - 1], alpha[b - 1])
        if pair == 0:
            continue
        for k, m in gm[b - 1].items():
            acc += pair * min(data.t[b - 1] * i, data.t[a - 1] * k) * m
    return src - acc


def _cc_generic(data: CartanData, gm) -> int:
    """cc({m}) from the bilinear form, at generic indices."""
    acc = Fraction(0)
    alpha = data.simple_roots
    for a in range(1, data.n + 1):
        for b in range(1, data.n + 1):
            pair = data.pairing(alpha[a - 1], alpha[b - 1])
            if pair == 0:
                continue
            for j, mj in gm[a - 1].items():
                for k, mk in gm[b - 1].items():
                    acc += pair * min(data.t[b - 1] * j,
                                      data.t[a - 1] * k) * mj * mk
    acc /= 2
    assert acc.denominator == 1, "charge came out fractional"
    return int(acc)


def cc_shape(kind: str, n: int, nu) -> int:
    """cc(nu) from column counts (the rigged-configuration route)."""
    cols = [conjugate(row) for row in nu]
    width = max((row[0] if row else 0 for row in nu), default=0)
    acc = Fraction(0)
    for i in range(1, width + 1):
        for a in range(1, n + 1):
            ai = part(cols[a - 1], i)
            up = part(cols[a], i) if a < n else 0
            if kind == "C" and a == n:
                acc += Fraction(ai * ai, 2)
            else:
                acc += ai * (ai - up)
    assert acc.denominator == 1, "type C column parity violated"
    return int(acc)


# ---------------------------------------------------------------------------
# rigged configurations

@dataclass(frozen=True)
class RiggedConfiguration:
    """nu together with one rigging partition per occupied (row, size)."""

    kind: str
    n: int
    nu: tuple[tuple[int, ...], ...]
    riggings: tuple[tuple[tuple[int, int], tuple[int, ...]], ...]

    def rigging(self, a: int, i: int) -> tuple[int, ...]:
        for (aa, ii), J in self.riggings:
            if (aa, ii) == (a, i):
                return J
        return ()

    def to_json(self) -> str:
        return json.dumps({
            "nu": [list(row) for row in self.nu],
            "riggings": {f"{a},{i}": list(J)
                         for (a, i), J in self.riggings},
        }, separators=(",", ":"), sort_keys=True)

    @staticmethod
    def from_json(s: str, kind: str, n: int) -> "RiggedConfiguration":
        d = json.loads(s)
        nu = tuple(tuple(row) for row in d["nu"])
        riggings = tuple(sorted(
            (((int(k.split(",")[0]), int(k.split(",")[1])), tuple(v))
             for k, v in d["riggings"].items())))
        return RiggedConfiguration(kind, n, nu, riggings)


def enumerate_rc(kind: str, n: int, L: LMap, lam: tuple[int, ...],
                 cap: int | None = None) -> list[RiggedConfiguration]:
    """All rigged configurations for the given factors and weight.

    A shape is admitted when every occupied site has a nonnegative vacancy
    number; for dominant weights this is equivalent to nonnegativity
    everywhere (the vacancy profile is concave between occupied sites)."""
    cap = RC_CAP if cap is None else cap
    data = cartan_data(kind, n)
    if kind == "C" and any(i != 1 for (_, i) in L):
        raise UnsupportedError("type C factors must be single columns")
    sizes = config_sizes(data, L, lam)
    if sizes is None:
        return []
    out: list[RiggedConfiguration] = []
    for nu in _nu_choices(data, sizes):
        boxes = []
        ok = True
        for a, i, m in _occupied(nu):
            p = vacancy(data, L, nu, a, i)
            if p < 0:
                ok = False
                break
            assert p.denominator == 1
            boxes.append(((a, i), partitions_in_box(m, int(p))))
        if not ok:
            continue
        count = 1
        for _, bx in boxes:
            count *= len(bx)
            if count > cap:
                raise CapExceeded(f"more than {cap} rigged configurations")
        for choice in iproduct(*(bx for _, bx in boxes)):
            riggings = tuple((site, J)
                             for (site, _), J in zip(boxes, choice))
            out.append(RiggedConfiguration(kind, n, nu, riggings))
    return out


def cc_stat(rc: RiggedConfiguration) -> int:
    """cc(nu, J) = cc(nu) + sum of all rigging sizes."""
    return cc_shape(rc.kind, rc.n, rc.nu) + sum(sum(J) for _, J in rc.riggings)


def theta(rc: RiggedConfiguration, L: LMap) -> RiggedConfiguration:
    """Complement every rigging inside its m x P box; an involution."""
    data = cartan_data(rc.kind, rc.n)
    new = []
    for (a, i), J in rc.riggings:
        m = num_parts_of_size(rc.nu[a - 1], i)
        p = vacancy(data, L, rc.nu, a, i)
        assert p.denominator == 1
        padded = list(J) + [0] * (m - len(J))
        comp = tuple(x for x in sorted((int(p) - x for x in padded),
                                       reverse=True) if x > 0)
        new.append(((a, i), comp))
    return RiggedConfiguration(rc.kind, rc.n, rc.nu, tuple(new))


def cc_theta(rc: RiggedConfiguration, L: LMap) -> int:
    """cc(theta(nu, J)) = cc(nu) + sum P*m - sum |J|: the coenergy
    statistic of the matching paths."""
    data = cartan_data(rc.kind, rc.n)
    total = cc_shape(rc.kind, rc.n, rc.nu)
    for (a, i), J in rc.riggings:
        m = num_parts_of_size(rc.nu[a - 1], i)
        p = vacancy(data, L, rc.nu, a, i)
        total += int(p) * m - sum(J)
    return total


def rc_generating_function(kind: str, n: int, L: LMap, lam: tuple[int, ...],
                           statistic: str = "cc_theta") -> QLaurent:
    """Sum of q^{cc o theta} (coenergy grading, the default) or q^{cc}
    over all rigged configurations."""
    out = ZERO
    for rc in enumerate_rc(kind, n, L, lam):
        e = cc_theta(rc, L) if statistic == "cc_theta" else cc_stat(rc)
        out = out + q_power(e)
    return out


# ---------------------------------------------------------------------------
# closed forms

def closed_form_F(data: CartanData, L: LMap, lam: tuple[int, ...]) -> QLaurent:
    """F-bar(B, Lambda): the manifestly positive q-binomial sum over
    configuration shapes, via the bilinear-form expressions."""
    sizes = config_sizes(data, L, lam)
    if sizes is None:
        return ZERO
    out = ZERO
    for nu in _nu_choices(data, sizes):
        gm = _generic_m(data, nu)
        poly = q_power(_cc_generic(data, gm))
        for a in range(1, data.n + 1):
            for i, m in gm[a - 1].items():
                p = _vacancy_generic(data, L, gm, a, i)
                assert p.denominator == 1
                poly = poly * qbinomial(int(p), m)
                if poly.is_zero():
                    break
            if poly.is_zero():
                break
        out = out + poly
    return out


def _generic_grid(data: CartanData, level: int) -> list[tuple[int, int]]:
    """H^level in generic indices: 1 <= i <= t_a * level."""
    return [(a, i) for a in range(1, data.n + 1)
            for i in range(1, data.t[a - 1] * level + 1)]


def vacuum_weight(data: CartanData, L: LMap) -> tuple[int, ...] | None:
    """Content coordinates of the zero weight: the vacuum rectangle for
    type A, the origin for type C."""
    if data.kind == "C":
        return (0,) * data.n
    boxes = sum(a * i * mult for (a, i), mult in L.items())
    if boxes % (data.n + 1):
        return None
    return (boxes // (data.n + 1),) * (data.n + 1)


def closed_form_F_level(data: CartanData, L: LMap, level: int) -> QLaurent:
    """F-bar^level(B): the vacuum-weight level form over the truncated
    grid, with every grid site contributing its q-binomial factor."""
    for (a, i) in L:
        if i > data.t[a - 1] * level:
            raise UnsupportedError("factor wider than the level grid")
    lam = vacuum_weight(data, L)
    if lam is None:
        return ZERO
    sizes = config_sizes(data, L, lam)
    if sizes is None:
        return ZERO
    grid = _generic_grid(data, level)
    max_part = 2 * level if data.kind == "C" else level
    out = ZERO
    for nu in _nu_choices(data, sizes, max_part=max_part):
        gm = _generic_m(data, nu)
        poly = q_power(_cc_generic(data, gm))
        for a, i in grid:
            p = _vacancy_generic(data, L, gm, a, i, grid=level)
            assert p.denominator == 1
            poly = poly * qbinomial(int(p), gm[a - 1].get(i, 0))
            if poly.is_zero():
                break
        out = out + poly
    return out


# ---------------------------------------------------------------------------
# column-strict tableaux

def cst_enumerate(shape: tuple[int, ...], alphabet: int) -> list[tuple[tuple[int, ...], ...]]:
    """Column-strict tableaux of the given shape (row lengths, weakly
    decreasing) with entries in 1..alphabet, as tuples of rows."""
    shape = tuple(x for x in shape if x > 0)
    if not shape:
        return [()]
    rows = len(shape)
    out: list[tuple[tuple[int, ...], ...]] = []
    grid: list[list[int]] = [[0] * shape[r] for r in range(rows)]
    cells = [(r, c) for r in range(rows) for c in range(shape[r])]

    def rec(k: int):
        if k == len(cells):
            out.append(tuple(tuple(row) for row in grid))
            return
        r, c = cells[k]
        lo = 1
        if c > 0:
            lo = max(lo, grid[r][c - 1])        # rows weakly increase
        if r > 0 and c < shape[r - 1]:
            lo = max(lo, grid[r - 1][c] + 1)    # columns strictly increase
        for v in range(lo, alphabet + 1):
            grid[r][c] = v
            rec(k + 1)
        grid[r][c] = 0

    rec(0)
    return out


def _column(t, a: int) -> list[int]:
    return [row[a - 1] for row in t if len(row) >= a]


def _nonempty_subsets(items):
    for mask in range(1, 1 << len(items)):
        yield [items[k] for k in range(len(items)) if mask >> k & 1]


# ---------------------------------------------------------------------------
# level restriction, type A

def _lambda_prime_A(n: int, lam: tuple[int, ...]) -> tuple[int, ...]:
    reduced = tuple(lam[a] - lam[n] for a in range(n))
    return conjugate(tuple(x for x in reduced if x > 0))


def _corr_A(n: int, lam: tuple[int, ...], level: int, t, a: int, i: int) -> int:
    """The tableau correction to the vacancy number at (a, i)."""
    ltil = level - (lam[0] - lam[n])
    out = -sum(1 for e in _column(t, a) if i >= ltil + e)
    if a + 1 <= n:
        out += sum(1 for e in _column(t, a + 1) if i >= ltil + e)
    return out


def level_restricted_A(n: int, L: LMap, lam: tuple[int, ...], level: int,
                       mode: str = "rc_sum") -> QLaurent:
    """X-bar^level(B, Lambda) for type A.

    rc_sum: sum q^{cc o theta} over rigged configurations with parts at
    most ``level`` admitting a column-strict tableau whose modified vacancy
    numbers dominate all riggings (and stay nonnegative on the grid).

    closed_form: the inclusion-exclusion over nonempty tableau subsets with
    1/q-binomials.  The modes must agree.
    """
    data = cartan_data("A", n)
    if len(lam) != n + 1:
        raise ValueError("weight must be a content vector of length n+1")
    if lam[0] - lam[n] > level:
        raise CrystalSumsError(
            f"weight level {lam[0] - lam[n]} exceeds {level}")
    for (a, i) in L:
        if i > level:
            raise UnsupportedError("factor wider than the level")
    tableaux = cst_enumerate(_lambda_prime_A(n, lam), lam[0] - lam[n])
    grid = _generic_grid(data, level)

    if mode == "rc_sum":
        out = ZERO
        for rc in enumerate_rc("A", n, L, lam):
            if any(row and row[0] > level for row in rc.nu):
                continue
            if _admits_tableau(rc, tableaux, grid,
                               lambda t, a, i: vacancy(data, L, rc.nu, a, i)
                               + _corr_A(n, lam, level, t, a, i)):
                out = out + q_power(cc_theta(rc, L))
        return out

    if mode != "closed_form":
        raise ValueError(f"unknown mode {mode!r}")
    if len(tableaux) > CST_CAP:
        raise CapExceeded(
            f"{len(tableaux)} tableaux: the subset sum is exponential, "
            "use rc_sum")
    sizes = config_sizes(data, L, lam)
    if sizes is None:
        return ZERO
    out = ZERO
    for subset in _nonempty_subsets(tableaux):
        sign = 1 if len(subset) % 2 else -1
        for nu in _nu_choices(data, sizes, max_part=level):
            gm = _generic_m(data, nu)
            c = _cc_generic(data, gm)
            for a, i in grid:
                m = gm[a - 1].get(i, 0)
                if m:
                    p = _vacancy_generic(data, L, gm, a, i, grid=level)
                    c += int(p) * m
            poly = q_power(c)
            for a, i in grid:
                m = gm[a - 1].get(i, 0)
                p = int(_vacancy_generic(data, L, gm, a, i, grid=level))
                ps = p + min(_corr_A(n, lam, level, t, a, i) for t in subset)
                poly = poly * invert_q(qbinomial(ps, m))
                if poly.is_zero():
                    break
            out = out + (poly if sign > 0 else -poly)
    return out


def _admits_tableau(rc: RiggedConfiguration, tableaux, grid, bound) -> bool:
    """Does some tableau dominate every rigging with nonnegative modified
    vacancy numbers across the whole grid?"""
    for t in tableaux:
        ok = True
        for a, i in grid:
            scale = 2 if rc.kind == "C" and a == rc.n else 1
            site = scale * i
            b = bound(t, a, site)
            top = rc.rigging(a, site)[0] if rc.rigging(a, site) else 0
            if b < top or b < 0:
                ok = False
                break
        if ok:
            return True
    return False


# ---------------------------------------------------------------------------
# level restriction, type C

def _lambda_prime_C(n: int, lamC: tuple[int, ...]) -> tuple[int, ...]:
    l1 = lamC[0] if lamC else 0
    seq = [2 * l1]
    seq += [l1 + lamC[a] for a in range(1, n)]
    seq += [l1 - lamC[n - a] for a in range(1, n + 1)]
    return conjugate(tuple(x for x in seq if x > 0))


def _f_corr_C(n: int, lamC: tuple[int, ...], level: int, t,
              a: int, i: int) -> int:
    """f_i^(a)(t) for 1 <= a <= 2n-1, at the actual index i."""
    l1 = lamC[0] if lamC else 0
    shift = 2 * level - 2 * l1

    def height(col: int) -> int:
        if col <= n:
            return l1 + lamC[col - 1]
        return l1 - lamC[2 * n - col]

    def count(col: int) -> int:
        entries = _column(t, col)
        assert len(entries) == height(col)
        return sum(1 for e in entries if i >= shift + e)

    return -count(a) + count(a + 1)


def level_restricted_C(n: int, columns: dict[int, int], lamC: tuple[int, ...],
                       level: int, mode: str = "rc_sum") -> QLaurent:
    """X-bar^level(B, Lambda) for type C single-column factors
    (columns[a] = number of B^{a,1} factors), by rigged configurations or
    the signed tableau-subset closed form."""
    data = cartan_data("C", n)
    if len(lamC) != n:
        raise ValueError("weight must have n coordinates")
    if lamC and lamC[0] > level:
        raise CrystalSumsError(f"weight level {lamC[0]} exceeds {level}")
    L: LMap = {(a, 1): m for a, m in columns.items() if m}
    tableaux = cst_enumerate(_lambda_prime_C(n, lamC),
                             2 * (lamC[0] if lamC else 0))
    grid = _generic_grid(data, level)

    def modified(nu, t, a: int, i: int) -> Fraction:
        p = vacancy(data, L, nu, a, i)
        if a < n:
            return p + min(_f_corr_C(n, lamC, level, t, a, i),
                           _f_corr_C(n, lamC, level, t, 2 * n - a, i))
        return p + Fraction(_f_corr_C(n, lamC, level, t, n, i), 2)

    if mode == "rc_sum":
        out = ZERO
        for rc in enumerate_rc("C", n, L, lamC):
            if any(row and row[0] > 2 * level for row in rc.nu):
                continue
            if _admits_tableau(rc, tableaux, grid,
                               lambda t, a, i: modified(rc.nu, t, a, i)):
                out = out + q_power(cc_theta(rc, L))
        return out

    if mode != "closed_form":
        raise ValueError(f"unknown mode {mode!r}")
    if len(tableaux) > CST_CAP:
        raise CapExceeded(
            f"{len(tableaux)} tableaux: the subset sum is exponential, "
            "use rc_sum")
    sizes = config_sizes(data, L, lamC)
    if sizes is None:
        return ZERO
    out = ZERO
    for subset in _nonempty_subsets(tableaux):
        sign = 1 if len(subset) % 2 else -1
        for nu in _nu_choices(data, sizes, max_part=2 * level):
            c = Fraction(cc_shape("C", n, nu))
            for a, i, m in _occupied(nu):
                c += vacancy(data, L, nu, a, i) * m
            assert c.denominator == 1
            poly = q_power(int(c))
            for a, i in grid:
                scale = 2 if a == n else 1
                site = scale * i
                m = num_parts_of_size(nu[a - 1], site)
                ps = min(modified(nu, t, a, site) for t in subset)
                poly = poly * invert_q(qbinomial(_floor(ps), m))
                if poly.is_zero():
                    break
            out = out + (poly if sign > 0 else -poly)
    return out


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def shape_L(shape) -> tuple[LMap, int]:
    """Factor multiplicities from a tensor shape; type A determinant
    columns (height n+1) are stripped and returned as a count, since each
    shifts every weight coordinate by one."""
    L: LMap = {}
    det = 0
    for d in shape:
        if d.kind == "A" and d.r == d.n + 1:
            det += 1
            continue
        key = (d.r, 1) if d.s == 1 else (1, d.s)
        L[key] = L.get(key, 0) + 1
    return L, det
