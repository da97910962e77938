"""Finite crystals of types A_n and C_n and their tensor products.

Conventions fixed here, once:

* A tensor word stores its factors in display order (b_L, ..., b_1), so
  index 1 of the mathematical labelling is the RIGHTMOST factor and lives
  at the END of the tuple.
* For a two-factor product b (x) b' the operators act as

      e_i(b (x) b') = e_i b (x) b'   if eps_i(b) >  phi_i(b'), else b (x) e_i b'
      f_i(b (x) b') = f_i b (x) b'   if eps_i(b) >= phi_i(b'), else b (x) f_i b'

  extended associatively to longer products.
* Supported factors: B^{1,1} in both types; B^{r,1} (columns, r <= n+1)
  and B^{1,s} (rows) in type A.  Type A factors carry affine 0-arrows
  realised by promotion: e_0 = pr^{-1} o e_1 o pr where pr shifts letter
  values cyclically.  Type C factors have classical arrows only.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import combinations, combinations_with_replacement, product as iproduct

from .errors import CapExceeded, UnsupportedError

VERTEX_CAP = 2 * 10 ** 6


# ---------------------------------------------------------------------------
# letters

def letters_of(kind: str, n: int) -> tuple[int, ...]:
    """Type A: 1..n+1.  Type C: 1..n then the barred letters encoded -n..-1
    (so -k prints as k-bar); crystal order is 1,..,n,nbar,..,1bar."""
    if kind == "A":
        return tuple(range(1, n + 2))
    return tuple(range(1, n + 1)) + tuple(range(-n, 0))


def letter_weight(kind: str, n: int, b: int) -> tuple[int, ...]:
    if kind == "A":
        return tuple(1 if j == b else 0 for j in range(1, n + 2))
    k = abs(b)
    s = 1 if b > 0 else -1
    return tuple(s if j == k else 0 for j in range(1, n + 1))


def letter_f(kind: str, n: int, i: int, b: int) -> int | None:
    """The arrow b --i--> from the classical crystal of the vector
    representation, or None."""
    if kind == "A":
        return b + 1 if b == i else None
    if i < n:
        if b == i:
            return i + 1
        if b == -(i + 1):
            return -i
        return None
    return -n if b == n else None


def letter_e(kind: str, n: int, i: int, b: int) -> int | None:
    if kind == "A":
        return b - 1 if b == i + 1 else None
    if i < n:
        if b == i + 1:
            return i
        if b == -i:
            return -(i + 1)
        return None
    return n if b == -n else None


def letter_arrow(kind: str, n: int, i: int, b: int, direction: str) -> int | None:
    if direction == "f":
        return letter_f(kind, n, i, b)
    if direction == "e":
        return letter_e(kind, n, i, b)
    raise ValueError(f"direction must be 'e' or 'f', got {direction!r}")


def letter_str(b: int) -> str:
    return str(b) if b > 0 else f"{-b}b"


# ---------------------------------------------------------------------------
# generic tensor-rule plumbing, used both for letters inside a factor and
# for factors inside a word

def _combine_stats(stats: list[tuple[int, int, int]]) -> tuple[int, int, int]:
    """Fold (eps, phi, <h_i, wt>) triples of the items of a product, given
    left to right, into the triple of the whole product."""
    E, P, H = 0, 0, 0  # stats of the (initially empty) right tail
    for eb, pb, hb in reversed(stats):
        E = max(E, eb - H)
        P = max(pb, P + hb)
        H += hb
    return E, P, H


def _route(stats: list[tuple[int, int, int]], direction: str) -> int | None:
    """Index of the item an arrow acts on, or None when the product-level
    string is empty in that direction."""
    if not stats:
        return None
    # phi/eps of suffixes, right to left
    m = len(stats)
    suffix = [(0, 0, 0)] * (m + 1)
    E, P, H = 0, 0, 0
    for k in range(m - 1, -1, -1):
        eb, pb, hb = stats[k]
        E = max(E, eb - H)
        P = max(pb, P + hb)
        H += hb
        suffix[k] = (E, P, H)
    if direction == "e" and suffix[0][0] == 0:
        return None
    if direction == "f" and suffix[0][1] == 0:
        return None
    for j in range(m - 1):
        eps_left = stats[j][0]
        phi_tail = suffix[j + 1][1]
        if direction == "e":
            if eps_left > phi_tail:
                return j
        else:
            if eps_left >= phi_tail:
                return j
    return m - 1


# ---------------------------------------------------------------------------
# factors

@dataclass(frozen=True)
class FactorDescriptor:
    """One tensor factor B^{r,s}.  Only (1,1) [both types], (r,1) and (1,s)
    [type A] are constructible."""

    kind: str
    n: int
    r: int = 1
    s: int = 1

    def __post_init__(self):
        if self.kind not in ("A", "C"):
            raise UnsupportedError(f"unsupported type {self.kind!r}")
        if self.n < 1:
            raise UnsupportedError("rank must be >= 1")
        if self.r < 1 or self.s < 1:
            raise UnsupportedError("factor indices must be >= 1")
        if self.r > 1 and self.s > 1:
            raise UnsupportedError(
                f"B^{{{self.r},{self.s}}} is not supported")
        if self.kind == "C" and (self.r, self.s) != (1, 1):
            raise UnsupportedError(
                "only B^{1,1} factors are supported in type C")
        if self.kind == "A" and self.r > self.n + 1:
            raise UnsupportedError(
                f"column height {self.r} exceeds n+1 = {self.n + 1}")

    @property
    def boxes(self) -> int:
        return self.r * self.s

    def __str__(self) -> str:
        return f"B[{self.kind}{self.n}]^({self.r},{self.s})"


@dataclass(frozen=True)
class Factor:
    """An element of one factor crystal, as its canonical letter tuple in
    display order: columns strictly decreasing, rows weakly increasing."""

    desc: FactorDescriptor
    letters: tuple[int, ...]

    def __str__(self) -> str:
        return "".join(letter_str(b) for b in self.letters)


@cache
def factor_elements(desc: FactorDescriptor) -> tuple[Factor, ...]:
    kind, n = desc.kind, desc.n
    if desc.r > 1:
        return tuple(Factor(desc, tuple(sorted(c, reverse=True)))
                     for c in combinations(range(1, n + 2), desc.r))
    if desc.s > 1:
        return tuple(Factor(desc, c)
                     for c in combinations_with_replacement(range(1, n + 2), desc.s))
    order = letters_of(kind, n)
    return tuple(Factor(desc, (b,)) for b in order)


@cache
def factor_weight(x: Factor) -> tuple[int, ...]:
    kind, n = x.desc.kind, x.desc.n
    dim = n + 1 if kind == "A" else n
    w = [0] * dim
    for b in x.letters:
        for j, c in enumerate(letter_weight(kind, n, b)):
            w[j] += c
    return tuple(w)


def _letter_stats(kind: str, n: int, i: int, b: int) -> tuple[int, int, int]:
    e = 1 if letter_e(kind, n, i, b) is not None else 0
    f = 1 if letter_f(kind, n, i, b) is not None else 0
    return e, f, f - e


def _canonical(desc: FactorDescriptor, letters: tuple[int, ...]) -> tuple[int, ...]:
    if desc.r > 1:
        return tuple(sorted(letters, reverse=True))
    if desc.s > 1:
        return tuple(sorted(letters))
    return letters


def _promote(x: Factor) -> Factor:
    m = x.desc.n + 1
    shifted = tuple(b % m + 1 for b in x.letters)
    return Factor(x.desc, _canonical(x.desc, shifted))


def _demote(x: Factor) -> Factor:
    m = x.desc.n + 1
    shifted = tuple((b - 2) % m + 1 for b in x.letters)
    return Factor(x.desc, _canonical(x.desc, shifted))


@cache
def factor_arrow(x: Factor, i: int, direction: str) -> Factor | None:
    """e_i / f_i on one factor; i = 0 (type A only) goes through promotion."""
    kind, n = x.desc.kind, x.desc.n
    if i == 0:
        if kind != "A":
            raise UnsupportedError("affine arrows are type A only")
        y = factor_arrow(_promote(x), 1, direction)
        return None if y is None else _demote(y)
    stats = [_letter_stats(kind, n, i, b) for b in x.letters]
    j = _route(stats, direction)
    if j is None:
        return None
    nb = letter_arrow(kind, n, i, x.letters[j], direction)
    if nb is None:
        return None
    letters = x.letters[:j] + (nb,) + x.letters[j + 1:]
    return Factor(x.desc, _canonical(x.desc, letters))


@cache
def factor_stats(x: Factor, i: int) -> tuple[int, int, int]:
    """(eps_i, phi_i, phi_i - eps_i) of a factor element."""
    kind, n = x.desc.kind, x.desc.n
    if i == 0:
        e, y = 0, x
        while (z := factor_arrow(y, 0, "e")) is not None:
            e, y = e + 1, z
        f, y = 0, x
        while (z := factor_arrow(y, 0, "f")) is not None:
            f, y = f + 1, z
        return e, f, f - e
    E, P, H = _combine_stats(
        [_letter_stats(kind, n, i, b) for b in x.letters])
    return E, P, H


# ---------------------------------------------------------------------------
# tensor words

@dataclass(frozen=True)
class TensorWord:
    """An element b_L (x) ... (x) b_1, stored left to right."""

    kind: str
    n: int
    factors: tuple[Factor, ...]

    @property
    def length(self) -> int:
        return len(self.factors)

    def shape(self) -> tuple[FactorDescriptor, ...]:
        return tuple(x.desc for x in self.factors)

    def flatten(self) -> tuple[int, ...]:
        """The image in B(Lambda_1)^(x)M: all letters, display order."""
        return tuple(b for x in self.factors for b in x.letters)

    def __str__(self) -> str:
        if not self.factors:
            return "(empty)"
        return "(x)".join(str(x) for x in self.factors)


def word(factors: tuple[Factor, ...], kind: str | None = None,
         n: int | None = None) -> TensorWord:
    if factors:
        kind, n = factors[0].desc.kind, factors[0].desc.n
        assert all(x.desc.kind == kind and x.desc.n == n for x in factors)
    elif kind is None or n is None:
        raise ValueError("empty word needs an explicit kind and rank")
    return TensorWord(kind, n, tuple(factors))


def letters_word(kind: str, n: int, letters: tuple[int, ...]) -> TensorWord:
    """A word of single-box factors, handy in tests."""
    d = FactorDescriptor(kind, n)
    return TensorWord(kind, n, tuple(Factor(d, (b,)) for b in letters))


def word_weight(w: TensorWord) -> tuple[int, ...]:
    dim = w.n + 1 if w.kind == "A" else w.n
    out = [0] * dim
    for x in w.factors:
        for j, c in enumerate(factor_weight(x)):
            out[j] += c
    return tuple(out)


def string_stats(w: TensorWord, i: int) -> tuple[int, int]:
    """(eps_i, phi_i) of a tensor word."""
    E, P, _ = _combine_stats([factor_stats(x, i) for x in w.factors])
    return E, P


def tensor_arrow(w: TensorWord, i: int, direction: str) -> TensorWord | None:
    stats = [factor_stats(x, i) for x in w.factors]
    j = _route(stats, direction)
    if j is None:
        return None
    y = factor_arrow(w.factors[j], i, direction)
    if y is None:
        return None
    return TensorWord(w.kind, w.n, w.factors[:j] + (y,) + w.factors[j + 1:])


def word_e(w: TensorWord, i: int) -> TensorWord | None:
    return tensor_arrow(w, i, "e")


def word_f(w: TensorWord, i: int) -> TensorWord | None:
    return tensor_arrow(w, i, "f")


def affine_arrow_A(w: TensorWord, direction: str) -> TensorWord | None:
    if w.kind != "A":
        raise UnsupportedError("affine arrows are type A only")
    return tensor_arrow(w, 0, direction)


def reflection_s(w: TensorWord, i: int) -> TensorWord:
    """The crystal reflection s_i: slide to the far end of the i-string."""
    eps, phi = string_stats(w, i)
    out = w
    if phi > eps:
        for _ in range(phi - eps):
            out = tensor_arrow(out, i, "f")
    elif eps > phi:
        for _ in range(eps - phi):
            out = tensor_arrow(out, i, "e")
    assert out is not None
    return out


def coroot_weight_pairing(w: TensorWord, i: int) -> int:
    """<h_i, wt(word)>, with the affine i = 0 read through the classical
    projection (type A: last coordinate minus first)."""
    wt = word_weight(w)
    if i == 0:
        if w.kind != "A":
            raise UnsupportedError("affine pairing is type A only")
        return wt[-1] - wt[0]
    if w.kind == "A" or i < w.n:
        return wt[i - 1] - wt[i]
    return wt[-1]


def is_classically_restricted(w: TensorWord) -> bool:
    return all(string_stats(w, i)[0] == 0 for i in range(1, w.n + 1))


# ---------------------------------------------------------------------------
# path sets and components

def shape_elements(shape: tuple[FactorDescriptor, ...],
                   cap: int | None = None):
    cap = VERTEX_CAP if cap is None else cap
    total = 1
    for d in shape:
        total *= len(factor_elements(d))
        if total > cap:
            raise CapExceeded(f"tensor product has more than {cap} elements")
    kind = shape[0].kind if shape else "A"
    n = shape[0].n if shape else 1
    for combo in iproduct(*(factor_elements(d) for d in shape)):
        yield TensorWord(kind, n, combo)


def enumerate_paths(shape: tuple[FactorDescriptor, ...],
                    weight: tuple[int, ...],
                    restriction: str = "none",
                    level: int | None = None,
                    cap: int | None = None) -> list[TensorWord]:
    """The path sets: unrestricted (weight only), classically restricted
    (killed by every classical e_i), level restricted (additionally killed
    by e_0^{level+1})."""
    if restriction not in ("none", "classical", "level"):
        raise ValueError(f"unknown restriction {restriction!r}")
    if restriction == "level":
        if level is None:
            raise ValueError("level restriction needs a level")
        if shape and shape[0].kind != "A":
            raise UnsupportedError("level restriction is type A only")
    out = []
    for w in shape_elements(shape, cap):
        if word_weight(w) != tuple(weight):
            continue
        if restriction in ("classical", "level") and not is_classically_restricted(w):
            continue
        if restriction == "level" and string_stats(w, 0)[0] > level:
            continue
        out.append(w)
    return out


@dataclass
class CrystalGraph:
    """A finite crystal as an explicit graph: f-arrows per color."""

    vertices: tuple[TensorWord, ...]
    arrows: dict[int, dict[TensorWord, TensorWord]]
    highest: TensorWord | None = None


def build_component(seed: TensorWord, colors: tuple[int, ...] | None = None,
                    cap: int | None = None) -> CrystalGraph:
    """BFS closure of the seed under e_i and f_i for the given colors
    (default: the classical colors)."""
    cap = VERTEX_CAP if cap is None else cap
    if colors is None:
        colors = tuple(range(1, seed.n + 1))
    seen = {seed}
    frontier = [seed]
    arrows: dict[int, dict[TensorWord, TensorWord]] = {i: {} for i in colors}
    while frontier:
        nxt = []
        for v in frontier:
            for i in colors:
                for direction in ("e", "f"):
                    u = tensor_arrow(v, i, direction)
                    if u is None:
                        continue
                    if direction == "f":
                        arrows[i][v] = u
                    else:
                        arrows[i][u] = v
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
                        if len(seen) > cap:
                            raise CapExceeded(
                                f"component exceeded vertex cap {cap}")
        frontier = nxt
    hw = [v for v in seen
          if all(tensor_arrow(v, i, "e") is None for i in colors)]
    highest = hw[0] if len(hw) == 1 else None
    return CrystalGraph(tuple(sorted(seen, key=str)), arrows, highest)


@cache
def highest_weight_element(desc: FactorDescriptor) -> Factor:
    """u(B) of one factor: its unique classical highest weight element."""
    for x in factor_elements(desc):
        if all(factor_arrow(x, i, "e") is None for i in range(1, desc.n + 1)):
            return x
    raise AssertionError("factor crystal has no highest weight element")


def crystal_level(shape: tuple[FactorDescriptor, ...],
                  cap: int | None = None) -> int:
    """Level of a type A finite crystal: min over elements of the sum of
    eps_i over all affine colors (the dual marks of A_n^(1) are all 1)."""
    if not shape or shape[0].kind != "A":
        raise UnsupportedError("crystal level needs type A affine arrows")
    n = shape[0].n
    best = None
    for w in shape_elements(shape, cap):
        v = sum(string_stats(w, i)[0] for i in range(0, n + 1))
        best = v if best is None else min(best, v)
    assert best is not None
    return best
