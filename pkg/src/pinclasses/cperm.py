"""Centred permutations: containment, the box-sum algebra, canonical decomposition.

A centred permutation of length n is a permutation of {1..n+1} in one-line
order together with one designated origin entry; the origin does not count
toward the length.  Text form uses square brackets for the origin, e.g.
``426[3]51``; commas separate entries once values reach 10.
"""

from __future__ import annotations

import re
from itertools import combinations

from .errors import (
    EmptyInput,
    EmptyPermutation,
    MalformedSyntax,
    MultipleOrigins,
    NoOrigin,
    NonIndecomposableElement,
    NotAPermutation,
)


class CentredPerm:
    """Immutable centred permutation.

    ``filled`` is the one-line tuple over {1..n+1}; ``origin_index`` is the
    1-based position of the origin entry.  Equality compares both, so
    ``14[2]3`` and ``1[2]43`` are distinct values.
    """

    __slots__ = ("filled", "origin_index")

    def __init__(self, filled, origin_index: int):
        filled = tuple(int(v) for v in filled)
        m = len(filled)
        if m == 0 or sorted(filled) != list(range(1, m + 1)):
            raise NotAPermutation(f"{filled!r} is not a permutation of 1..{m}")
        if not 1 <= origin_index <= m:
            raise NotAPermutation(f"origin index {origin_index} outside 1..{m}")
        object.__setattr__(self, "filled", filled)
        object.__setattr__(self, "origin_index", origin_index)

    def __setattr__(self, name, value):
        raise AttributeError("CentredPerm is immutable")

    @property
    def length(self) -> int:
        """Number of non-origin points."""
        return len(self.filled) - 1

    @property
    def origin_value(self) -> int:
        return self.filled[self.origin_index - 1]

    def points(self):
        """All points as (x, y) = (position, value), origin included."""
        return [(i, v) for i, v in enumerate(self.filled, 1)]

    def origin_point(self):
        return (self.origin_index, self.origin_value)

    def quadrant(self, position: int) -> int:
        """Quadrant (1..4, anticlockwise from upper right) of a non-origin entry."""
        if position == self.origin_index:
            raise ValueError("the origin has no quadrant")
        x0, y0 = self.origin_point()
        x, y = position, self.filled[position - 1]
        if x > x0:
            return 1 if y > y0 else 4
        return 2 if y > y0 else 3

    def profile(self) -> "QuadrantProfile":
        return QuadrantProfile.of(self)

    def one_line(self) -> str:
        parts = [
            f"[{v}]" if i == self.origin_index else str(v)
            for i, v in enumerate(self.filled, 1)
        ]
        return ",".join(parts) if len(self.filled) > 9 else "".join(parts)

    def key(self):
        """Deterministic sort key."""
        return (self.length, self.filled, self.origin_index)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CentredPerm):
            return NotImplemented
        return self.filled == other.filled and self.origin_index == other.origin_index

    def __hash__(self) -> int:
        return hash((self.filled, self.origin_index))

    def __str__(self) -> str:
        return self.one_line()

    def __repr__(self) -> str:
        return f"CentredPerm({self.one_line()!r})"

    def to_json(self) -> dict:
        return {"filled": list(self.filled), "origin": self.origin_index}

    @classmethod
    def from_json(cls, data) -> "CentredPerm":
        return cls(data["filled"], data["origin"])

    def __reduce__(self):
        return (CentredPerm, (self.filled, self.origin_index))


_ENTRY_RE = re.compile(r"\[(\d+)\]|(\d)")


def from_oneline(text: str) -> CentredPerm:
    """Parse bracket notation, e.g. ``426[3]51`` or ``4,2,6,[3],5,1``."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise EmptyInput("empty centred permutation text")
    if "," in s:
        pieces = s.split(",")
    else:
        pieces = _ENTRY_RE.findall(s)
        joined = "".join(f"[{a}]" if a else b for a, b in pieces)
        if joined != s:
            raise MalformedSyntax(f"cannot parse {text!r} as a centred permutation")
        pieces = [f"[{a}]" if a else b for a, b in pieces]
    filled = []
    origin = None
    for i, piece in enumerate(pieces, 1):
        m = re.fullmatch(r"\[(\d+)\]|(\d+)", piece)
        if not m:
            raise MalformedSyntax(f"bad entry {piece!r} in {text!r}")
        if m.group(1) is not None:
            if origin is not None:
                raise MultipleOrigins(f"more than one bracketed entry in {text!r}")
            origin = i
            filled.append(int(m.group(1)))
        else:
            filled.append(int(m.group(2)))
    if origin is None:
        raise NoOrigin(f"no bracketed origin entry in {text!r}")
    return CentredPerm(filled, origin)


def centred_pattern(points, origin_point) -> CentredPerm:
    """Standardize a point set (distinct x, distinct y) into a CentredPerm.

    ``origin_point`` must be one of ``points``.
    """
    xs = sorted(p[0] for p in points)
    ys = sorted(p[1] for p in points)
    xrank = {x: i for i, x in enumerate(xs, 1)}
    yrank = {y: i for i, y in enumerate(ys, 1)}
    filled = [0] * len(points)
    for x, y in points:
        filled[xrank[x] - 1] = yrank[y]
    return CentredPerm(filled, xrank[origin_point[0]])


EMPTY = CentredPerm([1], 1)

# The four single-point centred permutations, one per quadrant.
QUADRANT_POINT = {
    1: from_oneline("[1]2"),
    2: from_oneline("2[1]"),
    3: from_oneline("1[2]"),
    4: from_oneline("[2]1"),
}


class QuadrantProfile:
    """Which quadrants a centred permutation occupies, with point counts."""

    __slots__ = ("occupied", "counts")

    def __init__(self, counts):
        counts = tuple(int(c) for c in counts)
        if len(counts) != 4 or any(c < 0 for c in counts):
            raise ValueError("counts must be four non-negative integers")
        object.__setattr__(self, "counts", counts)
        object.__setattr__(
            self, "occupied", frozenset(q for q in (1, 2, 3, 4) if counts[q - 1])
        )

    def __setattr__(self, name, value):
        raise AttributeError("QuadrantProfile is immutable")

    @classmethod
    def of(cls, p: CentredPerm) -> "QuadrantProfile":
        counts = [0, 0, 0, 0]
        for i in range(1, len(p.filled) + 1):
            if i != p.origin_index:
                counts[p.quadrant(i) - 1] += 1
        return cls(counts)

    def merge(self, other: "QuadrantProfile") -> "QuadrantProfile":
        return QuadrantProfile([a + b for a, b in zip(self.counts, other.counts)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuadrantProfile):
            return NotImplemented
        return self.counts == other.counts

    def __hash__(self) -> int:
        return hash(self.counts)

    def __repr__(self) -> str:
        return f"QuadrantProfile({list(self.counts)!r})"


def contains(big: CentredPerm, small: CentredPerm) -> bool:
    """True iff small embeds into big order-isomorphically with origins matched."""
    if small.length > big.length:
        return False
    kb, ks = big.origin_index, small.origin_index
    left_need, right_need = ks - 1, len(small.filled) - ks
    big_left = range(1, kb)
    big_right = range(kb + 1, len(big.filled) + 1)
    if left_need > len(big_left) or right_need > len(big_right):
        return False
    target = small.filled
    for left in combinations(big_left, left_need):
        for right in combinations(big_right, right_need):
            chosen = list(left) + [kb] + list(right)
            values = [big.filled[i - 1] for i in chosen]
            ranks = {v: r for r, v in enumerate(sorted(values), 1)}
            if all(ranks[v] == t for v, t in zip(values, target)):
                return True
    return False


def box_sum(inner: CentredPerm, outer: CentredPerm) -> CentredPerm:
    """Inflate outer's origin with inner; inner's origin becomes the result's."""
    ko, vo = outer.origin_index, outer.origin_value
    mi = len(inner.filled)
    shift = mi - 1

    def relocate(v: int) -> int:
        return v if v < vo else v + shift

    filled = (
        [relocate(v) for v in outer.filled[: ko - 1]]
        + [v + vo - 1 for v in inner.filled]
        + [relocate(v) for v in outer.filled[ko:]]
    )
    return CentredPerm(filled, ko - 1 + inner.origin_index)


def _is_interval(p: CentredPerm, a: int, b: int) -> bool:
    """Positions a..b contiguous in value and containing the origin."""
    if not a <= p.origin_index <= b:
        return False
    vals = p.filled[a - 1 : b]
    return max(vals) - min(vals) == b - a


def _interval_pattern(p: CentredPerm, a: int, b: int) -> CentredPerm:
    pts = [(i, p.filled[i - 1]) for i in range(a, b + 1)]
    return centred_pattern(pts, p.origin_point())


def _contract(p: CentredPerm, a: int, b: int) -> CentredPerm:
    """Replace the ∘-interval at positions a..b by a single origin point."""
    block_vals = p.filled[a - 1 : b]
    vlo = min(block_vals)
    pts = [(i, v) for i, v in enumerate(p.filled, 1) if not a <= i <= b]
    origin = (a, vlo)
    return centred_pattern(pts + [origin], origin)


def minimal_centred_intervals(p: CentredPerm) -> list[tuple[int, int]]:
    """Minimal non-trivial ∘-intervals of p, as 1-based position ranges.

    Always one or two ranges; when two, each is one-quadrant and they sit in
    opposite quadrants.  The full range is returned when nothing smaller is a
    ∘-interval (p then being ⊞-indecomposable).
    """
    if p.length == 0:
        raise EmptyPermutation("length-0 centred permutation has no non-trivial interval")
    m = len(p.filled)
    found: list[tuple[int, int]] = []
    for width in range(1, m):
        for a in range(max(1, p.origin_index - width), p.origin_index + 1):
            b = a + width
            if b > m:
                continue
            if _is_interval(p, a, b):
                if not any(a <= fa and fb <= b for fa, fb in found):
                    found.append((a, b))
    # prune non-minimal (every interval contains the origin, so containment
    # of ranges is plain nesting)
    minimal = [
        (a, b)
        for a, b in found
        if not any((fa, fb) != (a, b) and a <= fa and fb <= b for fa, fb in found)
    ]
    return sorted(minimal)


def is_box_indecomposable(p: CentredPerm) -> bool:
    """True iff p has no proper non-trivial ∘-interval."""
    if p.length == 0:
        raise EmptyPermutation("indecomposability is defined for length ≥ 1")
    m = len(p.filled)
    for a in range(1, p.origin_index + 1):
        for b in range(p.origin_index, m + 1):
            if (a, b) != (1, m) and b > a and _is_interval(p, a, b):
                return False
    return True


def one_quadrant(p: CentredPerm):
    """The single quadrant p occupies, or None if zero or several."""
    occ = p.profile().occupied
    if len(occ) == 1:
        return next(iter(occ))
    return None


def commutes(a: CentredPerm, b: CentredPerm) -> bool:
    """True iff a ⊞ b = b ⊞ a: equal, or one-quadrant from opposite quadrants."""
    if a == b:
        return True
    qa, qb = one_quadrant(a), one_quadrant(b)
    return qa is not None and qb is not None and abs(qa - qb) == 2


def box_decompose(p: CentredPerm) -> list[CentredPerm]:
    """Greedy canonical ⊞-decomposition into indecomposables.

    When two minimal ∘-intervals exist the one in the lower-numbered quadrant
    is extracted first.  Folding box_sum over the result reproduces p.
    """
    out: list[CentredPerm] = []
    cur = p
    while cur.length > 0:
        ranges = minimal_centred_intervals(cur)
        if len(ranges) == 1:
            a, b = ranges[0]
        else:
            pats = [(_interval_pattern(cur, a, b), (a, b)) for a, b in ranges]
            pats.sort(key=lambda t: one_quadrant(t[0]))
            a, b = pats[0][1]
        if (a, b) == (1, len(cur.filled)):
            out.append(cur)
            break
        out.append(_interval_pattern(cur, a, b))
        cur = _contract(cur, a, b)
    return out


def _sort_key(p: CentredPerm):
    q = one_quadrant(p)
    return (q if q is not None else 0, p.length, p.one_line())


def normal_form(decomposition) -> list[CentredPerm]:
    """Canonical order of a ⊞-decomposition into indecomposables.

    Adjacent commuting elements are bubbled into (quadrant, length, text)
    order; two decompositions of the same permutation normalize identically.
    """
    items = list(decomposition)
    for p in items:
        if p.length == 0 or not is_box_indecomposable(p):
            raise NonIndecomposableElement(f"{p} is not ⊞-indecomposable")
    changed = True
    while changed:
        changed = False
        for i in range(len(items) - 1):
            a, b = items[i], items[i + 1]
            if commutes(a, b) and _sort_key(b) < _sort_key(a):
                items[i], items[i + 1] = b, a
                changed = True
    return items


def adjacency_condition(profile) -> bool:
    """True iff one quadrant is occupied, or two occupied quadrants are adjacent."""
    occ = profile.occupied if isinstance(profile, QuadrantProfile) else frozenset(profile)
    if len(occ) == 1:
        return True
    return any(q in occ and (q % 4) + 1 in occ for q in (1, 2, 3, 4))


def strip_origin(p: CentredPerm) -> tuple[int, ...]:
    """The underlying (uncentred) permutation, origin removed and re-ranked."""
    vals = [v for i, v in enumerate(p.filled, 1) if i != p.origin_index]
    ranks = {v: r for r, v in enumerate(sorted(vals), 1)}
    return tuple(ranks[v] for v in vals)


def subpatterns(p: CentredPerm) -> set[CentredPerm]:
    """All centred patterns of origin-containing point subsets of p."""
    positions = [i for i in range(1, len(p.filled) + 1) if i != p.origin_index]
    origin = p.origin_point()
    out = set()
    for size in range(len(positions) + 1):
        for chosen in combinations(positions, size):
            pts = [(i, p.filled[i - 1]) for i in chosen] + [origin]
            out.add(centred_pattern(pts, origin))
    return out
