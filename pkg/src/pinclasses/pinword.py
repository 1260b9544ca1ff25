"""Pin words and eventually periodic pin sequences.

A pin word is a quadrant numeral (1-4) followed by direction letters that
alternate between horizontal (l, r) and vertical (u, d) alignment.  A pin
spec ``prefix(cycle)*`` describes the infinite eventually periodic sequence
``prefix cycle cycle ...``; cycles therefore have even length.

Positions are 1-based: position 1 is the numeral, position t >= 2 is a
letter.  The numeral of a factor w_{i,j} with i >= 2 is the quadrant of the
i-th placed point, obtained from the pi-map geometry, never from a lookup
table keyed on letter pairs.
"""

from __future__ import annotations

import re

from .errors import (
    AlignmentViolation,
    EmptyInput,
    IndexOutOfRange,
    MalformedSyntax,
    NonAlternatingCycle,
)

LETTERS = "udlr"
HORIZONTAL = frozenset("lr")
VERTICAL = frozenset("ud")


def _alignment(letter: str) -> int:
    return 0 if letter in HORIZONTAL else 1


def _check_alternation(letters: str) -> None:
    for a, b in zip(letters, letters[1:]):
        if _alignment(a) == _alignment(b):
            raise AlignmentViolation(f"letters {a!r}{b!r} share an axis")


class PinWord:
    """Immutable finite pin word: numeral plus alternating letters."""

    __slots__ = ("numeral", "letters")

    def __init__(self, numeral: int, letters: str = ""):
        numeral = int(numeral)
        if numeral not in (1, 2, 3, 4):
            raise MalformedSyntax(f"initial numeral must be 1-4, got {numeral}")
        letters = str(letters)
        bad = set(letters) - set(LETTERS)
        if bad:
            raise MalformedSyntax(f"invalid letters {sorted(bad)!r}")
        _check_alternation(letters)
        object.__setattr__(self, "numeral", numeral)
        object.__setattr__(self, "letters", letters)

    def __setattr__(self, name, value):
        raise AttributeError("PinWord is immutable")

    @property
    def length(self) -> int:
        """Number of points placed (numeral counts as one symbol)."""
        return 1 + len(self.letters)

    def symbol(self, t: int) -> str:
        """Symbol at 1-based position t."""
        if t == 1:
            return str(self.numeral)
        if 2 <= t <= self.length:
            return self.letters[t - 2]
        raise IndexOutOfRange(f"position {t} outside 1..{self.length}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, PinWord):
            return NotImplemented
        return self.numeral == other.numeral and self.letters == other.letters

    def __hash__(self) -> int:
        return hash((self.numeral, self.letters))

    def __str__(self) -> str:
        return f"{self.numeral}{self.letters}"

    def __repr__(self) -> str:
        return f"PinWord({str(self)!r})"

    def __reduce__(self):
        return (PinWord, (self.numeral, self.letters))


_WORD_RE = re.compile(r"([1-4])([udlr]*)\Z")
_SPEC_RE = re.compile(r"([1-4])([udlr]*)\(([udlr]+)\)\*\Z")


def _normalize(text: str) -> str:
    s = re.sub(r"\s+", "", text).lower()
    if not s:
        raise EmptyInput("empty pin word text")
    return s


def parse_pin_word(text: str) -> PinWord:
    """Parse e.g. ``2lurdld`` (whitespace- and case-insensitive)."""
    s = _normalize(text)
    m = _WORD_RE.match(s)
    if not m:
        raise MalformedSyntax(f"cannot parse {text!r} as a pin word")
    return PinWord(int(m.group(1)), m.group(2))


class PinSpec:
    """Eventually periodic pin sequence: finite prefix + repeating cycle.

    ``prefix`` is a PinWord (at least the numeral); ``cycle`` is a non-empty
    letter string repeated forever after the prefix.  The text as given is
    preserved for display; equality uses the normal form of the infinite
    word (minimal period, maximal pull-back of prefix letters into the
    cycle), so ``1r(ur)*`` equals ``1(ru)*`` while ``1(ru)*`` and ``1(ur)*``
    stay distinct.
    """

    __slots__ = ("prefix", "cycle", "_canon")

    def __init__(self, prefix: PinWord, cycle: str):
        cycle = str(cycle)
        if not cycle:
            raise MalformedSyntax("cycle must be non-empty")
        bad = set(cycle) - set(LETTERS)
        if bad:
            raise MalformedSyntax(f"invalid letters {sorted(bad)!r} in cycle")
        # alternation inside the cycle, at the wrap-around, and at the junction
        for a, b in zip(cycle, cycle[1:]):
            if _alignment(a) == _alignment(b):
                raise NonAlternatingCycle(f"cycle letters {a!r}{b!r} share an axis")
        if _alignment(cycle[-1]) == _alignment(cycle[0]):
            raise NonAlternatingCycle(
                f"cycle {cycle!r} fails alternation at the wrap-around"
            )
        junction = prefix.letters[-1] if prefix.letters else None
        if junction is not None and _alignment(junction) == _alignment(cycle[0]):
            raise NonAlternatingCycle(
                f"prefix ending {junction!r} fails alternation into cycle {cycle!r}"
            )
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "cycle", cycle)
        object.__setattr__(self, "_canon", None)

    def __setattr__(self, name, value):
        raise AttributeError("PinSpec is immutable")

    @property
    def prefix_length(self) -> int:
        """Symbols in the prefix, numeral included."""
        return self.prefix.length

    @property
    def cycle_length(self) -> int:
        return len(self.cycle)

    def symbol(self, t: int) -> str:
        """Symbol of the infinite word at 1-based position t."""
        if t < 1:
            raise IndexOutOfRange(f"position {t} < 1")
        p = self.prefix_length
        if t <= p:
            return self.prefix.symbol(t)
        return self.cycle[(t - p - 1) % len(self.cycle)]

    def initial_word(self, n: int) -> PinWord:
        """The finite word w_{1,n} of the first n symbols."""
        if n < 1:
            raise IndexOutOfRange(f"length {n} < 1")
        letters = "".join(self.symbol(t) for t in range(2, n + 1))
        return PinWord(self.numeral, letters)

    @property
    def numeral(self) -> int:
        return self.prefix.numeral

    def canonical_key(self):
        """Normal form of the infinite word, for equality and caching."""
        key = object.__getattribute__(self, "_canon")
        if key is None:
            cyc = self.cycle
            # minimal period
            for d in range(1, len(cyc) + 1):
                if len(cyc) % d == 0 and cyc == cyc[:d] * (len(cyc) // d):
                    cyc = cyc[:d]
                    break
            pre = self.prefix.letters
            while pre and pre[-1] == cyc[-1]:
                pre = pre[:-1]
                cyc = cyc[-1] + cyc[:-1]
            key = (self.prefix.numeral, pre, cyc)
            object.__setattr__(self, "_canon", key)
        return key

    def __eq__(self, other) -> bool:
        if not isinstance(other, PinSpec):
            return NotImplemented
        return self.canonical_key() == other.canonical_key()

    def __hash__(self) -> int:
        return hash(self.canonical_key())

    def __str__(self) -> str:
        return f"{self.prefix}({self.cycle})*"

    def __repr__(self) -> str:
        return f"PinSpec({str(self)!r})"

    def __reduce__(self):
        return (PinSpec, (self.prefix, self.cycle))


def parse_pin_spec(text: str) -> PinSpec:
    """Parse e.g. ``1(ru)*`` or ``2ru ld (lu)*`` (whitespace/case-insensitive)."""
    s = _normalize(text)
    m = _SPEC_RE.match(s)
    if not m:
        raise MalformedSyntax(f"cannot parse {text!r} as a pin spec (prefix(cycle)*)")
    return PinSpec(PinWord(int(m.group(1)), m.group(2)), m.group(3))


def pin_factor(spec: PinSpec, i: int, j: int) -> PinWord:
    """The pin factor w_{i,j}: letters i+1..j with the numeral of point p_i.

    For i = 1 this is the literal initial segment; for i >= 2 the leading
    symbol is replaced by the quadrant of p_i in the pi-map diagram.
    """
    if i < 1:
        raise IndexOutOfRange(f"start position {i} < 1")
    if j < i:
        raise IndexOutOfRange(f"end position {j} before start {i}")
    letters = "".join(spec.symbol(t) for t in range(i + 1, j + 1))
    if i == 1:
        return PinWord(spec.numeral, letters)
    from . import pimap

    numeral = pimap.point_quadrant(spec.initial_word(i), i)
    return PinWord(numeral, letters)


def left_truncate(spec: PinSpec, n: int) -> PinSpec:
    """Drop the first n-1 symbols of the realized sequence, renumbering the head."""
    if n < 1:
        raise IndexOutOfRange(f"truncation point {n} < 1")
    if n == 1:
        return spec
    from . import pimap

    numeral = pimap.point_quadrant(spec.initial_word(n), n)
    p, c = spec.prefix_length, spec.cycle
    if n <= p:
        rest = "".join(spec.symbol(t) for t in range(n + 1, p + 1))
        return PinSpec(PinWord(numeral, rest), c)
    offset = (n - p - 1) % len(c)
    rotated = c[offset + 1 :] + c[: offset + 1]
    return PinSpec(PinWord(numeral), rotated)


def _factor_windows(spec: PinSpec) -> tuple[int, int]:
    """(first recurrent start, last start needed): factors starting at or
    beyond prefix_length+2 sit in the pure-cycle era and recur with period
    |cycle|; one extra cycle of starts is scanned as insurance."""
    p, c = spec.prefix_length, spec.cycle_length
    return p + 2, p + 2 * c + 1


def enumerate_pin_factors(spec: PinSpec, n: int, mode: str = "all") -> set[PinWord]:
    """Distinct pin factors of length n; mode 'all' or 'recurrent'."""
    if mode not in ("all", "recurrent"):
        raise ValueError(f"mode must be 'all' or 'recurrent', got {mode!r}")
    if n < 1:
        raise IndexOutOfRange(f"factor length {n} < 1")
    from . import pimap

    lo, hi = _factor_windows(spec)
    first = 1 if mode == "all" else lo
    word = spec.initial_word(hi + n - 1)
    quads = pimap.all_point_quadrants(word)
    out: set[PinWord] = set()
    for i in range(first, hi + 1):
        letters = "".join(spec.symbol(t) for t in range(i + 1, i + n))
        numeral = spec.numeral if i == 1 else quads[i]
        out.add(PinWord(numeral, letters))
    return out


def is_recurrent(spec) -> bool:
    """True iff every pin factor occurs infinitely often.

    Decided by comparing all-mode and recurrent-mode factor sets for every
    length up to |prefix| + 2|cycle| + 2; beyond that window the comparison
    is forced by periodicity on both sides.
    """
    if not isinstance(spec, PinSpec):
        spec = parse_pin_spec(spec)
    limit = spec.prefix_length + 2 * spec.cycle_length + 2
    for n in range(1, limit + 1):
        if enumerate_pin_factors(spec, n, "all") != enumerate_pin_factors(
            spec, n, "recurrent"
        ):
            return False
    return True
