"""Brute-force enumeration oracles, independent of the generating-function
pipeline.

Three routes produce censuses of centred-permutation classes: extracting
origin-pinned subpatterns of a long initial segment (subset), composing
factor images directly (composition), and composing images of arbitrary pin
words (representation, for the complete class).  The composition route is
authoritative for recurrent specs; the subset route's stopping rule is
empirical (counts stable across two consecutive segment lengths) and flagged
as such in the description.
"""

from __future__ import annotations

from itertools import combinations

from . import _patterns
from .classify import all_pin_words
from .cperm import (
    EMPTY,
    CentredPerm,
    adjacency_condition,
    box_sum,
    from_oneline,
    strip_origin,
    subpatterns,
)
from .errors import CensusTooLarge, ConvergenceNotReached, NotRecurrent
from .pimap import diagram_points, pi_map
from .pinword import PinSpec, enumerate_pin_factors, is_recurrent, parse_pin_spec

MEMORY_GUARD = 10**7
_SUBSET_GUARD = 6
_COMPOSITION_GUARD = 10
_REPRESENTATION_GUARD = 8
_SEGMENT_GROWTH_CAP = 48


def _as_spec(spec) -> PinSpec:
    return spec if isinstance(spec, PinSpec) else parse_pin_spec(spec)


def _as_perm(p) -> CentredPerm:
    return p if isinstance(p, CentredPerm) else from_oneline(p)


class ClassCensus:
    """Counts (and retained members) of a centred class, per length."""

    __slots__ = ("description", "method", "n_max", "counts", "perms")

    def __init__(self, description: str, method: str, n_max: int, perms_by_len):
        self.description = description
        self.method = method
        self.n_max = n_max
        self.perms = {
            n: frozenset(perms_by_len.get(n, ())) for n in range(n_max + 1)
        }
        self.counts = [len(self.perms[n]) for n in range(n_max + 1)]

    def to_json(self) -> dict:
        return {"method": self.method, "counts": self.counts, "n_max": self.n_max}

    def members(self, n: int) -> list[CentredPerm]:
        return sorted(self.perms[n], key=lambda p: p.one_line())

    def __repr__(self) -> str:
        return f"ClassCensus({self.description!r}, counts={self.counts})"


def _guard(total: int, description: str) -> None:
    if total > MEMORY_GUARD:
        raise CensusTooLarge(
            f"{description} would retain more than {MEMORY_GUARD} permutations"
        )


def enumerate_class_subset(spec, n_max: int, override_guard: bool = False) -> ClassCensus:
    """Census of the pin class by subpattern extraction from long segments.

    The segment length starts at (n_max+1)*(prefix+cycle) + n_max and grows
    by one cycle until the counts repeat across two consecutive lengths.
    """
    spec = _as_spec(spec)
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    if n_max > _SUBSET_GUARD and not override_guard:
        raise CensusTooLarge(
            f"subset census depth {n_max} exceeds the guard {_SUBSET_GUARD}; "
            "pass override_guard=True to force"
        )
    period = spec.prefix_length + spec.cycle_length
    m = (n_max + 1) * period + n_max
    prev_counts = None
    for _ in range(_SEGMENT_GROWTH_CAP):
        pts = diagram_points(spec.initial_word(m))
        table = _patterns.subset_patterns(pts, pts[0], n_max)
        counts = [len(table[k]) for k in range(n_max + 1)]
        _guard(sum(counts), f"subset census of {spec}")
        if counts == prev_counts:
            return ClassCensus(
                f"subset census of {spec} (segment length {m}, empirical stop)",
                "subset",
                n_max,
                table,
            )
        prev_counts = counts
        m += spec.cycle_length
    raise ConvergenceNotReached(
        f"subset counts for {spec} still changing at segment length {m}"
    )


def _compose_census(parts, n_max: int, description: str, method: str) -> ClassCensus:
    """All ⊞-compositions with total length <= n_max of the given pieces."""
    levels: dict[int, set[CentredPerm]] = {0: {EMPTY}}
    total = 1
    for n in range(1, n_max + 1):
        current: set[CentredPerm] = set()
        for p, pieces in parts.items():
            if p > n:
                continue
            for left in levels[n - p]:
                for piece in pieces:
                    current.add(box_sum(left, piece))
        levels[n] = current
        total += len(current)
        _guard(total, description)
    return ClassCensus(description, method, n_max, levels)


def enumerate_class_composition(spec, n_max: int, override_guard: bool = False) -> ClassCensus:
    """Census of a recurrent pin class by composing factor images."""
    spec = _as_spec(spec)
    if not is_recurrent(spec):
        raise NotRecurrent(
            f"{spec} is not recurrent, so its pin class is not ⊞-closed and "
            "the composition oracle does not apply"
        )
    if n_max > _COMPOSITION_GUARD and not override_guard:
        raise CensusTooLarge(
            f"composition census depth {n_max} exceeds the guard "
            f"{_COMPOSITION_GUARD}; pass override_guard=True to force"
        )
    parts = {
        n: {pi_map(v) for v in enumerate_pin_factors(spec, n, "all")}
        for n in range(1, n_max + 1)
    }
    return _compose_census(
        parts, n_max, f"composition census of {spec}", "composition"
    )


def enumerate_pin_permutations(n_max: int, override_guard: bool = False) -> ClassCensus:
    """Census of the complete class: compositions of all pin-word images."""
    if n_max > _REPRESENTATION_GUARD and not override_guard:
        raise CensusTooLarge(
            f"representation census depth {n_max} exceeds the guard "
            f"{_REPRESENTATION_GUARD}; pass override_guard=True to force"
        )
    parts = {
        n: {pi_map(w) for w in all_pin_words(n)} for n in range(1, n_max + 1)
    }
    return _compose_census(
        parts, n_max, "complete pin-permutation census", "representation"
    )


def enumerate_closure_composition(generators, n_max: int) -> ClassCensus:
    """Census of the ⊞-closure of finitely many centred permutations."""
    gens = [_as_perm(g) for g in generators]
    if not gens:
        raise ValueError("need at least one generator")
    pieces: set[CentredPerm] = set()
    for gen in gens:
        pieces |= subpatterns(gen)
    parts: dict[int, set[CentredPerm]] = {}
    for p in pieces:
        if p.length >= 1:
            parts.setdefault(p.length, set()).add(p)
    label = ", ".join(sorted(g.one_line() for g in gens))
    return _compose_census(
        parts, n_max, f"finite-closure census of {{{label}}}", "composition"
    )


def census_adjacency(census: ClassCensus) -> bool:
    """Does the census's class satisfy the adjacency condition?"""
    occupied = set()
    for perms in census.perms.values():
        for p in perms:
            occupied |= p.profile().occupied
    return adjacency_condition(occupied)


def property_suite(census: ClassCensus, closed: bool, adjacency: bool) -> list[str]:
    """Counting inequalities over a census; returns violations (empty = pass).

    Checks C_n <= 12*C_{n-1} always; when the class is ⊞-closed and satisfies
    the adjacency condition, also C_{m+n} >= C_{m-1}*C_{n-1} and
    C_{m+n} >= C_m*C_n/144.
    """
    counts = census.counts
    n_top = census.n_max
    violations = []
    for n in range(1, n_top + 1):
        if counts[n] > 12 * counts[n - 1]:
            violations.append(
                f"C_{n} = {counts[n]} exceeds 12*C_{n-1} = {12 * counts[n - 1]}"
            )
    if closed and adjacency:
        for m in range(1, n_top):
            for n in range(m, n_top - m + 1):
                both = counts[m + n]
                if both < counts[m - 1] * counts[n - 1]:
                    violations.append(
                        f"C_{m + n} = {both} below C_{m - 1}*C_{n - 1} = "
                        f"{counts[m - 1] * counts[n - 1]}"
                    )
                if 144 * both < counts[m] * counts[n]:
                    violations.append(
                        f"144*C_{m + n} = {144 * both} below C_{m}*C_{n} = "
                        f"{counts[m] * counts[n]}"
                    )
    return violations


def centred_uncentred_check(census: ClassCensus) -> dict:
    """Uncentred counts by origin-stripping, with sandwich bounds checked.

    For every n: C_n <= C°_n <= (n+1)^2 * C_n.
    """
    uncentred = []
    violations = []
    for n in range(census.n_max + 1):
        u = {strip_origin(p) for p in census.perms[n]}
        uncentred.append(len(u))
        low, mid, high = len(u), census.counts[n], (n + 1) ** 2 * len(u)
        if not low <= mid <= high:
            violations.append(
                f"n={n}: centred count {mid} outside [{low}, {high}]"
            )
    return {"uncentred_counts": uncentred, "violations": violations}
