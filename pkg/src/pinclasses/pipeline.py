"""End-to-end machinery: factor counts to generating functions to growth rates.

The primary counting path dedupes pi-map images of pin factors directly and
filters by ⊞-indecomposability; the classification tables recompute every
count as an independent cross-check, and any disagreement is a hard error.
Growth rates come from exact-rational bisection with a Sturm-chain root-count
certificate, so "smallest positive root" is a checked claim.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import classify
from .cperm import (
    CentredPerm,
    from_oneline,
    is_box_indecomposable,
    one_quadrant,
    subpatterns,
)
from .errors import (
    BoundViolation,
    CrossCheckMismatch,
    DisconnectedQuadrants,
    NoRootInRange,
    NotRecurrent,
    StabilizationFailure,
)
from .pimap import all_point_quadrants, pi_map, point_quadrant
from .pinword import (
    PinSpec,
    PinWord,
    enumerate_pin_factors,
    is_recurrent,
    left_truncate,
    parse_pin_spec,
)
from .series import (
    Poly,
    RatGF,
    from_eventually_constant,
    from_eventually_periodic,
    seq,
)

_BOUND_WINDOW = 30


def _as_spec(spec) -> PinSpec:
    return spec if isinstance(spec, PinSpec) else parse_pin_spec(spec)


def _as_perm(p) -> CentredPerm:
    return p if isinstance(p, CentredPerm) else from_oneline(p)


def _is_power_of_one_minus_z(den: Poly) -> bool:
    acc = Poly.one()
    step = Poly([1, -1])
    for _ in range(den.degree + 1):
        if acc == den:
            return True
        acc = acc * step
    return False


class GSequence:
    """The amended G-sequence G = g - g1*g3 - g2*g4, with proven bounds checked.

    Construction validates, on the first 30 coefficients: g and each g_q are
    non-negative integers with zero constant term; G has a_1 in {1..4} and
    -8n <= a_n < 2^(n+2).
    """

    __slots__ = ("g", "g_quadrants", "G")

    def __init__(self, g: RatGF, g1: RatGF, g2: RatGF, g3: RatGF, g4: RatGF):
        quads = (g1, g2, g3, g4)
        for name, part in [("g", g)] + [(f"g{i}", q) for i, q in enumerate(quads, 1)]:
            cs = part.coeffs(_BOUND_WINDOW)
            if cs[0] != 0:
                raise BoundViolation(f"{name} has nonzero constant term")
            if any(c < 0 or c.denominator != 1 for c in cs):
                raise BoundViolation(f"{name} has a negative or non-integer coefficient")
        G = g - g1 * g3 - g2 * g4
        a = G.coeffs(_BOUND_WINDOW)
        if a[1] not in (1, 2, 3, 4):
            raise BoundViolation(f"G linear coefficient {a[1]} outside 1..4")
        for n in range(2, _BOUND_WINDOW + 1):
            if not (-8 * n <= a[n] < 2 ** (n + 2)):
                raise BoundViolation(f"G coefficient a_{n} = {a[n]} violates -8n <= a_n < 2^(n+2)")
        self.g = g
        self.g_quadrants = quads
        self.G = G

    @property
    def f(self) -> RatGF:
        return seq(self.G)

    def __repr__(self) -> str:
        return f"GSequence(G = {self.G})"


@lru_cache(maxsize=128)
def _factor_images(spec: PinSpec, mode: str) -> dict[int, list]:
    """Per length n: list of (factor word, pi-image, indecomposable?) up to
    the stabilization window plus one cycle."""
    window = spec.prefix_length + 3 * spec.cycle_length + 2
    table: dict[int, list] = {}
    for n in range(1, window + 1):
        rows = []
        for v in sorted(enumerate_pin_factors(spec, n, mode), key=str):
            img = pi_map(v)
            rows.append((v, img, is_box_indecomposable(img)))
        table[n] = rows
    return table


def _counts_with_crosscheck(spec: PinSpec, mode: str, keep) -> dict[int, int]:
    """Count distinct kept images per length; verify the total indecomposable
    count against the classification-table route."""
    table = _factor_images(spec, mode)
    counts: dict[int, int] = {}
    for n, rows in table.items():
        images = {img for _, img, _ in rows}
        indec_images = {img for _, img, ind in rows if ind}
        counts[n] = len({img for _, img, ind in rows if ind and keep(img)})
        words = {v for v, _, _ in rows}
        dec_words = sum(1 for v in words if classify.is_decomposable_word(v))
        over = classify.overcount_series({n: words})[n]
        if len(words) - dec_words - over != len(indec_images):
            raise CrossCheckMismatch(
                f"table route gives {len(words) - dec_words - over} indecomposables "
                f"at n={n} for {spec} ({mode}), direct route gives {len(indec_images)}"
            )
        if len(words) - over != len(images):
            raise CrossCheckMismatch(
                f"collision overcount {over} inconsistent with image dedup at n={n}"
            )
    return counts


def _stabilized_gf(spec: PinSpec, counts: dict[int, int]) -> RatGF:
    stable_at = spec.prefix_length + 2 * spec.cycle_length + 2
    check = range(stable_at, stable_at + spec.cycle_length + 1)
    if any(counts[n] != counts[stable_at] for n in check):
        raise StabilizationFailure(
            f"factor image counts for {spec} not constant over lengths "
            f"{stable_at}..{stable_at + spec.cycle_length}: "
            f"{[counts[n] for n in check]}"
        )
    return from_eventually_constant(
        [counts[n] for n in range(1, stable_at)], counts[stable_at], stable_at
    )


def indecomposable_counts(spec, mode: str = "all") -> tuple[dict[int, int], RatGF]:
    """Distinct ⊞-indecomposable pi-images of pin factors, per length, as
    explicit counts plus their generating function g(z)."""
    spec = _as_spec(spec)
    counts = _counts_with_crosscheck(spec, mode, lambda img: True)
    return counts, _stabilized_gf(spec, counts)


def quadrant_indecomposable_counts(spec, q: int, mode: str = "all") -> RatGF:
    """g_q(z): indecomposable factor images lying entirely in quadrant q."""
    spec = _as_spec(spec)
    if q not in (1, 2, 3, 4):
        raise ValueError(f"quadrant must be 1..4, got {q}")
    counts = _counts_with_crosscheck(spec, mode, lambda img: one_quadrant(img) == q)
    return _stabilized_gf(spec, counts)


def amended_G(spec, mode: str = "all") -> GSequence:
    """Assemble g, g1..g4 and the amended G for a pin spec.

    For specs the counts are eventually constant, so G's denominator must be
    a power of (1 - z): its only pole is at z = 1, beyond the root search
    range.  That structural fact is asserted here.
    """
    spec = _as_spec(spec)
    _, g = indecomposable_counts(spec, mode)
    g1, g2, g3, g4 = (quadrant_indecomposable_counts(spec, q, mode) for q in (1, 2, 3, 4))
    gs = GSequence(g, g1, g2, g3, g4)
    if not _is_power_of_one_minus_z(gs.G.den):
        raise BoundViolation(f"G denominator {gs.G.den} is not a power of (1 - z)")
    return gs


def class_gf(spec) -> RatGF:
    """Exact generating function of the pin class of a recurrent spec."""
    spec = _as_spec(spec)
    if not is_recurrent(spec):
        raise NotRecurrent(
            f"{spec} is not recurrent, so its pin class is not ⊞-closed; "
            "use closure_gf for the ⊞-closure or interior_gf for the ⊞-interior"
        )
    return seq(amended_G(spec, "all").G)


def closure_gf(spec) -> RatGF:
    """Generating function of the ⊞-closure of the pin class."""
    return seq(amended_G(spec, "all").G)


def interior_gf(spec) -> RatGF:
    """Generating function of the ⊞-interior (closure of recurrent factors)."""
    return seq(amended_G(spec, "recurrent").G)


def finite_closure_sequence(generators) -> GSequence:
    """GSequence of the ⊞-closure of the downward closure of a finite set."""
    gens = [_as_perm(g) for g in generators]
    if not gens:
        raise ValueError("need at least one generator")
    closure: set[CentredPerm] = set()
    for gen in gens:
        closure |= subpatterns(gen)
    indecs = [p for p in closure if p.length >= 1 and is_box_indecomposable(p)]
    max_len = max((p.length for p in indecs), default=0)

    def poly_of(pred) -> RatGF:
        cs = [0] * (max_len + 1)
        for p in indecs:
            if pred(p):
                cs[p.length] += 1
        return RatGF(Poly(cs))

    g = poly_of(lambda p: True)
    g1, g2, g3, g4 = (poly_of(lambda p, q=q: one_quadrant(p) == q) for q in (1, 2, 3, 4))
    return GSequence(g, g1, g2, g3, g4)


def finite_closure_gf(generators) -> RatGF:
    """Generating function of the ⊞-closure of finitely many generators."""
    return seq(finite_closure_sequence(generators).G)


_LETTERS = "udlr"


@lru_cache(maxsize=1)
def _pair_quadrant_table() -> dict[tuple[str, str], int]:
    """Quadrant of p_k (k >= 3) from the letter pair (k-1, k), derived by
    probing the pi-map with every numeral and asserting independence."""
    table = {}
    for a in _LETTERS:
        for b in _LETTERS:
            if (a in "ud") == (b in "ud"):
                continue
            quads = {point_quadrant(PinWord(q, a + b), 3) for q in (1, 2, 3, 4)}
            if len(quads) != 1:
                raise CrossCheckMismatch(
                    f"pair ({a},{b}) quadrant depends on the numeral: {quads}"
                )
            table[(a, b)] = quads.pop()
    return table


@lru_cache(maxsize=1)
def _second_point_table() -> dict[tuple[int, str], int]:
    """Quadrant of p_2 from (numeral, first letter), probed from the pi-map."""
    return {
        (q, a): point_quadrant(PinWord(q, a), 2)
        for q in (1, 2, 3, 4)
        for a in _LETTERS
    }


def _poly_det(m: list[list[Poly]]) -> Poly:
    if len(m) == 1:
        return m[0][0]
    out = Poly.zero()
    for j in range(len(m)):
        if m[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        term = m[0][j] * _poly_det(minor)
        out = out + term if j % 2 == 0 else out - term
    return out


def _confined_word_count_gf(quadrants: frozenset[int]) -> RatGF:
    """h(z): pin words of each length all of whose points lie in the given
    quadrants, via a transfer matrix over last letters."""
    pair = _pair_quadrant_table()
    second = _second_point_table()
    n_letters = len(_LETTERS)
    m = [[0] * n_letters for _ in range(n_letters)]
    for j, a in enumerate(_LETTERS):
        for i, b in enumerate(_LETTERS):
            if (a in "ud") != (b in "ud") and pair[(a, b)] in quadrants:
                m[i][j] = 1
    v2 = [
        sum(1 for q in quadrants if second[(q, a)] in quadrants) for a in _LETTERS
    ]
    a_mat = [
        [
            Poly([1, -m[i][j]]) if i == j else Poly([0, -m[i][j]])
            for j in range(n_letters)
        ]
        for i in range(n_letters)
    ]
    det = _poly_det(a_mat)
    total = Poly.zero()
    for col in range(n_letters):
        replaced = [
            [Poly([v2[i]]) if j == col else a_mat[i][j] for j in range(n_letters)]
            for i in range(n_letters)
        ]
        total = total + _poly_det(replaced)
    head = Poly([0, len(quadrants)])
    return RatGF(head * det + total.shift(2), det)


_TAIL_WINDOW = 16
_TAIL_FROM = 9


def _confined_correction_gfs(quadrants: frozenset[int]) -> tuple[RatGF, RatGF]:
    """(decomposable-word GF, collision-overcount GF) restricted to words
    confined to the given quadrants; both tails are periodic with period 2,
    which is asserted on the overlap window."""

    def confined(w: PinWord) -> bool:
        return set(all_point_quadrants(w).values()) <= quadrants

    dec = {n: 0 for n in range(1, _TAIL_WINDOW + 1)}
    over = {n: 0 for n in range(1, _TAIL_WINDOW + 1)}
    for n in range(1, _TAIL_WINDOW + 1):
        for w in classify.decomposable_words(n):
            if confined(w):
                dec[n] += 1
        for group in classify.collision_groups_at(n):
            flags = {confined(w) for w in group}
            if len(flags) != 1:
                raise CrossCheckMismatch(
                    f"collision group {sorted(map(str, group))} splits on confinement"
                )
            if flags.pop():
                over[n] += len(group) - 1
    for series_counts, label in ((dec, "decomposable"), (over, "overcount")):
        for n in range(_TAIL_FROM, _TAIL_WINDOW - 1):
            if series_counts[n] != series_counts[n + 2]:
                raise CrossCheckMismatch(
                    f"{label} tail not 2-periodic at n={n} for quadrants {sorted(quadrants)}"
                )
    def encode(counts: dict[int, int]) -> RatGF:
        return from_eventually_periodic(
            [counts[n] for n in range(1, _TAIL_FROM)],
            [counts[_TAIL_FROM], counts[_TAIL_FROM + 1]],
            _TAIL_FROM,
        )

    return encode(dec), encode(over)


_OSCILLATION_GF_NUM = Poly([0, 1, 0, 1])  # z + z^3: one-quadrant counts 1,1,2,2,...


def _check_connected(quadrants: frozenset[int]) -> None:
    if not quadrants:
        raise DisconnectedQuadrants("at least one quadrant is required")
    bad = quadrants - {1, 2, 3, 4}
    if bad:
        raise ValueError(f"invalid quadrants {sorted(bad)}")
    seen = {min(quadrants)}
    frontier = [min(quadrants)]
    while frontier:
        q = frontier.pop()
        for nb in ((q % 4) + 1, ((q - 2) % 4) + 1):
            if nb in quadrants and nb not in seen:
                seen.add(nb)
                frontier.append(nb)
    if seen != quadrants:
        raise DisconnectedQuadrants(
            f"quadrants {sorted(quadrants)} are not adjacent-connected; "
            "no single pin sequence realizes them"
        )


def complete_class_sequence(quadrants=(1, 2, 3, 4)) -> GSequence:
    """GSequence for the class of all pin permutations confined to the given
    quadrants, counted via the classification tables."""
    quadrants = frozenset(quadrants)
    _check_connected(quadrants)
    h = _confined_word_count_gf(quadrants)
    dec_gf, over_gf = _confined_correction_gfs(quadrants)
    g = h - dec_gf - over_gf
    osc = RatGF(_OSCILLATION_GF_NUM, Poly([1, -1]))
    zero = RatGF.zero()
    g1, g2, g3, g4 = (osc if q in quadrants else zero for q in (1, 2, 3, 4))
    return GSequence(g, g1, g2, g3, g4)


def complete_class_gf(quadrants=(1, 2, 3, 4)) -> RatGF:
    """Generating function of the complete pin class, optionally confined."""
    return seq(complete_class_sequence(quadrants).G)


_HALF = Fraction(1, 2)
DENOMINATOR_ROOT = "denominator-root"
G_EQUALS_1 = "G-equals-1"


def _square_free(p: Poly) -> Poly:
    d = p.derivative()
    if d.is_zero():
        return p
    g = p.gcd(d)
    return p.divmod(g)[0] if g.degree > 0 else p


def _sturm_chain(p: Poly) -> list[Poly]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        chain.append(-(chain[-2].divmod(chain[-1])[1]))
    chain.pop()
    return chain


def _variations(chain: list[Poly], x: Fraction) -> int:
    signs = []
    for p in chain:
        v = p(x)
        if v:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _roots_in(chain: list[Poly], a: Fraction, b: Fraction) -> int:
    """Distinct real roots in the half-open interval (a, b]."""
    return _variations(chain, a) - _variations(chain, b)


class GrowthResult:
    """A certified growth rate.

    ``root_interval`` isolates the smallest positive real root of
    ``polynomial`` in (0, 1/2]; ``growth_rate`` is the decimal rendering of
    its reciprocal.  The interval carries a Sturm-count certificate that no
    root lies in (0, lo].
    """

    __slots__ = ("root_interval", "polynomial", "growth_rate", "digits")

    def __init__(self, root_interval, polynomial: Poly, digits: int = 10):
        self.root_interval = (Fraction(root_interval[0]), Fraction(root_interval[1]))
        self.polynomial = polynomial
        self.digits = digits
        lo, hi = self.growth_interval
        self.growth_rate = format(float((lo + hi) / 2), f".{digits}g")

    @property
    def growth_interval(self) -> tuple[Fraction, Fraction]:
        lo, hi = self.root_interval
        return (1 / hi, 1 / lo)

    @property
    def value(self) -> float:
        lo, hi = self.growth_interval
        return float((lo + hi) / 2)

    def to_json(self) -> dict:
        glo, ghi = self.growth_interval
        rlo, rhi = self.root_interval
        return {
            "interval": [str(glo), str(ghi)],
            "decimal": self.growth_rate,
            "root_interval": [str(rlo), str(rhi)],
            "polynomial": str(self.polynomial),
        }

    def __repr__(self) -> str:
        return f"GrowthResult({self.growth_rate}, poly={self.polynomial})"


def growth_rate(
    f_or_g,
    target: str = DENOMINATOR_ROOT,
    tol=Fraction(1, 10**12),
    digits: int = 10,
) -> GrowthResult:
    """Certified growth rate: reciprocal of the smallest root in (0, 1/2].

    ``f_or_g`` may be a RatGF (denominator root, or G(z) = 1 when target is
    G_EQUALS_1) or a bare Poly whose own smallest positive root is wanted.
    """
    if isinstance(f_or_g, Poly):
        poly = f_or_g
    elif target == DENOMINATOR_ROOT:
        poly = f_or_g.den
    elif target == G_EQUALS_1:
        poly = f_or_g.num - f_or_g.den
    else:
        raise ValueError(f"unknown target {target!r}")
    tol = Fraction(tol)
    p = _square_free(poly)
    if p.degree < 1:
        raise NoRootInRange(f"{poly} has no roots at all")
    chain = _sturm_chain(p)
    lo, hi = Fraction(0), _HALF
    if _roots_in(chain, lo, hi) == 0:
        raise NoRootInRange(f"{poly} has no root in (0, 1/2]")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if _roots_in(chain, lo, mid) >= 1:
            hi = mid
        else:
            lo = mid
    if _roots_in(chain, Fraction(0), lo) != 0 or _roots_in(chain, lo, hi) < 1:
        raise CrossCheckMismatch("root isolation certificate failed")
    if lo == 0:
        raise NoRootInRange(f"smallest root of {poly} is below tolerance")
    return GrowthResult((lo, hi), poly, digits=digits)


def interior_positivity(spec, samples: int = 100) -> bool:
    """Sample the interior-mode G at rational points of (0, alpha): all > 0?"""
    spec = _as_spec(spec)
    gs = amended_G(spec, "recurrent")
    alpha = growth_rate(gs.G, target=G_EQUALS_1).root_interval[0]
    for i in range(1, samples + 1):
        x = alpha * i / (samples + 1)
        if gs.G(x) <= 0:
            return False
    return True


def truncation_convergence(spec, t_max: int) -> list[GrowthResult]:
    """Growth rates of ⊞-closures of truncations chosen per the t-criterion.

    For each t, n(t) is the smallest truncation point whose pin factors of
    length <= t are all recurrent factors; the resulting sequence decreases
    weakly toward the interior growth rate.
    """
    spec = _as_spec(spec)
    if t_max < 1:
        raise ValueError("t_max must be positive")
    rec = {
        ell: enumerate_pin_factors(spec, ell, "recurrent") for ell in range(1, t_max + 1)
    }
    cache: dict[PinSpec, GrowthResult] = {}
    out = []
    for t in range(1, t_max + 1):
        chosen = None
        for n in range(1, spec.prefix_length + 3):
            trunc = left_truncate(spec, n)
            if all(
                enumerate_pin_factors(trunc, ell, "all") <= rec[ell]
                for ell in range(1, t + 1)
            ):
                chosen = trunc
                break
        if chosen is None:
            raise CrossCheckMismatch(
                f"no valid truncation point for {spec} at t={t}; "
                "theory guarantees one by prefix_length + 2"
            )
        if chosen not in cache:
            cache[chosen] = growth_rate(closure_gf(chosen))
        out.append(cache[chosen])
    return out


def describe(spec, mode: str = "class", digits: int = 10) -> dict:
    """Full JSON-ready result bundle for a pin spec in the requested mode."""
    spec = _as_spec(spec)
    if mode == "class":
        if not is_recurrent(spec):
            raise NotRecurrent(
                f"{spec} is not recurrent, so class mode is undefined; "
                "use --mode closure or --mode interior"
            )
        gs = amended_G(spec, "all")
    elif mode == "closure":
        gs = amended_G(spec, "all")
    elif mode == "interior":
        gs = amended_G(spec, "recurrent")
    else:
        raise ValueError(f"mode must be class, closure, or interior, got {mode!r}")
    f = seq(gs.G)
    growth = growth_rate(f, digits=digits)
    return {
        "spec": str(spec),
        "mode": mode,
        "g": gs.g.to_json(),
        "g_quadrants": [q.to_json() for q in gs.g_quadrants],
        "G": gs.G.to_json(),
        "f": f.to_json(),
        "growth": growth.to_json(),
        "display": {
            "g": str(gs.g),
            "g_quadrants": [str(q) for q in gs.g_quadrants],
            "G": str(gs.G),
            "f": str(f),
        },
    }
