"""Exact univariate polynomials and rational generating functions.

Coefficients are ``fractions.Fraction`` throughout; no floating point
anywhere in this module.  A ``Poly`` stores ascending coefficients with no
trailing zeros.  A ``RatGF`` is a reduced fraction of two polynomials whose
denominator has constant term 1, so power-series coefficient extraction is
always well defined.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import (
    DivisionByZero,
    MalformedSyntax,
    NonzeroConstantTerm,
    PoleAtZero,
)


def _frac(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floating point coefficients are not allowed")
    return Fraction(x)


class Poly:
    """Polynomial in one variable z over the rationals.

    >>> str(Poly([1, -2, 0, -1]))
    '1 - 2z - z^3'
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "Poly":
        return cls([])

    @classmethod
    def one(cls) -> "Poly":
        return cls([1])

    @classmethod
    def z(cls, k: int = 1) -> "Poly":
        """The monomial z**k."""
        return cls([0] * k + [1])

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial given degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "Poly":
        """Multiply by z**k."""
        if self.is_zero():
            return self
        return Poly((Fraction(0),) * k + self.coeffs)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Euclidean division; ``other`` must be nonzero."""
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        dn, dd = len(rem) - 1, other.degree
        lead = other.coeffs[-1]
        if dn < dd:
            return Poly(), self
        quo = [Fraction(0)] * (dn - dd + 1)
        for k in range(dn - dd, -1, -1):
            c = rem[k + dd] / lead
            quo[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly(quo), Poly(rem)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return Poly([c / lead for c in self.coeffs])

    def gcd(self, other: "Poly") -> "Poly":
        """Monic greatest common divisor."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def derivative(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, x) -> Fraction:
        """Evaluate at an exact rational point (Horner)."""
        x = _frac(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _term(self, c: Fraction, k: int) -> str:
        if k == 0:
            return str(c)
        mono = "z" if k == 1 else f"z^{k}"
        if c == 1:
            return mono
        if c == -1:
            return f"-{mono}"
        if c.denominator == 1:
            return f"{c}{mono}"
        return f"({c}){mono}"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            t = self._term(c, k)
            if not parts:
                parts.append(t)
            elif t.startswith("-"):
                parts.append(f"- {t[1:]}")
            else:
                parts.append(f"+ {t}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    _TERM_RE = re.compile(
        r"^\(?(?P<coeff>[+-]?\d+(?:/\d+)?)?\)?\*?(?P<z>z(?:\^(?P<exp>\d+))?)?$"
    )

    @classmethod
    def parse(cls, text: str) -> "Poly":
        """Parse text like ``1 - 2z - z^3`` or ``1-2*z+ (1/2)z^2``."""
        s = text.replace(" ", "").replace("**", "^").lower()
        if not s:
            raise MalformedSyntax("empty polynomial")
        # split into signed terms
        chunks = re.findall(r"[+-]?[^+-]+", s)
        if "".join(chunks) != s:
            raise MalformedSyntax(f"cannot tokenize polynomial: {text!r}")
        acc: dict[int, Fraction] = {}
        for chunk in chunks:
            sign = 1
            body = chunk
            if body[0] in "+-":
                sign = -1 if body[0] == "-" else 1
                body = body[1:]
            m = cls._TERM_RE.match(body)
            if not m or (m.group("coeff") is None and m.group("z") is None):
                raise MalformedSyntax(f"bad polynomial term {chunk!r} in {text!r}")
            coeff = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
            if m.group("z") is None:
                exp = 0
            else:
                exp = int(m.group("exp")) if m.group("exp") else 1
            acc[exp] = acc.get(exp, Fraction(0)) + sign * coeff
        out = [Fraction(0)] * (max(acc) + 1)
        for k, c in acc.items():
            out[k] = c
        return cls(out)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "Poly":
        return cls([Fraction(c) for c in data])


class RatGF:
    """Rational generating function num/den in lowest terms, den(0) = 1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, Poly):
            num = Poly([num]) if isinstance(num, (int, Fraction)) else Poly(num)
        if den is None:
            den = Poly.one()
        elif not isinstance(den, Poly):
            den = Poly([den]) if isinstance(den, (int, Fraction)) else Poly(den)
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        g = num.gcd(den)
        if g.degree > 0:
            num = num.divmod(g)[0]
            den = den.divmod(g)[0]
        c0 = den[0]
        if c0 == 0:
            raise PoleAtZero(f"denominator {den} vanishes at z = 0")
        if c0 != 1:
            num = num * (1 / c0)
            den = den * (1 / c0)
        self.num = num
        self.den = den

    @classmethod
    def zero(cls) -> "RatGF":
        return cls(Poly.zero())

    @classmethod
    def one(cls) -> "RatGF":
        return cls(Poly.one())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatGF):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __add__(self, other: "RatGF") -> "RatGF":
        return RatGF(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "RatGF") -> "RatGF":
        return RatGF(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self) -> "RatGF":
        return RatGF(-self.num, self.den)

    def __mul__(self, other) -> "RatGF":
        if isinstance(other, (int, Fraction)):
            return RatGF(self.num * other, self.den)
        return RatGF(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: "RatGF") -> "RatGF":
        if other.is_zero():
            raise DivisionByZero("division of generating functions by zero")
        return RatGF(self.num * other.den, self.den * other.num)

    def __call__(self, x) -> Fraction:
        return self.num(x) / self.den(x)

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs(k)[k]

    def coeffs(self, n: int) -> list[Fraction]:
        """First n+1 power-series coefficients, [z^0 .. z^n]."""
        if self.den[0] == 0:
            raise PoleAtZero(f"denominator {self.den} vanishes at z = 0")
        out = []
        for k in range(n + 1):
            c = self.num[k]
            for j in range(1, min(k, self.den.degree) + 1):
                c -= self.den[j] * out[k - j]
            out.append(c / self.den[0])
        return out

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatGF({self.num!r}, {self.den!r})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data) -> "RatGF":
        return cls(Poly.from_json(data["num"]), Poly.from_json(data["den"]))


def from_eventually_constant(initial, constant, from_index: int) -> RatGF:
    """Generating function of a sequence a_1, a_2, ... that is eventually constant.

    ``initial`` lists a_1 .. a_{from_index-1}; a_n = ``constant`` for every
    n >= from_index.  The constant term a_0 is taken to be 0 (these are
    counting sequences indexed from length 1).

    >>> print(from_eventually_constant([1], 2, 2))
    (z + z^2)/(1 - z)
    """
    if from_index < 1:
        raise ValueError("from_index must be at least 1")
    if len(initial) != from_index - 1:
        raise ValueError(
            f"initial must list exactly the {from_index - 1} terms before from_index"
        )
    head = Poly([0] + [_frac(c) for c in initial])
    tail = RatGF(Poly.z(from_index) * _frac(constant), Poly([1, -1]))
    return RatGF(head) + tail


def from_eventually_periodic(initial, block, from_index: int) -> RatGF:
    """Generating function of a sequence that is eventually periodic.

    ``initial`` lists a_1 .. a_{from_index-1}; thereafter
    a_{from_index + i} = block[i mod len(block)].
    """
    if from_index < 1:
        raise ValueError("from_index must be at least 1")
    if len(initial) != from_index - 1:
        raise ValueError(
            f"initial must list exactly the {from_index - 1} terms before from_index"
        )
    if not block:
        raise ValueError("period block must be non-empty")
    head = Poly([0] + [_frac(c) for c in initial])
    p = len(block)
    rep = Poly([_frac(c) for c in block])
    tail = RatGF(rep.shift(from_index), Poly([1] + [0] * (p - 1) + [-1]))
    return RatGF(head) + tail


def seq(g: RatGF) -> RatGF:
    """The sequence construction 1/(1 - g); needs g(0) = 0."""
    if g.num[0] != 0:
        raise NonzeroConstantTerm("Seq needs a generating function with G(0) = 0")
    return RatGF(g.den, g.den - g.num)


def coeffs(f: RatGF, n: int) -> list[Fraction]:
    """First n+1 power-series coefficients of f."""
    return f.coeffs(n)
