"""Integer Laurent polynomials in ``t1, ..., tn``.

:class:`LaurentPoly` is the ambient ring for Alexander polynomials and
graded Euler characteristics. Values are immutable; arithmetic returns new
objects. Monomials are ordered lexicographically with ``t1 > t2 > ...``.

Units of the ring are ``±t1^j1 ... tn^jn``; :func:`canonical_form` picks a
representative of each class modulo units.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from types import MappingProxyType
from typing import Iterable, Mapping

from . import _poly
from .errors import (
    DivisionByZero,
    MultivariateInput,
    NotDivisible,
    PolynomialSyntaxError,
    RingMismatch,
)

__all__ = [
    "LaurentPoly",
    "TruncatedSeries",
    "canonical_form",
    "gcd",
    "exact_divide",
    "involution",
    "geometric_truncation",
    "associates",
    "parse_poly",
]


class LaurentPoly:
    """Element of Z[t1^±1, ..., tn^±1].

    ``terms`` maps exponent tuples (length ``num_vars``) to nonzero ints.
    """

    __slots__ = ("num_vars", "_terms", "_hash")

    def __init__(self, num_vars: int, terms: Mapping[tuple[int, ...], int] | None = None):
        if num_vars < 0:
            raise ValueError("num_vars must be non-negative")
        clean: dict[tuple[int, ...], int] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != num_vars:
                raise RingMismatch(f"exponent {e} has length {len(e)}, expected {num_vars}")
            c = int(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self.num_vars = num_vars
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, num_vars: int, terms: dict) -> "LaurentPoly":
        # trusted constructor: terms already clean
        obj = cls.__new__(cls)
        obj.num_vars = num_vars
        obj._terms = terms
        obj._hash = None
        return obj

    # constructors
    @classmethod
    def zero(cls, num_vars: int = 1) -> "LaurentPoly":
        return cls._raw(num_vars, {})

    @classmethod
    def constant(cls, c: int, num_vars: int = 1) -> "LaurentPoly":
        return cls(num_vars, {(0,) * num_vars: c})

    @classmethod
    def one(cls, num_vars: int = 1) -> "LaurentPoly":
        return cls.constant(1, num_vars)

    @classmethod
    def monomial(cls, exponents: Iterable[int], coeff: int = 1) -> "LaurentPoly":
        e = tuple(exponents)
        return cls(len(e), {e: coeff})

    @classmethod
    def var(cls, i: int, num_vars: int) -> "LaurentPoly":
        """The variable ``t_{i+1}`` (0-based index ``i``)."""
        if not 0 <= i < num_vars:
            raise IndexError(f"variable index {i} out of range for {num_vars} variables")
        e = [0] * num_vars
        e[i] = 1
        return cls._raw(num_vars, {tuple(e): 1})

    @classmethod
    def from_univariate(cls, coeffs: Mapping[int, int]) -> "LaurentPoly":
        return cls(1, {(d,): c for d, c in coeffs.items()})

    # access
    @property
    def terms(self) -> Mapping[tuple[int, ...], int]:
        return MappingProxyType(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in lex-descending order of exponent tuples."""
        return sorted(self._terms.items(), reverse=True)

    def leading_term(self) -> tuple[tuple[int, ...], int]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self._terms)
        return e, self._terms[e]

    def min_exponents(self) -> tuple[int, ...]:
        if not self._terms:
            return (0,) * self.num_vars
        return tuple(map(min, zip(*self._terms)))

    def max_exponents(self) -> tuple[int, ...]:
        if not self._terms:
            return (0,) * self.num_vars
        return tuple(map(max, zip(*self._terms)))

    def univariate(self) -> dict[int, int]:
        """Degree -> coefficient map of a one-variable polynomial."""
        if self.num_vars != 1:
            raise MultivariateInput(f"expected one variable, got {self.num_vars}")
        return {e[0]: c for e, c in self._terms.items()}

    def coefficient(self, exponents) -> int:
        if isinstance(exponents, int):
            exponents = (exponents,)
        return self._terms.get(tuple(exponents), 0)

    # arithmetic
    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.num_vars != self.num_vars:
                raise RingMismatch(f"ring with {self.num_vars} vs {other.num_vars} variables")
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.num_vars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly._raw(self.num_vars, _poly.add(self._terms, other._terms))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly._raw(self.num_vars, _poly.sub(self._terms, other._terms))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return LaurentPoly._raw(self.num_vars, {e: -c for e, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly._raw(self.num_vars, _poly.scale(self._terms, other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly._raw(self.num_vars, _poly.mul(self._terms, other._terms))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial() or abs(self.leading_term()[1]) != 1:
                raise NotDivisible("only units can be raised to negative powers")
            (e, c), = self._terms.items()
            return LaurentPoly._raw(self.num_vars, {tuple(x * n for x in e): c ** (-n)})
        if not self._terms:
            return LaurentPoly.one(self.num_vars) if n == 0 else self
        return LaurentPoly._raw(self.num_vars, _poly.power(self._terms, n) if n else {(0,) * self.num_vars: 1})

    def shift(self, exponents: Iterable[int]) -> "LaurentPoly":
        """Multiply by the monomial ``t^exponents``."""
        m = tuple(exponents)
        if len(m) != self.num_vars:
            raise RingMismatch("shift length does not match number of variables")
        return LaurentPoly._raw(self.num_vars, _poly.shift(self._terms, m))

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.num_vars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.num_vars == other.num_vars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num_vars, frozenset(self._terms.items())))
        return self._hash

    def evaluate(self, values: Iterable) -> Fraction | int:
        """Evaluate at a point; negative exponents give rationals."""
        vals = [Fraction(v) for v in values]
        if len(vals) != self.num_vars:
            raise RingMismatch("wrong number of values")
        total = Fraction(0)
        for e, c in self._terms.items():
            term = Fraction(c)
            for v, k in zip(vals, e):
                term *= v ** k
            total += term
        return int(total) if total.denominator == 1 else total

    def substitute(self, i: int, value: int) -> "LaurentPoly":
        """Set ``t_{i+1} = value`` for ``value`` in {1, -1}; keeps the ring."""
        if value not in (1, -1):
            raise ValueError("only unit substitutions stay inside the ring")
        out: dict = {}
        for e, c in self._terms.items():
            k = list(e)
            sign = value ** abs(k[i])
            k[i] = 0
            k = tuple(k)
            out[k] = out.get(k, 0) + sign * c
        return LaurentPoly(self.num_vars, out)

    # printing / serialization
    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.num_vars}, {dict(self.sorted_terms())!r})"

    def as_dict(self) -> dict:
        return {"vars": self.num_vars, "terms": [[list(e), c] for e, c in self.sorted_terms()]}

    def to_json(self) -> str:
        """Compact JSON with lex-descending terms; stable byte-for-byte."""
        return json.dumps(self.as_dict(), separators=(",", ":"))

    @classmethod
    def from_json(cls, data) -> "LaurentPoly":
        if isinstance(data, (str, bytes)):
            data = json.loads(data)
        return cls(int(data["vars"]), {tuple(e): c for e, c in data["terms"]})


# ---------------------------------------------------------------------------
# formatting and parsing


def _var_name(i: int, n: int) -> str:
    return "t" if n == 1 else f"t{i + 1}"


def format_poly(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for e, c in p.sorted_terms():
        factors = []
        for i, k in enumerate(e):
            if k == 0:
                continue
            name = _var_name(i, p.num_vars)
            factors.append(name if k == 1 else f"{name}^{k}")
        mono = "*".join(factors)
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


_FACTOR_RE = re.compile(r"^(t(\d*))(?:\^(-?\d+))?$")


def parse_poly(text: str, num_vars: int | None = None) -> LaurentPoly:
    """Parse the printed form, e.g. ``"t - 1 + t^-1"`` or ``"2*t1*t2^-1 - t2"``.

    ``t`` is the only variable when ``num_vars`` is 1; otherwise ``t1, t2, ...``.
    When ``num_vars`` is omitted it is inferred from the highest index used.
    """
    s = text.replace(" ", "").replace("**", "^")
    if not s:
        raise PolynomialSyntaxError("empty polynomial")
    # split into signed terms, keeping '-' that belongs to an exponent
    terms: list[tuple[int, str]] = []
    i, sign, start = 0, 1, 0
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        i = start = 1
    while i <= len(s):
        if i == len(s) or (s[i] in "+-" and s[i - 1] != "^"):
            chunk = s[start:i]
            if not chunk:
                raise PolynomialSyntaxError(f"dangling sign in {text!r}")
            terms.append((sign, chunk))
            if i < len(s):
                sign = -1 if s[i] == "-" else 1
            start = i + 1
        i += 1
    parsed = []
    max_index = 0
    for sign, chunk in terms:
        coeff = sign
        exps: dict[int, int] = {}
        for f in chunk.split("*"):
            if not f:
                raise PolynomialSyntaxError(f"bad term {chunk!r}")
            if f.isdigit():
                coeff *= int(f)
                continue
            m = _FACTOR_RE.match(f)
            if not m:
                raise PolynomialSyntaxError(f"bad factor {f!r}")
            idx = int(m.group(2)) if m.group(2) else 1
            if idx < 1:
                raise PolynomialSyntaxError(f"bad variable {f!r}")
            exps[idx] = exps.get(idx, 0) + (int(m.group(3)) if m.group(3) else 1)
            max_index = max(max_index, idx)
        parsed.append((coeff, exps))
    n = num_vars if num_vars is not None else max(max_index, 1)
    if max_index > n:
        raise PolynomialSyntaxError(f"variable t{max_index} outside ring of {n} variables")
    out: dict = {}
    for coeff, exps in parsed:
        e = tuple(exps.get(k + 1, 0) for k in range(n))
        out[e] = out.get(e, 0) + coeff
    return LaurentPoly(n, out)


# ---------------------------------------------------------------------------
# ring operations


def _shifted(p: LaurentPoly) -> tuple[dict, tuple[int, ...]]:
    m = p.min_exponents()
    return _poly.shift(p._terms, tuple(-x for x in m)), m


def canonical_form(p: LaurentPoly) -> LaurentPoly:
    """Representative of ``p`` modulo ``±monomial``.

    Each variable's minimum exponent becomes 0 and the lex-greatest term gets
    a positive coefficient.
    """
    if p.is_zero():
        return p
    terms, _ = _shifted(p)
    if terms[max(terms)] < 0:
        terms = {e: -c for e, c in terms.items()}
    return LaurentPoly._raw(p.num_vars, terms)


def associates(p: LaurentPoly, q: LaurentPoly) -> bool:
    """True when ``p = ±monomial * q``."""
    return canonical_form(p) == canonical_form(q)


def gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """GCD in the Laurent ring, returned in canonical form."""
    if p.num_vars != q.num_vars:
        raise RingMismatch("gcd of polynomials in different rings")
    if p.is_zero():
        return canonical_form(q)
    if q.is_zero():
        return canonical_form(p)
    a, _ = _shifted(p)
    b, _ = _shifted(q)
    return canonical_form(LaurentPoly._raw(p.num_vars, _poly.gcd(a, b, p.num_vars)))


def gcd_all(polys: Iterable[LaurentPoly], num_vars: int) -> LaurentPoly:
    return reduce(gcd, polys, LaurentPoly.zero(num_vars))


def exact_divide(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Return ``r`` with ``r * q == p``; raise :class:`NotDivisible` otherwise."""
    if p.num_vars != q.num_vars:
        raise RingMismatch("division of polynomials in different rings")
    if q.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    if p.is_zero():
        return p
    a, sa = _shifted(p)
    b, sb = _shifted(q)
    r = _poly.exquo(a, b)
    if r is None:
        raise NotDivisible(f"{q} does not divide {p}")
    return LaurentPoly._raw(p.num_vars, _poly.shift(r, tuple(x - y for x, y in zip(sa, sb))))


def involution(p: LaurentPoly) -> LaurentPoly:
    """The ring involution ``t_i -> t_i^-1``."""
    return LaurentPoly._raw(p.num_vars, {tuple(-x for x in e): c for e, c in p._terms.items()})


@dataclass(frozen=True)
class TruncatedSeries:
    """``base * (1 + t^-1 + ... + t^-depth)``.

    Coefficients at degrees ``>= stable_floor`` agree with the infinite
    product ``base * sum_{i>=0} t^-i``; lower ones are truncation artefacts.
    """

    base: LaurentPoly
    depth: int
    stable_floor: int
    series: LaurentPoly

    def coefficient(self, degree: int) -> int:
        return self.series.coefficient((degree,))

    def stable_coefficients(self) -> dict[int, int]:
        """Every degree from the top of the series down to ``stable_floor``."""
        if self.series.is_zero():
            return {}
        top = self.series.max_exponents()[0]
        return {d: self.coefficient(d) for d in range(top, self.stable_floor - 1, -1)}


def geometric_truncation(p: LaurentPoly, depth: int) -> TruncatedSeries:
    if p.num_vars > 1:
        raise MultivariateInput("geometric truncation needs a one-variable polynomial")
    if depth < 0:
        raise ValueError("depth must be non-negative")
    if p.num_vars == 0:
        p = LaurentPoly.constant(p.coefficient(()), 1)
    if p.is_zero():
        return TruncatedSeries(p, depth, -depth, p)
    geo = LaurentPoly(1, {(-i,): 1 for i in range(depth + 1)})
    lo, hi = p.min_exponents()[0], p.max_exponents()[0]
    return TruncatedSeries(p, depth, lo - depth + (hi - lo), p * geo)
