"""Exact-triangle bookkeeping on a torus boundary.

Slopes, negative continued fractions, bypass (Farey) decomposition, the
Euler characteristic recursion for sutured solid tori, parity of maps in
surgery triangles and the mod 2 degree of cobordism maps.

A :class:`Slope` ``(x, y)`` stands for the suture ``±(x λ + y μ)`` and is
written ``y/x`` in fraction notation, so ``1/0`` is the meridian ``μ``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import (
    AmbiguousInput,
    DivisionByZero,
    EmptyExpansion,
    NonIntegralDegree,
    NotCoprime,
    OutOfRange,
    Overdetermined,
    RecursionMismatch,
    Underdetermined,
)


@dataclass(frozen=True, order=True)
class Slope:
    x: int
    y: int

    def __post_init__(self):
        if self.x == 0 and self.y == 0:
            raise NotCoprime("0/0 is not a slope")
        if math.gcd(self.x, self.y) != 1:
            raise NotCoprime(f"({self.x}, {self.y}) is not a primitive class")
        if self.y < 0 or (self.y == 0 and self.x < 0):
            raise OutOfRange("slopes are normalised with y >= 0, and x > 0 when y = 0; use Slope.of")

    @classmethod
    def of(cls, x: int, y: int) -> "Slope":
        """Normalise the sign of an unoriented class."""
        if y < 0 or (y == 0 and x < 0):
            x, y = -x, -y
        return cls(x, y)

    @classmethod
    def parse(cls, text: str) -> "Slope":
        """``"x/y"``, e.g. ``"-5/7"`` is ``x = -5, y = 7``."""
        a, sep, b = text.partition("/")
        if not sep:
            raise ValueError(f"slope {text!r} must look like x/y")
        return cls.of(int(a), int(b))

    def __neg__(self) -> tuple[int, int]:
        return (-self.x, -self.y)

    def as_fraction_pair(self) -> tuple[int, int]:
        """``[y, x]``: numerator and denominator of ``y/x``."""
        return (self.y, self.x)


MERIDIAN = Slope(0, 1)


# --- negative continued fractions -------------------------------------------


def ncf(y: int, z: int) -> list[int]:
    """Expansion ``-y/z = a0 - 1/(a1 - 1/(... - 1/an))`` with ``a_i <= -2`` for ``i >= 1``.

    Requires ``0 < z < y`` or ``z = 1 <= y``; then every entry is ``<= -2``
    unless ``y = z = 1``.
    """
    if y < 1 or not (0 < z < y or z == 1):
        raise OutOfRange(f"need 0 < z < y or z = 1 <= y, got y={y}, z={z}")
    if math.gcd(y, z) != 1:
        raise NotCoprime(f"gcd({y}, {z}) != 1")
    out = []
    num, den = -y, z
    while True:
        a = num // den
        out.append(a)
        rem = num - a * den  # 0 <= rem < den
        if rem == 0:
            return out
        # num/den = a + rem/den = a - 1/(-den/rem)
        num, den = -den, rem


def ncf_eval(entries: Sequence[int]) -> Fraction:
    if not entries:
        raise EmptyExpansion("a continued fraction needs at least one entry")
    value = Fraction(entries[-1])
    for a in reversed(entries[:-1]):
        if value == 0:
            raise DivisionByZero(f"expansion {list(entries)} divides by zero")
        value = a - 1 / value
    return value


def _ncf_vector(entries: Sequence[int]) -> tuple[int, int]:
    # homogeneous evaluation; the empty expansion is 1/0
    p, q = 1, 0
    for a in reversed(entries):
        p, q = a * p - q, p
    return p, q


def _increment_last(entries: Sequence[int]) -> list[int]:
    out = list(entries)
    out[-1] += 1
    # [..., a, -1] == [..., a + 1]
    while len(out) > 1 and out[-1] == -1:
        out.pop()
        out[-1] += 1
    return out


# --- bypass decomposition ----------------------------------------------------

# maps (x, y) into the region y >= -x > 0 and back
_IDENT = (lambda x, y: (x, y), lambda x, y: (x, y))
_REFLECT_ANTI = (lambda x, y: (-y, -x), lambda x, y: (-y, -x))
_REFLECT_Y = (lambda x, y: (-x, y), lambda x, y: (-x, y))
_ROTATE = (lambda x, y: (-y, x), lambda x, y: (y, -x))


def _chart(s: Slope):
    x, y = s.x, s.y
    if x < 0:
        return _IDENT if y >= -x else _REFLECT_ANTI
    return _REFLECT_Y if y >= x else _ROTATE


@lru_cache(maxsize=None)
def bypass_decompose(s: Slope) -> tuple[Slope, Slope]:
    """The two slopes of the bypass triangle attached to ``s``.

    In the region ``y >= -x > 0`` write ``y/x = [a0, ..., an]``; the outputs
    are ``[a0, ..., a(n-1)]`` and ``[a0, ..., an + 1]``. Other regions are
    carried there by a reflection or rotation of the torus and mapped back.
    """
    if s.y == 0:
        return Slope(-1, 1), Slope(1, 0)
    if s.x == 0:
        return Slope(1, 0), Slope(-1, 1)
    to_domain, back = _chart(s)
    X, Y = to_domain(s.x, s.y)
    entries = ncf(Y, -X)
    p2, q2 = _ncf_vector(entries[:-1])
    p3, q3 = _ncf_vector(_increment_last(entries))
    out = []
    for p, q in ((p2, q2), (p3, q3)):
        t = Slope.of(q, p)
        out.append(Slope.of(*back(t.x, t.y)))
    return out[0], out[1]


def mediant_signs(s1: Slope, s2: Slope, s3: Slope) -> tuple[int, int] | None:
    """Signs ``(e2, e3)`` with ``s1 = e2*s2 + e3*s3``, or ``None``."""
    for e2 in (1, -1):
        for e3 in (1, -1):
            if s1.x == e2 * s2.x + e3 * s3.x and s1.y == e2 * s2.y + e3 * s3.y:
                return e2, e3
    return None


def determinant(s2: Slope, s3: Slope) -> int:
    return s2.x * s3.y - s3.x * s2.y


def check_bypass(s1: Slope, s2: Slope, s3: Slope) -> bool:
    return mediant_signs(s1, s2, s3) is not None and abs(determinant(s2, s3)) == 1


# --- sutured solid torus -----------------------------------------------------

_CHI_MEMO: dict[Slope, int] = {}


def _chi_recursive(s: Slope) -> int:
    memo = _CHI_MEMO
    stack = [s]
    while stack:
        cur = stack[-1]
        if cur in memo:
            stack.pop()
            continue
        if cur.y == 0:
            memo[cur] = 0
            continue
        if cur.y == 1:
            memo[cur] = -1
            continue
        s2, s3 = bypass_decompose(cur)
        if not check_bypass(cur, s2, s3) or not (s2.y < cur.y and s3.y < cur.y):
            raise RecursionMismatch(f"bad bypass triangle {cur} -> {s2}, {s3}")
        pending = [c for c in (s2, s3) if c not in memo]
        if pending:
            stack.extend(pending)
            continue
        memo[cur] = memo[s2] + memo[s3]
    return memo[s]


def unknot_chi(s: Slope) -> int:
    """Euler characteristic of the solid torus with suture of slope ``s``.

    Computed by the bypass recursion from the two base cases and checked
    against the closed form ``-y``.
    """
    value = _chi_recursive(s)
    if value != -s.y:
        raise RecursionMismatch(f"recursion gave {value} for {s}, expected {-s.y}")
    return value


def unknot_chi_trace(s: Slope) -> tuple[int, tuple[Slope, Slope] | None]:
    """``unknot_chi`` together with the first decomposition step (None at base cases)."""
    value = unknot_chi(s)
    if s.y <= 1:
        return value, None
    return value, bypass_decompose(s)


# --- surgery triangles -------------------------------------------------------


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def surgery_parity(dots: Sequence[int]) -> int:
    """Index (1, 2 or 3) of the odd map in a surgery exact triangle.

    ``dots[i]`` is the intersection of the i-th slope with the rational
    longitude. A zero at position ``i`` makes ``f_{i-1}`` odd; otherwise the
    unique cyclically adjacent same-sign pair ``(j, j+1)`` makes ``f_j`` odd.
    """
    if len(dots) != 3:
        raise AmbiguousInput("need exactly three intersection numbers")
    zeros = [i for i, d in enumerate(dots) if d == 0]
    if len(zeros) > 1:
        raise AmbiguousInput(f"{len(zeros)} zero intersection numbers")
    if zeros:
        return (zeros[0] - 1) % 3 + 1
    same = [j for j in range(3) if _sign(dots[j]) == _sign(dots[(j + 1) % 3])]
    if len(same) != 1:
        raise AmbiguousInput("no unique adjacent pair of equal sign")
    return same[0] + 1


ALL_ODD = "all_odd"


@dataclass(frozen=True)
class TriangleChi:
    """Euler characteristics around a triangle; ``None`` marks an unknown.

    ``odd_position`` is 1, 2, 3 or :data:`ALL_ODD`.
    """

    chis: tuple[int | None, int | None, int | None]
    odd_position: int | str

    def __post_init__(self):
        if len(self.chis) != 3:
            raise ValueError("a triangle has three vertices")
        if self.odd_position not in (1, 2, 3, ALL_ODD):
            raise ValueError(f"odd_position must be 1, 2, 3 or {ALL_ODD!r}")

    def relation_holds(self) -> bool:
        if None in self.chis:
            raise Underdetermined("relation check needs all three values")
        c = self.chis
        if self.odd_position == ALL_ODD:
            return sum(c) == 0
        i = self.odd_position - 1
        return c[(i - 1) % 3] == c[i] + c[(i + 1) % 3]


def triangle_solve(t: TriangleChi) -> int:
    """The missing Euler characteristic forced by the triangle relation.

    All maps odd: the three values sum to zero. Only ``f_i`` odd:
    ``chi(Y_{i-1}) = chi(Y_i) + chi(Y_{i+1})``.
    """
    unknown = [k for k, c in enumerate(t.chis) if c is None]
    if not unknown:
        raise Overdetermined("no unknown value to solve for")
    if len(unknown) > 1:
        raise Underdetermined(f"{len(unknown)} unknown values")
    u = unknown[0]
    c = t.chis
    if t.odd_position == ALL_ODD:
        return -sum(v for v in c if v is not None)
    i = t.odd_position - 1
    lhs, a, b = (i - 1) % 3, i, (i + 1) % 3
    if u == lhs:
        return c[a] + c[b]
    if u == a:
        return c[lhs] - c[b]
    return c[lhs] - c[a]


# --- cobordism degree --------------------------------------------------------


@dataclass(frozen=True)
class CobordismInvariants:
    """Topological data of a cobordism ``W: Y_in -> Y_out``."""

    euler_char: int
    signature: int
    b1_in: int = 0
    b1_out: int = 0
    b0_in: int = 1
    b0_out: int = 1

    def __post_init__(self):
        if min(self.b1_in, self.b1_out, self.b0_in, self.b0_out) < 0:
            raise ValueError("Betti numbers are non-negative")
        if self._degree_sum() % 2:
            raise NonIntegralDegree(
                f"chi + sigma + db1 + db0 = {self._degree_sum()} is odd"
            )

    def _degree_sum(self) -> int:
        return (
            self.euler_char
            + self.signature
            + self.b1_out
            - self.b1_in
            + self.b0_out
            - self.b0_in
        )


def cobordism_degree(c: CobordismInvariants) -> int:
    """Mod 2 degree of the induced map: half the degree sum, reduced mod 2."""
    return (c._degree_sum() // 2) % 2


def compose(first: CobordismInvariants, second: CobordismInvariants) -> CobordismInvariants:
    """``second ∘ first``, glued along a closed 3-manifold.

    Euler characteristics add (a closed 3-manifold has chi 0) and so do
    signatures.
    """
    if (first.b1_out, first.b0_out) != (second.b1_in, second.b0_in):
        raise ValueError("outgoing end of the first cobordism must match the incoming end of the second")
    return CobordismInvariants(
        first.euler_char + second.euler_char,
        first.signature + second.signature,
        first.b1_in,
        second.b1_out,
        first.b0_in,
        second.b0_out,
    )
