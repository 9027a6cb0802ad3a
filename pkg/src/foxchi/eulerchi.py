"""Graded Euler characteristics of sutured instanton homology.

Everything here is a formula in the Laurent ring: the Floer groups are
never built, only the Euler characteristics they are known to have.
Results are either *exact* (a sign and grading are pinned down) or
*up to unit*, i.e. defined modulo ``±t1^j1 ... tn^jn`` and stored in
canonical form.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .errors import ArityMismatch, MultivariateInput, NonIntegralBound, NotSymmetrizable
from .laurent import (
    LaurentPoly,
    TruncatedSeries,
    canonical_form,
    exact_divide,
    geometric_truncation,
    involution,
)

# chi of the meridional sutured complement of any knot in S^3, for the
# grading normalisation in which chi(I(S^1 x Sigma | Sigma)) = -1
MERIDIONAL_CHI_S3 = -1


class Mode(str, enum.Enum):
    EXACT = "exact"
    UP_TO_UNIT = "up_to_unit"


def _default_basis(n: int) -> tuple[str, ...]:
    return ("rho",) if n == 1 else tuple(f"rho{i + 1}" for i in range(n))


@dataclass(frozen=True)
class GradedChi:
    """A graded Euler characteristic in Z[H].

    ``basis`` names the grading classes dual to the variables. In
    ``UP_TO_UNIT`` mode ``poly`` is kept in canonical form.
    """

    poly: LaurentPoly
    mode: Mode = Mode.UP_TO_UNIT
    basis: tuple[str, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode))
        if not self.basis:
            object.__setattr__(self, "basis", _default_basis(self.poly.num_vars))
        if len(self.basis) != self.poly.num_vars:
            raise ArityMismatch("basis size differs from number of variables")
        if self.mode is Mode.UP_TO_UNIT:
            object.__setattr__(self, "poly", canonical_form(self.poly))

    @property
    def num_vars(self) -> int:
        return self.poly.num_vars

    def total(self) -> int:
        """Ungraded Euler characteristic: every variable set to 1."""
        return int(self.poly.evaluate([1] * self.num_vars))

    def support(self) -> list[tuple[int, ...]]:
        return sorted(self.poly.terms)

    def same_class(self, other: "GradedChi | LaurentPoly") -> bool:
        """Equality modulo units."""
        q = other.poly if isinstance(other, GradedChi) else other
        return canonical_form(self.poly) == canonical_form(q)

    def __str__(self) -> str:
        return str(self.poly)


def _require_univariate(p: LaurentPoly, what: str) -> LaurentPoly:
    if p.num_vars > 1:
        raise MultivariateInput(f"{what} must be a one-variable polynomial")
    if p.num_vars == 0:
        return LaurentPoly.constant(p.coefficient(()), 1)
    return p


def chi_toroidal(delta_M: LaurentPoly, meridian_classes: Sequence[Sequence[int]]) -> GradedChi:
    """``Delta(M) * prod_j ([m_j] - 1)`` for a manifold with torus boundary components.

    ``meridian_classes[j]`` is the exponent vector of the suture class on
    the j-th boundary torus, written in the basis of H.
    """
    n = delta_M.num_vars
    out = delta_M
    for m in meridian_classes:
        if len(m) != n:
            raise ArityMismatch(f"class {tuple(m)} does not live in a rank-{n} group")
        out = out * (LaurentPoly(n, {tuple(m): 1}) - 1)
    return GradedChi(out, Mode.UP_TO_UNIT)


def chi_link(delta_L: LaurentPoly, n: int) -> GradedChi:
    """Graded Euler characteristic of KHI for an n-component link, n >= 2."""
    if n < 2:
        raise ArityMismatch("the link formula needs at least two components")
    if delta_L.num_vars != n:
        raise ArityMismatch(f"Alexander polynomial has {delta_L.num_vars} variables, expected {n}")
    units = [tuple(int(i == j) for i in range(n)) for j in range(n)]
    return chi_toroidal(delta_L, units)


def chi_knot(delta_M: LaurentPoly, meridian_class: int = 1) -> GradedChi:
    """``Delta(Y(K)) * ([m] - 1) / (t - 1)`` with ``[m] = t^meridian_class``.

    ``meridian_class = 0`` (a meridian that dies in H) gives 0.
    """
    p = _require_univariate(delta_M, "delta_M")
    t = LaurentPoly.var(0, 1)
    ratio = exact_divide(LaurentPoly(1, {(meridian_class,): 1}) - 1, t - 1)
    return GradedChi(p * ratio, Mode.UP_TO_UNIT)


def _check_symmetrized(p: LaurentPoly) -> None:
    if involution(p) != p or p.evaluate([1]) != 1:
        raise NotSymmetrizable(f"{p} is not a symmetrized Alexander polynomial")


def chi_khi_minus(delta_K_symmetrized: LaurentPoly, depth: int) -> TruncatedSeries:
    """Truncation of ``-Delta_K(t) * sum_{i>=0} t^-i``.

    The sign and grading are exact; only degrees at or above
    ``stable_floor`` of the result are meaningful.
    """
    p = _require_univariate(delta_K_symmetrized, "Delta_K")
    _check_symmetrized(p)
    return geometric_truncation(-p, depth)


@dataclass(frozen=True)
class SharpDecomposition:
    """Euler characteristics of the q summands of I#(Y'), Y' a q/p surgery."""

    q: int
    pieces: tuple[int, ...]
    total: int
    h1_order: int | None = None
    lspace_compatible: bool | None = None
    sharp: bool | None = None
    verdict: str | None = None


def chi_sharp_decompose(chi_Y: int, q: int, h1_order: int | None = None) -> SharpDecomposition:
    """Split ``chi(I#)`` of a surgery into its q equal summands.

    With ``h1_order = |H_1|`` the dimension bound ``dim >= |chi|`` is
    compared against the L-space condition ``dim = |H_1|``: a total above
    ``|H_1|`` rules the L-space out; equality means an L-space must have
    every summand of dimension ``|chi_Y|``.
    """
    if q < 1:
        raise ValueError("q must be a positive integer")
    pieces = (chi_Y,) * q
    total = q * chi_Y
    if h1_order is None:
        return SharpDecomposition(q, pieces, total)
    if h1_order < 1:
        raise ValueError("|H_1| must be positive")
    compatible = abs(total) <= h1_order
    sharp = abs(total) == h1_order
    if not compatible:
        verdict = "not an instanton L-space"
    elif sharp and abs(chi_Y) == 1:
        verdict = "L-space iff each piece is one-dimensional"
    elif sharp:
        verdict = f"L-space iff each piece has dimension {abs(chi_Y)}"
    else:
        verdict = "undetermined: Euler characteristic bound is not sharp"
    return SharpDecomposition(q, pieces, total, h1_order, compatible, sharp, verdict)


def meridional_chi_candidates(chi_sharp_minus_Y: int) -> tuple[int, int]:
    """Both signs allowed for the meridional chi of a knot in a general Y."""
    return (chi_sharp_minus_Y, -chi_sharp_minus_Y)


def chi_slope(chi_mu: GradedChi, y: int) -> GradedChi:
    """Graded chi for the suture of slope y/x from the meridional one.

    Sums y consecutive shifts of ``chi_mu``; the grading offsets are absorbed
    by working up to unit, so x plays no role.
    """
    if y < 0:
        raise ValueError("y must be non-negative")
    p = _require_univariate(chi_mu.poly, "chi_mu")
    if y == 0:
        return GradedChi(LaurentPoly.zero(1), Mode.UP_TO_UNIT, chi_mu.basis)
    window = LaurentPoly(1, {(j,): 1 for j in range(y)})
    return GradedChi(p * window, Mode.UP_TO_UNIT, chi_mu.basis)


def stabilization_shift(chi: GradedChi, k: int) -> GradedChi:
    """Re-grade after stabilising the surface: multiply by ``t^k``."""
    p = _require_univariate(chi.poly, "chi")
    return GradedChi(p.shift((k,)), chi.mode, chi.basis)


@dataclass(frozen=True)
class SupportVerdict:
    passed: bool
    bound: int
    violations: tuple[int, ...]


def support_bound_check(chi: GradedChi, n_half_intersections: int, chi_S: int) -> SupportVerdict:
    """Adjunction-type vanishing: gradings with ``|i| > (n - chi(S)) / 2`` must be empty."""
    if chi.mode is not Mode.EXACT:
        raise ValueError("support checks need an exact-mode characteristic")
    p = _require_univariate(chi.poly, "chi")
    diff = n_half_intersections - chi_S
    if diff % 2:
        raise NonIntegralBound(f"n - chi(S) = {diff} is odd")
    bound = diff // 2
    bad = tuple(sorted(e[0] for e in p.terms if abs(e[0]) > bound))
    return SupportVerdict(not bad, bound, bad)
