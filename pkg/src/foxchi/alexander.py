"""Alexander matrices, first elementary ideals and Alexander polynomials."""

from __future__ import annotations

from concurrent.futures import Executor
from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from typing import TYPE_CHECKING

from . import _poly
from .errors import MultivariateInput, NotSymmetrizable
from .fpgroup import Abelianization, Presentation, abelianize, fox_derivative, project_group_ring
from .laurent import LaurentPoly, canonical_form, gcd, involution

if TYPE_CHECKING:
    from .linkdiag import LinkDiagram


@dataclass(frozen=True)
class AlexanderMatrix:
    """Rows are relators, columns are generators; entries live in Z[H]."""

    entries: tuple[tuple[LaurentPoly, ...], ...]
    num_cols: int
    num_vars: int

    @property
    def num_rows(self) -> int:
        return len(self.entries)

    def row_identity_defect(self, ab: Abelianization) -> list[LaurentPoly]:
        """``sum_i A[j][i] * (image(x_i) - 1)`` per row; zero for a valid matrix."""
        units = [LaurentPoly(self.num_vars, {tuple(v): 1}) - 1 for v in ab.images]
        out = []
        for row in self.entries:
            acc = LaurentPoly.zero(self.num_vars)
            for a, u in zip(row, units):
                acc = acc + a * u
            out.append(acc)
        return out


def alexander_matrix(P: Presentation, ab: Abelianization | None = None) -> AlexanderMatrix:
    if ab is None:
        ab = abelianize(P)
    n = P.num_generators
    rows = tuple(
        tuple(project_group_ring(fox_derivative(r, i, n), ab) for i in range(n)) for r in P.relators
    )
    return AlexanderMatrix(rows, n, ab.free_rank)


def determinant(rows: list[list[LaurentPoly]], num_vars: int) -> LaurentPoly:
    """Determinant by fraction-free Bareiss elimination.

    Each row is first multiplied by a monomial so that every entry is an
    ordinary polynomial; the result is therefore correct only up to a unit,
    which is all the ideal computation needs.
    """
    size = len(rows)
    if size == 0:
        return LaurentPoly.one(num_vars)
    M = []
    for row in rows:
        lows = [p.min_exponents() for p in row if not p.is_zero()]
        low = tuple(map(min, zip(*lows))) if lows else (0,) * num_vars
        neg = tuple(-x for x in low)
        M.append([_poly.shift(p._terms, neg) for p in row])
    one = {(0,) * num_vars: 1}
    prev = one
    sign = 1
    for k in range(size - 1):
        if not M[k][k]:
            swap = next((i for i in range(k + 1, size) if M[i][k]), None)
            if swap is None:
                return LaurentPoly.zero(num_vars)
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        pivot = M[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = _poly.sub(_poly.mul(pivot, M[i][j]), _poly.mul(M[i][k], M[k][j]))
                q = _poly.exquo(num, prev)
                if q is None:
                    raise ArithmeticError("Bareiss step was not exact")
                M[i][j] = q
            M[i][k] = {}
        prev = pivot
    det = M[size - 1][size - 1]
    return LaurentPoly._raw(num_vars, _poly.scale(det, sign))


def _minors(A: AlexanderMatrix, wirtinger: bool):
    n, k = A.num_cols, A.num_rows
    rows = [list(r) for r in A.entries]
    if wirtinger and k == n:
        rows = rows[:-1]
        for drop in range(n):
            yield [r[:drop] + r[drop + 1 :] for r in rows]
        return
    for rsel in combinations(range(k), n - 1):
        for csel in combinations(range(n), n - 1):
            yield [[rows[r][c] for c in csel] for r in rsel]


def minor_determinants(A: AlexanderMatrix, wirtinger: bool = False, executor: Executor | None = None) -> list[LaurentPoly]:
    """All (n-1)-minors of ``A``.

    With ``wirtinger`` set and a square matrix, one relator is dropped as
    redundant and only the n column-deleted minors are formed.
    """
    subs = list(_minors(A, wirtinger))
    if executor is None:
        return [determinant(m, A.num_vars) for m in subs]
    return list(executor.map(determinant, subs, [A.num_vars] * len(subs)))


def delta_from_ideal(A: AlexanderMatrix, wirtinger: bool = False, executor: Executor | None = None) -> LaurentPoly:
    """GCD of the (n-1)-minors, in canonical form.

    Returns 1 for n = 1 and 0 when there are fewer than n - 1 relators.
    """
    n = A.num_cols
    if n < 1:
        raise ValueError("presentation needs at least one generator")
    if n == 1:
        return LaurentPoly.one(A.num_vars)
    if A.num_rows < n - 1:
        return LaurentPoly.zero(A.num_vars)
    dets = minor_determinants(A, wirtinger, executor)
    return reduce(gcd, dets, LaurentPoly.zero(A.num_vars))


def alexander_polynomial(P: Presentation, ab: Abelianization | None = None, wirtinger: bool = False) -> LaurentPoly:
    return delta_from_ideal(alexander_matrix(P, ab), wirtinger=wirtinger)


def symmetrize_knot_delta(p: LaurentPoly) -> LaurentPoly:
    """The associate ``±t^k p`` with ``p(t) = p(1/t)`` and ``p(1) = 1``."""
    if p.num_vars > 1:
        raise MultivariateInput("symmetrization needs a one-variable polynomial")
    if p.num_vars == 0:
        p = LaurentPoly.constant(p.coefficient(()), 1)
    if p.is_zero():
        raise NotSymmetrizable("the zero polynomial has no symmetric associate")
    lo, hi = p.min_exponents()[0], p.max_exponents()[0]
    if (lo + hi) % 2:
        raise NotSymmetrizable(f"odd exponent span in {p}")
    q = p.shift((-(lo + hi) // 2,))
    value = q.evaluate([1])
    if value not in (1, -1):
        raise NotSymmetrizable(f"value at t=1 is {value}, not ±1")
    q = q * value
    if involution(q) != q:
        raise NotSymmetrizable(f"{p} has no palindromic associate")
    return q


__all__ = [
    "AlexanderMatrix",
    "alexander_matrix",
    "determinant",
    "minor_determinants",
    "delta_from_ideal",
    "alexander_polynomial",
    "symmetrize_knot_delta",
    "diagram_delta",
    "canonical_form",
]


def diagram_delta(d: "LinkDiagram") -> LaurentPoly:
    """Diagram -> Wirtinger presentation -> Alexander matrix -> Delta, in meridian variables."""
    from .linkdiag import wirtinger

    W = wirtinger(d)
    A = alexander_matrix(W.presentation, W.abelianization)
    return delta_from_ideal(A, wirtinger=True)
