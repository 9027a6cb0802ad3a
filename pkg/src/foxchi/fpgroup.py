"""Free-group words, finite presentations and Fox calculus.

Generators are referred to by 0-based index. A letter is a pair
``(index, sign)`` with ``sign`` in ``{+1, -1}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import IndexOutOfRange, UnknownGenerator
from .laurent import LaurentPoly
from .snf import smith_normal_form, unimodular_inverse

Letter = tuple[int, int]


def _reduce_letters(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for g, s in letters:
        if stack and stack[-1][0] == g and stack[-1][1] == -s:
            stack.pop()
        else:
            stack.append((g, s))
    return tuple(stack)


class Word:
    """Element of a free group, always stored freely reduced."""

    __slots__ = ("letters", "_hash")

    def __init__(self, letters: Iterable[Letter] = ()):
        checked = []
        for g, s in letters:
            if s not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {s}")
            if g < 0:
                raise IndexOutOfRange(f"negative generator index {g}")
            checked.append((int(g), int(s)))
        self.letters = _reduce_letters(checked)
        self._hash = hash(self.letters)

    @classmethod
    def _trusted(cls, letters: tuple[Letter, ...]) -> "Word":
        w = cls.__new__(cls)
        w.letters = letters
        w._hash = hash(letters)
        return w

    @classmethod
    def generator(cls, i: int, power: int = 1) -> "Word":
        s = 1 if power > 0 else -1
        return cls._trusted(((i, s),) * abs(power))

    @classmethod
    def from_ints(cls, seq: Iterable[int]) -> "Word":
        """Signed 1-based integers: ``2`` is ``x_1``, ``-1`` is ``x_0^-1``."""
        return cls((abs(k) - 1, 1 if k > 0 else -1) for k in seq if k)

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        a, b = self.letters, other.letters
        k = 0
        n = min(len(a), len(b))
        while k < n and a[-1 - k][0] == b[k][0] and a[-1 - k][1] == -b[k][1]:
            k += 1
        return Word._trusted(a[: len(a) - k] + b[k:])

    def inverse(self) -> "Word":
        return Word._trusted(tuple((g, -s) for g, s in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Word({list(self.letters)!r})"

    def max_generator(self) -> int:
        return max((g for g, _ in self.letters), default=-1)

    def exponent_sums(self, n: int) -> list[int]:
        v = [0] * n
        for g, s in self.letters:
            v[g] += s
        return v

    def format(self, names: Sequence[str]) -> str:
        return " ".join(names[g] if s > 0 else names[g].upper() for g, s in self.letters)


IDENTITY = Word()


def free_reduce(w: Word | Iterable[Letter]) -> Word:
    """Freely reduced form. :class:`Word` values are already reduced."""
    if isinstance(w, Word):
        return Word._trusted(_reduce_letters(w.letters))
    return Word(w)


class GroupRingElement:
    """Finite Z-linear combination of free-group words."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, int] | None = None):
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def from_word(cls, w: Word, coeff: int = 1) -> "GroupRingElement":
        return cls({w: coeff})

    @classmethod
    def one(cls) -> "GroupRingElement":
        return cls({IDENTITY: 1})

    def _combine(self, other, sign):
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, 0) + sign * c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        r = GroupRingElement.__new__(GroupRingElement)
        r.terms = out
        return r

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        return self._combine(_as_element(other), 1)

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return self._combine(_as_element(other), -1)

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement({w: -c for w, c in self.terms.items()})

    def __mul__(self, other) -> "GroupRingElement":
        if isinstance(other, int):
            return GroupRingElement({w: c * other for w, c in self.terms.items()})
        other = _as_element(other)
        out: dict[Word, int] = {}
        for wa, ca in self.terms.items():
            for wb, cb in other.terms.items():
                w = wa * wb
                out[w] = out.get(w, 0) + ca * cb
        return GroupRingElement(out)

    def __rmul__(self, other) -> "GroupRingElement":
        if isinstance(other, int):
            return self * other
        return _as_element(other) * self

    def __eq__(self, other) -> bool:
        if isinstance(other, Word):
            other = GroupRingElement.from_word(other)
        return isinstance(other, GroupRingElement) and self.terms == other.terms

    def __repr__(self) -> str:
        return f"GroupRingElement({self.terms!r})"

    def is_zero(self) -> bool:
        return not self.terms


def _as_element(x) -> GroupRingElement:
    if isinstance(x, GroupRingElement):
        return x
    if isinstance(x, Word):
        return GroupRingElement.from_word(x)
    if isinstance(x, int):
        return GroupRingElement({IDENTITY: x})
    raise TypeError(f"cannot use {type(x).__name__} as a group ring element")


def fox_derivative(w: Word | GroupRingElement, i: int, num_generators: int | None = None) -> GroupRingElement:
    """``dw/dx_i`` in the integral group ring of the free group.

    One left-to-right pass: an occurrence of ``x_i`` after prefix ``p``
    contributes ``+p``; an occurrence of ``x_i^-1`` contributes ``-p x_i^-1``.
    Group ring elements are differentiated linearly.
    """
    if i < 0 or (num_generators is not None and i >= num_generators):
        raise IndexOutOfRange(f"generator index {i} out of range")
    if isinstance(w, GroupRingElement):
        out = GroupRingElement()
        for word, c in w.terms.items():
            out = out + fox_derivative(word, i, num_generators) * c
        return out
    if num_generators is not None and w.max_generator() >= num_generators:
        raise IndexOutOfRange("word uses a generator outside the presentation")
    letters = _reduce_letters(w.letters)
    terms: dict[Word, int] = {}
    for k, (g, s) in enumerate(letters):
        if g != i:
            continue
        prefix = Word._trusted(letters[: k + 1] if s < 0 else letters[:k])
        terms[prefix] = terms.get(prefix, 0) + s
    return GroupRingElement(terms)


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(self.relators))
        n = len(self.generators)
        for r in self.relators:
            if r.max_generator() >= n:
                raise IndexOutOfRange(f"relator uses generator {r.max_generator()} but only {n} exist")

    @property
    def num_generators(self) -> int:
        return len(self.generators)

    def to_text(self) -> str:
        lines = ["gens: " + " ".join(self.generators)]
        lines += ["rel: " + r.format(self.generators) for r in self.relators]
        return "\n".join(lines)


def parse_word(text: str, names: Sequence[str]) -> Word:
    """Parse space-separated generator names; the upper-cased name is the inverse.

    When every name is a single character, an unspaced word like ``abAB``
    is accepted too.
    """
    lookup: dict[str, Letter] = {}
    for i, name in enumerate(names):
        lookup[name] = (i, 1)
        lookup[name.upper()] = (i, -1)
    tokens = text.split()
    if len(tokens) == 1 and tokens[0] not in lookup and all(len(n) == 1 for n in names):
        tokens = list(tokens[0])
    letters = []
    for tok in tokens:
        if tok not in lookup:
            raise UnknownGenerator(f"unknown generator {tok!r}")
        letters.append(lookup[tok])
    return Word(letters)


def parse_presentation(text: str) -> Presentation:
    """Parse ``gens: a b c`` followed by one ``rel: ...`` line per relator."""
    gens: list[str] | None = None
    rels: list[str] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, body = line.partition(":")
        key = key.strip().lower()
        if key == "gens":
            gens = body.split()
        elif key == "rel":
            rels.append(body)
        else:
            raise UnknownGenerator(f"unrecognised line {raw!r}")
    if gens is None:
        raise UnknownGenerator("presentation has no 'gens:' line")
    for g in gens:
        if g == g.upper() or gens.count(g) > 1 or g.upper() in gens:
            raise UnknownGenerator(f"generator name {g!r} must be lowercase and unique")
    return Presentation(tuple(gens), tuple(parse_word(r, gens) for r in rels))


@dataclass(frozen=True)
class Abelianization:
    """The map from generators onto H = H_1 / torsion, with H = Z^free_rank."""

    free_rank: int
    images: tuple[tuple[int, ...], ...]
    torsion_invariants: tuple[int, ...] = field(default=())

    def image(self, w: Word) -> tuple[int, ...]:
        v = [0] * self.free_rank
        for g, s in w.letters:
            for k, x in enumerate(self.images[g]):
                v[k] += s * x
        return tuple(v)

    def rebased(self, words: Sequence[Word]) -> "Abelianization":
        """Change basis of H so that ``words[j]`` maps to the j-th unit vector.

        The images of ``words`` must form a basis of H.
        """
        if len(words) != self.free_rank:
            raise ValueError(f"need {self.free_rank} basis words, got {len(words)}")
        if not words:
            return self
        M = [list(self.image(w)) for w in words]
        inv = unimodular_inverse(M)
        images = tuple(
            tuple(sum(v[k] * inv[k][j] for k in range(self.free_rank)) for j in range(self.free_rank))
            for v in self.images
        )
        return Abelianization(self.free_rank, images, self.torsion_invariants)


def relator_matrix(P: Presentation) -> list[list[int]]:
    return [r.exponent_sums(P.num_generators) for r in P.relators]


def abelianize(P: Presentation, basis: Sequence[Word] | None = None) -> Abelianization:
    """Abelianization modulo torsion via Smith normal form.

    With ``basis``, coordinates are chosen so those words map to unit
    vectors (e.g. link meridians); otherwise the Smith transform decides,
    with the sign fixed so the first nonzero image of a rank-1 group is
    positive.
    """
    n = P.num_generators
    D, _, V = smith_normal_form(relator_matrix(P), ncols=n)
    rank = sum(1 for t in range(min(len(D), n)) if D[t][t])
    torsion = tuple(D[t][t] for t in range(rank) if D[t][t] > 1)
    images = tuple(tuple(V[i][rank:]) for i in range(n))
    m = n - rank
    if m == 1:
        first = next((v[0] for v in images if v[0]), 1)
        if first < 0:
            images = tuple((-v[0],) for v in images)
    ab = Abelianization(m, images, torsion)
    if basis is not None:
        ab = ab.rebased(basis)
    return ab


def project_group_ring(e: GroupRingElement | Word, ab: Abelianization) -> LaurentPoly:
    """Image under Z[free group] -> Z[H]."""
    e = _as_element(e)
    out: dict[tuple[int, ...], int] = {}
    for w, c in e.terms.items():
        k = ab.image(w)
        out[k] = out.get(k, 0) + c
    return LaurentPoly(ab.free_rank, out)
