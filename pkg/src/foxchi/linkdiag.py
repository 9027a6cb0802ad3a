"""Link diagrams from braid words and PD codes, and their Wirtinger presentations.

PD convention: ``X(a, b, c, d)`` lists the four edge labels around a crossing
counterclockwise, starting at the incoming under-edge, so the under-strand
runs ``a -> c`` and the over-strand joins ``b`` and ``d``. The direction of
the over-strand is recovered by tracing each component. A crossing is
positive when the over-strand runs ``d -> b``.

Braid convention: token ``i > 0`` is ``sigma_i``, the strand in position
``i`` passing over the strand in position ``i + 1``; ``-i`` is its inverse.
Strands run upward and ``sigma_i`` is a positive crossing.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import cached_property

from .errors import ArcCountMismatch, BadToken, InconsistentOrientation, MalformedTuple, StrandOutOfRange
from .fpgroup import Abelianization, Presentation, Word, abelianize

Crossing = tuple[int, int, int, int]


@dataclass(frozen=True)
class LinkDiagram:
    """An oriented link diagram.

    ``components`` lists, per component, its edge labels in the order of
    travel; an empty tuple is a crossingless unknotted circle.
    ``signs[k]`` is the sign of ``crossings[k]``.
    """

    crossings: tuple[Crossing, ...]
    components: tuple[tuple[int, ...], ...]
    signs: tuple[int, ...]
    component_names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not self.component_names:
            names = tuple(f"K{i + 1}" for i in range(len(self.components)))
            object.__setattr__(self, "component_names", names)

    @property
    def num_crossings(self) -> int:
        return len(self.crossings)

    @property
    def num_components(self) -> int:
        return len(self.components)

    @cached_property
    def _arc_split(self) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
        ends_under = {c[0] for c in self.crossings}
        arcs: list[tuple[int, ...]] = []
        owner: list[int] = []
        for j, comp in enumerate(self.components):
            if not comp:
                arcs.append(())
                owner.append(j)
                continue
            # start right after an under-pass when there is one
            start = next((k + 1 for k, e in enumerate(comp) if e in ends_under), 0) % len(comp)
            cur: list[int] = []
            for e in comp[start:] + comp[:start]:
                cur.append(e)
                if e in ends_under:
                    arcs.append(tuple(cur))
                    owner.append(j)
                    cur = []
            if cur:
                arcs.append(tuple(cur))
                owner.append(j)
        return tuple(arcs), tuple(owner)

    @property
    def arcs(self) -> tuple[tuple[int, ...], ...]:
        """Over-arcs: maximal runs of edges between two under-passes."""
        return self._arc_split[0]

    @property
    def arc_components(self) -> tuple[int, ...]:
        """Component index of each arc."""
        return self._arc_split[1]

    @property
    def num_arcs(self) -> int:
        return len(self.arcs)

    def writhe(self) -> int:
        return sum(self.signs)

    def to_pd(self) -> str:
        return " ".join("X({},{},{},{})".format(*c) for c in self.crossings)


def _trace(crossings: list[Crossing], inputs: set[tuple[int, int]] | None = None):
    """Split edges into oriented components and compute crossing signs.

    ``inputs`` optionally lists the (crossing, position) slots where a strand
    enters; without it a cycle of over-passes is oriented by its labels.
    """
    occ: dict[int, list[tuple[int, int]]] = {}
    for k, c in enumerate(crossings):
        for p, e in enumerate(c):
            occ.setdefault(e, []).append((k, p))
    for e, places in occ.items():
        if len(places) != 2:
            raise ArcCountMismatch(f"edge label {e} appears {len(places)} times, expected 2")

    signs = [0] * len(crossings)
    seen: set[int] = set()
    components: list[tuple[int, ...]] = []

    def other(e, place):
        a, b = occ[e]
        return b if a == place else a

    for e0 in sorted(occ):
        if e0 in seen:
            continue
        # collect the unoriented cycle containing e0
        cycle = []
        e, place = e0, occ[e0][0]
        while True:
            cycle.append(e)
            k, p = place
            nxt = crossings[k][(p + 2) % 4]
            place = other(nxt, (k, (p + 2) % 4))
            e = nxt
            if e == e0 and (place == occ[e0][0]):
                break
            if len(cycle) > 2 * len(occ) + 2:
                raise ArcCountMismatch("could not close a component while tracing edges")
        # pick the entry point: an incoming under-edge fixes the direction
        entry = None
        for e in cycle:
            for place in occ[e]:
                if place[1] == 0:
                    entry = (e, place)
                    break
            if entry:
                break
        if entry is None and inputs is not None:
            e = cycle[0]
            entry = (e, next(pl for pl in occ[e] if pl in inputs))
        if entry is None:
            # only over-passes: orient so labels increase where possible
            e = min(cycle)
            first, second = occ[e]
            ahead = crossings[first[0]][(first[1] + 2) % 4]
            entry = (e, first if ahead == e + 1 else second)
        e, place = entry
        # walk so that `e` enters the crossing at `place`
        order = []
        start = entry
        while True:
            order.append(e)
            seen.add(e)
            k, p = place
            if p == 2:
                raise InconsistentOrientation(f"component through edge {e} runs against an under-strand at crossing {k + 1}")
            if p == 1:
                signs[k] = -1
            elif p == 3:
                signs[k] = 1
            nxt = crossings[k][(p + 2) % 4]
            place = other(nxt, (k, (p + 2) % 4))
            e = nxt
            if (e, place) == start:
                break
        # rotate so the component starts with its smallest label
        i = order.index(min(order))
        components.append(tuple(order[i:] + order[:i]))
    return components, signs


def _build(crossings: list[Crossing], free_loops: int = 0, relabel: bool = False, inputs=None) -> LinkDiagram:
    components, signs = _trace(crossings, inputs)
    if relabel:
        mapping = {}
        for comp in components:
            for e in comp:
                mapping[e] = len(mapping) + 1
        crossings = [tuple(mapping[e] for e in c) for c in crossings]
        components = [tuple(mapping[e] for e in comp) for comp in components]
    components = components + [()] * free_loops
    return LinkDiagram(tuple(map(tuple, crossings)), tuple(components), tuple(signs))


def parse_braid(text: str, strands: int) -> LinkDiagram:
    """Closure of a braid word given as whitespace/comma separated nonzero ints."""
    if strands < 1:
        raise StrandOutOfRange("a braid needs at least one strand")
    tokens = text.replace(",", " ").split()
    word = []
    for tok in tokens:
        try:
            k = int(tok)
        except ValueError:
            raise BadToken(f"braid token {tok!r} is not an integer") from None
        if k == 0:
            raise BadToken("braid token 0 is not a generator")
        if abs(k) >= strands:
            raise StrandOutOfRange(f"generator {k} needs more than {strands} strands")
        word.append(k)

    nxt = strands + 1
    initial = list(range(1, strands + 1))
    label = list(initial)
    crossings = []
    inputs = set()
    for n, k in enumerate(word):
        i = abs(k) - 1
        ei, ej = label[i], label[i + 1]
        fi, fj = nxt, nxt + 1
        nxt += 2
        if k > 0:
            crossings.append([ej, fj, fi, ei])
            inputs.update({(n, 0), (n, 3)})
        else:
            crossings.append([ei, ej, fj, fi])
            inputs.update({(n, 0), (n, 1)})
        label[i], label[i + 1] = fi, fj
    # close up: the top edge in each position is the bottom edge there
    close = {label[p]: initial[p] for p in range(strands) if label[p] != initial[p]}
    crossings = [tuple(close.get(e, e) for e in c) for c in crossings]
    used = {e for c in crossings for e in c}
    free = sum(1 for e in initial if e not in used)
    return _build(crossings, free_loops=free, relabel=True, inputs=inputs)


_TUPLE_RE = re.compile(r"X\s*[\(\[]([^\)\]]*)[\)\]]")


def parse_pd(text: str) -> LinkDiagram:
    """Parse ``X(a,b,c,d) ...`` (round or square brackets) or a JSON array of 4-arrays.

    An empty code is the crossingless unknot.
    """
    s = text.strip()
    raw: list = []
    if s.startswith("["):
        try:
            raw = json.loads(s)
        except json.JSONDecodeError as exc:
            raise MalformedTuple(f"invalid JSON PD code: {exc}") from None
        if not isinstance(raw, list) or not all(isinstance(t, list) for t in raw):
            raise MalformedTuple("JSON PD code must be an array of arrays")
    elif s:
        raw = [[x.strip() for x in m.group(1).split(",")] for m in _TUPLE_RE.finditer(s)]
        leftover = _TUPLE_RE.sub("", s)
        leftover = re.sub(r"PD|[\[\](),\s]", "", leftover)
        if leftover:
            raise MalformedTuple(f"unexpected text in PD code: {leftover!r}")
    crossings = []
    for t in raw:
        if len(t) != 4:
            raise MalformedTuple(f"crossing tuple {t} has {len(t)} entries, expected 4")
        try:
            crossings.append(tuple(int(x) for x in t))
        except (TypeError, ValueError):
            raise MalformedTuple(f"non-integer label in crossing {t}") from None
    if not crossings:
        return LinkDiagram((), ((),), ())
    return _build(crossings)


@dataclass(frozen=True)
class WirtingerData:
    presentation: Presentation
    meridian_words: tuple[Word, ...]
    component_names: tuple[str, ...]
    arc_component: tuple[int, ...]
    abelianization: Abelianization


def wirtinger(d: LinkDiagram) -> WirtingerData:
    """One generator per arc, one relator per crossing.

    At a crossing of sign ``s`` with over-arc ``o``, the relator is
    ``o^s * in * o^-s * out^-1``. The abelianization is expressed in the
    meridian basis, so every arc of component ``j`` maps to ``t_{j+1}``.
    """
    arcs, owner = d.arcs, d.arc_components
    edge_arc = {e: k for k, arc in enumerate(arcs) for e in arc}
    meridians = [Word.generator(owner.index(j)) for j in range(d.num_components)]
    relators = []
    for c, s in zip(d.crossings, d.signs):
        a_in, over, a_out = edge_arc[c[0]], edge_arc[c[1]], edge_arc[c[2]]
        o = (over, s)
        relators.append(Word([o, (a_in, 1), (over, -s), (a_out, -1)]))
    names = tuple(f"x{k + 1}" for k in range(len(arcs)))
    P = Presentation(names, tuple(relators))
    ab = abelianize(P, basis=meridians)
    return WirtingerData(P, tuple(meridians), d.component_names, owner, ab)
