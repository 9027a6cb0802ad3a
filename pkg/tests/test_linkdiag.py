import random

import pytest

from foxchi.alexander import diagram_delta
from foxchi.errors import ArcCountMismatch, BadToken, DiagramError, MalformedTuple, StrandOutOfRange
from foxchi.fpgroup import abelianize
from foxchi.laurent import parse_poly
from foxchi.linkdiag import parse_braid, parse_pd, wirtinger

TREFOIL_PD = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)"
HOPF_PD = "X(1,3,2,4) X(3,1,4,2)"
FIG8_PD = "X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]"


def _perm_cycles(word, strands):
    perm = list(range(strands))
    for k in word:
        i = abs(k) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    seen, cycles = set(), 0
    for s in range(strands):
        if s not in seen:
            cycles += 1
            while s not in seen:
                seen.add(s)
                s = perm[s]
    return cycles


@pytest.mark.parametrize(
    "text, strands, crossings, comps",
    [("1 1 1", 2, 3, 1), ("1 -1", 2, 2, 2), ("", 1, 0, 1), ("", 3, 0, 3), ("1, -2, 1, -2", 3, 4, 1)],
)
def test_braid_examples(text, strands, crossings, comps):
    d = parse_braid(text, strands)
    assert d.num_crossings == crossings
    assert d.num_components == comps


def test_braid_errors():
    with pytest.raises(BadToken):
        parse_braid("1 a", 2)
    with pytest.raises(BadToken):
        parse_braid("0", 2)
    with pytest.raises(StrandOutOfRange):
        parse_braid("2", 2)
    with pytest.raises(StrandOutOfRange):
        parse_braid("-3", 3)


def test_braid_signs_and_labels():
    d = parse_braid("1 1 -1", 2)
    assert d.signs == (1, 1, -1)
    labels = sorted(e for c in d.crossings for e in c)
    assert labels == sorted(list(range(1, 2 * d.num_crossings + 1)) * 2)


def test_pd_examples():
    d = parse_pd(TREFOIL_PD)
    assert (d.num_crossings, d.num_components) == (3, 1)
    assert d.writhe() in (3, -3)
    d = parse_pd(HOPF_PD)
    assert (d.num_crossings, d.num_components) == (2, 2)
    with pytest.raises(MalformedTuple):
        parse_pd("X(1,2,3)")


def test_pd_sample_with_disjoint_strands():
    # each crossing's under-strand closes up on the over-strand of the next:
    # read literally this code is three 2-edge components, not a knot
    d = parse_pd("X(1,4,2,3) X(3,6,4,5) X(5,2,6,1)")
    assert d.num_crossings == 3
    assert d.num_components == 3


def test_pd_formats_agree():
    a = parse_pd(TREFOIL_PD)
    b = parse_pd("[[1,5,2,4],[3,1,4,6],[5,3,6,2]]")
    c = parse_pd("PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]")
    assert a.crossings == b.crossings == c.crossings
    assert a.signs == b.signs == c.signs


def test_pd_errors():
    with pytest.raises(ArcCountMismatch):
        parse_pd("X(1,2,3,4)")
    with pytest.raises(MalformedTuple):
        parse_pd("X(1,2,3,x)")
    with pytest.raises(MalformedTuple):
        parse_pd("[[1,2,3]]")
    with pytest.raises(MalformedTuple):
        parse_pd("Y(1,2,3,4)")
    assert issubclass(MalformedTuple, DiagramError)


def test_empty_pd_is_unknot():
    d = parse_pd("")
    assert d.num_components == 1 and d.num_crossings == 0


def test_wirtinger_examples():
    W = wirtinger(parse_pd(TREFOIL_PD))
    assert W.presentation.num_generators == 3 and len(W.presentation.relators) == 3
    assert W.abelianization.free_rank == 1
    assert set(W.abelianization.images) == {(1,)}
    W = wirtinger(parse_pd(HOPF_PD))
    assert W.presentation.num_generators == 2 and len(W.presentation.relators) == 2
    assert W.abelianization.images == ((1, 0), (0, 1))
    W = wirtinger(parse_pd(""))
    assert W.presentation.num_generators == 1 and W.presentation.relators == ()
    assert len(W.meridian_words) == 1


def test_wirtinger_relator_shape():
    W = wirtinger(parse_braid("1 -2 1 -2", 3))
    for r in W.presentation.relators:
        assert len(r) == 4
        (o1, s1), _, (o2, s2), (_, s4) = r.letters
        assert o1 == o2 and s1 == -s2 and s4 == -1


def _random_braids(count, seed):
    rng = random.Random(seed)
    for _ in range(count):
        strands = rng.randint(1, 5)
        word = [rng.choice([1, -1]) * rng.randint(1, strands - 1) for _ in range(rng.randint(0, 9))] if strands > 1 else []
        yield word, strands


@pytest.mark.parametrize("word, strands", list(_random_braids(40, 5)))
def test_random_braid_invariants(word, strands):
    d = parse_braid(" ".join(map(str, word)), strands)
    assert d.num_components == _perm_cycles(word, strands)
    assert d.signs == tuple(1 if k > 0 else -1 for k in word)
    W = wirtinger(d)
    # meridian classes: every arc of component j maps to t_j
    ab = abelianize(W.presentation)
    assert ab.free_rank == d.num_components
    for k, comp in enumerate(W.arc_component):
        assert W.abelianization.images[k] == tuple(int(i == comp) for i in range(d.num_components))
    # PD round trip preserves the diagram; a component that only passes over
    # has no under-edge to fix its direction, so those are left out
    unders = {c[0] for c in d.crossings}
    if d.num_crossings and all(set(comp) & unders for comp in d.components):
        e = parse_pd(d.to_pd())
        assert e.crossings == d.crossings and e.signs == d.signs


@pytest.mark.parametrize("base, strands", [("1 1 1", 2), ("1 -2 1 -2", 3)])
def test_reidemeister_two_insertions(base, strands):
    rng = random.Random(1)
    expected = diagram_delta(parse_braid(base, strands))
    for _ in range(10):
        word = base.split()
        for _ in range(rng.randint(1, 5)):
            i = rng.randint(1, strands - 1)
            pos = rng.randint(0, len(word))
            pair = [str(i), str(-i)] if rng.random() < 0.5 else [str(-i), str(i)]
            word[pos:pos] = pair
        assert diagram_delta(parse_braid(" ".join(word), strands)) == expected


def test_braid_and_pd_agree():
    assert diagram_delta(parse_braid("1 1 1", 2)) == diagram_delta(parse_pd(TREFOIL_PD))
    assert diagram_delta(parse_braid("1 -2 1 -2", 3)) == diagram_delta(parse_pd(FIG8_PD))
    assert diagram_delta(parse_pd(HOPF_PD)) == parse_poly("1", 2)
