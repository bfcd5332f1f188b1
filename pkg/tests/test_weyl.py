"""Weyl group construction, Bruhat order, and rank statistics.

The Bruhat and reflection-length checks run against independent oracles
built here by brute force, so the library cannot agree with itself by
construction.
"""


import pytest
from hypothesis import given, settings, strategies as st

from qbruhat.cartan import build_cartan
from qbruhat.weyl import WeylGroup, format_word, parse_word


ORDERS = {"A1": 2, "A2": 6, "A3": 24, "B2": 8, "B3": 48, "G2": 12}
LONGEST_LENGTHS = {"A1": 1, "A2": 3, "A3": 6, "B2": 4, "B3": 9, "G2": 6}


def group_of(label):
    return WeylGroup.build(build_cartan(label))


def bruhat_oracle(group):
    """Transitive closure of the reflection-edge relation.

    u < t.u whenever length goes up; the full order is the reflexive
    transitive closure.  Completely independent of the subword test
    the library uses.
    """
    n = len(group.elements)
    leq = [[False] * n for _ in range(n)]
    for w in group.elements:
        leq[w.idx][w.idx] = True
    edges = []
    for w in group.elements:
        for t in group.reflections():
            tw = t * w
            if tw.length > w.length:
                edges.append((w.idx, tw.idx))
    changed = True
    while changed:
        changed = False
        for a, b in edges:
            for c in range(n):
                if leq[c][a] and not leq[c][b]:
                    leq[c][b] = True
                    changed = True
    return leq


def reflection_length_oracle(group):
    """Breadth-first distance from e in the (all-reflections) Cayley
    graph."""
    dist = {group.identity.idx: 0}
    frontier = [group.identity]
    step = 0
    while frontier:
        step += 1
        nxt = []
        for w in frontier:
            for t in group.reflections():
                tw = t * w
                if tw.idx not in dist:
                    dist[tw.idx] = step
                    nxt.append(tw)
        frontier = nxt
    return dist


@pytest.mark.parametrize("label", sorted(ORDERS))
def test_group_order(label):
    group = group_of(label)
    assert len(group.elements) == ORDERS[label]


@pytest.mark.parametrize("label", sorted(LONGEST_LENGTHS))
def test_longest_element(label):
    group = group_of(label)
    w0 = group.longest
    assert w0.length == LONGEST_LENGTHS[label]
    assert max(w.length for w in group.elements) == w0.length
    assert (w0 * w0).is_identity()


def test_length_matches_word_length():
    group = group_of("B2")
    for w in group.elements:
        assert len(w.word) == w.length


def test_canonical_words_a2():
    group = group_of("A2")
    words = sorted(format_word(w.word) for w in group.elements)
    assert words == ["e", "s1", "s1 s2", "s1 s2 s1", "s2", "s2 s1"]


def test_word_round_trip():
    group = group_of("B2")
    for w in group.elements:
        assert group.parse(format_word(w.word)).idx == w.idx


def test_parse_rejects_garbage():
    group = group_of("A2")
    with pytest.raises(ValueError):
        group.parse("s3")
    with pytest.raises(ValueError):
        group.parse("t1")
    assert parse_word("e", 2) == ()
    assert parse_word("s1 s2 s1", 2) == (0, 1, 0)


def test_multiplication_table_closed():
    group = group_of("A2")
    for a in group.elements:
        for b in group.elements:
            c = a * b
            assert c.idx in range(len(group.elements))
            assert c.length <= a.length + b.length


def test_inverse():
    group = group_of("B2")
    for w in group.elements:
        assert (w * w.inverse()).is_identity()
        assert w.inverse().length == w.length


def test_action_preserves_inner_product():
    group = group_of("B2")
    datum = group.datum
    weights = [(1, 0), (0, 1), (1, 1), (2, -1)]
    for w in group.elements:
        for a in weights:
            for b in weights:
                assert datum.inner(w.act(a), w.act(b)) == datum.inner(a, b)


def test_descents_track_length():
    group = group_of("B2")
    for w in group.elements:
        for i in range(group.rank):
            s = group.gens[i]
            assert group.left_descent(w, i) == ((s * w).length < w.length)
            assert group.right_descent(w, i) == ((w * s).length < w.length)


@pytest.mark.parametrize("label", ["A2", "B2"])
def test_bruhat_against_oracle(label):
    group = group_of(label)
    oracle = bruhat_oracle(group)
    for a in group.elements:
        for b in group.elements:
            assert group.bruhat_leq(a, b) == oracle[a.idx][b.idx], \
                (format_word(a.word), format_word(b.word))


@pytest.mark.parametrize("label", ["A2", "B2", "A3"])
def test_reflection_length_against_oracle(label):
    group = group_of(label)
    dist = reflection_length_oracle(group)
    for w in group.elements:
        assert group.reflection_length(w) == dist[w.idx]


@pytest.mark.parametrize("label", ["A2", "B2", "A3"])
def test_rank_splits(label):
    # fixed lattice rank plus reflection length fills the rank
    group = group_of(label)
    for w in group.elements:
        assert group.fixed_space_rank(w) + group.reflection_length(w) == \
            group.rank


def test_fixed_lattice_really_fixed():
    group = group_of("B2")
    n = group.rank
    for w in group.elements:
        lattice = group.fixed_lattice(w)
        assert lattice.dim == group.fixed_space_rank(w)
        for row in lattice.rows:
            image = [sum((row[j] * w.mat[i][j] for j in range(n)),
                         start=row[0] - row[0]) for i in range(n)]
            assert image == list(row)


def test_interval():
    group = group_of("A2")
    e = group.identity
    w0 = group.longest
    assert len(group.interval(e, w0)) == 6
    s1 = group.parse("s1")
    s12 = group.parse("s1 s2")
    seg = group.interval(s1, s12)
    assert sorted(format_word(w.word) for w in seg) == ["s1", "s1 s2"]


def test_demazure_product():
    group = group_of("A2")
    w0 = group.longest

    def fold(word):
        out = group.identity
        for i in reversed(word):
            out = group.demazure_product(i, out)
        return out

    assert fold([0, 1, 0, 1, 0, 1]).idx == w0.idx
    assert fold([0, 0, 0]).idx == group.parse("s1").idx
    for w in group.elements:
        assert fold(w.word).idx == w.idx


def test_theta_involution():
    a2 = group_of("A2")
    assert a2.theta() == (1, 0)
    b2 = group_of("B2")
    assert b2.theta() == (0, 1)
    a3 = group_of("A3")
    assert a3.theta() == (2, 1, 0)


def test_sorted_elements_order():
    group = group_of("B2")
    lengths = [w.length for w in group.sorted_elements()]
    assert lengths == sorted(lengths)


@given(st.lists(st.integers(min_value=0, max_value=1), max_size=8))
@settings(max_examples=60, deadline=None)
def test_from_word_consistent(word):
    group = group_of("B2")
    w = group.from_word(word)
    step = group.identity
    for i in word:
        step = step * group.gens[i]
    assert w.idx == step.idx


@given(st.lists(st.integers(min_value=0, max_value=1), max_size=8))
@settings(max_examples=40, deadline=None)
def test_canonical_word_minimal(word):
    group = group_of("A2")
    w = group.from_word(word)
    # canonical word must be reduced and evaluate back to w
    assert len(w.word) == w.length
    assert group.from_word(w.word).idx == w.idx
