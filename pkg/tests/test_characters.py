"""Formal characters: Weyl, Demazure, and truncated cell cones."""

import itertools

import pytest

from qbruhat.cartan import build_cartan
from qbruhat.characters import (FormalCharacter, cell_translate_character,
                                character_to_json, demazure_character,
                                demazure_step, weight_multiplicity,
                                weyl_character, weyl_dim)
from qbruhat.weyl import WeylGroup

import json


WEYL_DIMS = [
    ("A1", (1,), 2),
    ("A1", (3,), 4),
    ("A2", (1, 0), 3),
    ("A2", (1, 1), 8),
    ("A2", (2, 2), 27),
    ("A2", (3, 0), 10),
    ("B2", (1, 0), 5),
    ("B2", (0, 1), 4),
    ("B2", (1, 1), 16),
    ("B2", (0, 2), 10),
    ("B2", (2, 0), 14),
    ("G2", (1, 0), 7),
    ("G2", (0, 1), 14),
    ("A3", (1, 0, 0), 4),
    ("A3", (0, 1, 0), 6),
    ("A3", (1, 0, 1), 15),
]


@pytest.mark.parametrize("label,lam,dim", WEYL_DIMS)
def test_weyl_dim_frozen(label, lam, dim):
    assert weyl_dim(build_cartan(label), lam) == dim


@pytest.mark.parametrize("label", ["A2", "B2"])
def test_character_mass_equals_dim(label):
    datum = build_cartan(label)
    group = WeylGroup.build(datum)
    for lam in itertools.product(range(3), repeat=2):
        ch = weyl_character(datum, group, lam)
        assert ch.mass() == weyl_dim(datum, lam)


def test_character_weyl_invariant():
    datum = build_cartan("B2")
    group = WeylGroup.build(datum)
    ch = weyl_character(datum, group, (1, 1))
    for w in group.elements:
        for mu, c in ch.terms.items():
            assert ch.coefficient(w.act(mu)) == c


def test_weight_multiplicities_adjoint():
    datum = build_cartan("A2")
    group = WeylGroup.build(datum)
    assert weight_multiplicity(datum, group, (1, 1), (0, 0)) == 2
    assert weight_multiplicity(datum, group, (1, 1), (2, -1)) == 1
    assert weight_multiplicity(datum, group, (1, 1), (3, 0)) == 0


def test_demazure_step_monomials():
    datum = build_cartan("A2")
    start = FormalCharacter.monomial(datum, (2, -1))  # pairing 2 with alpha1
    out = demazure_step(start, 0)
    assert out.coefficient((2, -1)) == 1
    assert out.coefficient((0, 0)) == 1
    assert out.coefficient((-2, 1)) == 1
    assert out.mass() == 3
    # pairing -1 kills the monomial
    gone = demazure_step(FormalCharacter.monomial(datum, (-1, 1)), 0)
    assert gone.mass() == 0


def test_demazure_step_idempotent():
    datum = build_cartan("B2")
    group = WeylGroup.build(datum)
    ch = demazure_character(datum, group, group.parse("s1 s2"), (1, 1))
    for i in range(2):
        once = demazure_step(ch, i)
        assert demazure_step(once, i) == once


def test_demazure_masses_adjoint():
    datum = build_cartan("A2")
    group = WeylGroup.build(datum)
    masses = [demazure_character(datum, group, w, (1, 1)).mass()
              for w in group.sorted_elements()]
    assert masses == [1, 2, 2, 5, 5, 8]


def test_demazure_extremes():
    datum = build_cartan("B2")
    group = WeylGroup.build(datum)
    lam = (1, 1)
    bottom = demazure_character(datum, group, group.identity, lam)
    assert bottom.terms == {lam: 1}
    top = demazure_character(datum, group, group.longest, lam)
    assert top == weyl_character(datum, group, lam)


def test_demazure_monotone_in_bruhat():
    datum = build_cartan("A2")
    group = WeylGroup.build(datum)
    lam = (2, 1)
    chars = {w.idx: demazure_character(datum, group, w, lam)
             for w in group.elements}
    for y in group.elements:
        for z in group.elements:
            if group.bruhat_leq(y, z):
                for mu, c in chars[y.idx].terms.items():
                    assert chars[z.idx].coefficient(mu) >= c


def kostant_count(datum, target_rc, roots_rc):
    """Number of ways to write target_rc as a nonnegative integer
    combination of the given root coordinate vectors, by brute force."""
    count = 0
    bound = sum(abs(c) for c in target_rc) + 1
    for combo in itertools.product(range(bound + 1),
                                   repeat=len(roots_rc)):
        total = [0] * len(target_rc)
        for k, m in zip(range(len(roots_rc)), combo):
            for j in range(len(target_rc)):
                total[j] += combo[k] * roots_rc[k][j]
        if tuple(total) == tuple(target_rc):
            count += 1
    return count


def test_cell_character_identity_is_kostant():
    datum = build_cartan("A2")
    group = WeylGroup.build(datum)
    depth = 6
    ch = cell_translate_character(group, group.identity, depth)
    negatives = [tuple(-c for c in rc) for rc in datum.positive_roots]
    assert ch.coefficient((0, 0)) == 1
    for mu, c in ch.terms.items():
        rc = datum.root_coords(mu)
        assert all(x.denominator == 1 for x in rc)
        assert c == kostant_count(datum, [int(x) for x in rc], negatives)
    # depth really truncates: everything kept is within the window
    assert all(datum.depth(mu) <= depth for mu in ch.terms)
    # and the window is full: a handful of nearby weights are present
    assert ch.coefficient((-2, -2)) > 0
    assert ch.coefficient((0, -3)) > 0


def test_cell_character_translates():
    datum = build_cartan("A2")
    group = WeylGroup.build(datum)
    w = group.parse("s1 s2")
    ch = cell_translate_character(group, w, 4)
    # the cone over w(negative roots) starts at zero
    assert ch.coefficient((0, 0)) == 1
    cone = [w.act(datum.root_to_fund(tuple(-c for c in rc)))
            for rc in datum.positive_roots]
    for mu in cone:
        assert ch.coefficient(mu) >= 1
    for mu in ch.terms:
        assert datum.depth(mu) <= 4


def test_character_json():
    datum = build_cartan("A2")
    group = WeylGroup.build(datum)
    ch = cell_translate_character(group, group.identity, 3)
    doc = json.loads(character_to_json(ch, "A2", "e", 3))
    assert doc["schema"] == "qbruhat/char-v1"
    assert doc["type"] == "A2"
    assert doc["w"] == "e"
    assert doc["depth"] == 3
    total = sum(entry["coeff"] for entry in doc["terms"])
    assert total == ch.mass()


def test_formal_character_algebra():
    datum = build_cartan("A2")
    a = FormalCharacter.monomial(datum, (1, 0))
    b = FormalCharacter.monomial(datum, (0, 1), 2)
    assert (a + b).mass() == 3
    assert (a * b).coefficient((1, 1)) == 2
    assert (a - a).mass() == 0
    assert a.scale(5).mass() == 5
