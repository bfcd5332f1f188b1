"""Cartan data: matrices, roots, pairings, dominance."""

from fractions import Fraction

import pytest

from qbruhat.cartan import build_cartan


EXPECTED_CARTAN = {
    "A1": ((2,),),
    "A2": ((2, -1), (-1, 2)),
    "A3": ((2, -1, 0), (-1, 2, -1), (0, -1, 2)),
    "B2": ((2, -1), (-2, 2)),
    "B3": ((2, -1, 0), (-1, 2, -1), (0, -2, 2)),
    "C2": ((2, -2), (-1, 2)),
    "G2": ((2, -3), (-1, 2)),
}

POSITIVE_ROOT_COUNTS = {"A1": 1, "A2": 3, "A3": 6, "B2": 4,
                        "B3": 9, "C2": 4, "D4": 12, "G2": 6}


@pytest.mark.parametrize("label", sorted(EXPECTED_CARTAN))
def test_cartan_matrix(label):
    datum = build_cartan(label)
    assert datum.cartan == EXPECTED_CARTAN[label]
    assert datum.rank == len(EXPECTED_CARTAN[label])


@pytest.mark.parametrize("label", sorted(POSITIVE_ROOT_COUNTS))
def test_positive_root_count(label):
    datum = build_cartan(label)
    assert len(datum.positive_roots) == POSITIVE_ROOT_COUNTS[label]


@pytest.mark.parametrize("label", sorted(EXPECTED_CARTAN))
def test_simple_roots_and_pairing(label):
    datum = build_cartan(label)
    for i in range(datum.rank):
        alpha = datum.simple_root(i)
        for j in range(datum.rank):
            # <alpha_i, alpha_j-coroot> reproduces the Cartan matrix
            assert datum.coroot_pairing(alpha, j) == datum.cartan[j][i]


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
def test_root_coordinate_round_trip(label):
    # positive roots are stored in root coordinates
    datum = build_cartan(label)
    for rc in datum.positive_roots:
        mu = datum.root_to_fund(rc)
        back = datum.root_coords(mu)
        assert tuple(back) == tuple(Fraction(c) for c in rc)
        assert datum.in_root_lattice(mu)


def test_inner_product_symmetric():
    datum = build_cartan("B2")
    weights = [(1, 0), (0, 1), (2, -1), (-1, 3)]
    for a in weights:
        for b in weights:
            assert datum.inner(a, b) == datum.inner(b, a)


def test_inner_product_normalization():
    # short roots have squared length 2, so (alpha, alpha)/2 gives d_i
    for label in ["A2", "B2", "G2"]:
        datum = build_cartan(label)
        for i in range(datum.rank):
            alpha = datum.simple_root(i)
            assert datum.inner(alpha, alpha) == 2 * datum.d[i]


def test_rho_pairs_to_one():
    for label in ["A2", "B2", "B3"]:
        datum = build_cartan(label)
        rho = datum.rho()
        assert all(c == 1 for c in rho)
        for i in range(datum.rank):
            assert datum.coroot_pairing(rho, i) == 1


def test_dominance_order():
    datum = build_cartan("A2")
    rho = (1, 1)
    assert datum.dominance_leq((1, -2), rho)  # rho - (1,-2) = alpha2
    assert datum.dominance_leq((-1, -1), rho)
    assert not datum.dominance_leq((2, 2), rho)
    assert datum.dominance_leq((2, -4), (1, -2))  # gap is alpha2
    assert not datum.dominance_leq((1, -2), (2, -4))


def test_dominant_detection():
    datum = build_cartan("B2")
    assert datum.is_dominant((0, 0))
    assert datum.is_dominant((3, 1))
    assert not datum.is_dominant((-1, 2))


def test_height_and_depth():
    datum = build_cartan("A2")
    assert datum.height((1, 1)) == 2  # alpha + beta
    assert datum.height((2, -1)) == 1
    assert datum.depth((-1, -1)) == 2
    spinor = build_cartan("B2")
    with pytest.raises(ValueError):
        spinor.height((0, 1))  # half-integral root coordinates


def test_bad_labels_rejected():
    with pytest.raises(ValueError):
        build_cartan("Z9")
    with pytest.raises(ValueError):
        build_cartan("A0")
    with pytest.raises(ValueError):
        build_cartan("G5")
