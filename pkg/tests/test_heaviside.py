from itertools import combinations_with_replacement

import numpy as np
import pytest
from conftest import RANK_LE_4, get_ap, get_rs
from hypothesis import given, settings
from hypothesis import strategies as st

from shiring import (
    NotAntichainError,
    RingElement,
    catalan_number,
    delta_element,
    filtration_rank,
    filtration_report,
    format_element,
    graded_distribution,
    h_antichain,
    h_root,
    mobius_matrix,
    multiply,
    one,
    to_delta_basis,
    to_h_basis,
    zeta_matrix,
)
from shiring.intlinalg import fraction_free_rank


def test_delta_is_unit_vector_and_idempotent():
    ap = get_ap("A2")
    d = delta_element(ap, ())
    assert d.coords == (1, 0, 0, 0, 0)
    assert multiply(d, d) == d
    other = delta_element(ap, (ap.rs.index_of((1, 1)),))
    assert multiply(d, other).coords == (0, 0, 0, 0, 0)


def test_delta_rejects_unknown_antichain():
    ap = get_ap("A2")
    with pytest.raises(NotAntichainError):
        delta_element(ap, (0, 2))


def test_h_root_a2_frozen():
    # canonical A2 listing: (), {theta}, {alpha2}, {alpha1}, {alpha1,alpha2}
    ap = get_ap("A2")
    rs = ap.rs
    assert h_root(ap, (1, 1)).coords == (0, 1, 1, 1, 1)
    assert h_root(ap, (1, 0)).coords == (0, 0, 0, 1, 1)
    assert h_root(ap, (0, 1)).coords == (0, 0, 1, 0, 1)
    assert h_root(ap, rs.index_of((1, 1))) == h_root(ap, (1, 1))


@pytest.mark.parametrize("label", RANK_LE_4)
def test_highest_root_supported_on_all_nonempty_ideals(label):
    ap = get_ap(label)
    top = ap.rs.highest_root_index
    coords = h_root(ap, top).coords
    assert coords == tuple(1 if s > 0 else 0 for s in ap.ideal_sizes)


def test_h_antichain_small_frozen():
    ap = get_ap("A2")
    rs = ap.rs
    assert h_antichain(ap, ()) == one(ap)
    assert h_antichain(ap, ()).coords == (1, 1, 1, 1, 1)
    pair = tuple(sorted((rs.index_of((1, 0)), rs.index_of((0, 1)))))
    assert h_antichain(ap, pair).coords == (0, 0, 0, 0, 1)
    lhs = multiply(h_root(ap, (1, 0)), h_root(ap, (0, 1)))
    assert lhs == h_antichain(ap, pair)


@pytest.mark.parametrize("label", RANK_LE_4)
def test_h_antichain_equals_product_of_generators(label):
    ap = get_ap(label)
    for p in ap.antichains:
        prod = one(ap)
        for alpha in p:
            prod = multiply(prod, h_root(ap, alpha))
        assert prod == h_antichain(ap, p)


@pytest.mark.parametrize("label", RANK_LE_4)
def test_h_matrix_is_zeta(label):
    ap = get_ap(label)
    rows = np.array(
        [h_antichain(ap, p).coords for p in ap.antichains], dtype=np.int64
    )
    assert np.array_equal(rows, zeta_matrix(ap))


@pytest.mark.parametrize("label", RANK_LE_4)
def test_comparable_pairs_collapse(label):
    rs, ap = get_rs(label), get_ap(label)
    num = len(rs.positive_roots)
    for a in range(num):
        for b in range(num):
            if a != b and rs.leq(a, b):
                assert multiply(h_root(ap, a), h_root(ap, b)) == h_root(ap, a)


def test_multiply_unit_law_and_h_inputs():
    ap = get_ap("B2")
    x = RingElement("delta", (3, -1, 0, 2, 5, 1))
    assert multiply(one(ap), x) == x
    hx = to_h_basis(ap, x)
    assert multiply(hx, one(ap), ap) == x * one(ap)
    with pytest.raises(ValueError):
        multiply(hx, one(ap))


def test_multiply_rejects_mismatched_lengths():
    with pytest.raises(ValueError):
        multiply(RingElement("delta", (1, 2)), RingElement("delta", (1, 2, 3)))


def test_operator_sugar():
    ap = get_ap("A2")
    a = h_root(ap, (1, 0))
    b = h_root(ap, (0, 1))
    assert (a * b).coords == tuple(x * y for x, y in zip(a.coords, b.coords))
    assert (a + b - b) == a
    assert (2 * a).coords == tuple(2 * x for x in a.coords)
    assert (-a).coords == tuple(-x for x in a.coords)


def test_delta_empty_in_h_basis_frozen():
    ap = get_ap("A2")
    x = to_h_basis(ap, delta_element(ap, ()))
    assert x.basis == "h"
    # unit minus the basis element of the highest-root singleton
    assert x.coords == (1, -1, 0, 0, 0)


def test_h_basis_coordinates_of_h_antichain_are_units():
    ap = get_ap("B2")
    for i, p in enumerate(ap.antichains):
        coords = to_h_basis(ap, h_antichain(ap, p)).coords
        assert coords == tuple(1 if j == i else 0 for j in range(len(ap)))


def test_to_h_basis_rejects_wrong_tag():
    ap = get_ap("A1")
    with pytest.raises(ValueError):
        to_h_basis(ap, RingElement("h", (1, 0)))
    with pytest.raises(ValueError):
        to_delta_basis(ap, RingElement("delta", (1, 0)))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-10**6, 10**6), min_size=5, max_size=5))
def test_basis_round_trip_is_identity(coords):
    ap = get_ap("A2")
    x = RingElement("delta", tuple(coords))
    assert to_delta_basis(ap, to_h_basis(ap, x)) == x


@pytest.mark.parametrize("label", ["A3", "B3", "G2", "D4"])
def test_basis_round_trip_both_ways(label):
    import random

    ap = get_ap(label)
    rng = random.Random(f"trip-{label}")
    for _ in range(25):
        coords = tuple(rng.randrange(-99, 100) for _ in range(len(ap)))
        d = RingElement("delta", coords)
        assert to_delta_basis(ap, to_h_basis(ap, d)) == d
        h = RingElement("h", coords)
        assert to_h_basis(ap, to_delta_basis(ap, h)) == h


def test_change_of_basis_is_unimodular():
    for label in ["A2", "B3", "G2"]:
        ap = get_ap(label)
        z = zeta_matrix(ap)
        m = mobius_matrix(ap)
        assert abs(int(np.prod(np.diag(z)))) == 1
        assert np.array_equal(z @ m, np.eye(len(ap), dtype=np.int64))


def test_filtration_a2_sequence():
    ap = get_ap("A2")
    assert filtration_report(ap).ranks == (1, 4, 5)
    assert filtration_rank(ap, 0) == 1
    assert filtration_rank(ap, 1) == 4
    assert filtration_rank(ap, 2) == 5


def test_filtration_small_frozen():
    assert filtration_report(get_ap("A1")).ranks == (1, 2)
    assert filtration_report(get_ap("B2")).ranks == (1, 5, 6)
    assert filtration_report(get_ap("G2")).ranks == (1, 7, 8)
    assert filtration_report(get_ap("A3")).ranks == (1, 7, 13, 14)


@pytest.mark.parametrize("label", ["A1", "A2", "A3", "A4", "B2", "B3", "G2"])
def test_filtration_monotone_and_reaches_everything(label):
    rs, ap = get_rs(label), get_ap(label)
    ranks = filtration_report(ap).ranks
    assert ranks[0] == 1
    assert ranks[-1] == catalan_number(rs)
    assert all(a <= b for a, b in zip(ranks, ranks[1:]))
    sizes = graded_distribution(ap)
    partial = [sum(sizes[: k + 1]) for k in range(len(sizes))]
    assert list(ranks) == partial


@pytest.mark.parametrize("label", ["A2", "B2"])
def test_filtration_rank_against_raw_product_span(label):
    # Oracle: span every product of at most k generators directly, with no
    # combinatorial shortcut, and row reduce that.
    rs, ap = get_rs(label), get_ap(label)
    num = len(rs.positive_roots)
    for k in range(rs.rank + 1):
        rows = [one(ap).coords]
        for size in range(1, k + 1):
            for combo in combinations_with_replacement(range(num), size):
                prod = one(ap)
                for alpha in combo:
                    prod = multiply(prod, h_root(ap, alpha))
                rows.append(prod.coords)
        assert fraction_free_rank(rows) == filtration_rank(ap, k)


def test_filtration_rank_rejects_negative():
    with pytest.raises(ValueError):
        filtration_rank(get_ap("A1"), -1)


def test_format_element_shows_support():
    ap = get_ap("A2")
    x = delta_element(ap, ()) - 2 * delta_element(ap, (ap.rs.index_of((1, 1)),))
    assert format_element(ap, x) == "d{} - 2*d{2}"
    assert format_element(ap, 0 * x) == "0"
    h = to_h_basis(ap, delta_element(ap, ()))
    assert format_element(ap, h) == "h{} - h{2}"
