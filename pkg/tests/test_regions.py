import random
from fractions import Fraction

import pytest
from conftest import get_ap, get_rs

from shiring import (
    BoundaryError,
    ChamberError,
    InvariantError,
    classify_point,
    format_point,
    ideal_of,
    parse_point,
    point_slack,
    region_report,
    root_value,
    sign_vector,
    witness_point,
)


def test_parse_point_exact_and_rejects_floats():
    assert parse_point("1/4,2/5") == (Fraction(1, 4), Fraction(2, 5))
    assert parse_point("3, -1/2") == (Fraction(3), Fraction(-1, 2))
    for bad in ["0.5,1", "1e-3", "1/4,", "a,b"]:
        with pytest.raises(ValueError):
            parse_point(bad)


def test_format_point_round_trip():
    x = (Fraction(5, 8), Fraction(2))
    assert format_point(x) == "5/8,2/1"
    assert parse_point(format_point(x)) == x


def test_root_value_is_integer_dot_product():
    rs = get_rs("B2")
    x = (Fraction(1, 4), Fraction(2, 5))
    assert root_value(rs, (1, 2), x) == Fraction(21, 20)
    assert root_value(rs, rs.index_of((1, 1)), x) == Fraction(13, 20)


def test_classify_b2_hand_values():
    rs = get_rs("B2")
    assert classify_point(rs, parse_point("1/8,1/8")) == ()
    assert classify_point(rs, parse_point("1/4,2/5")) == (rs.index_of((1, 2)),)
    far = classify_point(rs, parse_point("2,2"))
    assert far == tuple(sorted((rs.index_of((1, 0)), rs.index_of((0, 1)))))


def test_classify_boundary_error_names_the_root():
    rs = get_rs("B2")
    with pytest.raises(BoundaryError) as err:
        classify_point(rs, parse_point("1/2,1/4"))
    assert err.value.root == (1, 2)
    assert err.value.value == 1
    with pytest.raises(BoundaryError):
        classify_point(rs, (Fraction(0), Fraction(1, 3)))


def test_classify_chamber_error():
    rs = get_rs("A2")
    with pytest.raises(ChamberError):
        classify_point(rs, (Fraction(-1, 2), Fraction(1, 3)))


def test_classify_dimension_check():
    rs = get_rs("A2")
    with pytest.raises(ValueError):
        classify_point(rs, (Fraction(1, 2),))


def test_deep_alcove_point_classifies_to_empty():
    # all coordinates 1/(2h) keep every root value below (h-1)/(2h) < 1
    for label in ["A3", "B3", "C3", "D4", "G2", "F4"]:
        rs = get_rs(label)
        x = (Fraction(1, 2 * rs.coxeter_number),) * rs.rank
        assert classify_point(rs, x) == ()


def test_sign_vector_examples():
    rs = get_rs("B2")
    sv = sign_vector(rs, ())
    assert set(sv.labels) == {"below"}
    i2 = rs.index_of((0, 1))
    sv = sign_vector(rs, (i2,))
    assert sv.above_indices() == ideal_of(rs, (i2,))
    simples = tuple(sorted((rs.index_of((1, 0)), i2)))
    assert set(sign_vector(rs, simples).labels) == {"above"}


@pytest.mark.parametrize("label", ["A1", "A2", "A3", "B2", "B3", "C3", "G2"])
def test_witness_round_trip_exhaustive(label):
    rs, ap = get_rs(label), get_ap(label)
    for p in ap.antichains:
        w = witness_point(rs, p)
        assert classify_point(rs, w) == p
        assert point_slack(rs, w) > 0


def test_witness_rank_guard():
    # guard kicks in above rank 6; the override lifts it
    big = get_rs("A7")
    with pytest.raises(ValueError):
        witness_point(big, ())
    w = witness_point(big, (), allow_large=True)
    assert classify_point(big, w) == ()
    # rank 6 itself stays unguarded
    e6 = get_rs("E6")
    w6 = witness_point(e6, ())
    assert classify_point(e6, w6) == ()


def test_witness_perturbation_stability():
    # moving each coordinate by less than slack / (2 (h-1)) keeps every
    # root value within the slack, so the region cannot change
    rng = random.Random("perturb")
    for label in ["A2", "B2", "B3"]:
        rs, ap = get_rs(label), get_ap(label)
        for p in ap.antichains:
            w = witness_point(rs, p)
            s = point_slack(rs, w)
            budget = s / (2 * (rs.coxeter_number - 1))
            for _ in range(3):
                delta = [
                    Fraction(rng.randrange(-99, 100), 100) * budget
                    for _ in range(rs.rank)
                ]
                moved = tuple(a + d for a, d in zip(w, delta))
                if any(c <= 0 for c in moved):
                    continue
                assert classify_point(rs, moved) == p


def test_region_report_fields():
    rs = get_rs("B2")
    rep = region_report(rs, (rs.index_of((1, 2)),))
    assert rep["type"] == "B2"
    assert rep["antichain"] == [rs.index_of((1, 2))]
    assert rep["ideal"] == [rs.index_of((1, 2))]
    assert rep["sign_vector"].count("above") == 1
    assert "/" in rep["point"][0]
    point = parse_point(",".join(rep["point"]))
    assert classify_point(rs, point) == (rs.index_of((1, 2)),)
    assert Fraction(rep["slack"]) == point_slack(rs, point)
    assert Fraction(rep["slack"]) > 0
