import random

import pytest

from blfkit.errors import FibrationError, InapplicableError
from blfkit.sw import (
    VANISHING_FLAG,
    ChamberData,
    SectionVerdict,
    SWClassRecord,
    adjunction_check,
    section_constraint,
    simple_type_check,
    sphere_torus_vanishing,
    sw_symmetry,
    wall_crossing,
)


def test_wall_crossing_truth_table():
    assert wall_crossing(5, 0, ChamberData("+", "+")) == 5
    assert wall_crossing(5, 6, ChamberData("-", "-")) == 5
    assert wall_crossing(0, 2, ChamberData("+", "-")) == -1
    assert wall_crossing(0, 0, ChamberData("-", "+")) == -1
    assert wall_crossing(0, 0, ChamberData("+", "-")) == 1
    assert wall_crossing(0, 2, ChamberData("-", "+")) == 1
    assert wall_crossing(0, 4, ChamberData("+", "-")) == 1
    assert wall_crossing(7, 6, ChamberData("+", "-")) == 6


def test_wall_crossing_rejects_bad_dimension():
    with pytest.raises(FibrationError):
        wall_crossing(0, 3, ChamberData("+", "-"))
    with pytest.raises(FibrationError):
        wall_crossing(0, -2, ChamberData("+", "-"))
    with pytest.raises(FibrationError):
        ChamberData("0", "+")


def test_wall_crossing_is_an_involution_fuzz():
    rng = random.Random(1729)
    down = ChamberData("+", "-")
    up = ChamberData("-", "+")
    for _ in range(600):
        sw = rng.randint(-50, 50)
        d = 2 * rng.randint(0, 20)
        assert wall_crossing(wall_crossing(sw, d, down), d, up) == sw
        assert wall_crossing(wall_crossing(sw, d, up), d, down) == sw


def test_adjunction_examples():
    assert adjunction_check(1, 1, 0) is False
    assert adjunction_check(2, 0, 2) is True
    assert adjunction_check(1, 0, 0) is True
    assert adjunction_check(1, 0, 1) is False
    assert adjunction_check(3, 2, -2) is True
    with pytest.raises(InapplicableError):
        adjunction_check(0, 1, 0)
    with pytest.raises(InapplicableError):
        adjunction_check(2, -1, 0)


def test_adjunction_monotone_in_genus_fuzz():
    rng = random.Random(24601)
    for _ in range(300):
        g = rng.randint(1, 6)
        square = rng.randint(0, 8)
        pairing = rng.randint(-6, 6)
        if adjunction_check(g, square, pairing):
            assert adjunction_check(g + 1, square, pairing)


def test_simple_type_examples():
    assert simple_type_check(0, 24, -16) is True
    assert simple_type_check(0, 4, 0) is False
    rng = random.Random(13)
    for _ in range(100):
        e = rng.randint(-20, 40)
        sigma = rng.randint(-20, 20)
        assert simple_type_check(2 * e + 3 * sigma, e, sigma) is True


def test_symmetry_sign():
    assert sw_symmetry(1, 24, -16) == 1
    assert sw_symmetry(3, 8, -4) == -3
    assert sw_symmetry(0, 8, -4) == 0
    with pytest.raises(FibrationError):
        sw_symmetry(1, 5, 0)


def test_symmetry_twice_is_identity_fuzz():
    rng = random.Random(2718)
    for _ in range(300):
        value = rng.randint(-9, 9)
        e = rng.randint(-10, 10)
        sigma = rng.choice([4 * k - e for k in range(-5, 6)])
        assert sw_symmetry(sw_symmetry(value, e, sigma), e, sigma) == value


def test_section_constraint():
    assert section_constraint(1, True, 5) is SectionVerdict.ADMISSIBLE
    assert section_constraint(2, True, 0) is SectionVerdict.FORBIDDEN
    assert section_constraint(2, False, 3) is SectionVerdict.ADMISSIBLE
    assert section_constraint(2, True, -1) is SectionVerdict.ADMISSIBLE
    for k in range(-5, 6):
        verdict = section_constraint(2, True, k)
        assert (verdict is SectionVerdict.FORBIDDEN) == (k >= 0)


def test_class_record():
    rec = SWClassRecord(square=0, pairings=(("T", 1),), d=2, value=0)
    assert rec.pairing("T") == 1
    with pytest.raises(FibrationError):
        rec.pairing("F")
    with pytest.raises(FibrationError):
        SWClassRecord(square=0, d=3)
    crossed = rec.crossed(ChamberData("+", "-"))
    assert crossed.value == -1
    assert rec.is_simple_type(0, 0) is True


def test_vanishing_pipeline():
    report = sphere_torus_vanishing()
    assert report.vanishes
    assert report.lines[-1] == VANISHING_FLAG
    assert report.lines[-1] == "flag: SW == 0 (identically)"
    assert "blow up at the intersection point" in report.text()
    assert "torus square 0 -> 1" in report.text()
    assert report.text().endswith("flag: SW == 0 (identically)\n")


def test_vanishing_pipeline_edge_cases():
    # square -1 torus lands exactly on the adjunction boundary
    report = sphere_torus_vanishing(torus_square=-1)
    assert not report.vanishes
    assert VANISHING_FLAG not in report.lines
    with pytest.raises(InapplicableError):
        sphere_torus_vanishing(sphere_square=2)
    with pytest.raises(InapplicableError):
        sphere_torus_vanishing(torus_square=-2)
