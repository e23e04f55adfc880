import random
from fractions import Fraction

import pytest

from blfkit.errors import FibrationError
from blfkit.invariants import (
    GroupPresentation,
    InvariantRecord,
    almost_complex_parity,
    broken_sum_invariants,
    build_record,
    euler_characteristic,
    h1_text,
    homeo_report,
    homology_from_presentation,
    pi1_presentation,
    surface_relation,
    tietze_simplify,
)
from blfkit.models import (
    matsumoto_fibration,
    matsumoto_sum,
    rational_ruled,
    s1xs3_fibration,
    s4_fibration,
)
from blfkit.surgery import step_fibration


def test_euler_of_step_family():
    for g in range(6):
        assert euler_characteristic(step_fibration(g, 0)) == 2 - 4 * g


def test_euler_of_stock_models():
    assert euler_characteristic(matsumoto_fibration()) == 4
    assert euler_characteristic(matsumoto_sum()) == 8
    assert euler_characteristic(rational_ruled()) == 4
    assert euler_characteristic(s4_fibration()) == 2
    # torus base: only critical points count, and there are none here
    assert euler_characteristic(s1xs3_fibration()) == 0


def test_fiber_sum_arithmetic():
    e, sigma, chi = broken_sum_invariants(4, -4, 2, 4, 0, 0, allow_genus_zero=True)
    assert (e, sigma, chi) == (8, -4, Fraction(1))
    e, sigma, chi = broken_sum_invariants(0, 0, 1, 0, 0, 1)
    assert (e, sigma, chi) == (0, 0, Fraction(0))
    # elliptic surface summed with a trivial genus-2 bundle: e = 12n - 2
    for n in (1, 2, 3):
        e, sigma, chi = broken_sum_invariants(12 * n, -8 * n, 1, -4, 0, 2)
        assert (e, sigma) == (12 * n - 2, -8 * n)
        assert chi == Fraction(2 * n - 1, 2)
    with pytest.raises(FibrationError):
        broken_sum_invariants(4, -4, 2, 4, 0, 0)


def test_almost_complex_parity_is_genus_parity():
    assert almost_complex_parity(2, 0)
    assert almost_complex_parity(1, 1)
    assert almost_complex_parity(3, 1)
    assert not almost_complex_parity(2, 1)
    assert not almost_complex_parity(0, 1)


def test_chi_integrality_matches_parity_criterion():
    # when both summands have e + sigma divisible by 4, the sum's chi_h is
    # an integer exactly when the genus parity criterion holds
    rng = random.Random(24601)
    for _ in range(200):
        g1, g2 = rng.randint(1, 5), rng.randint(1, 5)
        sigma1, sigma2 = rng.randint(-6, 6), rng.randint(-6, 6)
        e1 = 4 * rng.randint(-3, 3) - sigma1
        e2 = 4 * rng.randint(-3, 3) - sigma2
        _, _, chi = broken_sum_invariants(e1, sigma1, g1, e2, sigma2, g2)
        assert (chi.denominator == 1) == almost_complex_parity(g1, g2)


def test_surface_relation_letters():
    assert surface_relation(0) == ()
    assert surface_relation(2) == (1, 2, -1, -2, 3, 4, -3, -4)


def test_tietze_eliminates_single_occurrence_generator():
    p = GroupPresentation(("x", "y"), ((1, 2),))
    q = tietze_simplify(p)
    assert q.generators == ("y",)
    assert q.relators == ()
    assert q.summary() == "Z"


def test_tietze_drops_duplicates_and_trivial_relators():
    p = GroupPresentation(
        ("x", "y"),
        ((1, 2, -1, -2), (2, -1, -2, 1), (-2, -1, 2, 1), (1, -1)),
    )
    q = tietze_simplify(p)
    # all four are the same commutator up to rotation/inversion or trivial
    assert q.generators == ("x", "y")
    assert q.relators == ((1, 2, -1, -2),)


def test_homology_examples():
    assert homology_from_presentation(GroupPresentation(("x",), ((1, 1),))) == (0, (2,))
    assert homology_from_presentation(GroupPresentation(("x", "y"), ())) == (2, ())
    assert homology_from_presentation(
        GroupPresentation(("x", "y"), ((1, 2, -1, -2),))
    ) == (2, ())
    assert homology_from_presentation(GroupPresentation((), ())) == (0, ())


def test_h1_rendering():
    assert h1_text((0, ())) == "0"
    assert h1_text((1, ())) == "Z"
    assert h1_text((2, (2, 4))) == "Z^2 + Z/2 + Z/4"
    assert h1_text(None) == "unknown"


def test_tietze_preserves_homology_fuzz():
    rng = random.Random(5150)
    for _ in range(300):
        ngens = rng.randint(1, 4)
        nrels = rng.randint(0, 4)
        rels = []
        for _ in range(nrels):
            length = rng.randint(0, 6)
            rels.append(
                tuple(rng.choice((1, -1)) * rng.randint(1, ngens) for _ in range(length))
            )
        p = GroupPresentation(
            tuple(f"x{i}" for i in range(1, ngens + 1)), tuple(rels)
        )
        q = tietze_simplify(p)
        assert homology_from_presentation(q) == homology_from_presentation(p)
        # fixpoint: running again changes nothing
        assert tietze_simplify(q) == q


def test_pi1_of_eight_node_piece():
    f = matsumoto_fibration()
    p = pi1_presentation(f)
    assert p.generators == ("a1", "b1", "a2", "b2")
    for letters in ((2, 4), (1, 2, -1, -2), (4, 3, -4, 1), (4, 3, 1, 2)):
        assert letters in p.relators
    assert homology_from_presentation(p) == (2, ())
    q = tietze_simplify(p)
    assert homology_from_presentation(q) == (2, ())
    assert q.summary() != "trivial"


def test_pi1_of_bridged_sum_is_trivial():
    p = tietze_simplify(pi1_presentation(matsumoto_sum()))
    assert p.generators == ()
    assert p.relators == ()
    assert p.summary() == "trivial"


def test_pi1_of_step_models():
    # g = 0: one fiber circle survives the round handle
    p = tietze_simplify(pi1_presentation(step_fibration(0, 0)))
    assert p.summary() == "Z"
    # g = 1: surface group of the lower fiber, free product with Z
    p = tietze_simplify(pi1_presentation(step_fibration(1, 0)))
    assert len(p.generators) == 3
    assert homology_from_presentation(p) == (3, ())


def test_pi1_refuses_without_section():
    f = s4_fibration()
    with pytest.raises(FibrationError):
        pi1_presentation(f)
    p = pi1_presentation(f, assume_section=True)
    assert p.generators == ("a1", "b1")


def test_record_for_bridged_sum():
    rec = build_record(matsumoto_sum())
    assert rec.e == 8
    assert rec.sigma == -4
    assert rec.chi_h == Fraction(1)
    assert rec.pi1_summary == "trivial"
    assert rec.h1 == (0, ())
    assert (rec.b_plus, rec.b_minus) == (1, 5)
    assert rec.to_text() == (
        "e=8\n"
        "sigma=-4\n"
        "chi_h=1\n"
        "b_plus=1\n"
        "b_minus=5\n"
        "pi1=trivial\n"
        "h1=0\n"
        "label=CP^2 # 5 -CP^2\n"
    )


def test_record_with_unknown_sigma():
    rec = build_record(s1xs3_fibration().__class__())  # default empty record
    assert rec.sigma is None
    text = rec.to_text()
    assert "sigma=unknown" in text
    assert "chi_h=unknown" in text


def test_homeo_report_odd_blowup():
    rec = build_record(matsumoto_sum())
    report = homeo_report(rec, "odd")
    assert report.endswith("homeomorphism type: CP^2 # 5 -CP^2\n")
    assert "b+ = 1" in report
    assert "b- = 5" in report


def _plain_record(e, sigma, summary="trivial"):
    return InvariantRecord(
        e=e,
        sigma=sigma,
        chi_h=None if sigma is None else Fraction(e + sigma, 4),
        b_plus=None,
        b_minus=None,
        pi1=None,
        pi1_summary=summary,
        h1=None,
        label=None,
    )


def test_homeo_report_other_branches():
    assert homeo_report(_plain_record(4, 0, "Z"), "even").endswith(
        "homeomorphism type: inconclusive (pi1 is Z)\n"
    )
    assert homeo_report(_plain_record(4, 0), "even").endswith(
        "homeomorphism type: undetermined (b+=1, b-=1, even form)\n"
    )
    assert homeo_report(_plain_record(2, 0), None).endswith("homeomorphism type: S4\n")
    assert homeo_report(_plain_record(4, 0), None).endswith(
        "homeomorphism type: inconclusive (form parity not declared)\n"
    )
    assert homeo_report(_plain_record(4, None), "odd").endswith(
        "homeomorphism type: inconclusive (sigma not declared)\n"
    )
    assert homeo_report(_plain_record(5, 0), "odd").endswith(
        "homeomorphism type: inconclusive (invalid betti data: b2=3, sigma=0)\n"
    )
