from pathlib import Path

import pytest

from blfkit.blffile import parse_document, serialize_document
from blfkit.fibration import validate
from blfkit.models import (
    achiral_negative,
    double_rational_csum,
    matsumoto_fibration,
    matsumoto_sum,
    rational_ruled,
    s1xs3_fibration,
    s4_fibration,
)
from blfkit.surgery import example42_family, step_fibration

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

GOLDEN = {
    "matsumoto.blf": matsumoto_fibration,
    "matsumoto-sum.blf": matsumoto_sum,
    "rational-s2xs2.blf": rational_ruled,
    "rational-odd.blf": lambda: rational_ruled(odd=True),
    "example42.blf": lambda: example42_family(0),
    "example43.blf": double_rational_csum,
    "step-g0.blf": lambda: step_fibration(0, 0),
    "s4.blf": s4_fibration,
    "s1xs3.blf": s1xs3_fibration,
    "achiral-neg.blf": achiral_negative,
}


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_golden_files_match_models(name):
    text = (FIXTURES / name).read_text(encoding="utf-8")
    f = GOLDEN[name]()
    assert serialize_document(f) == text
    assert parse_document(text) == f


def test_corpus_is_complete():
    on_disk = {p.name for p in FIXTURES.glob("*.blf")}
    assert on_disk == set(GOLDEN)


def test_corpus_validates_clean():
    for name in sorted(GOLDEN):
        f = parse_document((FIXTURES / name).read_text(encoding="utf-8"))
        assert validate(f) == (), name


BROKEN_EXPECTATIONS = {
    "parity-mismatch.blf": "parity-mismatch",
    "genus-drop.blf": "genus",
    "out-of-range.blf": "generator-range",
}


@pytest.mark.parametrize("name", sorted(BROKEN_EXPECTATIONS))
def test_broken_fixtures_fail_validation_as_expected(name):
    f = parse_document((FIXTURES / "broken" / name).read_text(encoding="utf-8"))
    report = validate(f)
    assert any(v.code == BROKEN_EXPECTATIONS[name] for v in report), report


def test_broken_corpus_is_complete():
    on_disk = {p.name for p in (FIXTURES / "broken").glob("*.blf")}
    assert on_disk == set(BROKEN_EXPECTATIONS)
