import pytest

from blfkit.blffile import parse_document, serialize_document
from blfkit.errors import ParseError
from blfkit.models import (
    achiral_negative,
    double_rational_csum,
    matsumoto_fibration,
    matsumoto_sum,
    rational_ruled,
    s1xs3_fibration,
    s4_fibration,
    sphere_times_surface,
)
from blfkit.surgery import blow_down, example42_family, step_fibration, trade_negative_node
from blfkit.fibration import validate

ROUND_TRIP_CASES = [
    matsumoto_fibration,
    matsumoto_sum,
    rational_ruled,
    lambda: rational_ruled(odd=True),
    lambda: sphere_times_surface(3),
    s4_fibration,
    s1xs3_fibration,
    achiral_negative,
    double_rational_csum,
    lambda: step_fibration(2, 5),
    lambda: example42_family(-1),
    lambda: blow_down(example42_family(-1), 0),
    lambda: trade_negative_node(achiral_negative(), 0),
]


@pytest.mark.parametrize("make", ROUND_TRIP_CASES)
def test_round_trip_is_identity(make):
    f = make()
    text = serialize_document(f)
    assert parse_document(text) == f
    # canonical form is a fixpoint of serialize . parse
    assert serialize_document(parse_document(text)) == text


def test_empty_document_is_a_syntax_error():
    for text in ("", "   \n\n  ", "# only a comment\n"):
        with pytest.raises(ParseError) as err:
            parse_document(text)
        assert (err.value.line, err.value.col) == (1, 1)


def test_out_of_range_word_parses_and_fails_validation():
    f = parse_document(
        'lower { genus = 1 }\n'
        'round { gamma = "a2" }\n'
        'higher { genus = 2; cycles = ["a3"] }\n'
    )
    report = validate(f)
    assert any(v.code == "generator-range" for v in report)
    # the broken word also blocks the parity computation; nothing else fires
    assert {v.code for v in report} <= {"generator-range", "parity"}


def test_error_positions():
    with pytest.raises(ParseError) as err:
        parse_document('blf {\n  base = 5\n}\n')
    assert (err.value.line, err.value.col) == (2, 10)
    assert str(err.value).startswith("2:10:")

    with pytest.raises(ParseError) as err:
        parse_document('blf {\n  base? = "sphere"\n}\n')
    assert err.value.line == 2

    with pytest.raises(ParseError) as err:
        parse_document('orbit { x = 1 }\n')
    assert "unknown section" in str(err.value)

    with pytest.raises(ParseError) as err:
        parse_document('blf { wings = 1 }\n')
    assert "unknown key" in str(err.value)

    with pytest.raises(ParseError) as err:
        parse_document('blf { base = "sphere" }\nblf { base = "torus" }\n')
    assert "duplicate section" in str(err.value)

    with pytest.raises(ParseError) as err:
        parse_document('blf { base = "sphere"; base = "torus" }\n')
    assert "duplicate key" in str(err.value)

    with pytest.raises(ParseError) as err:
        parse_document('blf { base "sphere" }\n')
    assert "expected '='" in str(err.value)

    with pytest.raises(ParseError) as err:
        parse_document('higher { genus = 2 cycles = [] }\n')
    assert "after value" in str(err.value)


def test_value_type_errors():
    cases = [
        ('higher { genus = "2" }\n', "genus must be an integer"),
        ('higher { genus = -1 }\n', "genus must be nonnegative"),
        ('higher { genus = 1; components = [1] }\n', "not both"),
        ('higher { components = [] }\n', "nonempty"),
        ('higher { cycles = [1] }\n', "quoted strings"),
        ('higher { cycles = ["q7"] }\n', "bad curve word"),
        ('round { gamma = "a1"; parity = "sideways" }\n', "parity must be"),
        ('round { gamma = "a1"; separating = 1 }\n', "true or false"),
        ('round { framing = 2 }\n', "needs a gamma"),
        ('blf { base = "plane" }\n', "base must be"),
        ('blf { blowups = -2 }\n', "nonnegative"),
        ('declared { parity = "weird" }\n', "even or odd"),
        ('sections { squares = [1, "x"] }\n', "list of integers"),
        ('higher { monodromy = [[1, 0], [1]] }\n', "unequal lengths"),
        ('higher { monodromy = [1, 2] }\n', "lists of integers"),
    ]
    for text, fragment in cases:
        with pytest.raises(ParseError) as err:
            parse_document(text)
        assert fragment in str(err.value), text


def test_not_preserved_parity_is_not_declarable():
    with pytest.raises(ParseError):
        parse_document('round { gamma = "a1"; parity = "not-preserved" }\n')


def test_comments_and_separators_are_cosmetic():
    terse = 'lower { genus = 0 }; round { gamma = "a1"; framing = 2 }; higher { genus = 1 }'
    chatty = (
        "# a one-round-handle record\n"
        "lower {\n  genus = 0  # small side\n}\n"
        "round {\n  gamma = \"a1\"\n  framing = 2\n}\n"
        "higher {\n  genus = 1\n}\n"
    )
    assert parse_document(terse) == parse_document(chatty)


def test_negative_cycle_and_escape_round_trip():
    f = trade_negative_node(achiral_negative(), 0)
    text = serialize_document(achiral_negative())
    assert '"-b1"' in text
    assert parse_document(text).higher.cycles[0][1] == -1
    assert parse_document(serialize_document(f)) == f

    from dataclasses import replace
    from blfkit.fibration import Declared

    fancy = replace(
        rational_ruled(), declared=Declared(label='say "hi" \\ there')
    )
    assert parse_document(serialize_document(fancy)) == fancy


def test_unexpected_characters_are_positioned():
    with pytest.raises(ParseError) as err:
        parse_document('blf { base = "sphere\n}\n')
    assert err.value.line == 1
    with pytest.raises(ParseError) as err:
        parse_document("blf @ { }\n")
    assert (err.value.line, err.value.col) == (1, 5)
