import pytest

from seifert_slopes.exactarith import INF, reduce
from seifert_slopes.syntax import (
    ParseError,
    parse_cf,
    parse_fraction,
    parse_montesinos,
    parse_seifert,
    parse_slots,
)


@pytest.mark.parametrize(
    "text, value",
    [("2/5", reduce(2, 5)), ("-2/3", reduce(-2, 3)), (" 7 ", reduce(7)), ("inf", INF),
     ("4/-2", reduce(-2)), ("+3/9", reduce(1, 3)), ("5/0", INF)],
)
def test_parse_fraction(text, value):
    assert parse_fraction(text) == value


@pytest.mark.parametrize("text, position", [("2/", 1), ("abc", 0), ("1/2x", 3), ("0/0", 0), ("", 0)])
def test_parse_fraction_errors_report_position(text, position):
    with pytest.raises(ParseError) as info:
        parse_fraction(text)
    assert info.value.position == position
    assert f"position {position}" in str(info.value)


def test_round_trip_printing():
    for text in ["2/5", "-2/3", "0/1", "inf", "57/1"]:
        assert str(parse_fraction(text)) == text


def test_parse_cf():
    assert parse_cf("[2, 3]") == (2, 3)
    assert parse_cf("[ -2 ,-3 ]") == (-2, -3)
    assert parse_cf("[]") == ()
    with pytest.raises(ParseError):
        parse_cf("[2,,3]")


def test_parse_slots():
    fractions, marks = parse_slots("inf*,inf*,3/1")
    assert fractions == [INF, INF, reduce(3)]
    assert marks == {0, 1}


def test_parse_montesinos():
    assert parse_montesinos("M(2/5,-2/3,3/11)") == ([reduce(2, 5), reduce(-2, 3), reduce(3, 11)], 0)
    assert parse_montesinos("M( 2/5 , 1/3 ; -1 )") == ([reduce(2, 5), reduce(1, 3)], -1)
    assert parse_montesinos("M()") == ([], 0)
    assert parse_montesinos("M(;2)") == ([], 2)
    with pytest.raises(ParseError) as info:
        parse_montesinos("M(2/5;x)")
    assert info.value.token == "x"


def test_parse_seifert():
    assert parse_seifert("SFS(0; 2/5, -2/3, 4/15)") == (0, [reduce(2, 5), reduce(-2, 3), reduce(4, 15)])
    assert parse_seifert("SFS(3)") == (3, [])
    with pytest.raises(ParseError):
        parse_seifert("SFS(0; 2/5, -2/3, 4/15")
