import pytest
from hypothesis import given, settings

from algebra import format_ideal, parse_ideal, read_ideal
from algebra.errors import ParseError
from algebra.textio import write_ideal
from helpers import small_ideals


def test_parse_with_comments_and_inline_separators():
    I = parse_ideal("# path on three vertices\nvars: a b c\na*b  # edge\nb*c\n")
    assert I.gens == ((1, 1, 0), (0, 1, 1))
    assert parse_ideal("vars: a b c; a*b; b*c") == I


def test_semicolon_inside_comment_is_ignored():
    I = parse_ideal("vars: x y  # edges; one per line\nx*y  # x; y\n")
    assert I.gens == ((1, 1),)


def test_repeated_factors_accumulate():
    assert parse_ideal("vars: x y; x*x*y^2").gens == ((2, 2),)


def test_one_is_the_unit_ideal():
    assert parse_ideal("vars: x y\n1").is_unit


def test_header_only_is_zero_ideal():
    assert parse_ideal("vars: x y").is_zero


def test_unknown_variable_position():
    with pytest.raises(ParseError) as exc:
        parse_ideal("vars: x y\nx*z")
    assert (exc.value.line, exc.value.column) == (2, 3)


def test_missing_header():
    with pytest.raises(ParseError) as exc:
        parse_ideal("x*y")
    assert exc.value.line == 1


def test_duplicate_variable():
    with pytest.raises(ParseError):
        parse_ideal("vars: x x")


def test_file_round_trip(tmp_path):
    I = parse_ideal("vars: u v w; u^2*w; v")
    path = tmp_path / "I.txt"
    write_ideal(I, path)
    J = read_ideal(path)
    assert J == I
    assert J.variable_names == ("u", "v", "w")
    assert path.read_text() == "vars: u v w\nv\nu^2*w\n"


@given(small_ideals())
@settings(max_examples=30, deadline=None)
def test_format_then_parse_is_identity(I):
    assert parse_ideal(format_ideal(I)) == I
