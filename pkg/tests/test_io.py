import pytest

from conftest import random_tournament
from tournaments.core import transitive_tournament
from tournaments.io import ParseError, parse, read, resolve, to_arc_list, to_trn, write


def test_trn_round_trip(rng, tmp_path):
    for n in (1, 2, 5, 9, 20):
        t = random_tournament(n, rng)
        assert parse(to_trn(t)) == t
        assert parse(to_arc_list(t)) == t
        write(t, tmp_path / "t.trn")
        assert read(tmp_path / "t.trn") == t


def test_trn_layout():
    assert to_trn(transitive_tournament(3)) == "3\n111\n"


def test_arc_list_defaults_forward():
    t = parse("3\n2 0\n")
    assert t.beats(2, 0) and t.beats(0, 1) and t.beats(1, 2)


@pytest.mark.parametrize("text,line,col", [
    ("x\n", 1, 1),
    ("3\n01x\n", 2, 3),
    ("3\n01\n", 2, 3),
    ("3\n010\nextra\n", 3, 1),
    ("3\n0 a\n", 2, 3),
    ("3\n0 1 2\n", 2, 1),
    ("", 1, 1),
    ("99\n", 1, 1),
])
def test_parse_errors_carry_positions(text, line, col):
    with pytest.raises(ParseError) as exc:
        parse(text, "in.trn")
    assert (exc.value.line, exc.value.column) == (line, col)
    assert str(exc.value).startswith(f"in.trn:{line}:{col}:")


def test_duplicate_arc_is_a_parse_error():
    with pytest.raises(ParseError):
        parse("3\n0 1\n1 0\n")


def test_resolve_catalog_and_files(tmp_path):
    assert resolve("catalog:C5").n == 5
    write(transitive_tournament(4), tmp_path / "t4.trn")
    assert resolve(str(tmp_path / "t4.trn")) == transitive_tournament(4)
    with pytest.raises(KeyError):
        resolve("catalog:Z9")
