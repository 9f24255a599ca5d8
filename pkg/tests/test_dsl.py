import numpy as np
import pytest

from finring import InvalidRingError, characteristic, find_isomorphism
from finring.dsl import (
    DslError,
    format_ring_table,
    parse_ring_expr,
    parse_ring_table_file,
    parse_ring_table_text,
)
from finring.harness import F4_TABLE


def test_parse_examples():
    assert parse_ring_expr("Mat(Z(2),2)").order == 16
    assert parse_ring_expr("Tri(Z(3),2,lower)").order == 27
    assert parse_ring_expr("Prod(Z(4),Z(2))").order == 8
    assert parse_ring_expr("Op(Z(5))").order == 5


def test_whitespace_insignificant():
    a = parse_ring_expr("Mat( Z( 2 ) , 2 )")
    b = parse_ring_expr("Mat(Z(2),2)")
    assert np.array_equal(a.mul, b.mul)


def test_nested():
    r = parse_ring_expr("Prod(Mat(Z(2),2),Z(2))")
    assert r.order == 32


def test_parse_error_position():
    with pytest.raises(DslError) as excinfo:
        parse_ring_expr("Mat(Z(2)")
    assert "position" in str(excinfo.value)
    with pytest.raises(DslError):
        parse_ring_expr("Frob(Z(2))")
    with pytest.raises(DslError):
        parse_ring_expr("Z(2) junk")
    with pytest.raises(DslError):
        parse_ring_expr("Prod(Z(2))")
    with pytest.raises(DslError):
        parse_ring_expr("Z(1)")


def test_table_roundtrip(tmp_path):
    f4 = parse_ring_table_text(F4_TABLE)
    assert f4.order == 4 and characteristic(f4) == 2
    path = tmp_path / "f4.ring"
    path.write_text(format_ring_table(f4), encoding="utf-8")
    again = parse_ring_table_file(str(path))
    assert np.array_equal(again.add, f4.add)
    assert np.array_equal(again.mul, f4.mul)
    via_expr = parse_ring_expr(f"Table({path})")
    assert via_expr.order == 4


def test_table_relative_to_base_dir(tmp_path):
    f4 = parse_ring_table_text(F4_TABLE)
    (tmp_path / "f4.ring").write_text(format_ring_table(f4), encoding="utf-8")
    r = parse_ring_expr("Table(f4.ring)", base_dir=str(tmp_path))
    assert r.order == 4


def test_corrupted_table_rejected():
    corrupted = F4_TABLE.replace("0 2 3 1", "0 2 3 2")
    with pytest.raises(InvalidRingError) as excinfo:
        parse_ring_table_text(corrupted)
    assert excinfo.value.violation.witness  # law plus witness indices


def test_comments_and_format_errors():
    with_comment = "# leading comment\n" + F4_TABLE
    assert parse_ring_table_text(with_comment).order == 4
    with pytest.raises(ValueError):
        parse_ring_table_text("ring X\n")
    with pytest.raises(ValueError):
        parse_ring_table_text(F4_TABLE + "trailing\n")


def test_f4_against_matrix_embedding(m2f2):
    """The quartic field from the table is the one living inside M_2(F_2)."""
    from finring.substructures import maximal_subrings
    from finring.rings import subring_as_ring

    f4 = parse_ring_table_text(F4_TABLE)
    small = [S for S in maximal_subrings(m2f2) if S.size == 4]
    assert len(small) == 1
    inner, _ = subring_as_ring(m2f2, small[0])
    assert find_isomorphism(inner, f4) is not None
