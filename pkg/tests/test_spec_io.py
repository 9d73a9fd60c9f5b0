import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringlab import build, load_table, parse_spec, save_table, validate
from ringlab.ring import SizeCapError
from ringlab.spec import Matrix, Product, SpecParseError, Table, TableFormatError, Zn


def test_parse_examples():
    assert parse_spec("zn 10") == Zn(10)
    assert parse_spec("matrix 2 (zn 3)") == Matrix(2, Zn(3))
    assert parse_spec("product (zn 2) (zn 5)") == Product((Zn(2), Zn(5)))
    assert parse_spec("  product (matrix 1 (zn 2))(zn 3) ") == Product((Matrix(1, Zn(2)), Zn(3)))
    assert parse_spec("table rings/r.tbl") == Table("rings/r.tbl")


@pytest.mark.parametrize(
    "text, pos",
    [("zn", 2), ("zn 0", 3), ("zm 4", 0), ("zn 4 5", 5), ("matrix 2 zn 3", 9), ("product", 7), ("", 0)],
)
def test_parse_errors_report_position(text, pos):
    with pytest.raises(SpecParseError) as info:
        parse_spec(text)
    assert info.value.position == pos


def test_build_honours_cap():
    with pytest.raises(SizeCapError):
        build("matrix 2 (zn 10)")
    with pytest.raises(SizeCapError):
        build("matrix 2 (zn 5)", size_cap=624)
    assert build("matrix 2 (zn 5)", size_cap=625).size == 625


def _spec_text(spec):
    if isinstance(spec, Zn):
        return f"zn {spec.n}"
    if isinstance(spec, Matrix):
        return f"matrix {spec.k} ({_spec_text(spec.base)})"
    return "product " + " ".join(f"({_spec_text(f)})" for f in spec.factors)


specs = st.recursive(
    st.builds(Zn, st.integers(1, 4)),
    lambda inner: st.one_of(
        st.builds(Matrix, st.just(1), inner),
        st.builds(lambda fs: Product(tuple(fs)), st.lists(inner, min_size=1, max_size=2)),
    ),
    max_leaves=3,
)


@settings(max_examples=40, deadline=None)
@given(specs)
def test_parse_inverts_printing(spec):
    assert parse_spec(_spec_text(spec)) == spec


@pytest.mark.parametrize("text", ["zn 1", "zn 10", "product (zn 2) (zn 3)", "matrix 2 (zn 2)"])
def test_table_round_trip(tmp_path, text):
    r = build(text)
    path = tmp_path / "r.tbl"
    save_table(r, path)
    again = load_table(path)
    assert again.same_tables(r)
    assert again.label == r.label
    save_table(again, tmp_path / "s.tbl")
    assert (tmp_path / "s.tbl").read_bytes() == path.read_bytes()
    assert build(f"table {path}").same_tables(r)


def test_table_format_header(tmp_path):
    save_table(build("zn 2"), tmp_path / "z2.tbl")
    lines = (tmp_path / "z2.tbl").read_text().splitlines()
    assert lines[0] == "starring v1"
    assert any(line.startswith("#") for line in lines)


@pytest.mark.parametrize(
    "mutate",
    [
        lambda s: s.replace("starring v1", "starring v9"),
        lambda s: s.rstrip().rsplit("\n", 1)[0],  # drop star line
        lambda s: s.replace("0 1\n", "0 7\n", 1),
        lambda s: "",
    ],
)
def test_malformed_tables_rejected(tmp_path, mutate):
    path = tmp_path / "z2.tbl"
    save_table(build("zn 2"), path)
    path.write_text(mutate(path.read_text()))
    with pytest.raises(TableFormatError):
        load_table(path)


def test_loaded_invalid_table_is_detected(tmp_path):
    # syntactically fine but the star is not involutive
    path = tmp_path / "bad.tbl"
    save_table(build("zn 3"), path)
    text = path.read_text().splitlines()
    text[-1] = "0 2 2"
    path.write_text("\n".join(text) + "\n")
    r = load_table(path)
    assert not validate(r).passed
    assert not np.array_equal(r.star[r.star], np.arange(3))
