import pytest
from hypothesis import given

from systolic.complex import build_complex
from systolic.errors import MalformedInputError
from systolic.fileformat import named_simplices, natural_key, parse, serialize
from systolic.generators import flat_torus, glued_halfplanes, platonic, triangular_disk
from systolic.developments import cyclic_group, segment_development_ball

from strategies import complexes


def test_parse_basic():
    cf = parse("scx 1\n# a comment\n@base c\n@safe_radius 2\na b c  # trailing\nc d\n")
    X = cf.complex
    assert X.f_vector == (4, 4, 1)
    assert [X.name(v) for v in cf.base] == ["c"]
    assert cf.safe_radius == 2


@pytest.mark.parametrize("text, fragment", [
    ("", "header"),
    ("scx 2\na b\n", "header"),
    ("scx 1\n", "no simplices"),
    ("scx 1\na a\n", "repeated"),
    ("scx 1\n@colour red\na b\n", "unknown directive"),
    ("scx 1\n@base z\na b\n", "unknown vertex"),
    ("scx 1\n@base a c\na b\nc\n", "not a simplex"),
    ("scx 1\n@safe_radius x\na b\n", "safe_radius"),
    ("scx 1\n@base a\n@base b\na b\n", "duplicate"),
])
def test_malformed(text, fragment):
    with pytest.raises(MalformedInputError) as exc:
        parse(text)
    assert fragment in str(exc.value)


def test_natural_order():
    assert sorted(["v10", "v2", "v1"], key=natural_key) == ["v1", "v2", "v10"]


@pytest.mark.parametrize("g", [
    triangular_disk(3), flat_torus(7), platonic("icosahedron"), glued_halfplanes(2, 3),
    segment_development_ball(cyclic_group(2), cyclic_group(3), 3),
], ids=lambda g: g.label)
def test_generated_round_trip(g):
    text = serialize(g.complex, g.base, g.safe_radius)
    cf = parse(text)
    assert named_simplices(cf.complex) == named_simplices(g.complex)
    assert serialize(cf.complex, cf.base, cf.safe_radius) == text
    assert sorted(cf.complex.name(v) for v in cf.base) == sorted(g.complex.name(v) for v in g.base)


@given(complexes())
def test_round_trip_identity(X):
    text = serialize(X)
    Y = parse(text).complex
    assert named_simplices(Y) == named_simplices(X)
    assert parse(serialize(Y)).complex == Y


def test_line_order_irrelevant():
    a = parse("scx 1\na b c\nc d\n").complex
    b = parse("scx 1\nd c\nb c a\n").complex
    assert a == b


def test_unwritable_names():
    X = build_complex([[0, 1]], {0: "a b", 1: "c"})
    with pytest.raises(MalformedInputError):
        serialize(X)
    with pytest.raises(MalformedInputError):
        serialize(build_complex([[0, 1]], {0: "x", 1: "x"}))
