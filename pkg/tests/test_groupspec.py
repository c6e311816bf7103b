import pytest
from hypothesis import given
from hypothesis import strategies as st

from autorbits.groupspec import (
    ArityError,
    GroupSpec,
    ParameterRangeError,
    SpecError,
    SpecSyntaxError,
    UnknownConstructor,
    parse_spec,
)


def test_basic_parses():
    assert parse_spec("PSL(2,7)") == GroupSpec("PSL", (2, 7))
    assert parse_spec("GMF(2,4)") == GroupSpec("GMF", (2, 4))
    assert parse_spec("  psl ( 2 , 7 ) ") == GroupSpec("PSL", (2, 7))
    assert parse_spec("POW(A(5),2)") == GroupSpec("POW", (GroupSpec("A", (5,)), 2))


@pytest.mark.parametrize(
    "text,err",
    [
        ("PSL(2)", ArityError),
        ("PSL(2,7", SpecSyntaxError),
        ("PSL 2,7)", SpecSyntaxError),
        ("PSL(2,7))", SpecSyntaxError),
        ("PSL(2;7)", SpecSyntaxError),
        ("FOO(2,7)", UnknownConstructor),
        ("PSL(2,11)", ParameterRangeError),
        ("GMF(2,3)", ParameterRangeError),
        ("EA(4,2)", ParameterRangeError),
        ("POW(5,2)", ArityError),
    ],
)
def test_errors_are_distinct(text, err):
    with pytest.raises(err) as info:
        parse_spec(text)
    assert isinstance(info.value, SpecError)


def test_syntax_error_position():
    with pytest.raises(SpecSyntaxError) as info:
        parse_spec("PSL(2,#)")
    assert info.value.pos == 6


VALID = [
    "PSL(2,4)", "PSL(3,4)", "SL(2,9)", "GL(3,2)", "PGL(2,7)", "GMF(3,16)", "ASL(2,8)",
    "EA(2,6)", "EA(7,2)", "A(6)", "S(4)", "POW(PSL(2,7),3)", "DP(A(5),EA(2,1),S(3))",
]


@given(st.sampled_from(VALID), st.sampled_from([str.lower, str.upper, lambda s: s.replace(",", " , ")]))
def test_round_trip(text, mangle):
    spec = parse_spec(mangle(text))
    assert str(spec) == text
    assert parse_spec(str(spec)) == spec
