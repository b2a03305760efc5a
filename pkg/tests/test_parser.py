import itertools

import pytest
from hypothesis import given, settings, strategies as st

from umbralint import FAMILY_PARAMS, FamilyInvocation, NoMatchError, ParseError
from umbralint.parser import TEMPLATES, Factor, RawIntegrand, match_family, matching_families, parse


def test_direct_form():
    inv = parse("Omega(alpha=0, mu=1, nu=0, a=2, b=1)")
    assert inv == FamilyInvocation("Omega", {"alpha": 0, "mu": 1, "nu": 0, "a": 2, "b": 1})


def test_direct_form_positional_rational_and_whitespace():
    assert parse("I( -1/2 ,0,  1 )") == FamilyInvocation("I", {"mu": -0.5, "lambda": 0, "p": 1})
    assert parse("TricomiInt(nu=1/2, squared=true)").params["squared"] is True
    assert parse("E(b=3, a=1, mu=0)") == parse("E(0, 1, 3)")


def test_integral_form():
    raw = parse("int x^0.5 * J[0](2 x) * J[1](3 x) dx")
    assert raw == RawIntegrand(0.5, (Factor("J", 2, 0), Factor("J", 3, 1)))
    assert parse("int K[0](x) dx") == RawIntegrand(0.0, (Factor("K", 1, 0),))
    assert parse("intx^(-1/2)*Y[0](x)dx") == RawIntegrand(-0.5, (Factor("Y", 1, 0),))
    assert parse("int J[0](2x)*J[1](3x)dx") == parse("int J[0](2 x) * J[1](3 x) dx")


def test_match_examples():
    raw = parse("int x^0.5 * J[0](2 x) * J[1](3 x) dx")
    assert match_family(raw) == FamilyInvocation("Omega", {"alpha": 0.5, "mu": 0, "nu": 1, "a": 2, "b": 3})
    assert match_family(parse("int K[0](x) dx")) == FamilyInvocation("Theta", {"mu": 0})
    with pytest.raises(NoMatchError) as exc:
        match_family(parse("int J[0](x) * J[1](2 x) * J[0](3 x) dx"))
    assert "x^alpha * J[mu](a x) * J[nu](b x)" in str(exc.value)


def test_omega_factor_order_is_normalised():
    one = match_family(parse("int x^0.5 * J[1](3 x) * J[0](2 x) dx"))
    two = match_family(parse("int x^0.5 * J[0](2 x) * J[1](3 x) dx"))
    assert one == two


@pytest.mark.parametrize("text, family", [
    ("int x^2 * exp(-3 x^2) * ln(0.5 x) dx", "E"),
    ("int x^-0.5 * J[0](2 x) dx", "I"),
    ("int J[1](2 x) * ln(x) dx", "A"),
    ("int x^0.25 * Y[0](x) dx", "Upsilon"),
    ("int J[0](2 x) * Y[1/2](x) dx", "Xi"),
    ("int C[1](x) dx", "TricomiInt"),
    ("int C[1](x^2) dx", "TricomiInt"),
    ("int x^0.25 * C[1](x^2) dx", "TricomiMoment"),
    ("int C[0](0.25 x^2) * K[0.5](2 x) dx", "Psi"),
])
def test_each_template_is_reachable(text, family):
    assert match_family(parse(text)).family == family


def test_psi_scale_maps_to_a():
    inv = match_family(parse("int x^0.25 * C[0](x^2) * K[1/3](3 x) dx"))
    assert inv.params["a"] == 2 and inv.params["b"] == 3


@pytest.mark.parametrize("text, position", [
    ("", 0),
    ("int x^ dx", 7),
    ("Omega(1, 2)", 11),
    ("int J[0](x) dx extra", 15),
    ("int J[0](x) * Q(x) dx", 14),
    ("int J[0](x) * J[0](0 x) dx", 19),
    ("Omega(alpha=0, alpha=1, nu=0, a=2, b=1)", 15),
    ("int J[0](x) $ dx", 12),
    ("int x^2 dx", 10),
])
def test_parse_errors_carry_position(text, position):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert exc.value.position == position


def test_parse_error_lists_expected_tokens():
    with pytest.raises(ParseError) as exc:
        parse("int J[0](x) dx extra")
    assert exc.value.expected


# -- properties -------------------------------------------------------------

_number = st.one_of(
    st.integers(-5, 5),
    st.floats(-5, 5, allow_nan=False, allow_infinity=False),
    st.sampled_from([1 / 3, -2 / 7, 1e-9, 12345.678]),
)


@st.composite
def invocations(draw):
    family = draw(st.sampled_from(sorted(FAMILY_PARAMS)))
    params = {}
    for name in FAMILY_PARAMS[family]:
        params[name] = draw(st.booleans()) if name == "squared" else draw(_number)
    return FamilyInvocation(family, params)


@given(invocations())
@settings(max_examples=100, deadline=None)
def test_print_parse_round_trip(inv):
    again = parse(str(inv))
    assert again == inv
    assert str(again) == str(inv)


_KINDS = ["J", "Y", "I", "K", "C", "Log", "GaussExp"]


def _factor_variants(kind):
    if kind in ("Log", "GaussExp"):
        return [Factor(kind, s) for s in (1.0, 2.0)]
    squares = (False, True) if kind == "C" else (False,)
    return [Factor(kind, s, o, q) for s in (1.0, 2.0) for o in (0.0, 0.5) for q in squares]


def test_templates_are_mutually_exclusive():
    checked = 0
    for n in (1, 2, 3):
        for kinds in itertools.combinations_with_replacement(_KINDS, n):
            for factors in itertools.product(*(_factor_variants(k) for k in kinds)):
                for power in (0.0, 0.5, -0.5):
                    raw = RawIntegrand(power, factors)
                    assert len(matching_families(raw)) <= 1, raw
                    checked += 1
    assert checked > 10000


def test_raw_integrand_round_trip():
    for text in ["int x^0.5 * J[0](2 x) * J[1](3 x) dx", "int C[0.5](0.25 x^2) * K[0.3](2 x) dx",
                 "int x^-1 * exp(-2 x^2) * ln(3 x) dx", "int C[1](x) dx"]:
        raw = parse(text)
        assert parse(str(raw)) == raw


def test_templates_cover_every_family():
    assert set(TEMPLATES) == set(FAMILY_PARAMS)
