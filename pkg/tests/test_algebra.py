import pytest
from pytest import mark

from neutromaps.algebra import (COMBINED_POLICY, INDET, INT32_MAX, OFF, ON, SIMPLE_POLICY, NegativeMode, NeutroValue,
                                ThresholdPolicy, TieRule, TriState, collapse, format_token, inhibits, lift, neutro_add,
                                neutro_dot, neutro_mul, parse_token)
from neutromaps.exceptions import CoefficientOverflowError, ParseError, ScenarioError


I = NeutroValue(0, 1)


def test_i_times_i_is_i():
    assert neutro_mul(I, I) == I


def test_multiplication_expands_with_i_squared():
    # (2 + 3I)(4 + 5I) = 8 + (10 + 12 + 15)I
    assert neutro_mul(NeutroValue(2, 3), NeutroValue(4, 5)) == NeutroValue(8, 37)


def test_addition_is_per_coefficient():
    assert neutro_add(NeutroValue(1, -2), NeutroValue(-3, 5)) == NeutroValue(-2, 3)
    assert NeutroValue(1, 1) + NeutroValue(2, 0) == NeutroValue(3, 1)


def test_operators_match_functions():
    x, y = NeutroValue(-1, 2), NeutroValue(3, -4)
    assert x * y == neutro_mul(x, y)
    assert -x == NeutroValue(1, -2)


def test_addition_overflow_is_reported():
    with pytest.raises(CoefficientOverflowError):
        neutro_add(NeutroValue(INT32_MAX, 0), NeutroValue(1, 0))


def test_multiplication_overflow_in_i_part_is_reported():
    with pytest.raises(CoefficientOverflowError):
        neutro_mul(NeutroValue(0, 2 ** 16), NeutroValue(0, 2 ** 16))


@mark.parametrize("token, value", [
    ("0", NeutroValue(0, 0)),
    ("1", NeutroValue(1, 0)),
    ("-1", NeutroValue(-1, 0)),
    ("I", NeutroValue(0, 1)),
    ("-I", NeutroValue(0, -1)),
    ("2I", NeutroValue(0, 2)),
    ("2+I", NeutroValue(2, 1)),
    ("1-3I", NeutroValue(1, -3)),
    ("+4", NeutroValue(4, 0)),
])
def test_parse_token(token, value):
    assert parse_token(token) == value


@mark.parametrize("token", ["", "x", "I2", "1+", "1.5", "2+-I", "II"])
def test_parse_token_rejects_garbage(token):
    with pytest.raises(ParseError):
        parse_token(token)


@mark.parametrize("value, token", [
    (NeutroValue(0, 0), "0"),
    (NeutroValue(-2, 0), "-2"),
    (NeutroValue(0, 1), "I"),
    (NeutroValue(0, -1), "-I"),
    (NeutroValue(0, 3), "3I"),
    (NeutroValue(2, 1), "2+I"),
    (NeutroValue(1, -3), "1-3I"),
])
def test_format_token(value, token):
    assert format_token(value) == token
    assert str(value) == token


@mark.parametrize("value, expected", [
    (NeutroValue(0, 0), OFF),
    (NeutroValue(1, 0), ON),
    (NeutroValue(0, 1), INDET),
    (NeutroValue(2, 1), ON),
    (NeutroValue(1, 2), INDET),
    (NeutroValue(-1, 0), OFF),
    (NeutroValue(-3, -1), OFF),
    (NeutroValue(1, 1), OFF),
])
def test_collapse_with_simple_policy(value, expected):
    assert collapse(value, SIMPLE_POLICY) == expected


@mark.parametrize("value, expected", [
    (NeutroValue(1, 0), OFF),
    (NeutroValue(2, 0), ON),
    (NeutroValue(0, 1), OFF),
    (NeutroValue(0, 2), INDET),
    (NeutroValue(2, 2), OFF),
])
def test_collapse_with_combined_policy(value, expected):
    assert collapse(value, COMBINED_POLICY) == expected


def test_tie_rule_indet_needs_the_i_threshold():
    tie = ThresholdPolicy(k_on=1, k_indet=2, tie=TieRule.INDET)
    assert collapse(NeutroValue(1, 1), tie) == OFF
    assert collapse(NeutroValue(2, 2), tie) == INDET


def test_collapse_ignores_negative_mode():
    bipolar = ThresholdPolicy(negative_mode=NegativeMode.BIPOLAR)
    assert collapse(NeutroValue(-5, 0), bipolar) == OFF


def test_inhibits_only_under_bipolar_policy():
    bipolar = ThresholdPolicy(negative_mode=NegativeMode.BIPOLAR)
    assert inhibits(NeutroValue(-1, 0), bipolar)
    assert not inhibits(NeutroValue(-1, 1), bipolar)
    assert not inhibits(NeutroValue(0, 0), bipolar)
    assert not inhibits(NeutroValue(-1, 0), SIMPLE_POLICY)


@mark.parametrize("k_on, k_indet", [(0, 1), (1, 0), (-1, -1)])
def test_policy_thresholds_are_positive(k_on, k_indet):
    with pytest.raises(ScenarioError):
        ThresholdPolicy(k_on=k_on, k_indet=k_indet)


def test_policy_json_round_trip():
    policy = ThresholdPolicy(3, 2, NegativeMode.BIPOLAR, TieRule.INDET)
    assert ThresholdPolicy.from_json(policy.to_json()) == policy


def test_lift_maps_states_to_values():
    assert lift(OFF) == NeutroValue(0, 0)
    assert lift(ON) == NeutroValue(1, 0)
    assert lift(INDET) == I


def test_neutro_dot_accumulates_real_and_i_parts():
    row = [NeutroValue(1, 0), NeutroValue(0, 1), NeutroValue(2, 0), NeutroValue(-1, 0)]
    state = [ON, ON, INDET, OFF]
    # 1*1 + I*1 + 2*I + (-1)*0
    assert neutro_dot(row, state) == NeutroValue(1, 3)


def test_neutro_dot_length_mismatch():
    with pytest.raises(ValueError):
        neutro_dot([NeutroValue(1, 0)], [ON, OFF])


def test_tristate_tokens():
    assert [s.token for s in (OFF, ON, INDET)] == ["0", "1", "I"]
    assert TriState.from_token("I") is INDET
    assert TriState.from_bool(True) == ON
    with pytest.raises(ParseError):
        TriState.from_token("2")
    with pytest.raises(ValueError):
        TriState(5)
