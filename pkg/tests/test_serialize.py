from __future__ import annotations

import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from newton_strata.bg import gsp, validate
from newton_strata.errors import ValidationError
from newton_strata.levi import build_mu_bar, centralizer_partition, split_blocks
from newton_strata.polygon import Polygon
from newton_strata.serialize import (
    MalformedInput,
    certificate_from_json,
    certificate_to_json,
    decision_from_json,
    decision_to_json,
    dumps,
    levi_blocks_to_json,
    levi_cochar_from_json,
    levi_cochar_to_json,
    newton_class_from_json,
    newton_class_to_json,
    parse_rational,
    parse_rational_list,
    partition_from_json,
    partition_to_json,
    polygon_from_json,
    polygon_to_json,
    rational_to_str,
    shape_from_json,
    shape_to_json,
)
from newton_strata.strata import MinusculeShape, decide, enumerate_nonempty
from oracles import F, random_gap_class


def test_rationals():
    assert rational_to_str(Fraction(5, 2)) == "5/2"
    assert rational_to_str(Fraction(-3)) == "-3"
    assert parse_rational("5/2") == Fraction(5, 2)
    assert parse_rational(-4) == -4
    for bad in (0.5, True, None, "x/2", "1/0"):
        with pytest.raises(MalformedInput):
            parse_rational(bad)


def test_rational_lists():
    assert parse_rational_list("[5/2,5/2,1/2,1/2]") == list(F("5/2", "5/2", "1/2", "1/2"))
    assert parse_rational_list('["1/3", 2]') == list(F("1/3", 2))
    assert parse_rational_list("[]") == []
    assert parse_rational_list("[-1/2, 3]") == list(F("-1/2", 3))
    with pytest.raises(MalformedInput):
        parse_rational_list("1,2")
    with pytest.raises(MalformedInput):
        parse_rational_list("[1.5]")


def test_newton_class_json():
    b = validate(gsp(2), Polygon(F("5/2", "5/2", "1/2", "1/2")))
    doc = newton_class_to_json(b)
    assert doc == {"group": "GSp", "n": 2, "nu": ["5/2", "5/2", "1/2", "1/2"]}
    assert newton_class_from_json(doc) == b
    with pytest.raises(ValidationError):
        newton_class_from_json({"group": "GSp", "n": 2, "nu": ["5/2", "3/2", "1/2", "-1/2"]})
    with pytest.raises(MalformedInput):
        newton_class_from_json({"group": "GSp", "nu": []})
    with pytest.raises(MalformedInput):
        newton_class_from_json({"group": "GSp", "n": "2", "nu": []})


def test_dumps_is_canonical():
    assert dumps({"b": 1, "a": [1, 2]}) == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 4), st.integers(0, 10**6))
def test_round_trips(n, seed):
    rng = random.Random(seed)
    b = random_gap_class(rng, n)
    assert newton_class_from_json(json.loads(dumps(newton_class_to_json(b)))) == b
    p = b.nu
    assert polygon_from_json(polygon_to_json(p)) == p
    alpha = centralizer_partition(b)
    assert partition_from_json(partition_to_json(alpha)) == alpha
    levi_blocks_to_json(split_blocks(b, alpha))
    mu = MinusculeShape(n, rng.randint(-2, 2), rng.random() < 0.8)
    assert shape_from_json(shape_to_json(mu)) == mu
    for bt in enumerate_nonempty(b, mu)[:5]:
        d = decide(b, bt, mu)
        again = decision_from_json(json.loads(dumps(decision_to_json(d))))
        assert again == d and again.checks == d.checks
        cert = d.certificate
        assert certificate_from_json(certificate_to_json(cert)) == cert
        assert levi_cochar_from_json(levi_cochar_to_json(cert.mu_bar)) == cert.mu_bar


def test_mu_bar_json():
    mb = build_mu_bar(Polygon(F("5/2", "5/2", "1/2", "1/2")), Polygon(F(2, 2, 0, 0)), centralizer_partition(
        validate(gsp(2), Polygon(F("5/2", "5/2", "1/2", "1/2")))
    ))
    doc = levi_cochar_to_json(mb.mu_bar)
    assert doc == {"alpha": {"n": 2, "parts": [2]}, "slopes": ["1", "0", "1", "0"]}


def test_shape_rejects_non_boolean():
    with pytest.raises(MalformedInput):
        shape_from_json({"n": 2, "d": 0, "ordinary": "yes"})
