import json
from fractions import Fraction

import pytest

import scx


def test_trefoil_two_bridge():
    C, consistent = scx.two_bridge(3, -1)
    assert consistent
    assert len(C) == 1
    assert C.generators() == [("xi1", 1, "1/3")]
    assert C.delta1() == ["U^{1/3}*T^2 - U^{1/3}*T^-2"]
    assert scx.validate(C) == []


def test_json_round_trip():
    C = scx.fixture("t35")
    doc = json.loads(C.to_json())
    assert doc["ring"] == C.ring
    assert scx.Complex.from_json(C.to_json()) == C
    with pytest.raises(scx.ParseError):
        scx.Complex.from_json("{")


def test_invariants():
    C, _ = scx.two_bridge(3, -1)
    assert scx.h(scx.specialize(C, "Z[T]", "U=1")) == 1
    assert scx.h(scx.specialize(C, "Z[T]", "U=1"), route="image") == 1
    assert scx.gamma(C, 0) == 0
    assert scx.gamma(C, 1) == Fraction(1, 3)
    assert scx.gamma(C, 2) == float("inf")
    J = scx.j_ideals(scx.two_bridge(3, -1, "Z[T]")[0], 0, 2)
    assert J[2] == []
    assert len(J[1]) == 1
    assert scx.model_check(C, 4)


def test_tensor_and_dual():
    C = scx.two_bridge(3, -1, "F2[T]")[0]
    D = scx.dual(C)
    assert scx.validate(scx.tensor(C, D)) == []
    assert scx.h(D) == -1
    assert scx.h(scx.tensor(C, C)) == 2


def test_knot_numbers():
    assert scx.torus_signature(3, 5) == -8
    assert scx.torus_alexander(3, 4)[1] == 5
    assert not scx.vanishing(3, 5)
    assert sum(scx.lens_sasahira(9, 2)) == 0
    assert scx.signature_oracle(3, -1) == -2
    assert scx.tilde_rank(scx.fixture("t34")) == 5


def test_run_and_errors():
    status, out, _ = scx.run(["torus", "--p", "3", "--q", "5"])
    assert status == 0 and "-8" in out
    assert scx.run(["bogus"])[0] == 1
    with pytest.raises(scx.DomainError):
        scx.fixture("nope")
    with pytest.raises(scx.Error):
        scx.two_bridge(3, -1, "S_BN")
