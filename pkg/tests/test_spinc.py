import itertools

import pytest

from ktwist.spinc import (
    CP2,
    PNU,
    LambdaClass,
    boundary_check,
    char_number,
    cp2_lambda,
    modify_lambda,
    pnu_lambda,
)


def test_modify_lambda():
    for k in range(-3, 6):
        assert modify_lambda(LambdaClass.of(CP2, h=3), LambdaClass.of(CP2, h=k)) == LambdaClass.of(CP2, h=3 + 2 * k)
    lam = LambdaClass.of(PNU, y=-2, x=-2)
    assert modify_lambda(lam, LambdaClass.of(PNU)) == lam


def test_pnu_tangential_class():
    for k in range(10):
        assert pnu_lambda(k) == LambdaClass.of(PNU, y=-(2 + 2 * k), x=-2)


def test_examples():
    assert char_number(CP2, cp2_lambda(1)) == 25
    assert char_number(PNU, pnu_lambda(1)) == 12
    assert char_number(PNU, LambdaClass.of(PNU)) == 0


def test_char_number_ranges():
    for k in range(0, 101):
        assert char_number(CP2, cp2_lambda(k)) == 4 * k * k + 12 * k + 9
        assert char_number(PNU, pnu_lambda(k)) == 8 * k + 4


def test_boundary_vanishes():
    for k in range(1, 1000, 2):
        assert boundary_check(k) == 0
    with pytest.raises(ValueError):
        boundary_check(2)


def test_lambda_must_have_degree_two():
    with pytest.raises(ValueError):
        LambdaClass.of(CP2, h2=1)
    with pytest.raises(ValueError):
        modify_lambda(LambdaClass.of(CP2, h=1), LambdaClass.of(PNU, y=1))


@pytest.mark.parametrize("model", [CP2, PNU], ids=lambda m: m.name)
def test_ring_axioms(model):
    basis = list(model.degrees)
    unit = {m: int(m == "1") for m in basis}
    for a, b in itertools.product(basis, repeat=2):
        assert model.multiply({a: 1}, {b: 1}) == model.multiply({b: 1}, {a: 1})
        assert model.multiply(unit, {a: 1}) == {a: 1}
        prod = model.multiply({a: 1}, {b: 1})
        if prod:
            assert model.degree_of(prod) == model.degrees[a] + model.degrees[b]
        for c in basis:
            left = model.multiply(model.multiply({a: 1}, {b: 1}), {c: 1})
            right = model.multiply({a: 1}, model.multiply({b: 1}, {c: 1}))
            assert left == right


def test_pnu_relations():
    assert PNU.multiply({"y": 1}, {"y": 1}) == {}
    assert PNU.multiply({"x": 1}, {"x": 1}) == {"yx": -1}
