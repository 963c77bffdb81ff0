from functools import reduce
from math import comb, gcd

import pytest

from ktwist import orders
from ktwist.orders import (
    GroupSpec,
    InsufficientData,
    closed_form_order,
    cross_check,
    g2_polynomial_list,
    g2_sixfold,
    gcd_all,
    gen_binomial,
    sp_images_conjecture,
    sp_images_thom,
    spin_images,
    spin_images_reduced,
    su_images,
    su_images_weyl,
)


def test_gen_binomial():
    assert gen_binomial(-2, 2) == 3
    assert gen_binomial(5, 2) == 10
    assert gen_binomial(0, 3) == 0
    for m in range(-10, 10):
        for b in range(6):
            # upper negation identity
            assert gen_binomial(m, b) == (-1) ** b * gen_binomial(b - m - 1, b)
            if m >= 0:
                assert gen_binomial(m, b) == comb(m, b)
    with pytest.raises(ValueError):
        gen_binomial(3, -1)


def test_group_spec():
    g = GroupSpec("su", 2, 3)
    assert g.family == "SU" and g.name == "SU(3)"
    assert GroupSpec("spinodd", 3, 1).name == "Spin(7)"
    assert GroupSpec("SpinEven", 2, 1).name == "Spin(6)"
    assert GroupSpec("G2", 5, 1).parameter == 0
    for bad in [("SpinOdd", 1, 2), ("SpinEven", 1, 2), ("SU", 0, 1), ("SU", 2, 0), ("Q", 1, 1)]:
        with pytest.raises(ValueError):
            GroupSpec(*bad)


def test_closed_form_examples():
    assert closed_form_order(GroupSpec("SU", 2, 3)) == 3
    assert closed_form_order(GroupSpec("G2", 0, 1)) == 1
    for k in range(1, 40):
        assert closed_form_order(GroupSpec("Sp", 1, k)) == k
        assert closed_form_order(GroupSpec("SU", 1, k)) == k


def test_su_known_small_orders():
    # c(SU(n+1), k) = k / gcd(k, lcm(1..n))
    def lcm_upto(n):
        out = 1
        for i in range(1, n + 1):
            out = out * i // gcd(out, i)
        return out

    for n in range(1, 7):
        for k in range(1, 120):
            assert closed_form_order(GroupSpec("SU", n, k)) == k // gcd(k, lcm_upto(n))


def test_exceptional_groups_insufficient():
    for f in ("F4", "E6", "E7", "E8"):
        with pytest.raises(InsufficientData):
            closed_form_order(GroupSpec(f, 0, 3))


def test_negative_level():
    for fam, p in [("SU", 3), ("Sp", 2), ("G2", 0), ("SpinOdd", 3), ("SpinEven", 4)]:
        for k in range(1, 30):
            assert closed_form_order(GroupSpec(fam, p, k)) == closed_form_order(GroupSpec(fam, p, -k))


def test_su_images():
    assert su_images(2, 3) == [3, 9]
    assert su_images(3, 1) == [1, 2, 3]
    for k in range(1, 20):
        assert su_images(1, k) == [k]


@pytest.mark.parametrize("n", range(1, 7))
def test_su_routes(n):
    for k in range(1, 201):
        g = GroupSpec("SU", n, k)
        assert gcd_all(su_images(n, k, check=False)) == closed_form_order(g)
        assert su_images_weyl(n, k) == [comb(k + i, i) - 1 for i in range(1, n + 1)]


def test_sp_images():
    for k in range(1, 20):
        assert sp_images_thom(1, k) == [k]
        assert sp_images_conjecture(1, k) == [k]
    assert sp_images_thom(2, 2) == [2, 3]
    assert sp_images_thom(2, 3) == [3, 13]
    assert orders._sp_product(2, 0) == 1
    assert gcd_all(sp_images_conjecture(2, 1)) == gcd_all(sp_images_thom(2, 1))


@pytest.mark.parametrize("n", range(1, 6))
def test_sp_routes(n):
    for k in range(1, 101):
        assert gcd_all(sp_images_thom(n, k)) == gcd_all(sp_images_conjecture(n, k))


def test_spin_images():
    for k in range(1, 15):
        assert spin_images(GroupSpec("SpinOdd", 2, k)) == [comb(k, 1), 2 * comb(k, 2), 2 * comb(k, 3) + comb(k, 2)]
    assert spin_images(GroupSpec("SpinOdd", 3, 2)) == [2, 1, 0, 0, 0]
    red = spin_images_reduced(GroupSpec("SpinEven", 2, 4))
    assert red == [4, 6, 8] and gcd_all(red) == 2


@pytest.mark.parametrize("fam", ["SpinOdd", "SpinEven"])
@pytest.mark.parametrize("m", range(2, 8))
def test_spin_routes(fam, m):
    for k in range(1, 201):
        g = GroupSpec(fam, m, k)
        assert gcd_all(spin_images_reduced(g)) == closed_form_order(g)


def test_g2_sixfold_examples():
    six = g2_sixfold(1)
    assert six[0] == 13 and six[1] == 1 and six[3] == 57
    assert six == g2_polynomial_list(1)
    assert g2_polynomial_list(1)[:3] == [13, 1, 0]
    assert g2_polynomial_list(2)[1] == 14
    assert g2_polynomial_list(1)[4] == 7


def test_g2_routes_agree_elementwise():
    for k in range(1, 60):
        assert g2_sixfold(k) == g2_polynomial_list(k)


def test_g2_polynomials_integral():
    for k in range(1, 1001):
        g2_polynomial_list(k)


def test_cross_check_examples():
    r = cross_check(GroupSpec("G2", 0, 2))
    assert r.agree and set(r.values.values()) == {1}
    r = cross_check(GroupSpec("SpinEven", 2, 4))
    assert r.agree and r.values["su4_closed_form"] == 2
    r = cross_check(GroupSpec("SpinOdd", 2, 4))
    assert r.agree and r.values["sp2_closed_form"] == 2
    assert gcd_all(su_images(3, 4)) == reduce(gcd, [4, 14, 34]) == 2


def test_exceptional_isomorphisms():
    for k in range(1, 201):
        assert closed_form_order(GroupSpec("SpinOdd", 2, k)) == closed_form_order(GroupSpec("Sp", 2, k))
        assert closed_form_order(GroupSpec("SpinEven", 2, k)) == closed_form_order(GroupSpec("SU", 3, k))


def test_cross_check_detects_broken_binomial(monkeypatch):
    real = orders.gen_binomial
    # one numerator factor too many: m (m-1) ... (m-b) / b!
    broken = lambda m, b: (b + 1) * real(m, b + 1)  # noqa: E731
    monkeypatch.setattr(orders, "gen_binomial", broken)
    assert broken(-2, 0) == -2
    bad = [(n, k) for n in range(1, 4) for k in range(1, 10) if not cross_check(GroupSpec("Sp", n, k)).agree]
    assert (1, 2) in bad
