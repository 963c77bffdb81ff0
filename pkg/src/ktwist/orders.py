"""Cyclic orders c(G, k) of twisted K-homology, by several independent routes.

Closed forms evaluate the gcd formulas directly.  The other routes rebuild the
twist images of loop-space generators: Weyl dimensions for SU(n+1),
Thom-space pushforwards and the Sp(i)/U(i) product formula for Sp(n), Clarke's
integral generators for Spin, and Poincare-dual holomorphic induction for G2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from math import comb, gcd
from typing import Sequence

from .rootrep import build_root_system, holo_induce_dim, weyl_dim

__all__ = [
    "FAMILIES",
    "GroupSpec",
    "InsufficientData",
    "CrossCheckReport",
    "gen_binomial",
    "gcd_all",
    "closed_form_order",
    "su_images",
    "su_images_weyl",
    "sp_images_thom",
    "sp_images_conjecture",
    "spin_images",
    "spin_images_reduced",
    "g2_sixfold",
    "g2_polynomial_list",
    "cross_check",
]

FAMILIES = ("SU", "Sp", "SpinOdd", "SpinEven", "G2", "F4", "E6", "E7", "E8")
_EXCEPTIONAL = ("F4", "E6", "E7", "E8")


class InsufficientData(Exception):
    """The twist images needed for this group's cyclic order are not available."""


@dataclass(frozen=True)
class GroupSpec:
    """A simply connected simple group and a twisting level.

    ``parameter`` follows the family naming: SU n is SU(n+1), Sp n is Sp(n),
    SpinOdd m is Spin(2m+1), SpinEven m is Spin(2m+2).  Exceptional families
    ignore it.
    """

    family: str
    parameter: int
    k: int

    def __post_init__(self):
        canon = {f.lower(): f for f in FAMILIES}
        fam = canon.get(str(self.family).lower())
        if fam is None:
            raise ValueError(f"unknown group family {self.family!r}; choose from {', '.join(FAMILIES)}")
        object.__setattr__(self, "family", fam)
        if self.k == 0:
            raise ValueError("twisting level k must be nonzero")
        if fam in ("G2",) + _EXCEPTIONAL:
            object.__setattr__(self, "parameter", 0)
        elif fam in ("SpinOdd", "SpinEven"):
            if self.parameter < 2:
                raise ValueError(f"{fam} parameter must be >= 2 (degenerate rank excluded), got {self.parameter}")
        elif self.parameter < 1:
            raise ValueError(f"{fam} parameter must be >= 1, got {self.parameter}")

    @property
    def name(self) -> str:
        f, p = self.family, self.parameter
        if f == "SU":
            return f"SU({p + 1})"
        if f == "Sp":
            return f"Sp({p})"
        if f == "SpinOdd":
            return f"Spin({2 * p + 1})"
        if f == "SpinEven":
            return f"Spin({2 * p + 2})"
        return f

    def with_k(self, k: int) -> "GroupSpec":
        return GroupSpec(self.family, self.parameter, k)


def gen_binomial(m: int, b: int) -> int:
    """Falling factorial ``m (m-1) ... (m-b+1) / b!``, valid for negative ``m``."""
    if b < 0:
        raise ValueError("b must be nonnegative")
    num = 1
    for t in range(b):
        num *= m - t
    den = 1
    for t in range(2, b + 1):
        den *= t
    q, r = divmod(num, den)
    assert r == 0
    return q


def gcd_all(values: Sequence[int]) -> int:
    return reduce(gcd, values, 0)


def _b(k: int, i: int) -> int:
    return comb(k, i)


def _spin_closed_form_set(group: str, n: int, k: int) -> list[int]:
    """Closed-form gcd sets for Spin(4n-1), Spin(4n+1), Spin(4n+2), Spin(4n)."""
    if group == "4n-1":
        return (
            [_b(k, i) for i in range(1, 2 * n - 1)]
            + [2 * _b(k, 2 * n - 1)]
            + [2 * _b(k, 2 * i + 1) + _b(k, 2 * i) for i in range(n, 2 * n - 1)]
        )
    if group == "4n+1":
        return [_b(k, i) for i in range(1, 2 * n)] + [
            2 * _b(k, 2 * i + 1) + _b(k, 2 * i) for i in range(n, 2 * n)
        ]
    if group == "4n+2":
        return (
            [_b(k, i) for i in range(1, 2 * n + 1)]
            + [2 * _b(k, 2 * n + 1)]
            + [2 * _b(k, 2 * i + 1) + _b(k, 2 * i) for i in range(n + 1, 2 * n)]
        )
    if group == "4n":
        return [_b(k, i) for i in range(1, 2 * n)] + [
            2 * _b(k, 2 * i + 1) + _b(k, 2 * i) for i in range(n, 2 * n - 1)
        ]
    raise ValueError(group)


def _g2_dim_kb(k: int) -> int:
    num = (k + 1) * (k + 2) * (2 * k + 3) * (3 * k + 4) * (3 * k + 5)
    q, r = divmod(num, 120)
    assert r == 0
    return q


def closed_form_order(g: GroupSpec) -> int:
    """c(G, k) from the closed-form gcd formulas; ``c(G, -k) = c(G, k)``."""
    k = abs(g.k)
    f, p = g.family, g.parameter
    if f in _EXCEPTIONAL:
        raise InsufficientData(
            f"c({f}, k) needs the twist images of the non-lettered generators, which are not known"
        )
    if f == "SU":
        values = [comb(k + i, i) - 1 for i in range(1, p + 1)]
    elif f == "Sp":
        values = [
            sum(gen_binomial(2 * j + 2 * (i - 1), 2 * (i - 1)) for j in range(-k, 0)) for i in range(1, p + 1)
        ]
    elif f == "G2":
        values = [comb(k + 1, 1) - 1, comb(k + 2, 2) - 1, _g2_dim_kb(k) - 1]
    elif f == "SpinOdd":
        # Spin(2p+1): p odd is Spin(4n-1) with n = (p+1)/2, p even is Spin(4n+1) with n = p/2
        values = _spin_closed_form_set("4n-1", (p + 1) // 2, k) if p % 2 else _spin_closed_form_set("4n+1", p // 2, k)
    else:
        # Spin(2p+2): p even is Spin(4n+2) with n = p/2, p odd is Spin(4n) with n = (p+1)/2
        values = _spin_closed_form_set("4n", (p + 1) // 2, k) if p % 2 else _spin_closed_form_set("4n+2", p // 2, k)
    return gcd_all(values)


def su_images(n: int, k: int, check: bool = True) -> list[int]:
    """Twist images ``binom(k+i, i) - 1`` of the reduced classes ``[CP^i] - 1``.

    With ``check`` each entry is confirmed against the Weyl dimension of
    ``k * omega_1`` for SU(i+1).
    """
    if n < 1 or k == 0:
        raise ValueError("su_images needs n >= 1 and k != 0")
    k = abs(k)
    out = []
    for i in range(1, n + 1):
        value = comb(k + i, i) - 1
        if check:
            rs = build_root_system("A", i)
            rep = weyl_dim(rs, [k] + [0] * (i - 1)) - 1
            if rep != value:
                raise AssertionError(f"binomial and Weyl routes disagree for SU({i + 1}), k={k}")
        out.append(value)
    return out


def su_images_weyl(n: int, k: int) -> list[int]:
    """The SU(n+1) images computed only through the Weyl dimension formula."""
    k = abs(k)
    return [weyl_dim(build_root_system("A", i), [k] + [0] * (i - 1)) - 1 for i in range(1, n + 1)]


def sp_images_thom(n: int, k: int) -> list[int]:
    """Pushforwards of ``Sym^k(L^2 + 1) (x) L^(-2k)`` over ``CP^(2(i-1))``, minus the untwisted value."""
    if n < 1 or k <= 0:
        raise ValueError("sp_images_thom needs n >= 1 and k > 0")
    return [sum(gen_binomial(2 * j + 2 * (i - 1), 2 * (i - 1)) for j in range(-k, 0)) for i in range(1, n + 1)]


def _sp_product(i: int, k: int) -> int:
    num = 1
    for j in range(1, i + 1):
        for l in range(j + 1, i + 1):
            num *= (l - j) * (2 * k + 2 * i + 2 - (j + l))
    for j in range(1, i + 1):
        num *= k + i + 1 - j
    den = 1
    for t in range(1, i + 1):
        for s in range(2, 2 * t):
            den *= s
    q, r = divmod(num, den)
    if r:
        raise AssertionError(f"Sp(i)/U(i) product not integral at i={i}, k={k}")
    return q


def sp_images_conjecture(n: int, k: int) -> list[int]:
    """Images of ``[Sp(i)/U(i)] - 1`` through the odd-factorial product formula."""
    if n < 1 or k <= 0:
        raise ValueError("sp_images_conjecture needs n >= 1 and k > 0")
    return [_sp_product(i, k) - _sp_product(i, 0) for i in range(1, n + 1)]


def spin_images(g: GroupSpec) -> list[int]:
    """Full vector of twist images of Clarke's integral generators."""
    if g.family not in ("SpinOdd", "SpinEven"):
        raise ValueError(f"{g.name} is not a Spin group")
    k, m = g.k, g.parameter
    b = (lambda i: comb(k, i)) if k >= 0 else (lambda i: gen_binomial(k, i))
    if g.family == "SpinOdd":
        # Spin(2m+1): (b_1 .. b_(m-1), 2 b_m, 2 b_(m+1) + b_m, .., 2 b_(2m-1) + b_(2m-2))
        return [b(i) for i in range(1, m)] + [2 * b(m)] + [2 * b(j) + b(j - 1) for j in range(m + 1, 2 * m)]
    # Spin(2m+2): (b_1 .. b_m, 0, 2 b_(m+1), 2 b_(m+2) + b_(m+1), .., 2 b_(2m) + b_(2m-1))
    return [b(i) for i in range(1, m + 1)] + [0, 2 * b(m + 1)] + [2 * b(j) + b(j - 1) for j in range(m + 2, 2 * m + 1)]


def _spin_kept(g: GroupSpec) -> list[bool]:
    m = g.parameter
    if g.family == "SpinOdd":
        # generators a_1 .. a_(2m-1); rho_i eliminates a_(2i) for i >= ceil(m/2)
        n = (m + 1) // 2
        return [j <= 2 * n - 1 or j % 2 == 1 for j in range(1, 2 * m)]
    # order: a_1 .. a_(m-1), a^_m, b, a'_(m+1), a_(m+2) .. a_(2m)
    kept = [True] * m
    if m % 2 == 0:
        # Spin(4n+2): rho_n kills b, later relations kill even a_j with j > m
        kept += [False, True] + [j % 2 == 1 for j in range(m + 2, 2 * m + 1)]
    else:
        # Spin(4n): rho_n kills a'_(m+1), later relations kill even a_j with j > m + 1
        kept += [True, False] + [j % 2 == 1 for j in range(m + 2, 2 * m + 1)]
    return kept


def spin_images_reduced(g: GroupSpec) -> list[int]:
    """Images of the generators left after the relations eliminate even-index ones."""
    return [v for v, keep in zip(spin_images(g), _spin_kept(g)) if keep]


def _gamma(rs, n: int, m: int) -> int:
    return holo_induce_dim(rs, (n, m)).value


def g2_sixfold(k: int) -> list[int]:
    """The six Poincare-dual differences ``tau_k(Dw) - tau_0(Dw)`` for G2/U(2)."""
    if k < 1:
        raise ValueError("g2_sixfold needs k >= 1")
    rs = build_root_system("G2")
    G = lambda n, m: _gamma(rs, n, m)  # noqa: E731
    return [
        G(0, k) - G(0, 0),
        G(0, k - 1),
        G(0, k - 2),
        G(1, k) - G(1, 0),
        G(1, k - 1),
        G(2, k) + G(0, k + 1) - G(2, 0) - G(0, 1),
    ]


_G2_POLYS = (
    ((422, 585, 400, 135, 18), 120),
    ((2, 15, 40, 45, 18), 120),
    ((2, -15, 40, -45, 18), 120),
    ((601, 660, 350, 90, 9), 30),
    ((16, 60, 80, 45, 9), 30),
    ((2867, 2550, 1090, 225, 18), 30),
)


def g2_polynomial_list(k: int) -> list[int]:
    """The six quintic polynomials ``k * p(k) / den`` evaluated exactly."""
    if k < 1:
        raise ValueError("g2_polynomial_list needs k >= 1")
    out = []
    for coeffs, den in _G2_POLYS:
        num = k * sum(c * k**e for e, c in enumerate(coeffs))
        q, r = divmod(num, den)
        if r:
            raise AssertionError(f"G2 polynomial {coeffs}/{den} not integral at k={k}")
        out.append(q)
    return out


@dataclass(frozen=True)
class CrossCheckReport:
    group: GroupSpec
    values: dict[str, int] = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return len(set(self.values.values())) <= 1


def cross_check(g: GroupSpec) -> CrossCheckReport:
    """Compute every available route for ``g`` and compare."""
    f, p, k = g.family, g.parameter, abs(g.k)
    values: dict[str, int] = {"closed_form": closed_form_order(g)}
    if f == "SU":
        values["weyl_dim"] = gcd_all(su_images_weyl(p, k))
        if p == 3:
            values["spin6_closed_form"] = closed_form_order(GroupSpec("SpinEven", 2, k))
    elif f == "Sp":
        values["thom"] = gcd_all(sp_images_thom(p, k))
        values["conjecture"] = gcd_all(sp_images_conjecture(p, k))
        if p == 2:
            values["spin5_closed_form"] = closed_form_order(GroupSpec("SpinOdd", 2, k))
    elif f == "G2":
        values["sixfold"] = gcd_all(g2_sixfold(k))
        values["polynomial_list"] = gcd_all(g2_polynomial_list(k))
    elif f in ("SpinOdd", "SpinEven"):
        values["spin_images"] = gcd_all(spin_images_reduced(g))
        if f == "SpinOdd" and p == 2:
            values["sp2_closed_form"] = closed_form_order(GroupSpec("Sp", 2, k))
        if f == "SpinEven" and p == 2:
            values["su4_closed_form"] = closed_form_order(GroupSpec("SU", 3, k))
    return CrossCheckReport(g, values)
