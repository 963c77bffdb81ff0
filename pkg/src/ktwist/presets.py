"""Named Tate complexes for the loop-space K-homology presentations.

Lettered generators ``a, b, c, d, e`` of the exceptional presentations (and
the generators ``a_1, a_2, ...`` of the Spin subrings ``R_n``) map to the
binomial coefficients ``binom(k, i)`` under the level-k twist.  Each preset
also records the homology it is expected to have: ``Z/order`` tensor an
exterior algebra on ``exterior_rank`` generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import comb, gcd
from typing import Callable, Sequence

from .tate import HomologyTable, RelationPoly, TateSpec, exterior_pattern

__all__ = [
    "Preset",
    "PRESETS",
    "binomial_images",
    "exceptional_relations",
    "clarke_relation",
    "spin_subring_relations",
    "koszul",
    "g2",
    "f4core",
    "e7core",
    "e8core",
    "spin_rn",
    "get_preset",
]


def binomial_images(k: int, n: int) -> list[int]:
    return [comb(k, i) for i in range(1, n + 1)] if k >= 0 else [_gen_comb(k, i) for i in range(1, n + 1)]


def _gen_comb(m: int, b: int) -> int:
    num = 1
    for t in range(b):
        num *= m - t
    den = 1
    for t in range(2, b + 1):
        den *= t
    return num // den


def _prefix_gcd(values: Sequence[int]) -> int:
    return reduce(gcd, values, 0)


@dataclass(frozen=True)
class Preset:
    name: str
    spec: TateSpec
    order: int | None = None  # None: no expectation (negative controls, custom specs)
    exterior_rank: int = 0

    def expected(self, bound: int) -> HomologyTable | None:
        if self.order is None:
            return None
        return exterior_pattern(self.order, self.exterior_rank, bound)


def exceptional_relations(count: int, naive_third: bool = False) -> list[RelationPoly]:
    """The first ``count`` relations among the lettered generators a..e.

    ``naive_third`` swaps the E7/E8 relation ``b(b+1) - a(b+c) - 2d`` for
    ``c(a-3) - 4d``, which does not give a presentation of the ring.
    """
    a, b, c, d, e = RelationPoly.variables(5)
    third = c * (a - 3) - 4 * d if naive_third else b * (b + 1) - a * (b + c) - 2 * d
    rels = [a * (a - 1) - 2 * b, b * (a - 2) - 3 * c, third, d * (a - 4) - 5 * e]
    nvars = count + 1
    return [_restrict(r, nvars) for r in rels[:count]]


def _restrict(poly: RelationPoly, nvars: int) -> RelationPoly:
    terms = {}
    for e, c in poly.terms.items():
        if any(e[nvars:]):
            raise ValueError("relation uses a dropped variable")
        terms[e[:nvars]] = c
    return RelationPoly(nvars, terms)


def clarke_relation(k: int, nvars: int) -> RelationPoly:
    """``rho_k = s_k^2 + sum_{i<k} (-1)^(k-i) s_i sum_{j=k}^{2k-i-1} binom(k-i-1, j-k)(2 s_(j+1) + s_j)``

    in variables ``s_1 .. s_nvars`` with ``s_0 = 1``.
    """
    if 2 * k > nvars:
        raise ValueError(f"rho_{k} needs variables up to s_{2 * k}")
    xs = RelationPoly.variables(nvars)
    one = RelationPoly.constant(nvars, 1)

    def s(i):
        return one if i == 0 else xs[i - 1]

    total = s(k) * s(k)
    for i in range(k):
        inner = RelationPoly(nvars)
        for j in range(k, 2 * k - i):
            inner = inner + comb(k - i - 1, j - k) * (2 * s(j + 1) + s(j))
        total = total + (-1) ** (k - i) * s(i) * inner
    return total


def spin_subring_relations(n: int) -> list[RelationPoly]:
    """Relations ``rho_1 .. rho_(n-1)`` of ``R_n = Z[a_1..a_(2n-2)]/(...)``."""
    if n < 2:
        raise ValueError("R_n needs n >= 2")
    nvars = 2 * n - 2
    return [clarke_relation(i, nvars) for i in range(1, n)]


def koszul(c: Sequence[int]) -> Preset:
    c = tuple(int(x) for x in c)
    if not c:
        raise ValueError("koszul preset needs at least one image")
    g = _prefix_gcd(c)
    return Preset("koszul", TateSpec(len(c), c), g if g else None, len(c) - 1)


def g2(k: int, x3: int | None = None, with_x3: bool = True, highest: bool = False) -> Preset:
    """``Z[a, b, x_3]/(a(a-1) - 2b)``; ``x_3`` defaults to the image ``binom(k, 3)``."""
    (rel,) = exceptional_relations(1)
    images = binomial_images(k, 2)
    if not with_x3:
        spec = TateSpec.from_relations([rel], images, highest, ("a", "b"))
        return Preset("g2", spec, _prefix_gcd(images), 0)
    x3 = binomial_images(k, 3)[2] if x3 is None else int(x3)
    three = RelationPoly(3, {e + (0,): c for e, c in rel.terms.items()})
    spec = TateSpec.from_relations([three], images + [x3], highest, ("a", "b", "x3"))
    return Preset("g2", spec, _prefix_gcd(images + [x3]), 1)


def f4core(k: int, highest: bool = False) -> Preset:
    images = binomial_images(k, 3)
    spec = TateSpec.from_relations(exceptional_relations(2), images, highest, ("a", "b", "c"))
    return Preset("f4core", spec, _prefix_gcd(images), 0)


def e7core(k: int, naive: bool = False, highest: bool = False) -> Preset:
    images = binomial_images(k, 4)
    spec = TateSpec.from_relations(exceptional_relations(3, naive), images, highest, ("a", "b", "c", "d"))
    if naive:
        return Preset("e7naive", spec, None, 0)
    return Preset("e7core", spec, _prefix_gcd(images), 0)


def e8core(k: int, highest: bool = False) -> Preset:
    images = binomial_images(k, 5)
    spec = TateSpec.from_relations(exceptional_relations(4), images, highest, ("a", "b", "c", "d", "e"))
    return Preset("e8core", spec, _prefix_gcd(images), 0)


def spin_rn(n: int, k: int, highest: bool = False) -> Preset:
    """The subring ``R_n`` governing Tor for Spin(4n-1) .. Spin(4n+2)."""
    images = binomial_images(k, 2 * n - 2)
    labels = tuple(f"a{i}" for i in range(1, 2 * n - 1))
    spec = TateSpec.from_relations(spin_subring_relations(n), images, highest, labels)
    return Preset(f"spinR{n}", spec, _prefix_gcd(images), n - 2)


PRESETS: dict[str, Callable[..., Preset]] = {
    "g2": g2,
    "f4core": f4core,
    "e7core": e7core,
    "e7naive": lambda k, highest=False: e7core(k, naive=True, highest=highest),
    "e8core": e8core,
    "spinR3": lambda k, highest=False: spin_rn(3, k, highest),
    "spinR4": lambda k, highest=False: spin_rn(4, k, highest),
}


def get_preset(name: str, k: int, highest: bool = False) -> Preset:
    try:
        builder = PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; choose from koszul, {', '.join(PRESETS)}") from None
    return builder(k, highest=highest)
