"""Spin^c characteristic numbers on CP^2 and on P(nu + 1) over CP^1.

Cohomology rings are tiny, so they are stored as structure-constant tables
over an ordered monomial basis rather than as polynomial quotients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

__all__ = [
    "CohomologyModel",
    "LambdaClass",
    "CP2",
    "PNU",
    "modify_lambda",
    "char_number",
    "cp2_lambda",
    "pnu_lambda",
    "boundary_check",
]

Element = dict[str, int]


@dataclass(frozen=True)
class CohomologyModel:
    name: str
    degrees: Mapping[str, int]  # basis monomial -> cohomological degree
    products: Mapping[tuple[str, str], Mapping[str, int]] = field(repr=False)
    top: str = ""

    def multiply(self, u: Mapping[str, int], v: Mapping[str, int]) -> Element:
        out: Element = {}
        for a, ca in u.items():
            for b, cb in v.items():
                if not ca or not cb:
                    continue
                for m, c in self.products[(a, b)].items():
                    out[m] = out.get(m, 0) + ca * cb * c
        return {m: c for m, c in out.items() if c}

    def degree_of(self, u: Mapping[str, int]) -> int | None:
        degs = {self.degrees[m] for m, c in u.items() if c}
        if len(degs) > 1:
            raise ValueError(f"{dict(u)} is not homogeneous")
        return degs.pop() if degs else None


def _model(name: str, degrees: dict[str, int], rules: dict[tuple[str, str], Element], top: str) -> CohomologyModel:
    table: dict[tuple[str, str], Element] = {}
    for a in degrees:
        for b in degrees:
            if a == "1":
                table[(a, b)] = {b: 1}
            elif b == "1":
                table[(a, b)] = {a: 1}
            elif (a, b) in rules:
                table[(a, b)] = rules[(a, b)]
            elif (b, a) in rules:
                table[(a, b)] = rules[(b, a)]
            else:
                # degree overflow past the top class
                table[(a, b)] = {}
    return CohomologyModel(name, degrees, table, top)


# H*(CP^2) = Z[h]/h^3
CP2 = _model("CP2", {"1": 0, "h": 2, "h2": 4}, {("h", "h"): {"h2": 1}}, "h2")

# H*(P(nu+1)) = Z[y, x]/(y^2, x^2 + yx)
PNU = _model(
    "PNU",
    {"1": 0, "y": 2, "x": 2, "yx": 4},
    {("y", "y"): {}, ("y", "x"): {"yx": 1}, ("x", "x"): {"yx": -1}},
    "yx",
)


@dataclass(frozen=True)
class LambdaClass:
    model: CohomologyModel
    coeffs: tuple[tuple[str, int], ...]

    def __post_init__(self):
        clean = tuple(sorted((m, int(c)) for m, c in dict(self.coeffs).items() if c))
        for m, _ in clean:
            if self.model.degrees.get(m) != 2:
                raise ValueError(f"{m} is not a degree-2 basis element of {self.model.name}")
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def of(cls, model: CohomologyModel, **coeffs: int) -> "LambdaClass":
        return cls(model, tuple(coeffs.items()))

    def as_dict(self) -> Element:
        return dict(self.coeffs)

    def __str__(self):
        return " + ".join(f"{c}{m}" for m, c in self.coeffs) or "0"


def modify_lambda(base: LambdaClass, d: LambdaClass) -> LambdaClass:
    """Lambda class after twisting the Spin^c structure by the 2-cocycle ``d``: ``base + 2d``."""
    if base.model is not d.model:
        raise ValueError("lambda class and modification live in different models")
    out = base.as_dict()
    for m, c in d.coeffs:
        out[m] = out.get(m, 0) + 2 * c
    return LambdaClass(base.model, tuple(out.items()))


def char_number(model: CohomologyModel, lam: LambdaClass) -> int:
    """``<lambda^2, [M]>`` on a real 4-manifold."""
    if lam.model is not model:
        raise ValueError("lambda class belongs to a different model")
    if model.degrees[model.top] != 4:
        raise ValueError("char_number expects a model of top degree 4")
    sq = model.multiply(lam.as_dict(), lam.as_dict())
    return sq.get(model.top, 0)


def cp2_lambda(k: int) -> LambdaClass:
    """Tangential lambda class of CP^2(k): ``3h`` modified by ``k h``."""
    return modify_lambda(LambdaClass.of(CP2, h=3), LambdaClass.of(CP2, h=k))


def pnu_lambda(k: int) -> LambdaClass:
    """Tangential lambda class of P(nu+1)(k), ``-(2+2k) y - 2x``."""
    # the twist enters with y pulled back from the tautological bundle, hence -k y
    return modify_lambda(LambdaClass.of(PNU, y=-2, x=-2), LambdaClass.of(PNU, y=-k))


def boundary_check(k: int) -> int:
    """Lambda-number of ``(CP^2(k) - CP^2) - (k+3)/2 (P(nu+1)(k) - P(nu+1))``; should vanish."""
    if k % 2 == 0:
        raise ValueError("boundary_check needs odd k")
    cp2 = char_number(CP2, cp2_lambda(k)) - char_number(CP2, cp2_lambda(0))
    pnu = char_number(PNU, pnu_lambda(k)) - char_number(PNU, pnu_lambda(0))
    return cp2 - (k + 3) // 2 * pnu
