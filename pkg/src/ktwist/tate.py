"""Tate resolutions tensored down to the integers, and their homology.

A :class:`TateSpec` records exterior generators ``T_i`` (degree 1) with
integer differentials ``c_i`` and divided-power generators ``S_j`` (degree 2)
with ``d(S_j) = sum_i e_ji T_i``.  :func:`build_complex` enumerates the
monomial bases, :func:`boundary_matrix` writes the differential as an integer
matrix and :func:`homology` reads off the groups from Smith normal forms.

Sign convention: monomials are written with their T factors first, in
ascending index order, followed by the S factors.  Differentiating the p-th T
factor (1-based) carries the sign ``(-1)**(p-1)``; differentiating an S factor
carries ``(-1)**(number of T factors)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, reduce
from math import comb, gcd
from typing import Iterator, Mapping, Sequence

from .snf import invariant_factors

__all__ = [
    "RelationPoly",
    "TateSpec",
    "TateComplex",
    "AbelianGroup",
    "HomologyTable",
    "decompose_and_evaluate",
    "build_complex",
    "boundary_matrix",
    "homology",
    "koszul_reference",
    "exterior_pattern",
    "DEFAULT_BOUND",
]

DEFAULT_BOUND = 6

Monomial = tuple[tuple[int, ...], tuple[int, ...]]  # (T subset, S exponents)


class RelationPoly:
    """Sparse integer polynomial, ``{exponent tuple: coefficient}``.

    Supports ``+``, ``-``, ``*`` with other polynomials and ints, which is
    enough to type relations in directly::

        a, b = RelationPoly.variables(2)
        rho = a * (a - 1) - 2 * b
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], int] | None = None):
        self.nvars = nvars
        self.terms: dict[tuple[int, ...], int] = {}
        for e, c in (terms or {}).items():
            if len(e) != nvars:
                raise ValueError(f"exponent {e} does not have {nvars} entries")
            if c:
                self.terms[tuple(e)] = self.terms.get(tuple(e), 0) + int(c)
        self.terms = {e: c for e, c in self.terms.items() if c}

    @classmethod
    def variables(cls, n: int) -> list["RelationPoly"]:
        return [cls(n, {tuple(int(i == j) for j in range(n)): 1}) for i in range(n)]

    @classmethod
    def constant(cls, n: int, value: int) -> "RelationPoly":
        return cls(n, {(0,) * n: value})

    def _coerce(self, other) -> "RelationPoly":
        if isinstance(other, RelationPoly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials live in different rings")
            return other
        if isinstance(other, int):
            return RelationPoly.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return RelationPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return RelationPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return RelationPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = RelationPoly.constant(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = RelationPoly.constant(self.nvars, other)
        return isinstance(other, RelationPoly) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items()):
            mono = "*".join(f"x{i + 1}" + (f"^{p}" if p > 1 else "") for i, p in enumerate(e) if p)
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    @property
    def constant_term(self) -> int:
        return self.terms.get((0,) * self.nvars, 0)

    def evaluate(self, point: Sequence[int]) -> int:
        if len(point) != self.nvars:
            raise ValueError("evaluation point has the wrong length")
        total = 0
        for e, c in self.terms.items():
            term = c
            for x, p in zip(point, e):
                if p:
                    term *= x**p
            total += term
        return total


def decompose_and_evaluate(rho: RelationPoly, images: Sequence[int], highest: bool = False) -> list[int]:
    """Write ``rho = sum_i c_i(x) x_i`` and return ``[c_i(images)]``.

    Each monomial is charged to its lowest-index variable (highest-index with
    ``highest=True``).  Any such choice gives a valid Tate differential.
    """
    if rho.constant_term:
        raise ValueError("relation has a nonzero constant term")
    if len(images) != rho.nvars:
        raise ValueError(f"expected {rho.nvars} images, got {len(images)}")
    out = [0] * rho.nvars
    for e, c in rho.terms.items():
        support = [i for i, p in enumerate(e) if p]
        i = support[-1] if highest else support[0]
        rest = list(e)
        rest[i] -= 1
        term = c
        for x, p in zip(images, rest):
            if p:
                term *= x**p
        out[i] += term
    return out


@dataclass(frozen=True)
class TateSpec:
    n_ext: int
    t_images: tuple[int, ...]
    s_rows: tuple[tuple[int, ...], ...] = ()
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "t_images", tuple(int(c) for c in self.t_images))
        object.__setattr__(self, "s_rows", tuple(tuple(int(x) for x in r) for r in self.s_rows))
        if self.n_ext < 0 or len(self.t_images) != self.n_ext:
            raise ValueError(f"need {self.n_ext} t_images, got {len(self.t_images)}")
        for j, row in enumerate(self.s_rows):
            if len(row) != self.n_ext:
                raise ValueError(f"row {j} has length {len(row)}, expected {self.n_ext}")
            if sum(a * b for a, b in zip(row, self.t_images)):
                raise ValueError(f"row {j} is not a cycle: sum_i e_ji c_i != 0, so d(d(S_{j + 1})) != 0")

    @property
    def n_div(self) -> int:
        return len(self.s_rows)

    @classmethod
    def from_relations(
        cls,
        relations: Sequence[RelationPoly],
        images: Sequence[int],
        highest: bool = False,
        labels: Sequence[str] | None = None,
    ) -> "TateSpec":
        rows = tuple(tuple(decompose_and_evaluate(r, images, highest)) for r in relations)
        return cls(len(images), tuple(images), rows, tuple(labels) if labels else None)


def _s_exponents(n: int, total: int) -> Iterator[tuple[int, ...]]:
    """Exponent vectors of length n summing to total, in lexicographic order."""
    if n == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _s_exponents(n - 1, total - first):
            yield (first,) + rest


def _basis(spec: TateSpec, d: int) -> list[Monomial]:
    out = []
    for p in range(d % 2, min(spec.n_ext, d) + 1, 2):
        for subset in itertools.combinations(range(spec.n_ext), p):
            for m in _s_exponents(spec.n_div, (d - p) // 2):
                out.append((subset, m))
    out.sort()
    return out


@dataclass(frozen=True)
class TateComplex:
    spec: TateSpec
    degree_bound: int
    bases: tuple[tuple[Monomial, ...], ...] = field(repr=False)

    @cached_property
    def _index(self) -> tuple[dict[Monomial, int], ...]:
        return tuple({mono: i for i, mono in enumerate(b)} for b in self.bases)

    def rank(self, d: int) -> int:
        return len(self.bases[d]) if 0 <= d <= self.degree_bound else 0

    def monomial_name(self, mono: Monomial) -> str:
        subset, m = mono
        parts = [f"T{i + 1}" for i in subset]
        for j, e in enumerate(m):
            if e == 1:
                parts.append(f"S{j + 1}")
            elif e > 1:
                parts.append(f"S{j + 1}^({e})")
        return "".join(parts) or "1"


def build_complex(spec: TateSpec, degree_bound: int = DEFAULT_BOUND) -> TateComplex:
    if degree_bound < 1:
        raise ValueError("degree_bound must be at least 1")
    bases = tuple(tuple(_basis(spec, d)) for d in range(degree_bound + 1))
    return TateComplex(spec, degree_bound, bases)


def _differential(spec: TateSpec, mono: Monomial) -> dict[Monomial, int]:
    subset, m = mono
    out: dict[Monomial, int] = {}
    for q, i in enumerate(subset):
        c = spec.t_images[i]
        if c:
            key = (subset[:q] + subset[q + 1 :], m)
            out[key] = out.get(key, 0) + (-1) ** q * c
    base_sign = (-1) ** len(subset)
    for j, mj in enumerate(m):
        if not mj:
            continue
        lowered = m[:j] + (mj - 1,) + m[j + 1 :]
        for i, e in enumerate(spec.s_rows[j]):
            if not e or i in subset:
                continue
            # move T_i left past the factors of the subset with larger index
            passes = sum(1 for t in subset if t > i)
            key = (tuple(sorted(subset + (i,))), lowered)
            out[key] = out.get(key, 0) + base_sign * (-1) ** passes * e
    return out


def boundary_matrix(cx: TateComplex, d: int) -> list[list[int]]:
    """Matrix of ``d: C_d -> C_(d-1)``; rows index the degree d-1 basis."""
    if not 1 <= d <= cx.degree_bound:
        raise ValueError(f"degree {d} outside 1..{cx.degree_bound}")
    target = cx._index[d - 1]
    rows = len(cx.bases[d - 1])
    cols = len(cx.bases[d])
    M = [[0] * cols for _ in range(rows)]
    for col, mono in enumerate(cx.bases[d]):
        for key, coeff in _differential(cx.spec, mono).items():
            if coeff:
                M[target[key]][col] += coeff
    return M


@dataclass(frozen=True, order=True)
class AbelianGroup:
    """``Z^free_rank + sum Z/t`` with torsion in divisor-chain order, all t > 1."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        tors = tuple(sorted(int(t) for t in self.torsion if abs(t) != 1))
        if any(t <= 0 for t in tors):
            raise ValueError(f"torsion coefficients must be > 1, got {self.torsion}")
        if any(b % a for a, b in zip(tors, tors[1:])):
            raise ValueError(f"torsion {tors} is not a divisor chain")
        object.__setattr__(self, "torsion", tors)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class HomologyTable:
    groups: tuple[AbelianGroup, ...]

    def __getitem__(self, d: int) -> AbelianGroup:
        return self.groups[d]

    def __len__(self):
        return len(self.groups)

    def __iter__(self):
        return iter(self.groups)

    def __str__(self):
        return ", ".join(f"H{d}={g}" for d, g in enumerate(self.groups))

    def to_dict(self) -> list[dict]:
        return [{"degree": d, "free_rank": g.free_rank, "torsion": [str(t) for t in g.torsion]} for d, g in enumerate(self.groups)]

    @classmethod
    def from_dict(cls, rows: Sequence[Mapping]) -> "HomologyTable":
        return cls(tuple(AbelianGroup(int(r["free_rank"]), tuple(int(t) for t in r["torsion"])) for r in rows))


def homology(cx: TateComplex, parallel: int = 1) -> HomologyTable:
    """Integer homology in degrees ``0 .. degree_bound - 1``.

    Since each cycle module is saturated in the chain module, the torsion of
    ``H_d`` is exactly the set of nontrivial invariant factors of ``d_(d+1)``.
    """
    bound = cx.degree_bound

    def factors(d):
        if d == 0:
            return []
        M = boundary_matrix(cx, d)
        if not M or not M[0]:
            return []
        return invariant_factors(M)

    degrees = list(range(1, bound + 1))
    if parallel > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=parallel) as pool:
            inv = dict(zip(degrees, pool.map(factors, degrees)))
    else:
        inv = {d: factors(d) for d in degrees}
    inv[0] = []
    groups = []
    for d in range(bound):
        free = cx.rank(d) - len(inv[d]) - len(inv[d + 1])
        groups.append(AbelianGroup(free, tuple(t for t in inv[d + 1] if t != 1)))
    return HomologyTable(tuple(groups))


def exterior_pattern(order: int, ext_rank: int, bound: int) -> HomologyTable:
    """``Z/order`` tensor an exterior algebra on ``ext_rank`` degree-1 generators."""
    order = abs(order)
    if order == 0:
        return HomologyTable(tuple(AbelianGroup(comb(ext_rank, d)) for d in range(bound)))
    return HomologyTable(tuple(AbelianGroup(0, (order,) * comb(ext_rank, d)) for d in range(bound)))


def koszul_reference(c: Sequence[int], bound: int) -> HomologyTable:
    """Closed-form homology of ``(Z<T_1..T_n>, dT_i = c_i)``: ``(Z/g)^binom(n-1, j)``."""
    if not c or not any(c):
        raise ValueError("koszul_reference needs at least one nonzero image")
    g = reduce(gcd, c)
    return exterior_pattern(g, len(c) - 1, bound)
