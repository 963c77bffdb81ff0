"""Root systems, the Weyl dimension formula and holomorphic induction.

Weights are stored in the fundamental-weight basis, roots in the simple-root
basis.  Every pairing ``<weight, coroot>`` is an integer dot product against a
precomputed coroot vector, so nothing here ever leaves exact arithmetic.

Cartan matrices follow the Bourbaki labelling with
``cartan[i][j] = <alpha_i^vee, alpha_j>``; in particular the simple root
``alpha_j`` has fundamental-weight coordinates given by column ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

__all__ = [
    "RootSystem",
    "Weight",
    "InductionResult",
    "SINGULAR",
    "build_root_system",
    "pair",
    "weyl_dim",
    "to_dominant",
    "holo_induce_dim",
]

FAMILIES = ("A", "B", "C", "D", "G2", "F4", "E6", "E7", "E8")

_EXPECTED_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "G2": lambda n: 6,
    "F4": lambda n: 24,
    "E6": lambda n: 36,
    "E7": lambda n: 63,
    "E8": lambda n: 120,
}


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    positive_roots: tuple[tuple[int, ...], ...]
    # Coroot of each positive root in simple-coroot coordinates; pairing with a
    # weight in the fundamental basis is then a plain dot product.
    coroots: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def rho(self) -> "Weight":
        return Weight((1,) * self.rank, self)

    @property
    def zero(self) -> "Weight":
        return Weight((0,) * self.rank, self)

    def weight(self, coords: Sequence[int]) -> "Weight":
        return Weight(tuple(int(c) for c in coords), self)

    def simple_root(self, i: int) -> tuple[int, ...]:
        """Fundamental-weight coordinates of the i-th simple root (0-based)."""
        return tuple(self.cartan[r][i] for r in range(self.rank))


@dataclass(frozen=True)
class Weight:
    coords: tuple[int, ...]
    system: RootSystem = field(repr=False, compare=False)

    def __post_init__(self):
        if len(self.coords) != self.system.rank:
            raise ValueError(
                f"weight has {len(self.coords)} coordinates, "
                f"root system {self.system.family}{self.system.rank} needs {self.system.rank}"
            )

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)), self.system)

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)), self.system)

    def scale(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.coords), self.system)

    @property
    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)


class _Singular:
    """Marker returned by :func:`to_dominant` for weights on a Weyl wall."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "SINGULAR"

    def __bool__(self):
        return False


SINGULAR = _Singular()


@dataclass(frozen=True)
class InductionResult:
    kind: str  # "singular" or "regular"
    sign: int = 0
    dominant: Weight | None = None
    dimension: int = 0

    @property
    def is_singular(self) -> bool:
        return self.kind == "singular"

    @property
    def value(self) -> int:
        """Signed dimension of the pushforward; zero when singular."""
        return self.sign * self.dimension if self.kind == "regular" else 0


def _cartan(family: str, n: int) -> tuple[list[list[int]], list[int]]:
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        A[i][j] = aij
        A[j][i] = aji

    if family == "A":
        for i in range(n - 1):
            link(i, i + 1)
        d = [1] * n
    elif family == "B":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -1, -2)  # alpha_n short
        d = [2] * (n - 1) + [1]
    elif family == "C":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -2, -1)  # alpha_n long
        d = [1] * (n - 1) + [2]
    elif family == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
        d = [1] * n
    elif family == "G2":
        link(0, 1, -3, -1)  # alpha_1 short
        d = [1, 3]
    elif family == "F4":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
        d = [2, 2, 1, 1]
    else:  # E6, E7, E8 in Bourbaki labelling: 1-3-4-5-..., 2 hangs off 4
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
        d = [1] * n
    return A, d


def _positive_roots(A: list[list[int]]) -> list[tuple[int, ...]]:
    """Positive roots in simple-root coordinates, by root strings level by level."""
    n = len(A)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = set(simple)
    level = list(simple)
    while level:
        nxt = []
        for beta in level:
            for i in range(n):
                # <beta, alpha_i^vee> = sum_j n_j A[i][j]
                pairing = sum(beta[j] * A[i][j] for j in range(n))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        level = nxt
    return sorted(roots, key=lambda r: (sum(r), r))


def _coroot(beta: Sequence[int], A: list[list[int]], d: list[int]) -> tuple[int, ...]:
    n = len(A)
    # (beta, beta)/2 in units where (alpha_i, alpha_i)/2 = d_i
    half_norm = Fraction(sum(beta[i] * beta[j] * d[i] * A[i][j] for i in range(n) for j in range(n)), 2)
    out = []
    for j in range(n):
        c = Fraction(beta[j] * d[j]) / half_norm
        if c.denominator != 1:
            raise AssertionError(f"non-integral coroot coefficient for root {tuple(beta)}")
        out.append(int(c))
    return tuple(out)


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int | None = None) -> RootSystem:
    """Return the root system of the given Cartan type.

    ``family`` is one of A, B, C, D, G2, F4, E6, E7, E8.  Exceptional types
    carry their rank in the name, so ``rank`` may be omitted for them.
    """
    family = family.upper()
    if family not in FAMILIES:
        raise ValueError(f"unknown root system family {family!r}")
    fixed = {"G2": 2, "F4": 4, "E6": 6, "E7": 7, "E8": 8}
    if family in fixed:
        if rank is not None and rank != fixed[family]:
            raise ValueError(f"{family} has rank {fixed[family]}, got {rank}")
        rank = fixed[family]
    minimum = {"A": 1, "B": 2, "C": 2, "D": 3}
    if family in minimum and (rank is None or rank < minimum[family]):
        raise ValueError(f"{family}_n needs rank >= {minimum[family]}, got {rank}")

    A, d = _cartan(family, rank)
    roots = _positive_roots(A)
    if len(roots) != _EXPECTED_COUNTS[family](rank):
        raise AssertionError(f"generated {len(roots)} positive roots for {family}{rank}")
    coroots = tuple(_coroot(r, A, d) for r in roots)
    rs = RootSystem(
        family=family,
        rank=rank,
        cartan=tuple(tuple(row) for row in A),
        symmetrizer=tuple(d),
        positive_roots=tuple(roots),
        coroots=coroots,
    )
    if family == "G2":
        dims = (weyl_dim(rs, rs.weight((1, 0))), weyl_dim(rs, rs.weight((0, 1))))
        if dims != (7, 14):
            raise AssertionError(f"G2 fundamental weights give dimensions {dims}, expected (7, 14)")
    return rs


def pair(w: Weight, coroot: int) -> int:
    """Pairing of ``w`` with the positive coroot of index ``coroot``."""
    cor = w.system.coroots
    if not 0 <= coroot < len(cor):
        raise IndexError(f"coroot index {coroot} out of range 0..{len(cor) - 1}")
    return sum(a * b for a, b in zip(w.coords, cor[coroot]))


def _pairings(coords: Sequence[int], rs: RootSystem):
    return [sum(a * b for a, b in zip(coords, c)) for c in rs.coroots]


def weyl_dim(rs: RootSystem, lam: Weight | Sequence[int]) -> int:
    """Dimension of the irreducible representation with dominant highest weight ``lam``."""
    coords = lam.coords if isinstance(lam, Weight) else tuple(lam)
    if len(coords) != rs.rank:
        raise ValueError("weight rank does not match root system")
    if any(c < 0 for c in coords):
        raise ValueError(f"weight {coords} is not dominant")
    shifted = [c + 1 for c in coords]
    num = 1
    den = 1
    for cor in rs.coroots:
        num *= sum(a * b for a, b in zip(shifted, cor))
        den *= sum(cor)  # <rho, beta^vee>
    q = Fraction(num, den)
    if q.denominator != 1:
        raise AssertionError(f"Weyl dimension formula gave non-integer {q} for {coords}")
    return int(q)


def to_dominant(rs: RootSystem, omega: Weight | Sequence[int]):
    """Reflect ``omega`` into the dominant chamber.

    Returns ``(dominant_weight, sign)`` with ``sign = (-1)**(reflections used)``,
    or :data:`SINGULAR` when ``omega`` is orthogonal to some root.
    """
    coords = list(omega.coords if isinstance(omega, Weight) else omega)
    if len(coords) != rs.rank:
        raise ValueError("weight rank does not match root system")
    if any(p == 0 for p in _pairings(coords, rs)):
        return SINGULAR
    limit = 4 * len(rs.positive_roots) + 4
    steps = 0
    while True:
        i = next((j for j, c in enumerate(coords) if c < 0), None)
        if i is None:
            break
        steps += 1
        if steps > limit:
            raise RuntimeError("reflection loop did not terminate")
        c = coords[i]
        coords = [coords[r] - c * rs.cartan[r][i] for r in range(rs.rank)]
    return rs.weight(coords), (-1) ** steps


def holo_induce_dim(rs: RootSystem, mu: Weight | Sequence[int]) -> InductionResult:
    """Nonequivariant holomorphic induction of the weight ``mu``.

    The pushforward is zero when ``mu + rho`` is singular; otherwise it is
    ``(-1)**ind(mu + rho)`` times the irreducible representation with highest
    weight ``T(mu + rho) - rho``.
    """
    mu = mu if isinstance(mu, Weight) else rs.weight(mu)
    shifted = mu + rs.rho
    res = to_dominant(rs, shifted)
    if res is SINGULAR:
        return InductionResult("singular")
    dom, sign = res
    highest = dom - rs.rho
    return InductionResult("regular", sign, highest, weyl_dim(rs, highest))
