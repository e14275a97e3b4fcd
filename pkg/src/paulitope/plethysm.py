"""Weight-multiset characters and plethysms with symmetric powers.

A character is stored as the full multiset of its weights, a dict from
exponent tuples of length r to multiplicities.  This keeps every operation
exact and makes extracting highest weights a lattice computation.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations as iter_permutations
from typing import Iterable, Mapping

from .errors import ResourceLimitError
from .tableaux import (
    Partition,
    content_vector,
    enumerate_ssyt,
    normalize,
    partitions_in_box,
    size,
    weyl_dimension,
)

INNER_POINT_LEVEL_CAP = 8
INNER_POINT_DEGREE_CAP = 24


class SymmetricCharacter:
    """Formal nonvirtual or virtual character on r levels, stored by weight."""

    __slots__ = ("r", "weights")

    def __init__(self, r: int, weights: Mapping[tuple[int, ...], int] | None = None):
        self.r = int(r)
        clean: dict[tuple[int, ...], int] = {}
        if weights:
            for wt, mult in weights.items():
                if len(wt) != self.r:
                    raise ValueError(f"weight {wt} has wrong arity for r={self.r}")
                if mult:
                    clean[tuple(wt)] = int(mult)
        self.weights = clean

    @staticmethod
    def unit(r: int) -> "SymmetricCharacter":
        return SymmetricCharacter(r, {(0,) * r: 1})

    def dimension(self) -> int:
        return sum(self.weights.values())

    def degree(self) -> int:
        return max((sum(wt) for wt in self.weights), default=0)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SymmetricCharacter)
            and self.r == other.r
            and self.weights == other.weights
        )

    def __add__(self, other: "SymmetricCharacter") -> "SymmetricCharacter":
        self._check(other)
        out = dict(self.weights)
        for wt, mult in other.weights.items():
            new = out.get(wt, 0) + mult
            if new:
                out[wt] = new
            else:
                del out[wt]
        return SymmetricCharacter(self.r, out)

    def __sub__(self, other: "SymmetricCharacter") -> "SymmetricCharacter":
        return self + other.scale(-1)

    def scale(self, c: int) -> "SymmetricCharacter":
        if not c:
            return SymmetricCharacter(self.r)
        return SymmetricCharacter(self.r, {wt: c * m for wt, m in self.weights.items()})

    def __mul__(self, other: "SymmetricCharacter") -> "SymmetricCharacter":
        self._check(other)
        out: dict[tuple[int, ...], int] = {}
        small, big = self.weights, other.weights
        if len(small) > len(big):
            small, big = big, small
        for w1, m1 in small.items():
            for w2, m2 in big.items():
                key = tuple(a + b for a, b in zip(w1, w2))
                new = out.get(key, 0) + m1 * m2
                if new:
                    out[key] = new
                else:
                    del out[key]
        return SymmetricCharacter(self.r, out)

    def _check(self, other: "SymmetricCharacter") -> None:
        if self.r != other.r:
            raise ValueError(f"level mismatch: {self.r} vs {other.r}")


def character(nu: Iterable[int], r: int) -> SymmetricCharacter:
    """Character of the irreducible shape-nu representation on r levels."""
    nu = normalize(nu)
    if len(nu) > r:
        raise ValueError(f"shape {nu} needs more than {r} levels")
    weights: dict[tuple[int, ...], int] = {}
    for tab in enumerate_ssyt(nu, r):
        wt = content_vector(tab, r)
        weights[wt] = weights.get(wt, 0) + 1
    return SymmetricCharacter(r, weights)


def power_substitute(f: SymmetricCharacter, k: int) -> SymmetricCharacter:
    """Replace every weight by k times itself (Adams operation on characters)."""
    if k < 1:
        raise ValueError("power substitution needs k >= 1")
    return SymmetricCharacter(
        f.r, {tuple(k * x for x in wt): m for wt, m in f.weights.items()}
    )


def plethysm_h_series(m_max: int, f: SymmetricCharacter) -> list[SymmetricCharacter]:
    """Characters of the symmetric powers Sym^0(f) .. Sym^max(f).

    Built by the Newton recurrence m * h_m = sum_k Adams_k(f) * h_{m-k}; the
    division by m is exact and asserted.
    """
    if m_max < 0:
        raise ValueError("negative power")
    series = [SymmetricCharacter.unit(f.r)]
    adams = [None] + [power_substitute(f, k) for k in range(1, m_max + 1)]
    for m in range(1, m_max + 1):
        acc = SymmetricCharacter(f.r)
        for k in range(1, m + 1):
            acc = acc + adams[k] * series[m - k]
        out = {}
        for wt, mult in acc.weights.items():
            q, rem = divmod(mult, m)
            assert rem == 0, "Newton recurrence must divide exactly"
            out[wt] = q
        series.append(SymmetricCharacter(f.r, out))
    return series


def plethysm_h(m: int, f: SymmetricCharacter) -> SymmetricCharacter:
    """Character of the m-th symmetric power of f."""
    return plethysm_h_series(m, f)[m]


def plethysm_schur(
    mu: Iterable[int],
    f: SymmetricCharacter,
    h_series: list[SymmetricCharacter] | None = None,
) -> SymmetricCharacter:
    """Character of the mu-shaped Schur functor applied to f.

    Uses the determinant of symmetric-power characters h_{mu_i - i + j}; a
    precomputed series can be passed to share work across shapes.
    """
    mu = normalize(mu)
    if not mu:
        return SymmetricCharacter.unit(f.r)
    n = len(mu)
    need = mu[0] + n - 1
    if h_series is None or len(h_series) <= need:
        h_series = plethysm_h_series(need, f)
    total = SymmetricCharacter(f.r)
    for sigma in iter_permutations(range(n)):
        indices = [mu[i] - i + sigma[i] for i in range(n)]
        if any(k < 0 for k in indices):
            continue
        inversions = sum(
            1 for i in range(n) for j in range(i + 1, n) if sigma[i] > sigma[j]
        )
        prod = SymmetricCharacter.unit(f.r)
        for k in indices:
            prod = prod * h_series[k]
        total = total + prod.scale((-1) ** inversions)
    return total


@lru_cache(maxsize=None)
def _signed_delta_orbit(r: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    delta = tuple(range(r - 1, -1, -1))
    out = []
    for sigma in iter_permutations(range(r)):
        inversions = sum(
            1 for i in range(r) for j in range(i + 1, r) if sigma[i] > sigma[j]
        )
        out.append(((-1) ** inversions, tuple(delta[s] for s in sigma)))
    return tuple(out)


def schur_decompose(f: SymmetricCharacter, validate: bool = True) -> dict[Partition, int]:
    """Highest weights and multiplicities of a character.

    Each dominant weight is tested with the Weyl alternation sum over the
    staircase orbit, which only needs dictionary lookups into the weight
    multiset.  Raises ValueError if any multiplicity comes out negative or the
    dimension count does not add up, since then f was not a character.
    """
    r = f.r
    orbit = _signed_delta_orbit(r)
    delta = tuple(range(r - 1, -1, -1))
    result: dict[Partition, int] = {}
    dominant = [wt for wt in f.weights if all(wt[i] >= wt[i + 1] for i in range(r - 1))]
    for lam in dominant:
        shifted = tuple(lam[i] + delta[i] for i in range(r))
        mult = 0
        for sign, perm_delta in orbit:
            key = tuple(shifted[i] - perm_delta[i] for i in range(r))
            if any(x < 0 for x in key):
                continue
            m = f.weights.get(key)
            if m:
                mult += sign * m
        if mult < 0:
            raise ValueError(f"negative multiplicity {mult} at {lam}: not a character")
        if mult:
            result[normalize(lam)] = mult
    if validate:
        total = sum(m * weyl_dimension(lam, r) for lam, m in result.items())
        if total != f.dimension():
            raise ValueError("component dimensions do not sum to the character dimension")
    return result


def schur_decompose_peel(f: SymmetricCharacter) -> dict[Partition, int]:
    """Reference decomposition by repeatedly peeling the top weight.

    Quadratic in the number of components and meant for small inputs and
    cross-checks; the alternation-sum routine is the production path.
    """
    remaining = dict(f.weights)
    result: dict[Partition, int] = {}
    while remaining:
        top = max(remaining)
        mult = remaining[top]
        if mult < 0 or any(top[i] < top[i + 1] for i in range(f.r - 1)):
            raise ValueError("not a character")
        lam = normalize(top)
        result[lam] = mult
        for wt, m in character(lam, f.r).weights.items():
            new = remaining.get(wt, 0) - mult * m
            if new:
                remaining[wt] = new
            else:
                del remaining[wt]
    return result


def inner_points(
    nu: Iterable[int],
    r: int,
    rank_bound: int,
    m_cap: int,
    level_cap: int = INNER_POINT_LEVEL_CAP,
    degree_cap: int = INNER_POINT_DEGREE_CAP,
) -> list[tuple[tuple[Fraction, ...], tuple[Fraction, ...]]]:
    """Normalized highest-weight points of all Schur functors up to degree m_cap.

    For every shape mu of size at most m_cap with at most rank_bound rows, the
    plethysm of f = character(nu, r) is decomposed; each component lam at
    degree m yields the point (lam / m, mu / m).  The first coordinate sums to
    the particle number, the second to one.
    """
    nu = normalize(nu)
    if r > level_cap:
        raise ResourceLimitError(f"r={r} exceeds the level cap {level_cap}")
    if size(nu) * m_cap > degree_cap:
        raise ResourceLimitError(
            f"|nu| * M = {size(nu) * m_cap} exceeds the degree cap {degree_cap}"
        )
    if rank_bound < 1:
        raise ValueError("rank bound must be at least 1")
    f = character(nu, r)
    h_series = plethysm_h_series(m_cap, f)
    points: set[tuple[tuple[Fraction, ...], tuple[Fraction, ...]]] = set()
    for m in range(1, m_cap + 1):
        for mu in partitions_in_box(rank_bound, m, total=m):
            if not mu:
                continue
            char_mu = (
                h_series[m] if len(mu) == 1 else plethysm_schur(mu, f, h_series)
            )
            if not char_mu.weights:
                continue
            mu_padded = mu + (0,) * (rank_bound - len(mu))
            mu_point = tuple(Fraction(x, m) for x in mu_padded)
            for lam in schur_decompose(char_mu):
                lam_padded = lam + (0,) * (r - len(lam))
                lam_point = tuple(Fraction(x, m) for x in lam_padded)
                points.add((lam_point, mu_point))
    return sorted(points)
