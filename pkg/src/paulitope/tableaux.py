"""Partitions, semistandard tableaux, and classical tableau counts.

Partitions are tuples of weakly decreasing nonnegative integers with trailing
zeros stripped.  A semistandard tableau is a tuple of row tuples, weakly
increasing along rows and strictly increasing down columns.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

Partition = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]


def normalize(parts: Iterable[int]) -> Partition:
    """Canonical partition: validated weakly decreasing, trailing zeros removed."""
    p = tuple(int(x) for x in parts)
    for i in range(len(p) - 1):
        if p[i] < p[i + 1]:
            raise ValueError(f"parts not weakly decreasing: {p}")
    if p and p[-1] < 0:
        raise ValueError(f"negative part in {p}")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def size(shape: Iterable[int]) -> int:
    """Number of cells."""
    return sum(normalize(shape))


def height(shape: Iterable[int]) -> int:
    """Number of nonzero rows."""
    return len(normalize(shape))


def transpose(shape: Iterable[int]) -> Partition:
    """Conjugate partition (reflect the diagram across the diagonal)."""
    p = normalize(shape)
    if not p:
        return ()
    return tuple(sum(1 for row in p if row > j) for j in range(p[0]))


def contains(outer: Iterable[int], inner: Iterable[int]) -> bool:
    """True when the diagram of ``inner`` fits inside the diagram of ``outer``."""
    a, b = normalize(outer), normalize(inner)
    if len(b) > len(a):
        return False
    return all(b[i] <= a[i] for i in range(len(b)))


def partitions_in_box(rows: int, cols: int, total: int | None = None) -> Iterator[Partition]:
    """All partitions with at most ``rows`` parts, each at most ``cols``.

    With ``total`` set, only partitions of that size are produced.
    """

    def rec(remaining_rows: int, cap: int, prefix: tuple[int, ...]) -> Iterator[Partition]:
        yield normalize(prefix)
        if remaining_rows == 0:
            return
        for part in range(cap, 0, -1):
            yield from rec(remaining_rows - 1, part, prefix + (part,))

    for p in rec(rows, cols, ()):
        if total is None or size(p) == total:
            yield p


def reading_word(tab: Tableau) -> tuple[int, ...]:
    """Row reading word: rows concatenated top to bottom, left to right."""
    return tuple(x for row in tab for x in row)


def content_vector(tab: Tableau, r: int) -> tuple[int, ...]:
    """Multiplicity of each entry 1..r in the tableau."""
    counts = [0] * r
    for row in tab:
        for x in row:
            counts[x - 1] += 1
    return tuple(counts)


def is_semistandard(tab: Tableau, shape: Iterable[int] | None = None) -> bool:
    """Check row-weak and column-strict conditions (and the shape, if given)."""
    if shape is not None and tuple(len(row) for row in tab) != normalize(shape):
        return False
    for row in tab:
        if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
            return False
    for i in range(1, len(tab)):
        if len(tab[i]) > len(tab[i - 1]):
            return False
        if any(tab[i][j] <= tab[i - 1][j] for j in range(len(tab[i]))):
            return False
    return True


def enumerate_ssyt(shape: Iterable[int], max_entry: int) -> list[Tableau]:
    """All semistandard tableaux of the given shape with entries in 1..max_entry.

    The result is sorted by row reading word; the list is empty when the shape
    has more rows than ``max_entry`` allows.
    """
    shape = normalize(shape)
    if max_entry < 1:
        raise ValueError("max_entry must be at least 1")
    if not shape:
        return [()]
    if len(shape) > max_entry:
        return []

    out: list[Tableau] = []
    nrows = len(shape)

    def fill_row(i: int, prev: tuple[int, ...], acc: tuple[tuple[int, ...], ...]) -> None:
        if i == nrows:
            out.append(acc)
            return
        length = shape[i]
        row = [0] * length

        def cell(j: int) -> None:
            if j == length:
                fill_row(i + 1, tuple(row), acc + (tuple(row),))
                return
            lo = row[j - 1] if j > 0 else 1
            if i > 0:
                lo = max(lo, prev[j] + 1)
            for val in range(lo, max_entry + 1):
                row[j] = val
                cell(j + 1)

        cell(0)

    fill_row(0, (), ())
    out.sort(key=reading_word)
    return out


def count_skew_standard(gamma: Iterable[int], tau: Iterable[int]) -> int:
    """Number of standard fillings of the skew diagram gamma/tau.

    Returns 0 when tau is not contained in gamma, and 1 for the empty skew
    shape.
    """
    g, t = normalize(gamma), normalize(tau)
    if not contains(g, t):
        return 0
    return _skew_standard(g, t)


@lru_cache(maxsize=None)
def _skew_standard(gamma: Partition, tau: Partition) -> int:
    if size(gamma) == size(tau):
        return 1
    total = 0
    for i in range(len(gamma)):
        below = gamma[i + 1] if i + 1 < len(gamma) else 0
        if gamma[i] > below and gamma[i] - 1 >= (tau[i] if i < len(tau) else 0):
            smaller = normalize(gamma[:i] + (gamma[i] - 1,) + gamma[i + 1 :])
            total += _skew_standard(smaller, tau)
    return total


def kostka(shape: Iterable[int], content: Iterable[int]) -> int:
    """Number of semistandard tableaux of the given shape and content."""
    shape = normalize(shape)
    content = tuple(int(c) for c in content)
    if any(c < 0 for c in content):
        return 0
    if sum(content) != size(shape):
        return 0
    return _kostka(shape, content)


@lru_cache(maxsize=None)
def _kostka(shape: Partition, content: tuple[int, ...]) -> int:
    while content and content[-1] == 0:
        content = content[:-1]
    if not content:
        return 1 if not shape else 0
    total = 0
    for mu in _horizontal_strips_inside(shape, content[-1]):
        total += _kostka(mu, content[:-1])
    return total


def _horizontal_strips_inside(shape: Partition, cells: int) -> Iterator[Partition]:
    """Partitions mu inside shape with shape/mu a horizontal strip of size cells."""

    def rec(i: int, prefix: tuple[int, ...], left: int) -> Iterator[Partition]:
        if i == len(shape):
            if left == 0:
                yield normalize(prefix)
            return
        below = shape[i + 1] if i + 1 < len(shape) else 0
        hi = shape[i]
        lo = max(below, hi - left)
        for part in range(hi, lo - 1, -1):
            if prefix and part > prefix[-1]:
                continue
            yield from rec(i + 1, prefix + (part,), left - (hi - part))

    yield from rec(0, (), cells)


def littlewood_richardson(mu: Iterable[int], pi: Iterable[int], nu: Iterable[int]) -> int:
    """Multiplicity of the nu component in the product of mu and pi characters.

    Counts column-strict fillings of nu/mu with content pi whose reverse
    reading word is a lattice word.
    """
    mu, pi, nu = normalize(mu), normalize(pi), normalize(nu)
    if size(mu) + size(pi) != size(nu):
        return 0
    if not contains(nu, mu):
        return 0
    inner = mu + (0,) * (len(nu) - len(mu))
    cells = [
        (i, j)
        for i in range(len(nu))
        for j in range(nu[i] - 1, inner[i] - 1, -1)
    ]
    values: dict[tuple[int, int], int] = {}
    counts = [0] * (len(pi) + 1)
    total = 0

    def place(pos: int) -> None:
        nonlocal total
        if pos == len(cells):
            total += 1
            return
        i, j = cells[pos]
        hi = len(pi)
        right = values.get((i, j + 1))
        if right is not None:
            hi = min(hi, right)
        above = values.get((i - 1, j))
        lo = (above + 1) if above is not None else 1
        for k in range(lo, hi + 1):
            if counts[k] >= pi[k - 1]:
                continue
            if k > 1 and counts[k] >= counts[k - 1]:
                continue
            counts[k] += 1
            values[(i, j)] = k
            place(pos + 1)
            counts[k] -= 1
            del values[(i, j)]

    place(0)
    return total


def weyl_dimension(shape: Iterable[int], r: int) -> int:
    """Dimension of the degree-r polynomial representation with highest weight shape."""
    shape = normalize(shape)
    if len(shape) > r:
        return 0
    num = Fraction(1)
    for i in range(len(shape)):
        for j in range(shape[i]):
            leg = sum(1 for k in range(i + 1, len(shape)) if shape[k] > j)
            num *= Fraction(r + j - i, shape[i] - j + leg)
    assert num.denominator == 1
    return int(num)


class FramedDiagram(NamedTuple):
    """A partition together with the rectangle (rows x cols) that frames it."""

    diagram: Partition
    rows: int
    cols: int

    def validate(self) -> "FramedDiagram":
        d = normalize(self.diagram)
        if len(d) > self.rows or (d and d[0] > self.cols):
            raise ValueError(f"{d} does not fit in a {self.rows}x{self.cols} frame")
        return FramedDiagram(d, self.rows, self.cols)


def shuffle_vertical_sequence(framed: FramedDiagram) -> tuple[int, ...]:
    """Index sequence of the vertical steps on the lattice path tracing the diagram.

    Walking the boundary of the diagram inside its p x q frame from top right
    to bottom left, step k is vertical exactly at position k + gamma_{p+1-k}.
    """
    framed = framed.validate()
    p, q = framed.rows, framed.cols
    padded = framed.diagram + (0,) * (p - len(framed.diagram))
    return tuple(k + padded[p - k] for k in range(1, p + 1))


def diagram_from_indices(indices: Iterable[int], rows: int, cols: int) -> FramedDiagram:
    """Inverse of shuffle_vertical_sequence; validates the index sequence."""
    idx = tuple(int(i) for i in indices)
    if len(idx) != rows:
        raise ValueError(f"expected {rows} indices, got {len(idx)}")
    if any(idx[k] >= idx[k + 1] for k in range(len(idx) - 1)):
        raise ValueError(f"indices not strictly increasing: {idx}")
    if idx and (idx[0] < 1 or idx[-1] > rows + cols):
        raise ValueError(f"indices out of range 1..{rows + cols}: {idx}")
    parts = tuple(idx[k - 1] - k for k in range(rows, 0, -1))
    return FramedDiagram(normalize(parts), rows, cols)


def complement_diagram(nu: Iterable[int], r: int, s: int) -> Partition:
    """Complement of nu inside the r x s rectangle, rotated by a half turn."""
    nu = normalize(nu)
    if len(nu) > r or (nu and nu[0] > s):
        raise ValueError(f"{nu} does not fit in a {r}x{s} rectangle")
    padded = nu + (0,) * (r - len(nu))
    return normalize(tuple(s - padded[r - 1 - i] for i in range(r)))
