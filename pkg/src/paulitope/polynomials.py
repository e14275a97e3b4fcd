"""Sparse integer polynomials, divided differences, and Schubert calculus.

Polynomials are stored as dicts mapping exponent tuples to nonzero integer
coefficients.  Variables are numbered 1..nvars and written x1, x2, ...
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .errors import ResourceLimitError
from .permutations import Permutation, permutations_of_length
from .tableaux import enumerate_ssyt, normalize

SCHUBERT_AMBIENT_CAP = 12


class SparsePoly:
    """Multivariate polynomial with integer coefficients, sparse storage."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], int] | None = None):
        self.nvars = int(nvars)
        clean: dict[tuple[int, ...], int] = {}
        if terms:
            for exps, coeff in terms.items():
                if len(exps) != self.nvars:
                    raise ValueError(f"exponent tuple {exps} has wrong arity")
                if any(e < 0 for e in exps):
                    raise ValueError(f"negative exponent in {exps}")
                if coeff:
                    clean[tuple(exps)] = int(coeff)
        self.terms = clean

    @staticmethod
    def zero(nvars: int) -> "SparsePoly":
        return SparsePoly(nvars)

    @staticmethod
    def constant(nvars: int, c: int) -> "SparsePoly":
        return SparsePoly(nvars, {(0,) * nvars: c})

    @staticmethod
    def variable(i: int, nvars: int) -> "SparsePoly":
        if not 1 <= i <= nvars:
            raise ValueError(f"variable x{i} out of range 1..{nvars}")
        exps = tuple(1 if k == i - 1 else 0 for k in range(nvars))
        return SparsePoly(nvars, {exps: 1})

    @staticmethod
    def linear_form(coeffs: Sequence[int]) -> "SparsePoly":
        n = len(coeffs)
        terms = {}
        for k, c in enumerate(coeffs):
            if c:
                exps = tuple(1 if j == k else 0 for j in range(n))
                terms[exps] = int(c)
        return SparsePoly(n, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_coefficient(self) -> int:
        return self.terms.get((0,) * self.nvars, 0)

    def degree(self) -> int:
        """Total degree; the zero polynomial has degree -1 by convention."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def embed(self, nvars: int) -> "SparsePoly":
        """Reinterpret in a larger variable ring."""
        if nvars < self.nvars:
            raise ValueError(f"cannot shrink from {self.nvars} to {nvars} variables")
        if nvars == self.nvars:
            return self
        pad = (0,) * (nvars - self.nvars)
        return SparsePoly(nvars, {e + pad: c for e, c in self.terms.items()})

    def _check_arity(self, other: "SparsePoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"arity mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        self._check_arity(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            new = out.get(e, 0) + c
            if new:
                out[e] = new
            else:
                out.pop(e, None)
        return SparsePoly(self.nvars, out)

    def __neg__(self) -> "SparsePoly":
        return SparsePoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (-other)

    def scale(self, c: int) -> "SparsePoly":
        if not c:
            return SparsePoly.zero(self.nvars)
        return SparsePoly(self.nvars, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other: "SparsePoly") -> "SparsePoly":
        self._check_arity(other)
        out: dict[tuple[int, ...], int] = {}
        small, big = (self.terms, other.terms)
        if len(small) > len(big):
            small, big = big, small
        for e1, c1 in small.items():
            for e2, c2 in big.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                new = out.get(key, 0) + c1 * c2
                if new:
                    out[key] = new
                else:
                    del out[key]
        return SparsePoly(self.nvars, out)

    def power(self, k: int) -> "SparsePoly":
        if k < 0:
            raise ValueError("negative power")
        result = SparsePoly.constant(self.nvars, 1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SparsePoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"

        def fmt(e, c):
            vars_part = " ".join(
                f"x{i + 1}" + (f"^{p}" if p > 1 else "")
                for i, p in enumerate(e)
                if p
            )
            if not vars_part:
                return str(c)
            if c == 1:
                return vars_part
            if c == -1:
                return f"-{vars_part}"
            return f"{c} {vars_part}"

        items = sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-x for x in t[0])))
        return " + ".join(fmt(e, c) for e, c in items).replace("+ -", "- ")

    def apply_transposition(self, i: int, j: int) -> "SparsePoly":
        """Swap the variables x_i and x_j."""
        a, b = i - 1, j - 1
        out = {}
        for e, c in self.terms.items():
            le = list(e)
            le[a], le[b] = le[b], le[a]
            out[tuple(le)] = c
        return SparsePoly(self.nvars, out)

    def substitute_linear(self, forms: Sequence[Sequence[int]], nvars_out: int) -> "SparsePoly":
        """Substitute each variable by a linear form over a new variable set.

        ``forms[k]`` is the coefficient vector of the form replacing x_{k+1};
        forms must be supplied for every variable that actually occurs.
        """
        form_polys: list[SparsePoly | None] = []
        for vec in forms:
            if len(vec) != nvars_out:
                raise ValueError("linear form has wrong arity")
            form_polys.append(SparsePoly.linear_form(vec))
        powers: dict[tuple[int, int], SparsePoly] = {}

        def form_power(k: int, e: int) -> SparsePoly:
            key = (k, e)
            if key not in powers:
                if e == 1:
                    powers[key] = form_polys[k]
                else:
                    powers[key] = form_power(k, e - 1) * form_polys[k]
            return powers[key]

        out = SparsePoly.zero(nvars_out)
        for exps, coeff in self.terms.items():
            prod = SparsePoly.constant(nvars_out, coeff)
            for k, e in enumerate(exps):
                if e:
                    if k >= len(form_polys):
                        raise ValueError(f"no form supplied for variable x{k + 1}")
                    prod = prod * form_power(k, e)
            out = out + prod
        return out


def divided_difference(i: int, f: SparsePoly) -> SparsePoly:
    """Apply the i-th divided difference (f - swap_i f) / (x_i - x_{i+1}).

    Works monomial by monomial, so the division is exact by construction.
    """
    if not 1 <= i <= f.nvars - 1:
        raise ValueError(f"divided difference index {i} needs variables x{i}, x{i + 1}")
    out: dict[tuple[int, ...], int] = {}
    a_idx, b_idx = i - 1, i
    for exps, coeff in f.terms.items():
        a, b = exps[a_idx], exps[b_idx]
        if a == b:
            continue
        sign = 1
        lo, hi = b, a
        if a < b:
            sign = -1
            lo, hi = a, b
        base = list(exps)
        for t in range(lo, hi):
            base[a_idx] = t
            base[b_idx] = a + b - 1 - t
            key = tuple(base)
            new = out.get(key, 0) + sign * coeff
            if new:
                out[key] = new
            else:
                del out[key]
    return SparsePoly(f.nvars, out)


def divided_difference_word(w: Permutation | Iterable[int], f: SparsePoly) -> SparsePoly:
    """Apply the divided difference operator of a permutation or explicit word.

    For a word (i1, ..., il) the operator is the composition of the single
    divided differences with the rightmost letter acting first.
    """
    word = w.reduced_word() if isinstance(w, Permutation) else tuple(w)
    for i in reversed(word):
        f = divided_difference(i, f)
    return f


def schubert_polynomial(w: Permutation, n: int | None = None) -> SparsePoly:
    """Schubert polynomial of w, computed from the staircase monomial.

    The ambient size n defaults to the largest point w moves; it is capped to
    keep the staircase workload bounded.
    """
    if n is None:
        n = max(w.n, 1)
    if n < w.n:
        raise ValueError(f"w moves {w.n} points, ambient {n} too small")
    if n > SCHUBERT_AMBIENT_CAP:
        raise ResourceLimitError(
            f"Schubert ambient {n} exceeds cap {SCHUBERT_AMBIENT_CAP}"
        )
    staircase = SparsePoly(n, {tuple(n - k for k in range(1, n + 1)): 1})
    u = w.inverse() * Permutation.longest(n)
    return divided_difference_word(u, staircase)


def schur_polynomial(gamma: Iterable[int], p: int) -> SparsePoly:
    """Schur polynomial of the shape gamma in the variables x1..xp.

    Computed as the generating function of semistandard tableaux.
    """
    gamma = normalize(gamma)
    if p < 1:
        raise ValueError("need at least one variable")
    out: dict[tuple[int, ...], int] = {}
    for tab in enumerate_ssyt(gamma, p):
        counts = [0] * p
        for row in tab:
            for x in row:
                counts[x - 1] += 1
        key = tuple(counts)
        out[key] = out.get(key, 0) + 1
    return SparsePoly(p, out)


def grassmannian_schubert(w: Permutation) -> SparsePoly | None:
    """Schur form of the Schubert polynomial when w has at most one descent.

    Returns None for permutations with two or more descents.  With the single
    descent at p, the shape is read off as gamma_{p+1-k} = w(k) - k.
    """
    descents = w.descents()
    if not descents:
        return SparsePoly.constant(1, 1)
    if len(descents) > 1:
        return None
    p = descents[0]
    gamma = tuple(w(k) - k for k in range(p, 0, -1))
    return schur_polynomial(gamma, p)


def schubert_expand(f: SparsePoly, d: int | None = None) -> dict[Permutation, int]:
    """Expand a homogeneous polynomial in the Schubert basis.

    The candidate permutations run over those of length d inside the symmetric
    group on nvars + d points; the coefficient of S_w is the constant term of
    the w-th divided difference of f.
    """
    if not f.is_homogeneous():
        raise ValueError("can only expand homogeneous polynomials")
    if f.is_zero():
        return {}
    if d is None:
        d = f.degree()
    if d != f.degree():
        raise ValueError(f"degree mismatch: polynomial has degree {f.degree()}")
    n = f.nvars + d
    if n > SCHUBERT_AMBIENT_CAP:
        raise ResourceLimitError(f"expansion ambient {n} exceeds cap {SCHUBERT_AMBIENT_CAP}")
    g = f.embed(n)
    out: dict[Permutation, int] = {}
    for w in permutations_of_length(n, d):
        c = divided_difference_word(w, g).constant_coefficient()
        if c:
            out[w] = c
    return out


def monk_multiply(alpha: Sequence[int], v: Permutation) -> dict[Permutation, int]:
    """Expand the product of a linear form with a Schubert polynomial.

    For the form a1 x1 + a2 x2 + ... the product of it with S_v is the sum of
    (a_i - a_j) S_{v t_ij} over transpositions t_ij, i < j, that raise the
    length of v by exactly one.
    """
    alpha = tuple(int(a) for a in alpha)
    m = max(v.n, len(alpha)) + 1
    out: dict[Permutation, int] = {}
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            ai = alpha[i - 1] if i <= len(alpha) else 0
            aj = alpha[j - 1] if j <= len(alpha) else 0
            coeff = ai - aj
            if not coeff:
                continue
            u = v * Permutation.transposition(i, j)
            if u.length() == v.length() + 1:
                new = out.get(u, 0) + coeff
                if new:
                    out[u] = new
                else:
                    del out[u]
    return out
