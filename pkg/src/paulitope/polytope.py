"""Exact convex geometry over the rationals and the moment-polytope loop.

The double description core works on integer vectors with bitmask incidence
sets, so every hull, vertex, and facet computation is exact.  The pipeline
alternates between hulls of representation-theoretic inner points and outer
polytopes cut out by the inequalities those hulls suggest; when the two
coincide the polytope is certified.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .coefficients import coefficient, inequality_to_triple
from .errors import ResourceLimitError, UnmatchedInequalityError
from .plethysm import INNER_POINT_DEGREE_CAP, INNER_POINT_LEVEL_CAP, inner_points
from .tableaux import normalize, size

RAY_CAP = 20000

IntVec = tuple[int, ...]


def _scale_to_int(row: Sequence) -> IntVec:
    """Clear denominators and divide by the content; zero rows stay zero."""
    fracs = [Fraction(x) for x in row]
    den = 1
    for x in fracs:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fracs]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints)


def _primitive(vec: Iterable[int]) -> IntVec:
    vec = tuple(vec)
    g = 0
    for v in vec:
        g = gcd(g, abs(v))
    if g > 1:
        vec = tuple(v // g for v in vec)
    return vec


def _dot(a: IntVec, v: IntVec) -> int:
    return sum(x * y for x, y in zip(a, v))


def _echelon(vectors: Iterable[IntVec]) -> list[IntVec]:
    """Reduced integer basis, sorted by pivot position, pivots positive."""
    basis: list[IntVec] = []
    for vec in vectors:
        vec = _reduce_mod(vec, basis)
        if any(vec):
            pivot = next(i for i, x in enumerate(vec) if x)
            if vec[pivot] < 0:
                vec = tuple(-x for x in vec)
            basis.append(vec)
            basis.sort(key=lambda b: next(i for i, x in enumerate(b) if x))
            reduced = []
            for b in basis:
                others = [c for c in basis if c is not b]
                reduced.append(_reduce_mod_keep_sign(b, others))
            basis = reduced
    return basis


def _reduce_mod(vec: IntVec, basis: Sequence[IntVec]) -> IntVec:
    """Zero out the pivot coordinates of vec; only positive rescaling is used."""
    vec = tuple(vec)
    for b in basis:
        pivot = next(i for i, x in enumerate(b) if x)
        if vec[pivot]:
            scale = abs(b[pivot])
            factor = vec[pivot] if b[pivot] > 0 else -vec[pivot]
            vec = tuple(scale * x - factor * y for x, y in zip(vec, b))
    return _primitive(vec)


def _reduce_mod_keep_sign(vec: IntVec, basis: Sequence[IntVec]) -> IntVec:
    reduced = _reduce_mod(vec, basis)
    pivot = next(i for i, x in enumerate(reduced) if x)
    if reduced[pivot] < 0:
        reduced = tuple(-x for x in reduced)
    return reduced


def cone_dual(
    equations: Sequence[Sequence],
    inequalities: Sequence[Sequence],
    dim: int,
    ray_cap: int = RAY_CAP,
) -> tuple[list[IntVec], list[IntVec]]:
    """Extreme rays and lineality basis of {x : e.x = 0 for all e, a.x >= 0}.

    Equations are eliminated first by pivoting inside the lineality space;
    inequalities are then inserted in sorted order with the standard double
    description step, using bitmasks over inequality indices for the
    adjacency test.
    """
    eq_rows = [r for r in (_scale_to_int(e) for e in equations) if any(r)]
    ineq_rows = sorted({r for r in (_scale_to_int(a) for a in inequalities) if any(r)})
    lineality: list[IntVec] = [
        tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)
    ]
    rays: list[tuple[IntVec, int]] = []

    def pivot(a: IntVec, l0: IntVec, d0: int, new_bit: int | None, prior_mask: int):
        nonlocal lineality, rays
        new_lin = []
        for l in lineality:
            if l is l0:
                continue
            d = _dot(a, l)
            if d:
                l = _primitive(tuple(d0 * x - d * y for x, y in zip(l, l0)))
            new_lin.append(l)
        lineality = new_lin
        new_rays = []
        for vec, zs in rays:
            d = _dot(a, vec)
            if d:
                comb = tuple(d0 * x - d * y for x, y in zip(vec, l0))
                if d0 < 0:
                    comb = tuple(-x for x in comb)
                vec = _primitive(comb)
            if new_bit is not None:
                zs |= new_bit
            new_rays.append((vec, zs))
        rays = new_rays
        if new_bit is not None:
            r0 = l0 if d0 > 0 else tuple(-x for x in l0)
            rays.append((_primitive(r0), prior_mask))

    def split(a: IntVec, new_bit: int | None):
        nonlocal rays
        pos, zero, neg = [], [], []
        for vec, zs in rays:
            d = _dot(a, vec)
            if d > 0:
                pos.append((vec, zs, d))
            elif d < 0:
                neg.append((vec, zs, d))
            else:
                zero.append((vec, zs | new_bit if new_bit is not None else zs))
        combos = []
        for pv, pz, pd in pos:
            for nv, nz, nd in neg:
                common = pz & nz
                blocked = False
                for vec, zs in rays:
                    if vec is pv or vec is nv:
                        continue
                    if common & zs == common:
                        blocked = True
                        break
                if blocked:
                    continue
                comb = _primitive(tuple(pd * x - nd * y for x, y in zip(nv, pv)))
                combos.append((comb, common | new_bit if new_bit is not None else common))
        if new_bit is None:
            rays = zero + combos
        else:
            rays = [(v, z) for v, z, _ in pos] + zero + combos
        if len(rays) > ray_cap:
            raise ResourceLimitError(f"ray count {len(rays)} exceeds cap {ray_cap}")

    for a in eq_rows:
        l0 = next((l for l in lineality if _dot(a, l)), None)
        if l0 is not None:
            pivot(a, l0, _dot(a, l0), None, 0)
        else:
            split(a, None)

    nbits = 0
    for a in ineq_rows:
        bit = 1 << nbits
        prior = bit - 1
        nbits += 1
        l0 = next((l for l in lineality if _dot(a, l)), None)
        if l0 is not None:
            pivot(a, l0, _dot(a, l0), bit, prior)
        else:
            split(a, bit)

    basis = _echelon(lineality)
    seen = set()
    out_rays = []
    for vec, _ in rays:
        red = _reduce_mod(vec, basis)
        if any(red) and red not in seen:
            seen.add(red)
            out_rays.append(red)
    return sorted(out_rays), basis


@dataclass(frozen=True)
class Polytope:
    """H and V description of a bounded rational polytope."""

    dim: int
    equations: tuple[tuple[IntVec, int], ...]
    facets: tuple[tuple[IntVec, int], ...]
    vertices: tuple[tuple[Fraction, ...], ...]

    def contains(self, point: Sequence) -> bool:
        p = tuple(Fraction(x) for x in point)
        if len(p) != self.dim:
            raise ValueError(f"point has arity {len(p)}, polytope has {self.dim}")
        for a, b in self.equations:
            if sum(c * x for c, x in zip(a, p)) != b:
                return False
        for a, b in self.facets:
            if sum(c * x for c, x in zip(a, p)) > b:
                return False
        return True


def _vertices_from_h(
    dim: int,
    equations: Sequence[tuple[Sequence[int], int]],
    inequalities: Sequence[tuple[Sequence[int], int]],
) -> tuple[tuple[Fraction, ...], ...]:
    """Vertices of {x : eq, ineq} via the homogenization cone; errors if unbounded."""
    eq_rows = [(-b,) + tuple(a) for a, b in equations]
    ineq_rows = [(b,) + tuple(-x for x in a) for a, b in inequalities]
    ineq_rows.append((1,) + (0,) * dim)
    rays, lin = cone_dual(eq_rows, ineq_rows, dim + 1)
    if lin:
        raise ValueError("system is unbounded (contains a line)")
    vertices = []
    for ray in rays:
        if ray[0] == 0:
            raise ValueError("system is unbounded (recession direction)")
        vertices.append(tuple(Fraction(x, ray[0]) for x in ray[1:]))
    return tuple(sorted(set(vertices)))


def polytope_from_h(
    dim: int,
    equations: Sequence[tuple[Sequence[int], int]],
    inequalities: Sequence[tuple[Sequence[int], int]],
) -> Polytope:
    """Bounded polytope from an explicit H description (kept as given)."""
    eqs = tuple((tuple(a), int(b)) for a, b in equations)
    ineqs = tuple((tuple(a), int(b)) for a, b in inequalities)
    return Polytope(dim, eqs, ineqs, _vertices_from_h(dim, eqs, ineqs))


def hull(points: Sequence[Sequence]) -> Polytope:
    """Convex hull with exact facets, equations, and vertices.

    Works in the dual: each point p contributes the constraint c0 + c.p >= 0
    on affine functionals (c0, c); lineality directions of that cone are the
    equations of the hull and extreme rays are its facets.
    """
    pts = [tuple(Fraction(x) for x in p) for p in points]
    if not pts:
        raise ValueError("need at least one point")
    dim = len(pts[0])
    if any(len(p) != dim for p in pts):
        raise ValueError("points have mixed arity")
    rows = [(Fraction(1),) + p for p in set(pts)]
    rays, lin = cone_dual([], rows, dim + 1)

    equations = []
    for l in lin:
        coeffs, c0 = l[1:], l[0]
        if not any(coeffs):
            raise AssertionError("hull produced a contradictory equation")
        a, b = coeffs, -c0
        if next(x for x in a if x) < 0:
            a, b = tuple(-x for x in a), -b
        equations.append((a, b))

    facets = []
    for ray in rays:
        coeffs, c0 = ray[1:], ray[0]
        if not any(coeffs):
            continue
        facets.append((tuple(-x for x in coeffs), c0))
    eqs = tuple(sorted(set(equations)))
    fac = tuple(sorted(set(facets)))
    vertices = _vertices_from_h(dim, eqs, fac)
    return Polytope(dim, eqs, fac, vertices)


def polytopes_equal(p: Polytope, q: Polytope) -> bool:
    """Set equality via mutual vertex containment."""
    if p.dim != q.dim:
        return False
    return all(q.contains(v) for v in p.vertices) and all(
        p.contains(v) for v in q.vertices
    )


def canonical_inequality(
    coeffs: Sequence,
    bound,
    r: int,
    n_particles: int,
    rank_bound: int = 1,
) -> tuple[tuple[int, ...], tuple[int, ...], int]:
    """Normal form of a linear inequality modulo the trace identities.

    The level part is shifted so its minimum is zero (using the fixed level
    trace) and likewise for the rank part (whose trace is one); the result is
    scaled to coprime integers.
    """
    vec = [Fraction(x) for x in coeffs]
    expected = r + (rank_bound if rank_bound > 1 else 0)
    if len(vec) != expected:
        raise ValueError(f"expected {expected} coefficients, got {len(vec)}")
    b = Fraction(bound)
    gl = vec[:r]
    gm = vec[r:]
    tshift = min(gl)
    gl = [x - tshift for x in gl]
    b -= tshift * n_particles
    if gm:
        mshift = min(gm)
        gm = [x - mshift for x in gm]
        b -= mshift
    scaled = _scale_to_int(gl + gm + [b])
    return scaled[:r], scaled[r:-1], scaled[-1]


def _wall_forms(r: int, n_particles: int, rank_bound: int) -> set:
    """Canonical forms of the chamber and positivity constraints."""
    walls = []
    d = r + (rank_bound if rank_bound > 1 else 0)
    for i in range(r - 1):
        vec = [0] * d
        vec[i], vec[i + 1] = -1, 1
        walls.append((vec, 0))
    vec = [0] * d
    vec[r - 1] = -1
    walls.append((vec, 0))
    if rank_bound > 1:
        for i in range(rank_bound - 1):
            vec = [0] * d
            vec[r + i], vec[r + i + 1] = -1, 1
            walls.append((vec, 0))
        vec = [0] * d
        vec[r + rank_bound - 1] = -1
        walls.append((vec, 0))
    return {
        canonical_inequality(v, b, r, n_particles, rank_bound) for v, b in walls
    }


def _ambient_system(r: int, n_particles: int, rank_bound: int):
    d = r + (rank_bound if rank_bound > 1 else 0)
    equations = [(tuple([1] * r + [0] * (d - r)), n_particles)]
    if rank_bound > 1:
        equations.append((tuple([0] * r + [1] * rank_bound), 1))
    inequalities = []
    for i in range(r - 1):
        vec = [0] * d
        vec[i], vec[i + 1] = -1, 1
        inequalities.append((tuple(vec), 0))
    vec = [0] * d
    vec[r - 1] = -1
    inequalities.append((tuple(vec), 0))
    if rank_bound > 1:
        for i in range(rank_bound - 1):
            vec = [0] * d
            vec[r + i], vec[r + i + 1] = -1, 1
            inequalities.append((tuple(vec), 0))
        vec = [0] * d
        vec[r + rank_bound - 1] = -1
        inequalities.append((tuple(vec), 0))
    return equations, inequalities


def facet_match(poly: Polytope, nu, r: int, rank_bound: int = 1) -> dict:
    """Try to certify every nontrivial face constraint of a hull.

    Facets are processed with their outward orientation; every non-ambient
    equation is tried in both orientations, since each side must be a theorem
    for the equation to persist in the limit.  A constraint is matched when
    its triple exists and has a nonzero coefficient.
    """
    nu = normalize(nu)
    n_particles = size(nu)
    walls = _wall_forms(r, n_particles, rank_bound)
    candidates = [(a, b, False) for a, b in poly.facets]
    for a, b in poly.equations:
        candidates.append((a, b, True))
        candidates.append((tuple(-x for x in a), -b, True))
    matched, unmatched = [], []
    ambient = 0
    for a, b, from_eq in candidates:
        gl, gm, bb = canonical_inequality(a, b, r, n_particles, rank_bound)
        if not any(gl) and not any(gm):
            ambient += 1
            continue
        if (gl, gm, bb) in walls:
            ambient += 1
            continue
        entry = {
            "lambda_coeffs": gl,
            "mu_coeffs": gm,
            "bound": bb,
            "from_equation": from_eq,
        }
        try:
            triple = inequality_to_triple(
                gl, bb, nu, r, mu_coeffs=gm if rank_bound > 1 else None
            )
            c = coefficient(triple.a, nu, r, triple.v, triple.w)
        except (UnmatchedInequalityError, ValueError) as exc:
            entry["reason"] = str(exc)
            unmatched.append(entry)
            continue
        entry.update(
            {
                "a": triple.a,
                "v": triple.v,
                "w": triple.w,
                "c": c,
            }
        )
        if c:
            matched.append(entry)
        else:
            entry["reason"] = "vanishing coefficient"
            unmatched.append(entry)
    return {"matched": matched, "unmatched": unmatched, "ambient": ambient}


def pipeline(
    nu,
    r: int,
    rank_bound: int,
    m_schedule: Sequence[int],
    level_cap: int = INNER_POINT_LEVEL_CAP,
    degree_cap: int = INNER_POINT_DEGREE_CAP,
) -> dict:
    """Inner-outer moment polytope computation with certificates.

    For each cutoff M in the schedule, the hull of the normalized component
    points is computed, its faces are matched against test-spectrum triples,
    and the outer polytope cut by the matched inequalities (inside the
    ambient chamber) is intersected with the chamber.  The run stops at the
    first M where inner and outer polytopes agree; the report carries the full
    history either way.
    """
    nu = normalize(nu)
    n_particles = size(nu)
    mixed = rank_bound > 1
    d = r + (rank_bound if mixed else 0)
    ambient_eqs, ambient_ineqs = _ambient_system(r, n_particles, rank_bound)
    history = []
    converged_at = None
    inner = None
    report = None
    for m_cap in m_schedule:
        points = inner_points(nu, r, rank_bound, m_cap, level_cap, degree_cap)
        coords = sorted(
            {lam + mu if mixed else lam for lam, mu in points}
        )
        inner = hull(coords)
        report = facet_match(inner, nu, r, rank_bound)
        extra = [
            (tuple(e["lambda_coeffs"]) + tuple(e["mu_coeffs"]), e["bound"])
            for e in report["matched"]
        ]
        outer = polytope_from_h(d, ambient_eqs, ambient_ineqs + extra)
        converged = polytopes_equal(inner, outer)
        history.append(
            {
                "M": m_cap,
                "points": len(coords),
                "vertices": len(inner.vertices),
                "facets": len(inner.facets),
                "equations": len(inner.equations),
                "matched": len(report["matched"]),
                "unmatched": len(report["unmatched"]),
                "converged": converged,
            }
        )
        if converged:
            converged_at = m_cap
            break
    return {
        "nu": list(nu),
        "r": r,
        "rank_bound": rank_bound,
        "converged_at": converged_at,
        "history": history,
        "polytope": inner,
        "match": report,
    }
