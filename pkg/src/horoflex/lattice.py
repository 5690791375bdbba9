"""Exact integer lattices and rational polyhedral cones.

Everything in this module is computed over arbitrary-precision integers and
``fractions.Fraction``; no floating point is used anywhere.  Scale target is
small ambient rank (interactive use), not bulk polyhedral computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import gcd
from typing import Iterable, Optional, Sequence

Vec = tuple[int, ...]


class DimensionMismatchError(ValueError):
    """Vectors of different ambient ranks were mixed in one computation."""


class NonPointedError(ValueError):
    """Raised by operations that are only defined for pointed cones."""


# ---------------------------------------------------------------------------
# vector helpers


def as_vector(coords: Iterable[int], rank: Optional[int] = None) -> Vec:
    """Validate and freeze an integer vector.

    Rejects floats and other inexact types; booleans are rejected as well so
    that weight data cannot silently degrade to flags.
    """
    vec = tuple(coords)
    for c in vec:
        if not isinstance(c, int) or isinstance(c, bool):
            raise TypeError(f"lattice coordinates must be exact integers, got {c!r}")
    if rank is not None and len(vec) != rank:
        raise DimensionMismatchError(
            f"expected a vector of rank {rank}, got rank {len(vec)}"
        )
    return vec


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    if len(u) != len(v):
        raise DimensionMismatchError(f"rank mismatch: {len(u)} vs {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def vadd(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def vneg(u: Vec) -> Vec:
    return tuple(-a for a in u)


def vscale(c: int, u: Vec) -> Vec:
    return tuple(c * a for a in u)


def is_zero_vec(u: Sequence[int]) -> bool:
    return all(a == 0 for a in u)


def primitive(u: Sequence[int]) -> Vec:
    """Divide an integer vector by the gcd of its entries (zero stays zero)."""
    g = 0
    for a in u:
        g = gcd(g, a)
    if g <= 1:
        return tuple(u)
    return tuple(a // g for a in u)


def fraction_primitive(u: Sequence[Fraction]) -> Vec:
    """Scale a rational vector to a primitive integer vector, keeping direction."""
    lcm = 1
    for a in u:
        d = Fraction(a).denominator
        lcm = lcm * d // gcd(lcm, d)
    return primitive(tuple(int(a * lcm) for a in u))


# ---------------------------------------------------------------------------
# exact linear algebra (Fraction based)


def matrix_rank(rows: Sequence[Sequence[int | Fraction]]) -> int:
    if not rows:
        return 0
    work = [[Fraction(x) for x in r] for r in rows]
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(work)) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = work[rank][col]
        for i in range(len(work)):
            if i != rank and work[i][col] != 0:
                factor = work[i][col] / inv
                work[i] = [a - factor * b for a, b in zip(work[i], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank


def solve_left(
    rows: Sequence[Vec], target: Sequence[int | Fraction]
) -> Optional[tuple[Fraction, ...]]:
    """Solve ``sum_i x_i * rows[i] = target`` over the rationals.

    Returns one solution (free coordinates set to zero) or None when the
    system is inconsistent.
    """
    m = len(rows)
    if m == 0:
        return () if all(Fraction(t) == 0 for t in target) else None
    n = len(rows[0])
    if len(target) != n:
        raise DimensionMismatchError("target rank does not match row rank")
    # augmented system over the unknown row-combination coefficients
    aug = [[Fraction(rows[i][j]) for i in range(m)] + [Fraction(target[j])] for j in range(n)]
    pivots: list[int] = []
    row = 0
    for col in range(m):
        pivot = next((i for i in range(row, n) if aug[i][col] != 0), None)
        if pivot is None:
            continue
        aug[row], aug[pivot] = aug[pivot], aug[row]
        inv = aug[row][col]
        aug[row] = [a / inv for a in aug[row]]
        for i in range(n):
            if i != row and aug[i][col] != 0:
                factor = aug[i][col]
                aug[i] = [a - factor * b for a, b in zip(aug[i], aug[row])]
        pivots.append(col)
        row += 1
    for i in range(row, n):
        if aug[i][m] != 0:
            return None
    solution = [Fraction(0)] * m
    for r, col in enumerate(pivots):
        solution[col] = aug[r][m]
    return tuple(solution)


def integer_kernel_basis(rows: Sequence[Vec], ambient_rank: int) -> list[Vec]:
    """Primitive basis of ``{x : rows @ x = 0}`` over the integers (HNF rows)."""
    if not rows:
        return [hermite_row(i, ambient_rank) for i in range(ambient_rank)]
    work = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    row = 0
    for col in range(ambient_rank):
        pivot = next((i for i in range(row, len(work)) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[row], work[pivot] = work[pivot], work[row]
        inv = work[row][col]
        work[row] = [a / inv for a in work[row]]
        for i in range(len(work)):
            if i != row and work[i][col] != 0:
                factor = work[i][col]
                work[i] = [a - factor * b for a, b in zip(work[i], work[row])]
        pivots.append(col)
        row += 1
    free = [c for c in range(ambient_rank) if c not in pivots]
    basis = []
    for c in free:
        vec = [Fraction(0)] * ambient_rank
        vec[c] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -work[r][c]
        basis.append(fraction_primitive(vec))
    return [tuple(r) for r in hermite_normal_form(basis)]


def hermite_row(i: int, n: int) -> Vec:
    return tuple(1 if j == i else 0 for j in range(n))


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> list[Vec]:
    """Row-style Hermite normal form; returns the nonzero rows.

    Pivots are positive, pivot columns strictly increase, and entries above a
    pivot are reduced into ``[0, pivot)``, so the output is canonical for the
    generated subgroup.
    """
    mat = [list(r) for r in rows if not is_zero_vec(r)]
    if not mat:
        return []
    ncols = len(mat[0])
    for r in mat:
        if len(r) != ncols:
            raise DimensionMismatchError("rows of mixed rank")
    top = 0
    for col in range(ncols):
        while True:
            nonzero = [i for i in range(top, len(mat)) if mat[i][col] != 0]
            if not nonzero:
                break
            pick = min(nonzero, key=lambda i: abs(mat[i][col]))
            mat[top], mat[pick] = mat[pick], mat[top]
            done = True
            for i in range(top + 1, len(mat)):
                if mat[i][col] != 0:
                    q = mat[i][col] // mat[top][col]
                    mat[i] = [a - q * b for a, b in zip(mat[i], mat[top])]
                    if mat[i][col] != 0:
                        done = False
            if done:
                break
        if top < len(mat) and mat[top][col] != 0:
            if mat[top][col] < 0:
                mat[top] = [-a for a in mat[top]]
            for i in range(top):
                q = mat[i][col] // mat[top][col]
                if q:
                    mat[i] = [a - q * b for a, b in zip(mat[i], mat[top])]
            top += 1
            if top == len(mat):
                break
    return [tuple(r) for r in mat[:top] if not is_zero_vec(r)] + [
        tuple(r) for r in mat[top:] if not is_zero_vec(r)
    ]


# ---------------------------------------------------------------------------
# lattice subgroups


@dataclass(frozen=True)
class LatticeSubgroup:
    """Subgroup of Z^n given by a canonical (Hermite) basis."""

    ambient_rank: int
    basis: tuple[Vec, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence[int]) -> bool:
        return self.integer_coordinates(v) is not None

    def integer_coordinates(self, v: Sequence[int]) -> Optional[Vec]:
        """Coefficients of v in the Hermite basis, or None if v is outside."""
        vec = list(as_vector(v, self.ambient_rank))
        pivot_col = {next(j for j, a in enumerate(row) if a != 0): i
                     for i, row in enumerate(self.basis)}
        coeffs = [0] * len(self.basis)
        for col in range(self.ambient_rank):
            if col in pivot_col:
                i = pivot_col[col]
                pivot = self.basis[i][col]
                if vec[col] % pivot != 0:
                    return None
                c = vec[col] // pivot
                coeffs[i] = c
                vec = [a - c * b for a, b in zip(vec, self.basis[i])]
            elif vec[col] != 0:
                return None
        return tuple(coeffs)

    def rational_coordinates(self, v: Sequence[int]) -> Optional[tuple[Fraction, ...]]:
        """Coefficients of v in the basis over Q, or None if v is off the span."""
        return solve_left(self.basis, as_vector(v, self.ambient_rank))

    def member_vector(self, coeffs: Sequence[int]) -> Vec:
        out = (0,) * self.ambient_rank
        for c, row in zip(coeffs, self.basis):
            out = vadd(out, vscale(c, row))
        return out


def group_generated(gens: Sequence[Sequence[int]]) -> LatticeSubgroup:
    """Subgroup of Z^n generated (with signs) by the given vectors."""
    vecs = [as_vector(g) for g in gens]
    if not vecs:
        raise ValueError("at least one generator is required")
    rank = len(vecs[0])
    vecs = [as_vector(g, rank) for g in vecs]
    return LatticeSubgroup(rank, tuple(hermite_normal_form(vecs)))


# ---------------------------------------------------------------------------
# double description: halfspaces -> generators


def _is_extreme(ray: Vec, constraints: Sequence[Vec], lineality_dim: int, n: int) -> bool:
    tight = [c for c in constraints if dot(c, ray) == 0]
    return n - matrix_rank(tight) == lineality_dim + 1


def generators_from_inequalities(
    normals: Sequence[Vec], ambient_rank: int
) -> tuple[list[Vec], list[Vec]]:
    """Lineality basis and extreme rays of ``{x : a.x >= 0 for a in normals}``.

    Incremental double description with explicit lineality handling; rays are
    pruned to extreme ones after every step by an exact rank test.
    """
    n = ambient_rank
    lines: list[Vec] = [hermite_row(i, n) for i in range(n)]
    rays: list[Vec] = []
    processed: list[Vec] = []
    for raw in normals:
        a = as_vector(raw, n)
        if is_zero_vec(a):
            continue
        hit = next((i for i, v in enumerate(lines) if dot(a, v) != 0), None)
        if hit is not None:
            w = lines.pop(hit)
            if dot(a, w) < 0:
                w = vneg(w)
            aw = dot(a, w)
            lines = [primitive(vsub(vscale(aw, v), vscale(dot(a, v), w))) for v in lines]
            rays = [primitive(vsub(vscale(aw, r), vscale(dot(a, r), w))) for r in rays]
            rays.append(w)
        else:
            pos = [r for r in rays if dot(a, r) > 0]
            zero = [r for r in rays if dot(a, r) == 0]
            neg = [r for r in rays if dot(a, r) < 0]
            new = zero + pos
            for p in pos:
                ap = dot(a, p)
                for q in neg:
                    new.append(primitive(vsub(vscale(ap, q), vscale(dot(a, q), p))))
            rays = new
        processed.append(a)
        seen: set[Vec] = set()
        kept: list[Vec] = []
        for r in rays:
            if is_zero_vec(r) or r in seen:
                continue
            seen.add(r)
            if _is_extreme(r, processed, len(lines), n):
                kept.append(r)
        rays = kept
    lines = [tuple(r) for r in hermite_normal_form(lines)]
    return lines, sorted(rays)


# ---------------------------------------------------------------------------
# rational cones


class RationalCone:
    """Rational polyhedral cone with exact V- and H-representations.

    Construction canonicalizes the generators: zero vectors are dropped,
    the rest are primitivized and reduced to the extreme rays, and each
    lineality direction is stored as a +/- pair of rays.  ``facet_normals``
    is the cached H-representation; equality constraints (for cones that are
    not full-dimensional) appear as +/- pairs of normals, so the invariant
    ``cone = {x : f.x >= 0 for every facet normal f}`` always holds.
    """

    __slots__ = ("ambient_rank", "rays", "_eq_normals", "_ineq_normals", "_lineality")

    def __init__(self, rays: Sequence[Sequence[int]], ambient_rank: Optional[int] = None):
        vecs = [as_vector(r) for r in rays]
        if ambient_rank is None:
            if not vecs:
                raise DimensionMismatchError(
                    "ambient rank is required for a cone with no generators"
                )
            ambient_rank = len(vecs[0])
        vecs = sorted({primitive(v) for v in (as_vector(r, ambient_rank) for r in vecs)
                       if not is_zero_vec(v)})
        object.__setattr__(self, "ambient_rank", ambient_rank)
        eq, ineq = _hrep_from_rays(vecs, ambient_rank)
        object.__setattr__(self, "_eq_normals", tuple(eq))
        object.__setattr__(self, "_ineq_normals", tuple(ineq))
        lineality = integer_kernel_basis(list(eq) + list(ineq), ambient_rank)
        object.__setattr__(self, "_lineality", tuple(lineality))
        object.__setattr__(self, "rays", _canonical_rays(vecs, eq, ineq, lineality, ambient_rank))

    def __setattr__(self, name, value):  # immutable
        raise AttributeError("RationalCone is immutable")

    @property
    def facet_normals(self) -> tuple[Vec, ...]:
        pairs: list[Vec] = []
        for e in self._eq_normals:
            pairs.extend((e, vneg(e)))
        return tuple(sorted(list(self._ineq_normals) + pairs))

    @property
    def lineality_basis(self) -> tuple[Vec, ...]:
        return self._lineality

    def contains(self, v: Sequence[int]) -> bool:
        vec = as_vector(v, self.ambient_rank)
        return all(dot(e, vec) == 0 for e in self._eq_normals) and all(
            dot(f, vec) >= 0 for f in self._ineq_normals
        )

    def span_rank(self) -> int:
        return matrix_rank(self.rays) if self.rays else 0

    def is_full_dimensional(self) -> bool:
        return self.span_rank() == self.ambient_rank

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalCone):
            return NotImplemented
        if self.ambient_rank != other.ambient_rank:
            return False
        return all(other.contains(r) for r in self.rays) and all(
            self.contains(r) for r in other.rays
        )

    def __repr__(self) -> str:
        return f"RationalCone(rays={list(self.rays)!r}, ambient_rank={self.ambient_rank})"


def _hrep_from_rays(rays: list[Vec], n: int) -> tuple[list[Vec], list[Vec]]:
    # generators of the dual cone; its lineality gives equality normals
    lines, extreme = generators_from_inequalities(rays, n)
    return lines, extreme


def _canonical_rays(
    gens: list[Vec], eq: Sequence[Vec], ineq: Sequence[Vec], lineality: Sequence[Vec], n: int
) -> tuple[Vec, ...]:
    lin_dim = len(lineality)
    chosen: dict[Vec, Vec] = {}
    for g in gens:
        tight = [f for f in ineq if dot(f, g) == 0]
        if all(dot(f, g) == 0 for f in ineq):
            continue  # lineality direction, represented separately
        if n - matrix_rank(list(tight) + list(eq)) != lin_dim + 1:
            continue  # interior to some higher face: redundant generator
        key = _quotient_key(g, lineality)
        if key not in chosen or g < chosen[key]:
            chosen[key] = g
    rays = list(chosen.values())
    for line in lineality:
        rays.append(line)
        rays.append(vneg(line))
    return tuple(sorted(rays))


def _quotient_key(g: Vec, lineality: Sequence[Vec]) -> Vec:
    """Canonical label of g modulo the rational span of the lineality basis."""
    if not lineality:
        return g
    work = [Fraction(x) for x in g]
    for line in lineality:
        col = next(j for j, a in enumerate(line) if a != 0)
        if work[col] != 0:
            factor = work[col] / line[col]
            work = [a - factor * b for a, b in zip(work, line)]
    return fraction_primitive(work)


def dual_cone(c: RationalCone) -> RationalCone:
    """The cone of functionals nonnegative on every point of c."""
    lines, rays = generators_from_inequalities(c.rays, c.ambient_rank)
    gens = list(rays)
    for line in lines:
        gens.append(line)
        gens.append(vneg(line))
    return RationalCone(gens, c.ambient_rank)


def is_pointed(c: RationalCone) -> bool:
    """True when the cone contains no line."""
    return len(c.lineality_basis) == 0


# ---------------------------------------------------------------------------
# faces


@dataclass(frozen=True)
class FaceDescriptor:
    """One face of a cone.

    ``zero_normals`` are the indices (into ``facet_normals``) of every normal
    vanishing on the face, ``span_rays`` the indices (into ``rays``) of every
    ray lying on it, and ``dim`` the dimension of its linear span.
    """

    zero_normals: tuple[int, ...]
    span_rays: tuple[int, ...]
    dim: int


def face_lattice(c: RationalCone) -> list[FaceDescriptor]:
    """All faces of c, each exactly once, ordered by (dim, span_rays).

    Faces are intersections of facets; the meet-closure of the facet ray-sets
    together with the full cone enumerates them all.  For a pointed cone the
    zero face appears with an empty ``span_rays``.
    """
    rays = c.rays
    normals = c.facet_normals
    facet_sets = []
    for f in c._ineq_normals:
        facet_sets.append(frozenset(j for j, r in enumerate(rays) if dot(f, r) == 0))
    ray_sets = {frozenset(range(len(rays)))}
    work = [s for s in facet_sets if s not in ray_sets]
    ray_sets.update(facet_sets)
    while work:
        s = work.pop()
        for f in facet_sets:
            t = s & f
            if t not in ray_sets:
                ray_sets.add(t)
                work.append(t)
    faces = []
    for s in ray_sets:
        span = tuple(sorted(s))
        members = [rays[j] for j in span]
        zero = tuple(
            i for i, f in enumerate(normals) if all(dot(f, r) == 0 for r in members)
        )
        faces.append(FaceDescriptor(zero, span, matrix_rank(members) if members else 0))
    faces.sort(key=lambda f: (f.dim, f.span_rays))
    return faces


# ---------------------------------------------------------------------------
# Hilbert bases


def hilbert_basis(c: RationalCone, subgroup: Optional[LatticeSubgroup] = None) -> list[Vec]:
    """Minimal generating set of the monoid ``c ∩ subgroup`` (c pointed).

    Candidates come from the lattice points of the fundamental parallelepipeds
    of the maximal linearly independent ray subsets (a bounded enumeration,
    complete by the conic Caratheodory theorem); irreducible candidates form
    the unique minimal generating set.
    """
    if not is_pointed(c):
        raise NonPointedError("non-pointed: Hilbert basis undefined here")
    n = c.ambient_rank
    if subgroup is None:
        subgroup = LatticeSubgroup(n, tuple(hermite_row(i, n) for i in range(n)))
    if subgroup.ambient_rank != n:
        raise DimensionMismatchError("subgroup and cone have different ambient ranks")
    if not c.rays:
        return []
    coords: list[Vec] = []
    for r in c.rays:
        x = subgroup.rational_coordinates(r)
        if x is None:
            raise DimensionMismatchError(
                "subgroup does not have full rank inside the span of the cone"
            )
        coords.append(fraction_primitive(x))
    k = subgroup.rank
    eq, ineq = _hrep_from_rays(sorted(set(coords)), k)

    def in_cone(v: Vec) -> bool:
        return all(dot(e, v) == 0 for e in eq) and all(dot(f, v) >= 0 for f in ineq)

    d = matrix_rank(coords)
    zero = (0,) * k
    candidates: set[Vec] = set()
    for subset in combinations(sorted(set(coords)), d):
        if matrix_rank(subset) < d:
            continue
        candidates.update(_parallelepiped_points(subset, k))
    candidates.discard(zero)
    cands = sorted(candidates)
    basis: list[Vec] = []
    for h in cands:
        reducible = False
        for a in cands:
            rest = vsub(h, a)
            if rest != zero and a != h and in_cone(rest):
                reducible = True
                break
        if not reducible:
            basis.append(h)
    return sorted(subgroup.member_vector(h) for h in basis)


def _parallelepiped_points(vecs: Sequence[Vec], k: int) -> set[Vec]:
    lo = [sum(min(0, v[j]) for v in vecs) for j in range(k)]
    hi = [sum(max(0, v[j]) for v in vecs) for j in range(k)]
    points: set[Vec] = set()
    for z in product(*(range(lo[j], hi[j] + 1) for j in range(k))):
        lam = solve_left(vecs, z)
        if lam is None:
            continue
        if all(0 <= x <= 1 for x in lam):
            points.add(tuple(z))
    return points
