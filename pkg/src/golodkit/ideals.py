"""Arithmetic on canonical monomial ideals.

All operations return canonical ideals (minimal generators, sorted), so
results can be compared structurally.  Binary operations require both
operands to share a ring context.
"""

from __future__ import annotations

from itertools import combinations
from math import gcd

from .linalg import QQ, ExactMatrix, nullspace
from .rings import (
    ContextMismatchError,
    MonomialIdeal,
    Monomial,
    Multidegree,
    RingContext,
    _antichain,
    _member_raw,
    minimalize,
)


class ZeroColonError(ValueError):
    """Colon by the zero ideal is undefined."""


def _check_same_context(a: MonomialIdeal, b: MonomialIdeal) -> None:
    if a.context != b.context:
        raise ContextMismatchError(
            f"ideals live in different contexts: {a.context.names} vs {b.context.names}"
        )


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_same_context(a, b)
    return minimalize(a.rows + b.rows, a.context)


def ideal_product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Product ideal; the product with the zero ideal is zero."""
    _check_same_context(a, b)
    rows = [
        tuple(x + y for x, y in zip(f, g))
        for f in a.rows
        for g in b.rows
    ]
    return minimalize(rows, a.context)


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Intersection via pairwise least common multiples of generators."""
    _check_same_context(a, b)
    rows = {
        tuple(max(x, y) for x, y in zip(f, g))
        for f in a.rows
        for g in b.rows
    }
    return minimalize(rows, a.context)


def colon(a: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """Colon by a single monomial: generated by g / gcd(g, m)."""
    if len(m.exponents) != a.context.n:
        raise ContextMismatchError(
            f"monomial {m.exponents!r} does not fit a {a.context.n}-variable context"
        )
    me = m.exponents
    rows = [tuple(max(x - y, 0) for x, y in zip(g, me)) for g in a.rows]
    return minimalize(rows, a.context)


def colon_ideal(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Colon by an ideal: the intersection of the colons by its generators."""
    _check_same_context(a, b)
    if b.is_zero():
        raise ZeroColonError("colon by the zero ideal is undefined")
    result = colon(a, b.gens[0])
    for g in b.gens[1:]:
        result = intersect(result, colon(a, g))
    return result


def variable_ideal(context: RingContext, indices) -> MonomialIdeal:
    """The ideal generated by the listed variables."""
    idx = sorted(set(indices))
    for i in idx:
        if not 0 <= i < context.n:
            raise IndexError(f"variable index {i} out of range for n={context.n}")
    return minimalize(
        [tuple(1 if j == i else 0 for j in range(context.n)) for i in idx], context
    )


def maximal_ideal(context: RingContext) -> MonomialIdeal:
    return variable_ideal(context, range(context.n))


def colon_by_variables(a: MonomialIdeal, indices) -> MonomialIdeal:
    """Colon by the variable ideal on `indices`; the empty set colons by nothing.

    The empty-subset convention I : () = I keeps bipartition enumeration
    uniform for the necessary-condition checks.
    """
    idx = sorted(set(indices))
    if not idx:
        return a
    return colon_ideal(a, variable_ideal(a.context, idx))


def contains(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    """True when b is a subset of a."""
    _check_same_context(a, b)
    rows = a.rows
    return all(_member_raw(g, rows) for g in b.rows)


def strongly_golod(a: MonomialIdeal) -> bool:
    """Whether every product of two variable colons lands back in the ideal.

    Checks (I : x_i)(I : x_j) inside I for all pairs i <= j; products are
    scanned generator by generator without materializing the product ideal.
    """
    n = a.context.n
    rows = a.rows
    colons = [colon(a, a.context.variable(i)).rows for i in range(n)]
    for i in range(n):
        for j in range(i, n):
            for f in colons[i]:
                for g in colons[j]:
                    prod = tuple(x + y for x, y in zip(f, g))
                    if not _member_raw(prod, rows):
                        return False
    return True


def eliminate_variable_generators(a: MonomialIdeal) -> tuple[MonomialIdeal, RingContext]:
    """Remove degree-one generators by passing to the quotient ring.

    A generator that is a single variable x_i turns the quotient into a
    polynomial ring on the remaining variables; the ideal maps to the image
    obtained by deleting coordinate i (generators divisible by x_i die).
    Repeats until no linear generators remain.  Elimination cannot create a
    new linear generator because surviving generators keep their degrees.
    """
    names = list(a.context.names)
    rows = [list(r) for r in a.rows]
    changed = True
    while changed:
        changed = False
        for r in rows:
            if sum(r) == 1:
                i = r.index(1)
                rows = [q[:i] + q[i + 1 :] for q in rows if q[i] == 0]
                del names[i]
                changed = True
                break
    ctx = RingContext(tuple(names))
    return minimalize([tuple(r) for r in rows], ctx), ctx


def _primitive_normal(vec) -> tuple[int, ...] | None:
    """Scale a rational kernel vector to a primitive nonnegative integer vector."""
    denom = 1
    for x in vec:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in vec]
    if all(v == 0 for v in ints):
        return None
    if any(v < 0 for v in ints):
        ints = [-v for v in ints]
    if any(v < 0 for v in ints):
        return None
    g = 0
    for v in ints:
        g = gcd(g, v)
    return tuple(v // g for v in ints)


def _newton_facets(rows: tuple[Multidegree, ...], n: int) -> list[tuple[tuple[int, ...], int]]:
    """Valid inequalities <c, u> >= h cutting out the Newton polyhedron.

    The polyhedron conv(generators) + R^n_{>=0} is full dimensional and every
    facet hyperplane is spanned by some generators together with some
    coordinate rays, so enumerating all such spanning sets (p generator
    points plus n - p rays, p >= 1) and solving for the one-dimensional
    orthogonal complement produces every facet normal.  Normals with mixed
    signs cannot support the recession cone and are discarded; redundant
    nonnegative normals are harmless because their right-hand side is the
    exact support minimum.
    """
    facets: dict[tuple[int, ...], int] = {}
    axes = list(range(n))
    for p in range(1, n + 1):
        for pts in combinations(rows, p):
            base = pts[0]
            diffs = [
                [x - y for x, y in zip(other, base)] for other in pts[1:]
            ]
            for rays in combinations(axes, n - p):
                mat_rows = list(diffs)
                for axis in rays:
                    mat_rows.append([1 if j == axis else 0 for j in range(n)])
                kern = nullspace(ExactMatrix.from_rows(QQ, mat_rows)) if mat_rows else nullspace(
                    ExactMatrix(QQ, 0, n, ())
                )
                if len(kern) != 1:
                    continue
                normal = _primitive_normal(kern[0])
                if normal is None:
                    continue
                h = min(sum(c * v for c, v in zip(normal, g)) for g in rows)
                facets[normal] = h
    return sorted(facets.items())


def integral_closure(a: MonomialIdeal) -> MonomialIdeal:
    """Integral closure via exact Newton-polyhedron membership.

    A monomial lies in the closure exactly when its exponent vector is in
    conv(generator exponents) + R^n_{>=0}; membership is decided against the
    facet inequalities computed by _newton_facets.  All minimal generators of
    the closure lie in the componentwise bounding box of the original
    generators (pushing any coordinate above the box lands the point back in
    the shifted polyhedron), so scanning the box in increasing total degree
    and skipping points dominated by an accepted one finds them all.
    """
    if a.is_zero() or a.is_unit():
        raise ValueError("integral closure requires a nonzero proper ideal")
    n = a.context.n
    rows = a.rows
    facets = _newton_facets(rows, n)
    box = [max(g[i] for g in rows) for i in range(n)]

    def in_polyhedron(pt) -> bool:
        for normal, h in facets:
            if sum(c * v for c, v in zip(normal, pt)) < h:
                return False
        return True

    candidates = [()]
    for b in box:
        candidates = [t + (e,) for t in candidates for e in range(b + 1)]
    candidates.sort(key=lambda t: (sum(t), t))
    accepted: list[Multidegree] = []
    for pt in candidates:
        if _member_raw(pt, accepted):
            continue
        if in_polyhedron(pt):
            accepted.append(pt)
    return minimalize(accepted, a.context)
