"""Ring contexts, monomials, and canonical monomial ideals.

A monomial is an exponent vector over a fixed list of variables.  Monomial
ideals are always stored in canonical form: the unique minimal generating
set (a divisibility antichain) sorted lexicographically, so that structural
equality of the dataclass is equality of ideals.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

Multidegree = tuple[int, ...]

# Exponent arithmetic must never wrap or silently explode; any exponent this
# large indicates a runaway computation and is rejected as a hard error.
MAX_EXPONENT = 1 << 30


class ExponentOverflowError(OverflowError):
    pass


class ContextMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class RingContext:
    """A polynomial ring over a field with named degree-one variables.

    A context with no variables (the coefficient field itself) is permitted;
    it arises as the terminal state of repeated linear-variable elimination.
    """

    names: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "names", tuple(self.names))
        for name in self.names:
            if not isinstance(name, str) or not name:
                raise ValueError("variable names must be nonempty strings")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"variable names must be distinct: {self.names!r}")

    @classmethod
    def from_names(cls, spec: str) -> "RingContext":
        """Build a context from a comma-separated list like ``"x,y,z"``."""
        parts = [p.strip() for p in spec.split(",")] if spec.strip() else []
        return cls(tuple(parts))

    @property
    def n(self) -> int:
        return len(self.names)

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"undeclared variable {name!r}") from None

    def monomial(self, exponents) -> "Monomial":
        exponents = tuple(exponents)
        if len(exponents) != self.n:
            raise ContextMismatchError(
                f"exponent vector {exponents!r} has length {len(exponents)}, "
                f"context has {self.n} variables"
            )
        return Monomial(exponents)

    def one(self) -> "Monomial":
        return Monomial((0,) * self.n)

    def variable(self, i: int) -> "Monomial":
        if not 0 <= i < self.n:
            raise IndexError(f"variable index {i} out of range for n={self.n}")
        return Monomial(tuple(1 if j == i else 0 for j in range(self.n)))


@dataclass(frozen=True)
class Monomial:
    """A monomial x^a, stored as its exponent vector a."""

    exponents: Multidegree

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponents", tuple(self.exponents))
        for e in self.exponents:
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"exponents must be nonnegative integers: {self.exponents!r}")
            if e > MAX_EXPONENT:
                raise ExponentOverflowError(f"exponent {e} exceeds MAX_EXPONENT")

    @property
    def degree(self) -> Multidegree:
        return self.exponents

    def total_degree(self) -> int:
        return sum(self.exponents)

    def is_one(self) -> bool:
        return not any(self.exponents)

    def divides(self, other: "Monomial") -> bool:
        return _divides_raw(self.exponents, _match(self, other))

    def __mul__(self, other: "Monomial") -> "Monomial":
        b = _match(self, other)
        return Monomial(tuple(x + y for x, y in zip(self.exponents, b)))

    def gcd(self, other: "Monomial") -> "Monomial":
        b = _match(self, other)
        return Monomial(tuple(min(x, y) for x, y in zip(self.exponents, b)))

    def lcm(self, other: "Monomial") -> "Monomial":
        b = _match(self, other)
        return Monomial(tuple(max(x, y) for x, y in zip(self.exponents, b)))

    def quotient_by(self, other: "Monomial") -> "Monomial":
        """The colon quotient self / gcd(self, other)."""
        b = _match(self, other)
        return Monomial(tuple(max(x - y, 0) for x, y in zip(self.exponents, b)))

    def exact_divide(self, other: "Monomial") -> "Monomial":
        b = _match(self, other)
        if not _divides_raw(b, self.exponents):
            raise ValueError(f"{other.exponents!r} does not divide {self.exponents!r}")
        return Monomial(tuple(x - y for x, y in zip(self.exponents, b)))


def _match(a: Monomial, b: Monomial) -> Multidegree:
    if len(a.exponents) != len(b.exponents):
        raise ContextMismatchError(
            f"monomials live in different rings: {a.exponents!r} vs {b.exponents!r}"
        )
    return b.exponents


def _divides_raw(a: Multidegree, b: Multidegree) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _member_raw(m: Multidegree, rows) -> bool:
    for g in rows:
        for x, y in zip(g, m):
            if x > y:
                break
        else:
            return True
    return False


def _antichain(rows) -> list[Multidegree]:
    """Minimal elements of a set of exponent vectors, sorted lexicographically.

    Candidates are scanned in increasing total degree so every potential
    divisor of a candidate has already been accepted or discarded.
    """
    uniq = sorted(set(rows), key=lambda t: (sum(t), t))
    kept: list[Multidegree] = []
    for cand in uniq:
        if not _member_raw(cand, kept):
            kept.append(cand)
    kept.sort()
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal in canonical form.

    Invariants enforced on construction: every generator matches the context
    dimension, the generator list is lexicographically sorted, and no
    generator divides another.  The zero ideal has no generators; the unit
    ideal has the single generator 1.
    """

    context: RingContext
    gens: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "gens", tuple(self.gens))
        n = self.context.n
        rows = []
        for g in self.gens:
            if len(g.exponents) != n:
                raise ContextMismatchError(
                    f"generator {g.exponents!r} does not fit a {n}-variable context"
                )
            rows.append(g.exponents)
        for prev, cur in zip(rows, rows[1:]):
            if prev >= cur:
                raise ValueError("generators must be strictly sorted; use minimalize()")
        for i, a in enumerate(rows):
            for j, b in enumerate(rows):
                if i != j and _divides_raw(a, b):
                    raise ValueError(
                        f"generators are not an antichain: {a!r} divides {b!r}; use minimalize()"
                    )

    @cached_property
    def rows(self) -> tuple[Multidegree, ...]:
        """Raw exponent vectors of the generators, for hot loops."""
        return tuple(g.exponents for g in self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_one()

    def member(self, m: Monomial) -> bool:
        if len(m.exponents) != self.context.n:
            raise ContextMismatchError(
                f"monomial {m.exponents!r} does not fit a {self.context.n}-variable context"
            )
        return _member_raw(m.exponents, self.rows)


def minimalize(gens, context: RingContext) -> MonomialIdeal:
    """Canonicalize a list of monomials (or raw exponent tuples) into an ideal."""
    rows = []
    for g in gens:
        exps = g.exponents if isinstance(g, Monomial) else tuple(g)
        if len(exps) != context.n:
            raise ContextMismatchError(
                f"generator {exps!r} does not fit a {context.n}-variable context"
            )
        rows.append(exps)
    kept = _antichain(rows)
    return MonomialIdeal(context, tuple(Monomial(r) for r in kept))


def divides(a: Monomial, b: Monomial) -> bool:
    return a.divides(b)


def member(m: Monomial, ideal: MonomialIdeal) -> bool:
    return ideal.member(m)


def in_m_squared(ideal: MonomialIdeal) -> bool:
    """True when every generator has total degree at least two.

    The zero ideal qualifies vacuously; the unit ideal never does.
    """
    return all(sum(r) >= 2 for r in ideal.rows)


def multidegree_of_term(coefficient: Monomial, subset, context: RingContext) -> Multidegree:
    """Multidegree of the exterior term coefficient * e_subset."""
    if len(coefficient.exponents) != context.n:
        raise ContextMismatchError(
            f"coefficient {coefficient.exponents!r} does not fit a "
            f"{context.n}-variable context"
        )
    indices = sorted(set(subset))
    deg = list(coefficient.exponents)
    for i in indices:
        if not 0 <= i < context.n:
            raise IndexError(f"variable index {i} out of range for n={context.n}")
        deg[i] += 1
    return tuple(deg)
