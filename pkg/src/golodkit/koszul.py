"""Multigraded strands of the Koszul complex of R = Q/I and their homology.

For a monomial ideal the Koszul differential preserves exponent-vector
multidegrees, so the complex over R splits into finite strands.  The strand
at multidegree `a` in homological degree p has one basis element for each
p-subset S of the variables with unit-vector sum epsilon_S <= a whose
cofactor monomial x^(a - epsilon_S) is nonzero in R; in this normalized
basis every differential entry is -1, 0, or +1.

The differential follows d(e_{i_1 < ... < i_p}) = sum_j (-1)^(j-1) x_{i_j}
e_{S minus i_j}; a face whose cofactor falls into I contributes nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .linalg import (
    ExactMatrix,
    FieldSpec,
    QQ,
    column_space_contains,
    echelon_extension,
    nullspace,
    rank,
    solve_in_span,
)
from .rings import (
    Monomial,
    MonomialIdeal,
    Multidegree,
    _member_raw,
    in_m_squared,
)

Subset = tuple[int, ...]


@dataclass(frozen=True)
class KoszulTerm:
    """An exterior term coefficient * e_subset with a monomial coefficient."""

    coefficient: Monomial
    subset: Subset

    def multidegree(self) -> Multidegree:
        deg = list(self.coefficient.exponents)
        for i in self.subset:
            deg[i] += 1
        return tuple(deg)


@dataclass(frozen=True)
class StrandComplex:
    """One multidegree strand: bases and differentials for p = 0..n."""

    multidegree: Multidegree
    bases: tuple[tuple[Subset, ...], ...]
    diffs: tuple[ExactMatrix, ...]
    field: FieldSpec

    @property
    def n(self) -> int:
        return len(self.multidegree)

    def basis(self, p: int) -> tuple[Subset, ...]:
        if 0 <= p <= self.n:
            return self.bases[p]
        return ()

    def differential(self, p: int) -> ExactMatrix:
        """The map K_p -> K_{p-1}; out-of-range p gives the right-shaped zero map."""
        if 1 <= p <= self.n:
            return self.diffs[p]
        if p == 0:
            return ExactMatrix.zeros(self.field, 0, len(self.bases[0]))
        if p == self.n + 1:
            return ExactMatrix.zeros(self.field, len(self.bases[self.n]), 0)
        return ExactMatrix.zeros(self.field, 0, 0)


@dataclass(frozen=True)
class HomologyBasis:
    multidegree: Multidegree
    p: int
    dimension: int
    representatives: tuple[tuple, ...]


@dataclass(frozen=True)
class BettiTable:
    """Nonzero multigraded homology dimensions and their totals by degree."""

    entries: tuple[tuple[int, Multidegree, int], ...]
    totals: tuple[int, ...]

    def dimension(self, p: int, a: Multidegree) -> int:
        for q, deg, d in self.entries:
            if q == p and deg == a:
                return d
        return 0

    def totals_map(self) -> dict[int, int]:
        return {p: t for p, t in enumerate(self.totals)}


@dataclass(frozen=True)
class TrivialityReport:
    trivial: bool
    witness: "object | None"
    pairs_checked: int
    field_label: str


@dataclass(frozen=True)
class MonomialBasisFailure:
    multidegree: Multidegree
    unspanned: tuple[tuple, ...]


@dataclass(frozen=True)
class MonomialBasisReport:
    p: int
    success: bool
    basis: tuple[tuple[Multidegree, tuple[KoszulTerm, ...]], ...]
    failures: tuple[MonomialBasisFailure, ...]


def relevant_multidegrees(ideal: MonomialIdeal, lcm_closure: bool = False) -> list[Multidegree]:
    """Multidegrees that can carry homology.

    The default is the full componentwise bounding box of the generators;
    with lcm_closure=True only joins of generator subsets (plus the origin)
    are listed.  Both enumerations see every nonzero homology class: classes
    in positive homological degree live on the lcm lattice, and H_0 lives at
    the origin.
    """
    if ideal.is_unit():
        raise ValueError("the unit ideal has no homology strands")
    n = ideal.context.n
    rows = ideal.rows
    if lcm_closure:
        degrees = {(0,) * n}
        frontier = [(0,) * n]
        while frontier:
            nxt = []
            for d in frontier:
                for g in rows:
                    j = tuple(max(x, y) for x, y in zip(d, g))
                    if j not in degrees:
                        degrees.add(j)
                        nxt.append(j)
            frontier = nxt
        return sorted(degrees)
    box = [max((g[i] for g in rows), default=0) for i in range(n)]
    degrees = [()]
    for b in box:
        degrees = [t + (e,) for t in degrees for e in range(b + 1)]
    return sorted(degrees)


class KoszulEngine:
    """Strand builder with caching, product evaluation, and basis reports.

    One engine pins (ideal, field); strands created for product targets can
    sit outside the generator box and are cached alongside the box strands.
    """

    def __init__(self, ideal: MonomialIdeal, field: FieldSpec = QQ):
        self.ideal = ideal
        self.field = field
        self.n = ideal.context.n
        self._rows = ideal.rows
        self._strands: dict[Multidegree, StrandComplex] = {}
        self._homology: dict[tuple[Multidegree, int], HomologyBasis] = {}

    def _in_ideal(self, exps: Multidegree) -> bool:
        return _member_raw(exps, self._rows)

    def strand(self, a: Multidegree) -> StrandComplex:
        a = tuple(a)
        cached = self._strands.get(a)
        if cached is None:
            cached = self._build_strand(a)
            self._strands[a] = cached
        return cached

    def _build_strand(self, a: Multidegree) -> StrandComplex:
        n = self.n
        if len(a) != n or any(e < 0 for e in a):
            raise ValueError(f"bad multidegree {a!r} for n={n}")
        field = self.field
        bases: list[tuple[Subset, ...]] = []
        for p in range(n + 1):
            level = []
            for S in combinations(range(n), p):
                cof = list(a)
                ok = True
                for i in S:
                    cof[i] -= 1
                    if cof[i] < 0:
                        ok = False
                        break
                if ok and not self._in_ideal(tuple(cof)):
                    level.append(S)
            bases.append(tuple(level))
        one, neg_one = field.one, field.neg(field.one)
        zero = field.zero
        diffs: list[ExactMatrix] = [ExactMatrix.zeros(field, 0, len(bases[0]))]
        for p in range(1, n + 1):
            prev_index = {S: r for r, S in enumerate(bases[p - 1])}
            entries = [
                [zero] * len(bases[p]) for _ in range(len(bases[p - 1]))
            ]
            for c, S in enumerate(bases[p]):
                for j, i in enumerate(S):
                    face = S[:j] + S[j + 1 :]
                    r = prev_index.get(face)
                    if r is not None:
                        entries[r][c] = one if j % 2 == 0 else neg_one
            diffs.append(
                ExactMatrix(field, len(bases[p - 1]), len(bases[p]), tuple(tuple(r) for r in entries))
            )
        return StrandComplex(a, tuple(bases), tuple(diffs), field)

    def homology(self, a: Multidegree, p: int) -> HomologyBasis:
        a = tuple(a)
        key = (a, p)
        cached = self._homology.get(key)
        if cached is not None:
            return cached
        strand = self.strand(a)
        cycles = nullspace(strand.differential(p))
        boundary_cols = strand.differential(p + 1).columns()
        dim_basis = len(strand.basis(p))
        chosen = echelon_extension(self.field, boundary_cols, cycles, dim_basis)
        reps = tuple(cycles[i] for i in chosen)
        result = HomologyBasis(a, p, len(reps), reps)
        self._homology[key] = result
        return result

    def betti_table(self, lcm_closure: bool = False) -> BettiTable:
        entries = []
        totals = [0] * (self.n + 1)
        for a in relevant_multidegrees(self.ideal, lcm_closure):
            for p in range(self.n + 1):
                if not self.strand(a).basis(p):
                    continue
                d = self.homology(a, p).dimension
                if d:
                    entries.append((p, a, d))
                    totals[p] += d
        entries.sort(key=lambda e: (e[0], e[1]))
        return BettiTable(tuple(entries), tuple(totals))

    def wedge(self, a: Multidegree, p: int, va, b: Multidegree, q: int, vb) -> tuple:
        """Exterior product of strand vectors, landing in strand a+b, degree p+q.

        Pairs of subsets that meet contribute nothing; disjoint pairs merge
        with the shuffle sign (-1)^#{(s,t) in S x T : s > t}, and the merged
        term survives only if its cofactor monomial stays out of the ideal,
        i.e. only if the merged subset indexes a basis element of the target.
        """
        a, b = tuple(a), tuple(b)
        field = self.field
        sa, sb = self.strand(a), self.strand(b)
        target = self.strand(tuple(x + y for x, y in zip(a, b)))
        tbasis = target.basis(p + q)
        tindex = {S: i for i, S in enumerate(tbasis)}
        zero = field.zero
        out = [zero] * len(tbasis)
        terms_a = [(S, c) for S, c in zip(sa.basis(p), va) if c != zero]
        terms_b = [(T, c) for T, c in zip(sb.basis(q), vb) if c != zero]
        for S, cs in terms_a:
            sset = set(S)
            for T, ct in terms_b:
                if sset & set(T):
                    continue
                merged = tuple(sorted(S + T))
                idx = tindex.get(merged)
                if idx is None:
                    continue
                inversions = sum(1 for s in S for t in T if s > t)
                coeff = field.mul(cs, ct)
                if inversions % 2:
                    coeff = field.neg(coeff)
                out[idx] = field.add(out[idx], coeff)
        return tuple(out)

    def is_boundary(self, a: Multidegree, p: int, vec) -> bool:
        strand = self.strand(tuple(a))
        return solve_in_span(strand.differential(p + 1), vec) is not None

    def _positive_homology_items(self) -> list[tuple[Multidegree, int, int, tuple]]:
        items = []
        for a in relevant_multidegrees(self.ideal):
            for p in range(1, self.n + 1):
                if not self.strand(a).basis(p):
                    continue
                h = self.homology(a, p)
                for idx, rep in enumerate(h.representatives):
                    items.append((a, p, idx, rep))
        return items

    def products_trivial(self) -> TrivialityReport:
        """Whether every pairwise product of positive-degree classes bounds.

        Scans unordered pairs of homology representatives (the wedge is
        graded-commutative, so one orientation decides both); the first
        product cycle that fails to lie in the image of the next
        differential is returned as a witness.
        """
        if not in_m_squared(self.ideal):
            raise ValueError("product triviality is only defined for ideals inside m^2")
        items = self._positive_homology_items()
        pairs_checked = 0
        zero = self.field.zero
        for s in range(len(items)):
            a, p, ia, za = items[s]
            for t in range(s, len(items)):
                b, q, ib, zb = items[t]
                if p + q > self.n:
                    continue
                pairs_checked += 1
                vec = self.wedge(a, p, za, b, q, zb)
                if all(c == zero for c in vec):
                    continue
                target_deg = tuple(x + y for x, y in zip(a, b))
                if not self.is_boundary(target_deg, p + q, vec):

                    def sparse(deg, level, coeffs):
                        return tuple(
                            (S, c)
                            for S, c in zip(self.strand(deg).basis(level), coeffs)
                            if c != zero
                        )

                    witness = {
                        "a": a,
                        "p": p,
                        "rep_a": sparse(a, p, za),
                        "b": b,
                        "q": q,
                        "rep_b": sparse(b, q, zb),
                        "product_multidegree": target_deg,
                        "product_cycle": sparse(target_deg, p + q, vec),
                    }
                    return TrivialityReport(False, witness, pairs_checked, self.field.label)
        return TrivialityReport(True, None, pairs_checked, self.field.label)

    def monomial_cycle_report(self, p: int) -> MonomialBasisReport:
        """Try to span every H_p strand by classes of monomial cycles.

        A monomial cycle is a single basis element e_S whose differential
        column vanishes.  Selection extends the boundary space by unit
        vectors deterministically; a strand where the selected classes fall
        short is reported together with the representatives left unspanned.
        """
        if not 1 <= p <= self.n:
            raise ValueError(f"homological degree must be within 1..{self.n}: {p}")
        field = self.field
        zero = field.zero
        one = field.one
        basis_out = []
        failures = []
        for a in relevant_multidegrees(self.ideal):
            strand = self.strand(a)
            level = strand.basis(p)
            if not level:
                continue
            h = self.homology(a, p)
            if h.dimension == 0:
                continue
            diff = strand.differential(p)
            mono_cols = [
                c
                for c in range(len(level))
                if all(diff.entries[r][c] == zero for r in range(diff.nrows))
            ]
            unit_vecs = []
            for c in mono_cols:
                v = [zero] * len(level)
                v[c] = one
                unit_vecs.append(tuple(v))
            boundary_cols = strand.differential(p + 1).columns()
            chosen = echelon_extension(field, boundary_cols, unit_vecs, len(level))
            if len(chosen) == h.dimension:
                terms = []
                for i in chosen:
                    S = level[mono_cols[i]]
                    cof = list(a)
                    for j in S:
                        cof[j] -= 1
                    terms.append(KoszulTerm(Monomial(tuple(cof)), S))
                basis_out.append((a, tuple(terms)))
            else:
                span = ExactMatrix.from_columns(
                    field, boundary_cols + unit_vecs, len(level)
                )
                unspanned = tuple(
                    rep
                    for rep in h.representatives
                    if not column_space_contains(span, [rep])
                )
                failures.append(MonomialBasisFailure(a, unspanned))
        return MonomialBasisReport(p, not failures, tuple(basis_out), tuple(failures))


def build_strand(ideal: MonomialIdeal, a: Multidegree, field: FieldSpec = QQ) -> StrandComplex:
    return KoszulEngine(ideal, field).strand(tuple(a))


def strand_homology(ideal: MonomialIdeal, a: Multidegree, p: int, field: FieldSpec = QQ) -> HomologyBasis:
    return KoszulEngine(ideal, field).homology(tuple(a), p)


def betti_table(ideal: MonomialIdeal, field: FieldSpec = QQ, lcm_closure: bool = False) -> BettiTable:
    return KoszulEngine(ideal, field).betti_table(lcm_closure)


def products_trivial(ideal: MonomialIdeal, field: FieldSpec = QQ) -> TrivialityReport:
    return KoszulEngine(ideal, field).products_trivial()


def monomial_cycle_basis(ideal: MonomialIdeal, p: int, field: FieldSpec = QQ) -> MonomialBasisReport:
    return KoszulEngine(ideal, field).monomial_cycle_report(p)


def h1_constructive_basis(ideal: MonomialIdeal) -> list[KoszulTerm]:
    """One H_1 class per minimal generator: (g / x_i) e_i for the first i dividing g.

    The classes live in pairwise distinct multidegrees (the generator
    degrees), are cycles because g falls into the ideal, and represent a
    basis of H_1 since first Koszul homology counts minimal generators.
    """
    if ideal.is_zero() or ideal.is_unit():
        raise ValueError("constructive H_1 basis requires a nonzero proper ideal")
    terms = []
    for g in ideal.gens:
        i = next(k for k, e in enumerate(g.exponents) if e > 0)
        cof = list(g.exponents)
        cof[i] -= 1
        terms.append(KoszulTerm(Monomial(tuple(cof)), (i,)))
    return terms


def socle_basis(ideal: MonomialIdeal) -> list[KoszulTerm]:
    """Basis of top Koszul homology: u e_{1..n} for monomials u in (I : m) minus I.

    Such u satisfy u x_i in I for every variable, which forces every
    exponent of u strictly below the generator box in that coordinate, so a
    scan of the strict box is exhaustive.  Empty exactly when R has positive
    depth.
    """
    if ideal.is_zero() or ideal.is_unit():
        raise ValueError("socle basis requires a nonzero proper ideal")
    n = ideal.context.n
    rows = ideal.rows
    box = [max(g[i] for g in rows) for i in range(n)]
    candidates = [()]
    for b in box:
        candidates = [t + (e,) for t in candidates for e in range(b)]
    full = tuple(range(n))
    terms = []
    for u in sorted(candidates):
        if _member_raw(u, rows):
            continue
        if all(
            _member_raw(tuple(e + (1 if j == i else 0) for j, e in enumerate(u)), rows)
            for i in range(n)
        ):
            terms.append(KoszulTerm(Monomial(u), full))
    return terms
