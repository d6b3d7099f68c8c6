"""Poincare series of R = Q/I versus the binomial/geometric upper bound.

The left side comes from a minimal graded free resolution of the residue
field over R, built degree by degree: the kernel of each strand map is
computed exactly, and new syzygy generators are chosen as a deterministic
basis extension of m * kernel inside the kernel.  The right side expands
(1+t)^n / (1 - sum_i b_i t^(i+1)) with b_i the total Koszul homology
dimensions, truncated as an exact integer series.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .certificates import MultigradedSerreGapWitness, SerreGapWitness
from .koszul import KoszulEngine
from .linalg import (
    ExactMatrix,
    FieldSpec,
    QQ,
    echelon_extension,
    echelon_extension_gf2,
    nullspace,
    nullspace_gf2,
)
from .rings import MonomialIdeal, Multidegree, _member_raw, in_m_squared


class IncompleteResolutionError(RuntimeError):
    pass


@dataclass(frozen=True)
class TruncatedSeries:
    """Integer power series coefficients c_0..c_N."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, i: int) -> int:
        return self.coefficients[i]


def series_product(a: TruncatedSeries, b: TruncatedSeries, order: int) -> TruncatedSeries:
    out = [0] * (order + 1)
    for i, x in enumerate(a.coefficients[: order + 1]):
        if x == 0:
            continue
        for j, y in enumerate(b.coefficients[: order + 1 - i]):
            out[i + j] += x * y
    return TruncatedSeries(tuple(out))


def series_inverse(d: TruncatedSeries, order: int) -> TruncatedSeries:
    if d[0] != 1:
        raise ValueError("series inversion requires constant term 1")
    inv = [1] + [0] * order
    for k in range(1, order + 1):
        acc = 0
        for j in range(1, min(k, d.order) + 1):
            acc += d[j] * inv[k - j]
        inv[k] = -acc
    return TruncatedSeries(tuple(inv))


def binomial_series(n: int, order: int) -> TruncatedSeries:
    return TruncatedSeries(tuple(comb(n, i) if i <= n else 0 for i in range(order + 1)))


def serre_bound(n: int, koszul_totals, order: int) -> TruncatedSeries:
    """Coefficients of (1+t)^n / (1 - sum_{i>=1} b_i t^(i+1)) up to `order`."""
    if isinstance(koszul_totals, dict):
        totals = koszul_totals
    else:
        totals = {i: b for i, b in enumerate(koszul_totals)}
    denom = [0] * (order + 1)
    denom[0] = 1
    for i, b in totals.items():
        if i >= 1 and i + 1 <= order and b:
            denom[i + 1] -= b
    inv = series_inverse(TruncatedSeries(tuple(denom)), order)
    return series_product(binomial_series(n, order), inv, order)


@dataclass(frozen=True)
class ColumnEntry:
    """One term of a syzygy: coeff * monomial at a target generator."""

    target: int
    monomial: Multidegree
    coeff: object


@dataclass(frozen=True)
class ResolutionStep:
    index: int
    generator_degrees: tuple[int, ...]
    generator_multidegrees: tuple[Multidegree, ...]
    columns: tuple[tuple[ColumnEntry, ...], ...]
    complete: bool


def standard_monomials(ideal: MonomialIdeal, d: int) -> list[Multidegree]:
    """Exponent vectors of degree-d monomials outside the ideal, in lex order."""
    if ideal.is_unit():
        raise ValueError("the unit ideal has no standard monomials")
    n = ideal.context.n
    rows = ideal.rows
    out = []

    def emit(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining + 1):
            emit(prefix + (e,), remaining - e, slots - 1)

    if n == 0:
        return [()] if d == 0 else []
    emit((), d, n)
    return sorted(v for v in out if not _member_raw(v, rows))


class _Resolver:
    def __init__(
        self,
        ideal: MonomialIdeal,
        field: FieldSpec,
        d_max: int,
        exhaustive: bool = False,
    ):
        self.ideal = ideal
        self.field = field
        self.d_max = d_max
        # Exhaustive mode scans every internal degree up to d_max; no step
        # stops early, so the bigraded counts below d_max are exact.
        self.exhaustive = exhaustive
        self.n = ideal.context.n
        self._rows = ideal.rows
        self._std: dict[int, list[Multidegree]] = {}
        self._memb: dict[Multidegree, bool] = {}
        self._gf2 = field.modulus == 2
        self.max_gen_degree = max((sum(r) for r in self._rows), default=2)
        self.socle_top = self._artinian_top()

    def _in_ideal(self, m: Multidegree) -> bool:
        v = self._memb.get(m)
        if v is None:
            v = _member_raw(m, self._rows)
            self._memb[m] = v
        return v

    def _artinian_top(self) -> int | None:
        """Top degree of R when Artinian (every variable has a pure power), else None."""
        pure = {}
        for r in self._rows:
            support = [i for i, e in enumerate(r) if e]
            if len(support) == 1:
                pure[support[0]] = r[support[0]]
        if set(pure) != set(range(self.n)):
            return None
        bound = sum(e - 1 for e in pure.values())
        top = 0
        for d in range(bound + 1):
            if self.std(d):
                top = d
        return top

    def std(self, d: int) -> list[Multidegree]:
        if d not in self._std:
            self._std[d] = standard_monomials(self.ideal, d) if d >= 0 else []
        return self._std[d]

    def _is_standard(self, m: Multidegree) -> bool:
        return all(e >= 0 for e in m) and not self._in_ideal(m)

    def _blocks(self, gen_mdegs, gen_degs, d: int) -> dict[Multidegree, list[int]]:
        """Strand basis of total degree d, split by multidegree.

        Each generator contributes at most one basis element per multidegree
        (its cofactor monomial is forced), so a block lists generator indices.
        """
        blocks: dict[Multidegree, list[int]] = {}
        for j, mdeg in enumerate(gen_mdegs):
            for w in self.std(d - gen_degs[j]):
                a = tuple(x + y for x, y in zip(mdeg, w))
                blocks.setdefault(a, []).append(j)
        return blocks

    def _block_matrix(self, columns, gen_mdegs, block, target_row, a):
        """Differential restricted to the multidegree-a block.

        target_row maps a surviving target generator index to its row; it is
        the previous step's source block at the same multidegree.
        """
        field = self.field
        zero = field.zero
        rows = [[zero] * len(block) for _ in range(len(target_row))]
        for cj, j in enumerate(block):
            w = tuple(x - y for x, y in zip(a, gen_mdegs[j]))
            for entry in columns[j]:
                prod = tuple(x + y for x, y in zip(w, entry.monomial))
                if self._in_ideal(prod):
                    continue
                r = target_row[entry.target]
                rows[r][cj] = field.add(rows[r][cj], entry.coeff)
        return ExactMatrix(field, len(rows), len(block), tuple(tuple(r) for r in rows))

    def _block_rows_gf2(self, columns, gen_mdegs, block, target_row, a):
        """Differential block as GF(2) row bitmasks (bit = block position)."""
        rows = [0] * len(target_row)
        for cj, j in enumerate(block):
            bit = 1 << cj
            w = tuple(x - y for x, y in zip(a, gen_mdegs[j]))
            for entry in columns[j]:
                prod = tuple(x + y for x, y in zip(w, entry.monomial))
                if self._in_ideal(prod):
                    continue
                rows[target_row[entry.target]] ^= bit
        return rows

    @staticmethod
    def _transition(src_block, dst_block) -> list[tuple[int, int]]:
        """(source position, destination position) pairs for shared generators.

        Both block lists ascend by generator index, so a linear merge finds
        the generators that survive in the higher multidegree.
        """
        pairs = []
        bi = 0
        top = len(dst_block)
        for r, j in enumerate(src_block):
            while bi < top and dst_block[bi] < j:
                bi += 1
            if bi == top:
                break
            if dst_block[bi] == j:
                pairs.append((r, bi))
        return pairs

    def _shift_span(self, prev_kernels, prev_blocks, a, block) -> list[tuple]:
        """Images x_t * z of kernel vectors one degree down, inside block a.

        A generator's basis element survives the shift exactly when the
        generator reappears in the block at a, so the whole transfer is a
        fixed position map shared by every kernel vector from that source.
        """
        zero = self.field.zero
        nb = len(block)
        span = []
        for t in range(self.n):
            if a[t] == 0:
                continue
            source = tuple(x - (1 if k == t else 0) for k, x in enumerate(a))
            kers = prev_kernels.get(source)
            if not kers:
                continue
            pairs = self._transition(prev_blocks[source], block)
            for z in kers:
                vec = [zero] * nb
                nonzero = False
                for r, row in pairs:
                    c = z[r]
                    if c != zero:
                        vec[row] = c
                        nonzero = True
                if nonzero:
                    span.append(tuple(vec))
        return span

    def _shift_span_gf2(self, prev_kernels, prev_blocks, a, block) -> list[int]:
        span = []
        for t in range(self.n):
            if a[t] == 0:
                continue
            source = tuple(x - (1 if k == t else 0) for k, x in enumerate(a))
            kers = prev_kernels.get(source)
            if not kers:
                continue
            pairs = self._transition(prev_blocks[source], block)
            for z in kers:
                vec = 0
                for r, row in pairs:
                    if z >> r & 1:
                        vec |= 1 << row
                if vec:
                    span.append(vec)
        return span

    def run(self, i_max: int) -> list[ResolutionStep]:
        field = self.field
        origin = (0,) * self.n
        steps = [ResolutionStep(0, (0,), (origin,), ((),), True)]
        for i in range(1, i_max + 1):
            prev = steps[i - 1]
            if not prev.generator_degrees:
                steps.append(ResolutionStep(i, (), (), (), True))
                continue
            prev_maxdeg = max(prev.generator_degrees)
            margin = self.max_gen_degree
            if self.socle_top is not None:
                # Every cofactor is a standard monomial, so nothing new can
                # appear beyond the socle-shifted top degree.
                scan_top = min(self.d_max, prev_maxdeg + self.socle_top)
                exact_complete = prev_maxdeg + self.socle_top <= self.d_max
            else:
                scan_top = self.d_max
                exact_complete = False

            new_degrees: list[int] = []
            new_mdegs: list[Multidegree] = []
            new_columns: list[tuple[ColumnEntry, ...]] = []
            prev_kernels: dict[Multidegree, list[tuple]] = {}
            prev_blocks: dict[Multidegree, list[int]] = {}
            quiescent = False
            for d in range(scan_top + 1):
                last_new = new_degrees[-1] if new_degrees else 0
                if (
                    not self.exhaustive
                    and not exact_complete
                    and d > max(prev_maxdeg, last_new) + margin
                ):
                    # A full generator-degree span past both the previous
                    # step's top and the last find yielded nothing new:
                    # treat the step as finished early.
                    quiescent = True
                    break
                blocks = self._blocks(prev.generator_multidegrees, prev.generator_degrees, d)
                if i >= 2:
                    target = steps[i - 2]
                    target_blocks = self._blocks(
                        target.generator_multidegrees, target.generator_degrees, d
                    )
                kernels: dict[Multidegree, list] = {}
                for a in sorted(blocks):
                    block = blocks[a]
                    if i == 1:
                        # Augmentation F_0 -> k: injective in degree 0, zero above.
                        if d == 0:
                            kernel: list = []
                        elif self._gf2:
                            kernel = [1] if block else []
                        else:
                            kernel = [(field.one,)] if block else []
                    else:
                        target_row = {
                            t: r for r, t in enumerate(target_blocks.get(a, ()))
                        }
                        if self._gf2:
                            kernel = nullspace_gf2(
                                self._block_rows_gf2(
                                    prev.columns,
                                    prev.generator_multidegrees,
                                    block,
                                    target_row,
                                    a,
                                ),
                                len(block),
                            )
                        else:
                            mat = self._block_matrix(
                                prev.columns,
                                prev.generator_multidegrees,
                                block,
                                target_row,
                                a,
                            )
                            kernel = nullspace(mat)
                    kernels[a] = kernel
                    if not kernel:
                        continue
                    if self._gf2:
                        span = self._shift_span_gf2(prev_kernels, prev_blocks, a, block)
                        chosen = echelon_extension_gf2(span, kernel)
                    else:
                        span = self._shift_span(prev_kernels, prev_blocks, a, block)
                        chosen = echelon_extension(field, span, kernel, len(block))
                    for idx in chosen:
                        kv = kernel[idx]
                        entries = []
                        for r, j in enumerate(block):
                            c = (kv >> r & 1) if self._gf2 else kv[r]
                            if c != field.zero:
                                w = tuple(
                                    x - y
                                    for x, y in zip(a, prev.generator_multidegrees[j])
                                )
                                if sum(w) == 0:
                                    raise RuntimeError(
                                        "minimality violated: unit entry in a "
                                        "syzygy column"
                                    )
                                entries.append(ColumnEntry(j, w, c))
                        new_degrees.append(d)
                        new_mdegs.append(a)
                        new_columns.append(tuple(entries))
                prev_kernels, prev_blocks = kernels, blocks

            if exact_complete or quiescent:
                complete = True
            else:
                window = range(scan_top - margin + 1, scan_top + 1)
                complete = not any(d in window for d in new_degrees)
            steps.append(
                ResolutionStep(
                    i,
                    tuple(new_degrees),
                    tuple(new_mdegs),
                    tuple(new_columns),
                    complete,
                )
            )
        return steps


def resolve_residue_field(
    ideal: MonomialIdeal,
    i_max: int,
    d_max: int | None = None,
    field: FieldSpec = QQ,
) -> list[ResolutionStep]:
    """Minimal free resolution of k over R = Q/I, up to homological degree i_max.

    d_max caps the internal degrees scanned for syzygies (default: i_max
    times the top generator degree).  A step usually stops well below the
    cap: for Artinian quotients at the exact socle-shifted bound, otherwise
    once a full generator-degree span of degrees yields nothing new.  Each
    step carries a completeness flag; it is exact in the Artinian case and
    records an empty trailing window otherwise.
    """
    if not in_m_squared(ideal):
        raise ValueError("residue-field resolution requires an ideal inside m^2")
    if i_max < 0:
        raise ValueError("i_max must be nonnegative")
    if d_max is None:
        d_max = i_max * max((sum(r) for r in ideal.rows), default=2)
    if d_max < i_max:
        raise ValueError("d_max must be at least i_max")
    return _Resolver(ideal, field, d_max).run(i_max)


def poincare_coefficients(steps) -> TruncatedSeries:
    """Betti numbers of the residue field from resolution steps; all must be complete."""
    for step in steps:
        if not step.complete:
            raise IncompleteResolutionError(
                f"resolution step {step.index} may be missing generators; "
                "increase the degree window"
            )
    return TruncatedSeries(tuple(len(s.generator_degrees) for s in steps))


@dataclass(frozen=True)
class ComparisonReport:
    """Side-by-side Poincare coefficients against the geometric bound."""

    order: int
    left: TruncatedSeries
    right: TruncatedSeries
    left_complete: tuple[bool, ...]
    koszul_totals: tuple[int, ...]
    gap_index: int | None
    witness: SerreGapWitness | None
    equal_up_to: int | None


def serre_compare(
    ideal: MonomialIdeal,
    order: int,
    field: FieldSpec = QQ,
    d_max: int | None = None,
) -> ComparisonReport:
    """Compare residue-field Betti numbers with the bound, coefficient by coefficient.

    A strict gap certifies a nontrivial deviation only at indices where every
    step so far is complete; a computed left coefficient exceeding the bound
    is impossible and raises.
    """
    if not in_m_squared(ideal):
        raise ValueError("series comparison requires an ideal inside m^2")
    n = ideal.context.n
    engine = KoszulEngine(ideal, field)
    totals = engine.betti_table().totals
    right = serre_bound(n, {i: totals[i] for i in range(1, n + 1)}, order)
    steps = resolve_residue_field(ideal, order, d_max, field)
    left = TruncatedSeries(tuple(len(s.generator_degrees) for s in steps))
    flags = []
    ok = True
    for s in steps:
        ok = ok and s.complete
        flags.append(ok)
    gap_index = None
    witness = None
    for i in range(order + 1):
        if flags[i] and left[i] > right[i]:
            raise RuntimeError(
                f"computed coefficient {left[i]} exceeds the bound {right[i]} at "
                f"index {i}; this indicates an internal error"
            )
        if left[i] < right[i]:
            gap_index = i
            if flags[i]:
                witness = SerreGapWitness(i, left[i], right[i], field.label)
            break
    equal_up_to = order if gap_index is None else None
    return ComparisonReport(
        order,
        left,
        right,
        tuple(flags),
        totals,
        gap_index,
        witness,
        equal_up_to,
    )


def multigraded_serre_bound(
    ideal: MonomialIdeal,
    i_max: int,
    degree_cap: int,
    field: FieldSpec = QQ,
) -> dict[tuple[int, Multidegree], int]:
    """Bound refined by multidegree: rank of the generic resolution of k whose
    i-th module is (exterior algebra on the variables) tensor (tensor algebra
    on the shifted Koszul homology), keeping only multidegrees of total degree
    at most degree_cap.

    Summing over all multidegrees of one homological index recovers the
    serre_bound coefficient whenever the cap exceeds every contributing total
    degree.  The residue-field Betti number at (i, a) never exceeds this rank,
    so a strict shortfall at any single multidegree is a certified deviation
    from the bound.
    """
    n = ideal.context.n
    table = KoszulEngine(ideal, field).betti_table()
    hterms = [
        (p + 1, a, dim)
        for p, a, dim in table.entries
        if p >= 1 and sum(a) <= degree_cap
    ]
    origin = (0,) * n
    words: dict[tuple[int, Multidegree], int] = {(0, origin): 1}
    frontier = dict(words)
    while frontier:
        grown: dict[tuple[int, Multidegree], int] = {}
        for (ti, a), c in frontier.items():
            for tj, b, dim in hterms:
                key = (ti + tj, tuple(x + y for x, y in zip(a, b)))
                if key[0] > i_max or sum(key[1]) > degree_cap:
                    continue
                grown[key] = grown.get(key, 0) + c * dim
        for key, c in grown.items():
            words[key] = words.get(key, 0) + c
        frontier = grown
    out: dict[tuple[int, Multidegree], int] = {}
    for (ti, a), c in words.items():
        for mask in range(1 << n):
            sq = tuple((mask >> k) & 1 for k in range(n))
            key = (ti + sum(sq), tuple(x + y for x, y in zip(a, sq)))
            if key[0] > i_max or sum(key[1]) > degree_cap:
                continue
            out[key] = out.get(key, 0) + c
    return out


@dataclass(frozen=True)
class MultigradedComparisonReport:
    """Residue-field Betti numbers against the refined bound, multidegree by
    multidegree, over all total degrees up to the cap."""

    i_max: int
    degree_cap: int
    field_label: str
    deficiencies: tuple[tuple[int, Multidegree, int, int], ...]
    pairs_checked: int
    witness: MultigradedSerreGapWitness | None


def serre_compare_multigraded(
    ideal: MonomialIdeal,
    i_max: int,
    degree_cap: int,
    field: FieldSpec = QQ,
) -> MultigradedComparisonReport:
    """Compare bigraded Betti numbers of k with the multigraded bound.

    The resolution is scanned exhaustively through every internal degree up
    to the cap, which makes each count below the cap exact regardless of the
    completeness heuristics used for full-series comparisons: a syzygy at
    multidegree a only ever involves generators of strictly smaller total
    degree.  Any shortfall is therefore a sound deviation witness, and the
    first one (ordered by total degree, then homological index, then
    multidegree) is returned as a certificate.
    """
    if not in_m_squared(ideal):
        raise ValueError("series comparison requires an ideal inside m^2")
    if i_max < 0:
        raise ValueError("i_max must be nonnegative")
    if degree_cap < 0:
        raise ValueError("degree_cap must be nonnegative")
    steps = _Resolver(ideal, field, degree_cap, exhaustive=True).run(i_max)
    counts: dict[tuple[int, Multidegree], int] = {}
    for step in steps:
        for a in step.generator_multidegrees:
            key = (step.index, a)
            counts[key] = counts.get(key, 0) + 1
    bound = multigraded_serre_bound(ideal, i_max, degree_cap, field)
    deficiencies = []
    for (i, a), right in sorted(bound.items(), key=lambda kv: (sum(kv[0][1]), kv[0][0], kv[0][1])):
        left = counts.get((i, a), 0)
        if left > right:
            raise RuntimeError(
                f"computed rank {left} exceeds the bound {right} at index {i}, "
                f"multidegree {a}; this indicates an internal error"
            )
        if left < right:
            deficiencies.append((i, a, left, right))
    extra = set(counts) - set(bound)
    if extra:
        raise RuntimeError(
            f"resolution generators outside the bound support: {sorted(extra)[:3]}"
        )
    witness = None
    if deficiencies:
        i, a, left, right = deficiencies[0]
        witness = MultigradedSerreGapWitness(i, a, left, right, field.label)
    return MultigradedComparisonReport(
        i_max,
        degree_cap,
        field.label,
        tuple(deficiencies),
        len(bound),
        witness,
    )
