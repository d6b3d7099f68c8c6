"""Golodness decision engines and certificate replay.

For three variables the colon conditions are decisive; in general they are
necessary, so the pipeline can certify NotGolod but returns Inconclusive
when no engine finds an obstruction outside the decisive case.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .certificates import (
    Certificate,
    Cond1Violation,
    Cond2Violation,
    KoszulProductWitness,
    SerreGapWitness,
    kind,
)
from .ideals import (
    colon_by_variables,
    eliminate_variable_generators,
    ideal_sum,
    variable_ideal,
)
from .koszul import KoszulEngine
from .linalg import FieldSpec, QQ
from .rings import Monomial, MonomialIdeal, _member_raw, in_m_squared

Status = str  # "golod" | "not_golod" | "inconclusive"


def _validate_split(n: int, parts: tuple[tuple[int, ...], ...]) -> None:
    seen: set[int] = set()
    total = 0
    for part in parts:
        for i in part:
            if not 0 <= i < n:
                raise ValueError(f"variable index {i} out of range")
        seen.update(part)
        total += len(part)
    if total != len(seen) or seen != set(range(n)):
        raise ValueError("subsets must be disjoint and cover all variables")
    if not parts[0]:
        raise ValueError("the first subset must be nonempty")


def check_condition1(
    ideal: MonomialIdeal, subset_s: tuple[int, ...], subset_t: tuple[int, ...]
) -> Cond1Violation | None:
    """First generator pair of (I:x_S) x (I:x_T) outside I, if any.

    S and T must be disjoint and cover the variables; T may be empty, in
    which case I:x_T is I itself and the check passes vacuously.
    """
    _validate_split(ideal.context.n, (subset_s, subset_t))
    rows = ideal.rows
    left = colon_by_variables(ideal, subset_s)
    right = colon_by_variables(ideal, subset_t)
    for f in left.rows:
        for g in right.rows:
            prod = tuple(a + b for a, b in zip(f, g))
            if not _member_raw(prod, rows):
                return Cond1Violation(subset_s, subset_t, f, g, prod)
    return None


def check_condition2(
    ideal: MonomialIdeal,
    subset_s: tuple[int, ...],
    subset_t: tuple[int, ...],
    pivot: int,
) -> Cond2Violation | None:
    """First generator pair of (I:x_S) x (I:x_T) escaping x_pivot (I:(x_S u x_T)) + I.

    S, T and {pivot} must partition the variables; T may be empty, in which
    case the check passes vacuously.
    """
    _validate_split(ideal.context.n, (subset_s, subset_t, (pivot,)))
    left = colon_by_variables(ideal, subset_s)
    right = colon_by_variables(ideal, subset_t)
    joint = colon_by_variables(ideal, tuple(sorted(set(subset_s) | set(subset_t))))
    shifted = variable_ideal(ideal.context, (pivot,)).gens[0]
    target = ideal_sum(
        MonomialIdeal(
            ideal.context,
            tuple(shifted * m for m in joint.gens),
        )
        if not joint.is_zero()
        else MonomialIdeal(ideal.context, ()),
        ideal,
    )
    target_rows = target.rows
    for f in left.rows:
        for g in right.rows:
            prod = tuple(a + b for a, b in zip(f, g))
            if not _member_raw(prod, target_rows):
                return Cond2Violation(subset_s, subset_t, pivot, f, g, prod)
    return None


def _bipartitions(n: int):
    """Unordered pairs (S, T) of disjoint nonempty subsets covering {0..n-1}."""
    indices = tuple(range(n))
    for size in range(1, n):
        for s in combinations(indices, size):
            if 0 not in s:
                continue
            t = tuple(i for i in indices if i not in s)
            yield s, t


def _pivot_splits(n: int):
    """Triples (S, T, v): v a pivot variable, (S, T) unordered over the rest.

    Ordered by (S, T) so a fixed ideal always yields the same first witness.
    """
    triples = []
    for v in range(n):
        rest = tuple(i for i in range(n) if i != v)
        anchor = rest[0]
        for size in range(1, len(rest)):
            for s in combinations(rest, size):
                if anchor not in s:
                    continue
                t = tuple(i for i in rest if i not in s)
                triples.append((s, t, v))
    triples.sort(key=lambda item: (item[0], item[1]))
    yield from triples


def nec_all(ideal: MonomialIdeal) -> list[Certificate]:
    """All violations of the colon-product conditions over variable splits.

    Both conditions are symmetric in the pair (swap S and T, swap f and g),
    so only unordered splits are scanned.  Splits with T empty always pass
    and are skipped.
    """
    if not in_m_squared(ideal):
        raise ValueError(
            "the colon-product conditions require an ideal inside m^2; "
            "use verdict() to eliminate linear generators first"
        )
    n = ideal.context.n
    out: list[Certificate] = []
    for s, t in _bipartitions(n):
        v = check_condition1(ideal, s, t)
        if v is not None:
            out.append(v)
    for s, t, pivot in _pivot_splits(n):
        v = check_condition2(ideal, s, t, pivot)
        if v is not None:
            out.append(v)
    return out


@dataclass(frozen=True)
class GolodVerdict:
    status: Status
    certificates: tuple[Certificate, ...]
    engines_run: tuple[str, ...]
    ideal: MonomialIdeal
    original: MonomialIdeal
    notes: tuple[str, ...] = ()
    reduction_applied: bool = False

    def __post_init__(self) -> None:
        if self.status not in ("golod", "not_golod", "inconclusive"):
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == "not_golod" and not self.certificates:
            raise ValueError("a not_golod verdict requires a certificate")
        if self.status != "not_golod" and self.certificates:
            raise ValueError("certificates only accompany not_golod verdicts")


def golod3(ideal: MonomialIdeal) -> GolodVerdict:
    """Decide Golodness in three variables via the colon-product conditions."""
    if ideal.context.n != 3:
        raise ValueError("golod3 requires exactly three variables")
    if ideal.is_zero():
        return GolodVerdict("golod", (), ("golod3",), ideal, ideal)
    if not in_m_squared(ideal):
        raise ValueError(
            "golod3 requires generators of degree at least two; use verdict() "
            "to eliminate linear generators first"
        )
    certs = tuple(nec_all(ideal))
    status = "not_golod" if certs else "golod"
    return GolodVerdict(status, certs, ("golod3",), ideal, ideal)


def _koszul_engine(ideal: MonomialIdeal, field: FieldSpec) -> Certificate | None:
    engine = KoszulEngine(ideal, field)
    report = engine.products_trivial()
    if report.trivial:
        return None
    w = report.witness

    def ser(vec_terms):
        return tuple((subset, str(c)) for subset, c in vec_terms)

    return KoszulProductWitness(
        report.field_label,
        w["a"],
        w["p"],
        ser(w["rep_a"]),
        w["b"],
        w["q"],
        ser(w["rep_b"]),
        ser(w["product_cycle"]),
    )


def _serre_engine(
    ideal: MonomialIdeal, field: FieldSpec, order: int
) -> Certificate | None:
    from .poincare import serre_compare

    report = serre_compare(ideal, order, field)
    return report.witness


def verdict(
    ideal: MonomialIdeal,
    engines: tuple[str, ...] = ("nec", "koszul", "serre"),
    field: FieldSpec = QQ,
    serre_order: int = 6,
) -> GolodVerdict:
    """Run engines in order, stopping at the first NotGolod certificate.

    Generators of degree one are eliminated first (they change nothing about
    Golodness); if the reduced ideal lives in three variables inside m^2 the
    decisive engine runs instead and can return Golod.
    """
    if ideal.is_unit():
        raise ValueError("the unit ideal does not define a quotient ring")
    known = ("nec", "koszul", "serre")
    for e in engines:
        if e not in known:
            raise ValueError(f"unknown engine {e!r}")
    reduced, context = eliminate_variable_generators(ideal)
    notes: list[str] = []
    reduction = context.n != ideal.context.n
    if reduction:
        notes.append(
            f"eliminated {ideal.context.n - context.n} linear generator(s); "
            f"reduced to {context.n} variable(s)"
        )
    work = reduced
    if context.n == 3 and in_m_squared(work):
        v = golod3(work)
        return GolodVerdict(
            v.status,
            v.certificates,
            ("golod3",),
            work,
            ideal,
            tuple(notes),
            reduction,
        )
    if work.is_zero():
        # Only the three-variable engine ever certifies Golod; a zero ideal
        # in another dimension leaves a polynomial ring, noted but unclaimed.
        notes.append("reduced ideal is zero: the quotient is a polynomial ring")
        return GolodVerdict(
            "inconclusive", (), ("reduction",), work, ideal, tuple(notes), reduction
        )
    ran: list[str] = []
    for engine in engines:
        ran.append(engine)
        if engine == "nec":
            certs = nec_all(work)
            if certs:
                return GolodVerdict(
                    "not_golod",
                    tuple(certs),
                    tuple(ran),
                    work,
                    ideal,
                    tuple(notes),
                    reduction,
                )
        elif engine == "koszul":
            cert = _koszul_engine(work, field)
            if cert is not None:
                return GolodVerdict(
                    "not_golod",
                    (cert,),
                    tuple(ran),
                    work,
                    ideal,
                    tuple(notes),
                    reduction,
                )
        elif engine == "serre":
            cert = _serre_engine(work, field, serre_order)
            if cert is not None:
                return GolodVerdict(
                    "not_golod",
                    (cert,),
                    tuple(ran),
                    work,
                    ideal,
                    tuple(notes),
                    reduction,
                )
    return GolodVerdict(
        "inconclusive", (), tuple(ran), work, ideal, tuple(notes), reduction
    )


def replay(cert: Certificate, ideal: MonomialIdeal) -> bool:
    """Re-verify a certificate against an ideal from its raw data alone."""
    if isinstance(cert, Cond1Violation):
        left = colon_by_variables(ideal, cert.subset_s)
        right = colon_by_variables(ideal, cert.subset_t)
        prod = tuple(a + b for a, b in zip(cert.f, cert.g))
        return (
            prod == cert.product
            and left.member(Monomial(cert.f))
            and right.member(Monomial(cert.g))
            and not ideal.member(Monomial(cert.product))
        )
    if isinstance(cert, Cond2Violation):
        left = colon_by_variables(ideal, cert.subset_s)
        right = colon_by_variables(ideal, cert.subset_t)
        joint = colon_by_variables(
            ideal, tuple(sorted(set(cert.subset_s) | set(cert.subset_t)))
        )
        shifted = variable_ideal(ideal.context, (cert.pivot,)).gens[0]
        target = ideal_sum(
            MonomialIdeal(ideal.context, tuple(shifted * m for m in joint.gens))
            if not joint.is_zero()
            else MonomialIdeal(ideal.context, ()),
            ideal,
        )
        prod = tuple(a + b for a, b in zip(cert.f, cert.g))
        return (
            prod == cert.product
            and left.member(Monomial(cert.f))
            and right.member(Monomial(cert.g))
            and not target.member(Monomial(cert.product))
        )
    if isinstance(cert, KoszulProductWitness):
        field = FieldSpec.from_label(cert.field_label)
        engine = KoszulEngine(ideal, field)

        def devec(terms, a, p):
            basis = engine.strand(a).basis(p)
            index = {s: i for i, s in enumerate(basis)}
            vec = [field.zero] * len(basis)
            for subset, text in terms:
                vec[index[tuple(subset)]] = field.parse(text)
            return tuple(vec)

        va = devec(cert.rep_a, cert.a, cert.p)
        vb = devec(cert.rep_b, cert.b, cert.q)
        if engine.is_boundary(cert.a, cert.p, va) or engine.is_boundary(
            cert.b, cert.q, vb
        ):
            return False
        ab = tuple(x + y for x, y in zip(cert.a, cert.b))
        region = engine.strand(ab)
        mat = region.differential(cert.p + cert.q)
        prod = engine.wedge(cert.a, cert.p, va, cert.b, cert.q, vb)
        expected = devec(cert.product_cycle, ab, cert.p + cert.q)
        if prod != expected:
            return False
        if all(c == field.zero for c in prod):
            return False
        if any(x != field.zero for x in mat.mul_vector(prod)):
            return False
        return not engine.is_boundary(ab, cert.p + cert.q, prod)
    if isinstance(cert, SerreGapWitness):
        from .poincare import serre_compare

        field = FieldSpec.from_label(cert.field_label)
        report = serre_compare(ideal, cert.index, field)
        return (
            report.left_complete[cert.index]
            and report.left[cert.index] == cert.left
            and report.right[cert.index] == cert.right
            and cert.left < cert.right
        )
    raise TypeError(f"unknown certificate type {type(cert).__name__}")
