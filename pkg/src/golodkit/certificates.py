"""Machine-checkable evidence attached to verdicts.

Each certificate is a frozen record holding exact data (exponent vectors,
subset tuples, coefficient strings) sufficient to re-verify the claimed
failure from scratch, independent of the engine that found it.
"""

from __future__ import annotations

from dataclasses import dataclass

Multidegree = tuple[int, ...]


@dataclass(frozen=True)
class Cond1Violation:
    """Product f*g lands outside the ideal.

    f is a generator of I : x_S, g of I : x_T, for disjoint variable subsets
    S and T covering all variables.
    """

    subset_s: tuple[int, ...]
    subset_t: tuple[int, ...]
    f: Multidegree
    g: Multidegree
    product: Multidegree


@dataclass(frozen=True)
class Cond2Violation:
    """Product f*g escapes x_v * (I : (x_S, parts of T)) + I.

    f is a generator of I : x_S, g of I : x_T with S, T, {v} partitioning
    the variables; the product must land in x_v * (I : (x_S u x_T)) + I.
    """

    subset_s: tuple[int, ...]
    subset_t: tuple[int, ...]
    pivot: int
    f: Multidegree
    g: Multidegree
    product: Multidegree


@dataclass(frozen=True)
class KoszulProductWitness:
    """Two positive-degree homology classes with nonzero product.

    Representatives are cycles in the variable-subset basis; the product
    cycle is their wedge, certified non-bounding over the named field.
    """

    field_label: str
    a: Multidegree
    p: int
    rep_a: tuple[tuple[tuple[int, ...], str], ...]
    b: Multidegree
    q: int
    rep_b: tuple[tuple[tuple[int, ...], str], ...]
    product_cycle: tuple[tuple[tuple[int, ...], str], ...]


@dataclass(frozen=True)
class SerreGapWitness:
    """First index where the residue-field Betti number drops below the bound."""

    index: int
    left: int
    right: int
    field_label: str


@dataclass(frozen=True)
class MultigradedSerreGapWitness:
    """One multidegree where the bigraded Betti number drops below the
    multigraded bound; total coefficients can still agree at this index."""

    index: int
    multidegree: Multidegree
    left: int
    right: int
    field_label: str


Certificate = (
    Cond1Violation
    | Cond2Violation
    | KoszulProductWitness
    | SerreGapWitness
    | MultigradedSerreGapWitness
)


def kind(cert: Certificate) -> str:
    return {
        Cond1Violation: "cond1",
        Cond2Violation: "cond2",
        KoszulProductWitness: "koszul_product",
        SerreGapWitness: "serre_gap",
        MultigradedSerreGapWitness: "serre_gap_multigraded",
    }[type(cert)]
