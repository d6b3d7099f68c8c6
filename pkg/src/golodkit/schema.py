"""JSON shapes for verdicts and certificates.

Every certificate is serialized with enough data to replay it against the
ideal it was issued for: subset indices come with variable names, witness
monomials appear both as exponent vectors and as text.
"""

from __future__ import annotations

from typing import Any

from .certificates import (
    Certificate,
    Cond1Violation,
    Cond2Violation,
    KoszulProductWitness,
    SerreGapWitness,
    kind,
)
from .criteria import GolodVerdict
from .parsing import format_ideal, format_monomial
from .rings import Monomial, RingContext

VERDICT_SCHEMA: dict[str, Any] = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["status", "certificates", "engines", "reduced_context", "timing_ms"],
    "properties": {
        "status": {"enum": ["golod", "not_golod", "inconclusive"]},
        "certificates": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["kind"],
                "properties": {
                    "kind": {
                        "enum": ["cond1", "cond2", "koszul_product", "serre_gap"]
                    }
                },
            },
        },
        "engines": {"type": "array", "items": {"type": "string"}},
        "reduced_context": {
            "type": "object",
            "required": ["variables", "ideal"],
            "properties": {
                "variables": {"type": "array", "items": {"type": "string"}},
                "ideal": {"type": "string"},
            },
        },
        "notes": {"type": "array", "items": {"type": "string"}},
        "timing_ms": {"type": "integer", "minimum": 0},
    },
}


def _monomial_dict(exponents: tuple[int, ...], context: RingContext) -> dict[str, Any]:
    m = Monomial(tuple(exponents))
    return {"exponents": list(exponents), "text": format_monomial(m, context)}


def _subset_names(subset: tuple[int, ...], context: RingContext) -> list[str]:
    return [context.names[i] for i in subset]


def _sparse_vector(terms) -> list[dict[str, Any]]:
    return [{"subset": list(subset), "coeff": coeff} for subset, coeff in terms]


def certificate_to_dict(cert: Certificate, context: RingContext) -> dict[str, Any]:
    k = kind(cert)
    if isinstance(cert, Cond1Violation):
        return {
            "kind": k,
            "subset_s": _subset_names(cert.subset_s, context),
            "subset_t": _subset_names(cert.subset_t, context),
            "f": _monomial_dict(cert.f, context),
            "g": _monomial_dict(cert.g, context),
            "product": _monomial_dict(cert.product, context),
        }
    if isinstance(cert, Cond2Violation):
        return {
            "kind": k,
            "subset_s": _subset_names(cert.subset_s, context),
            "subset_t": _subset_names(cert.subset_t, context),
            "pivot": context.names[cert.pivot],
            "f": _monomial_dict(cert.f, context),
            "g": _monomial_dict(cert.g, context),
            "product": _monomial_dict(cert.product, context),
        }
    if isinstance(cert, KoszulProductWitness):
        return {
            "kind": k,
            "field": cert.field_label,
            "a": {"multidegree": list(cert.a), "p": cert.p},
            "b": {"multidegree": list(cert.b), "p": cert.q},
            "rep_a": _sparse_vector(cert.rep_a),
            "rep_b": _sparse_vector(cert.rep_b),
            "product_cycle": _sparse_vector(cert.product_cycle),
        }
    if isinstance(cert, SerreGapWitness):
        return {
            "kind": k,
            "index": cert.index,
            "left": cert.left,
            "right": cert.right,
            "field": cert.field_label,
        }
    raise TypeError(f"unknown certificate type {type(cert).__name__}")


def verdict_to_dict(v: GolodVerdict, timing_ms: int = 0) -> dict[str, Any]:
    ctx = v.ideal.context
    return {
        "status": v.status,
        "certificates": [certificate_to_dict(c, ctx) for c in v.certificates],
        "engines": list(v.engines_run),
        "reduced_context": {
            "variables": list(ctx.names),
            "ideal": format_ideal(v.ideal, ctx),
        },
        "notes": list(v.notes),
        "timing_ms": timing_ms,
    }
