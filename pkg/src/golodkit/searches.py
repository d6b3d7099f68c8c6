"""Seeded random searches: bulk verification and counterexample hunting.

Each trial draws from its own generator stream whose seed is the
trial-index-th output of the master stream, so trials are independent of
evaluation order and may run concurrently; results are merged by trial
index and the report is bit-identical for a fixed (config, version).

Set GOLODKIT_THREADS to run trials in a process pool (0 picks the CPU
count); leave it unset for sequential evaluation.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any

from .criteria import check_condition1, verdict
from .ideals import ideal_product, integral_closure
from .linalg import FieldSpec
from .parsing import format_ideal
from .rings import MonomialIdeal, RingContext, minimalize
from .rng import SplitMix64, nth_output, random_ideal
from .schema import certificate_to_dict

MODES = ("product3", "product4", "closure3", "raw")

# A pair of integrally closed ideals in four variables whose product the
# engines flag as not Golod; --inject places it at trial 0 so a product4
# search always contains at least one interesting instance.
KNOWN_NOT_GOLOD_PAIR = (
    ((0, 0, 2, 0), (0, 1, 1, 0), (0, 4, 0, 0), (1, 0, 1, 0), (1, 2, 0, 0), (2, 0, 0, 0)),
    ((0, 0, 0, 2), (0, 1, 0, 1), (0, 2, 0, 0), (1, 0, 0, 1), (2, 1, 0, 0), (4, 0, 0, 0)),
)


@dataclass(frozen=True)
class SearchConfig:
    mode: str
    trials: int
    seed: int
    gens_lo: int = 2
    gens_hi: int = 5
    max_exp: int = 4
    field: str = "q"
    depth: int = 4
    inject: bool = False

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r} (expected one of {MODES})")
        if self.trials < 0:
            raise ValueError("trials must be nonnegative")
        if not 0 <= self.seed < (1 << 64):
            raise ValueError("seed must fit in 64 bits")
        if not 1 <= self.gens_lo <= self.gens_hi:
            raise ValueError("need 1 <= gens_lo <= gens_hi")
        if self.max_exp < 1:
            raise ValueError("max_exp must be at least 1")
        FieldSpec.from_label(self.field)
        if self.depth < 1:
            raise ValueError("depth must be at least 1")
        if self.inject and self.mode != "product4":
            raise ValueError("inject only applies to mode product4")


@dataclass(frozen=True)
class TrialResult:
    index: int
    inputs: tuple[str, ...]
    status: str
    certificates: tuple[dict, ...] = ()


@dataclass(frozen=True)
class SearchReport:
    config: SearchConfig
    counts: tuple[tuple[str, int], ...]
    archived: tuple[TrialResult, ...]


def _context(n: int) -> RingContext:
    return RingContext(("x", "y", "z") if n == 3 else ("x", "y", "z", "w"))


def _verdict_trial(index: int, j: MonomialIdeal, k: MonomialIdeal, config: SearchConfig) -> TrialResult:
    ctx = j.context
    jk = ideal_product(j, k)
    v = verdict(
        jk,
        field=FieldSpec.from_label(config.field),
        serre_order=config.depth,
    )
    certs = tuple(certificate_to_dict(c, v.ideal.context) for c in v.certificates)
    return TrialResult(
        index,
        (format_ideal(j, ctx), format_ideal(k, ctx)),
        v.status,
        certs,
    )


def run_trial(config: SearchConfig, index: int) -> TrialResult:
    """Evaluate one trial; pure in (config, index)."""
    rng = SplitMix64(nth_output(config.seed, index))
    if config.mode == "product3":
        ctx = _context(3)
        j = random_ideal(rng, ctx, config.gens_lo, config.gens_hi, config.max_exp)
        k = random_ideal(rng, ctx, config.gens_lo, config.gens_hi, config.max_exp)
        return _verdict_trial(index, j, k, config)
    if config.mode == "product4":
        ctx = _context(4)
        if config.inject and index == 0:
            j = minimalize(KNOWN_NOT_GOLOD_PAIR[0], ctx)
            k = minimalize(KNOWN_NOT_GOLOD_PAIR[1], ctx)
        else:
            j = random_ideal(rng, ctx, config.gens_lo, config.gens_hi, config.max_exp)
            k = random_ideal(rng, ctx, config.gens_lo, config.gens_hi, config.max_exp)
        return _verdict_trial(index, j, k, config)
    if config.mode == "closure3":
        ctx = _context(3)
        j = random_ideal(rng, ctx, config.gens_lo, config.gens_hi, config.max_exp)
        k = integral_closure(
            random_ideal(rng, ctx, config.gens_lo, config.gens_hi, config.max_exp, force_m2=True)
        )
        jk = ideal_product(j, k)
        violation = check_condition1(jk, (0,), (1, 2))
        inputs = (format_ideal(j, ctx), format_ideal(k, ctx))
        if violation is None:
            return TrialResult(index, inputs, "pass")
        return TrialResult(
            index, inputs, "violation", (certificate_to_dict(violation, ctx),)
        )
    ctx = _context(3)
    i = random_ideal(rng, ctx, config.gens_lo, config.gens_hi, config.max_exp)
    v = verdict(i, field=FieldSpec.from_label(config.field), serre_order=config.depth)
    certs = tuple(certificate_to_dict(c, v.ideal.context) for c in v.certificates)
    return TrialResult(index, (format_ideal(i, ctx),), v.status, certs)


_INTERESTING = {"not_golod", "violation"}


def run_search(config: SearchConfig) -> SearchReport:
    env = os.environ.get("GOLODKIT_THREADS")
    if env is None or config.trials <= 1:
        results = [run_trial(config, i) for i in range(config.trials)]
    else:
        workers = int(env) or None
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(
                pool.map(run_trial, [config] * config.trials, range(config.trials))
            )
    tally: dict[str, int] = {}
    for r in results:
        tally[r.status] = tally.get(r.status, 0) + 1
    archived = tuple(r for r in results if r.status in _INTERESTING)
    return SearchReport(config, tuple(sorted(tally.items())), archived)


def report_to_dict(report: SearchReport) -> dict[str, Any]:
    c = report.config
    return {
        "mode": c.mode,
        "trials": c.trials,
        "seed": c.seed,
        "gens": [c.gens_lo, c.gens_hi],
        "max_exp": c.max_exp,
        "field": c.field,
        "depth": c.depth,
        "inject": c.inject,
        "counts": dict(report.counts),
        "archived": [
            {
                "index": r.index,
                "inputs": list(r.inputs),
                "status": r.status,
                "certificates": [dict(d) for d in r.certificates],
            }
            for r in report.archived
        ],
    }
