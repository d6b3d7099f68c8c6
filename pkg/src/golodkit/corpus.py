"""Bundled example corpus with golden-output regression checks.

Each entry is a plain-text file::

    vars: x,y,z
    (x^2, y*z)
    expect: not_golod

The optional third line pins either a verdict status or, when it starts
with "(", the expected integral closure of the ideal on line two.  Golden
JSON files (timing normalized to zero) pin the full machine output so
refactors cannot silently change verdicts or certificates.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any

from .criteria import verdict
from .ideals import integral_closure
from .parsing import format_ideal, parse_ideal
from .rings import MonomialIdeal, RingContext
from .schema import verdict_to_dict

_STATUSES = ("golod", "not_golod", "inconclusive")


def data_dir() -> Path:
    return Path(str(resources.files("golodkit") / "data"))


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    context: RingContext
    ideal: MonomialIdeal
    source: str
    expect_status: str | None = None
    expect_ideal: MonomialIdeal | None = None


def load_entry(path: Path) -> CorpusEntry:
    lines = [l.strip() for l in path.read_text().splitlines() if l.strip()]
    if len(lines) < 2 or not lines[0].startswith("vars:"):
        raise ValueError(f"{path.name}: expected 'vars:' line then an ideal expression")
    context = RingContext(tuple(n.strip() for n in lines[0][5:].split(",")))
    ideal = parse_ideal(lines[1], context)
    expect_status = expect_ideal = None
    if len(lines) > 2:
        if not lines[2].startswith("expect:"):
            raise ValueError(f"{path.name}: third line must start with 'expect:'")
        value = lines[2][7:].strip()
        if value.startswith("("):
            expect_ideal = parse_ideal(value, context)
        elif value in _STATUSES:
            expect_status = value
        else:
            raise ValueError(f"{path.name}: unknown expectation {value!r}")
    return CorpusEntry(path.stem, context, ideal, lines[1], expect_status, expect_ideal)


def list_entries() -> list[CorpusEntry]:
    d = data_dir() / "corpus"
    return [load_entry(p) for p in sorted(d.glob("*.ideal"))]


def evaluate(entry: CorpusEntry) -> dict[str, Any]:
    """Compute the entry's payload: a closure comparison when an ideal is
    expected, otherwise a full verdict."""
    if entry.expect_ideal is not None:
        closed = integral_closure(entry.ideal)
        return {
            "kind": "closure",
            "input": format_ideal(entry.ideal, entry.context),
            "closure": format_ideal(closed, entry.context),
            "matches_expect": closed.gens == entry.expect_ideal.gens,
        }
    v = verdict(entry.ideal)
    payload = verdict_to_dict(v, timing_ms=0)
    payload["kind"] = "verdict"
    if entry.expect_status is not None:
        payload["matches_expect"] = v.status == entry.expect_status
    return payload


def _normalize(payload: dict[str, Any]) -> dict[str, Any]:
    out = dict(payload)
    if "timing_ms" in out:
        out["timing_ms"] = 0
    return out


def golden_path(name: str) -> Path:
    return data_dir() / "golden" / f"{name}.json"


def run_entries(names: list[str] | None = None) -> tuple[bool, list[dict[str, Any]]]:
    """Evaluate entries and compare against expectations and goldens.

    Returns (all_ok, per-entry results)."""
    entries = list_entries()
    if names is not None:
        wanted = set(names)
        entries = [e for e in entries if e.name in wanted]
        missing = wanted - {e.name for e in entries}
        if missing:
            raise ValueError(f"unknown corpus entries: {sorted(missing)}")
    results = []
    all_ok = True
    for entry in entries:
        payload = _normalize(evaluate(entry))
        ok = payload.get("matches_expect", True)
        gp = golden_path(entry.name)
        golden_ok = None
        if gp.exists():
            golden_ok = json.loads(gp.read_text()) == payload
            ok = ok and golden_ok
        all_ok = all_ok and ok
        results.append(
            {
                "name": entry.name,
                "ok": ok,
                "matches_expect": payload.get("matches_expect", True),
                "matches_golden": golden_ok,
                "payload": payload,
            }
        )
    return all_ok, results


def bless(names: list[str] | None = None) -> list[str]:
    """Regenerate golden files; returns the names written."""
    entries = list_entries()
    if names is not None:
        wanted = set(names)
        entries = [e for e in entries if e.name in wanted]
    written = []
    gdir = data_dir() / "golden"
    gdir.mkdir(parents=True, exist_ok=True)
    for entry in entries:
        payload = _normalize(evaluate(entry))
        golden_path(entry.name).write_text(json.dumps(payload, indent=2) + "\n")
        written.append(entry.name)
    return written
