"""
Catalog records and flat-file persistence.

A catalog is JSON-lines: a header object carrying the set size, tool
version and budget parameters, then one record per solution class. Records
store the canonical sigma table plus the computed flags.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Iterable

from .errors import InvalidSolutionError
from .perms import Perm


@dataclass(frozen=True)
class CatalogRecord:
    """Flags of one solution class, keyed by its canonical sigma table.

    For an invalid input (only `analyze` on arbitrary data produces those)
    every field after `valid` is None. `invariants_ok` is None when the
    structural invariant suite was not run (plain enumeration records).
    """

    n: int
    sigma: tuple[Perm, ...]
    valid: bool
    indecomposable: bool | None = None
    irretractable: bool | None = None
    primitive: bool | None = None
    mpl: int | None = None
    group_order: int | None = None
    brace_trivial: bool | None = None
    invariants_ok: bool | None = None

    def __post_init__(self) -> None:
        if self.primitive and not self.indecomposable:
            raise AssertionError("flags inconsistent: primitive implies indecomposable")

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "sigma": [list(row) for row in self.sigma],
            "valid": self.valid,
            "indecomposable": self.indecomposable,
            "irretractable": self.irretractable,
            "primitive": self.primitive,
            "mpl": self.mpl,
            "group_order": self.group_order,
            "brace_trivial": self.brace_trivial,
            "invariants_ok": self.invariants_ok,
        }

    @classmethod
    def from_json(cls, data: dict) -> "CatalogRecord":
        try:
            sigma = tuple(tuple(int(v) for v in row) for row in data["sigma"])
            return cls(
                n=int(data["n"]),
                sigma=sigma,
                valid=bool(data["valid"]),
                indecomposable=data.get("indecomposable"),
                irretractable=data.get("irretractable"),
                primitive=data.get("primitive"),
                mpl=data.get("mpl"),
                group_order=data.get("group_order"),
                brace_trivial=data.get("brace_trivial"),
                invariants_ok=data.get("invariants_ok"),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidSolutionError(f"malformed catalog record: {exc}") from exc


def write_catalog(
    path: str,
    n: int,
    records: Iterable[CatalogRecord],
    budget: dict[str, Any] | None = None,
    version: str = "0.1.0",
) -> None:
    """Write a JSON-lines catalog: header object first, one record per line."""
    header = {
        "header": True,
        "tool": "ybekit",
        "version": version,
        "n": n,
        "budget": budget or {},
    }
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(header, sort_keys=True) + "\n")
        for rec in records:
            fh.write(json.dumps(rec.to_json(), sort_keys=True) + "\n")


def read_catalog(path: str) -> tuple[dict, list[CatalogRecord]]:
    """Read a JSON-lines catalog back as (header, records)."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = [line for line in fh.read().splitlines() if line.strip()]
    if not lines:
        raise InvalidSolutionError("empty catalog file")
    header = json.loads(lines[0])
    if not isinstance(header, dict) or not header.get("header"):
        raise InvalidSolutionError("catalog file does not start with a header line")
    records = [CatalogRecord.from_json(json.loads(line)) for line in lines[1:]]
    return header, records
