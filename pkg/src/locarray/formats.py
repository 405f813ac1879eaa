"""Stable text and JSON documents for types, spread systems, and arrays.

Array text format: a header line "n k v" followed by n lines of k
space-separated symbols. Type text format: "N <n>" and "v <v>" header lines,
then one "<count> x <sizes...>" line per distinct shape. Spread-system text
format: "N <n>" and "spreads <count>" header lines, then one line per spread
with its tag and comma-joined blocks ("-" for the empty block). JSON mirrors
carry the same fields. Parsers auto-detect JSON input.
"""

from __future__ import annotations

import json

from .arrays import TestArray
from .baranyai import SpreadSystem
from .spread_types import Shape, VType

__all__ = [
    "format_array",
    "format_spread_system",
    "format_type",
    "parse_array",
    "parse_type",
]


def _looks_like_json(text: str) -> bool:
    return text.lstrip().startswith("{")


def format_type(t: VType, fmt: str = "text") -> str:
    if fmt == "json":
        doc = {
            "n": t.n,
            "v": t.v,
            "shapes": [
                {"count": count, "entries": list(shape.entries)} for shape, count in t.items()
            ],
        }
        return json.dumps(doc, indent=2) + "\n"
    lines = [f"N {t.n}", f"v {t.v}"]
    for shape, count in t.items():
        lines.append(f"{count} x {' '.join(str(e) for e in shape.entries)}")
    return "\n".join(lines) + "\n"


def parse_type(text: str) -> VType:
    if _looks_like_json(text):
        doc = json.loads(text)
        shapes = [(Shape(tuple(item["entries"])), int(item["count"])) for item in doc["shapes"]]
        return VType(int(doc["n"]), int(doc["v"]), shapes)
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) < 2 or not lines[0].startswith("N ") or not lines[1].startswith("v "):
        raise ValueError("type document must start with 'N <int>' and 'v <int>' lines")
    n = int(lines[0].split()[1])
    v = int(lines[1].split()[1])
    shapes: list[tuple[Shape, int]] = []
    for ln in lines[2:]:
        head, _, tail = ln.partition(" x ")
        if not tail:
            raise ValueError(f"bad shape line: {ln!r}")
        shapes.append((Shape(tuple(int(e) for e in tail.split())), int(head)))
    return VType(n, v, shapes)


def _block_text(block: tuple[int, ...]) -> str:
    return ",".join(str(e) for e in block) if block else "-"


def format_spread_system(system: SpreadSystem, fmt: str = "text") -> str:
    if fmt == "json":
        doc = {
            "n": system.n,
            "spreads": [
                {"tag": sp.tag, "blocks": [list(b) for b in sp.blocks]} for sp in system.spreads
            ],
        }
        return json.dumps(doc, indent=2) + "\n"
    lines = [f"N {system.n}", f"spreads {len(system.spreads)}"]
    for sp in system.spreads:
        lines.append(f"{sp.tag}: " + " ".join(_block_text(b) for b in sp.blocks))
    return "\n".join(lines) + "\n"


def format_array(arr: TestArray, fmt: str = "text") -> str:
    if fmt == "json":
        doc = {
            "n": arr.n_rows,
            "k": arr.k,
            "v": arr.v,
            "rows": [list(r) for r in arr.rows],
        }
        return json.dumps(doc, indent=2) + "\n"
    lines = [f"{arr.n_rows} {arr.k} {arr.v}"]
    for r in arr.rows:
        lines.append(" ".join(str(a) for a in r))
    return "\n".join(lines) + "\n"


def parse_array(text: str) -> TestArray:
    if _looks_like_json(text):
        doc = json.loads(text)
        arr = TestArray(tuple(tuple(int(a) for a in r) for r in doc["rows"]), int(doc["v"]))
        if arr.n_rows != int(doc["n"]) or arr.k != int(doc["k"]):
            raise ValueError("array JSON header disagrees with its rows")
        return arr
    lines = text.splitlines()
    if not lines:
        raise ValueError("empty array document")
    header = lines[0].split()
    if len(header) != 3:
        raise ValueError("array header must be 'n k v'")
    n, k, v = (int(x) for x in header)
    rows = []
    body = lines[1:]
    if len(body) < n:
        raise ValueError(f"expected {n} rows, found {len(body)}")
    for ln in body[:n]:
        row = tuple(int(a) for a in ln.split())
        if len(row) != k:
            raise ValueError(f"expected {k} entries per row, got {len(row)}")
        rows.append(row)
    return TestArray(tuple(rows), v)
