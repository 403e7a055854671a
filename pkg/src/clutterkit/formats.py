"""Clutter files: a plain text format and a JSON mirror.

Text format::

    # comment
    5 2
    1 2 5
    2 3 5
    3 4 5

The header is ``n d``; each further non-empty line is one circuit written as
ascending 1-based labels.  ``#`` starts a comment anywhere on a line.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .core import MAX_VERTICES, Clutter, full_mask, labels


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _ints(text: str, line: int) -> list[int]:
    try:
        return [int(tok) for tok in text.split()]
    except ValueError:
        raise FormatError(f"expected integers, got {text.strip()!r}", line) from None


def _circuit(labs: list[int], n: int, d: int, line: int | None) -> int:
    if len(labs) != d + 1:
        raise FormatError(f"circuit has {len(labs)} vertices, expected {d + 1}", line)
    if any(b <= a for a, b in zip(labs, labs[1:])):
        raise FormatError("labels must be strictly ascending", line)
    if labs and not (1 <= labs[0] and labs[-1] <= n):
        raise FormatError(f"label out of range 1..{n}", line)
    mask = 0
    for lab in labs:
        mask |= 1 << (lab - 1)
    return mask


def _header(n: int, d: int, line: int | None) -> None:
    if not 0 <= n <= MAX_VERTICES:
        raise FormatError(f"n must be in 0..{MAX_VERTICES}", line)
    if d < 0:
        raise FormatError("d must be >= 0", line)


def loads(text: str) -> Clutter:
    header = None
    circuits: list[int] = []
    seen: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        nums = _ints(body, lineno)
        if header is None:
            if len(nums) != 2:
                raise FormatError("header must be 'n d'", lineno)
            _header(nums[0], nums[1], lineno)
            header = nums
            continue
        mask = _circuit(nums, header[0], header[1], lineno)
        if mask in seen:
            raise FormatError("duplicate circuit", lineno)
        seen.add(mask)
        circuits.append(mask)
    if header is None:
        raise FormatError("missing header 'n d'", 1)
    return Clutter(full_mask(header[0]), header[1], frozenset(circuits))


def _require_standard(c: Clutter) -> None:
    if c.vertices != full_mask(c.n):
        raise ValueError("only clutters on a vertex set [n] can be written; relabel first")


def dumps(c: Clutter) -> str:
    _require_standard(c)
    lines = [f"{c.n} {c.d}"]
    lines.extend(" ".join(map(str, labels(f))) for f in c)
    return "\n".join(lines) + "\n"


def to_json(c: Clutter) -> dict:
    _require_standard(c)
    return {"n": c.n, "d": c.d, "circuits": [list(labels(f)) for f in c]}


def from_json(obj) -> Clutter:
    if not isinstance(obj, dict) or not {"n", "d", "circuits"} <= obj.keys():
        raise FormatError("JSON clutter needs keys n, d, circuits")
    n, d = obj["n"], obj["d"]
    if not isinstance(n, int) or not isinstance(d, int):
        raise FormatError("n and d must be integers")
    _header(n, d, None)
    circuits = set()
    for k, labs in enumerate(obj["circuits"]):
        if not isinstance(labs, list) or not all(isinstance(x, int) for x in labs):
            raise FormatError(f"circuit {k} is not a list of integers")
        mask = _circuit(labs, n, d, None)
        if mask in circuits:
            raise FormatError(f"circuit {k} is a duplicate")
        circuits.add(mask)
    return Clutter(full_mask(n), d, frozenset(circuits))


def load(path: Union[str, Path]) -> Clutter:
    """Read a clutter file; ``.json`` selects the JSON mirror."""
    path = Path(path)
    text = path.read_text()
    if path.suffix == ".json":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(exc.msg, exc.lineno) from None
        return from_json(obj)
    return loads(text)


def save(c: Clutter, path: Union[str, Path]) -> None:
    path = Path(path)
    if path.suffix == ".json":
        path.write_text(json.dumps(to_json(c)) + "\n")
    else:
        path.write_text(dumps(c))
