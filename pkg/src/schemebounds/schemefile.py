"""Text file format for scheme parameters.

A scheme file is a JSON object with fields ``name``, ``classes``, ``order``,
``P`` and optionally ``Q``.  Every number except ``classes`` is a string in
canonical rational form (``"-7"``, ``"3/4"``) so values stay exact::

    {
      "name": "complete(n=3)",
      "classes": 1,
      "order": "3",
      "P": [
        ["1", "2"],
        ["1", "-1"]
      ],
      "Q": [
        ["1", "2"],
        ["1", "-1"]
      ]
    }

The writer always emits ``Q``, deriving it when the input lacked one, and
its output is a fixed point: ``dumps(loads(dumps(s))) == dumps(s)``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .exactmath import (
    RationalFormatError,
    RationalMatrix,
    SingularMatrixError,
    format_rational,
    parse_rational,
)
from .scheme import SchemeParameters

__all__ = ["SchemeFileError", "dumps", "loads", "read_scheme", "write_scheme"]


class SchemeFileError(ValueError):
    """The document is not a well-formed scheme file."""


def _matrix_lines(rows) -> list[str]:
    body = [
        "    [" + ", ".join(json.dumps(format_rational(x)) for x in row) + "]"
        for row in rows
    ]
    return ["[", ",\n".join(body), "  ]"]


def dumps(s: SchemeParameters) -> str:
    lines = [
        "{",
        f'  "name": {json.dumps(s.name)},',
        f'  "classes": {s.d},',
        f'  "order": {json.dumps(str(s.n))},',
        '  "P": ' + "\n".join(_matrix_lines(s.P)) + ",",
        '  "Q": ' + "\n".join(_matrix_lines(s.Q)),
        "}",
    ]
    return "\n".join(lines) + "\n"


def _parse_matrix(value, size: int, field: str) -> RationalMatrix:
    if not isinstance(value, list) or len(value) != size:
        raise SchemeFileError(f"{field} must be a list of {size} rows")
    rows = []
    for r, row in enumerate(value):
        if not isinstance(row, list) or len(row) != size:
            raise SchemeFileError(f"{field} row {r} must have {size} entries")
        parsed = []
        for c, x in enumerate(row):
            if not isinstance(x, str):
                raise SchemeFileError(f"{field}[{r}][{c}] must be a rational string, got {x!r}")
            try:
                parsed.append(parse_rational(x))
            except RationalFormatError as exc:
                raise SchemeFileError(f"{field}[{r}][{c}]: {exc}") from None
        rows.append(parsed)
    return RationalMatrix.from_rows(rows)


def loads(text: str) -> SchemeParameters:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemeFileError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise SchemeFileError("top level must be an object")
    unknown = set(doc) - {"name", "classes", "order", "P", "Q"}
    if unknown:
        raise SchemeFileError(f"unknown fields: {', '.join(sorted(unknown))}")
    for key in ("classes", "order", "P"):
        if key not in doc:
            raise SchemeFileError(f"missing field {key!r}")

    name = doc.get("name", "")
    if not isinstance(name, str):
        raise SchemeFileError("name must be a string")
    d = doc["classes"]
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise SchemeFileError(f"classes must be a positive integer, got {d!r}")
    order = doc["order"]
    if not isinstance(order, str):
        raise SchemeFileError(f"order must be an integer string, got {order!r}")
    try:
        n = parse_rational(order)
    except RationalFormatError as exc:
        raise SchemeFileError(f"order: {exc}") from None
    if n.denominator != 1 or n <= 0:
        raise SchemeFileError(f"order must be a positive integer, got {order!r}")

    P = _parse_matrix(doc["P"], d + 1, "P")
    if doc.get("Q") is None:
        try:
            return SchemeParameters.from_p(P, int(n), name=name)
        except SingularMatrixError as exc:
            raise SchemeFileError(f"Q omitted and P cannot be inverted: {exc}") from None
    Q = _parse_matrix(doc["Q"], d + 1, "Q")
    return SchemeParameters(P=P, Q=Q, n=int(n), name=name)


PathLike = Union[str, Path]


def read_scheme(path: PathLike) -> SchemeParameters:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SchemeFileError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)


def write_scheme(s: SchemeParameters, path: PathLike) -> None:
    Path(path).write_text(dumps(s), encoding="utf-8")
