"""Trajectory files: CSV (``t,x1,y1,...,xk,yk``) or a JSON document.

JSON documents look like::

    {"k": 3, "frames": [[[x, y], [x, y], [x, y]], ...],
     "times": [...], "tolerances": {"eps_sep": 1e-9}}

``times`` and ``tolerances`` are optional. Floats are written with
``repr`` so files re-read to identical arrays.
"""

from __future__ import annotations

import csv
import io
import json

import numpy as np

from .errors import ParseError
from .loop_tracer import LoopTrajectory

TOLERANCE_KEYS = ("eps_sep", "eps_rank", "eps_close")


def read_trajectory(text: str) -> tuple[LoopTrajectory, dict[str, float]]:
    """Parse either format; returns the loop and any per-file tolerance overrides."""
    if text.lstrip().startswith("{"):
        return _read_json(text)
    return _read_csv(text), {}


def _read_csv(text: str) -> LoopTrajectory:
    rows = list(csv.reader(io.StringIO(text)))
    rows = [(n, r) for n, r in enumerate(rows, 1) if any(c.strip() for c in r)]
    if not rows:
        raise ParseError("empty trajectory file")
    line, header = rows[0]
    header = [h.strip() for h in header]
    k = (len(header) - 1) // 2
    expected = ["t"] + [f"{c}{i}" for i in range(1, k + 1) for c in "xy"]
    if k < 2 or header != expected:
        raise ParseError(f"header must be {','.join(expected) if k >= 2 else 't,x1,y1,x2,y2,...'}", line, 1)
    times, frames = [], []
    for line, row in rows[1:]:
        if len(row) != len(header):
            raise ParseError(f"expected {len(header)} fields, got {len(row)}", line, 1)
        values = []
        col = 1
        for cell in row:
            try:
                values.append(float(cell))
            except ValueError:
                raise ParseError(f"not a number: {cell!r}", line, col) from None
            col += len(cell) + 1
        times.append(values[0])
        frames.append(np.array(values[1:]).reshape(k, 2))
    if len(frames) < 2:
        raise ParseError("a trajectory needs at least 2 frames", line, 1)
    for n in range(1, len(times)):
        if times[n] <= times[n - 1]:
            raise ParseError("t must be strictly increasing", rows[n + 1][0], 1)
    return LoopTrajectory(np.stack(frames), np.array(times))


def _read_json(text: str) -> tuple[LoopTrajectory, dict[str, float]]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict) or "frames" not in doc:
        raise ParseError("JSON trajectory must be an object with a 'frames' field")
    try:
        frames = np.array(doc["frames"], dtype=float)
    except (TypeError, ValueError):
        raise ParseError("frames must be an array of arrays of [x, y] pairs") from None
    if frames.ndim != 3 or frames.shape[2] != 2:
        raise ParseError(f"frames must have shape (T, k, 2), got {frames.shape}")
    if "k" in doc and doc["k"] != frames.shape[1]:
        raise ParseError(f"k = {doc['k']} but frames hold {frames.shape[1]} points")
    overrides = {}
    for key, value in (doc.get("tolerances") or {}).items():
        if key not in TOLERANCE_KEYS:
            raise ParseError(f"unknown tolerance {key!r}")
        overrides[key] = float(value)
    return LoopTrajectory(frames, doc.get("times")), overrides


def write_trajectory(loop: LoopTrajectory, fmt: str = "csv") -> str:
    times = loop.times if loop.times is not None else np.arange(len(loop), dtype=float)
    if fmt == "json":
        doc = {
            "k": loop.k,
            "times": [float(t) for t in times],
            "frames": [[[float(x), float(y)] for x, y in f] for f in loop.frames],
        }
        return json.dumps(doc) + "\n"
    if fmt != "csv":
        raise ValueError(f"unknown trajectory format {fmt!r}")
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["t"] + [f"{c}{i}" for i in range(1, loop.k + 1) for c in "xy"])
    for t, f in zip(times, loop.frames):
        w.writerow([repr(float(t))] + [repr(float(v)) for v in f.ravel()])
    return out.getvalue()
