"""JSON/CSV encoding for state documents, analysis reports and point clouds.

Every float is written with 17 significant digits so values survive a
round trip bit for bit.
"""
from __future__ import annotations

import csv
import io
import json
import math
import os
import tempfile
from typing import Any

from .viz import PointCloud

FORMAT_VERSION = "1"
CSV_HEADER = ("x", "y", "z", "slice", "fiber_id", "param")


class DocumentError(ValueError):
    """Malformed input document."""


def fmt_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite value {x!r}")
    return format(x, ".17g")


def dumps(obj: Any) -> str:
    """Compact JSON with 17-significant-digit floats."""
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return fmt_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        return "{" + ",".join(f"{json.dumps(str(k))}:{dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(dumps(v) for v in obj) + "]"
    if hasattr(obj, "item"):  # numpy scalar
        return dumps(obj.item())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def complex_pair(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def state_document(amplitudes, label: str | None = None) -> dict:
    doc = {"version": FORMAT_VERSION, "amplitudes": [complex_pair(a) for a in amplitudes]}
    if label is not None:
        doc["label"] = label
    return doc


def parse_amplitudes(doc: Any) -> list[complex]:
    if not isinstance(doc, dict):
        raise DocumentError("state document must be a JSON object")
    version = doc.get("version", FORMAT_VERSION)
    if str(version) != FORMAT_VERSION:
        raise DocumentError(f"unsupported document version {version!r}")
    amps = doc.get("amplitudes")
    if not isinstance(amps, list) or len(amps) not in (2, 4):
        raise DocumentError("'amplitudes' must be a list of length 2 or 4")
    out = []
    for pair in amps:
        if (not isinstance(pair, list) or len(pair) != 2
                or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in pair)):
            raise DocumentError(f"amplitude {pair!r} is not a [re, im] pair")
        if not all(math.isfinite(v) for v in pair):
            raise DocumentError("amplitudes must be finite")
        out.append(complex(pair[0], pair[1]))
    if sum(abs(a) ** 2 for a in out) == 0.0:
        raise DocumentError("zero vector cannot be normalized")
    return out


def load_documents(text: str) -> list[Any]:
    """A single JSON value (object or array of objects) or JSON lines."""
    text = text.strip()
    if not text:
        raise DocumentError("empty input")
    try:
        value = json.loads(text)
    except json.JSONDecodeError:
        try:
            return [json.loads(line) for line in text.splitlines() if line.strip()]
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON: {exc}") from None
    return value if isinstance(value, list) else [value]


# --- point clouds ------------------------------------------------------------

def cloud_csv(cloud: PointCloud) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for (x, y, z), sl, fid, par in zip(cloud.xyz, cloud.slice, cloud.fiber_id, cloud.param):
        w.writerow((fmt_float(float(x)), fmt_float(float(y)), fmt_float(float(z)),
                    int(sl), int(fid), fmt_float(float(par))))
    return buf.getvalue()


def cloud_json(cloud: PointCloud) -> str:
    points = [
        {"xyz": [float(c) for c in xyz],
         "meta": {"slice": int(sl), "fiber_id": int(fid), "param": float(par)}}
        for xyz, sl, fid, par in zip(cloud.xyz, cloud.slice, cloud.fiber_id, cloud.param)
    ]
    doc = {"version": FORMAT_VERSION, "points": points}
    if cloud.label:
        doc["label"] = cloud.label
    if cloud.line_fibers:
        doc["line_fibers"] = list(cloud.line_fibers)
    if cloud.stats:
        doc["stats"] = cloud.stats
    return dumps(doc) + "\n"


def atomic_write(path: str, text: str) -> None:
    """Write via a temporary file in the target directory, then rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".hopfq-", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
