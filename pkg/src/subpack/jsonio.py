"""Deterministic JSON emission with 17-significant-digit floats.

``json.dumps`` writes the shortest round-trip repr of a float; the file
contracts here ask for 17 significant digits, so floats are formatted by
hand. Output is byte-stable for equal inputs.
"""
from __future__ import annotations

import json
import math

import numpy as np


def format_float(x: float) -> str:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot encode non-finite float {x!r}")
    # -0.0 does not survive a complex round trip, so write it as 0
    return format(x + 0.0, ".17g")


def _scalar(obj) -> str:
    if obj is None:
        return "null"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        if not math.isfinite(obj):
            return "null"
        return format_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    raise TypeError(f"unsupported type {type(obj).__name__}")


def _is_flat(seq) -> bool:
    """True for lists nested at most two deep, e.g. a basis row of [re, im] pairs."""
    for item in seq:
        if isinstance(item, dict):
            return False
        if isinstance(item, (list, tuple)):
            if any(isinstance(x, (list, tuple, dict)) for x in item):
                return False
    return True


def dumps(obj, indent: int = 2, _level: int = 0) -> str:
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if _is_flat(obj):
            return "[" + ", ".join(dumps(x, indent, _level + 1) for x in obj) + "]"
        items = [pad + dumps(x, indent, _level + 1) for x in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    return _scalar(obj)
