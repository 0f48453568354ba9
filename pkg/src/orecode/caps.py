"""Global resource caps, overridable through the ``ORECODE_CAP`` variable.

``ORECODE_CAP`` is either a bare integer (the field-size cap) or a comma list
of ``name=value`` pairs, e.g. ``field=65536,budget=1000000``.
"""

from __future__ import annotations

import os

DEFAULTS = {
    "field": 1 << 20,      # largest q for which tables are built
    "budget": 1 << 31,     # weight evaluations in an exhaustive distance scan
    "shallow": 1 << 22,    # scans above this size need the deep flag
    "exponent": 0,         # 0 means the per-polynomial default q^deg * mu
    "divisors": 1 << 20,   # right-divisor enumeration
}


def _parse(raw: str) -> dict[str, int]:
    raw = raw.strip()
    if not raw:
        return {}
    if "=" not in raw:
        return {"field": int(raw)}
    out = {}
    for part in raw.split(","):
        key, _, value = part.partition("=")
        key = key.strip()
        if key not in DEFAULTS:
            raise ValueError(f"unknown cap {key!r}")
        out[key] = int(value)
    return out


def get_cap(name: str) -> int:
    overrides = _parse(os.environ.get("ORECODE_CAP", ""))
    return overrides.get(name, DEFAULTS[name])
