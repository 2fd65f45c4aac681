"""Resource caps for construction and enumeration, plus the env override."""

from __future__ import annotations

import os
from dataclasses import dataclass

ENV_CAPS = "SYLOWLAB_CAPS"


@dataclass(frozen=True)
class Caps:
    """Size limits: group construction, subgroup enumeration, automorphism search."""

    construction: int = 512
    subgroups: int = 64
    automorphisms: int = 24


DEFAULT_CAPS = Caps()


def caps_from_env(environ=None) -> Caps:
    """Read caps from SYLOWLAB_CAPS, format "construction,subgroups,automorphisms".

    An unset variable yields the defaults. A blank field keeps that one
    default, e.g. ",128," only raises the subgroup cap.
    """
    env = os.environ if environ is None else environ
    raw = env.get(ENV_CAPS)
    if raw is None:
        return DEFAULT_CAPS
    parts = [p.strip() for p in raw.split(",")]
    if len(parts) != 3:
        raise ValueError(f"{ENV_CAPS} must be three comma-separated integers, got {raw!r}")
    values = []
    for part, default in zip(parts, (DEFAULT_CAPS.construction, DEFAULT_CAPS.subgroups, DEFAULT_CAPS.automorphisms)):
        if not part:
            values.append(default)
            continue
        try:
            value = int(part)
        except ValueError as exc:
            raise ValueError(f"{ENV_CAPS} field {part!r} is not an integer") from exc
        if value < 1:
            raise ValueError(f"{ENV_CAPS} field {part!r} must be positive")
        values.append(value)
    return Caps(*values)
