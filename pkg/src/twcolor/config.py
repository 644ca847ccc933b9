"""Enumeration caps for the exhaustive oracles.

Defaults can be overridden with the ``TWCOLOR_CAPS`` environment variable,
e.g. ``TWCOLOR_CAPS="subsets=20,chromatic=18,treewidth=12"``.
"""

import os
from dataclasses import dataclass, replace


class SizeError(ValueError):
    """An exhaustive routine was asked to work beyond its configured cap."""


@dataclass(frozen=True)
class Caps:
    subsets: int = 24
    chromatic: int = 16
    treewidth: int = 14


def parse_caps(text: str, base: Caps = Caps()) -> Caps:
    updates = {}
    for item in text.replace(";", ",").split(","):
        item = item.strip()
        if not item:
            continue
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in ("subsets", "chromatic", "treewidth"):
            raise ValueError(f"bad TWCOLOR_CAPS entry {item!r}")
        updates[key] = int(value)
    return replace(base, **updates)


def get_caps() -> Caps:
    """Current caps, honouring ``TWCOLOR_CAPS``."""
    text = os.environ.get("TWCOLOR_CAPS", "")
    return parse_caps(text) if text else Caps()
