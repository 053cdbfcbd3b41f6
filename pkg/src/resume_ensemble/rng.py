"""Order-independent random streams keyed by tuples of identifiers."""

from __future__ import annotations

import hashlib
import random


def derive_seed(*parts: object) -> int:
    text = "\x1f".join(str(p) for p in parts)
    return int.from_bytes(hashlib.sha256(text.encode("utf-8")).digest()[:8], "big")


def derive_rng(*parts: object) -> random.Random:
    """A fresh generator whose stream depends only on ``parts``."""
    return random.Random(derive_seed(*parts))
