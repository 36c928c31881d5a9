"""Deterministic RNG derivation.

All randomness flows from a single master seed. Components derive their
generator from the master seed plus a list of string labels, hashed with
SHA-256, so adding or reordering components never perturbs the streams
of unrelated ones.
"""

from __future__ import annotations

import hashlib

import numpy as np


def derive_key(master_seed: int, *labels) -> list[int]:
    """Stable per-component key: master seed followed by label hashes."""
    key = [int(master_seed) & 0xFFFFFFFFFFFFFFFF]
    for label in labels:
        digest = hashlib.sha256(str(label).encode("utf-8")).digest()
        key.append(int.from_bytes(digest[:8], "little"))
    return key


def derive_rng(master_seed: int, *labels) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(derive_key(master_seed, *labels)))


def derive_seed(master_seed: int, *labels) -> int:
    """A 63-bit integer seed, for components that take a plain seed."""
    material = ",".join(str(k) for k in derive_key(master_seed, *labels))
    digest = hashlib.sha256(material.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "little") >> 1
