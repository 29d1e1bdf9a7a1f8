"""Sampling configuration and deterministic random streams for genericity choices."""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass


@dataclass(frozen=True)
class SamplingConfig:
    seed: int = 0
    samples: int = 5
    height: int = 100
    stability_required: bool = True

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if self.height < 1:
            raise ValueError("height must be >= 1")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be an unsigned 64-bit integer")


def rng_for(cfg: SamplingConfig, *labels) -> random.Random:
    """Independent stream keyed by (seed, labels); scheduling order never matters."""
    key = repr((cfg.seed, cfg.height) + tuple(labels)).encode()
    digest = hashlib.sha256(key).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def random_int(rng: random.Random, height: int, nonzero: bool = False) -> int:
    while True:
        a = rng.randint(-height, height)
        if a or not nonzero:
            return a
