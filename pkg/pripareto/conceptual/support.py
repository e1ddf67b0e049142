# -*- coding: utf-8 -*-#
"""Reproducible random stream shared by the optimizers."""
from __future__ import annotations

from typing import Optional, Sequence

import numpy as np


class RandomStream:
    """
    Seeded random stream. PCG64 yields the same sequence on every platform, so (algorithm, seed, config)
    fully determines a run.
    """

    def __init__(self, seed: int) -> None:
        """
        Initialize the stream
        :param seed: 64-bit seed
        """
        self.seed = int(seed)
        self.generator = np.random.Generator(np.random.PCG64(self.seed))

    def random(self, size: Optional[int | Sequence[int]] = None):
        return self.generator.random(size)

    def uniform(self, low, high, size: Optional[int | Sequence[int]] = None):
        return self.generator.uniform(low, high, size)

    def integers(self, low: int, high: Optional[int] = None, size=None):
        return self.generator.integers(low, high, size)

    def permutation(self, n: int) -> np.ndarray:
        return self.generator.permutation(n)

    def choice(self, n: int, size: int, replace: bool = False) -> np.ndarray:
        return self.generator.choice(n, size=size, replace=replace)

    def __repr__(self) -> str:
        return f"RandomStream(seed={self.seed})"
