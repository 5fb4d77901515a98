"""A coarse arithmetic-operation counter for complexity smoke tests.

Hot loops tick this counter once per elementary step (a Britton pinch, a
dynamic-programming candidate, a comparison step, ...).  The absolute value
is meaningless; ratios across inputs of different sizes expose the scaling
behaviour without wall-clock noise.
"""

from __future__ import annotations


class OpCounter:
    __slots__ = ("n",)

    def __init__(self) -> None:
        self.n = 0

    def tick(self, k: int = 1) -> None:
        self.n += k

    def reset(self) -> int:
        """Zero the counter and return the previous value."""
        old = self.n
        self.n = 0
        return old


ops = OpCounter()
