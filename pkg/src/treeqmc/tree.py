"""Rooted Cayley tree geometry: coordinates, levels, successor sets, orderings.

A vertex is addressed by its digit path from the root: ``(i_1, ..., i_n)``
with each digit in ``1..k``; the root is the empty tuple.  Forward order of a
level is lexicographic, ``(1,...,1)`` first and ``(k,...,k)`` last, and the
ball ordering (levels concatenated in increasing depth) fixes the tensor-leg
order used by the dense state constructions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ParameterError

TreeCoordinate = tuple[int, ...]

ROOT: TreeCoordinate = ()


def level(x: TreeCoordinate) -> int:
    return len(x)


def parent(x: TreeCoordinate) -> TreeCoordinate:
    if not x:
        raise ParameterError("the root has no parent")
    return x[:-1]


def successors(x: TreeCoordinate, k: int) -> tuple[TreeCoordinate, ...]:
    """Direct successors ((x,1), ..., (x,k)) in forward order."""
    if k < 1:
        raise ParameterError(f"branching order must be >= 1, got {k}")
    return tuple(x + (i,) for i in range(1, k + 1))


@dataclass(frozen=True)
class LevelSet:
    """All vertices at a fixed distance from the root, in forward order."""

    n: int
    vertices: tuple[TreeCoordinate, ...]

    @property
    def forward(self) -> tuple[TreeCoordinate, ...]:
        return self.vertices

    @property
    def backward(self) -> tuple[TreeCoordinate, ...]:
        return tuple(reversed(self.vertices))

    def __len__(self) -> int:
        return len(self.vertices)


def level_set(n: int, k: int) -> LevelSet:
    if n < 0:
        raise ParameterError(f"level must be >= 0, got {n}")
    if k < 1:
        raise ParameterError(f"branching order must be >= 1, got {k}")
    vertices = tuple(itertools.product(range(1, k + 1), repeat=n))
    return LevelSet(n, vertices)


def ball(n: int, k: int) -> tuple[TreeCoordinate, ...]:
    """Vertices within distance n of the root, level by level, forward order.

    This ordering defines the tensor-leg order for dense constructions.
    """
    if n < 0:
        raise ParameterError(f"level must be >= 0, got {n}")
    out: list[TreeCoordinate] = []
    for m in range(n + 1):
        out.extend(level_set(m, k).vertices)
    return tuple(out)


def parse_vertex(text: str) -> TreeCoordinate:
    """Parse the dot-separated vertex syntax; empty string is the root."""
    text = text.strip()
    if not text:
        return ROOT
    digits = []
    for part in text.split("."):
        try:
            d = int(part)
        except ValueError:
            raise ParameterError(f"bad vertex digit {part!r} in {text!r}") from None
        if d < 1:
            raise ParameterError(f"vertex digits must be >= 1, got {d} in {text!r}")
        digits.append(d)
    return tuple(digits)


def format_vertex(x: TreeCoordinate) -> str:
    return ".".join(str(d) for d in x)
