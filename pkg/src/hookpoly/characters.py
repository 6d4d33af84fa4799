"""Irreducible symmetric-group characters for hook-shaped partitions.

A hook (a, 1^b) has one row of length a and b further rows of length 1.
Characters are evaluated by the border-strip recursion, which is cheap for
hooks because a strip of any length can be removed in at most two ways:
off the end of the row, or off the end of the column.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

# Degenerate labels that stand for the empty partition.  They arise when a
# strip removal consumes an entire one-row shape (arm shrinks to 0 with no
# legs) or an entire one-column shape (the column of a+b cells vanishes,
# leaving the label (1, -1)).  Both evaluate to the trivial character of
# the empty group; every other out-of-range label contributes 0.
_EMPTY_LABELS = frozenset({(0, 0), (1, -1)})


@dataclass(frozen=True)
class HookLabel:
    """Label (arm, legs) for the partition (arm, 1^legs), possibly degenerate."""

    arm: int
    legs: int

    @property
    def size(self) -> int:
        return self.arm + self.legs

    @property
    def is_hook(self) -> bool:
        """True for an ordinary nonempty hook shape."""
        return self.arm >= 1 and self.legs >= 0

    @property
    def denotes_empty(self) -> bool:
        """True for the two degenerate labels that stand for the empty shape."""
        return (self.arm, self.legs) in _EMPTY_LABELS

    @property
    def is_valid(self) -> bool:
        return self.is_hook or self.denotes_empty


@dataclass(frozen=True)
class CycleType:
    """Multiset of cycle lengths of a permutation, stored descending."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        prev = None
        for p in self.parts:
            if isinstance(p, bool) or not isinstance(p, int) or p < 1:
                raise ValueError(f"cycle length {p!r} is not a positive integer")
            if prev is not None and p > prev:
                raise ValueError("cycle lengths must be stored in descending order")
            prev = p

    @staticmethod
    def from_parts(parts: Sequence[int]) -> "CycleType":
        return CycleType(tuple(sorted(parts, reverse=True)))

    @staticmethod
    def all_ones(n: int) -> "CycleType":
        return CycleType((1,) * n)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def remove_part(self, part: int) -> "CycleType":
        """The type with one occurrence of `part` removed."""
        parts = list(self.parts)
        try:
            parts.remove(part)
        except ValueError:
            raise ValueError(f"cycle type {self.parts} has no part {part}") from None
        return CycleType(tuple(parts))


def cycle_type_of(perm: Sequence[int]) -> CycleType:
    """Cycle type of a permutation given as a mapping sequence of {0..n-1}."""
    n = len(perm)
    seen = [False] * n
    image = [False] * n
    for v in perm:
        if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < n or image[v]:
            raise ValueError("input is not a bijection on {0..n-1}")
        image[v] = True
    lengths = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        lengths.append(length)
    return CycleType(tuple(sorted(lengths, reverse=True)))


@lru_cache(maxsize=None)
def _hook_char(arm: int, legs: int, parts: tuple[int, ...]) -> int:
    # arm >= 1, legs >= 0, parts nonempty with sum arm + legs.
    length = parts[0]
    rest = parts[1:]
    total = 0
    if arm - length >= 1:
        total += _hook_char(arm - length, legs, rest)
    if legs - length >= 0:
        term = _hook_char(arm, legs - length, rest)
        total += term if length % 2 else -term
    if length == arm + legs:
        # The whole remaining hook goes as one strip of height `legs`.
        total += -1 if legs % 2 else 1
    return total


def hook_character(label: HookLabel, ctype: CycleType) -> int:
    """Character of the hook labelled (arm, legs) on the given conjugacy class.

    Degenerate labels outside the empty-shape convention evaluate to 0;
    the empty shape evaluates to 1 on the empty type.  The label's nominal
    size arm + legs must match the type's size.
    """
    if label.size != ctype.size:
        raise ValueError(
            f"label size {label.size} does not match cycle type size {ctype.size}"
        )
    if not label.is_valid:
        return 0
    if label.denotes_empty:
        return 1
    return _hook_char(label.arm, label.legs, ctype.parts)


def hook_dimension(label: HookLabel) -> int:
    """Dimension of the hook representation: C(n-1, arm-1) for size n."""
    if label.denotes_empty:
        return 1
    if not label.is_hook:
        raise ValueError(f"label ({label.arm}, 1^{label.legs}) is not a hook")
    return math.comb(label.size - 1, label.arm - 1)
