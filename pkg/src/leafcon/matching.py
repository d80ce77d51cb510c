"""Augmenting-path bipartite matching over bit-set neighbourhoods."""

from __future__ import annotations

from typing import Sequence

from .graph import iter_bits


def saturating_matching(left: Sequence[int], options: Sequence[int]) -> dict[int, int] | None:
    """Match every vertex of ``left`` to a distinct right vertex.

    ``options[i]`` is the bit mask of right vertices allowed for ``left[i]``.
    Returns ``{left vertex: right vertex}`` or ``None`` when no matching
    saturates ``left`` (Kuhn's algorithm; the sides here have size <= k).
    """
    owner: dict[int, int] = {}  # right vertex -> index into left

    def augment(i: int, seen: int) -> tuple[bool, int]:
        for r in iter_bits(options[i] & ~seen):
            seen |= 1 << r
            if r not in owner:
                owner[r] = i
                return True, seen
            ok, seen = augment(owner[r], seen)
            if ok:
                owner[r] = i
                return True, seen
        return False, seen

    for i in range(len(left)):
        ok, _ = augment(i, 0)
        if not ok:
            return None
    return {left[i]: r for r, i in owner.items()}
