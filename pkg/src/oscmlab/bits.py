"""Bitmask helpers for vertex subsets.

A vertex subset of the free layer is an int whose bit v is set when vertex v
belongs to the subset. Vertices are the indices 0..n_v-1.
"""

from itertools import combinations


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def mask_members(mask: int) -> list:
    """Set bits of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_splits(mask: int, k: int):
    """Yield all submasks of ``mask`` with exactly k bits.

    Enumeration is lexicographic over the ascending member list, which is
    what every solver here uses for deterministic tie-breaking.
    """
    members = mask_members(mask)
    for combo in combinations(members, k):
        yield mask_of(combo)
