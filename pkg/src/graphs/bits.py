"""Bitmask helpers. A vertex set over 0..n-1 is an int whose bit v is set iff v is a member."""

from typing import Iterable, Iterator


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def full_mask(n: int) -> int:
    return (1 << n) - 1


def iter_bits(mask: int) -> Iterator[int]:
    """Yield member vertices in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_tuple(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def popcount(mask: int) -> int:
    return mask.bit_count()


def proper_submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` except ``mask`` itself, the empty mask included."""
    if mask == 0:
        return
    sub = (mask - 1) & mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask
