"""
Enumeration of all finite topologies on a small number of points
Every finite topology is a preorder; spaces are grown one point at a time
"""

import logging
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

import numpy as np

from ..exceptions import CapExceededError
from .topology import TopSpace

logger = logging.getLogger(__name__)

ENUMERATION_CAP = 7
# 6,129,859 labeled preorders on seven points; only representatives go that far
LABELED_CAP = 6

# Preorders on n labeled points, and up to isomorphism (OEIS A000798, A001930)
LABELED_COUNTS = (1, 4, 29, 355, 6942, 209527)
UNLABELED_COUNTS = (1, 3, 9, 33, 139, 718, 4535)

# cols[y] = closure of {y}; rows[x] = points whose closure contains x
Preorder = Tuple[Tuple[int, ...], Tuple[int, ...]]


def _popcount(bits: int) -> int:
    return bin(bits).count("1")


def _extend(cols: Tuple[int, ...], rows: Tuple[int, ...]) -> Iterator[Preorder]:
    """
    Add one point m to a preorder on points 0..m-1

    D (points below m) must be closed, U (points above m) must be open,
    and every point of D must already lie below every point of U.
    """
    m = len(cols)
    new_bit = 1 << m
    masks = range(1 << m)
    downs = [d for d in masks if all(cols[x] & ~d == 0 for x in range(m) if d >> x & 1)]
    ups = [u for u in masks if all(rows[y] & ~u == 0 for y in range(m) if u >> y & 1)]

    for d in downs:
        for u in ups:
            if any(d & ~cols[y] for y in range(m) if u >> y & 1):
                continue
            new_cols = tuple(cols[y] | (new_bit if u >> y & 1 else 0) for y in range(m)) + (d | new_bit,)
            new_rows = tuple(rows[x] | (new_bit if d >> x & 1 else 0) for x in range(m)) + (u | new_bit,)
            yield new_cols, new_rows


def _labeled(point_count: int) -> Iterator[Preorder]:
    if point_count == 1:
        yield (1,), (1,)
        return
    for cols, rows in _labeled(point_count - 1):
        yield from _extend(cols, rows)


def _to_space(cols: Tuple[int, ...]) -> TopSpace:
    n = len(cols)
    spec = np.zeros((n, n), dtype=bool)
    for y, mask in enumerate(cols):
        for x in range(n):
            if mask >> x & 1:
                spec[x, y] = True
    return TopSpace(spec)


def _point_labels(cols: Tuple[int, ...], rows: Tuple[int, ...]) -> List[tuple]:
    """Degree labels refined once by the labels of neighbours"""
    n = len(cols)
    base = [(_popcount(cols[x]), _popcount(rows[x])) for x in range(n)]
    labels = []
    for x in range(n):
        below = sorted(base[w] for w in range(n) if w != x and cols[x] >> w & 1)
        above = sorted(base[z] for z in range(n) if z != x and rows[x] >> z & 1)
        labels.append((base[x], tuple(below), tuple(above)))
    return labels


def fingerprint(cols: Tuple[int, ...], rows: Tuple[int, ...]) -> tuple:
    """Isomorphism-invariant key: sorted multiset of refined point labels"""
    return tuple(sorted(_point_labels(cols, rows)))


def _isomorphic(a: Preorder, b: Preorder) -> bool:
    cols_a, rows_a = a
    cols_b, rows_b = b
    n = len(cols_a)
    labels_a = _point_labels(cols_a, rows_a)
    labels_b = _point_labels(cols_b, rows_b)
    image = [-1] * n
    used = [False] * n

    def related(cols: Tuple[int, ...], x: int, y: int) -> bool:
        return bool(cols[y] >> x & 1)

    def place(p: int) -> bool:
        if p == n:
            return True
        for q in range(n):
            if used[q] or labels_a[p] != labels_b[q]:
                continue
            consistent = all(
                related(cols_a, p, r) == related(cols_b, q, image[r]) and related(cols_a, r, p) == related(cols_b, image[r], q)
                for r in range(p)
            )
            if not consistent:
                continue
            image[p], used[q] = q, True
            if place(p + 1):
                return True
            image[p], used[q] = -1, False
        return False

    return place(0)


def _check_cap(point_count: int, cap: int) -> None:
    if not 1 <= point_count <= cap:
        raise CapExceededError(f"Space enumeration supports 1..{cap} points, got {point_count}")


@lru_cache(maxsize=None)
def _representatives(point_count: int) -> Tuple[Preorder, ...]:
    """
    One preorder per isomorphism class, in order of first appearance

    Deleting the last point of any preorder leaves one isomorphic to a
    smaller representative, so extending representatives reaches every class.
    """
    if point_count == 1:
        return (((1,), (1,)),)

    found: List[Preorder] = []
    buckets: Dict[tuple, List[Preorder]] = {}
    for cols, rows in _representatives(point_count - 1):
        for preorder in _extend(cols, rows):
            bucket = buckets.setdefault(fingerprint(*preorder), [])
            if any(_isomorphic(preorder, seen) for seen in bucket):
                continue
            bucket.append(preorder)
            found.append(preorder)
    logger.debug("%d isomorphism classes on %d points", len(found), point_count)
    return tuple(found)


def enumerate_preorders(point_count: int, dedup: bool = False, cap: int = ENUMERATION_CAP) -> Iterator[Preorder]:
    """Raw (cols, rows) masks; see enumerate_spaces"""
    if dedup:
        _check_cap(point_count, cap)
        yield from _representatives(point_count)
    else:
        _check_cap(point_count, min(cap, LABELED_CAP))
        yield from _labeled(point_count)


def enumerate_spaces(point_count: int, dedup: bool = False, cap: int = ENUMERATION_CAP) -> Iterator[TopSpace]:
    """
    Stream every topology on point_count points

    With dedup, one representative per isomorphism class is yielded (up to
    seven points, cached per size). Labeled generation stops at six points.
    """
    count = 0
    for cols, _ in enumerate_preorders(point_count, dedup=dedup, cap=cap):
        count += 1
        yield _to_space(cols)
    logger.debug("Enumerated %d spaces on %d points (dedup=%s)", count, point_count, dedup)


def spaces_up_to(max_points: int, dedup: bool = True, cap: int = ENUMERATION_CAP) -> Iterator[TopSpace]:
    """All spaces with 1..max_points points, smallest first"""
    _check_cap(max_points, cap)
    for m in range(1, max_points + 1):
        yield from enumerate_spaces(m, dedup=dedup, cap=cap)
