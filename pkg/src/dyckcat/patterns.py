"""Pattern occurrences, occurrence profiles, and the brute-force classifier.

Ten patterns are supported: U, D, C, UU, UD, UC, DC, CU, DU, DD.  A profile
records the 1-based positions where the pattern occurs; for the patterns
that involve a catastrophe (C, UC, DC, CU) the catastrophe size is part of
the profile.  Two same-length paths are equivalent for a pattern exactly
when their profiles coincide.

D-type entries never match a catastrophe: a drop of one is a D, a drop of
k >= 2 is a C_k, and the two are distinct step kinds throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .paths import (
    DEFAULT_MAX_LENGTH,
    BruteForceBoundExceeded,
    Path,
    PathError,
    enumerate_paths,
    is_catastrophe,
    is_down,
    is_up,
)

PATTERNS = ("U", "D", "C", "UU", "UD", "UC", "DC", "CU", "DU", "DD")
SIZED_PATTERNS = frozenset({"C", "UC", "DC", "CU"})


class UnknownPattern(PathError):
    """Pattern id outside the ten supported ones."""


class NotAnOccurrence(PathError):
    """Queried position is not an occurrence of the pattern."""


def _check_pattern(pattern: str) -> str:
    if pattern not in PATTERNS:
        raise UnknownPattern(f"unknown pattern {pattern!r}; expected one of {', '.join(PATTERNS)}")
    return pattern


def pattern_step_count(pattern: str) -> int:
    """Number of steps a single occurrence spans (C counts as one step)."""
    _check_pattern(pattern)
    return 1 if pattern in ("U", "D", "C") else 2


@dataclass(frozen=True)
class Profile:
    """Occurrence profile of one pattern in one path.

    ``positions`` is a sorted tuple of 1-based positions, or of
    (position, catastrophe-size) pairs for the sized patterns.
    """

    kind: str  # "plain" | "sized"
    positions: tuple
    path_length: int

    def to_json(self):
        if self.kind == "plain":
            return list(self.positions)
        return [[pos, size] for pos, size in self.positions]


def occurrences(p: Path, pattern: str) -> Profile:
    """Profile of all occurrences of ``pattern`` in ``p``."""
    _check_pattern(pattern)
    s = p.steps
    n = len(s)
    if pattern in SIZED_PATTERNS:
        found_sized: list[tuple[int, int]] = []
        if pattern == "C":
            for i in range(n):
                if is_catastrophe(s[i]):
                    found_sized.append((i + 1, -s[i]))
        elif pattern == "UC":
            for i in range(n - 1):
                if is_up(s[i]) and is_catastrophe(s[i + 1]):
                    found_sized.append((i + 1, -s[i + 1]))
        elif pattern == "DC":
            for i in range(n - 1):
                if is_down(s[i]) and is_catastrophe(s[i + 1]):
                    found_sized.append((i + 1, -s[i + 1]))
        else:  # CU
            for i in range(n - 1):
                if is_catastrophe(s[i]) and is_up(s[i + 1]):
                    found_sized.append((i + 1, -s[i]))
        return Profile("sized", tuple(found_sized), n)

    found: list[int] = []
    if pattern == "U":
        found = [i + 1 for i in range(n) if is_up(s[i])]
    elif pattern == "D":
        found = [i + 1 for i in range(n) if is_down(s[i])]
    else:
        first, second = pattern
        pred = {"U": is_up, "D": is_down}
        found = [
            i + 1
            for i in range(n - 1)
            if pred[first](s[i]) and pred[second](s[i + 1])
        ]
    return Profile("plain", tuple(found), n)


def occurrence_height(p: Path, i: int, pattern: str) -> int:
    """Minimal ordinate over the lattice points of the occurrence at position i."""
    profile = occurrences(p, pattern)
    if profile.kind == "plain":
        hit = i in profile.positions
    else:
        hit = any(pos == i for pos, _ in profile.positions)
    if not hit:
        raise NotAnOccurrence(f"no {pattern} occurrence at position {i} in {p.word()!r}")
    span = pattern_step_count(pattern)
    return min(p.heights[i - 1 : i + span])


def equivalent(p: Path, q: Path, pattern: str) -> bool:
    """Same length and identical occurrence profiles (sizes included)."""
    _check_pattern(pattern)
    return len(p) == len(q) and occurrences(p, pattern) == occurrences(q, pattern)


def partition_classes(
    n: int, pattern: str, max_length: int = DEFAULT_MAX_LENGTH
) -> dict[Profile, list[Path]]:
    """Bucket all length-n paths by profile, buckets and members in enumeration order."""
    _check_pattern(pattern)
    if n > max_length:
        raise BruteForceBoundExceeded(f"length {n} exceeds brute-force bound {max_length}")
    buckets: dict[Profile, list[Path]] = {}
    for p in enumerate_paths(n):
        buckets.setdefault(occurrences(p, pattern), []).append(p)
    return buckets


@lru_cache(maxsize=None)
def _count_classes_cached(n: int, pattern: str) -> int:
    seen = set()
    for p in enumerate_paths(n):
        seen.add(occurrences(p, pattern))
    return len(seen)


def count_classes(n: int, pattern: str, max_length: int = DEFAULT_MAX_LENGTH) -> int:
    """Number of distinct profiles among length-n paths."""
    _check_pattern(pattern)
    if n > max_length:
        raise BruteForceBoundExceeded(f"length {n} exceeds brute-force bound {max_length}")
    return _count_classes_cached(n, pattern)
