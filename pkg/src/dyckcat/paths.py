"""Lattice-path model: up/down/catastrophe steps and valid paths.

A step is encoded as its vertical displacement: ``+1`` for an up-step U,
``-1`` for a down-step D, and ``-k`` (k >= 2) for a catastrophe C_k.  A
drop of exactly one is always a D; catastrophes of size one are never
materialized.  A valid path starts and ends at height 0, never dips below
the axis, and takes a catastrophe C_k only from height exactly k (so every
catastrophe lands on the axis).

Path words use the tokens ``U``, ``D`` and ``C<k>`` with no separators,
e.g. ``UUC2UUUDUDDUC2UD``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

UP = 1
DOWN = -1

# Enumeration beyond this length is refused by the class/representative
# helpers; the counts grow like 2^n.
DEFAULT_MAX_LENGTH = 16


class PathError(ValueError):
    """Base class for all path-model errors."""


class WordSyntaxError(PathError):
    """Token-level violation in a path word (stray characters, C1, C0...)."""


class NegativeHeight(PathError):
    """A prefix of the path dips below the x-axis."""


class CatastropheHeightMismatch(PathError):
    """A catastrophe C_k is taken from a height different from k."""


class OpenPath(PathError):
    """The path does not end on the x-axis."""


class PositionOutOfRange(PathError):
    """A 1-based position is outside the valid range."""


class NoCatastrophe(PathError):
    """An operation requiring a catastrophe was given a pure Dyck path."""


class BruteForceBoundExceeded(PathError):
    """Requested exhaustive work above the configured length bound."""


def catastrophe(size: int) -> int:
    """Encode a catastrophe step of the given size (>= 2)."""
    if size < 2:
        raise WordSyntaxError(f"catastrophe size must be >= 2, got {size}")
    return -size


def is_up(step: int) -> bool:
    return step == UP


def is_down(step: int) -> bool:
    return step == DOWN


def is_catastrophe(step: int) -> bool:
    return step <= -2


def catastrophe_size(step: int) -> int:
    if not is_catastrophe(step):
        raise PathError(f"step {step} is not a catastrophe")
    return -step


def step_token(step: int) -> str:
    if step == UP:
        return "U"
    if step == DOWN:
        return "D"
    if step <= -2:
        return f"C{-step}"
    raise WordSyntaxError(f"invalid step encoding {step}")


class Path:
    """An immutable, validated Dyck path with catastrophes."""

    __slots__ = ("steps", "heights")

    def __init__(self, steps: Iterable[int]):
        steps = tuple(steps)
        heights = [0]
        h = 0
        for pos, step in enumerate(steps, start=1):
            if step == UP:
                h += 1
            elif step == DOWN:
                if h == 0:
                    raise NegativeHeight(f"down-step at position {pos} dips below the axis")
                h -= 1
            elif step <= -2:
                if h != -step:
                    raise CatastropheHeightMismatch(
                        f"C{-step} at position {pos} taken from height {h}"
                    )
                h = 0
            else:
                raise WordSyntaxError(f"invalid step encoding {step} at position {pos}")
            heights.append(h)
        if h != 0:
            raise OpenPath(f"path ends at height {h}, not on the axis")
        object.__setattr__(self, "steps", steps)
        object.__setattr__(self, "heights", tuple(heights))

    def __setattr__(self, name, value):
        raise AttributeError("Path is immutable")

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[int]:
        return iter(self.steps)

    def __eq__(self, other) -> bool:
        return isinstance(other, Path) and self.steps == other.steps

    def __hash__(self) -> int:
        return hash(self.steps)

    def __repr__(self) -> str:
        return f"Path({self.word()!r})"

    def __str__(self) -> str:
        return self.word()

    def word(self) -> str:
        return "".join(step_token(s) for s in self.steps)

    def height_before(self, i: int) -> int:
        """Height reached before the i-th step (1-based; i = len+1 gives the final height)."""
        if not 1 <= i <= len(self.steps) + 1:
            raise PositionOutOfRange(f"position {i} not in [1, {len(self.steps) + 1}]")
        return self.heights[i - 1]

    def catastrophe_positions(self) -> tuple[int, ...]:
        """1-based positions of all catastrophe steps."""
        return tuple(i for i, s in enumerate(self.steps, start=1) if is_catastrophe(s))


EMPTY = Path(())

_TOKEN_RE = re.compile(r"U|D|C(\d+)")


def parse_path(word: str) -> Path:
    """Parse a path word; raises the specific violation it hits first."""
    steps = []
    pos = 0
    while pos < len(word):
        m = _TOKEN_RE.match(word, pos)
        if m is None:
            raise WordSyntaxError(f"unexpected character {word[pos]!r} at offset {pos}")
        if m.group(1) is not None:
            size = int(m.group(1))
            if size < 2:
                raise WordSyntaxError(f"catastrophe token {m.group(0)!r}: size must be >= 2")
            steps.append(-size)
        elif m.group(0) == "U":
            steps.append(UP)
        else:
            steps.append(DOWN)
        pos = m.end()
    return Path(steps)


def format_path(p: Path) -> str:
    """Inverse of parse_path: the token word of a path."""
    return p.word()


def _reachable(h: int, m: int) -> bool:
    # From height h with m steps left, can the walk end on the axis?
    if m == 0:
        return h == 0
    if h == 0:
        return m != 1
    return True


@lru_cache(maxsize=None)
def enumerate_paths(n: int) -> tuple[Path, ...]:
    """All valid paths of length n, in lexicographic step order U < D < C_2 < C_3 < ...."""
    if n < 0:
        raise PathError("length must be >= 0")
    out: list[Path] = []
    steps: list[int] = []

    def extend(h: int, m: int) -> None:
        if m == 0:
            out.append(Path(steps))
            return
        if _reachable(h + 1, m - 1):
            steps.append(UP)
            extend(h + 1, m - 1)
            steps.pop()
        if h >= 1 and _reachable(h - 1, m - 1):
            steps.append(DOWN)
            extend(h - 1, m - 1)
            steps.pop()
        if h >= 2 and _reachable(0, m - 1):
            steps.append(-h)
            extend(0, m - 1)
            steps.pop()

    extend(0, n)
    return tuple(out)


@lru_cache(maxsize=None)
def _count_from(h: int, m: int) -> int:
    if m == 0:
        return 1 if h == 0 else 0
    total = _count_from(h + 1, m - 1)
    if h >= 1:
        total += _count_from(h - 1, m - 1)
    if h >= 2:
        total += _count_from(0, m - 1)
    return total


def count_paths(n: int) -> int:
    """Number of valid paths of length n (dynamic program; exact for any n)."""
    if n < 0:
        raise PathError("length must be >= 0")
    return _count_from(0, n)


@dataclass(frozen=True)
class CatDecomposition:
    """Split of a path at its catastrophes.

    ``alphas`` holds r+1 catastrophe-free step blocks and ``sizes`` the r
    catastrophe sizes between them; each alpha before a catastrophe climbs
    from 0 to that size, and the final alpha is a Dyck path.
    """

    alphas: tuple[tuple[int, ...], ...]
    sizes: tuple[int, ...]

    def reassemble(self) -> Path:
        steps: list[int] = []
        for alpha, size in zip(self.alphas, self.sizes):
            steps.extend(alpha)
            steps.append(-size)
        steps.extend(self.alphas[-1])
        return Path(steps)


def decompose_at_catastrophes(p: Path) -> CatDecomposition:
    alphas: list[tuple[int, ...]] = []
    sizes: list[int] = []
    block: list[int] = []
    for step in p.steps:
        if is_catastrophe(step):
            alphas.append(tuple(block))
            sizes.append(-step)
            block = []
        else:
            block.append(step)
    alphas.append(tuple(block))
    return CatDecomposition(tuple(alphas), tuple(sizes))


@lru_cache(maxsize=None)
def dyck_paths(n: int) -> tuple[Path, ...]:
    """All catastrophe-free paths (plain Dyck paths) of length n, lexicographic."""
    if n % 2:
        return ()
    return tuple(p for p in enumerate_paths(n) if not p.catastrophe_positions())
