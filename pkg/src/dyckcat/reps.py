"""Representative families and canonical maps for nine of the ten patterns.

For each pattern there is one family containing exactly one path per
equivalence class per length, and a constructive map sending any path to
the representative of its class.  The DD pattern is handled by the
``ddnorm`` module; ``canonical`` delegates to it.

Membership predicates are regular-form matchers over the path word; the
shapes (token regexes) are listed next to each family.  Size coherence of
``U^k C_k`` style groups is implied by path validity, so the matchers stay
purely structural.
"""

from __future__ import annotations

import re
from functools import lru_cache

from . import ddnorm
from .paths import (
    DEFAULT_MAX_LENGTH,
    DOWN,
    UP,
    BruteForceBoundExceeded,
    Path,
    decompose_at_catastrophes,
    enumerate_paths,
    is_catastrophe,
    is_down,
    is_up,
)
from .patterns import PATTERNS, UnknownPattern


def _check_pattern(pattern: str) -> str:
    if pattern not in PATTERNS:
        raise UnknownPattern(f"unknown pattern {pattern!r}")
    return pattern


# -- regular-form matchers ---------------------------------------------------

_RE_ALT = re.compile(r"^(?:UD)*$")
_RE_C = re.compile(r"^(?:(?:UD)*U{2,}C\d+)+(?:UD)*$")
_RE_F = re.compile(r"^(?:UD)*(?:U{2,}(?:DU)*D{1,2})*U{2,}(?:DU)*(?:D{1,2}|C\d+|DC\d+)$")
_RE_G_SINGLE = re.compile(r"^(?:UD)*U{2,}C\d+(?:UD)*$")
_RE_G_GENERAL = re.compile(r"^(?:UD)*(?:U+(?:UD)+)+U*(?:C\d+|D)(?:UD)*$")
_RE_I = re.compile(r"^(?:UD)*(?:UUUDC2)?(?:U{2,}C\d+(?:UD)*(?:UUUDC2)?)*$")
_RE_J = re.compile(r"^(?:UD)*(?:UUC2)?(?:U{3,}DC\d+(?:UD)*(?:UUC2)?)*$")
_RE_K2 = re.compile(r"^(?:UD)*(?:UUC2)?$")
_RE_K_GROUPS = re.compile(r"^(?:(?:UD)*U{2,}C\d+)+(?:(?:UD)+|(?:UD)*UUC2)$")
_RE_L = re.compile(r"^U+(?:(?:DU)+U+)*(?:DU)*(?:C\d+|D)$")


def _in_family_u(p: Path) -> bool:
    # Dyck paths, or a single catastrophe located at the very end.
    cats = p.catastrophe_positions()
    return len(cats) == 0 or (len(cats) == 1 and cats[0] == len(p))


def _in_family_d(p: Path) -> bool:
    # At most one catastrophe, anywhere.
    return len(p.catastrophe_positions()) <= 1


def _in_family_c(p: Path) -> bool:
    # (UD)^k, or blocks (UD)^l U^k C_k glued, with an alternating tail.
    w = p.word()
    return bool(_RE_ALT.match(w) or _RE_C.match(w))


def _in_family_uu(p: Path) -> bool:
    # (UD)^k, or up-runs of length >= 2 separated by (DU)^j D / (DU)^j DD
    # descents, closing with an optional catastrophe (size one rendered D).
    w = p.word()
    return bool(_RE_ALT.match(w) or _RE_F.match(w))


def _in_family_ud(p: Path) -> bool:
    w = p.word()
    return bool(_RE_ALT.match(w) or _RE_G_SINGLE.match(w) or _RE_G_GENERAL.match(w))


def _in_family_uc(p: Path) -> bool:
    return bool(_RE_I.match(p.word()))


def _in_family_dc(p: Path) -> bool:
    return bool(_RE_J.match(p.word()))


def _in_family_cu(p: Path) -> bool:
    w = p.word()
    return bool(_RE_K2.match(w) or _RE_K_GROUPS.match(w))


def _in_family_du(p: Path) -> bool:
    if len(p) == 0:
        return True
    return bool(_RE_L.match(p.word()))


_MEMBERSHIP = {
    "U": _in_family_u,
    "D": _in_family_d,
    "C": _in_family_c,
    "UU": _in_family_uu,
    "UD": _in_family_ud,
    "UC": _in_family_uc,
    "DC": _in_family_dc,
    "CU": _in_family_cu,
    "DU": _in_family_du,
}


def is_representative(p: Path, pattern: str) -> bool:
    """Does p belong to the representative family for the pattern?"""
    _check_pattern(pattern)
    if pattern == "DD":
        n = len(p)
        return ddnorm.in_dd_family(p, "R1" if n % 2 else "R2")
    return _MEMBERSHIP[pattern](p)


def representatives_of_length(
    n: int, pattern: str, max_length: int = DEFAULT_MAX_LENGTH
) -> list[Path]:
    """All representatives of length n, in enumeration order."""
    _check_pattern(pattern)
    if n > max_length:
        raise BruteForceBoundExceeded(f"length {n} exceeds brute-force bound {max_length}")
    return [p for p in enumerate_paths(n) if is_representative(p, pattern)]


# -- helpers shared by the constructions -------------------------------------


def _ud_pairs(count: int) -> list[int]:
    return [UP, DOWN] * count


def _du_pairs(count: int) -> list[int]:
    return [DOWN, UP] * count


def _close_with_drop(steps: list[int]) -> list[int]:
    """Append the drop-to-axis step: D from height 1, C_s from height s >= 2."""
    h = sum(1 if s == UP else (-1 if s == DOWN else s) for s in steps)
    if h < 1:
        raise AssertionError("construction reached the axis before its closing drop")
    steps.append(DOWN if h == 1 else -h)
    return steps


def _split_on_pairs(steps: tuple[int, ...], first: int, second: int):
    """Greedy left-to-right split into maximal runs of the adjacent pair
    (first, second) and pair-free chunks.  Returns a list of
    ("block", pair_count) / ("chunk", [steps]) items in path order."""
    items: list[tuple[str, object]] = []
    chunk: list[int] = []
    i = 0
    n = len(steps)
    while i < n:
        if i + 1 < n and steps[i] == first and steps[i + 1] == second:
            if chunk:
                items.append(("chunk", chunk))
                chunk = []
            count = 0
            while i + 1 < n and steps[i] == first and steps[i + 1] == second:
                count += 1
                i += 2
            items.append(("block", count))
        else:
            chunk.append(steps[i])
            i += 1
    if chunk:
        items.append(("chunk", chunk))
    return items


def _split_at_two_step_occurrences(steps: tuple[int, ...], positions: list[int]):
    """Cut out two-step occurrences starting at the given 0-based indices;
    returns the r+1 gap segments between/around them."""
    segments = []
    prev = 0
    for i in positions:
        segments.append(steps[prev:i])
        prev = i + 2
    segments.append(steps[prev:])
    return segments


# -- canonical constructions --------------------------------------------------


def _canonical_u(p: Path) -> Path:
    dec = decompose_at_catastrophes(p)
    r = len(dec.sizes)
    if r == 0:
        return p
    total = sum(dec.sizes)
    steps: list[int] = []
    for alpha in dec.alphas[:-1]:
        steps.extend(alpha)
        steps.append(DOWN)
    steps.pop()  # the slot of the last catastrophe is filled below
    tail = dec.alphas[-1]
    if tail:
        # tail is a nonempty Dyck block, hence ends with a down-step
        steps.append(DOWN)
        steps.extend(tail[:-1])
    steps.append(-(total - (r - 1)))
    return Path(steps)


def _canonical_d(p: Path) -> Path:
    if len(p.catastrophe_positions()) <= 1:
        return p
    return ddnorm.collapse_catastrophes(p)


def _canonical_c(p: Path) -> Path:
    dec = decompose_at_catastrophes(p)
    if not dec.sizes:
        return Path(_ud_pairs(len(p) // 2))
    steps: list[int] = []
    for alpha, k in zip(dec.alphas, dec.sizes):
        steps.extend(_ud_pairs((len(alpha) - k) // 2))
        steps.extend([UP] * k)
        steps.append(-k)
    steps.extend(_ud_pairs(len(dec.alphas[-1]) // 2))
    return Path(steps)


def _up_run_spans(steps: tuple[int, ...]) -> list[tuple[int, int]]:
    """Maximal runs of >= 2 consecutive up-steps, as (start, length)."""
    runs = []
    i = 0
    n = len(steps)
    while i < n:
        if steps[i] == UP:
            j = i
            while j < n and steps[j] == UP:
                j += 1
            if j - i >= 2:
                runs.append((i, j - i))
            i = j
        else:
            i += 1
    return runs


def _canonical_uu(p: Path) -> Path:
    runs = _up_run_spans(p.steps)
    if not runs:
        return Path(_ud_pairs(len(p) // 2))
    steps: list[int] = list(p.steps[: runs[0][0]])  # leading (UD)^l, kept verbatim
    for idx, (start, length) in enumerate(runs):
        steps.extend([UP] * length)
        seg_end = runs[idx + 1][0] if idx + 1 < len(runs) else len(p)
        t = seg_end - (start + length)
        last = idx + 1 == len(runs)
        if last:
            if t % 2:
                steps.extend(_du_pairs((t - 1) // 2))
            else:
                steps.extend(_du_pairs((t - 2) // 2))
                steps.append(DOWN)
            _close_with_drop(steps)
        else:
            if t % 2:
                steps.extend(_du_pairs((t - 1) // 2))
                steps.append(DOWN)
            else:
                steps.extend(_du_pairs((t - 2) // 2))
                steps.extend([DOWN, DOWN])
    return Path(steps)


def _canonical_ud(p: Path) -> Path:
    items = _split_on_pairs(p.steps, UP, DOWN)
    if all(kind == "block" for kind, _ in items):
        return p
    ends_with_block = items[-1][0] == "block"
    body = items[:-1] if ends_with_block else items
    last_chunk_idx = max(i for i, (kind, _) in enumerate(body) if kind == "chunk")
    steps: list[int] = []
    for i, (kind, value) in enumerate(body):
        if kind == "block":
            steps.extend(_ud_pairs(value))
        elif i == last_chunk_idx:
            steps.extend([UP] * (len(value) - 1))
            _close_with_drop(steps)
        else:
            steps.extend([UP] * len(value))
    if ends_with_block:
        steps.extend(_ud_pairs(items[-1][1]))
    return Path(steps)


def _i1_block(length: int) -> list[int]:
    """The unique no-UC representative block of a given length."""
    if length % 2 == 0:
        return _ud_pairs(length // 2)
    if length < 5:
        raise AssertionError(f"no odd UC-free block of length {length}")
    return _ud_pairs((length - 5) // 2) + [UP, UP, UP, DOWN, -2]


def _j1_block(length: int) -> list[int]:
    """The unique no-DC representative block of a given length."""
    if length % 2 == 0:
        return _ud_pairs(length // 2)
    if length < 3:
        raise AssertionError(f"no odd DC-free block of length {length}")
    return _ud_pairs((length - 3) // 2) + [UP, UP, -2]


def _canonical_uc(p: Path) -> Path:
    s = p.steps
    hits = [i for i in range(len(s) - 1) if is_up(s[i]) and is_catastrophe(s[i + 1])]
    if not hits:
        return Path(_i1_block(len(p)))
    sizes = [-s[i + 1] for i in hits]
    segments = _split_at_two_step_occurrences(s, hits)
    steps: list[int] = []
    for seg, k in zip(segments, sizes):
        steps.extend(_i1_block(len(seg) + 1 - k))
        steps.extend([UP] * k)
        steps.append(-k)
    steps.extend(_i1_block(len(segments[-1])))
    return Path(steps)


def _canonical_dc(p: Path) -> Path:
    s = p.steps
    hits = [i for i in range(len(s) - 1) if is_down(s[i]) and is_catastrophe(s[i + 1])]
    if not hits:
        return Path(_j1_block(len(p)))
    sizes = [-s[i + 1] for i in hits]
    segments = _split_at_two_step_occurrences(s, hits)
    steps: list[int] = []
    for seg, k in zip(segments, sizes):
        steps.extend(_j1_block(len(seg) - k - 1))
        steps.extend([UP] * (k + 1))
        steps.append(DOWN)
        steps.append(-k)
    steps.extend(_j1_block(len(segments[-1])))
    return Path(steps)


def _k2_block(length: int) -> list[int]:
    if length % 2 == 0:
        return _ud_pairs(length // 2)
    if length < 3:
        raise AssertionError(f"no odd CU-free closing block of length {length}")
    return _ud_pairs((length - 3) // 2) + [UP, UP, -2]


def _canonical_cu(p: Path) -> Path:
    s = p.steps
    hits = [i for i in range(len(s) - 1) if is_catastrophe(s[i]) and is_up(s[i + 1])]
    if not hits:
        return Path(_k2_block(len(p)))
    sizes = [-s[i] for i in hits]
    segments = _split_at_two_step_occurrences(s, hits)
    steps: list[int] = []
    for idx, (seg, k) in enumerate(zip(segments, sizes)):
        gap = len(seg) - k if idx == 0 else len(seg) + 1 - k
        steps.extend(_ud_pairs(gap // 2))
        steps.extend([UP] * k)
        steps.append(-k)
    steps.extend(_k2_block(len(segments[-1]) + 1))
    return Path(steps)


def _canonical_du(p: Path) -> Path:
    if len(p) == 0:
        return p
    items = _split_on_pairs(p.steps, DOWN, UP)
    steps: list[int] = []
    for i, (kind, value) in enumerate(items):
        if kind == "block":
            steps.extend(_du_pairs(value))
        elif i == len(items) - 1:
            steps.extend([UP] * (len(value) - 1))
            _close_with_drop(steps)
        else:
            steps.extend([UP] * len(value))
    return Path(steps)


_CANONICAL = {
    "U": _canonical_u,
    "D": _canonical_d,
    "C": _canonical_c,
    "UU": _canonical_uu,
    "UD": _canonical_ud,
    "UC": _canonical_uc,
    "DC": _canonical_dc,
    "CU": _canonical_cu,
    "DU": _canonical_du,
}


def canonical(p: Path, pattern: str) -> Path:
    """The unique representative equivalent to p for the pattern."""
    _check_pattern(pattern)
    if pattern == "DD":
        return ddnorm.canonical_dd(p)
    return _CANONICAL[pattern](p)


@lru_cache(maxsize=None)
def representative_index(n: int, pattern: str):
    """Profile -> representative map over length n; asserts one per profile."""
    from .patterns import occurrences

    index = {}
    for rep in representatives_of_length(n, pattern):
        key = occurrences(rep, pattern)
        if key in index:
            raise AssertionError(
                f"two {pattern} representatives share a profile at length {n}: "
                f"{index[key].word()} and {rep.word()}"
            )
        index[key] = rep
    return index
