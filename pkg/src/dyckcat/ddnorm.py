"""Normalization machinery for the DD pattern.

Everything here revolves around the "flat-valley" condition on the U/D part
of a path: it avoids UUDU, and every UDU occurrence has height at most one.
The normalizer ``psi`` sends a path with at most one (final) catastrophe to
the unique path of that shape satisfying the condition and carrying the
same double-descent profile once the catastrophe is read as a run of
down-steps.  Three rewriting operations (catastrophe collapsing, isolated
tail elimination, catastrophe size reduction) preserve the plain DD profile
and drive any path toward the representative families:

* odd length: R1, a condition-satisfying block ending in C_2 (with no UD
  right before the catastrophe) followed by a UDU-free Dyck block;
* even length: R2, the union of Abar (condition-satisfying Dyck paths) with
  two sporadic shapes S0 (...DUUC3) and S1 (...DDC3).

``psi`` and ``canonical_dd`` work by indexed exhaustive search at desk
scale; the odd-length rewriting pipeline is also implemented and is tested
to agree with the search.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .paths import (
    DOWN,
    UP,
    NoCatastrophe,
    Path,
    PathError,
    dyck_paths,
    enumerate_paths,
    is_catastrophe,
    is_down,
    is_up,
)

DD_FAMILIES = ("Abar", "Aprime", "A2", "S0", "S1", "R1", "R2")


class PreconditionViolated(PathError):
    """Input outside the stated domain of a normalization operation."""


@dataclass(frozen=True)
class ConditionCStatus:
    holds: bool
    violation_kind: str | None = None  # "UUDU-occurrence" | "UDU-too-high"
    violation_position: int | None = None  # 1-based


def _condition_c(steps: tuple[int, ...], heights: tuple[int, ...]) -> ConditionCStatus:
    n = len(steps)
    for i in range(n):
        if (
            i + 3 < n
            and is_up(steps[i])
            and is_up(steps[i + 1])
            and is_down(steps[i + 2])
            and is_up(steps[i + 3])
        ):
            return ConditionCStatus(False, "UUDU-occurrence", i + 1)
        if (
            i + 2 < n
            and is_up(steps[i])
            and is_down(steps[i + 1])
            and is_up(steps[i + 2])
            and min(heights[i : i + 4]) > 1
        ):
            return ConditionCStatus(False, "UDU-too-high", i + 1)
    return ConditionCStatus(True)


def satisfies_condition_C(p: Path) -> ConditionCStatus:
    """No UUDU over the U/D steps, and every UDU occurrence at height <= 1."""
    return _condition_c(p.steps, p.heights)


def _dd_positions(steps: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(
        i + 1
        for i in range(len(steps) - 1)
        if is_down(steps[i]) and is_down(steps[i + 1])
    )


def _substituted_dd_positions(p: Path) -> tuple[int, ...]:
    """DD positions after rewriting a final catastrophe C_k as D^k."""
    steps = p.steps
    if steps and is_catastrophe(steps[-1]):
        steps = steps[:-1] + (DOWN,) * (-steps[-1])
    return _dd_positions(steps)


def isolated_down_positions(steps: tuple[int, ...]) -> tuple[int, ...]:
    """1-based positions of down-steps lying in no DD occurrence.

    A down-step next to a catastrophe stays isolated: catastrophes are not
    down-steps.
    """
    n = len(steps)
    return tuple(
        i + 1
        for i in range(n)
        if is_down(steps[i])
        and not (i > 0 and is_down(steps[i - 1]))
        and not (i + 1 < n and is_down(steps[i + 1]))
    )


# -- indexed exhaustive search backing psi and canonical_dd -------------------


@lru_cache(maxsize=None)
def _condition_c_dyck_index(n: int) -> dict:
    """DD profile -> the unique condition-satisfying Dyck path of length n."""
    index: dict[tuple[int, ...], Path] = {}
    for q in dyck_paths(n):
        if _condition_c(q.steps, q.heights).holds:
            key = _dd_positions(q.steps)
            if key in index:
                raise AssertionError(
                    f"profile collision among condition-satisfying Dyck paths: "
                    f"{index[key].word()} vs {q.word()}"
                )
            index[key] = q
    return index


@lru_cache(maxsize=None)
def _prefix_walks(length: int, height: int) -> tuple[tuple[int, ...], ...]:
    """All U/D walks of the given length from 0 to ``height`` staying >= 0."""
    if length == 0:
        return ((),) if height == 0 else ()
    if height < 0 or height > length or (length - height) % 2:
        return ()
    out = []
    for walk in _prefix_walks(length - 1, height - 1):
        out.append(walk + (UP,))
    if height + 1 <= length - 1:
        for walk in _prefix_walks(length - 1, height + 1):
            out.append(walk + (DOWN,))
    return tuple(out)


@lru_cache(maxsize=None)
def _condition_c_final_cat_index(n: int, size: int) -> dict:
    """Substituted DD profile -> unique condition-satisfying path of length n
    ending with a catastrophe of the given size."""
    index: dict[tuple[int, ...], Path] = {}
    for walk in _prefix_walks(n - 1, size):
        steps = walk + (-size,)
        q = Path(steps)
        if _condition_c(q.steps, q.heights).holds:
            key = _substituted_dd_positions(q)
            if key in index:
                raise AssertionError(
                    f"substituted-profile collision: {index[key].word()} vs {q.word()}"
                )
            index[key] = q
    return index


def psi(p: Path) -> Path:
    """The unique condition-satisfying path of the same shape and the same
    substituted DD profile.  Accepts Dyck paths and paths whose only
    catastrophe is the final step."""
    cats = p.catastrophe_positions()
    if len(cats) == 0:
        index = _condition_c_dyck_index(len(p))
        key = _dd_positions(p.steps)
    elif len(cats) == 1 and cats[0] == len(p):
        index = _condition_c_final_cat_index(len(p), -p.steps[-1])
        key = _substituted_dd_positions(p)
    else:
        raise PreconditionViolated(
            "psi needs a Dyck path or a single catastrophe as the last step"
        )
    try:
        return index[key]
    except KeyError:
        raise AssertionError(f"no normalized form found for {p.word()!r}") from None


# -- profile-preserving rewrites ----------------------------------------------


def collapse_catastrophes(p: Path) -> Path:
    """Replace every catastrophe but the last by U; the last grows to land
    back on the axis.  Keeps length and the DD profile."""
    cats = p.catastrophe_positions()
    if not cats:
        raise NoCatastrophe("collapse needs at least one catastrophe")
    if len(cats) == 1:
        return p
    last = cats[-1] - 1
    grown = -p.steps[last] + sum(-p.steps[c - 1] + 1 for c in cats[:-1])
    steps = tuple(
        UP if is_catastrophe(s) and i != last else s for i, s in enumerate(p.steps)
    )
    return Path(steps[:last] + (-grown,) + steps[last + 1 :])


def eliminate_isolated_tail(p: Path) -> Path:
    """Rewrite a single-catastrophe path so that no down-step right of the
    catastrophe is isolated, keeping length and the DD profile."""
    cats = p.catastrophe_positions()
    if len(cats) != 1:
        raise PreconditionViolated("exactly one catastrophe required")
    current = p
    for _ in range(len(p) + 1):
        c = current.catastrophe_positions()[0] - 1
        tail = current.steps[c + 1 :]
        if not isolated_down_positions(tail):
            return current
        head = current.steps[:c]
        size = -current.steps[c]
        tail = psi(Path(tail)).steps
        isolated = isolated_down_positions(tail)
        j = isolated[-1] - 1
        if j == len(tail) - 1:
            # tail ends with UD: hoist everything before it above the catastrophe
            r1 = tail[:-2]
            steps = head + (UP,) + r1 + (UP, -(size + 2))
        else:
            r1 = tail[: j - 1]
            r2 = tail[j + 2 :]
            h = 0
            for s in tail[: j + 1]:
                h += 1 if is_up(s) else -1
            if h == 0:
                steps = head + (UP,) + r1 + (UP, -(size + 2), UP) + r2
            elif h == 1:
                steps = head + (UP,) + r1 + (-(size + 2), UP, UP) + r2
            else:
                raise AssertionError("isolated down-step above height 1 after psi")
        current = Path(steps)
    raise AssertionError("isolated-tail elimination did not converge")


def reduce_catastrophe(p: Path) -> Path:
    """Shrink the single catastrophe from size k >= 4 to k-2 at the same
    position, keeping length and the DD profile.  Requires the condition."""
    cats = p.catastrophe_positions()
    if len(cats) != 1:
        raise PreconditionViolated("exactly one catastrophe required")
    if not satisfies_condition_C(p).holds:
        raise PreconditionViolated("the avoidance condition must hold before reducing")
    c = cats[0] - 1
    k = -p.steps[c]
    if k < 4:
        raise PreconditionViolated(f"catastrophe size {k} is below 4")
    target = k - 3
    t = None
    for i in range(c - 1, -1, -1):
        if is_up(p.steps[i]) and p.heights[i] == target:
            t = i
            break
    if t is None or t + 2 >= c or not (is_up(p.steps[t + 1]) and is_up(p.steps[t + 2])):
        raise AssertionError("no triple ascent above the reduction ledge")
    steps = p.steps[:t] + (UP, DOWN, UP) + p.steps[t + 3 : c] + (-(k - 2),) + p.steps[c + 1 :]
    return Path(steps)


# -- families and the canonical map -------------------------------------------


def _is_dyck(p: Path) -> bool:
    return not p.catastrophe_positions()


def _avoids_udu(steps: tuple[int, ...]) -> bool:
    return not any(
        is_up(steps[i]) and is_down(steps[i + 1]) and is_up(steps[i + 2])
        for i in range(len(steps) - 2)
    )


def in_dd_family(p: Path, family: str) -> bool:
    if family not in DD_FAMILIES:
        raise PathError(f"unknown family {family!r}; expected one of {', '.join(DD_FAMILIES)}")
    steps = p.steps
    cats = p.catastrophe_positions()
    if family == "Abar":
        return not cats and satisfies_condition_C(p).holds
    if family == "Aprime":
        if cats or not _avoids_udu(steps):
            return False
        return not (len(steps) >= 2 and is_up(steps[-2]) and is_down(steps[-1]))
    if family == "A2":
        if len(cats) != 1 or cats[0] != len(p) or steps[-1] != -2:
            return False
        if not satisfies_condition_C(p).holds:
            return False
        # a UD right before the catastrophe is normalized away to UUC4
        return not (len(steps) >= 3 and is_up(steps[-3]) and is_down(steps[-2]))
    if family == "S0":
        if len(cats) != 1 or cats[0] != len(p) or steps[-1] != -3 or len(steps) < 4:
            return False
        if not (is_down(steps[-4]) and is_up(steps[-3]) and is_up(steps[-2])):
            return False
        prefix = steps[:-2]
        return _condition_c(prefix, p.heights[: len(prefix) + 1]).holds
    if family == "S1":
        if len(cats) != 1 or cats[0] != len(p) or steps[-1] != -3 or len(steps) < 3:
            return False
        if not (is_down(steps[-3]) and is_down(steps[-2])):
            return False
        prefix = steps[:-3]
        return _condition_c(prefix, p.heights[: len(prefix) + 1]).holds
    if family == "R1":
        if len(cats) != 1 or steps[cats[0] - 1] != -2:
            return False
        c = cats[0]
        head = Path(steps[:c])
        tail = Path(steps[c:])
        return in_dd_family(head, "A2") and in_dd_family(tail, "Aprime")
    # R2
    return (
        in_dd_family(p, "Abar") or in_dd_family(p, "S0") or in_dd_family(p, "S1")
    )


@lru_cache(maxsize=None)
def dd_representative_index(n: int) -> dict:
    """DD profile -> unique representative of length n (R1 odd, R2 even)."""
    family = "R1" if n % 2 else "R2"
    index: dict[tuple[int, ...], Path] = {}
    for q in enumerate_paths(n):
        if in_dd_family(q, family):
            key = _dd_positions(q.steps)
            if key in index:
                raise AssertionError(
                    f"DD profile collision in {family} at length {n}: "
                    f"{index[key].word()} vs {q.word()}"
                )
            index[key] = q
    return index


def canonical_dd(p: Path) -> Path:
    """The unique representative (R1 for odd length, R2 for even) carrying
    the same DD profile as p."""
    index = dd_representative_index(len(p))
    try:
        return index[_dd_positions(p.steps)]
    except KeyError:
        raise AssertionError(f"no DD representative matches {p.word()!r}") from None


# -- the odd-length rewriting pipeline (cross-check for canonical_dd) ---------


def _psi_on_head(p: Path) -> Path:
    """Apply psi to the prefix ending at the catastrophe, keeping the tail."""
    c = p.catastrophe_positions()[0]
    head = psi(Path(p.steps[:c]))
    return Path(head.steps + p.steps[c:])


def canonical_dd_pipeline_odd(p: Path) -> Path:
    """Odd-length canonical map by explicit rewriting: collapse, clean the
    tail, normalize, then shrink the catastrophe to size 2 (fixing any UD
    just before it)."""
    if len(p) % 2 == 0:
        raise PreconditionViolated("the rewriting pipeline handles odd lengths")
    q = p
    if len(q.catastrophe_positions()) > 1:
        q = collapse_catastrophes(q)
    q = eliminate_isolated_tail(q)
    q = _psi_on_head(q)
    for _ in range(len(p) + 2):
        c = q.catastrophe_positions()[0] - 1
        size = -q.steps[c]
        if size > 2:
            q = _psi_on_head(reduce_catastrophe(q))
            continue
        if c >= 2 and is_up(q.steps[c - 2]) and is_down(q.steps[c - 1]):
            # UD C2 -> UU C4, then continue reducing
            fixed = q.steps[: c - 2] + (UP, UP, -4) + q.steps[c + 1 :]
            q = _psi_on_head(Path(fixed))
            continue
        break
    if not in_dd_family(q, "R1"):
        raise AssertionError(f"pipeline left {q.word()!r} outside R1")
    if _dd_positions(q.steps) != _dd_positions(p.steps):
        raise AssertionError("pipeline changed the DD profile")
    return q
