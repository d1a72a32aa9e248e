"""Backtracking over set partitions encoded as restricted growth strings.

Item ``i`` gets block ``a[i] <= max(a[:i]) + 1``, so every partition is
visited once and block labels are interchangeable by construction.
"""

from __future__ import annotations

from typing import Callable, Sequence

from fpec.errors import SearchBudgetExceeded

Check = Callable[[list], bool]


def restricted_growth_search(
    n: int,
    max_blocks: int,
    allowed: Callable[[int, int, list], bool] | None = None,
    checks_at: Sequence[Sequence[Check]] | None = None,
    budget: int | None = None,
) -> list[int] | None:
    """First restricted growth string with at most ``max_blocks`` blocks that passes.

    ``allowed(i, block, assign)`` vetoes a placement before it is made;
    ``checks_at[i]`` run after item ``i`` is placed (typically constraints
    that become decidable once their last item is assigned). Returns the
    assignment, or ``None`` when the space is exhausted.
    """
    if n == 0:
        return []
    if max_blocks <= 0:
        return None
    checks_at = checks_at or [()] * n
    assign = [-1] * n
    nodes = 0

    def rec(i: int, used: int) -> bool:
        nonlocal nodes
        if i == n:
            return True
        for b in range(min(used + 1, max_blocks)):
            nodes += 1
            if budget is not None and nodes > budget:
                raise SearchBudgetExceeded(f"partition search exceeded {budget} nodes")
            if allowed is not None and not allowed(i, b, assign):
                continue
            assign[i] = b
            if all(chk(assign) for chk in checks_at[i]) and rec(i + 1, max(used, b + 1)):
                return True
        assign[i] = -1
        return False

    return list(assign) if rec(0, 0) else None


def bell_numbers(n: int) -> list[int]:
    """``B(0) .. B(n)`` via the Bell triangle."""
    out = [1]
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
        out.append(row[0])
    return out
