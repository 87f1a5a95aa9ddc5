"""Dense exact-rational simplex over equality-form programs.

Solves  max c^T x  subject to  A x = b, x >= 0  with Fraction pivots and
Bland's anti-cycling rule.  Every outcome is a value: a feasible optimum
(with the exact solution vector), infeasibility (with a Farkas vector y
satisfying y^T A <= 0 componentwise and y^T b > 0, both checked exactly
before returning), unboundedness, or a column-count resource cap.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

DEFAULT_MAX_COLUMNS = 20000

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class LinearProgram:
    matrix: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]
    objective: tuple[Fraction, ...] | None = None  # None: feasibility only

    def __post_init__(self):
        m = len(self.matrix)
        if len(self.rhs) != m:
            raise ValueError("rhs length does not match row count")
        if m:
            n = len(self.matrix[0])
            if any(len(row) != n for row in self.matrix):
                raise ValueError("ragged constraint matrix")
            if self.objective is not None and len(self.objective) != n:
                raise ValueError("objective length does not match column count")

    @property
    def num_rows(self) -> int:
        return len(self.matrix)

    @property
    def num_cols(self) -> int:
        return len(self.matrix[0]) if self.matrix else (
            len(self.objective) if self.objective else 0
        )


@dataclass(frozen=True)
class Feasible:
    x: tuple[Fraction, ...]
    objective: Fraction


@dataclass(frozen=True)
class Infeasible:
    farkas: tuple[Fraction, ...]


@dataclass(frozen=True)
class Unbounded:
    column: int


@dataclass(frozen=True)
class TooLarge:
    columns: int
    limit: int


LPResult = Feasible | Infeasible | Unbounded | TooLarge


def max_columns_from_env(default: int = DEFAULT_MAX_COLUMNS) -> int:
    raw = os.environ.get("PSCERT_MAX_COLUMNS")
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"PSCERT_MAX_COLUMNS must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError("PSCERT_MAX_COLUMNS must be positive")
    return value


def solve(lp: LinearProgram, max_columns: int | None = None) -> LPResult:
    limit = DEFAULT_MAX_COLUMNS if max_columns is None else max_columns
    n = lp.num_cols
    m = lp.num_rows
    if n > limit:
        return TooLarge(columns=n, limit=limit)

    if n == 0:
        if all(v == 0 for v in lp.rhs):
            return Feasible(x=(), objective=_ZERO)
        farkas = tuple(
            (_ONE if v > 0 else -_ONE if v < 0 else _ZERO) for v in lp.rhs
        )
        return Infeasible(farkas=farkas)

    if m == 0:
        if lp.objective is not None and any(c > 0 for c in lp.objective):
            bad = next(j for j, c in enumerate(lp.objective) if c > 0)
            return Unbounded(column=bad)
        x = (_ZERO,) * n
        return Feasible(x=x, objective=_ZERO)

    # Phase 1 tableau: [S*A | I | S*b] with S flipping rows to make b >= 0.
    flip = [(-_ONE if b < 0 else _ONE) for b in lp.rhs]
    tab: list[list[Fraction]] = []
    for i in range(m):
        s = flip[i]
        row = [s * a for a in lp.matrix[i]]
        row.extend(_ONE if k == i else _ZERO for k in range(m))
        row.append(s * lp.rhs[i])
        tab.append(row)
    total = n + m
    basis = list(range(n, n + m))

    # Reduced-cost row for min(sum of artificials); last slot is -value.
    obj = [_ZERO] * (total + 1)
    for j in range(total):
        acc = _ZERO
        for i in range(m):
            acc += tab[i][j]
        cost = _ONE if j >= n else _ZERO
        obj[j] = cost - acc
    value = sum(row[-1] for row in tab)
    obj[-1] = -value

    def pivot(row_idx: int, col: int) -> None:
        prow = tab[row_idx]
        inv = _ONE / prow[col]
        if inv != 1:
            for k in range(total + 1):
                if prow[k]:
                    prow[k] *= inv
        for r in range(m):
            if r == row_idx:
                continue
            factor = tab[r][col]
            if factor:
                target = tab[r]
                for k in range(total + 1):
                    if prow[k]:
                        target[k] -= factor * prow[k]
        factor = obj[col]
        if factor:
            for k in range(total + 1):
                if prow[k]:
                    obj[k] -= factor * prow[k]
        basis[row_idx] = col

    def bland(allowed_end: int):
        """Run Bland pivots; returns None at optimum or the bad column."""
        while True:
            enter = -1
            for j in range(allowed_end):
                if obj[j] < 0:
                    enter = j
                    break
            if enter < 0:
                return None
            leave = -1
            best: Fraction | None = None
            for i in range(m):
                a = tab[i][enter]
                if a > 0:
                    ratio = tab[i][-1] / a
                    if best is None or ratio < best or (
                        ratio == best and basis[i] < basis[leave]
                    ):
                        best = ratio
                        leave = i
            if leave < 0:
                return enter
            pivot(leave, enter)

    stuck = bland(total)
    assert stuck is None, "phase 1 objective is bounded below by zero"
    value = -obj[-1]
    if value > 0:
        # Phase-1 dual prices: y = c_B B^{-1}; B^{-1} sits under the
        # artificial columns.  Undo the row flips for the original system.
        farkas = []
        for i in range(m):
            y_i = _ZERO
            for k in range(m):
                if basis[k] >= n:
                    y_i += tab[k][n + i]
            farkas.append(flip[i] * y_i)
        _check_farkas(lp, farkas)
        return Infeasible(farkas=tuple(farkas))

    # Drive remaining artificials out of the basis (degenerate rows).
    drop_rows: list[int] = []
    for i in range(m):
        if basis[i] >= n:
            enter = next((j for j in range(n) if tab[i][j] != 0), -1)
            if enter >= 0:
                pivot(i, enter)
            else:
                drop_rows.append(i)
    if drop_rows:
        keep = [i for i in range(m) if i not in drop_rows]
        tab = [tab[i] for i in keep]
        basis = [basis[i] for i in keep]
        m = len(keep)

    if lp.objective is None:
        x = _extract(tab, basis, n)
        return Feasible(x=tuple(x), objective=_ZERO)

    # Phase 2: minimize -objective, artificial columns barred.
    cost = [-c for c in lp.objective]
    obj = [_ZERO] * (total + 1)
    value = _ZERO
    for i in range(m):
        value += cost[basis[i]] * tab[i][-1] if basis[i] < n else _ZERO
    for j in range(n):
        acc = _ZERO
        for i in range(m):
            cb = cost[basis[i]] if basis[i] < n else _ZERO
            if cb:
                acc += cb * tab[i][j]
        obj[j] = cost[j] - acc
    obj[-1] = -value

    stuck = bland(n)
    if stuck is not None:
        return Unbounded(column=stuck)
    x = _extract(tab, basis, n)
    achieved = sum(
        (c * v for c, v in zip(lp.objective, x)), start=_ZERO
    )
    result = Feasible(x=tuple(x), objective=achieved)
    _check_primal(lp, result)
    return result


def _extract(tab, basis, n) -> list[Fraction]:
    x = [_ZERO] * n
    for i, col in enumerate(basis):
        if col < n:
            x[col] = tab[i][-1]
    return x


def _check_primal(lp: LinearProgram, res: Feasible) -> None:
    assert all(v >= 0 for v in res.x), "negative component in solution"
    for row, b in zip(lp.matrix, lp.rhs):
        acc = _ZERO
        for a, v in zip(row, res.x):
            if a and v:
                acc += a * v
        assert acc == b, "solution violates a constraint"


def _check_farkas(lp: LinearProgram, farkas: Sequence[Fraction]) -> None:
    n = lp.num_cols
    for j in range(n):
        acc = _ZERO
        for i, row in enumerate(lp.matrix):
            if farkas[i] and row[j]:
                acc += farkas[i] * row[j]
        assert acc <= 0, "Farkas vector fails on a column"
    rhs_value = sum(
        (y * b for y, b in zip(farkas, lp.rhs)), start=_ZERO
    )
    assert rhs_value > 0, "Farkas vector fails on the right-hand side"
