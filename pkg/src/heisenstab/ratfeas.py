"""Exact rational feasibility for small systems of strict inequalities.

A system is a list of integer rows r, each demanding r . z >= 1 (strict
inequalities are normalized to slack 1 beforehand: any rational solution
of the strict system scales to one with slack 1 and vice versa).  The
solver runs Fourier-Motzkin elimination over `fractions.Fraction`, so the
answer is exact: either a rational point satisfying every row, or None.

Every returned point is re-checked against all original rows before it is
handed back; an internal inconsistency raises instead of returning.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

def _dedup(rows: list[tuple[tuple[Fraction, ...], Fraction]]) -> list[tuple[tuple[Fraction, ...], Fraction]]:
    """Drop duplicate rows and keep only the largest rhs per coefficient vector."""
    best: dict[tuple[Fraction, ...], Fraction] = {}
    for coeffs, rhs in rows:
        if coeffs not in best or rhs > best[coeffs]:
            best[coeffs] = rhs
    return [(c, r) for c, r in best.items()]


def solve_strict(rows: Sequence[Sequence], num_vars: int) -> Optional[tuple[Fraction, ...]]:
    """Find rational z with row . z >= 1 for every row, or None if infeasible."""
    system = []
    for row in rows:
        coeffs = tuple(Fraction(c) for c in row)
        if len(coeffs) != num_vars:
            raise ValueError(f"row length {len(coeffs)} != num_vars {num_vars}")
        system.append((coeffs, Fraction(1)))

    # Constant rows (no live variables) are checked immediately.
    def split_constant(rows_):
        live, ok = [], True
        for coeffs, rhs in rows_:
            if any(coeffs):
                live.append((coeffs, rhs))
            elif rhs > 0:
                ok = False
        return live, ok

    system, ok = split_constant(_dedup(system))
    if not ok:
        return None

    alive = list(range(num_vars))
    # each stage: (eliminated variable, alive list at that point, rows)
    stages: list[tuple[int, list[int], list]] = []

    while alive:
        # pick the variable minimizing the pos*neg fill-in
        best_k, best_cost = 0, None
        for k in range(len(alive)):
            pos = sum(1 for c, _ in system if c[k] > 0)
            neg = sum(1 for c, _ in system if c[k] < 0)
            cost = pos * neg - pos - neg
            if best_cost is None or cost < best_cost:
                best_k, best_cost = k, cost
        k = best_k
        stages.append((alive[k], alive.copy(), list(system)))

        pos = [(c, r) for c, r in system if c[k] > 0]
        neg = [(c, r) for c, r in system if c[k] < 0]
        zero = [(c, r) for c, r in system if c[k] == 0]
        combined = []
        for cp, rp in pos:
            for cn, rn in neg:
                # cancel variable k: row_p / cp[k] + row_n / (-cn[k])
                fp, fn = Fraction(1) / cp[k], Fraction(1) / (-cn[k])
                coeffs = tuple(
                    cp[i] * fp + cn[i] * fn for i in range(len(cp)) if i != k
                )
                combined.append((coeffs, rp * fp + rn * fn))
        reduced = [(tuple(c for i, c in enumerate(cs) if i != k), r) for cs, r in zero]
        system, ok = split_constant(_dedup(reduced + combined))
        if not ok:
            return None
        alive.pop(k)

    # Back-substitution in reverse elimination order.
    values: dict[int, Fraction] = {}
    for var, stage_alive, stage_rows in reversed(stages):
        col = stage_alive.index(var)
        lo: Optional[Fraction] = None
        hi: Optional[Fraction] = None
        for coeffs, rhs in stage_rows:
            c_var = coeffs[col]
            if c_var == 0:
                continue
            rest = rhs
            for i, v in enumerate(stage_alive):
                if v != var:
                    rest -= coeffs[i] * values[v]
            bound = rest / c_var
            if c_var > 0:
                lo = bound if lo is None or bound > lo else lo
            else:
                hi = bound if hi is None or bound < hi else hi
        if lo is not None and hi is not None:
            assert lo <= hi, "Fourier-Motzkin back-substitution interval empty"
            values[var] = (lo + hi) / 2
        elif lo is not None:
            values[var] = lo
        elif hi is not None:
            values[var] = hi
        else:
            values[var] = Fraction(0)

    z = tuple(values[i] for i in range(num_vars))
    for row in rows:
        if sum(Fraction(c) * zi for c, zi in zip(row, z)) < 1:
            raise AssertionError("solver produced an invalid assignment")
    return z
