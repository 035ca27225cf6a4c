"""Exact rational linear programming over box-constrained systems.

All systems here have the form

    rows:   A x <= b        (one row per constraint)
    bounds: 0 <= x_j <= u_j (u_j defaults to 1)

and are solved by a bounded-variable primal simplex over
``fractions.Fraction``: no floating point touches any certified number.
The pivot rule is Dantzig's with an automatic permanent switch to Bland's
rule after a long degenerate streak, which guarantees termination.  On
return the solution is re-verified against the original data (exact primal
feasibility plus the dual-feasibility termination certificate), so a
returned optimum is certified, not merely converged.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class LinearSystem:
    """Inequality system A x <= b with box bounds 0 <= x <= upper."""

    num_vars: int
    rows: tuple[tuple[tuple[Fraction, ...], Fraction], ...]
    upper: tuple[Fraction, ...]
    integral: tuple[bool, ...]

    @staticmethod
    def make(num_vars: int,
             rows: list[tuple[list, object]],
             upper: list | None = None,
             integral: list[bool] | None = None) -> "LinearSystem":
        frows = []
        for coeffs, rhs in rows:
            if len(coeffs) != num_vars:
                raise ValueError(
                    f"row width {len(coeffs)} != variable count {num_vars}")
            frows.append((tuple(Fraction(c) for c in coeffs), Fraction(rhs)))
        up = tuple(Fraction(u) for u in upper) if upper is not None \
            else (ONE,) * num_vars
        if len(up) != num_vars:
            raise ValueError("upper bound vector has wrong length")
        integ = tuple(integral) if integral is not None else (False,) * num_vars
        return LinearSystem(num_vars, tuple(frows), up, integ)

    @property
    def num_rows(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class LpSolution:
    value: Fraction
    x: tuple[Fraction, ...]
    duals: tuple[Fraction, ...]          # one per row, >= 0
    reduced_costs: tuple[Fraction, ...]  # one per structural variable


class SimplexError(Exception):
    pass


def _check_inputs(system: LinearSystem, objective) -> tuple[Fraction, ...]:
    obj = tuple(Fraction(c) for c in objective)
    if len(obj) != system.num_vars:
        raise ValueError("objective length does not match variable count")
    for _, rhs in system.rows:
        if rhs < 0:
            raise SimplexError(
                "negative right-hand side: x = 0 is not a feasible start")
    return obj


def lp_solve(system: LinearSystem, objective) -> LpSolution:
    """Maximize objective . x over the system; exact, certified."""
    obj = _check_inputs(system, objective)
    n = system.num_vars
    m = system.num_rows
    ncols = n + m

    # tableau rows hold B^-1 [A | I]; xb holds current basic values
    tab = [list(coeffs) + [ONE if r == i else ZERO for i in range(m)]
           for r, (coeffs, _) in enumerate(system.rows)]
    xb = [rhs for _, rhs in system.rows]
    basis = [n + r for r in range(m)]
    zrow = list(obj) + [ZERO] * m
    zval = ZERO
    at_upper = [False] * ncols
    upper: list[Fraction | None] = list(system.upper) + [None] * m

    in_basis = [False] * ncols
    for col in basis:
        in_basis[col] = True

    bland = False
    degenerate_streak = 0
    switch_after = 4 * (m + n) + 32

    while True:
        entering = -1
        best = ZERO
        for j in range(ncols):
            if in_basis[j]:
                continue
            uj = upper[j]
            if uj is not None and uj == 0:
                continue  # variable pinned to zero
            rc = zrow[j]
            if at_upper[j]:
                if rc < 0:
                    gain = -rc
                else:
                    continue
            else:
                if rc > 0:
                    gain = rc
                else:
                    continue
            if bland:
                entering = j
                break
            if gain > best:
                best = gain
                entering = j
        if entering < 0:
            break

        j = entering
        sgn = -1 if at_upper[j] else 1
        # moving x_j by sgn*t changes basic values by -t * d, d_i = sgn*tab[i][j]
        t_best: Fraction | None = upper[j]  # bound flip distance (None = inf)
        leave_row = -1
        leave_to_upper = False
        for r in range(m):
            a = tab[r][j]
            if not a:
                continue
            d = a if sgn > 0 else -a
            if d > 0:
                ratio = xb[r] / d
                if t_best is None or ratio < t_best or \
                        (ratio == t_best and leave_row >= 0 and basis[r] < basis[leave_row]):
                    t_best, leave_row, leave_to_upper = ratio, r, False
            else:
                ub = upper[basis[r]]
                if ub is None:
                    continue
                ratio = (ub - xb[r]) / (-d)
                if t_best is None or ratio < t_best or \
                        (ratio == t_best and leave_row >= 0 and basis[r] < basis[leave_row]):
                    t_best, leave_row, leave_to_upper = ratio, r, True
        if t_best is None:
            raise SimplexError("linear program is unbounded")

        t = t_best
        zval += zrow[j] * sgn * t
        if t == 0:
            degenerate_streak += 1
            if degenerate_streak > switch_after:
                bland = True
        else:
            degenerate_streak = 0

        if leave_row < 0:
            # bound flip: x_j jumps to its other bound
            if t:
                for r in range(m):
                    a = tab[r][j]
                    if a:
                        xb[r] -= (a if sgn > 0 else -a) * t
            at_upper[j] = not at_upper[j]
            continue

        r = leave_row
        if t:
            d_r = tab[r][j] if sgn > 0 else -tab[r][j]
            for i in range(m):
                a = tab[i][j]
                if a and i != r:
                    xb[i] -= (a if sgn > 0 else -a) * t
            xb[r] -= d_r * t  # lands exactly on the leaving bound
        leaving = basis[r]
        in_basis[leaving] = False
        at_upper[leaving] = leave_to_upper
        enter_value = (upper[j] - t) if at_upper[j] else t
        at_upper[j] = False
        in_basis[j] = True
        basis[r] = j
        xb[r] = enter_value

        # pivot row elimination
        prow = tab[r]
        piv = prow[j]
        if piv != 1:
            inv = ONE / piv
            for idx in range(ncols):
                if prow[idx]:
                    prow[idx] *= inv
        nz = [idx for idx in range(ncols) if prow[idx]]
        for i in range(m):
            if i == r:
                continue
            row = tab[i]
            f = row[j]
            if f:
                for idx in nz:
                    row[idx] -= f * prow[idx]
        f = zrow[j]
        if f:
            for idx in nz:
                zrow[idx] -= f * prow[idx]

    # assemble structural solution
    x = [ZERO] * n
    for j in range(n):
        if at_upper[j]:
            x[j] = upper[j]  # type: ignore[assignment]
    for r, col in enumerate(basis):
        if col < n:
            x[col] = xb[r]
    duals = tuple(-zrow[n + r] for r in range(m))
    reduced = tuple(zrow[:n])

    _certify(system, obj, x, duals, zval)
    return LpSolution(zval, tuple(x), duals, reduced)


def _certify(system: LinearSystem, obj, x, duals, value) -> None:
    """Exact certificate check: primal feasible, duals valid, values equal."""
    n = system.num_vars
    for j in range(n):
        if not (0 <= x[j] <= system.upper[j]):
            raise SimplexError("internal error: primal bound violated")
    for (coeffs, rhs), y in zip(system.rows, duals):
        lhs = sum(c * xj for c, xj in zip(coeffs, x) if c)
        if lhs > rhs:
            raise SimplexError("internal error: primal row violated")
        if y < 0:
            raise SimplexError("internal error: negative dual")
    primal = sum(c * xj for c, xj in zip(obj, x) if c)
    if primal != value:
        raise SimplexError("internal error: objective mismatch")
    if dual_bound(system, obj, duals) != value:
        raise SimplexError("internal error: duality gap at termination")


def dual_bound(system: LinearSystem, objective, duals) -> Fraction:
    """Valid upper bound on the optimum from ANY nonnegative dual vector.

    For max{c.x : Ax <= b, 0 <= x <= u} and y >= 0 the quantity
    y.b + sum_j max(0, c_j - (y.A)_j) u_j dominates every feasible value.
    """
    obj = tuple(Fraction(c) for c in objective)
    n = system.num_vars
    total = ZERO
    yA = [ZERO] * n
    for (coeffs, rhs), y in zip(system.rows, duals):
        if y < 0:
            raise ValueError("duals must be nonnegative")
        if y:
            total += y * rhs
            for j, c in enumerate(coeffs):
                if c:
                    yA[j] += y * c
    for j in range(n):
        slack = obj[j] - yA[j]
        if slack > 0:
            total += slack * system.upper[j]
    return total


def lp_optimum(system: LinearSystem, objective) -> Fraction:
    """Exact rational optimum of max objective . x over the system."""
    return lp_solve(system, objective).value
