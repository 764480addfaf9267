"""Exact rational linear programming.

A dense two-phase tableau simplex in exact rationals (``gmpy2.mpq`` inside
the tableau when installed, :class:`fractions.Fraction` at the interface).
There are no tolerances: every comparison is an exact rational comparison,
and optimal solutions come with dual values that certify optimality
exactly. Pivoting uses the largest-coefficient rule with a fallback to
Bland's least-index rule on degenerate streaks, so it always terminates.

Dual sign convention, for a maximisation problem: a ``<=`` row has a
nonnegative dual, a ``>=`` row a nonpositive dual, an ``=`` row a free
dual. Minimisation flips both signs. In either case the dual objective
``sum(rhs * dual)`` plus the bound contributions equals the primal optimum.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

try:
    from gmpy2 import mpq as _num
except ImportError:  # pragma: no cover
    _num = Fraction

LE, GE, EQ = "<=", ">=", "="
OPTIMAL, INFEASIBLE, UNBOUNDED = "optimal", "infeasible", "unbounded"

_ZERO = Fraction(0)

# consecutive degenerate pivots tolerated before falling back to Bland's rule
DEGENERATE_STREAK = 20


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass
class Constraint:
    coeffs: list[Fraction]
    relation: str
    rhs: Fraction

    def __post_init__(self):
        if self.relation not in (LE, GE, EQ):
            raise ValueError(f"unknown relation {self.relation!r}")
        self.coeffs = [_q(a) for a in self.coeffs]
        self.rhs = _q(self.rhs)


@dataclass
class LinearProgram:
    """``sense`` objective over variables with per-variable bounds.

    ``lower[j] is None`` means minus infinity, ``upper[j] is None`` plus
    infinity. Omitted bounds default to ``0 <= x_j``.
    """

    objective: list[Fraction]
    constraints: list[Constraint] = field(default_factory=list)
    sense: str = "max"
    lower: Optional[list[Optional[Fraction]]] = None
    upper: Optional[list[Optional[Fraction]]] = None

    def __post_init__(self):
        if self.sense not in ("max", "min"):
            raise ValueError(f"unknown sense {self.sense!r}")
        self.objective = [_q(c) for c in self.objective]
        n = len(self.objective)
        if self.lower is None:
            self.lower = [_ZERO] * n
        if self.upper is None:
            self.upper = [None] * n
        self.lower = [None if b is None else _q(b) for b in self.lower]
        self.upper = [None if b is None else _q(b) for b in self.upper]
        if len(self.lower) != n or len(self.upper) != n:
            raise ValueError("bounds must have one entry per variable")
        for con in self.constraints:
            if len(con.coeffs) != n:
                raise ValueError("constraint row width differs from variable count")

    @property
    def num_vars(self) -> int:
        return len(self.objective)

    def add(self, coeffs: Sequence, relation: str, rhs) -> int:
        """Append a constraint and return its row index."""
        con = Constraint(list(coeffs), relation, rhs)
        if len(con.coeffs) != self.num_vars:
            raise ValueError("constraint row width differs from variable count")
        self.constraints.append(con)
        return len(self.constraints) - 1


@dataclass
class LpSolution:
    status: str
    primal: list[Fraction] = field(default_factory=list)
    dual: list[Fraction] = field(default_factory=list)
    objective: Optional[Fraction] = None

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL


def _frac(v) -> Fraction:
    return Fraction(int(v.numerator), int(v.denominator))


class _Tableau:
    """Standard-form tableau ``max d.x`` s.t. rows, ``x >= 0``.

    Entries are ``gmpy2.mpq`` when available, else ``Fraction``.
    """

    def __init__(self, rows, rhs, basis: list[int], ncols: int):
        self.rows = [[_num(a) for a in row] for row in rows]
        self.rhs = [_num(b) for b in rhs]
        self.basis = basis
        self.ncols = ncols
        self.zero = _num(0)
        self.d = [self.zero] * ncols
        self.z = self.zero
        self.pivots = 0

    def set_costs(self, cost):
        # d_j = c_j - c_B B^-1 A_j, z = c_B B^-1 b
        d = [_num(c) for c in cost]
        z = self.zero
        for i, b in enumerate(self.basis):
            cb = _num(cost[b])
            if cb:
                row = self.rows[i]
                for j in range(self.ncols):
                    a = row[j]
                    if a:
                        d[j] -= cb * a
                z += cb * self.rhs[i]
        self.d = d
        self.z = z

    def pivot(self, r: int, j: int):
        self.pivots += 1
        row = self.rows[r]
        piv = row[j]
        if piv != 1:
            inv = 1 / piv
            for k in range(self.ncols):
                if row[k]:
                    row[k] *= inv
            self.rhs[r] *= inv
        nz = [k for k in range(self.ncols) if row[k]]
        br = self.rhs[r]
        for i, other in enumerate(self.rows):
            if i == r:
                continue
            f = other[j]
            if f:
                for k in nz:
                    other[k] -= f * row[k]
                self.rhs[i] -= f * br
        f = self.d[j]
        if f:
            for k in nz:
                self.d[k] -= f * row[k]
            self.z += f * br
        self.basis[r] = j

    def run(self, allowed: Sequence[bool]) -> str:
        """Primal simplex; returns OPTIMAL or UNBOUNDED.

        Entering column by largest reduced cost, switching to Bland's
        least-index rule after ``DEGENERATE_STREAK`` consecutive degenerate
        pivots until the objective moves again. Leaving row by minimum
        ratio, ties to the least basic index.
        """
        streak = 0
        while True:
            bland = streak >= DEGENERATE_STREAK
            enter = -1
            top = self.zero
            for j in range(self.ncols):
                dj = self.d[j]
                if dj > top and allowed[j]:
                    enter, top = j, dj
                    if bland:
                        break
            if enter < 0:
                return OPTIMAL
            leave = -1
            best = None
            for i, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    ratio = self.rhs[i] / a
                    if (best is None or ratio < best
                            or (ratio == best and self.basis[i] < self.basis[leave])):
                        best, leave = ratio, i
            if leave < 0:
                return UNBOUNDED
            streak = streak + 1 if best == 0 else 0
            self.pivot(leave, enter)


def solve(lp: LinearProgram) -> LpSolution:
    """Solve ``lp`` exactly. Deterministic for identical inputs."""
    n = lp.num_vars
    # x_j = offset_j + sum(sign * col)
    var_map: list[tuple[Fraction, list[tuple[int, int]]]] = []
    ncols = 0
    bound_rows: list[tuple[int, Fraction]] = []
    for j in range(n):
        lo, hi = lp.lower[j], lp.upper[j]
        if lo is not None:
            var_map.append((lo, [(ncols, 1)]))
            if hi is not None:
                if hi < lo:
                    return LpSolution(INFEASIBLE)
                bound_rows.append((ncols, hi - lo))
            ncols += 1
        elif hi is not None:
            var_map.append((hi, [(ncols, -1)]))
            ncols += 1
        else:
            var_map.append((_ZERO, [(ncols, 1), (ncols + 1, -1)]))
            ncols += 2
    nstruct = ncols

    raw_rows: list[list[Fraction]] = []
    raw_rel: list[str] = []
    raw_rhs: list[Fraction] = []
    for con in lp.constraints:
        row = [_ZERO] * nstruct
        rhs = con.rhs
        for j, a in enumerate(con.coeffs):
            if not a:
                continue
            off, cols = var_map[j]
            rhs -= a * off
            for c, s in cols:
                row[c] += a * s
        raw_rows.append(row)
        raw_rel.append(con.relation)
        raw_rhs.append(rhs)
    for c, width in bound_rows:
        row = [_ZERO] * nstruct
        row[c] = Fraction(1)
        raw_rows.append(row)
        raw_rel.append(LE)
        raw_rhs.append(width)

    m = len(raw_rows)
    flipped = [False] * m
    for i in range(m):
        if raw_rhs[i] < 0:
            flipped[i] = True
            raw_rows[i] = [-a for a in raw_rows[i]]
            raw_rhs[i] = -raw_rhs[i]
            raw_rel[i] = {LE: GE, GE: LE, EQ: EQ}[raw_rel[i]]

    # slack/surplus columns, then artificials
    extra: list[tuple[int, int]] = []  # (row, coefficient)
    id_col = [-1] * m
    for i in range(m):
        if raw_rel[i] == LE:
            id_col[i] = nstruct + len(extra)
            extra.append((i, 1))
        elif raw_rel[i] == GE:
            extra.append((i, -1))
    art_start = nstruct + len(extra)
    arts = [i for i in range(m) if id_col[i] < 0]
    for k, i in enumerate(arts):
        id_col[i] = art_start + k
    total = art_start + len(arts)

    rows = []
    for i in range(m):
        row = raw_rows[i] + [_ZERO] * (total - nstruct)
        rows.append(row)
    for k, (i, coef) in enumerate(extra):
        rows[i][nstruct + k] = Fraction(coef)
    for k, i in enumerate(arts):
        rows[i][art_start + k] = Fraction(1)

    tab = _Tableau(rows, list(raw_rhs), list(id_col), total)
    is_art = [j >= art_start for j in range(total)]

    if arts:
        tab.set_costs([Fraction(-1) if is_art[j] else _ZERO for j in range(total)])
        tab.run([True] * total)
        if tab.z < 0:
            return LpSolution(INFEASIBLE)
        for i in range(m):
            if is_art[tab.basis[i]]:
                row = tab.rows[i]
                for j in range(art_start):
                    if row[j]:
                        tab.pivot(i, j)
                        break

    sign = 1 if lp.sense == "max" else -1
    cost = [_ZERO] * total
    for j in range(n):
        c = lp.objective[j] * sign
        if c:
            for col, s in var_map[j][1]:
                cost[col] += c * s
    tab.set_costs(cost)
    allowed = [not a for a in is_art]
    if tab.run(allowed) == UNBOUNDED:
        return LpSolution(UNBOUNDED)

    colval = [_ZERO] * total
    for i, b in enumerate(tab.basis):
        colval[b] = _frac(tab.rhs[i])
    x = []
    for j in range(n):
        off, cols = var_map[j]
        x.append(off + sum((s * colval[c] for c, s in cols), _ZERO))
    duals = []
    for i in range(len(lp.constraints)):
        y = -_frac(tab.d[id_col[i]])
        if flipped[i]:
            y = -y
        duals.append(y * sign)
    obj = sum((c * v for c, v in zip(lp.objective, x)), _ZERO)
    return LpSolution(OPTIMAL, x, duals, obj)


def reduced_costs(lp: LinearProgram, dual: Sequence[Fraction]) -> list[Fraction]:
    """``c_j - sum_i dual_i * a_ij`` for every variable."""
    r = list(lp.objective)
    for y, con in zip(dual, lp.constraints):
        if y:
            for j, a in enumerate(con.coeffs):
                if a:
                    r[j] -= y * a
    return r


def verify_certificate(lp: LinearProgram, sol: LpSolution) -> bool:
    """Exact optimality check of a claimed optimal primal/dual pair.

    Checks primal feasibility, dual sign conditions, that nonzero reduced
    costs only occur at the matching finite bound, and that primal and
    dual objective values coincide.
    """
    if sol.status != OPTIMAL:
        return False
    n, mrows = lp.num_vars, len(lp.constraints)
    x, y = sol.primal, sol.dual
    if len(x) != n or len(y) != mrows:
        return False
    for j in range(n):
        if lp.lower[j] is not None and x[j] < lp.lower[j]:
            return False
        if lp.upper[j] is not None and x[j] > lp.upper[j]:
            return False
    sign = 1 if lp.sense == "max" else -1
    for con, yi in zip(lp.constraints, y):
        lhs = sum((a * v for a, v in zip(con.coeffs, x) if a), _ZERO)
        if con.relation == LE and lhs > con.rhs:
            return False
        if con.relation == GE and lhs < con.rhs:
            return False
        if con.relation == EQ and lhs != con.rhs:
            return False
        ys = yi * sign
        if con.relation == LE and ys < 0:
            return False
        if con.relation == GE and ys > 0:
            return False
    dual_obj = sum((con.rhs * yi for con, yi in zip(lp.constraints, y)), _ZERO)
    for j, r in enumerate(reduced_costs(lp, y)):
        rs = r * sign
        if rs > 0:
            if lp.upper[j] is None:
                return False
            dual_obj += r * lp.upper[j]
        elif rs < 0:
            if lp.lower[j] is None:
                return False
            dual_obj += r * lp.lower[j]
    primal_obj = sum((c * v for c, v in zip(lp.objective, x)), _ZERO)
    return primal_obj == dual_obj == sol.objective
