"""Exact rational linear programming: two-phase tableau simplex with Bland's rule."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from gmpy2 import mpq

from . import qmath

_REL = ("<=", ">=", "=")
_ZERO = Fraction(0)
_QZERO = mpq(0)


def _to_fraction(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


@dataclass(frozen=True)
class LPProblem:
    """Optimize ``c . x`` subject to ``A x (rel) b``.

    ``nonneg[j]`` marks ``x_j >= 0``; unmarked variables are free.
    """

    A: tuple
    relations: tuple
    b: tuple
    c: tuple
    nonneg: tuple | None = None
    sense: str = "max"

    def __post_init__(self):
        A = tuple(tuple(Fraction(v) for v in row) for row in self.A)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", tuple(Fraction(v) for v in self.b))
        object.__setattr__(self, "c", tuple(Fraction(v) for v in self.c))
        object.__setattr__(self, "relations", tuple(self.relations))
        n = len(self.c)
        nonneg = (True,) * n if self.nonneg is None else tuple(bool(v) for v in self.nonneg)
        object.__setattr__(self, "nonneg", nonneg)
        if len(A) != len(self.b) or len(A) != len(self.relations):
            raise ValueError(f"dimension mismatch: {len(A)} rows, {len(self.b)} rhs, {len(self.relations)} relations")
        for row in A:
            if len(row) != n:
                raise ValueError(f"dimension mismatch: row of length {len(row)} for {n} variables")
        if len(nonneg) != n:
            raise ValueError("dimension mismatch: nonneg flags")
        bad = [r for r in self.relations if r not in _REL]
        if bad:
            raise ValueError(f"unknown relations {bad}")
        if self.sense not in ("max", "min"):
            raise ValueError(f"sense must be 'max' or 'min', got {self.sense!r}")

    @property
    def num_vars(self) -> int:
        return len(self.c)


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Fraction | None = None
    x: tuple | None = None
    dual: tuple | None = field(default=None, compare=False)

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"

    @property
    def feasible(self) -> bool:
        return self.status != "infeasible"


class _Tableau:
    def __init__(self, rows, rhs, basis):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis

    def pivot(self, r: int, col: int) -> None:
        rows, rhs = self.rows, self.rhs
        prow = rows[r]
        p = prow[col]
        if p != 1:
            prow = [v / p for v in prow]
            rows[r] = prow
            rhs[r] = rhs[r] / p
        nz = [k for k, v in enumerate(prow) if v]
        for i in range(len(rows)):
            if i == r:
                continue
            row = rows[i]
            f = row[col]
            if f:
                for k in nz:
                    row[k] -= f * prow[k]
                rhs[i] -= f * rhs[r]
        self.basis[r] = col

    def reduced_costs(self, cost):
        n = len(cost)
        red = list(cost)
        value = _QZERO
        for i, bcol in enumerate(self.basis):
            cb = cost[bcol]
            if cb:
                row = self.rows[i]
                for k in range(n):
                    if row[k]:
                        red[k] -= cb * row[k]
                value += cb * self.rhs[i]
        return red, value

    def run(self, cost, allowed):
        """Maximize ``cost``; returns "optimal" or ("unbounded", col)."""
        while True:
            red, _ = self.reduced_costs(cost)
            col = next((k for k in allowed if red[k] > 0), None)
            if col is None:
                return "optimal", None
            best = None
            for i, row in enumerate(self.rows):
                a = row[col]
                if a > 0:
                    key = (self.rhs[i] / a, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return "unbounded", col
            self.pivot(best[1], col)


def lp_solve(p: LPProblem) -> LPResult:
    """Solve exactly; pivoting runs on gmpy2 rationals, results are Fractions."""
    m = len(p.A)
    n = p.num_vars
    # column layout: structural (split free vars), then slacks, then artificials
    cols: list[tuple[int, int]] = []  # (original var, sign)
    for j in range(n):
        cols.append((j, 1))
        if not p.nonneg[j]:
            cols.append((j, -1))
    ns = len(cols)
    slack_of: dict[int, int] = {}
    for i, rel in enumerate(p.relations):
        if rel != "=":
            slack_of[i] = ns + len(slack_of)
    nt = ns + len(slack_of)

    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    flips: list[int] = []
    for i in range(m):
        row = [mpq(p.A[i][j]) * s for j, s in cols] + [_QZERO] * len(slack_of)
        if i in slack_of:
            row[slack_of[i]] = mpq(1 if p.relations[i] == "<=" else -1)
        b = mpq(p.b[i])
        sign = 1
        if b < 0:
            row = [-v for v in row]
            b = -b
            sign = -1
        rows.append(row)
        rhs.append(b)
        flips.append(sign)
    std_rows = [list(r) for r in rows]

    basis = []
    n_art = 0
    for i in range(m):
        s = slack_of.get(i)
        if s is not None and rows[i][s] == 1:
            basis.append(s)
        else:
            basis.append(nt + n_art)
            n_art += 1
    width = nt + n_art
    for i in range(m):
        rows[i].extend([_QZERO] * n_art)
        if basis[i] >= nt:
            rows[i][basis[i]] = mpq(1)

    tab = _Tableau(rows, rhs, basis)
    row_ids = list(range(m))
    if n_art:
        cost1 = [_QZERO] * nt + [mpq(-1)] * n_art
        tab.run(cost1, range(width))
        _, v1 = tab.reduced_costs(cost1)
        if v1 < 0:
            return LPResult("infeasible")
        # drive zero-level artificials out; drop redundant rows
        i = 0
        while i < len(tab.rows):
            if tab.basis[i] >= nt:
                col = next((k for k in range(nt) if tab.rows[i][k] != 0), None)
                if col is None:
                    del tab.rows[i], tab.rhs[i], tab.basis[i], row_ids[i]
                    continue
                tab.pivot(i, col)
            i += 1
        for r in tab.rows:
            del r[nt:]

    obj = [mpq(c if p.sense == "max" else -c) for c in p.c]
    cost = [obj[j] * s for j, s in cols] + [_QZERO] * len(slack_of)
    status, col = tab.run(cost, range(nt))
    x = [_QZERO] * n
    for i, bcol in enumerate(tab.basis):
        if bcol < ns:
            j, s = cols[bcol]
            x[j] += s * tab.rhs[i]
    x = tuple(_to_fraction(v) for v in x)
    if status == "unbounded":
        return LPResult("unbounded", None, x)
    _, value = tab.reduced_costs(cost)
    # dual: solve B^T y = c_B on the surviving standard-form rows
    bmat = [[std_rows[r][bcol] for r in row_ids] for bcol in tab.basis]
    ystd = qmath.solve(bmat, [[cost[bcol]] for bcol in tab.basis], field=mpq) if bmat else ()
    y = [_ZERO] * m
    for k, r in enumerate(row_ids):
        y[r] = _to_fraction(ystd[k][0]) * flips[r]
    value = _to_fraction(value)
    if p.sense == "min":
        value = -value
        y = [-v for v in y]
    return LPResult("optimal", value, x, tuple(y))


def check_certificate(p: LPProblem, res: LPResult) -> bool:
    """Verify primal feasibility, dual feasibility and equal objectives exactly."""
    if not res.optimal:
        return False
    x, y = res.x, res.dual
    for i, row in enumerate(p.A):
        lhs = qmath.dot(row, x)
        rel = p.relations[i]
        if (rel == "<=" and lhs > p.b[i]) or (rel == ">=" and lhs < p.b[i]) or (rel == "=" and lhs != p.b[i]):
            return False
    if any(p.nonneg[j] and x[j] < 0 for j in range(p.num_vars)):
        return False
    if qmath.dot(p.c, x) != res.value:
        return False
    # sign conventions for max: y >= 0 on <=, y <= 0 on >=; for min reversed
    flip = 1 if p.sense == "max" else -1
    for i, rel in enumerate(p.relations):
        if rel == "<=" and flip * y[i] < 0:
            return False
        if rel == ">=" and flip * y[i] > 0:
            return False
    for j in range(p.num_vars):
        aty = sum((p.A[i][j] * y[i] for i in range(len(p.A))), _ZERO)
        if p.nonneg[j]:
            if flip * (aty - p.c[j]) < 0:
                return False
        elif aty != p.c[j]:
            return False
    return qmath.dot(p.b, y) == res.value
