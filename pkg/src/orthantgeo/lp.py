"""Exact rational linear programming for strict feasibility questions.

Every number is an exact rational. The public API speaks
:class:`fractions.Fraction`; the simplex core runs on ``gmpy2.mpq``, which
is the same field with much cheaper arithmetic, and converts back at the
boundary.

The workhorse is :func:`solve_standard_lp`, a dense two-phase tableau
simplex with Bland's anti-cycling rule for ``min c.y`` subject to
``A y = b, y >= 0``. Strict systems are decided by maximizing a common
slack ``t``; the slack LP is solved through its dual, which has only
``d + 1`` equality rows however many inequalities the system carries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from gmpy2 import mpq

Rational = Fraction

_ZERO = mpq(0)
_ONE = mpq(1)


def to_rational(value) -> Fraction:
    """Coerce ints, strings (``"p/q"``), Fractions and mpq values to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if type(value).__name__ == "mpq":
        return Fraction(int(value.numerator), int(value.denominator))
    if isinstance(value, float):
        raise TypeError("floating-point values are not accepted in exact geometry code")
    return Fraction(value)


def format_rational(q) -> str:
    """Canonical ``"p/q"`` text, lowest terms, ``"0/1"`` for zero."""
    q = to_rational(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def _q(value) -> mpq:
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    return mpq(value)


def _frac(value: mpq) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


# --------------------------------------------------------------------------
# systems of strict inequalities


@dataclass(frozen=True)
class StrictRow:
    """``coeffs . x  rel  rhs`` with ``rel`` either ``"<"`` or ``">"``."""

    coeffs: tuple[Fraction, ...]
    rhs: Fraction
    rel: str

    def __post_init__(self) -> None:
        if self.rel not in ("<", ">"):
            raise ValueError(f"relation must be '<' or '>', got {self.rel!r}")
        object.__setattr__(self, "coeffs", tuple(to_rational(c) for c in self.coeffs))
        object.__setattr__(self, "rhs", to_rational(self.rhs))

    def as_greater(self) -> tuple[tuple[Fraction, ...], Fraction]:
        """The same row written as ``a . x > b``."""
        if self.rel == ">":
            return self.coeffs, self.rhs
        return tuple(-c for c in self.coeffs), -self.rhs

    def holds(self, point: Sequence) -> bool:
        lhs = sum((to_rational(c) * to_rational(x) for c, x in zip(self.coeffs, point)), Fraction(0))
        return lhs > self.rhs if self.rel == ">" else lhs < self.rhs


@dataclass(frozen=True)
class StrictSystem:
    dimension: int
    rows: tuple[StrictRow, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(self.rows))
        for row in self.rows:
            if len(row.coeffs) != self.dimension:
                raise ValueError(f"row has {len(row.coeffs)} coefficients, system dimension is {self.dimension}")

    @property
    def homogeneous(self) -> bool:
        return all(row.rhs == 0 for row in self.rows)

    def satisfied_by(self, point: Sequence) -> bool:
        return len(point) == self.dimension and all(row.holds(point) for row in self.rows)


# --------------------------------------------------------------------------
# simplex core


@dataclass
class LPResult:
    status: str  # "optimal", "infeasible" or "unbounded"
    value: Fraction | None = None
    solution: list[Fraction] | None = None
    duals: list[Fraction] | None = None  # one simplex multiplier per equality row


def _solve(c: list[mpq], rows: list[list[mpq]], b: list[mpq], phase_one_only: bool = False):
    """Two-phase Bland simplex on mpq data; returns (status, value, y, duals)."""
    m = len(rows)
    n = len(c)
    sign = []
    tab = []
    for i in range(m):
        row = list(rows[i])
        rhs = b[i]
        s = 1
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
            s = -1
        sign.append(s)
        art = [_ZERO] * m
        art[i] = _ONE
        tab.append(row + art + [rhs])
    width = n + m
    basis = [n + i for i in range(m)]

    def pivot(r: int, col: int, obj: list[mpq]) -> None:
        prow = tab[r]
        pv = prow[col]
        if pv != _ONE:
            inv = _ONE / pv
            prow = [v * inv for v in prow]
            tab[r] = prow
        nz = [j for j in range(width + 1) if prow[j]]
        for i in range(m):
            if i == r:
                continue
            row = tab[i]
            f = row[col]
            if f:
                for j in nz:
                    row[j] -= f * prow[j]
        f = obj[col]
        if f:
            for j in nz:
                obj[j] -= f * prow[j]
        basis[r] = col

    def run(obj: list[mpq], allowed: int) -> str:
        # obj[j] holds reduced costs, obj[width] holds minus the objective value
        while True:
            col = -1
            for j in range(allowed):
                if obj[j] < 0:
                    col = j
                    break
            if col < 0:
                return "optimal"
            best = None
            r = -1
            for i in range(m):
                a = tab[i][col]
                if a > 0:
                    ratio = tab[i][width] / a
                    if best is None or ratio < best or (ratio == best and basis[i] < basis[r]):
                        best = ratio
                        r = i
            if r < 0:
                return "unbounded"
            pivot(r, col, obj)

    # phase one: minimize the sum of artificials
    obj = [_ZERO] * (width + 1)
    for i in range(m):
        row = tab[i]
        for j in range(n):
            if row[j]:
                obj[j] -= row[j]
        obj[width] -= row[width]
    run(obj, n)
    if obj[width] != 0:
        return "infeasible", None, None, None
    # drive zero-valued artificials out of the basis where possible
    for r in range(m):
        if basis[r] >= n:
            row = tab[r]
            for j in range(n):
                if row[j]:
                    pivot(r, j, obj)
                    break
            # otherwise the row is redundant; its artificial stays basic at zero
    if phase_one_only:
        y = [_ZERO] * n
        for i, col in enumerate(basis):
            if col < n:
                y[col] = tab[i][width]
        return "optimal", _ZERO, y, None

    obj = [_ZERO] * (width + 1)
    for j in range(n):
        obj[j] = c[j]
    for i, col in enumerate(basis):
        cb = c[col] if col < n else _ZERO
        if cb:
            row = tab[i]
            for j in range(width + 1):
                if row[j]:
                    obj[j] -= cb * row[j]
    status = run(obj, n)
    if status == "unbounded":
        return "unbounded", None, None, None
    y = [_ZERO] * n
    for i, col in enumerate(basis):
        if col < n:
            y[col] = tab[i][width]
    value = -obj[width]
    # reduced cost of artificial i is -pi'_i for the sign-normalized row
    duals = [-obj[n + i] * sign[i] for i in range(m)]
    return "optimal", value, y, duals


def solve_standard_lp(c: Sequence, a: Sequence[Sequence], b: Sequence) -> LPResult:
    """Minimize ``c.y`` subject to ``a y = b`` and ``y >= 0``, exactly."""
    n = len(c)
    for row in a:
        if len(row) != n:
            raise ValueError("constraint row length does not match objective length")
    if len(a) != len(b):
        raise ValueError("number of rows and right-hand sides differ")
    status, value, y, duals = _solve([_q(v) for v in c], [[_q(v) for v in row] for row in a], [_q(v) for v in b])
    if status != "optimal":
        return LPResult(status)
    return LPResult(status, _frac(value), [_frac(v) for v in y], [_frac(v) for v in duals])


def _greater_rows(system: StrictSystem) -> list[tuple[list[mpq], mpq]]:
    out = []
    for row in system.rows:
        coeffs, rhs = row.as_greater()
        out.append(([_q(v) for v in coeffs], _q(rhs)))
    return out


def max_slack(system: StrictSystem) -> tuple[Fraction, list[Fraction]]:
    """Maximize ``t <= 1`` over ``a_i.x - t >= b_i``; return (t*, maximizing x).

    Solved through the dual: minimize ``sum(-b_i y_i) + y_0`` over ``y >= 0``
    with ``sum(y_i a_i) = 0`` and ``sum(y_i) + y_0 = 1``. The simplex
    multipliers of the dual optimum are the primal point ``(x, t)``.
    """
    return max_slack_prepared(system.dimension, _greater_rows(system))


def max_slack_prepared(d: int, rows: Sequence[tuple[Sequence[mpq], mpq]]) -> tuple[Fraction, list[Fraction]]:
    """:func:`max_slack` on rows already written as ``(a, b)`` for ``a.x > b`` in mpq."""
    m = len(rows)
    cost = [-rhs for _, rhs in rows] + [_ONE]
    eq = []
    for j in range(d):
        eq.append([coeffs[j] for coeffs, _ in rows] + [_ZERO])
    eq.append([_ONE] * (m + 1))
    rhs = [_ZERO] * d + [_ONE]
    status, value, _, duals = _solve(cost, eq, rhs)
    if status != "optimal":  # the dual is always feasible and bounded below by duality
        raise RuntimeError(f"slack LP dual reported {status}")
    # the x-rows carry +a instead of -a, so their multipliers are -x
    x = [-_frac(v) for v in duals[:d]]
    return _frac(value), x


def strictly_feasible(system: StrictSystem) -> list[Fraction] | None:
    """A point satisfying every strict row, or None when none exists."""
    t, x = max_slack(system)
    if t <= 0:
        return None
    if not system.satisfied_by(x):
        raise RuntimeError("slack LP witness failed substitution")
    return x


def homogeneous_strictly_feasible(system: StrictSystem) -> list[Fraction] | None:
    """Decide a homogeneous strict system through the rescaled system ``a.x >= 1``.

    Scale invariance makes the two equivalent: any strict solution can be
    scaled until every ``a.x`` is at least 1. The rescaled system is a pure
    phase-one problem in standard form with ``x = x+ - x-``.
    """
    if not system.homogeneous:
        raise ValueError("homogeneous_strictly_feasible needs every right-hand side equal to 0")
    d = system.dimension
    rows = _greater_rows(system)
    m = len(rows)
    a = []
    for i, (coeffs, _) in enumerate(rows):
        surplus = [_ZERO] * m
        surplus[i] = -_ONE
        a.append(coeffs + [-v for v in coeffs] + surplus)
    status, _, y, _ = _solve([_ZERO] * (2 * d + m), a, [_ONE] * m, phase_one_only=True)
    if status != "optimal":
        return None
    x = [_frac(y[j] - y[d + j]) for j in range(d)]
    if not system.satisfied_by(x):
        raise RuntimeError("rescaled witness failed substitution")
    return x


def in_convex_hull(point: Sequence, vertices: Sequence[Sequence]) -> bool:
    """Whether ``point`` is a convex combination of ``vertices``."""
    d = len(point)
    for v in vertices:
        if len(v) != d:
            raise ValueError(f"dimension mismatch: point has {d} coordinates, vertex has {len(v)}")
    if not vertices:
        return False
    k = len(vertices)
    a = [[_q(vertices[i][j]) for i in range(k)] for j in range(d)]
    a.append([_ONE] * k)
    b = [_q(v) for v in point] + [_ONE]
    status, _, _, _ = _solve([_ZERO] * k, a, b, phase_one_only=True)
    return status == "optimal"


def separating_hyperplane(point: Sequence, vertices: Sequence[Sequence]) -> tuple[list[Fraction], Fraction] | None:
    """``(w, c)`` with ``w.p > c > w.v`` for every vertex, if one exists."""
    d = len(point)
    rows = [StrictRow(tuple(to_rational(x) for x in point) + (Fraction(-1),), 0, ">")]
    for v in vertices:
        rows.append(StrictRow(tuple(-to_rational(x) for x in v) + (Fraction(1),), 0, ">"))
    sol = strictly_feasible(StrictSystem(d + 1, rows))
    if sol is None:
        return None
    return sol[:d], sol[d]


# --------------------------------------------------------------------------
# Fourier-Motzkin oracle (low dimension only)


def fourier_motzkin_feasible(system: StrictSystem) -> bool:
    """Decide strict feasibility by eliminating every variable in turn.

    Doubly exponential in the worst case; meant as an independent check for
    ``dimension <= 4``. Runs on plain Fractions, not on the simplex core.
    """
    # each row: (coeffs list, rhs, strict) meaning coeffs.x > rhs (or >=)
    rows = []
    for row in system.rows:
        coeffs, rhs = row.as_greater()
        rows.append((list(coeffs), rhs, True))
    for j in range(system.dimension):
        pos, neg, rest = [], [], []
        for r in rows:
            a = r[0][j]
            (pos if a > 0 else neg if a < 0 else rest).append(r)
        combined = list(rest)
        for pc, pb, ps in pos:
            for nc, nb, ns in neg:
                alpha, beta = pc[j], -nc[j]
                coeffs = [beta * p + alpha * q for p, q in zip(pc, nc)]
                coeffs[j] = Fraction(0)
                combined.append((coeffs, beta * pb + alpha * nb, ps or ns))
        rows = _dedupe_rows(combined)
    for _, rhs, strict in rows:
        if strict and not rhs < 0:
            return False
        if not strict and not rhs <= 0:
            return False
    return True


def _dedupe_rows(rows: Iterable) -> list:
    seen = {}
    for coeffs, rhs, strict in rows:
        scale = next((abs(c) for c in coeffs if c), None)
        if scale is None:
            key = (tuple(coeffs), rhs / abs(rhs) if rhs else rhs, strict)
        else:
            key = (tuple(c / scale for c in coeffs), rhs / scale, strict)
        seen[key] = (list(key[0]), key[1], strict)
    return list(seen.values())
