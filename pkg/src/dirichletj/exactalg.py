"""Exact integer/rational linear algebra and truncated power series.

This is the computational kernel for everything else in the package:
Hermite and Smith normal forms over Z (with unimodular transforms),
rational polynomial arithmetic with extended gcd, and truncated power
series division.  No floating point anywhere.

Conventions fixed here and used throughout:

* ``BigRational`` is ``fractions.Fraction`` (always reduced, positive
  denominator).
* HNF is row-style: ``h = u * m`` with ``u`` unimodular, ``h`` in
  upper-triangular echelon form, pivots positive, and every entry above
  a pivot reduced into ``[0, pivot)``.  Lattices are row spans.
* SNF is ``d = l * m * r`` with nonnegative diagonal and the
  divisibility chain ``d[0] | d[1] | ...``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

BigRational = Fraction


# ---------------------------------------------------------------------------
# Integer matrices


class IntMatrix:
    """Dense matrix with arbitrary-precision integer entries, row-major."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Sequence[Sequence[int]]):
        self.data = [list(row) for row in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else 0
        for row in self.data:
            if len(row) != self.cols:
                raise ValueError("inconsistent row lengths")

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)])

    def copy(self) -> "IntMatrix":
        return IntMatrix(self.data)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __repr__(self) -> str:
        return f"IntMatrix({self.data!r})"

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        out = [[0] * other.cols for _ in range(self.rows)]
        for i, row in enumerate(self.data):
            for k, a in enumerate(row):
                if a:
                    orow = other.data[k]
                    target = out[i]
                    for j in range(other.cols):
                        target[j] += a * orow[j]
        return IntMatrix(out)

    def transpose(self) -> "IntMatrix":
        return IntMatrix([[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def diagonal(self) -> list[int]:
        return [self.data[i][i] for i in range(min(self.rows, self.cols))]

    def det(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = [row[:] for row in self.data]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]


def _rowop(mat: IntMatrix, i: int, j: int, a: int, b: int, c: int, d: int) -> None:
    # rows (i, j) <- (a*row_i + b*row_j, c*row_i + d*row_j); caller ensures ad-bc = +-1
    ri, rj = mat.data[i], mat.data[j]
    for k in range(mat.cols):
        x, y = ri[k], rj[k]
        ri[k] = a * x + b * y
        rj[k] = c * x + d * y


def _colop(mat: IntMatrix, i: int, j: int, a: int, b: int, c: int, d: int) -> None:
    for row in mat.data:
        x, y = row[i], row[j]
        row[i] = a * x + b * y
        row[j] = c * x + d * y


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def hermite_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Returns ``(h, u)`` with ``h = u * m``, ``u`` unimodular, ``h`` in
    upper-triangular echelon form with positive pivots, and every entry
    above a pivot reduced into ``[0, pivot)``.  Zero rows sink to the
    bottom.
    """
    h = m.copy()
    u = IntMatrix.identity(m.rows)
    pivot_row = 0
    pivots: list[tuple[int, int]] = []
    for col in range(m.cols):
        if pivot_row >= m.rows:
            break
        # Clear the column below pivot_row with gcd row transforms; when the
        # pivot already divides the entry a plain quotient step keeps the
        # pivot row untouched.
        for i in range(pivot_row + 1, m.rows):
            a, b = h.data[pivot_row][col], h.data[i][col]
            if b == 0:
                continue
            if a == 0:
                h.data[pivot_row], h.data[i] = h.data[i], h.data[pivot_row]
                u.data[pivot_row], u.data[i] = u.data[i], u.data[pivot_row]
                continue
            if b % a == 0:
                q = b // a
                _rowop(h, pivot_row, i, 1, 0, -q, 1)
                _rowop(u, pivot_row, i, 1, 0, -q, 1)
                continue
            g, s, t = _xgcd(a, b)
            _rowop(h, pivot_row, i, s, t, -(b // g), a // g)
            _rowop(u, pivot_row, i, s, t, -(b // g), a // g)
        p = h.data[pivot_row][col]
        if p == 0:
            continue
        if p < 0:
            for k in range(m.cols):
                h.data[pivot_row][k] = -h.data[pivot_row][k]
            for k in range(m.rows):
                u.data[pivot_row][k] = -u.data[pivot_row][k]
            p = -p
        # Reduce entries above the pivot into [0, p).
        for i in range(pivot_row):
            q = h.data[i][col] // p
            if q:
                for k in range(m.cols):
                    h.data[i][k] -= q * h.data[pivot_row][k]
                for k in range(m.rows):
                    u.data[i][k] -= q * u.data[pivot_row][k]
        pivots.append((pivot_row, col))
        pivot_row += 1
    return h, u


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form ``d = l * m * r`` with ``d[i] | d[i+1]``.

    Uses gcd-pivot elimination; entries stay exact integers throughout.
    """
    d = m.copy()
    l = IntMatrix.identity(m.rows)
    r = IntMatrix.identity(m.cols)
    n = min(m.rows, m.cols)
    t = 0
    while t < n:
        # Find a nonzero entry of minimal absolute value in the trailing block.
        best = None
        for i in range(t, m.rows):
            for j in range(t, m.cols):
                v = d.data[i][j]
                if v and (best is None or abs(v) < abs(d.data[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        if bi != t:
            d.data[t], d.data[bi] = d.data[bi], d.data[t]
            l.data[t], l.data[bi] = l.data[bi], l.data[t]
        if bj != t:
            _colop(d, t, bj, 0, 1, 1, 0)
            _colop(r, t, bj, 0, 1, 1, 0)
        while True:
            # Clear column t below the pivot.  Quotient steps (pivot divides
            # the entry) leave the pivot row alone; genuine gcd steps strictly
            # shrink the pivot, so the row/column alternation terminates.
            for i in range(t + 1, m.rows):
                b = d.data[i][t]
                if b == 0:
                    continue
                a = d.data[t][t]
                if b % a == 0:
                    q = b // a
                    _rowop(d, t, i, 1, 0, -q, 1)
                    _rowop(l, t, i, 1, 0, -q, 1)
                    continue
                g, s, tt = _xgcd(a, b)
                _rowop(d, t, i, s, tt, -(b // g), a // g)
                _rowop(l, t, i, s, tt, -(b // g), a // g)
            # Clear row t right of the pivot.
            dirty = False
            for j in range(t + 1, m.cols):
                b = d.data[t][j]
                if b == 0:
                    continue
                a = d.data[t][t]
                if b % a == 0:
                    q = b // a
                    _colop(d, t, j, 1, 0, -q, 1)
                    _colop(r, t, j, 1, 0, -q, 1)
                    continue
                g, s, tt = _xgcd(a, b)
                _colop(d, t, j, s, tt, -(b // g), a // g)
                _colop(r, t, j, s, tt, -(b // g), a // g)
                dirty = True
            if not dirty and all(d.data[i][t] == 0 for i in range(t + 1, m.rows)):
                break
        # Pivot must divide every remaining entry; absorb offenders and retry.
        p = d.data[t][t]
        offender = None
        for i in range(t + 1, m.rows):
            for j in range(t + 1, m.cols):
                if d.data[i][j] % p:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            _rowop(d, t, offender, 1, 1, 0, 1)
            _rowop(l, t, offender, 1, 1, 0, 1)
            continue
        t += 1
    for i in range(n):
        if d.data[i][i] < 0:
            for k in range(m.cols):
                d.data[i][k] = -d.data[i][k]
            for k in range(m.rows):
                l.data[i][k] = -l.data[i][k]
    return d, l, r


# ---------------------------------------------------------------------------
# Rational polynomials


class RationalPoly:
    """Univariate polynomial over Q, coefficients ascending by degree.

    The zero polynomial has an empty coefficient tuple; otherwise the
    leading coefficient is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int]):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"RationalPoly({list(self.coeffs)!r})"

    def __add__(self, other: "RationalPoly") -> "RationalPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPoly(
            [
                (self.coeffs[i] if i < len(self.coeffs) else 0)
                + (other.coeffs[i] if i < len(other.coeffs) else 0)
                for i in range(n)
            ]
        )

    def __sub__(self, other: "RationalPoly") -> "RationalPoly":
        return self + RationalPoly([-c for c in other.coeffs])

    def __mul__(self, other: "RationalPoly") -> "RationalPoly":
        if self.is_zero() or other.is_zero():
            return RationalPoly([])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPoly(out)

    def scale(self, c: Fraction | int) -> "RationalPoly":
        return RationalPoly([Fraction(c) * x for x in self.coeffs])

    def divmod(self, other: "RationalPoly") -> tuple["RationalPoly", "RationalPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        dlead = other.coeffs[-1]
        dd = len(other.coeffs) - 1
        while len(rem) - 1 >= dd and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < dd:
                break
            c = rem[-1] / dlead
            k = len(rem) - 1 - dd
            q[k] = c
            for j, b in enumerate(other.coeffs):
                rem[k + j] -= c * b
            rem.pop()
        return RationalPoly(q), RationalPoly(rem)

    def __mod__(self, other: "RationalPoly") -> "RationalPoly":
        return self.divmod(other)[1]

    def monic(self) -> "RationalPoly":
        if self.is_zero():
            return self
        return self.scale(1 / self.coeffs[-1])

    def evaluate(self, x: Fraction | int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def poly_gcd(a: RationalPoly, b: RationalPoly) -> RationalPoly:
    """Monic gcd over Q."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def poly_xgcd(a: RationalPoly, m: RationalPoly) -> tuple[RationalPoly, RationalPoly, RationalPoly]:
    """Extended gcd: returns (g, s, t) with s*a + t*m = g, g monic."""
    r0, r1 = a, m
    s0, s1 = RationalPoly([1]), RationalPoly([])
    t0, t1 = RationalPoly([]), RationalPoly([1])
    while not r1.is_zero():
        q, rem = r0.divmod(r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    lead = r0.coeffs[-1]
    inv = 1 / lead
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def poly_inverse_mod(a: RationalPoly, m: RationalPoly) -> RationalPoly:
    """Inverse of ``a`` modulo ``m`` over Q; requires gcd(a, m) = 1."""
    g, s, _ = poly_xgcd(a, m)
    if g.degree != 0:
        raise ValueError("inputs are not coprime; no inverse exists")
    return s % m


# ---------------------------------------------------------------------------
# Truncated power series


class PowerSeries:
    """Truncated power series over a commutative coefficient ring.

    ``coeffs`` always has length exactly ``order``.  The ring is carried
    implicitly through its elements; ``one`` must be the multiplicative
    identity so the zero element and inverses can be produced generically
    (coefficients are Fractions or cyclotomic field elements).
    """

    __slots__ = ("order", "coeffs", "one")

    def __init__(self, order: int, coeffs: Sequence, one):
        cs = list(coeffs)
        zero = one - one
        if len(cs) < order:
            cs.extend([zero] * (order - len(cs)))
        self.order = order
        self.coeffs = cs[:order]
        self.one = one

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PowerSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        return f"PowerSeries(order={self.order}, coeffs={self.coeffs!r})"

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.order, other.order)
        zero = self.one - self.one
        out = [zero] * n
        for i, a in enumerate(self.coeffs[:n]):
            for j in range(n - i):
                out[i + j] = out[i + j] + a * other.coeffs[j]
        return PowerSeries(n, out, self.one)


def series_quotient(num: PowerSeries, den: PowerSeries) -> PowerSeries:
    """Division of truncated power series.

    Requires the constant term of ``den`` to be invertible; the result
    ``q`` satisfies ``q * den == num`` up to the truncation order.
    """
    n = min(num.order, den.order)
    c0 = den.coeffs[0]
    if c0 == den.one - den.one:
        raise ZeroDivisionError("denominator has non-invertible constant term")
    inv0 = den.one / c0
    out = []
    for k in range(n):
        acc = num.coeffs[k]
        for j in range(k):
            acc = acc - out[j] * den.coeffs[k - j]
        out.append(acc * inv0)
    return PowerSeries(n, out, num.one)
