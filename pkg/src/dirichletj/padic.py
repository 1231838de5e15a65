"""Truncated p-adic arithmetic and the Smith-normal-form cohomology oracle.

The oracle computes finite quotients like Z_p[zeta_{p^(v-1)}] / (w(g) zeta - g^t)
directly as Smith normal forms of multiplication matrices over Z/p^M,
independently of any closed-form answer.  Precision starts at M = 15 and
escalates by 5 until two runs (M and M+2) agree; correctness never
depends on a guessed bound.

``e2_page`` dispatches the closed-form E2 entries of the homotopy
eigen / fixed-point spectral sequences for pure prime-power conductors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .cyclotomic import cyclotomic_poly, euler_phi, is_prime
from .exactalg import RationalPoly


@dataclass(frozen=True)
class PAdicInt:
    """Integer mod p^precision, canonical residue."""

    p: int
    precision: int
    residue: int

    def __post_init__(self):
        object.__setattr__(self, "residue", self.residue % self.p**self.precision)

    def _check(self, other: "PAdicInt") -> None:
        if self.p != other.p or self.precision != other.precision:
            raise ValueError("p-adic precision mismatch")

    def __add__(self, other: "PAdicInt") -> "PAdicInt":
        self._check(other)
        return PAdicInt(self.p, self.precision, self.residue + other.residue)

    def __mul__(self, other: "PAdicInt") -> "PAdicInt":
        self._check(other)
        return PAdicInt(self.p, self.precision, self.residue * other.residue)

    def __pow__(self, e: int) -> "PAdicInt":
        modulus = self.p**self.precision
        if e < 0:
            return PAdicInt(self.p, self.precision, pow(pow(self.residue, -1, modulus), -e, modulus))
        return PAdicInt(self.p, self.precision, pow(self.residue, e, modulus))

    def is_unit(self) -> bool:
        return self.residue % self.p != 0


def teichmuller(p: int, a: int, M: int) -> PAdicInt:
    """The unique (p-1)-st root of unity congruent to a mod p.

    Computed by iterating the p-th power map to its fixed point mod p^M.
    """
    if not is_prime(p) or p == 2:
        raise ValueError("p must be an odd prime")
    if a % p == 0:
        raise ValueError("a must be prime to p")
    modulus = p**M
    x = a % modulus
    for _ in range(M + 1):
        y = pow(x, p, modulus)
        if y == x:
            break
        x = y
    assert pow(x, p - 1, modulus) == 1
    return PAdicInt(p, M, x)


_TOPGEN_CACHE: dict[int, int] = {}


def topological_generator(p: int) -> int:
    """A topological generator of Z_p^x (p odd) or of 1 + 4 Z_2 (p = 2).

    For odd p this is the smallest positive primitive root mod p^2, which
    generates Z_p^x; for p = 2 the conventional choice is 5.
    """
    if p == 2:
        return 5
    if p in _TOPGEN_CACHE:
        return _TOPGEN_CACHE[p]
    if not is_prime(p):
        raise ValueError("p must be prime")
    from .characters import smallest_primitive_root

    g = smallest_primitive_root(p * p, euler_phi(p * p))
    _TOPGEN_CACHE[p] = g
    return g


# ---------------------------------------------------------------------------
# Smith normal form over Z/p^M


def _padic_invariant_exponents(rows: list[list[int]], p: int, M: int) -> list[int]:
    """Valuations of the invariant factors of a square matrix over Z/p^M.

    Minimal-valuation pivoting; exponents are capped at M (a cap signals
    insufficient precision to the stability loop).
    """
    pm = p**M
    a = [[x % pm for x in row] for row in rows]
    r = len(a)

    def val(x: int) -> int:
        if x == 0:
            return M
        v = 0
        while x % p == 0:
            x //= p
            v += 1
        return v

    exps = []
    for t in range(r):
        best, bestv = None, M
        for i in range(t, r):
            for j in range(t, r):
                v = val(a[i][j])
                if v < bestv:
                    best, bestv = (i, j), v
        if best is None:
            exps.extend([M] * (r - t))
            break
        bi, bj = best
        a[t], a[bi] = a[bi], a[t]
        for row in a:
            row[t], row[bj] = row[bj], row[t]
        piv = a[t][t]
        unit = piv // p**bestv
        inv_unit = pow(unit, -1, pm)
        a[t] = [(x * inv_unit) % pm for x in a[t]]
        pv = p**bestv
        for i in range(t + 1, r):
            x = a[i][t]
            if x:
                q = (x // pv) % (pm // pv)
                a[i] = [(y - q * z) % pm for y, z in zip(a[i], a[t])]
        for j in range(t + 1, r):
            x = a[t][j]
            if x:
                q = (x // pv) % (pm // pv)
                for i in range(r):
                    a[i][j] = (a[i][j] - q * a[i][t]) % pm
        exps.append(bestv)
    return sorted(exps)


class PrecisionError(ArithmeticError):
    """SNF invariants failed to stabilize; retry with a larger precision."""


def _stable_quotient(rows_builder, p: int, M: int):
    """Run the SNF oracle at M and M+2, escalating by 5 until stable."""
    from .homotopy import AbelianGroupExpr

    precision = M
    for _ in range(8):
        e1 = _padic_invariant_exponents(rows_builder(precision), p, precision)
        e2 = _padic_invariant_exponents(rows_builder(precision + 2), p, precision + 2)
        f1 = [e for e in e1 if 0 < e < precision]
        f2 = [e for e in e2 if 0 < e < precision + 2]
        if f1 == f2 and all(e < precision for e in e1):
            return AbelianGroupExpr.from_invariants([p**e for e in f1])
        precision += 5
    raise PrecisionError(f"quotient did not stabilize up to precision {precision}; retry with larger M")


def _mult_rows_mod(poly_mod: RationalPoly, u_coeffs: list[int], pm: int) -> list[list[int]]:
    """Rows of multiplication-by-u on Z[x]/(poly_mod), entries mod pm."""
    deg = poly_mod.degree
    mod = [int(c) for c in poly_mod.coeffs]
    rows = []
    cur = [c % pm for c in u_coeffs]

    def times_x(vec: list[int]) -> list[int]:
        out = [0] + vec[:deg]
        lead = out[deg] if len(out) > deg else 0
        out = out[:deg]
        if lead:
            for j in range(deg):
                out[j] = (out[j] - lead * mod[j]) % pm
        return [c % pm for c in out]

    cur = (cur + [0] * deg)[:deg]
    for _ in range(deg):
        rows.append(cur)
        cur = times_x(cur)
    return rows


def quotient_oracle(p: int, v: int, a: int, t: int, M: int = 15):
    """Z_p[zeta_{p^(v-1)}] / (omega^a(g) zeta - g^t) by Smith normal form.

    p odd, v >= 2, 0 <= a <= p-2.  g is the fixed topological generator;
    g^t for negative t goes through the modular inverse.  The result is
    required to be precision-stable (identical at M and M+2).
    """
    if not is_prime(p) or p == 2:
        raise ValueError("p must be an odd prime")
    if v < 2:
        raise ValueError("v must be at least 2")
    if not 0 <= a <= p - 2:
        raise ValueError("tame exponent out of range")
    phi = cyclotomic_poly(p ** (v - 1))
    g = topological_generator(p)

    def rows_builder(precision: int) -> list[list[int]]:
        pm = p**precision
        w = pow(teichmuller(p, g % p, precision).residue, a, pm)
        gt = pow(g, t, pm) if t >= 0 else pow(pow(g, -1, pm), -t, pm)
        # u = w*x - g^t in the power basis; deg Phi_{p^(v-1)} >= 2 for odd p.
        u = [(-gt) % pm, w % pm] + [0] * (phi.degree - 2)
        return _mult_rows_mod(phi, u, pm)

    return _stable_quotient(rows_builder, p, M)


def quotient_oracle_2(v: int, t: int, M: int = 15, parity: Optional[str] = None):
    """Z_2[zeta_{2^(v-2)}] / (zeta - 5^t) by Smith normal form, v >= 3.

    ``parity`` is a consistency tag: the even-character rows feed even
    exponents t, the odd-character rows odd t.
    """
    if v < 3:
        raise ValueError("v must be at least 3")
    if parity is not None:
        want = 0 if parity == "even" else 1
        if t % 2 != want:
            raise ValueError(f"exponent parity {t % 2} does not match declared {parity!r}")
    phi = cyclotomic_poly(2 ** (v - 2))

    def rows_builder(precision: int) -> list[list[int]]:
        pm = 2**precision
        gt = pow(5, t, pm) if t >= 0 else pow(pow(5, -1, pm), -t, pm)
        if phi.degree == 1:
            # Phi_2 = x + 1, so zeta reduces to -1 in the power basis.
            u = [(-1 - gt) % pm]
        else:
            u = [(-gt) % pm, 1] + [0] * (phi.degree - 2)
        return _mult_rows_mod(phi, u, pm)

    return _stable_quotient(rows_builder, 2, M)


# ---------------------------------------------------------------------------
# p-adic character data and closed-form E2 pages


@dataclass(frozen=True)
class PrimeToPPart:
    """Invariants of the prime-to-p factor chi' of a p-adic character."""

    modulus: int              # N' > 1
    wild_image_exp: int       # v_p(|image chi'|)
    image_is_p_power: bool


@dataclass(frozen=True)
class PAdicCharacterData:
    """Everything the closed-form homotopy tables consume at one prime.

    ``tame`` is the Teichmuller exponent a in [0, p-2] for odd p, and the
    parity bit (1 = odd) for p = 2.  ``prime_to_p`` is present exactly
    when the conductor has a part N' > 1 prime to p.
    """

    p: int
    v: int
    tame: int
    wild_primitive: bool = True
    prime_to_p: Optional[PrimeToPPart] = None

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError("p must be prime")
        if self.v < 0:
            raise ValueError("v must be nonnegative")
        if self.p == 2:
            if self.v == 1:
                raise ValueError("conductor exponent 1 at p = 2 cannot occur for primitive characters")
            if self.tame not in (0, 1):
                raise ValueError("2-adic tame datum is a parity bit")
        else:
            if not 0 <= self.tame <= self.p - 2:
                raise ValueError("tame exponent out of range")


def _vp(k: int, p: int) -> int:
    if k == 0:
        raise ValueError("valuation of zero")
    v, k = 0, abs(k)
    while k % p == 0:
        k //= p
        v += 1
    return v


def e2_page(chi_data: PAdicCharacterData, s: int, t: int):
    """Closed-form E2 entry of the relevant spectral sequence at (s, t).

    Only pure prime-power conductors are supported.  For odd p the pages
    are concentrated in even internal degree, so odd t is rejected; the
    2-adic KO-based pages do carry odd-degree entries and are returned
    as tabulated.
    """
    from .homotopy import AbelianGroupExpr

    if chi_data.prime_to_p is not None:
        raise ValueError("e2_page requires a pure p-power conductor")
    p, v, a = chi_data.p, chi_data.v, chi_data.tame
    zero = AbelianGroupExpr.zero()
    if s < 0:
        return zero
    if p != 2:
        if t % 2:
            raise ValueError("pages are concentrated in even internal degree for odd p")
        k = t // 2
        if v <= 1:
            if a == 0:
                # Trivial tame part: the untwisted K(1)-local page.
                if t == 0 and s in (0, 1):
                    return AbelianGroupExpr.padic(p)
                if s == 1 and k != 0 and k % (p - 1) == 0:
                    return AbelianGroupExpr.cyclic(p ** (_vp(k, p) + 1))
                return zero
            if s == 1 and (k - a) % (p - 1) == 0:
                return AbelianGroupExpr.cyclic(p ** (_vp(k, p) + 1))
            return zero
        # v >= 2: one-line page, Z/p exactly on the matching tame stripe.
        if s == 1 and (k - a) % (p - 1) == 0:
            return AbelianGroupExpr.cyclic(p)
        return zero
    # p = 2.
    if v == 0:
        if t == 0 and s in (0, 1):
            return AbelianGroupExpr.padic(2)
        if s in (0, 1) and t % 8 in (1, 2):
            return AbelianGroupExpr.cyclic(2)
        if s == 1 and t % 4 == 0 and t != 0:
            return AbelianGroupExpr.cyclic(2 ** (_vp(t // 4, 2) + 3))
        return zero
    if v == 2:
        if t % 4 == 2:
            if s == 1:
                return AbelianGroupExpr.cyclic(4)
            if s >= 2:
                return AbelianGroupExpr.cyclic(2)
            return zero
        if t % 4 == 0 and s >= 1:
            return AbelianGroupExpr.cyclic(2)
        return zero
    # v >= 3: KO-based pages over 1 + 4 Z_2, split by parity.
    if chi_data.tame == 0:
        if s == 1 and t % 4 == 0:
            return AbelianGroupExpr.cyclic(2)
        if s in (0, 1) and t % 8 in (1, 2):
            return AbelianGroupExpr.cyclic(2)
        return zero
    if s == 1 and t % 4 == 2:
        return AbelianGroupExpr.cyclic(2)
    if s in (0, 1) and t % 8 in (3, 4):
        return AbelianGroupExpr.cyclic(2)
    return zero
