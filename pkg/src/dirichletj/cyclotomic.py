"""Exact arithmetic in Q(zeta_n), ideal lattices of Z[zeta_n], and p-adic splitting data.

Elements are stored against the power basis ``1, z, ..., z^(phi(n)-1)``
modulo the n-th cyclotomic polynomial, so representations are unique and
equality is syntactic.  Ideals are full-rank sublattices of Z[zeta_n]
kept in row-style Hermite normal form and verified to be closed under
multiplication by ``z``.

The denominator ideal of a field element ``a`` is the colon lattice
``{x in Z[zeta_n] : x*a in Z[zeta_n]}``, computed from the kernel of the
multiplication-by-``a`` matrix read modulo the lcm of its denominators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .exactalg import (
    IntMatrix,
    RationalPoly,
    hermite_normal_form,
    poly_inverse_mod,
    smith_normal_form,
)


def euler_phi(n: int) -> int:
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            result -= result // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        result -= result // m
    return result


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (desk scale)."""
    out: dict[int, int] = {}
    m = n
    p = 2
    while p * p <= m:
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
        p += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> RationalPoly:
    """The n-th cyclotomic polynomial Phi_n, monic and integral of degree phi(n).

    Computed by exact division of t^n - 1 by Phi_d over the proper
    divisors d of n.
    """
    if n < 1:
        raise ValueError("n must be positive")
    num = RationalPoly([-1] + [0] * (n - 1) + [1])  # t^n - 1
    for d in range(1, n):
        if n % d == 0:
            q, rem = num.divmod(cyclotomic_poly(d))
            assert rem.is_zero()
            num = q
    return num


class CyclotomicField:
    """Q(zeta_n) with the fixed power basis modulo Phi_n.

    Instances are immutable and cached per n; share them freely.
    """

    def __init__(self, n: int):
        self.n = n
        self.phi_n = cyclotomic_poly(n)
        self.degree = self.phi_n.degree
        assert self.degree == euler_phi(n)
        # Reduction table for z^k, k in [degree, 2*degree - 2).
        self._red: list[tuple[Fraction, ...]] = []
        if self.degree > 0:
            mod = self.phi_n
            cur = RationalPoly([0] * self.degree + [1]) % mod
            for _ in range(max(0, 2 * self.degree - 1 - self.degree)):
                self._red.append(self._vec(cur))
                cur = (cur * RationalPoly([0, 1])) % mod
        self._zeta_pow: list[tuple[Fraction, ...]] | None = None

    def _vec(self, poly: RationalPoly) -> tuple[Fraction, ...]:
        cs = list(poly.coeffs) + [Fraction(0)] * (self.degree - len(poly.coeffs))
        return tuple(cs[: self.degree])

    def element(self, coeffs: Sequence[Fraction | int]) -> "CycElement":
        cs = [Fraction(c) for c in coeffs]
        if len(cs) != self.degree:
            raise ValueError("coefficient vector has wrong length")
        return CycElement(self, tuple(cs))

    def zero(self) -> "CycElement":
        return CycElement(self, tuple([Fraction(0)] * self.degree))

    def one(self) -> "CycElement":
        return self.from_rational(1)

    def from_rational(self, q: Fraction | int) -> "CycElement":
        cs = [Fraction(0)] * self.degree
        cs[0] = Fraction(q)
        return CycElement(self, tuple(cs))

    def zeta_power(self, j: int) -> "CycElement":
        """The basis-reduced coefficient vector of zeta^j."""
        if self._zeta_pow is None:
            table = []
            mod = self.phi_n
            cur = RationalPoly([1])
            for _ in range(self.n):
                table.append(self._vec(cur))
                cur = (cur * RationalPoly([0, 1])) % mod
            self._zeta_pow = table
        return CycElement(self, self._zeta_pow[j % self.n])

    def __eq__(self, other) -> bool:
        return isinstance(other, CyclotomicField) and self.n == other.n

    def __hash__(self) -> int:
        return hash(("CyclotomicField", self.n))

    def __repr__(self) -> str:
        return f"CyclotomicField({self.n})"


@lru_cache(maxsize=None)
def get_field(n: int) -> CyclotomicField:
    return CyclotomicField(n)


class CycElement:
    """Element of Q(zeta_n) as a rational vector over the power basis."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CyclotomicField, coeffs: tuple[Fraction, ...]):
        self.field = field
        self.coeffs = coeffs

    # -- ring structure -----------------------------------------------------

    def _check(self, other: "CycElement") -> None:
        if self.field.n != other.field.n:
            raise ValueError("field mismatch: Q(zeta_%d) vs Q(zeta_%d)" % (self.field.n, other.field.n))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        self._check(other)
        return CycElement(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        self._check(other)
        return CycElement(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycElement(self.field, tuple(a * q for a in self.coeffs))
        self._check(other)
        d = self.field.degree
        # Scalar fast path: rational operands are common in series work.
        if all(c == 0 for c in other.coeffs[1:]):
            q = other.coeffs[0]
            return CycElement(self.field, tuple(a * q for a in self.coeffs))
        if all(c == 0 for c in self.coeffs[1:]):
            q = self.coeffs[0]
            return CycElement(self.field, tuple(q * b for b in other.coeffs))
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        out = list(prod[:d])
        red = self.field._red
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                rvec = red[k - d]
                for j in range(d):
                    out[j] += c * rvec[j]
        return CycElement(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "CycElement":
        if self.is_zero():
            raise ZeroDivisionError("inversion of zero")
        inv = poly_inverse_mod(RationalPoly(self.coeffs), self.field.phi_n)
        return CycElement(self.field, self.field._vec(inv))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycElement(self.field, tuple(a / q for a in self.coeffs))
        self._check(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return (
            isinstance(other, CycElement)
            and self.field.n == other.field.n
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field.n, self.coeffs))

    # -- structure queries --------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0]

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def denominator_lcm(self) -> int:
        d = 1
        for c in self.coeffs:
            d = d * c.denominator // math.gcd(d, c.denominator)
        return d

    def galois(self, sigma: int) -> "CycElement":
        return galois_apply(self, sigma)

    def embed(self, target: CyclotomicField) -> "CycElement":
        """Coerce into Q(zeta_m) for n | m via zeta_n -> zeta_m^(m/n)."""
        n, m = self.field.n, target.n
        if m % n:
            raise ValueError("no canonical embedding: %d does not divide %d" % (n, m))
        step = m // n
        out = target.zero()
        for j, c in enumerate(self.coeffs):
            if c:
                out = out + target.zeta_power(j * step) * c
        return out

    def __repr__(self) -> str:
        return f"CycElement(n={self.field.n}, {render_cyc(self)!r})"


def render_cyc(a: CycElement) -> str:
    """Canonical text form: "c0 + c1*z + ..." with rationals as p/q."""
    terms = []
    for j, c in enumerate(a.coeffs):
        if c == 0:
            continue
        if j == 0:
            terms.append(str(c))
        elif j == 1:
            terms.append(f"{c}*z" if c != 1 else "z")
        else:
            terms.append(f"{c}*z^{j}" if c != 1 else f"z^{j}")
    if not terms:
        return "0"
    return " + ".join(terms).replace("+ -", "- ")


def galois_apply(a: CycElement, sigma: int) -> CycElement:
    """The automorphism zeta -> zeta^sigma for sigma coprime to n."""
    n = a.field.n
    if math.gcd(sigma, n) != 1:
        raise ValueError("sigma must be coprime to n")
    out = a.field.zero()
    for j, c in enumerate(a.coeffs):
        if c:
            out = out + a.field.zeta_power(j * sigma) * c
    return out


# ---------------------------------------------------------------------------
# Ideal lattices


def _mult_matrix_rows(a: CycElement) -> list[list[Fraction]]:
    """Row j is the coefficient vector of z^j * a."""
    d = a.field.degree
    rows = []
    cur = a
    for _ in range(d):
        rows.append(list(cur.coeffs))
        cur = cur * a.field.zeta_power(1)
    return rows


class IdealLattice:
    """Full-rank sublattice of Z[zeta_n] in row HNF, closed under z-multiplication."""

    __slots__ = ("field", "basis")

    def __init__(self, field: CyclotomicField, basis: IntMatrix, *, _trusted: bool = False):
        if basis.rows != field.degree or basis.cols != field.degree:
            raise ValueError("basis must be a square matrix of size phi(n)")
        h, _ = hermite_normal_form(basis)
        if any(h.data[i][i] == 0 for i in range(field.degree)):
            raise ValueError("basis is singular; not a full-rank lattice")
        self.field = field
        self.basis = h
        if not _trusted:
            self._verify_ideal()

    def _verify_ideal(self) -> None:
        z = self.field.zeta_power(1)
        for row in self.basis.data:
            elt = self.field.element([Fraction(x) for x in row]) * z
            if not self._contains_vector([c for c in elt.coeffs]):
                raise ValueError("lattice is not closed under multiplication by zeta")

    def _contains_vector(self, vec: Sequence[Fraction | int]) -> bool:
        v = [Fraction(x) for x in vec]
        if any(c.denominator != 1 for c in v):
            return False
        v = [int(c) for c in v]
        h = self.basis.data
        x = v[:]
        for i in range(self.field.degree):
            p = h[i][i]
            if x[i] % p:
                return False
            q = x[i] // p
            if q:
                for k in range(i, self.field.degree):
                    x[k] -= q * h[i][k]
        return all(c == 0 for c in x)

    @classmethod
    def full_ring(cls, field: CyclotomicField) -> "IdealLattice":
        return cls(field, IntMatrix.identity(field.degree), _trusted=True)

    @classmethod
    def from_generators(cls, field: CyclotomicField, gens: Iterable[CycElement]) -> "IdealLattice":
        """Z-lattice spanned by g * z^j over all generators g."""
        rows: list[list[int]] = []
        for g in gens:
            if isinstance(g, (int, Fraction)):
                g = field.from_rational(g)
            if not g.is_integral():
                raise ValueError("ideal generators must be integral")
            for row in _mult_matrix_rows(g):
                rows.append([int(c) for c in row])
        if not rows:
            raise ValueError("no generators")
        stacked = IntMatrix(rows)
        h, _ = hermite_normal_form(stacked)
        basis = IntMatrix(h.data[: field.degree])
        return cls(field, basis)

    @classmethod
    def principal(cls, field: CyclotomicField, g) -> "IdealLattice":
        return cls.from_generators(field, [g])

    def _check(self, other: "IdealLattice") -> None:
        if self.field.n != other.field.n:
            raise ValueError("ideal field mismatch")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IdealLattice)
            and self.field.n == other.field.n
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.field.n, tuple(tuple(r) for r in self.basis.data)))

    def __repr__(self) -> str:
        return f"IdealLattice(n={self.field.n}, diag={self.basis.diagonal()})"

    def index(self) -> int:
        """Index [Z[zeta] : I] = product of HNF pivots."""
        out = 1
        for d in self.basis.diagonal():
            out *= d
        return out

    def is_full_ring(self) -> bool:
        return self.index() == 1

    def basis_elements(self) -> list[CycElement]:
        return [self.field.element([Fraction(x) for x in row]) for row in self.basis.data]

    def contains(self, x: CycElement) -> bool:
        if x.field.n != self.field.n:
            raise ValueError("ideal field mismatch")
        return self._contains_vector(x.coeffs)

    def contains_lattice(self, other: "IdealLattice") -> bool:
        self._check(other)
        return all(self._contains_vector(row) for row in other.basis.data)


def ideal_product(a: IdealLattice, b: IdealLattice) -> IdealLattice:
    a._check(b)
    gens = [x * y for x in a.basis_elements() for y in b.basis_elements()]
    return IdealLattice.from_generators(a.field, gens)


def ideal_sum(a: IdealLattice, b: IdealLattice) -> IdealLattice:
    a._check(b)
    stacked = IntMatrix(a.basis.data + b.basis.data)
    h, _ = hermite_normal_form(stacked)
    return IdealLattice(a.field, IntMatrix(h.data[: a.field.degree]))


def ideal_power(a: IdealLattice, e: int) -> IdealLattice:
    if e < 0:
        raise ValueError("negative ideal power")
    out = IdealLattice.full_ring(a.field)
    for _ in range(e):
        out = ideal_product(out, a)
    return out


def ideal_membership(x: CycElement, ideal: IdealLattice) -> bool:
    return ideal.contains(x)


def ideal_eq(a: IdealLattice, b: IdealLattice) -> bool:
    a._check(b)
    return a.basis == b.basis


def denominator_ideal(a: CycElement) -> IdealLattice:
    """Colon lattice {x in Z[zeta_n] : x*a in Z[zeta_n]}.

    With M the multiplication-by-``a`` matrix and c the lcm of its
    denominators, this is the lattice of integer vectors v with
    v*(c*M) = 0 modulo c, lifted back via Smith normal form.  It equals
    the full ring iff ``a`` is integral.
    """
    if a.is_zero():
        raise ZeroDivisionError("denominator ideal of zero")
    field = a.field
    d = field.degree
    rows = _mult_matrix_rows(a)
    c = 1
    for row in rows:
        for x in row:
            c = c * x.denominator // math.gcd(c, x.denominator)
    if c == 1:
        return IdealLattice.full_ring(field)
    amat = IntMatrix([[int(x * c) for x in row] for row in rows])
    # Solve v*A = 0 (mod c) for row vectors v: with D = L*A*R, substitute
    # w = v*L^(-1), i.e. v = w*L; constraint becomes w*D = 0 (mod c).
    dmat, lmat, _ = smith_normal_form(amat)
    scale = [c // math.gcd(dmat.data[i][i], c) if i < d else c for i in range(d)]
    gen_rows = []
    for i in range(d):
        gen_rows.append([scale[i] * lmat.data[i][j] for j in range(d)])
    h, _ = hermite_normal_form(IntMatrix(gen_rows))
    return IdealLattice(field, h)


def quotient_group(ideal: IdealLattice):
    """Z^phi(n) / lattice as a normalized abelian group expression."""
    from .homotopy import AbelianGroupExpr

    dmat, _, _ = smith_normal_form(ideal.basis)
    inv = [x for x in dmat.diagonal() if x not in (0, 1)]
    return AbelianGroupExpr.from_invariants(inv)


# ---------------------------------------------------------------------------
# p-adic splitting data (unramified part of Q_p(zeta_n)/Q_p)


@dataclass(frozen=True)
class FrobeniusData:
    """Shape of Q_p(zeta_n)/Q_p: n = p^v * n_prime with p coprime to n_prime.

    ``m`` is the residue degree (multiplicative order of p mod n_prime),
    ``ramification`` is phi(p^v), and ``coset_reps`` enumerates
    (Z/n_prime)^x modulo the cyclic subgroup generated by p.
    """

    n: int
    p: int
    v: int
    n_prime: int
    m: int
    ramification: int
    coset_reps: tuple[int, ...]


def _multiplicative_order(a: int, modulus: int) -> int:
    if modulus == 1:
        return 1
    if math.gcd(a, modulus) != 1:
        raise ValueError("element not a unit")
    order = 1
    x = a % modulus
    while x != 1:
        x = (x * a) % modulus
        order += 1
    return order


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def frobenius_data(n: int, p: int) -> FrobeniusData:
    if not is_prime(p):
        raise ValueError("p must be prime")
    v = 0
    n_prime = n
    while n_prime % p == 0:
        n_prime //= p
        v += 1
    m = _multiplicative_order(p % n_prime if n_prime > 1 else 1, n_prime)
    seen: set[int] = set()
    reps: list[int] = []
    for b in range(1, n_prime + 1):
        if n_prime == 1 and b > 1:
            break
        if math.gcd(b, n_prime) != 1:
            continue
        if b in seen:
            continue
        reps.append(b)
        x = b
        for _ in range(m):
            seen.add(x)
            x = (x * p) % n_prime if n_prime > 1 else 1
    if n_prime == 1:
        reps = [1]
    return FrobeniusData(
        n=n, p=p, v=v, n_prime=n_prime, m=m,
        ramification=euler_phi(p**v), coset_reps=tuple(reps),
    )


def padic_splitting(n: int, p: int) -> tuple[int, ...]:
    """Galois-twist exponents for the p-adic decomposition of Z[zeta_n].

    One coset representative per simple factor of Z[zeta_n] (x) Z_p; the
    factor count is phi(n_prime)/m.
    """
    return frobenius_data(n, p).coset_reps


def count_irreducible_factors_mod_p(poly: RationalPoly, p: int) -> int:
    """Number of irreducible factors of a squarefree integral poly mod p.

    Distinct-degree factorization count: each pass splits off the product
    of the degree-d irreducible factors as gcd(f, x^(p^d) - x).  Used as
    the brute-force check against ``padic_splitting``.
    """
    f = [int(c) % p for c in poly.coeffs]
    while f and f[-1] == 0:
        f.pop()
    if len(f) <= 1:
        raise ValueError("polynomial is constant mod p")
    inv_lead = pow(f[-1], -1, p)
    f = [(c * inv_lead) % p for c in f]

    def pmod(a: list[int], m: list[int]) -> list[int]:
        a = a[:]
        inv = pow(m[-1], -1, p)
        while len(a) >= len(m):
            c = (a[-1] * inv) % p
            if c:
                k = len(a) - len(m)
                for j in range(len(m)):
                    a[k + j] = (a[k + j] - c * m[j]) % p
            a.pop()
        while a and a[-1] == 0:
            a.pop()
        return a

    def pmul(a: list[int], b: list[int], m: list[int]) -> list[int]:
        if not a or not b:
            return []
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] = (out[i + j] + x * y) % p
        return pmod(out, m)

    def ppow(base: list[int], e: int, m: list[int]) -> list[int]:
        result = [1]
        while e:
            if e & 1:
                result = pmul(result, base, m)
            base = pmul(base, base, m)
            e >>= 1
        return result

    def pgcd(a: list[int], b: list[int]) -> list[int]:
        while b:
            a, b = b, pmod(a, b)
        if a:
            inv = pow(a[-1], -1, p)
            a = [(c * inv) % p for c in a]
        return a

    def pdiv(a: list[int], b: list[int]) -> list[int]:
        q = [0] * (len(a) - len(b) + 1)
        rem = a[:]
        inv = pow(b[-1], -1, p)
        while len(rem) >= len(b):
            c = (rem[-1] * inv) % p
            k = len(rem) - len(b)
            q[k] = c
            for j in range(len(b)):
                rem[k + j] = (rem[k + j] - c * b[j]) % p
            rem.pop()
        assert not any(rem)
        return q

    count = 0
    remaining = f
    h = pmod([0, 1], remaining)  # x mod remaining
    d = 0
    while len(remaining) - 1 > 0:
        d += 1
        if 2 * d > len(remaining) - 1:
            count += 1
            break
        h = ppow(h, p, remaining)
        diff = h[:] + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        while diff and diff[-1] == 0:
            diff.pop()
        g = pgcd(remaining, diff)
        if len(g) > 1:
            count += (len(g) - 1) // d
            remaining = pdiv(remaining, g)
            if len(remaining) - 1 > 0:
                h = pmod(h, remaining)
    return count
