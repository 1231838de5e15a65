"""Dedekind zeta special values of abelian fields and the J(K) comparison.

An abelian field K is specified by a cyclotomic level N and generators of
H = Gal(Q(zeta_N)/K) inside (Z/N)^x.  Special values are exact products
of Dirichlet L-values over the characters trivial on H (each reduced to
its primitive representative), with rationality asserted rather than
assumed.

``verify_jk`` compares the denominator of zeta_K(1-2t) against
pi_{4t-1}(J(K)[1/|H|]) as finite groups away from |H|.  For K = Q the
homotopy side is the classical image of J, whose order is the
denominator of B_{2t}/(4t) — exactly twice the denominator of
zeta(1-2t); the comparison normalizes by that factor of 2 at the prime 2
when |H| is odd (which forces K = Q, since -1 in H makes |H| even for
any N > 2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .bernoulli import l_value
from .characters import DirichletCharacter, enumerate_characters, _value_exponent
from .cyclotomic import factorize, get_field
from .homotopy import AbelianGroupExpr, invert_primes, pi_JK


@dataclass(frozen=True)
class AbelianFieldSpec:
    """Cyclotomic level N and unit generators of H = Gal(Q(zeta_N)/K)."""

    modulus: int
    subgroup_gens: tuple[int, ...]

    def __post_init__(self):
        for g in self.subgroup_gens:
            if self.modulus > 1 and math.gcd(g, self.modulus) != 1:
                raise ValueError(f"{g} is not a unit mod {self.modulus}")

    def subgroup(self) -> set[int]:
        N = self.modulus
        if N == 1:
            return {0}
        H = {1}
        frontier = [1]
        while frontier:
            x = frontier.pop()
            for g in self.subgroup_gens:
                y = (x * g) % N
                if y not in H:
                    H.add(y)
                    frontier.append(y)
        return H


def field_characters(spec: AbelianFieldSpec) -> list[DirichletCharacter]:
    """Characters mod N trivial on H; exactly [(Z/N)^x : H] of them."""
    H = spec.subgroup()
    out = []
    for chi in enumerate_characters(spec.modulus):
        if all(_value_exponent(chi, h) == 0 for h in H if h != 0):
            out.append(chi)
    return out


def is_totally_real(spec: AbelianFieldSpec) -> bool:
    """K is totally real iff complex conjugation -1 lies in H."""
    if spec.modulus <= 2:
        return True
    return (spec.modulus - 1) in spec.subgroup()


def zeta_special_value(spec: AbelianFieldSpec, s: int) -> Fraction:
    """zeta_K(s) at s = 1 - k as the exact product of L-values.

    Each factor is computed over its own minimal cyclotomic field and
    embedded into Q(zeta_lcm); the product must come out rational (the
    character set is Galois-stable), which is asserted.
    """
    k = 1 - s
    if k < 1:
        raise ValueError("special values only at s = 1 - k with k >= 1")
    chis = field_characters(spec)
    big = 1
    for chi in chis:
        n = chi.order()
        big = big * n // math.gcd(big, n)
    field = get_field(big)
    prod = field.one()
    for chi in chis:
        prod = prod * l_value(chi, s).embed(field)
    if not prod.is_rational():
        raise AssertionError("zeta special value came out irrational; Galois-stability bug")
    return prod.rational_value()


def verify_jk(spec: AbelianFieldSpec, t: int) -> dict:
    """Compare pi_{4t-1}(J(K)[1/|H|]) with Z[1/|H|] / D_{K,2t}.

    Both sides are normalized as finite groups prime to |H|.  When |H|
    is odd (K = Q) the arithmetic side's 2-part is doubled, matching the
    classical B_{2t}/(4t) normalization of the image of J.
    """
    N = spec.modulus
    if N > 1 and len(factorize(N)) != 1:
        raise ValueError("N must be 1 or a prime power")
    if not is_totally_real(spec):
        raise ValueError("K must be totally real (-1 in H)")
    if t < 1:
        raise ValueError("t must be positive")
    H = spec.subgroup()
    hsize = len(H)
    zeta = zeta_special_value(spec, 1 - 2 * t)
    if zeta == 0:
        raise AssertionError("zeta_K(1-2t) vanished for a totally real field")
    denominator = zeta.denominator
    adjusted = denominator
    if hsize % 2 == 1:
        # K = Q: the homotopy side is Z/D_{2t} with D_{2t} = 2 * denominator.
        adjusted *= 2
    arithmetic = invert_primes(AbelianGroupExpr.cyclic(adjusted), set(factorize(hsize)))
    homotopy = pi_JK(N, spec.subgroup_gens, 4 * t - 1, invert_G=True)
    ok = arithmetic == homotopy
    return {
        "modulus": N,
        "subgroup": sorted(H),
        "t": t,
        "zeta_value": str(zeta),
        "denominator": denominator,
        "arithmetic_side": arithmetic.render(),
        "homotopy_side": homotopy.render(),
        "ok": ok,
    }
