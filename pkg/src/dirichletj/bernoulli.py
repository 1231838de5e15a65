"""Ordinary and generalized Bernoulli numbers, L-values, denominator ideals.

Sign convention: ordinary Bernoulli numbers come from
``F(t) = t e^t / (e^t - 1)``, so B_1 = +1/2.  This differs from the
common B_1 = -1/2 convention and is used consistently everywhere,
including the Bernoulli-polynomial oracle (B_k here equals B_k(1) of
the classical Bernoulli polynomial).

Generalized Bernoulli numbers B_{k,chi} are computed two independent
ways and cross-asserted on every call:

* generating function: k! times the t^k coefficient of
  ``sum_a chi(a) t e^{at} / (e^{Nt} - 1)``, via truncated series division
  over Q(zeta_ord(chi));
* Bernoulli-polynomial sum: ``N^(k-1) sum_a chi(a) B_k(a/N)``.

Both use the primitive representative of chi (the defining sum runs over
the conductor).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .characters import (
    DirichletCharacter,
    conductor,
    evaluate,
    factor_local,
    is_primitive,
    parity,
    primitivize,
    smallest_primitive_root,
    tame_order,
)
from .cyclotomic import (
    CycElement,
    IdealLattice,
    denominator_ideal,
    factorize,
    get_field,
    ideal_membership,
    ideal_power,
    ideal_sum,
)
from .exactalg import PowerSeries, series_quotient


@lru_cache(maxsize=None)
def _bernoulli_list(k_max: int) -> tuple[Fraction, ...]:
    # F(t) = e^t / ((e^t - 1)/t); both series have invertible constant term.
    order = k_max + 2
    fact = [1] * (order + 1)
    for i in range(1, order + 1):
        fact[i] = fact[i - 1] * i
    num = PowerSeries(order, [Fraction(1, fact[j]) for j in range(order)], Fraction(1))
    den = PowerSeries(order, [Fraction(1, fact[j + 1]) for j in range(order)], Fraction(1))
    q = series_quotient(num, den)
    return tuple(q.coeffs[j] * fact[j] for j in range(k_max + 1))


def bernoulli_number(k: int) -> Fraction:
    """B_k with B_1 = +1/2; zero for odd k >= 3."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return _bernoulli_list(k)[k]


@lru_cache(maxsize=None)
def _bernoulli_poly_coeffs(k: int) -> tuple[Fraction, ...]:
    # Classical Bernoulli polynomial B_k(x) = sum C(k,j) B_j^- x^(k-j);
    # the only place the minus convention (B_1^- = -1/2) enters.
    out = []
    for j in range(k + 1):
        bj = bernoulli_number(j)
        if j == 1:
            bj = -bj
        out.append(Fraction(math.comb(k, j)) * bj)
    return tuple(out)


def bernoulli_polynomial(k: int, x: Fraction) -> Fraction:
    cs = _bernoulli_poly_coeffs(k)
    acc = Fraction(0)
    for j, c in enumerate(cs):
        acc += c * x ** (k - j)
    return acc


def _gbn_series(chi: DirichletCharacter, k: int) -> CycElement:
    """k! [t^k] of sum_a chi(a) e^{at} / ((e^{Nt} - 1)/t) over Q(zeta_ord)."""
    N = chi.modulus
    field = get_field(chi.order())
    order = k + 2
    fact = [1] * (order + 2)
    for i in range(1, order + 2):
        fact[i] = fact[i - 1] * i
    values = [(a, evaluate(chi, a)) for a in range(1, N + 1)]
    num_coeffs = []
    for j in range(order):
        acc = field.zero()
        for a, val in values:
            if val is not None:
                acc = acc + val * Fraction(a**j, fact[j])
        num_coeffs.append(acc)
    den_coeffs = [field.from_rational(Fraction(N ** (j + 1), fact[j + 1])) for j in range(order)]
    one = field.one()
    q = series_quotient(PowerSeries(order, num_coeffs, one), PowerSeries(order, den_coeffs, one))
    return q.coeffs[k] * Fraction(fact[k])


def _gbn_polysum(chi: DirichletCharacter, k: int) -> CycElement:
    """Oracle: N^(k-1) sum_a chi(a) B_k(a/N)."""
    N = chi.modulus
    field = get_field(chi.order())
    acc = field.zero()
    for a in range(1, N + 1):
        val = evaluate(chi, a)
        if val is not None:
            acc = acc + val * bernoulli_polynomial(k, Fraction(a, N))
    return acc * Fraction(N) ** (k - 1)


@lru_cache(maxsize=None)
def _gbn_primitive(structure_modulus: int, index: int, k: int) -> CycElement:
    from .characters import character_from_index

    chi = character_from_index(structure_modulus, index)
    by_series = _gbn_series(chi, k)
    by_polysum = _gbn_polysum(chi, k)
    if by_series != by_polysum:
        raise AssertionError(
            f"generating-function and polynomial-sum pipelines disagree for "
            f"chi = {structure_modulus}:{index}, k = {k}"
        )
    return by_series


def gbn(chi: DirichletCharacter, k: int) -> CycElement:
    """Generalized Bernoulli number B_{k,chi} in Q(zeta_ord(chi)).

    Imprimitive characters are reduced to their primitive representative
    first; the two computation pipelines are asserted equal on every call.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    prim = primitivize(chi)
    return _gbn_primitive(prim.modulus, prim.index(), k)


def l_value(chi: DirichletCharacter, s: int) -> CycElement:
    """L(s; chi) = -B_{k,chi}/k at s = 1 - k, k >= 1."""
    k = 1 - s
    if k < 1:
        raise ValueError("special values only at s = 1 - k with k >= 1")
    return gbn(chi, k) * Fraction(-1, k)


def d2k(k: int) -> int:
    """Denominator of B_{2k}/(4k) in lowest terms (the image-of-J order)."""
    if k < 1:
        raise ValueError("k must be positive")
    return (bernoulli_number(2 * k) / (4 * k)).denominator


def denom_ideal(chi: DirichletCharacter, k: int) -> IdealLattice:
    """The ideal of Z[chi] generated by the denominator of B_{k,chi}/(2k).

    Returns the full ring when (-1)^k != chi(-1), mirroring the paper's
    convention for the vanishing case.
    """
    if not is_primitive(chi):
        raise ValueError("chi must be primitive")
    if k < 1:
        raise ValueError("k must be positive")
    field = get_field(chi.order())
    if (-1) ** k != parity(chi):
        return IdealLattice.full_ring(field)
    b = gbn(chi, k) / (2 * k)
    if b.is_zero():
        raise ArithmeticError("B_{k,chi} vanished despite matching parity")
    return denominator_ideal(b)


# ---------------------------------------------------------------------------
# Classical congruence checks


def verify_von_staudt(k_max: int) -> list[dict]:
    """Clausen-von Staudt sweep for B_{2k}, 1 <= k <= k_max.

    Checks (1) denominator of B_{2k} equals the product of all primes p
    with (p-1) | 2k, and (2) the primes dividing the denominator of
    B_{2k}/(4k) are exactly those dividing the denominator of B_{2k}.
    """
    rows = []
    for k in range(1, k_max + 1):
        b = bernoulli_number(2 * k)
        expected = 1
        p = 2
        while p <= 2 * k + 1:
            if (2 * k) % (p - 1) == 0 and _is_prime(p):
                expected *= p
            p += 1
        denom_ok = b.denominator == expected
        primes_b = set(factorize(b.denominator))
        primes_b4k = set(factorize((b / (4 * k)).denominator))
        prime_ok = primes_b == primes_b4k
        rows.append(
            {
                "k": k,
                "denominator": b.denominator,
                "expected": expected,
                "von_staudt_ok": denom_ok,
                "prime_support_ok": prime_ok,
                "ok": denom_ok and prime_ok,
            }
        )
    return rows


def _is_prime(p: int) -> bool:
    from .cyclotomic import is_prime

    return is_prime(p)


def carlitz_p_ideal(chi: DirichletCharacter, k: int) -> IdealLattice:
    """The ideal (p, 1 - chi(g) g^k) of Z[chi] for conductor p^v, p odd.

    g is the smallest positive primitive root mod p; for v > 1 the value
    chi(g) uses g as an integer mod p^v (the radical is lift-independent).
    """
    N = conductor(chi)
    fac = factorize(N)
    (p, _v), = fac.items()
    if p == 2:
        raise ValueError("odd conductor prime required")
    field = get_field(chi.order())
    from .cyclotomic import euler_phi

    if k < 0:
        raise ValueError("k must be nonnegative")
    g = smallest_primitive_root(p, euler_phi(p))
    chi_g = evaluate(chi, g)
    assert chi_g is not None
    gen = field.one() - chi_g * (g**k)
    return IdealLattice.from_generators(field, [field.from_rational(p), gen])


def verify_carlitz(chi: DirichletCharacter, k: int) -> dict:
    """Carlitz's integrality and congruence theorems for B_{k,chi}/k.

    Dispatch: conductor with two or more prime factors -> integrality;
    N = p^v odd -> the mod-p^(v_p(k)+1) congruence (v = 1) or the
    uniformizer congruence (v > 1), by exact ideal membership;
    N = 4 -> B/k - k/2 integral; N = 2^v > 4 -> integrality.
    """
    if not is_primitive(chi):
        raise ValueError("chi must be primitive")
    if k < 1:
        raise ValueError("k must be positive")
    if (-1) ** k != parity(chi):
        raise ValueError("parity mismatch: B_{k,chi} = 0, nothing to verify")
    N = chi.modulus
    b_over_k = gbn(chi, k) / k
    fac = factorize(N)
    row: dict = {"modulus": N, "index": chi.index(), "k": k}
    if len(fac) > 1:
        row["case"] = "composite"
        row["ok"] = b_over_k.is_integral()
        return row
    (p, v), = fac.items()
    if p == 2:
        if v == 2:
            diff = b_over_k - Fraction(k, 2)
            row["case"] = "mod4"
            row["ok"] = diff.is_integral()
        else:
            row["case"] = "2-power"
            row["ok"] = b_over_k.is_integral()
        return row
    ideal_p = carlitz_p_ideal(chi, k)
    if ideal_p.is_full_ring():
        row["case"] = f"p^{v}-unit"
        row["ok"] = b_over_k.is_integral()
        return row
    if v == 1:
        vp_k = 0
        kk = k
        while kk % p == 0:
            kk //= p
            vp_k += 1
        target = ideal_power(ideal_p, vp_k + 1)
        x = gbn(chi, k) * p - (p - 1)
        row["case"] = "p-congruence"
        row["modulus_power"] = vp_k + 1
        row["ok"] = x.is_integral() and ideal_membership(x, target)
        return row
    chi_1p = evaluate(chi, 1 + p)
    assert chi_1p is not None
    x = (get_field(chi.order()).one() - chi_1p) * b_over_k - 1
    row["case"] = "p^v-congruence"
    row["ok"] = x.is_integral() and ideal_membership(x, ideal_p)
    return row


def p_primary_part(ideal: IdealLattice, p: int) -> IdealLattice:
    """The p-primary component I + (m) with m the prime-to-p part of the index."""
    idx = ideal.index()
    m = idx
    while m % p == 0:
        m //= p
    if m == 1:
        return ideal
    return ideal_sum(ideal, IdealLattice.principal(ideal.field, ideal.field.from_rational(m)))


def kernel_match_expected_nontrivial(chi: DirichletCharacter, k: int) -> bool:
    """Whether the Carlitz ideal (p, 1 - chi(g) g^k) should be proper.

    Equivalent to ker omega^(-k) = ker chi on the tame quotient, i.e. a
    kernel-order match; used as a cross-check between the arithmetic and
    homotopy sides.
    """
    from .characters import kernel_order_match

    N = conductor(chi)
    (p, _v), = factorize(N).items()
    return kernel_order_match(k, p, tame_order(chi, p))


__all__ = [
    "bernoulli_number",
    "bernoulli_polynomial",
    "gbn",
    "l_value",
    "d2k",
    "denom_ideal",
    "verify_von_staudt",
    "verify_carlitz",
    "carlitz_p_ideal",
    "p_primary_part",
    "kernel_match_expected_nontrivial",
]
