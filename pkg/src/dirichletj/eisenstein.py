"""q-expansions of normalized Eisenstein series and their congruences.

The normalized series attached to a character of matching parity has
constant term 1 and higher coefficients ``c_n = -(2k / B_{k,chi})
sigma_{k-1,chi}(n)`` with the twisted divisor sum ``sigma_{m,chi}(n) =
sum_{0 < d | n} chi(d) d^m``.

The congruence ``E_{k,chi} = 1 mod D_{k,chi}`` is checked two ways:
membership of ``c_n`` in the conductor-primary part of the denominator
ideal is mandatory (it follows from the implemented congruence
theorems); membership in the full ideal is only reported, with a failing
``n`` surfaced as a finding rather than an error.  Non-integrality away
from the conductor is expected whenever B_{k,chi} picks up extra
numerator primes (the 691 of weight 12 is the classical example).
"""

from __future__ import annotations

import math
from fractions import Fraction

from .bernoulli import denom_ideal, gbn, p_primary_part
from .characters import DirichletCharacter, conductor, evaluate, is_primitive, parity
from .cyclotomic import CycElement, IdealLattice, factorize, get_field, ideal_membership


def sigma_chi(chi: DirichletCharacter, m: int, n: int) -> CycElement:
    """Twisted divisor sum in Q(zeta_ord(chi))."""
    if n < 1:
        raise ValueError("n must be positive")
    if m < 0:
        raise ValueError("m must be nonnegative")
    field = get_field(chi.order())
    acc = field.zero()
    for d in range(1, n + 1):
        if n % d == 0:
            val = evaluate(chi, d)
            if val is not None:
                acc = acc + val * (d**m)
    return acc


def eisenstein_coeffs(chi: DirichletCharacter, k: int, n_max: int) -> list[CycElement]:
    """Coefficients c_0 = 1, c_n = -(2k/B_{k,chi}) sigma_{k-1,chi}(n).

    Requires (-1)^k = chi(-1); otherwise B_{k,chi} = 0 and normalization
    is undefined.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if (-1) ** k != parity(chi):
        raise ValueError("parity mismatch: B_{k,chi} = 0, series not normalizable")
    field = get_field(chi.order())
    b = gbn(chi, k)
    factor = field.from_rational(Fraction(-2 * k)) * b.inverse()
    out = [field.one()]
    for n in range(1, n_max + 1):
        out.append(factor * sigma_chi(chi, k - 1, n))
    return out


def _membership_up_to_coprime_denominator(x: CycElement, ideal: IdealLattice, allowed_coprime_to: int) -> bool:
    """x in ideal, allowing denominators of x coprime to ``allowed_coprime_to``.

    Writes x = y/d with d minimal; if gcd(d, index-primes) != 1 the test
    fails, otherwise d is inverted modulo the ideal index.
    """
    d = x.denominator_lcm()
    idx = ideal.index()
    if idx == 1:
        return True
    if math.gcd(d, idx) != 1:
        return False
    y = x * d
    u = pow(d, -1, idx)
    return ideal_membership(y * u, ideal)


def congruence_check(chi: DirichletCharacter, k: int, n_max: int) -> dict:
    """Check c_n against the denominator ideal for 1 <= n <= n_max.

    Returns a report with per-n rows.  ``mandatory_ok`` is membership in
    the conductor-primary part of the ideal (all primes of the index for
    conductor 1); ``full_ok`` is membership in the whole ideal, reported
    only (failures are findings).
    """
    if not is_primitive(chi):
        raise ValueError("chi must be primitive")
    N = conductor(chi)
    ideal = denom_ideal(chi, k)
    idx = ideal.index()
    if N == 1:
        mandatory_ideal = ideal
    else:
        (p, _v), = factorize(N).items()
        mandatory_ideal = p_primary_part(ideal, p)
    coeffs = eisenstein_coeffs(chi, k, n_max)
    rows = []
    mandatory_failures = 0
    findings = 0
    for n in range(1, n_max + 1):
        c = coeffs[n]
        mandatory_ok = _membership_up_to_coprime_denominator(c, mandatory_ideal, mandatory_ideal.index())
        full_ok = c.is_integral() and ideal_membership(c, ideal)
        if not mandatory_ok:
            mandatory_failures += 1
        if not full_ok:
            findings += 1
        rows.append({"n": n, "mandatory_ok": mandatory_ok, "full_ok": full_ok})
    return {
        "modulus": chi.modulus,
        "index": chi.index(),
        "k": k,
        "ideal_index": idx,
        "rows": rows,
        "mandatory_failures": mandatory_failures,
        "full_findings": findings,
        "ok": mandatory_failures == 0,
    }
