"""Bernoulli numbers, L-values, denominator ideals, congruence theorems."""

import math
from fractions import Fraction

import pytest

from dirichletj.bernoulli import (
    bernoulli_number,
    carlitz_p_ideal,
    d2k,
    denom_ideal,
    gbn,
    kernel_match_expected_nontrivial,
    l_value,
    verify_carlitz,
    verify_von_staudt,
)
from dirichletj.characters import (
    char_pow,
    enumerate_characters,
    is_primitive,
    parity,
)
from dirichletj.cyclotomic import galois_apply, get_field, is_prime, quotient_group
from dirichletj.homotopy import AbelianGroupExpr


def quad5():
    return enumerate_characters(5)[2]


def odd4():
    return enumerate_characters(4)[1]


class TestOrdinary:
    def test_small_values(self):
        assert bernoulli_number(0) == 1
        assert bernoulli_number(1) == Fraction(1, 2)
        assert bernoulli_number(2) == Fraction(1, 6)
        assert bernoulli_number(4) == Fraction(-1, 30)

    def test_odd_vanishing(self):
        for k in range(3, 31, 2):
            assert bernoulli_number(k) == 0

    def test_recurrence(self):
        for k in range(1, 31):
            acc = sum(Fraction(math.comb(k + 1, j)) * bernoulli_number(j) for j in range(k + 1))
            assert acc == k + 1


class TestGBN:
    def test_trivial_character(self):
        chi0 = enumerate_characters(1)[0]
        for k in range(0, 13):
            assert gbn(chi0, k) == get_field(1).from_rational(bernoulli_number(k))

    def test_odd_mod4(self):
        assert gbn(odd4(), 1) == get_field(2).from_rational(Fraction(-1, 2))

    def test_quadratic_mod5(self):
        assert gbn(quad5(), 2) == get_field(2).from_rational(Fraction(4, 5))

    def test_parity_vanishing_both_directions(self):
        for N in (3, 4, 5, 7, 8, 9):
            for chi in enumerate_characters(N):
                if not is_primitive(chi) or chi.is_trivial():
                    continue
                sign = parity(chi)
                for k in range(1, 9):
                    value = gbn(chi, k)
                    if (-1) ** k != sign:
                        assert value.is_zero()
                    else:
                        assert not value.is_zero()

    def test_galois_equivariance(self):
        for N in (5, 7, 9, 13):
            for chi in enumerate_characters(N):
                n = chi.order()
                if n < 3:
                    continue
                for b in range(2, n):
                    if math.gcd(b, n) != 1:
                        continue
                    for k in (1, 2, 3):
                        assert gbn(char_pow(chi, b), k) == galois_apply(gbn(chi, k), b)

    def test_imprimitive_reduces_to_primitive(self):
        # The lift of the mod-4 character to modulus 8 has the same B_{k,chi}.
        lifted = [c for c in enumerate_characters(8) if c.order() == 2 and not is_primitive(c)]
        from dirichletj.characters import conductor

        lifted = [c for c in lifted if conductor(c) == 4]
        assert lifted
        for k in (1, 3, 5):
            assert gbn(lifted[0], k) == gbn(odd4(), k)


class TestLValues:
    def test_zeta_minus_one(self):
        chi0 = enumerate_characters(1)[0]
        assert l_value(chi0, -1) == get_field(1).from_rational(Fraction(-1, 12))

    def test_L0_odd_mod4(self):
        assert l_value(odd4(), 0) == get_field(2).from_rational(Fraction(1, 2))

    def test_L_minus1_quad5(self):
        assert l_value(quad5(), -1) == get_field(2).from_rational(Fraction(-2, 5))

    def test_s_one_rejected(self):
        with pytest.raises(ValueError):
            l_value(quad5(), 1)


class TestD2k:
    def test_values(self):
        assert d2k(1) == 24
        assert d2k(2) == 240
        assert d2k(3) == 504

    def test_von_staudt_prime_support(self):
        for k in range(1, 21):
            for p in _prime_divs(d2k(k)):
                assert p == 2 or (2 * k) % (p - 1) == 0


def _prime_divs(n):
    out = set()
    m = n
    q = 2
    while q * q <= m:
        if m % q == 0:
            out.add(q)
            while m % q == 0:
                m //= q
        q += 1
    if m > 1:
        out.add(m)
    return out


class TestDenomIdeal:
    def test_parity_mismatch_full_ring(self):
        assert denom_ideal(quad5(), 1).is_full_ring()

    def test_odd4_k1(self):
        ideal = denom_ideal(odd4(), 1)
        assert quotient_group(ideal) == AbelianGroupExpr.cyclic(4)

    def test_quad5_k2(self):
        ideal = denom_ideal(quad5(), 2)
        assert quotient_group(ideal) == AbelianGroupExpr.cyclic(5)

    def test_twist_stability(self):
        for N in (5, 7, 13):
            for chi in enumerate_characters(N):
                if not is_primitive(chi) or chi.is_trivial():
                    continue
                n = chi.order()
                sign = parity(chi)
                k = 1 if sign == -1 else 2
                base = quotient_group(denom_ideal(chi, k))
                for b in range(2, n):
                    if math.gcd(b, n) != 1:
                        continue
                    assert quotient_group(denom_ideal(char_pow(chi, b), k)) == base


class TestVonStaudt:
    def test_k1(self):
        rows = verify_von_staudt(1)
        assert rows[0]["denominator"] == 6 and rows[0]["ok"]

    def test_k6(self):
        rows = verify_von_staudt(6)
        assert rows[5]["denominator"] == 2730 and rows[5]["ok"]

    def test_sweep(self):
        assert all(r["ok"] for r in verify_von_staudt(30))


class TestCarlitz:
    def test_mod4_k3(self):
        row = verify_carlitz(odd4(), 3)
        assert row["ok"] and row["case"] == "mod4"

    def test_quad5_k2(self):
        row = verify_carlitz(quad5(), 2)
        assert row["ok"] and row["case"] == "p-congruence"

    def test_composite_integrality(self):
        chi12 = [c for c in enumerate_characters(12) if is_primitive(c)][0]
        k = 2 if parity(chi12) == 1 else 1
        row = verify_carlitz(chi12, k)
        assert row["ok"] and row["case"] == "composite"

    def test_carlitz_ideal_quad5(self):
        # (5, 1 - chi(2) * 4) = (5, 5) = (5), proper.
        ideal = carlitz_p_ideal(quad5(), 2)
        assert ideal.basis.diagonal() == [5]

    def test_kernel_match_agrees_with_ideal_properness(self):
        for N in (5, 7, 11, 13, 9):
            for chi in enumerate_characters(N):
                if not is_primitive(chi) or chi.is_trivial():
                    continue
                for k in range(1, 9):
                    proper = not carlitz_p_ideal(chi, k).is_full_ring()
                    assert proper == kernel_match_expected_nontrivial(chi, k)

    def test_parity_mismatch_rejected(self):
        with pytest.raises(ValueError):
            verify_carlitz(quad5(), 1)
