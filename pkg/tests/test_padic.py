"""Teichmuller lifts, topological generators, and the SNF cohomology oracle."""

import pytest

from dirichletj.homotopy import AbelianGroupExpr
from dirichletj.padic import (
    PAdicCharacterData,
    e2_page,
    quotient_oracle,
    quotient_oracle_2,
    teichmuller,
    topological_generator,
)


class TestTeichmuller:
    def test_fixes_one(self):
        for p in (3, 5, 7):
            assert teichmuller(p, 1, 10).residue == 1

    def test_omega2_mod25_brute(self):
        # Brute-force oracle: the unique 4th root of unity = 2 mod 5 in Z/25.
        roots = [x for x in range(25) if pow(x, 4, 25) == 1 and x % 5 == 2]
        assert roots == [7]
        assert teichmuller(5, 2, 2).residue == 7

    def test_root_of_unity_property(self):
        for p in (3, 5, 7, 11):
            for a in range(1, p):
                w = teichmuller(p, a, 8)
                assert pow(w.residue, p - 1, p**8) == 1
                assert w.residue % p == a % p

    def test_multiplicative(self):
        for p in (5, 7):
            for a in range(1, p):
                for b in range(1, p):
                    lhs = teichmuller(p, a * b % p, 6).residue
                    rhs = teichmuller(p, a, 6).residue * teichmuller(p, b, 6).residue % p**6
                    assert lhs == rhs

    def test_divisible_rejected(self):
        with pytest.raises(ValueError):
            teichmuller(5, 10, 4)


class TestTopologicalGenerator:
    def test_p3(self):
        g = topological_generator(3)
        assert g == 2
        # Oracle: 2 has order 6 = phi(9) mod 9.
        assert sorted(pow(2, j, 9) for j in range(6)) == sorted({pow(2, j, 9) for j in range(6)})
        assert pow(2, 6, 9) == 1 and pow(2, 3, 9) != 1 and pow(2, 2, 9) != 1

    def test_p5(self):
        assert topological_generator(5) == 2
        assert all(pow(2, 20 // q, 25) != 1 for q in (2, 5))

    def test_p2(self):
        assert topological_generator(2) == 5


class TestQuotientOracle:
    @pytest.mark.parametrize("p", [3, 5])
    @pytest.mark.parametrize("v", [2, 3])
    def test_closed_form(self, p, v):
        for a in range(p - 1):
            for t in range(-6, 7):
                got = quotient_oracle(p, v, a, t)
                if (t - a) % (p - 1) == 0:
                    assert got == AbelianGroupExpr.cyclic(p)
                else:
                    assert got.is_zero()

    def test_spec_example(self):
        assert quotient_oracle(3, 2, 1, 3) == AbelianGroupExpr.cyclic(3)

    def test_precision_independence(self):
        assert quotient_oracle(5, 2, 2, 2, M=15) == quotient_oracle(5, 2, 2, 2, M=25)

    def test_invalid_inputs(self):
        with pytest.raises(ValueError):
            quotient_oracle(2, 2, 0, 1)
        with pytest.raises(ValueError):
            quotient_oracle(5, 1, 0, 1)


class TestQuotientOracle2:
    def test_spec_examples(self):
        assert quotient_oracle_2(3, 1) == AbelianGroupExpr.cyclic(2)
        assert quotient_oracle_2(4, 0) == AbelianGroupExpr.cyclic(2)
        assert quotient_oracle_2(3, 5) == AbelianGroupExpr.cyclic(2)

    def test_sweep(self):
        for v in (3, 4):
            for t in range(-5, 6):
                assert quotient_oracle_2(v, t) == AbelianGroupExpr.cyclic(2)

    def test_parity_tag(self):
        assert quotient_oracle_2(3, 4, parity="even") == AbelianGroupExpr.cyclic(2)
        with pytest.raises(ValueError):
            quotient_oracle_2(3, 4, parity="odd")


class TestE2Page:
    def test_trivial_tame_zp(self):
        data = PAdicCharacterData(p=5, v=0, tame=0)
        assert e2_page(data, 1, 0) == AbelianGroupExpr.padic(5)
        assert e2_page(data, 0, 0) == AbelianGroupExpr.padic(5)
        assert e2_page(data, 2, 0).is_zero()

    def test_twisted_stripe(self):
        data = PAdicCharacterData(p=5, v=1, tame=2)
        # Entries at s = 1 and half-degree t/2 = a mod (p-1), order p^(v_p+1).
        assert e2_page(data, 1, 4) == AbelianGroupExpr.cyclic(5)
        assert e2_page(data, 1, 2 * (2 + 4)) == AbelianGroupExpr.cyclic(5)
        assert e2_page(data, 1, 2 * 10) == AbelianGroupExpr.cyclic(25)  # v_5(10)+1 = 2
        assert e2_page(data, 0, 4).is_zero()

    def test_wild_one_line(self):
        data = PAdicCharacterData(p=3, v=2, tame=1)
        for t in range(-10, 11, 2):
            assert e2_page(data, 2, t).is_zero()
            expected = AbelianGroupExpr.cyclic(3) if (t // 2 - 1) % 2 == 0 else AbelianGroupExpr.zero()
            assert e2_page(data, 1, t) == expected

    def test_matches_oracle_on_s1(self):
        for p in (3, 5):
            for v in (2, 3):
                for a in range(p - 1):
                    data = PAdicCharacterData(p=p, v=v, tame=a)
                    for t in range(-6, 7):
                        assert e2_page(data, 1, 2 * t) == quotient_oracle(p, v, a, t)

    def test_column_dimension_bound(self):
        # Length-one resolution: at most two nonzero s-entries per column.
        for v in (0, 1, 2):
            for a in range(4):
                if v == 0 and a:
                    continue
                data = PAdicCharacterData(p=5, v=v, tame=a)
                for t in range(-8, 9, 2):
                    nonzero = sum(1 for s in range(0, 5) if not e2_page(data, s, t).is_zero())
                    assert nonzero <= 2

    def test_odd_degree_rejected_for_odd_p(self):
        with pytest.raises(ValueError):
            e2_page(PAdicCharacterData(p=5, v=1, tame=1), 1, 3)

    def test_conductor4_table(self):
        data = PAdicCharacterData(p=2, v=2, tame=1)
        assert e2_page(data, 1, 2) == AbelianGroupExpr.cyclic(4)
        assert e2_page(data, 2, 2) == AbelianGroupExpr.cyclic(2)
        assert e2_page(data, 1, 4) == AbelianGroupExpr.cyclic(2)
        assert e2_page(data, 0, 2).is_zero()

    def test_mixed_conductor_rejected(self):
        from dirichletj.padic import PrimeToPPart

        data = PAdicCharacterData(p=5, v=1, tame=1, prime_to_p=PrimeToPPart(3, 0, False))
        with pytest.raises(ValueError):
            e2_page(data, 1, 0)
