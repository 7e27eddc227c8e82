"""Exact scalar arithmetic in Q(zeta_M)[sqrt(d)] and finite field tables."""
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gwschemes import CycField, FiniteField, squarefree_core
from gwschemes.algebra import cyclotomic_polynomial


class TestCyclotomic:
    def test_small_polynomials(self):
        # coefficients ascending
        assert cyclotomic_polynomial(1) == (-1, 1)
        assert cyclotomic_polynomial(2) == (1, 1)
        assert cyclotomic_polynomial(3) == (1, 1, 1)
        assert cyclotomic_polynomial(4) == (1, 0, 1)
        assert cyclotomic_polynomial(6) == (1, -1, 1)
        assert cyclotomic_polynomial(8) == (1, 0, 0, 0, 1)
        assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)

    def test_degree_is_totient(self):
        from math import gcd

        for M in range(1, 30):
            phi = sum(1 for k in range(1, M + 1) if gcd(k, M) == 1)
            assert len(cyclotomic_polynomial(M)) - 1 == phi

    def test_squarefree_core(self):
        assert squarefree_core(1) == (1, 1)
        assert squarefree_core(7) == (1, 7)
        assert squarefree_core(8) == (2, 2)
        assert squarefree_core(9) == (3, 1)
        assert squarefree_core(12) == (2, 3)
        assert squarefree_core(49) == (7, 1)


class TestCycField:
    def test_zeta_relations(self):
        for M in (2, 3, 4, 5, 6, 7, 12):
            f = CycField(M)
            one = f.one()
            assert f.zeta(M) == one
            assert f.zeta(1) * f.zeta(M - 1) == one
            total = f.zero()
            for k in range(M):
                total = total + f.zeta(k)
            assert total == f.zero()

    def test_radical_square_and_inverse(self):
        f = CycField(3, 7)
        r = f.sqrt_radicand()
        assert r * r == f.rat(7)
        assert r * r.inv() == f.one()
        x = f.zeta(1).scale(Fraction(2, 3)) + r.scale(Fraction(-1, 5))
        assert x * x.inv() == f.one()
        assert (f.one() + r) * (f.one() - r) == f.rat(-6)

    def test_radical_with_square_factor(self):
        f = CycField(7, 8)  # sqrt(8) = 2 sqrt(2)
        r = f.sqrt_radicand()
        assert r * r == f.rat(8)
        assert f.d == 2 and f.k == 2
        f9 = CycField(5, 9)  # sqrt(9) = 3 is rational
        assert f9.sqrt_radicand() == f9.rat(3)

    def test_guard_rejects_contained_radicals(self):
        # sqrt(5) lies in Q(zeta_5), sqrt(3) in Q(zeta_12), sqrt(2) in Q(zeta_8)
        with pytest.raises(ValueError):
            CycField(5, 5)
        with pytest.raises(ValueError):
            CycField(12, 3)
        with pytest.raises(ValueError):
            CycField(8, 2)
        CycField(3, 7)
        CycField(2, 5)

    def test_conjugation(self):
        f = CycField(7, 2)
        z = f.zeta(3)
        assert z.conj() == f.zeta(-3)
        assert z * z.conj() == f.one()
        r = f.sqrt_radicand()
        assert r.conj() == r
        x = z + r
        assert (x * x).conj() == x.conj() * x.conj()

    def test_rational_detection(self):
        f = CycField(4, 3)
        assert f.rat(Fraction(3, 2)).is_rational()
        assert f.rat(Fraction(3, 2)).as_fraction() == Fraction(3, 2)
        assert not f.zeta(1).is_rational()
        assert not f.sqrt_radicand().is_rational()
        with pytest.raises(ValueError):
            f.zeta(1).as_fraction()

    def test_to_complex(self):
        import cmath
        import math

        f = CycField(3, 7)
        x = f.zeta(1) + f.sqrt_radicand().scale(Fraction(1, 2))
        want = cmath.exp(2j * cmath.pi / 3) + math.sqrt(7) / 2
        assert abs(x.to_complex() - want) < 1e-12

    def test_from_vectors_round_trip(self):
        f = CycField(5, 6)
        x = f.from_vectors([1, Fraction(1, 2), 0, -2], [0, Fraction(2, 3)])
        assert x.a_vector() == [
            Fraction(1),
            Fraction(1, 2),
            Fraction(0),
            Fraction(-2),
        ]
        assert x.b_vector() == [
            Fraction(0),
            Fraction(2, 3),
            Fraction(0),
            Fraction(0),
        ]

    def test_zero_division(self):
        f = CycField(3)
        with pytest.raises(ZeroDivisionError):
            f.zero().inv()


def _scalar(f, avec, bvec):
    return f.from_vectors([Fraction(n, 3) for n in avec], [Fraction(n, 2) for n in bvec])


small_int = st.integers(min_value=-6, max_value=6)


class TestCycScalarLaws:
    field = CycField(5, 7)  # degree 4, with a radical part

    @given(
        st.lists(small_int, min_size=4, max_size=4),
        st.lists(small_int, min_size=4, max_size=4),
        st.lists(small_int, min_size=4, max_size=4),
        st.lists(small_int, min_size=4, max_size=4),
    )
    def test_ring_laws(self, a1, b1, a2, b2):
        f = self.field
        x = _scalar(f, a1, b1)
        y = _scalar(f, a2, b2)
        z = f.zeta(2) + f.sqrt_radicand().scale(Fraction(-1, 4))
        assert (x + y) * z == x * z + y * z
        assert (x * y) * z == x * (y * z)
        assert x * y == y * x
        assert (x * y).conj() == x.conj() * y.conj()
        assert (x + y).conj() == x.conj() + y.conj()

    @given(
        st.lists(small_int, min_size=4, max_size=4),
        st.lists(small_int, min_size=4, max_size=4),
    )
    def test_inverse(self, avec, bvec):
        f = self.field
        x = _scalar(f, avec, bvec)
        if not x:
            return
        assert x * x.inv() == f.one()
        assert (x.inv()).inv() == x

    @given(
        st.lists(small_int, min_size=4, max_size=4),
        st.lists(small_int, min_size=4, max_size=4),
    )
    def test_numeric_embedding_is_multiplicative(self, avec, bvec):
        f = self.field
        x = _scalar(f, avec, bvec)
        y = f.zeta(1) + f.rat(2)
        lhs = (x * y).to_complex()
        rhs = x.to_complex() * y.to_complex()
        assert abs(lhs - rhs) <= 1e-9 * max(1.0, abs(lhs))


class TestFiniteField:
    def test_prime_field(self):
        F = FiniteField(13)
        assert F.p == 13 and F.e == 1
        for x in range(1, 13):
            assert F.mul(x, F.inv(x)) == 1
            assert F.power(F.generator, F.dlog(x)) == x

    def test_moduli_are_lowest_lex(self):
        # ascending-coefficient order (c_0, ..., c_{e-1}) below the monic term
        assert FiniteField(4).modulus == (1, 1, 1)
        assert FiniteField(8).modulus == (1, 0, 1, 1)
        assert FiniteField(9).modulus == (1, 0, 1)

    @pytest.mark.parametrize("q", [4, 8, 9, 25, 27])
    def test_field_laws(self, q):
        F = FiniteField(q)
        elems = range(q)
        for x in elems:
            assert F.add(x, 0) == x
            assert F.mul(x, 1) == x
            assert F.add(x, F.neg(x)) == 0
            if x:
                assert F.mul(x, F.inv(x)) == 1
        # spot-check associativity and distributivity on a subgrid
        sub = range(0, q, max(1, q // 5))
        for x in sub:
            for y in sub:
                for z in sub:
                    assert F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z))
                    assert F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z))

    def test_power_edge_cases(self):
        F = FiniteField(9)
        assert F.power(0, 0) == 1
        assert F.power(0, 5) == 0
        assert F.power(0, 8) == 0
        for x in range(1, 9):
            assert F.power(x, 8) == 1

    def test_generator_and_dlog(self):
        F = FiniteField(9)
        seen = {F.power(F.generator, k) for k in range(8)}
        assert seen == set(range(1, 9))
        for x in range(1, 9):
            assert F.power(F.generator, F.dlog(x)) == x

    def test_pairing_bilinear_nondegenerate(self):
        F = FiniteField(9)
        p = F.p
        for a in range(9):
            for b in range(9):
                for c in range(9):
                    assert (
                        F.pairing(F.add(a, c), b)
                        == (F.pairing(a, b) + F.pairing(c, b)) % p
                    )
        for a in range(1, 9):
            assert any(F.pairing(a, b) != 0 for b in range(9))

    def test_digits_round_trip(self):
        F = FiniteField(27)
        for x in range(27):
            d = F.digits(x)
            assert len(d) == 3
            assert sum(c * 3**i for i, c in enumerate(d)) == x
