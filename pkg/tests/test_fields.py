"""Exact scalar arithmetic over the rationals and prime fields."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from liecross import FieldSpec, Scalar
from liecross.errors import FieldMismatchError

QQ = FieldSpec.rational()
GF5 = FieldSpec.prime(5)


class TestFieldSpec:
    def test_rational_field_spec(self):
        assert QQ == FieldSpec.rational()
        assert not QQ.is_prime_field
        assert str(QQ) == "QQ"

    def test_prime_field(self):
        assert GF5.is_prime_field
        assert GF5.p == 5
        assert str(GF5) == "GF(5)"

    @pytest.mark.parametrize("n", [0, 1, 4, 6, 9, -3])
    def test_rejects_non_primes(self, n):
        with pytest.raises(ValueError):
            FieldSpec.prime(n)

    def test_elements_enumerates_residues(self):
        assert [s.num for s in GF5.elements()] == [0, 1, 2, 3, 4]

    def test_rational_elements_unavailable(self):
        with pytest.raises(ValueError):
            list(QQ.elements())


class TestCanonicalForm:
    def test_lowest_terms(self):
        s = Scalar(QQ, 6, 4)
        assert (s.num, s.den) == (3, 2)

    def test_denominator_sign(self):
        s = Scalar(QQ, 1, -2)
        assert (s.num, s.den) == (-1, 2)

    def test_zero_normalizes(self):
        assert Scalar(QQ, 0, 7) == QQ.zero()

    def test_residue_reduction(self):
        assert Scalar(GF5, 12).num == 2
        assert Scalar(GF5, -1).num == 4

    def test_prime_scalars_reject_denominators(self):
        with pytest.raises(ValueError):
            Scalar(GF5, 1, 2)

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError):
            Scalar(QQ, 1, 0)

    def test_structural_equality_and_hash(self):
        assert Scalar(QQ, 2, 4) == Scalar(QQ, 1, 2)
        assert hash(Scalar(QQ, 2, 4)) == hash(Scalar(QQ, 1, 2))
        assert Scalar(QQ, 1) != Scalar(GF5, 1)

    def test_coercions(self):
        assert QQ.scalar(Fraction(6, 4)) == Scalar(QQ, 3, 2)
        assert QQ.scalar("3/2") == Scalar(QQ, 3, 2)
        assert GF5.scalar(Fraction(1, 2)).num == 3  # 1/2 = 1 * inv(2) = 3
        with pytest.raises(TypeError):
            QQ.scalar(1.5)
        with pytest.raises(FieldMismatchError):
            QQ.scalar(GF5.one())


class TestArithmetic:
    def test_rational_ops(self):
        a, b = Scalar(QQ, 1, 2), Scalar(QQ, 1, 3)
        assert a + b == Scalar(QQ, 5, 6)
        assert a - b == Scalar(QQ, 1, 6)
        assert a * b == Scalar(QQ, 1, 6)
        assert a / b == Scalar(QQ, 3, 2)
        assert -a == Scalar(QQ, -1, 2)

    def test_prime_ops(self):
        a, b = GF5.scalar(3), GF5.scalar(4)
        assert (a + b).num == 2
        assert (a - b).num == 4
        assert (a * b).num == 2
        assert (a / b).num == 2  # 4 * 2 = 8 = 3 mod 5
        assert (-a).num == 2

    def test_division_by_zero(self):
        for field in (QQ, GF5):
            with pytest.raises(ZeroDivisionError):
                field.one() / field.zero()

    def test_truthiness(self):
        assert not QQ.zero()
        assert GF5.scalar(3)

    def test_mixed_fields_rejected(self):
        with pytest.raises(FieldMismatchError):
            QQ.one() + GF5.one()
        with pytest.raises(TypeError):
            QQ.one() + 1  # raw ints are not scalars

    @given(st.fractions(), st.fractions())
    def test_rational_ops_match_fractions(self, x, y):
        a = Scalar(QQ, x.numerator, x.denominator)
        b = Scalar(QQ, y.numerator, y.denominator)
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b).as_fraction() == x + y
        assert (a * b).as_fraction() == x * y

    @given(st.integers(), st.integers())
    def test_prime_field_laws(self, x, y):
        a, b = GF5.scalar(x), GF5.scalar(y)
        assert a + b == GF5.scalar(x + y)
        assert a * b == GF5.scalar(x * y)
        assert a - a == GF5.zero()
        if b:
            assert (a / b) * b == a


class TestParsing:
    def test_rational_literals(self):
        assert QQ.parse_scalar("3/4") == Scalar(QQ, 3, 4)
        assert QQ.parse_scalar("-2") == QQ.scalar(-2)
        assert QQ.parse_scalar("0") == QQ.zero()

    def test_prime_literals(self):
        assert GF5.parse_scalar("4").num == 4

    @pytest.mark.parametrize("text", ["5", "-1", "1/2", "x", ""])
    def test_prime_rejects_out_of_range(self, text):
        with pytest.raises(ValueError):
            GF5.parse_scalar(text)

    @pytest.mark.parametrize("text", ["x", "1/0", "1.5", "1/2/3"])
    def test_rational_rejects_garbage(self, text):
        with pytest.raises(ValueError):
            QQ.parse_scalar(text)

    def test_str_round_trip(self):
        for s in (Scalar(QQ, 7, 3), QQ.scalar(-2), GF5.scalar(4)):
            assert s.field.parse_scalar(str(s)) == s
