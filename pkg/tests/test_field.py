import random

import pytest

from ncalg.field import (DEFAULT_PRIME, FieldError, PrimeField, Rationals,
                         parse_field_spec)


def test_default_prime_inverse():
    K = PrimeField()
    assert K.p == 32003
    assert K.inv(2) == 16002
    assert K.mul(2, 16002) == 1


def test_identity_and_rational_inverse():
    K = PrimeField()
    x = K.of(123)
    assert K.add(K.zero, x) == x
    Q = Rationals()
    from fractions import Fraction

    assert Q.inv(Fraction(3, 4)) == Fraction(4, 3)


def test_inverse_of_zero_is_an_error():
    with pytest.raises(FieldError):
        PrimeField().inv(0)
    with pytest.raises(FieldError):
        Rationals().inv(Rationals().zero)


def test_canonical_representatives():
    K = PrimeField()
    assert K.of(-1) == K.p - 1
    assert 0 <= K.of(10 ** 12) < K.p
    assert K.neg(K.zero) == 0


@pytest.mark.parametrize("K", [PrimeField(), PrimeField(101), Rationals()])
def test_field_axioms_random(K):
    rng = random.Random(2024)

    def rand():
        if isinstance(K, PrimeField):
            return rng.randrange(K.p)
        from fractions import Fraction

        return Fraction(rng.randrange(-50, 50), rng.randrange(1, 30))

    for _ in range(1000):
        a, b, c = rand(), rand(), rand()
        assert K.mul(K.mul(a, b), c) == K.mul(a, K.mul(b, c))
        assert K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c))
        assert K.is_zero(K.add(a, K.neg(a)))
        if not K.is_zero(a):
            assert K.mul(a, K.inv(a)) == K.one


@pytest.mark.parametrize("K", [PrimeField(), Rationals()])
def test_encode_decode_roundtrip(K):
    rng = random.Random(5)
    for _ in range(200):
        if isinstance(K, PrimeField):
            a = rng.randrange(K.p)
        else:
            from fractions import Fraction

            a = Fraction(rng.randrange(-99, 99), rng.randrange(1, 40))
        assert K.from_str(K.to_str(a)) == a


def test_parse_field_spec():
    assert isinstance(parse_field_spec("q"), Rationals)
    assert parse_field_spec("p:101").p == 101
    with pytest.raises(FieldError):
        parse_field_spec("p:32004")  # even, not prime
    with pytest.raises(FieldError):
        parse_field_spec("gf:9")
    with pytest.raises(FieldError):
        parse_field_spec("p:2")  # odd primes only
    assert parse_field_spec(f"p:{DEFAULT_PRIME}").p == DEFAULT_PRIME
