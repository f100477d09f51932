"""gcd, Bezout certificates, ramified base change, admissibility."""

import random

import pytest

from torsorkit.errors import NotDivisible
from torsorkit.multiplicity import (
    MultiplicityVector,
    admissibility_report,
    bezout_weights,
    gcd_vector,
    ramified_base_change,
)


def test_vector_validation():
    with pytest.raises(ValueError):
        MultiplicityVector(())
    with pytest.raises(ValueError):
        MultiplicityVector((1, 0))
    with pytest.raises(ValueError):
        MultiplicityVector((2, -3))


@pytest.mark.parametrize(
    "mu,expected",
    [((2, 3), 1), ((4, 6), 2), ((6, 10, 15), 1), ((7,), 7), ((12, 18, 30), 6)],
)
def test_gcd_vector(mu, expected):
    assert gcd_vector(mu) == expected


def test_bezout_examples():
    cert = bezout_weights((2, 3))
    assert cert.weights == (-1, 1) and cert.gcd == 1
    cert = bezout_weights((4, 6))
    assert cert.weights == (-1, 1) and cert.gcd == 2
    cert = bezout_weights((6, 10, 15))
    assert cert.gcd == 1
    # independent re-evaluation of the certificate identity
    assert sum(a * m for a, m in zip(cert.weights, (6, 10, 15))) == 1


def test_bezout_deterministic():
    assert bezout_weights((6, 10, 15)) == bezout_weights((6, 10, 15))
    assert bezout_weights((6, 10, 15)).weights == (-14, 7, 1)


def test_bezout_random_property():
    rng = random.Random(1)
    for _ in range(2000):
        k = rng.randint(1, 8)
        mu = tuple(rng.randint(1, 10**6) for _ in range(k))
        cert = bezout_weights(mu)
        assert sum(a * m for a, m in zip(cert.weights, mu)) == cert.gcd
        assert cert.gcd == gcd_vector(mu)
        assert all(m % cert.gcd == 0 for m in mu)


def test_ramified_base_change():
    assert ramified_base_change((4, 6), 2).entries == (2, 3)
    assert ramified_base_change((3, 3), 3).entries == (1, 1)
    with pytest.raises(NotDivisible):
        ramified_base_change((2, 3), 2)
    mu = (12, 18, 30)
    assert gcd_vector(ramified_base_change(mu, gcd_vector(mu))) == 1


def test_admissibility_examples():
    r = admissibility_report((1, 2, 2, 3, 3, 4, 4, 5, 6))  # the II* vector
    assert (r.minimum, r.gcd, r.admissible) == (1, 1, True)
    r = admissibility_report((3, 3))  # 3I2 multiple fiber
    assert (r.minimum, r.gcd, r.admissible) == (3, 3, True)
    r = admissibility_report((2, 3))  # forbidden for torus fibrations
    assert (r.minimum, r.gcd, r.admissible) == (2, 1, False)


def test_admissibility_stable_under_scaling():
    rng = random.Random(4)
    for _ in range(300):
        k = rng.randint(1, 6)
        mu = tuple(rng.randint(1, 60) for _ in range(k))
        g = gcd_vector(mu)
        for d in range(1, g + 1):
            if g % d:
                continue
            down = ramified_base_change(mu, d)
            back = MultiplicityVector(tuple(m * d for m in down.entries))
            assert back.entries == tuple(mu)
            assert admissibility_report(back) == admissibility_report(mu)
