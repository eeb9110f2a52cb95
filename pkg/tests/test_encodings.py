from itertools import permutations

from hypothesis import given

from invseq.core import stats
from invseq.encodings import exc, invcode, invcode_inv, lehmer, phi, phi_inv, theta, theta_inv
from strategies import inversion_sequences, perms


def test_theta_examples():
    assert theta((1, 2, 3)) == (0, 0, 0)
    assert theta((3, 1, 2)) == (0, 1, 1)
    assert theta_inv((0, 0, 0)) == (1, 2, 3)
    assert theta_inv((0, 1, 1)) == (3, 1, 2)
    assert theta_inv((0, 1, 2)) == (3, 2, 1)


def test_invcode_and_phi_examples():
    assert lehmer((3, 1, 2)) == (2, 0, 0)
    assert invcode((3, 1, 2)) == (0, 0, 2)
    assert phi((1, 2, 3, 4)) == (0, 1, 2, 3)
    assert phi((2, 1)) == (0, 0)
    assert phi_inv((0, 0)) == (2, 1)
    assert exc((1, 2, 3)) == 0
    assert exc((2, 1)) == 1


def test_all_bijective_at_7():
    ps = list(permutations(range(1, 8)))
    for f in (theta, invcode, phi):
        assert len({f(p) for p in ps}) == 5040


@given(perms())
def test_round_trips(p):
    assert theta_inv(theta(p)) == p
    assert invcode_inv(invcode(p)) == p
    assert phi_inv(phi(p)) == p


@given(inversion_sequences(max_n=8))
def test_inverse_round_trips(e):
    assert theta(theta_inv(e)) == e
    assert invcode(invcode_inv(e)) == e
    assert phi(phi_inv(e)) == e


@given(perms())
def test_descents_become_ascents(p):
    e = theta(p)
    n = len(p)
    assert {i for i in range(n - 1) if p[i] > p[i + 1]} == {i for i in range(n - 1) if e[i] < e[i + 1]}


@given(perms())
def test_excedances_are_repeats(p):
    assert exc(p) == stats(phi(p)).repeats
