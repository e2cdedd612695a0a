import itertools

import pytest

from calculus.schur import box_truncate, lr_coefficient, lr_tableau_count, schur_product
from conftest import partitions_of, sub_partitions


def test_small_products():
    assert schur_product((1,), (1,)) == {(2,): 1, (1, 1): 1}
    assert schur_product((), (2, 1)) == {(2, 1): 1}
    assert schur_product((2, 1), ()) == {(2, 1): 1}
    assert schur_product((2, 1), (2, 1)) == {
        (4, 2): 1, (4, 1, 1): 1, (3, 3): 1, (3, 2, 1): 2, (3, 1, 1, 1): 1,
        (2, 2, 2): 1, (2, 2, 1, 1): 1,
    }


def test_lr_coefficient():
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_coefficient((1,), (1,), (3,)) == 0
    assert lr_tableau_count((2, 1), (2, 1), (3, 2, 1)) == 2


def test_dimension_of_products():
    # number of standard tableaux is multiplicative up to a binomial; here just the degree count
    for lam, mu in itertools.product(partitions_of(3), partitions_of(2)):
        assert all(sum(nu) == 5 for nu in schur_product(lam, mu))


@pytest.mark.slow
@pytest.mark.parametrize("size", range(0, 9))
def test_against_tableau_count(size):
    """Every c^nu_{lam,mu} with |nu| = size, both ways."""
    for nu in partitions_of(size):
        for lam in sub_partitions(nu):
            for mu in partitions_of(size - sum(lam)):
                assert lr_coefficient(lam, mu, nu) == lr_tableau_count(lam, mu, nu), (lam, mu, nu)


@pytest.mark.parametrize("k", range(0, 6))
def test_commutative(k):
    for a in range(0, k + 1):
        for lam, mu in itertools.product(partitions_of(a), partitions_of(k - a)):
            assert schur_product(lam, mu) == schur_product(mu, lam)


def _mul(terms, mu):
    out = {}
    for lam, c in terms.items():
        for nu, c2 in schur_product(lam, mu).items():
            out[nu] = out.get(nu, 0) + c * c2
    return out


@pytest.mark.parametrize("a, b, c", [(1, 1, 1), (2, 1, 2), (2, 2, 2), (3, 2, 1)])
def test_associative(a, b, c):
    for lam, mu, kappa in itertools.product(partitions_of(a), partitions_of(b), partitions_of(c)):
        left = _mul(schur_product(lam, mu), kappa)
        right = {}
        for nu, c1 in schur_product(mu, kappa).items():
            for rho, c2 in schur_product(lam, nu).items():
                right[rho] = right.get(rho, 0) + c1 * c2
        assert left == right


def test_box_truncate():
    terms = schur_product((1,), (1,))
    assert box_truncate(terms, 1, 3) == {(2,): 1}
    assert box_truncate(terms, 2, 3) == {(1, 1): 1}
    assert box_truncate(terms, 2, 4) == terms
