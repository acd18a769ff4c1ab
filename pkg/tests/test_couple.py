import pytest

from logcouple.couple import (S0, PsiElement, chi, dagger, in_derivatives_of_negatives,
                              in_derivatives_of_positives, in_psi, integral,
                              iterate_s, pred, prime, psi, psi_element, succ)
from logcouple.exceptions import NonNegativeArgument, ZeroArgument
from logcouple.vector import INF, ZERO, LogVector


def test_psi_element():
    assert psi_element(0) == LogVector([1])
    assert psi_element(2) == LogVector([1, 1, 1])
    assert S0 == psi_element(0)
    assert str(PsiElement(3)) == 'psi_3'
    assert PsiElement(3).value == psi_element(3)
    assert PsiElement(1) < PsiElement(2)
    with pytest.raises(ValueError):
        PsiElement(-1)


@pytest.mark.parametrize(
    'a, level', [
        ([0, 0, 5, -1], 2),
        ([1], 0),
        ([-3, 7], 0),
        ([0, '-1/2'], 1),
        ([0, 0, 0, 0, 9], 4),
    ]
)
def test_psi(a, level):
    assert psi(LogVector(a)) == psi_element(level)


def test_psi_zero_and_infinity():
    assert psi(ZERO) is INF
    assert psi(INF) is INF


@pytest.mark.parametrize(
    'a, expected', [
        ([1, 1], [0, 0, -1]),
        ([], [-1]),
        ([2], [1]),
        ([1, 3, 4], [0, 2, 4]),
        ([0, 5], [-1, 5]),
    ]
)
def test_integral(a, expected):
    b = integral(LogVector(a))
    assert b == LogVector(expected)
    assert b + psi(b) == LogVector(a)


def test_succ_and_pred():
    assert succ(ZERO) == S0
    assert succ(psi_element(3)) == psi_element(4)
    assert succ(INF) is INF
    assert pred(psi_element(4)) == psi_element(3)
    assert pred(S0) is INF
    assert pred(LogVector([2])) is INF
    assert pred(INF) is INF


def test_iterate_s():
    assert iterate_s(S0, 3) == psi_element(3)
    assert iterate_s(psi_element(2), -2) == S0
    assert iterate_s(psi_element(2), -3) is INF
    assert iterate_s(LogVector([5]), 0) == LogVector([5])


def test_chi():
    assert chi(LogVector([0, -1])) == LogVector([0, 0, -1])
    assert chi(LogVector([-1])) == LogVector([0, -1])
    with pytest.raises(NonNegativeArgument):
        chi(ZERO)
    with pytest.raises(NonNegativeArgument):
        chi(LogVector([1]))


def test_prime_and_dagger():
    assert prime(LogVector([1])) == LogVector([2])
    assert prime(LogVector([-1])) == ZERO
    assert dagger(LogVector([0, -3])) == psi_element(1)
    with pytest.raises(ZeroArgument):
        prime(ZERO)
    with pytest.raises(ZeroArgument):
        dagger(INF)


def test_derivative_sets():
    assert in_derivatives_of_negatives(ZERO)
    assert ZERO < succ(ZERO)
    assert in_derivatives_of_positives(LogVector([2]))
    assert succ(LogVector([2])) < LogVector([2])
    assert not in_psi(LogVector([2]))
    assert in_psi(psi_element(7))
