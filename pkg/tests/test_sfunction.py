from fractions import Fraction

import pytest

from logcouple.couple import S0, PsiElement, in_psi, psi_element
from logcouple.exceptions import InvalidSFunction, ZeroArgument
from logcouple.sfunction import (IDENTITY, Constant, Linear, add_sf, d_min,
                                 eval_sf, hits_psi, image_in_psi, linear, neg_sf,
                                 psi_coefficients, scale_sf, shift, sub_sf)
from logcouple.vector import INF, ZERO, LogVector


def test_eval_shift():
    assert eval_sf(shift(1), 3) == psi_element(4)
    assert eval_sf(shift(1), PsiElement(3)) == psi_element(4)
    assert eval_sf(shift(-2), 1) is INF
    assert eval_sf(shift(-2), 2) == S0
    assert eval_sf(Constant(LogVector([5])), 9) == LogVector([5])


def test_eval_linear():
    fn = linear({0: 1, 1: -1}, LogVector([1]))
    # psi_m - psi_(m+1) - e_0 = -e_(m+1) - e_0
    assert eval_sf(fn, 2) == LogVector({0: -1, 3: -1})
    assert fn.total == 0
    assert fn.k1 == 0
    assert fn.d_min == 0


def test_domain():
    assert d_min(shift(-3)) == 3
    assert d_min(Constant(ZERO)) == 0
    assert not shift(-3).in_domain(2)
    assert shift(-3).in_domain(3)


def test_validation():
    with pytest.raises(InvalidSFunction):
        Linear(((1, Fraction(1)), (0, Fraction(1))))
    with pytest.raises(InvalidSFunction):
        Linear(())
    with pytest.raises(InvalidSFunction):
        Linear(((0, Fraction(0)),))
    with pytest.raises(InvalidSFunction):
        Linear(((0, Fraction(1)),), INF)


def test_linear_collects_and_cancels():
    assert linear([(0, 1), (0, 1)]) == Linear(((0, Fraction(2)),))
    assert linear({0: 0}, LogVector([1])) == Constant(LogVector([-1]))
    assert add_sf(IDENTITY, neg_sf(IDENTITY)) == Constant(ZERO)
    assert sub_sf(shift(1), shift(1)) == Constant(ZERO)


def test_arithmetic():
    f = linear({0: 1, 2: 3}, LogVector([1]))
    assert add_sf(f, Constant(LogVector([1]))) == Linear(f.shifts, ZERO)
    assert add_sf(f, Constant(INF)) == Constant(INF)
    assert neg_sf(Constant(INF)) == Constant(INF)
    half = scale_sf(Fraction(1, 2), f)
    assert eval_sf(half, 4) == eval_sf(f, 4) * Fraction(1, 2)
    with pytest.raises(ZeroArgument):
        scale_sf(0, IDENTITY)


def test_describe():
    assert IDENTITY.describe() == 'x'
    assert linear({0: 1, 1: -1}).describe() == 'x - s^1(x)'
    assert linear({0: 1, 1: -1}, LogVector([1])).describe() == 'x - s^1(x) - [1]'
    assert linear({-1: 2, 0: Fraction(1, 2)}).describe() == '2*s^-1(x) + 1/2*x'
    assert Constant(S0).describe(psi_names=True) == 'psi_0'


def test_image_in_psi_all():
    image = image_in_psi(shift(2))
    assert image.all_psi
    assert image.kind == 'AllPsi'


def test_image_in_psi_points():
    # x - (psi_3 - psi_1) hits psi_1 at psi_3 only
    fn = Linear(((0, Fraction(1)),), LogVector([0, 0, 1, 1]))
    image = image_in_psi(fn)
    assert not image.all_psi
    assert image.kind == 'ExceptionalPoints'
    assert image.points == (PsiElement(3),)
    assert eval_sf(fn, 3) == psi_element(1)


@pytest.mark.parametrize(
    'fn', [
        linear({0: 1, 1: -1}),
        linear({0: 2}),
        linear({0: 1}, LogVector([1])),
        linear({-1: 1, 1: 1}, psi_element(4)),
        linear({0: 2, 1: -1}, psi_element(2)),
        linear({0: 1, 2: -1, 3: 1}, LogVector([0, 1, 1])),
    ]
)
def test_image_in_psi_matches_scan(fn):
    image = image_in_psi(fn)
    scanned = [m for m in range(40) if in_psi(eval_sf(fn, m))]
    assert [p.level for p in image.points] == scanned
    assert [m for m in range(40) if hits_psi(fn, m)] == scanned


def test_image_in_psi_needs_linear():
    with pytest.raises(InvalidSFunction):
        image_in_psi(Constant(ZERO))


def test_psi_coefficients():
    # x - (psi_3 - psi_1) at psi_3 is psi_1
    fn = Linear(((0, Fraction(1)),), LogVector([0, 0, 1, 1]))
    assert psi_coefficients(fn, 3) == {1: 1}
    assert psi_coefficients(fn, 4) == {4: 1, 3: -1, 1: 1}
    assert psi_coefficients(shift(-2), 1) is None
    assert psi_coefficients(Constant(INF), 0) is None
    assert psi_coefficients(Constant(LogVector([2, 1])), 0) == {0: 1, 1: 1}


@pytest.mark.parametrize('m', range(8))
def test_hits_psi_matches_eval(m):
    for fn in (shift(1), linear({0: 2, 1: -1}, psi_element(2)), Constant(S0), Constant(ZERO),
               Linear(((0, Fraction(1)),), LogVector([0, 0, 1, 1]))):
        assert hits_psi(fn, m) is in_psi(eval_sf(fn, m))
