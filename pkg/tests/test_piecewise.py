import pytest

from logcouple.couple import PsiElement, psi_element
from logcouple.exceptions import InvalidInterval, InvalidPartition
from logcouple.piecewise import (WHOLE_PSI, PiecewiseSFunction, PsiInterval,
                                 PsiSubset, eval_piecewise)
from logcouple.sfunction import IDENTITY, Constant, shift
from logcouple.vector import INF, ZERO


def test_interval_validation():
    with pytest.raises(InvalidInterval):
        PsiInterval(-1)
    with pytest.raises(InvalidInterval):
        PsiInterval(3, 3)


def test_interval_ops():
    iv = PsiInterval(2, 5)
    assert 2 in iv and 4 in iv and 5 not in iv
    assert iv.split(3) == (PsiInterval(2, 3), PsiInterval(3, 5))
    assert iv.split(1) == (None, iv)
    assert iv.split(5) == (iv, None)
    assert iv.intersect(PsiInterval(4)) == PsiInterval(4, 5)
    assert iv.intersect(PsiInterval(7)) is None
    assert list(PsiInterval(8).levels(limit=10)) == [8, 9]
    assert PsiInterval(2, 3).is_point
    assert iv.lo_element == PsiElement(2)
    assert PsiInterval(1).hi_element is None


def test_interval_describe():
    assert PsiInterval(1).describe() == '[psi_1, inf)'
    assert PsiInterval(2, 3).describe() == '{psi_2}'
    assert PsiInterval(0, 2).describe(psi_names=False) == '[[1], [1,1,1])'
    assert PsiInterval(0, 3).describe(psi_names=False) == '[[1], [1,1,1,1])'
    assert PsiInterval(0, 2).to_json() == {'lo_level': 0, 'hi_level': 2}


def test_partition_must_tile():
    with pytest.raises(InvalidPartition):
        PiecewiseSFunction([(PsiInterval(0, 2), IDENTITY), (PsiInterval(3), IDENTITY)])
    with pytest.raises(InvalidPartition):
        PiecewiseSFunction([(PsiInterval(0, 2), IDENTITY)])
    with pytest.raises(InvalidPartition):
        PiecewiseSFunction([(PsiInterval(1), IDENTITY)])
    with pytest.raises(InvalidPartition):
        PiecewiseSFunction([])


def test_from_cuts_merges():
    pw = PiecewiseSFunction.from_cuts([(0, 2, IDENTITY), (2, 2, Constant(ZERO)),
                                       (2, None, IDENTITY)])
    assert pw == PiecewiseSFunction.uniform(IDENTITY)
    assert len(pw) == 1


def test_piecewise_evaluate():
    pw = PiecewiseSFunction.from_cuts([(0, 1, Constant(INF)), (1, None, shift(-1))])
    assert pw.evaluate(0) is INF
    assert pw.evaluate(3) == psi_element(2)
    assert eval_piecewise(pw, PsiElement(1)) == psi_element(0)
    assert pw.breakpoints() == [1]
    assert pw.at(7) == shift(-1)
    assert pw.psi_shapes() == [(PsiInterval(0, 1), ('inf', None)),
                               (PsiInterval(1), ('shift', -1))]
    assert pw.rows() == [{'interval': '{psi_0}', 'function': 'inf'},
                         {'interval': '[psi_1, inf)', 'function': 's^-1(x)'}]


def test_piecewise_restrict_and_refine():
    pw = PiecewiseSFunction.from_cuts([(0, 3, IDENTITY), (3, None, shift(1))])
    other = PiecewiseSFunction.from_cuts([(0, 1, Constant(ZERO)), (1, None, IDENTITY)])
    assert pw.restrict(PsiInterval(2, 5)) == [(PsiInterval(2, 3), IDENTITY),
                                              (PsiInterval(3, 5), shift(1))]
    assert pw.refine(other) == [
        (PsiInterval(0, 1), IDENTITY, Constant(ZERO)),
        (PsiInterval(1, 3), IDENTITY, IDENTITY),
        (PsiInterval(3), shift(1), IDENTITY),
    ]


def test_psi_shapes_rejects_non_psi():
    pw = PiecewiseSFunction.uniform(Constant(ZERO))
    with pytest.raises(ValueError):
        pw.psi_shapes()


def test_subset_normalizes():
    subset = PsiSubset([PsiInterval(0, 2), PsiInterval(5), PsiInterval(2, 3)])
    assert subset.runs == (PsiInterval(0, 3), PsiInterval(5))
    assert subset.describe() == '[psi_0, psi_3) u [psi_5, inf)'
    assert 4 not in subset
    assert PsiElement(6) in subset
    assert subset.last_breakpoint() == 5


def test_subset_algebra():
    subset = PsiSubset([PsiInterval(0, 3), PsiInterval(5)])
    assert ~subset == PsiSubset([PsiInterval(3, 5)])
    assert ~PsiSubset.empty() == PsiSubset.everything()
    assert ~PsiSubset.everything() == PsiSubset.empty()
    assert PsiSubset.everything() & PsiSubset.from_levels([4]) == PsiSubset.from_levels([4])
    assert PsiSubset.from_levels([1, 2]) | PsiSubset.from_levels([3]) == PsiSubset([PsiInterval(1, 4)])
    assert PsiSubset([WHOLE_PSI]).is_everything


def test_subset_points():
    subset = PsiSubset.from_levels([1])
    assert subset.describe() == '{psi_1}'
    assert subset.points == [PsiElement(1)]
    assert subset.intervals == []
    assert subset.to_json() == {'intervals': [], 'points': [1]}
    assert PsiSubset.empty().describe() == '{}'
    assert PsiSubset.empty().is_empty
