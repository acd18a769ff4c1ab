from fractions import Fraction

import pytest

from logcouple.exceptions import InvalidLiteral
from logcouple.vector import (CLASS_OF_ZERO, INF, ZERO, LogVector, Ordering,
                              add, arch_class, arch_compare, compare,
                              format_vector, from_psi_basis, parse_rational,
                              parse_vector, psi_level, same_arch_class_by_multiples,
                              scale, smallest_multiple, subtract, to_psi_basis)


def test_zero_coordinates_dropped():
    a = LogVector([1, 0, 0])
    assert a == LogVector([1])
    assert a.as_list() == [Fraction(1)]
    assert a.support == (0,)
    assert ZERO.max_index == -1
    assert ZERO.lead_index is None


@pytest.mark.parametrize(
    'smaller, larger', [
        ('[0]', '[0,1]'),
        ('[0,-1]', '[0]'),
        ('[0,1000]', '[1]'),
        ('[1,-5]', '[1]'),
        ('[-1]', '[0,0,-7]'),
        ('[1/2]', '[1,-1/3]'),
    ]
)
def test_lexicographic_order(smaller, larger):
    a, b = parse_vector(smaller), parse_vector(larger)
    assert a < b
    assert compare(a, b) == Ordering.LESS
    assert compare(b, a) == Ordering.GREATER


def test_infinity_absorbs():
    a = LogVector([3, -1])
    assert add(a, INF) is INF
    assert add(INF, a) is INF
    assert subtract(a, INF) is INF
    assert scale(Fraction(1, 2), INF) is INF
    assert a < INF
    assert compare(INF, INF) == Ordering.EQUAL
    assert compare(a, INF) == Ordering.LESS


def test_group_operations():
    a = parse_vector('[1, -1/2, 0, 3]')
    b = parse_vector('[-1, 1/2]')
    assert a + b == LogVector({3: 3})
    assert a - a == ZERO
    assert a * 2 == LogVector([2, -1, 0, 6])
    assert 0 * a == ZERO


@pytest.mark.parametrize(
    'text, expected', [
        ('[1,1,1]', '[1,1,1]'),
        ('[ 1 , -1/2 ]', '[1,-1/2]'),
        ('[0, 0, 2/4]', '[0,0,1/2]'),
        ('[]', '[0]'),
        ('[0]', '[0]'),
        ('inf', 'inf'),
    ]
)
def test_parse_format_vector(text, expected):
    assert format_vector(parse_vector(text)) == expected


@pytest.mark.parametrize('text', ['1,2', '[1/0]', '[1.5]', '[a]', '[1,,2]', 'infinity'])
def test_parse_vector_invalid(text):
    with pytest.raises(InvalidLiteral):
        parse_vector(text)


@pytest.mark.parametrize('text', ['1/0', '1.5', 'abc', '', '2/-3'])
def test_parse_rational_invalid(text):
    with pytest.raises(InvalidLiteral):
        parse_rational(text)


def test_psi_names():
    assert format_vector(LogVector([1, 1, 1]), psi_names=True) == 'psi_2'
    assert format_vector(LogVector([1, 1, 2]), psi_names=True) == '[1,1,2]'
    assert psi_level(LogVector([1])) == 0
    assert psi_level(LogVector([0, 1])) is None
    assert psi_level(INF) is None


def test_arch_class():
    assert arch_class(ZERO) == CLASS_OF_ZERO
    assert repr(arch_class(ZERO)) == 'ClassOfZero'
    assert repr(arch_class(LogVector([0, 3, 1]))) == 'LeadIndex(1)'
    assert arch_compare(LogVector([0, 1]), LogVector([1])) == Ordering.LESS
    assert arch_compare(LogVector([-2]), LogVector([5, 1])) == Ordering.EQUAL
    assert arch_compare(LogVector([1]), ZERO) == Ordering.GREATER


@pytest.mark.parametrize(
    'a, b, expected', [
        ('[0,3]', '[0,-1/2]', True),
        ('[0,1]', '[1]', False),
        ('[100]', '[1/100, 5]', True),
        ('[0,0,1]', '[0,1,-1]', False),
    ]
)
def test_same_arch_class_by_multiples(a, b, expected):
    a, b = parse_vector(a), parse_vector(b)
    assert same_arch_class_by_multiples(a, b) is expected
    assert (arch_class(a) == arch_class(b)) is expected


@pytest.mark.parametrize(
    'a, b, expected', [
        ('[2]', '[6]', 3),
        ('[-6]', '[2]', 3),
        ('[100]', '[1/100, 5]', 10000),
        ('[0,1]', '[1]', None),
        ('[0,3]', '[0,3]', 1),
    ]
)
def test_smallest_multiple(a, b, expected):
    assert smallest_multiple(parse_vector(a), parse_vector(b)) == expected


def test_psi_basis():
    assert to_psi_basis(LogVector([1, 1, 1])) == {2: 1}
    assert to_psi_basis(LogVector([1])) == {0: 1}
    assert to_psi_basis(LogVector([0, 1])) == {0: -1, 1: 1}
    assert to_psi_basis(ZERO) == {}
    assert from_psi_basis({0: -1, 1: 1}) == LogVector([0, 1])
    a = LogVector([2, -1, 0, 1, 5])
    assert from_psi_basis(to_psi_basis(a)) == a
