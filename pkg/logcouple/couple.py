"""The asymptotic couple maps of the logarithmic value group.

psi sends a nonzero vector with leading index n to psi_n = e_0 + ... + e_n.
Everything else (integral, successor, predecessor, contraction, derivative)
is built from psi and the vector operations.
"""
import functools
from dataclasses import dataclass
from fractions import Fraction

from logcouple.exceptions import NonNegativeArgument, ZeroArgument
from logcouple.vector import INF, LogVector, add, psi_level


@functools.lru_cache(maxsize=1024)
def psi_element(n):
    """psi_n = e_0 + ... + e_n"""
    if n < 0:
        raise ValueError(f'psi level must be a natural number, got {n}')
    return LogVector._from_items((i, Fraction(1)) for i in range(n + 1))


S0 = psi_element(0)


@dataclass(frozen=True, order=True)
class PsiElement:
    """An element psi_level of the Psi-set"""

    level: int

    def __post_init__(self):
        if self.level < 0:
            raise ValueError(f'psi level must be a natural number, got {self.level}')

    @property
    def value(self):
        return psi_element(self.level)

    def __str__(self):
        return f'psi_{self.level}'


def psi(a):
    if a is INF or a.is_zero:
        return INF
    return psi_element(a.lead_index)


def in_psi(a):
    return psi_level(a) is not None


def _first_non_unit(a):
    n = 0
    while a.coord(n) == 1:
        n += 1
    return n


def integral(a):
    """The unique nonzero b with b + psi(b) = a"""
    n = _first_non_unit(a)
    coords = {i: v for i, v in a.items if i > n}
    coords[n] = a.coord(n) - 1
    return LogVector(coords)


def succ(a):
    """s(a) = psi(integral(a)); infinity is fixed"""
    if a is INF:
        return INF
    return psi(integral(a))


def pred(a):
    """Inverse of succ on Psi above s0, infinity elsewhere"""
    level = psi_level(a)
    if level is None or level == 0:
        return INF
    return psi_element(level - 1)


def iterate_s(a, k):
    """s^k for k >= 0 and p^(-k) for k < 0"""
    step = succ if k >= 0 else pred
    for _ in range(abs(k)):
        if a is INF:
            break
        a = step(a)
    return a


def chi(a):
    """Contraction: integral(psi(a)) on negative arguments"""
    if a is INF or a.sign >= 0:
        raise NonNegativeArgument(a)
    return integral(psi(a))


def prime(a):
    """a' = a + psi(a) on nonzero arguments"""
    if a is INF or a.is_zero:
        raise ZeroArgument(f'derivative is undefined at {a}')
    return add(a, psi(a))


def dagger(a):
    """Logarithmic derivative; coincides with psi"""
    if a is INF or a.is_zero:
        raise ZeroArgument(f'logarithmic derivative is undefined at {a}')
    return psi(a)


def in_derivatives_of_negatives(a):
    """a is the derivative of some negative element"""
    return integral(a).sign < 0


def in_derivatives_of_positives(a):
    return integral(a).sign > 0
