"""s-functions on the Psi-set.

An s-function is either a constant of the extended group or a map

    x |-> q_1 s^k_1(x) + ... + q_n s^k_n(x) - beta

with k_1 < ... < k_n, every q_j nonzero, and s^k read as p^(-k) for k < 0.
On psi_m the shifted value s^k(psi_m) is psi_(m+k), which is infinity when
m + k < 0; so a linear s-function is infinite exactly below level -k_1.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from logcouple.couple import PsiElement, in_psi, psi_element
from logcouple.exceptions import InvalidSFunction, ZeroArgument
from logcouple.vector import (INF, ZERO, LogVector, format_rational,
                              format_vector, negate, to_psi_basis)


@dataclass(frozen=True)
class Constant:
    value: object

    def describe(self, psi_names=False):
        return format_vector(self.value, psi_names)


@dataclass(frozen=True)
class Linear:
    shifts: Tuple[Tuple[int, Fraction], ...]
    beta: LogVector = ZERO

    def __post_init__(self):
        if not self.shifts:
            raise InvalidSFunction('a linear s-function needs at least one shift')
        ks = [k for k, _ in self.shifts]
        if any(a >= b for a, b in zip(ks, ks[1:])):
            raise InvalidSFunction(f'shifts must be strictly increasing: {ks}')
        if any(q == 0 for _, q in self.shifts):
            raise InvalidSFunction('shift coefficients must be nonzero')
        if not isinstance(self.beta, LogVector):
            raise InvalidSFunction(f'beta must be a finite vector, got {self.beta}')

    @property
    def k1(self):
        return self.shifts[0][0]

    @property
    def total(self):
        """Sum of the coefficients"""
        return sum((q for _, q in self.shifts), Fraction(0))

    @property
    def d_min(self):
        """Lowest level of the finite domain"""
        return max(0, -self.k1)

    def in_domain(self, level):
        return level >= self.d_min

    @property
    def is_shift(self):
        """True for the pure shift x |-> s^k(x)"""
        return len(self.shifts) == 1 and self.shifts[0][1] == 1 and self.beta.is_zero

    def describe(self, psi_names=False):
        parts = []
        for k, q in self.shifts:
            base = 'x' if k == 0 else f's^{k}(x)'
            if q == 1:
                term = base
            elif q == -1:
                term = f'-{base}'
            else:
                term = f'{format_rational(q)}*{base}'
            if parts and term.startswith('-'):
                parts.append(f' - {term[1:]}')
            elif parts:
                parts.append(f' + {term}')
            else:
                parts.append(term)
        if not self.beta.is_zero:
            parts.append(f' - {format_vector(self.beta, psi_names)}')
        return ''.join(parts)


def d_min(fn):
    """Lowest level on which fn can be finite; 0 for constants"""
    return fn.d_min if isinstance(fn, Linear) else 0


def linear(coeffs, beta=ZERO):
    """Build an s-function from {k: q}, collecting like shifts.

    Everything cancelling leaves the constant -beta.
    """
    merged = {}
    for k, q in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
        merged[k] = merged.get(k, Fraction(0)) + Fraction(q)
    shifts = tuple((k, q) for k, q in sorted(merged.items()) if q != 0)
    if not shifts:
        return Constant(-beta)
    return Linear(shifts, beta)


def shift(k):
    """x |-> s^k(x)"""
    return Linear(((k, Fraction(1)),))


IDENTITY = shift(0)


def _level(x):
    return x.level if isinstance(x, PsiElement) else x


def eval_sf(fn, x):
    """Value of fn at a Psi-element (or a level)"""
    if isinstance(fn, Constant):
        return fn.value
    m = _level(x)
    if m + fn.k1 < 0:
        return INF
    value = -fn.beta
    for k, q in fn.shifts:
        value = value + psi_element(m + k) * q
    return value


def add_sf(f, g):
    if isinstance(f, Constant) and isinstance(g, Constant):
        if f.value is INF or g.value is INF:
            return Constant(INF)
        return Constant(f.value + g.value)
    if isinstance(f, Constant):
        f, g = g, f
    if isinstance(g, Constant):
        if g.value is INF:
            return Constant(INF)
        return Linear(f.shifts, f.beta - g.value)
    return linear(list(f.shifts) + list(g.shifts), f.beta + g.beta)


def neg_sf(f):
    if isinstance(f, Constant):
        return Constant(negate(f.value))
    return Linear(tuple((k, -q) for k, q in f.shifts), -f.beta)


def scale_sf(q, f):
    q = Fraction(q)
    if q == 0:
        raise ZeroArgument('s-functions scale by nonzero rationals only')
    if isinstance(f, Constant):
        return Constant(INF if f.value is INF else f.value * q)
    return Linear(tuple((k, q * c) for k, c in f.shifts), f.beta * q)


def sub_sf(f, g):
    return add_sf(f, neg_sf(g))


def psi_coefficients(fn, x, beta_coeffs=None):
    """Psi-basis coordinates of fn at a level, or None where fn is infinite"""
    if isinstance(fn, Constant):
        return None if fn.value is INF else to_psi_basis(fn.value)
    m = _level(x)
    if m + fn.k1 < 0:
        return None
    if beta_coeffs is None:
        beta_coeffs = to_psi_basis(fn.beta)
    coeffs = {n: -c for n, c in beta_coeffs.items()}
    for k, q in fn.shifts:
        c = coeffs.get(m + k, 0) + q
        if c == 0:
            coeffs.pop(m + k, None)
        else:
            coeffs[m + k] = c
    return coeffs


def hits_psi(fn, x, beta_coeffs=None):
    """in_psi(eval_sf(fn, x)) without building the value"""
    coeffs = psi_coefficients(fn, x, beta_coeffs)
    return coeffs is not None and len(coeffs) == 1 and next(iter(coeffs.values())) == 1


@dataclass(frozen=True)
class ImageInPsi:
    """Where a linear s-function takes values in Psi: everywhere, or at
    finitely many preimage points"""

    all_psi: bool
    points: Tuple[PsiElement, ...] = ()

    @property
    def kind(self):
        return 'AllPsi' if self.all_psi else 'ExceptionalPoints'


def image_in_psi(fn):
    """Classify the preimage of Psi under a linear s-function.

    Writing beta in the psi-basis, a value sum q_j psi_(m+k_j) - beta can be
    a single psi_l only when the supports of both combinations nearly match,
    so the candidates are the levels i - k_j for i in the psi-support of beta.
    Every candidate is checked by direct evaluation.
    """
    if not isinstance(fn, Linear):
        raise InvalidSFunction('image_in_psi needs a linear s-function')
    if fn.beta.is_zero:
        if fn.is_shift:
            return ImageInPsi(True)
        return ImageInPsi(False)
    n = len(fn.shifts)
    coeffs = to_psi_basis(fn.beta)
    if len(coeffs) > n + 1 or len(coeffs) < n - 1:
        return ImageInPsi(False)
    candidates = set()
    for i in coeffs:
        for k, _ in fn.shifts:
            m = i - k
            if m >= 0 and fn.in_domain(m):
                candidates.add(m)
    points = tuple(PsiElement(m) for m in sorted(candidates)
                   if in_psi(eval_sf(fn, m)))
    return ImageInPsi(False, points)
