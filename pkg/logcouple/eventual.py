"""Behaviour of one-variable terms as x goes to +infinity in the group.

Every term is eventually constant or eventually x |-> qx + beta. Thresholds
are multiples N e_0: any x > N e_0 has first coordinate at least N.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from logcouple.couple import S0, pred, psi, psi_element, succ
from logcouple.terms import (RELATIONS, Add, And, Atom, Const, Delta, Infty,
                             Neg, Not, Or, P, Psi, S, Var, Zero)
from logcouple.vector import (INF, ZERO, LogVector, Ordering, compare,
                              format_rational, format_vector, negate, scale)

logger = logging.getLogger(__name__)

PSI_FORMULA = 'x = p(s(x))'
# positive differences psi_b - psi_a, a < b
PSI_DIFFERENCE_FORMULA = 'x = p(s(x + p(psi(x)))) - p(psi(x))'


def _threshold(bound):
    return LogVector({0: bound})


@dataclass(frozen=True)
class EventuallyConstant:
    value: object
    bound: int = 0

    @property
    def threshold(self):
        return _threshold(self.bound)

    def evaluate(self, x):
        return self.value

    def describe(self, psi_names=False):
        return f'{format_vector(self.value, psi_names)} for x > {format_vector(self.threshold)}'

    def to_json(self):
        return {'kind': 'const', 'value': format_vector(self.value),
                'threshold': format_vector(self.threshold)}


@dataclass(frozen=True)
class EventuallyAffine:
    q: Fraction
    beta: LogVector
    bound: int = 0

    @property
    def threshold(self):
        return _threshold(self.bound)

    def evaluate(self, x):
        if x is INF:
            return INF
        return x * self.q + self.beta

    def describe(self, psi_names=False):
        text = 'x' if self.q == 1 else f'{format_rational(self.q)}*x'
        if not self.beta.is_zero:
            text += f' + {format_vector(self.beta, psi_names)}'
        return f'{text} for x > {format_vector(self.threshold)}'

    def to_json(self):
        return {'kind': 'affine', 'q': format_rational(self.q),
                'beta': format_vector(self.beta),
                'threshold': format_vector(self.threshold)}


def _escape_bound(form, targets):
    """Bound past which q x_0 + beta_0 avoids every target value"""
    beta0 = form.beta.coord(0)
    roots = [(Fraction(t) - beta0) / form.q for t in targets]
    return max([form.bound, 0] + [math.floor(r) + 1 for r in roots])


def _add_forms(a, b):
    bound = max(a.bound, b.bound)
    if isinstance(a, EventuallyConstant) and isinstance(b, EventuallyConstant):
        if a.value is INF or b.value is INF:
            return EventuallyConstant(INF, bound)
        return EventuallyConstant(a.value + b.value, bound)
    if isinstance(a, EventuallyConstant):
        a, b = b, a
    if isinstance(b, EventuallyConstant):
        if b.value is INF:
            return EventuallyConstant(INF, bound)
        return EventuallyAffine(a.q, a.beta + b.value, bound)
    q = a.q + b.q
    if q == 0:
        return EventuallyConstant(a.beta + b.beta, bound)
    return EventuallyAffine(q, a.beta + b.beta, bound)


def _scale_form(form, factor):
    if isinstance(form, EventuallyConstant):
        return EventuallyConstant(scale(factor, form.value), form.bound)
    return EventuallyAffine(form.q * factor, form.beta * factor, form.bound)


def eventual_form(term):
    if isinstance(term, Zero):
        return EventuallyConstant(ZERO)
    if isinstance(term, Infty):
        return EventuallyConstant(INF)
    if isinstance(term, Var):
        return EventuallyAffine(Fraction(1), ZERO)
    if isinstance(term, Const):
        return EventuallyConstant(term.value)
    if isinstance(term, Add):
        return _add_forms(eventual_form(term.left), eventual_form(term.right))
    if isinstance(term, Neg):
        inner = eventual_form(term.arg)
        if isinstance(inner, EventuallyConstant):
            return EventuallyConstant(negate(inner.value), inner.bound)
        return EventuallyAffine(-inner.q, -inner.beta, inner.bound)
    if isinstance(term, Delta):
        return _scale_form(eventual_form(term.arg), Fraction(1, term.n))
    if isinstance(term, (Psi, S, P)):
        inner = eventual_form(term.arg)
        op = {Psi: psi, S: succ, P: pred}[type(term)]
        if isinstance(inner, EventuallyConstant):
            return EventuallyConstant(op(inner.value), inner.bound)
        # first coordinate escapes 0 and 1, so the argument has leading
        # index 0 and is not in Psi
        bound = _escape_bound(inner, (0, 1))
        value = INF if isinstance(term, P) else S0
        logger.debug('%s of an affine form is eventually %s past %d', type(term).__name__,
                     value, bound)
        return EventuallyConstant(value, bound)
    raise TypeError(f'not a term: {term!r}')


def _eventual_order(a, b):
    """Eventual ordering of two forms and the bound it needs"""
    bound = max(a.bound, b.bound)
    if isinstance(a, EventuallyConstant) and isinstance(b, EventuallyConstant):
        return compare(a.value, b.value), bound
    if isinstance(a, EventuallyConstant):
        order, bound = _eventual_order(b, a)
        return order.flip(), bound
    if isinstance(b, EventuallyConstant):
        if b.value is INF:
            return Ordering.LESS, bound
        diff = EventuallyAffine(a.q, a.beta - b.value, bound)
    else:
        q = a.q - b.q
        if q == 0:
            return compare(a.beta, b.beta), bound
        diff = EventuallyAffine(q, a.beta - b.beta, bound)
    return Ordering.from_sign(diff.q), _escape_bound(diff, (0,))


@dataclass(frozen=True)
class EventualTruth:
    holds: bool
    bound: int = 0

    @property
    def threshold(self):
        return _threshold(self.bound)

    def to_json(self):
        return {'holds': self.holds, 'threshold': format_vector(self.threshold)}


def eventual_truth(cond):
    """Whether cond holds on a whole final segment (threshold, inf) of the
    group, or fails on one"""
    if isinstance(cond, Atom):
        order, bound = _eventual_order(eventual_form(cond.lhs), eventual_form(cond.rhs))
        return EventualTruth(order == RELATIONS[cond.rel], bound)
    if isinstance(cond, Not):
        inner = eventual_truth(cond.arg)
        return EventualTruth(not inner.holds, inner.bound)
    left, right = eventual_truth(cond.left), eventual_truth(cond.right)
    bound = max(left.bound, right.bound)
    if isinstance(cond, And):
        return EventualTruth(left.holds and right.holds, bound)
    if isinstance(cond, Or):
        return EventualTruth(left.holds or right.holds, bound)
    raise TypeError(f'not a condition: {cond!r}')


def psi_difference_members(n):
    """psi_(k+1) - psi_k = e_(k+1) for k < n: positive differences of
    Psi-elements tending to 0"""
    return [psi_element(k + 1) - psi_element(k) for k in range(n)]
