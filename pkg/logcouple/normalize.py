"""Normalize one-variable terms on Psi and solve conditions over Psi"""
import logging
from fractions import Fraction

from logcouple.piecewise import PiecewiseSFunction, PsiInterval, PsiSubset
from logcouple.sfunction import (IDENTITY, Constant, add_sf, d_min, eval_sf,
                                 neg_sf, scale_sf, sub_sf)
from logcouple.tables import compose_p, compose_psi, compose_s
from logcouple.terms import (RELATIONS, Add, And, Atom, Const, Delta, Infty,
                             Neg, Not, Or, P, Psi, S, Var, Zero)
from logcouple.vector import INF, ZERO, Ordering

logger = logging.getLogger(__name__)


def term_to_piecewise(term):
    """Piecewise s-function agreeing with term at every point of Psi"""
    return _normalize(term).merge_adjacent()


def _normalize(term):
    if isinstance(term, Zero):
        return PiecewiseSFunction.uniform(Constant(ZERO))
    if isinstance(term, Infty):
        return PiecewiseSFunction.uniform(Constant(INF))
    if isinstance(term, Var):
        return PiecewiseSFunction.uniform(IDENTITY)
    if isinstance(term, Const):
        return PiecewiseSFunction.uniform(Constant(term.value))
    if isinstance(term, Add):
        return add_piecewise(_normalize(term.left), _normalize(term.right))
    if isinstance(term, Neg):
        return _normalize(term.arg).map(neg_sf)
    if isinstance(term, Delta):
        factor = Fraction(1, term.n)
        return _normalize(term.arg).map(lambda fn: scale_sf(factor, fn))
    if isinstance(term, Psi):
        return compose_piecewise(_normalize(term.arg), compose_psi)
    if isinstance(term, S):
        return compose_piecewise(_normalize(term.arg), compose_s)
    if isinstance(term, P):
        return compose_piecewise(_normalize(term.arg), compose_p)
    raise TypeError(f'not a term: {term!r}')


def add_piecewise(left, right):
    """Sum on the common refinement.

    Below the larger of the two finite-domain minima one side is infinite,
    so the sum is infinity there even if the shifts would cancel.
    """
    cuts = []
    for iv, f, g in left.refine(right):
        low, high = iv.split(max(d_min(f), d_min(g)))
        if low is not None:
            cuts.append((low.lo, low.hi, Constant(INF)))
        if high is not None:
            cuts.append((high.lo, high.hi, add_sf(f, g)))
    return PiecewiseSFunction.from_cuts(cuts)


def compose_piecewise(inner, table):
    cuts = []
    for iv, fn in inner:
        for part, gn in table(fn).restrict(iv):
            cuts.append((part.lo, part.hi, gn))
    result = PiecewiseSFunction.from_cuts(cuts)
    logger.debug('%s: %d pieces -> %d pieces', table.__name__, len(inner), len(result))
    return result


def sign_bound(fn):
    """Level from which the sign of a linear s-function no longer changes.

    Once m + k_1 passes the support of beta, the coordinates up to m + k_1
    are q - beta_i and the next one is q - q_1, independent of m.
    """
    return fn.beta.max_index - fn.k1 + 2


def _is_infinite_on(fn, part):
    if isinstance(fn, Constant):
        return fn.value is INF
    return part.lo < fn.d_min


def _orders(f, g, part):
    """(run, ordering of f against g, bound) on a part where neither side
    changes between finite and infinite"""
    f_inf, g_inf = _is_infinite_on(f, part), _is_infinite_on(g, part)
    if f_inf and g_inf:
        return [(part, Ordering.EQUAL)], part.lo
    if f_inf:
        return [(part, Ordering.GREATER)], part.lo
    if g_inf:
        return [(part, Ordering.LESS)], part.lo
    diff = sub_sf(f, g)
    if isinstance(diff, Constant):
        return [(part, Ordering.from_sign(diff.value.sign))], part.lo
    bound = sign_bound(diff)
    runs = []
    head_end = bound if part.hi is None else min(part.hi, bound)
    for m in range(part.lo, head_end):
        runs.append((PsiInterval(m, m + 1), Ordering.from_sign(eval_sf(diff, m).sign)))
    tail_lo = max(part.lo, bound)
    if part.hi is None or tail_lo < part.hi:
        sign = eval_sf(diff, tail_lo).sign
        runs.append((PsiInterval(tail_lo, part.hi), Ordering.from_sign(sign)))
    return runs, bound


def _solve_atom(atom):
    lhs = term_to_piecewise(atom.lhs)
    rhs = term_to_piecewise(atom.rhs)
    wanted = RELATIONS[atom.rel]
    runs = []
    bound = 1
    for iv, f, g in lhs.refine(rhs):
        bound = max(bound, iv.lo + 1)
        cuts = sorted({c for c in (d_min(f), d_min(g)) if c in iv and c > iv.lo})
        parts = []
        rest = iv
        for c in cuts:
            low, rest = rest.split(c)
            parts.append(low)
            bound = max(bound, c + 1)
        parts.append(rest)
        for part in parts:
            found, part_bound = _orders(f, g, part)
            bound = max(bound, part_bound)
            runs.extend(run for run, order in found if order == wanted)
    return PsiSubset(runs), bound


def _solve(cond):
    if isinstance(cond, Atom):
        return _solve_atom(cond)
    if isinstance(cond, And):
        (a, ba), (b, bb) = _solve(cond.left), _solve(cond.right)
        return a & b, max(ba, bb)
    if isinstance(cond, Or):
        (a, ba), (b, bb) = _solve(cond.left), _solve(cond.right)
        return a | b, max(ba, bb)
    if isinstance(cond, Not):
        a, ba = _solve(cond.arg)
        return ~a, ba
    raise TypeError(f'not a condition: {cond!r}')


def solve(cond):
    """The subset of Psi where cond holds"""
    subset, bound = _solve(cond)
    logger.debug('solved with stability bound %d: %s', bound, subset.describe())
    return subset


def stability_bound(cond):
    """A level beyond which membership in solve(cond) is constant"""
    _, bound = _solve(cond)
    return bound
