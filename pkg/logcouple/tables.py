"""psi, s and p composed with a single s-function.

Each compose_* takes an s-function F and returns psi(F(x)), s(F(x)) or
p(F(x)) as a piecewise s-function on Psi; q is the sum of the
coefficients of F. The tables reduce to comparing s^(k_1+1)(x) with a
threshold delta in Psi, which becomes a comparison of the level of x with
that of delta shifted down by k_1 + 1. Single points where the comparison
is an equality are evaluated directly.
"""
import logging
from fractions import Fraction

from logcouple.couple import S0, iterate_s, pred, psi, psi_element, psi_level, succ
from logcouple.piecewise import PiecewiseSFunction
from logcouple.sfunction import Constant, eval_sf, image_in_psi, shift
from logcouple.vector import INF, Ordering, compare

logger = logging.getLogger(__name__)


def _direct(outer, fn, level):
    return Constant(outer(eval_sf(fn, level)))


def _threshold_cuts(fn, outer, lo, delta, below, above):
    """Cuts for x >= lo split on s^(k_1+1)(x) against delta.

    below applies where s^(k_1+1)(x) < delta, above where it is greater;
    the single level where they are equal is evaluated directly.
    """
    k = fn.k1 + 1
    tau = iterate_s(delta, -k)
    if tau is INF:
        # delta lies below the whole range of s^k on [lo, inf)
        order = compare(iterate_s(psi_element(lo), k), delta)
        logger.debug('threshold %s uniformly decided: %s', delta, order)
        return [(lo, None, below if order == Ordering.LESS else above)]
    t = psi_level(tau)
    cuts = []
    if t > lo:
        cuts.append((lo, t, below))
    if t >= lo:
        cuts.append((t, t + 1, _direct(outer, fn, t)))
    cuts.append((max(lo, t + 1), None, above))
    return cuts


def _finite_domain_cuts(fn):
    if fn.d_min > 0:
        return [(0, fn.d_min, Constant(INF))]
    return []


def compose_psi(fn):
    """psi(F(x)) as a piecewise s-function"""
    if isinstance(fn, Constant):
        return PiecewiseSFunction.uniform(Constant(psi(fn.value)))
    cuts = _finite_domain_cuts(fn)
    d = fn.d_min
    q = fn.total
    beta = fn.beta
    rise = shift(fn.k1 + 1)
    if beta.is_zero:
        cuts.append((d, None, rise if q == 0 else Constant(S0)))
    elif psi(beta) != S0:
        if q != 0:
            cuts.append((d, None, Constant(S0)))
        else:
            delta = psi(beta)
            cuts.extend(_threshold_cuts(fn, psi, d, delta, rise, Constant(delta)))
    else:
        cuts.extend(_s0_row_cuts(fn, psi, d, q, rise, _psi_row_threshold))
    return PiecewiseSFunction.from_cuts(cuts)


def _psi_row_threshold(fn, q):
    return succ(fn.beta * (Fraction(1) / q))


def _s0_row_cuts(fn, outer, d, q, rise, threshold):
    """The row whose deciding value is s0.

    At the level where s^k_1(x) = s0 the value is computed directly; above
    it q = 0 gives s0, otherwise compare with the row threshold.
    """
    cuts = []
    t0 = iterate_s(S0, -fn.k1)
    lo = d
    if t0 is not INF:
        t = psi_level(t0)
        if t >= d:
            cuts.append((t, t + 1, _direct(outer, fn, t)))
            lo = t + 1
    if q == 0:
        cuts.append((lo, None, Constant(S0)))
    else:
        delta = threshold(fn, q)
        cuts.extend(_threshold_cuts(fn, outer, lo, delta, rise, Constant(delta)))
    return cuts


def _s_row_threshold(fn, q):
    # psi(beta) for q = 1, else s(beta / (q - 1))
    if q == 1:
        return psi(fn.beta)
    return succ(fn.beta * (Fraction(1) / (q - 1)))


def compose_s(fn):
    """s(F(x)) as a piecewise s-function.

    F = V - beta, so rows are selected on s(-beta); in the row where
    s(-beta) = s0 the threshold is psi(beta) when q = 1 and
    s(beta / (q - 1)) otherwise.
    """
    if isinstance(fn, Constant):
        return PiecewiseSFunction.uniform(Constant(succ(fn.value)))
    cuts = _finite_domain_cuts(fn)
    d = fn.d_min
    q = fn.total
    offset = -fn.beta
    rise = shift(fn.k1 + 1)
    if offset.is_zero:
        cuts.append((d, None, rise if q == 1 else Constant(S0)))
    elif succ(offset) != S0:
        if q != 0:
            cuts.append((d, None, Constant(S0)))
        else:
            delta = succ(offset)
            cuts.extend(_threshold_cuts(fn, succ, d, delta, rise, Constant(delta)))
    else:
        cuts.extend(_s0_row_cuts(fn, succ, d, q, rise, _s_row_threshold))
    return PiecewiseSFunction.from_cuts(cuts)


def compose_p(fn):
    """p(F(x)) as a piecewise s-function"""
    if isinstance(fn, Constant):
        return PiecewiseSFunction.uniform(Constant(pred(fn.value)))
    if fn.is_shift:
        k = fn.k1
        d = fn.d_min
        cuts = _finite_domain_cuts(fn)
        if k <= 0:
            # F(min D_F) = s0 has no predecessor
            cuts.append((d, d + 1, Constant(INF)))
            cuts.append((d + 1, None, shift(k - 1)))
        else:
            cuts.append((d, None, shift(k - 1)))
        return PiecewiseSFunction.from_cuts(cuts)
    image = image_in_psi(fn)
    cuts = []
    start = 0
    for point in image.points:
        m = point.level
        value = eval_sf(fn, m)
        cuts.append((start, m, Constant(INF)))
        cuts.append((m, m + 1, Constant(pred(value))))
        start = m + 1
    cuts.append((start, None, Constant(INF)))
    return PiecewiseSFunction.from_cuts(cuts)
