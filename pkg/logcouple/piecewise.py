"""Intervals of the Psi-set, piecewise s-functions and subsets of Psi.

Psi is order-isomorphic to the naturals (psi_n <-> n), so intervals are
stored as half-open level ranges [lo, hi) with hi = None meaning infinity.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from logcouple.couple import PsiElement, in_psi, psi_level
from logcouple.exceptions import InvalidInterval, InvalidPartition
from logcouple.sfunction import Constant, Linear, eval_sf
from logcouple.vector import INF, format_rational, format_vector

logger = logging.getLogger(__name__)


def _min_hi(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


@dataclass(frozen=True, order=True)
class PsiInterval:
    """[psi_lo, psi_hi) in Psi; hi None is unbounded"""

    lo: int
    hi: Optional[int] = None

    def __post_init__(self):
        if self.lo < 0:
            raise InvalidInterval(f'interval starts below s0: {self.lo}')
        if self.hi is not None and self.hi <= self.lo:
            raise InvalidInterval(f'empty interval [{self.lo}, {self.hi})')

    @property
    def lo_element(self):
        return PsiElement(self.lo)

    @property
    def hi_element(self):
        return None if self.hi is None else PsiElement(self.hi)

    @property
    def is_point(self):
        return self.hi == self.lo + 1

    def __contains__(self, level):
        return level >= self.lo and (self.hi is None or level < self.hi)

    def levels(self, limit=None):
        """Levels in the interval, cut at limit when unbounded"""
        end = _min_hi(self.hi, limit)
        if end is None:
            raise ValueError('unbounded interval needs a limit')
        return range(self.lo, max(self.lo, end))

    def intersect(self, other):
        lo = max(self.lo, other.lo)
        hi = _min_hi(self.hi, other.hi)
        if hi is not None and hi <= lo:
            return None
        return PsiInterval(lo, hi)

    def split(self, level):
        """Parts below and from level; either may be None"""
        if level <= self.lo:
            return None, self
        if self.hi is not None and level >= self.hi:
            return self, None
        return PsiInterval(self.lo, level), PsiInterval(level, self.hi)

    def describe(self, psi_names=True):
        lo = f'psi_{self.lo}' if psi_names else format_vector(PsiElement(self.lo).value)
        if self.is_point:
            return f'{{{lo}}}'
        if self.hi is None:
            return f'[{lo}, inf)'
        hi = f'psi_{self.hi}' if psi_names else format_vector(PsiElement(self.hi).value)
        return f'[{lo}, {hi})'

    def to_json(self):
        return {'lo_level': self.lo, 'hi_level': self.hi}


WHOLE_PSI = PsiInterval(0)


def sfunction_to_json(fn):
    if isinstance(fn, Constant):
        return {'kind': 'const', 'value': format_vector(fn.value)}
    return {'kind': 'linear',
            'shifts': [[k, format_rational(q)] for k, q in fn.shifts],
            'beta': format_vector(fn.beta)}


class PiecewiseSFunction:
    """A total function on Psi given by one s-function per interval"""

    def __init__(self, pieces):
        pieces = tuple((iv, fn) for iv, fn in pieces)
        if not pieces:
            raise InvalidPartition('a piecewise function needs at least one piece')
        expected = 0
        for iv, _ in pieces:
            if expected is None or iv.lo != expected:
                raise InvalidPartition(f'pieces do not tile Psi: gap or overlap at level {iv.lo}')
            expected = iv.hi
        if expected is not None:
            raise InvalidPartition('last piece must be unbounded')
        self.pieces = pieces

    @classmethod
    def uniform(cls, fn):
        return cls([(WHOLE_PSI, fn)])

    @classmethod
    def from_cuts(cls, cuts):
        """Build from (lo, hi, fn) triples, dropping empty ranges"""
        pieces = []
        for lo, hi, fn in cuts:
            if hi is not None and hi <= lo:
                continue
            pieces.append((PsiInterval(lo, hi), fn))
        return cls(pieces).merge_adjacent()

    def __iter__(self):
        return iter(self.pieces)

    def __len__(self):
        return len(self.pieces)

    def __eq__(self, other):
        if not isinstance(other, PiecewiseSFunction):
            return NotImplemented
        return self.pieces == other.pieces

    def __hash__(self):
        return hash(self.pieces)

    def __repr__(self):
        return f'PiecewiseSFunction({list(self.pieces)!r})'

    def at(self, level):
        """The s-function in force at a level"""
        for iv, fn in self.pieces:
            if level in iv:
                return fn
        raise InvalidPartition(f'no piece covers level {level}')

    def evaluate(self, x):
        level = x.level if isinstance(x, PsiElement) else x
        return eval_sf(self.at(level), level)

    def breakpoints(self):
        return [iv.lo for iv, _ in self.pieces[1:]]

    def restrict(self, interval):
        """Pieces clipped to interval"""
        out = []
        for iv, fn in self.pieces:
            part = iv.intersect(interval)
            if part is not None:
                out.append((part, fn))
        return out

    def refine(self, other):
        """Common refinement as (interval, own fn, other fn) triples"""
        out = []
        for iv, fn in self.pieces:
            for jv, gn in other.pieces:
                part = iv.intersect(jv)
                if part is not None:
                    out.append((part, fn, gn))
        return out

    def merge_adjacent(self):
        merged = []
        for iv, fn in self.pieces:
            if merged and merged[-1][1] == fn:
                prev, _ = merged.pop()
                iv = PsiInterval(prev.lo, iv.hi)
            merged.append((iv, fn))
        if len(merged) != len(self.pieces):
            logger.debug('merged %d pieces into %d', len(self.pieces), len(merged))
        return PiecewiseSFunction(merged)

    def map(self, op):
        """Apply op to every piece; op maps an s-function to an s-function"""
        return PiecewiseSFunction([(iv, op(fn)) for iv, fn in self.pieces]).merge_adjacent()

    def psi_shapes(self):
        """Describe each piece of a Psi-valued function.

        Returns (interval, shape) pairs where shape is ('const', n),
        ('inf', None) or ('shift', l). Raises ValueError when a piece takes
        values outside Psi and infinity.
        """
        shapes = []
        for iv, fn in self.pieces:
            if isinstance(fn, Constant):
                if fn.value is INF:
                    shapes.append((iv, ('inf', None)))
                elif in_psi(fn.value):
                    shapes.append((iv, ('const', psi_level(fn.value))))
                else:
                    raise ValueError(f'{fn.describe()} is not in Psi')
            elif isinstance(fn, Linear) and fn.is_shift and iv.lo >= fn.d_min:
                shapes.append((iv, ('shift', fn.k1)))
            else:
                raise ValueError(f'{fn.describe()} is not Psi-valued on {iv.describe()}')
        return shapes

    def rows(self, psi_names=False):
        return [{'interval': iv.describe(), 'function': fn.describe(psi_names)}
                for iv, fn in self.pieces]

    def to_json(self):
        return [{'interval': iv.to_json(), 'fn': sfunction_to_json(fn)}
                for iv, fn in self.pieces]


def eval_piecewise(pw, x):
    return pw.evaluate(x)


class PsiSubset:
    """A finite union of intervals and points of Psi.

    Stored as maximal disjoint level runs; a run of length one is a point.
    """

    def __init__(self, runs=()):
        self.runs = _normalize(runs)

    @classmethod
    def empty(cls):
        return cls()

    @classmethod
    def everything(cls):
        return cls([WHOLE_PSI])

    @classmethod
    def from_levels(cls, levels):
        return cls([PsiInterval(m, m + 1) for m in levels])

    @property
    def intervals(self):
        return [iv for iv in self.runs if not iv.is_point]

    @property
    def points(self):
        return [PsiElement(iv.lo) for iv in self.runs if iv.is_point]

    @property
    def is_empty(self):
        return not self.runs

    @property
    def is_everything(self):
        return self.runs == (WHOLE_PSI,)

    def __contains__(self, x):
        level = x.level if isinstance(x, PsiElement) else x
        return any(level in iv for iv in self.runs)

    def __eq__(self, other):
        if not isinstance(other, PsiSubset):
            return NotImplemented
        return self.runs == other.runs

    def __hash__(self):
        return hash(self.runs)

    def __repr__(self):
        return f'PsiSubset({self.describe()})'

    def __or__(self, other):
        return PsiSubset(self.runs + other.runs)

    def __and__(self, other):
        out = []
        for iv in self.runs:
            for jv in other.runs:
                part = iv.intersect(jv)
                if part is not None:
                    out.append(part)
        return PsiSubset(out)

    def __invert__(self):
        out = []
        start = 0
        for iv in self.runs:
            if iv.lo > start:
                out.append(PsiInterval(start, iv.lo))
            start = iv.hi
            if start is None:
                break
        if start is not None:
            out.append(PsiInterval(start))
        return PsiSubset(out)

    def last_breakpoint(self):
        """Level from which membership no longer changes"""
        if not self.runs:
            return 0
        last = self.runs[-1]
        return last.lo if last.hi is None else last.hi

    def describe(self, psi_names=True):
        if not self.runs:
            return '{}'
        return ' u '.join(iv.describe(psi_names) for iv in self.runs)

    def to_json(self):
        return {'intervals': [iv.to_json() for iv in self.intervals],
                'points': [p.level for p in self.points]}


def _normalize(runs):
    runs = sorted(runs, key=lambda iv: iv.lo)
    out = []
    for iv in runs:
        if out and (out[-1].hi is None or iv.lo <= out[-1].hi):
            prev = out.pop()
            hi = None if prev.hi is None or iv.hi is None else max(prev.hi, iv.hi)
            iv = PsiInterval(prev.lo, hi)
        out.append(iv)
    return tuple(out)
