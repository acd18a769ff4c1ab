"""Seeded generators and executable property suites.

Every suite draws from its own random stream, derived from the seed and
the suite name, so suites can run alone or together in any order with
identical results.  The three table suites share one stream of functions.
"""
import functools
import logging
import os
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

from logcouple.couple import (S0, PsiElement, chi, in_derivatives_of_negatives,
                              in_derivatives_of_positives, in_psi, integral,
                              pred, prime, psi, psi_element, psi_level, succ)
from logcouple.eventual import (PSI_DIFFERENCE_FORMULA, PSI_FORMULA,
                                eventual_form, eventual_truth,
                                psi_difference_members)
from logcouple.exceptions import UnknownSuite
from logcouple.normalize import solve, stability_bound, term_to_piecewise
from logcouple.piecewise import PsiSubset, sfunction_to_json
from logcouple.sfunction import Linear, eval_sf, hits_psi, image_in_psi
from logcouple.tables import compose_p, compose_psi, compose_s
from logcouple.terms import (Add, And, Atom, Condition, Const, Delta, Infty,
                             Neg, Not, Or, P, Psi, S, Term, Var, Zero,
                             eval_condition, evaluate, format_node, from_json,
                             parse, to_json)
from logcouple.vector import (INF, ZERO, LogVector, Ordering, abs_value, add,
                              arch_class, arch_compare, format_rational,
                              format_vector, from_psi_basis, negate,
                              same_arch_class_by_multiples, scale,
                              to_psi_basis)

logger = logging.getLogger(__name__)

SMALL_RATIONALS = [Fraction(1), Fraction(-1), Fraction(2), Fraction(-2),
                   Fraction(1, 2), Fraction(-1, 2), Fraction(3), Fraction(0)]
AC2_SCALARS = [r for r in range(-5, 6) if r != 0]
CHAIN_LENGTH = 50
T0_LEVELS = 100
TABLE_STREAM = 'tables'


def _env_int(name, default):
    value = os.environ.get(name)
    return default if value is None else int(value)


@dataclass(frozen=True)
class GenConfig:
    seed: int = 42
    max_support: int = 8
    max_numerator: int = 100
    max_denominator: int = 20
    samples: int = 10000
    max_level: int = 40

    @classmethod
    def from_env(cls, **overrides):
        values = {
            'seed': _env_int('LOGCOUPLE_SEED', 42),
            'samples': _env_int('LOGCOUPLE_SAMPLES', 10000),
            'max_level': _env_int('LOGCOUPLE_MAX_LEVEL', 40),
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    @property
    def heavy_samples(self):
        """Sample count for suites that normalize or scan every case"""
        return max(1, self.samples // 10)


class Sampler:
    """Deterministic sample stream for one config and stream name"""

    def __init__(self, cfg, stream=''):
        self.cfg = cfg
        self.rng = random.Random(f'{cfg.seed}:{stream}')

    def rational(self, nonzero=False):
        while True:
            if self.rng.random() < 0.4:
                value = self.rng.choice(SMALL_RATIONALS)
            else:
                value = Fraction(self.rng.randint(-self.cfg.max_numerator, self.cfg.max_numerator),
                                 self.rng.randint(1, self.cfg.max_denominator))
            if value != 0 or not nonzero:
                return value

    def sparse(self, start, size):
        indices = self.rng.sample(range(start, start + 2 * self.cfg.max_support), size)
        return LogVector({i: self.rational(nonzero=True) for i in indices})

    def vector(self):
        roll = self.rng.random()
        if roll < 0.1:
            return ZERO
        if roll < 0.4:
            # a run of ones up front makes integral and s nontrivial
            n = self.rng.randint(0, self.cfg.max_support - 1)
            size = self.rng.randint(0, min(3, self.cfg.max_support - n - 1))
            return psi_element(n) + self.sparse(n + 1, size)
        return self.sparse(0, self.rng.randint(1, self.cfg.max_support))

    def nonzero_vector(self):
        while True:
            v = self.vector()
            if not v.is_zero:
                return v

    def positive_vector(self):
        return abs_value(self.nonzero_vector())

    def level(self, top=None):
        return self.rng.randint(0, self.cfg.max_level if top is None else top)

    def psi_element(self):
        return PsiElement(self.level())

    def small_vector(self):
        """Constants for terms: psi-elements and short vectors near them"""
        roll = self.rng.random()
        if roll < 0.4:
            return psi_element(self.rng.randint(0, 4))
        size = self.rng.randint(1, 3)
        indices = self.rng.sample(range(6), size)
        return LogVector({i: self.rng.choice(SMALL_RATIONALS[:-1]) for i in indices})

    def leaf(self):
        roll = self.rng.random()
        if roll < 0.45:
            return Var()
        if roll < 0.8:
            return Const(self.small_vector())
        if roll < 0.93:
            return Zero()
        return Infty()

    def term(self, depth):
        if depth <= 0 or self.rng.random() < 0.25:
            return self.leaf()
        roll = self.rng.random()
        if roll < 0.3:
            return Add(self.term(depth - 1), self.term(depth - 1))
        if roll < 0.4:
            return Neg(self.term(depth - 1))
        if roll < 0.55:
            return Psi(self.term(depth - 1))
        if roll < 0.7:
            return S(self.term(depth - 1))
        if roll < 0.85:
            return P(self.term(depth - 1))
        return Delta(self.rng.randint(1, 4), self.term(depth - 1))

    def condition(self, n_atoms, depth=4):
        if n_atoms <= 1:
            atom = Atom(self.term(depth), self.rng.choice('<=>'), self.term(depth))
            return Not(atom) if self.rng.random() < 0.2 else atom
        left = self.rng.randint(1, n_atoms - 1)
        cls = And if self.rng.random() < 0.5 else Or
        return cls(self.condition(left, depth), self.condition(n_atoms - left, depth))

    def sfunction(self):
        n = self.rng.randint(1, 4)
        ks = sorted(self.rng.sample(range(-3, 5), n))
        qs = [self.rng.choice([Fraction(1), Fraction(-1)]) if self.rng.random() < 0.5
              else self.rational(nonzero=True) for _ in ks]
        if n > 1 and self.rng.random() < 0.4:
            # land on the special coefficient sums 0 and 1
            last = self.rng.choice([0, 1]) - sum(qs[:-1])
            if last != 0:
                qs[-1] = last
        return Linear(tuple(zip(ks, qs)), self._beta())

    def _beta(self):
        roll = self.rng.random()
        if roll < 0.25:
            return ZERO
        if roll < 0.5:
            levels = self.rng.sample(range(8), self.rng.randint(1, 3))
            return from_psi_basis({m: self.rng.choice(SMALL_RATIONALS[:-1]) for m in levels})
        if roll < 0.75:
            return self.small_vector()
        return self.nonzero_vector()


def gen_vector(cfg):
    return Sampler(cfg).vector()


def gen_psi_element(cfg):
    return Sampler(cfg).psi_element()


def gen_term(cfg, depth):
    return Sampler(cfg).term(depth)


def gen_sfunction(cfg):
    return Sampler(cfg).sfunction()


def _show(value):
    if value is INF or isinstance(value, LogVector):
        return format_vector(value)
    if isinstance(value, (Term, Condition)):
        return format_node(value)
    if isinstance(value, Linear):
        return sfunction_to_json(value)
    if isinstance(value, PsiElement):
        return value.level
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (list, tuple)):
        return [_show(v) for v in value]
    return value


@dataclass
class SuiteReport:
    name: str
    cases: int
    failures: List[dict] = field(default_factory=list)
    elapsed: float = 0.0
    seed: Optional[int] = None

    @property
    def passed(self):
        return not self.failures

    def to_dict(self, timings=False):
        out = {'suite': self.name, 'seed': self.seed, 'cases': self.cases,
               'failed': len(self.failures), 'failures': self.failures}
        if timings:
            out['elapsed'] = round(self.elapsed, 3)
        return out


class _Tally:
    def __init__(self, name, cfg):
        self.name = name
        self.cfg = cfg
        self.sample = Sampler(cfg, name)
        self.cases = 0
        self.failures = []
        self.started = time.perf_counter()

    def check(self, ok, **inputs):
        self.cases += 1
        if not ok:
            failure = {k: _show(v) for k, v in inputs.items()}
            logger.warning('%s: counterexample %s', self.name, failure)
            self.failures.append(failure)

    def report(self):
        return SuiteReport(self.name, self.cases, self.failures,
                           time.perf_counter() - self.started, self.cfg.seed)


SUITES = {}


def suite(name):
    def register(func):
        SUITES[name] = func
        return func
    return register


@suite('ordered-group')
def _ordered_group(t):
    for _ in range(t.cfg.samples):
        a, b, c = t.sample.vector(), t.sample.vector(), t.sample.vector()
        ok = ((a + b) + c == a + (b + c) and a + b == b + a
              and a + (-a) == ZERO and LogVector(a.as_dict()) == a)
        if a < b:
            ok = ok and a + c < b + c
        t.check(ok, a=a, b=b, c=c)


@suite('psi-basis')
def _psi_basis(t):
    for _ in range(t.cfg.samples):
        a = t.sample.vector()
        t.check(from_psi_basis(to_psi_basis(a)) == a, a=a)


@suite('arch-class')
def _arch_class(t):
    for _ in range(t.cfg.samples):
        a, b = t.sample.nonzero_vector(), t.sample.nonzero_vector()
        ok = same_arch_class_by_multiples(a, b) == (arch_class(a) == arch_class(b))
        if arch_compare(a, b) == Ordering.LESS:
            # n|a| grows with n, so n = 1000 covers every n up to 1000
            ok = ok and abs_value(a) * 1000 < abs_value(b)
        t.check(ok, a=a, b=b)


@suite('AC1')
def _ac1(t):
    for _ in range(t.cfg.samples):
        a, b = t.sample.nonzero_vector(), t.sample.nonzero_vector()
        t.check(psi(a + b) >= min(psi(a), psi(b)), a=a, b=b)


@suite('AC2')
def _ac2(t):
    for _ in range(t.cfg.samples):
        a = t.sample.nonzero_vector()
        r = t.sample.rng.choice(AC2_SCALARS)
        t.check(psi(a * r) == psi(a), a=a, r=r)


@suite('AC3')
def _ac3(t):
    for _ in range(t.cfg.samples):
        a, b = t.sample.positive_vector(), t.sample.nonzero_vector()
        t.check(a + psi(a) > psi(b), a=a, b=b)


@suite('HC')
def _hc(t):
    for _ in range(t.cfg.samples):
        a, b = sorted([t.sample.positive_vector(), t.sample.positive_vector()])
        t.check(psi(a) >= psi(b), a=a, b=b)


@suite('T0')
def _t0(t):
    t.check(S0 > ZERO and S0 == psi_element(0), s0=S0)
    for n in range(T0_LEVELS + 1):
        nxt = succ(psi_element(n))
        ok = (nxt == psi_element(n + 1) and pred(nxt) == psi_element(n)
              and psi_element(n) < nxt and psi_level(nxt) == n + 1)
        t.check(ok, n=n)
    t.check(pred(S0) is INF, s0=S0)
    for _ in range(t.cfg.samples):
        a = t.sample.nonzero_vector()
        m, n = sorted([t.sample.level(), t.sample.level()])
        ok = psi(a) >= S0 and in_psi(psi(a))
        if m < n:
            ok = ok and succ(psi_element(m)) < succ(psi_element(n))
        t.check(ok, a=a, m=m, n=n)


@suite('integral-identity')
def _integral_identity(t):
    for _ in range(t.cfg.samples):
        a = t.sample.vector()
        t.check(integral(a) == a - succ(a), a=a)


@suite('asymptotic-integration')
def _asymptotic_integration(t):
    for _ in range(t.cfg.samples):
        a, b = t.sample.vector(), t.sample.nonzero_vector()
        ok = not integral(a).is_zero and prime(integral(a)) == a and integral(prime(b)) == b
        t.check(ok, a=a, b=b)


@suite('fixed-point')
def _fixed_point(t):
    for _ in range(t.cfg.samples):
        a = t.sample.vector()
        s = succ(a)
        ok = psi(a - s) == s
        n = psi_level(s)
        for level in range(max(0, n - 2), n + 3):
            beta = psi_element(level)
            if psi(a - beta) == beta:
                ok = ok and beta == s
        other = t.sample.nonzero_vector()
        if psi(a - other) == other:
            ok = ok and other == s
        t.check(ok, a=a, other=other)


@suite('successor-identity')
def _successor_identity(t):
    for _ in range(t.cfg.samples):
        a, b = t.sample.vector(), t.sample.vector()
        if succ(b) < succ(a):
            a, b = b, a
        if succ(a) == succ(b):
            # a longer leading run of ones gives b the larger successor
            n = psi_level(succ(a)) + t.sample.rng.randint(0, 3)
            b = psi_element(n) + t.sample.sparse(n + 1, t.sample.rng.randint(0, 2))
        t.check(succ(a) < succ(b) and psi(b - a) == succ(a), a=a, b=b)


@suite('limit-lemma')
def _limit_lemma(t):
    mesh = [Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(1)]
    for _ in range(t.cfg.samples):
        a = t.sample.vector()
        low = succ(succ(a))
        high = low - integral(succ(a))
        n = psi_level(low)
        step = t.sample.rng.choice(mesh)
        tail = t.sample.sparse(n + 1, t.sample.rng.randint(0, 2))
        if step == 0:
            tail = abs_value(tail)
        elif step == 1:
            tail = -abs_value(tail)
        gamma = low + (high - low) * step + tail
        ok = low <= gamma <= high and psi(gamma - a) == succ(a)
        t.check(ok, a=a, gamma=gamma)


@suite('s0-lemma')
def _s0_lemma(t):
    t.check(psi(S0) == S0, a=S0)
    for _ in range(t.cfg.samples):
        if t.sample.rng.random() < 0.2:
            a = psi_element(t.sample.rng.randint(1, t.cfg.max_level))
        else:
            a = t.sample.nonzero_vector()
            while a == S0:
                a = t.sample.nonzero_vector()
        t.check(psi(a) != a, a=a)


@suite('successor-increasing')
def _successor_increasing(t):
    for _ in range(t.cfg.samples):
        a = t.sample.vector()
        ok = True
        if in_derivatives_of_negatives(a):
            ok = a < succ(a)
        elif in_derivatives_of_positives(a):
            ok = a > succ(a)
        t.check(ok, a=a)


@suite('s-monotone')
def _s_monotone(t):
    for _ in range(t.cfg.samples):
        a, b = sorted([t.sample.vector(), t.sample.vector()])
        ok = True
        if in_derivatives_of_negatives(a) and in_derivatives_of_negatives(b):
            ok = succ(a) <= succ(b)
        elif in_derivatives_of_positives(a) and in_derivatives_of_positives(b):
            ok = succ(a) >= succ(b)
        t.check(ok, a=a, b=b)


def _combination(t, target_sum=None):
    n = t.sample.rng.randint(1, 5)
    levels = sorted(t.sample.rng.sample(range(max(t.cfg.max_level, 6)), n))
    qs = [t.sample.rational(nonzero=True) for _ in levels]
    if target_sum is not None and n > 1 and t.sample.rng.random() < 0.5:
        last = target_sum - sum(qs[:-1])
        if last != 0:
            qs[-1] = last
    value = ZERO
    for m, q in zip(levels, qs):
        value = value + psi_element(m) * q
    return levels, qs, value


@suite('coefficient-sum-psi')
def _coefficient_sum_psi(t):
    for _ in range(t.cfg.samples):
        levels, qs, value = _combination(t, target_sum=0)
        expected = psi_element(levels[0] + 1) if sum(qs) == 0 else S0
        t.check(psi(value) == expected, levels=levels, qs=qs)


@suite('coefficient-sum-s')
def _coefficient_sum_s(t):
    for _ in range(t.cfg.samples):
        levels, qs, value = _combination(t, target_sum=1)
        expected = succ(psi_element(levels[0])) if sum(qs) == 1 else S0
        t.check(succ(value) == expected, levels=levels, qs=qs)


@suite('psi-independence')
def _psi_independence(t):
    for _ in range(t.cfg.samples):
        levels, qs, value = _combination(t)
        t.check(not value.is_zero, levels=levels, qs=qs)


@suite('injectivity')
def _injectivity(t):
    for _ in range(t.cfg.heavy_samples):
        fn = t.sample.sfunction()
        values = [eval_sf(fn, m) for m in range(fn.d_min, 31)]
        t.check(len(set(values)) == len(values), fn=fn)


@functools.lru_cache(maxsize=1 << 16)
def _table_value(fn, m):
    return eval_sf(fn, m)


def _table_suite(t, table, outer):
    # the three table suites share one function stream and its cached values
    functions = Sampler(t.cfg, TABLE_STREAM)
    for _ in range(t.cfg.heavy_samples):
        fn = functions.sfunction()
        pw = table(fn)
        bad = [m for m in range(31)
               if _table_value(pw.at(m), m) != outer(_table_value(fn, m))]
        t.check(not bad, fn=fn, levels=bad)


@suite('table-psi')
def _table_psi(t):
    _table_suite(t, compose_psi, psi)


@suite('table-s')
def _table_s(t):
    _table_suite(t, compose_s, succ)


@suite('table-p')
def _table_p(t):
    _table_suite(t, compose_p, pred)


@suite('image-in-psi')
def _image_in_psi(t):
    for _ in range(t.cfg.heavy_samples):
        fn = t.sample.sfunction()
        image = image_in_psi(fn)
        coeffs = to_psi_basis(fn.beta)
        scanned = [m for m in range(51)
                   if hits_psi(fn, m, coeffs) and in_psi(eval_sf(fn, m))]
        if image.all_psi:
            ok = scanned == list(range(fn.d_min, 51))
        else:
            ok = [p.level for p in image.points if p.level <= 50] == scanned
        t.check(ok, fn=fn)


@suite('piecewise-oracle')
def _piecewise_oracle(t):
    for _ in range(t.cfg.heavy_samples):
        term = t.sample.term(6)
        pw = term_to_piecewise(term)
        bad = [m for m in range(t.cfg.max_level + 1)
               if pw.evaluate(m) != evaluate(term, psi_element(m))]
        t.check(not bad, term=term, levels=bad)


def _is_normalized(subset):
    runs = subset.runs
    for a, b in zip(runs, runs[1:]):
        if a.hi is None or a.hi >= b.lo:
            return False
    return True


@suite('solve-oracle')
def _solve_oracle(t):
    for i in range(t.cfg.heavy_samples):
        cond = t.sample.condition(1 if i % 2 == 0 else 3)
        subset = solve(cond)
        top = max(2 * stability_bound(cond), 10)
        bad = [m for m in range(top + 1)
               if (m in subset) != eval_condition(cond, psi_element(m))]
        t.check(not bad and _is_normalized(subset), cond=cond, levels=bad)


def _far_points(t, bound):
    """Ten arguments beyond bound * e_0"""
    base = bound + 1
    points = [LogVector({0: base}), LogVector({0: base}) - LogVector({5: 1})]
    for big in (10 ** 3, 10 ** 6):
        points.append(LogVector({0: max(big, base)}))
    while len(points) < 10:
        head = base + t.sample.rng.randint(0, 1000)
        points.append(LogVector({0: head}) + t.sample.sparse(1, t.sample.rng.randint(0, 3)))
    return points


@suite('eventual-oracle')
def _eventual_oracle(t):
    for _ in range(t.cfg.heavy_samples):
        term = t.sample.term(6)
        form = eventual_form(term)
        bad = [g for g in _far_points(t, form.bound)
               if evaluate(term, g) != form.evaluate(g)]
        t.check(not bad, term=term, points=bad)


@suite('eventual-truth')
def _eventual_truth(t):
    for i in range(t.cfg.heavy_samples):
        cond = t.sample.condition(1 if i % 2 == 0 else 3)
        truth = eventual_truth(cond)
        bad = [g for g in _far_points(t, truth.bound)
               if eval_condition(cond, g) != truth.holds]
        t.check(not bad, cond=cond, points=bad)


@suite('qf-psi')
def _qf_psi(t):
    cond = parse(PSI_FORMULA)
    t.check(solve(cond) == PsiSubset.everything(), cond=cond)
    for _ in range(t.cfg.heavy_samples):
        a = t.sample.vector()
        t.check(eval_condition(cond, a) == in_psi(a), a=a)
        x = t.sample.psi_element().value
        t.check(eval_condition(cond, x), a=x)


def is_psi_difference(x):
    """x = psi_b - psi_a for some a < b: a block of ones starting past 0"""
    items = x.items
    if not items or items[0][0] == 0:
        return False
    lead = items[0][0]
    return all(i == lead + j and v == 1 for j, (i, v) in enumerate(items))


@suite('psi-difference')
def _psi_difference(t):
    cond = parse(PSI_DIFFERENCE_FORMULA)
    t.check(solve(cond).is_empty, cond=cond)
    for _ in range(t.cfg.heavy_samples):
        lo, hi = sorted(t.sample.rng.sample(range(t.cfg.max_level + 1), 2))
        member = psi_element(hi) - psi_element(lo)
        t.check(eval_condition(cond, member), a=member)
        if t.sample.rng.random() < 0.5:
            other = member + LogVector({t.sample.rng.randint(0, hi + 2): t.sample.rational(True)})
        else:
            other = t.sample.positive_vector()
        if not is_psi_difference(other):
            t.check(not eval_condition(cond, other), a=other)
    witnesses = psi_difference_members(t.cfg.max_level)
    ok = all(eval_condition(cond, w) for w in witnesses)
    ok = ok and all(ZERO < w < v and arch_compare(w, v) == Ordering.LESS
                    for v, w in zip(witnesses, witnesses[1:]))
    t.check(ok, witnesses=witnesses[:3])


CLOSURE_OPS = ['add', 'neg', 'psi', 's', 'p', 'delta']


def _extend(t, op, left, right, values):
    """Composite term and the value the operation gives on its parts"""
    a, b = values[left], values[right]
    if op == 'add':
        return Add(left, right), add(a, b)
    if op == 'neg':
        return Neg(left), negate(a)
    if op == 'psi':
        return Psi(left), psi(a)
    if op == 's':
        return S(left), succ(a)
    if op == 'p':
        return P(left), pred(a)
    n = t.sample.rng.randint(1, 4)
    return Delta(n, left), scale(Fraction(1, n), a)


@suite('substructure-closure')
def _substructure_closure(t):
    for _ in range(t.cfg.heavy_samples):
        pool = [Const(t.sample.small_vector()) for _ in range(3)]
        values = {term: term.value for term in pool}
        for _ in range(6):
            op = t.sample.rng.choice(CLOSURE_OPS)
            left, right = t.sample.rng.choice(pool), t.sample.rng.choice(pool)
            term, expected = _extend(t, op, left, right, values)
            t.check(evaluate(term, ZERO) == expected, term=term)
            pool.append(term)
            values[term] = expected


def _canonical(value):
    if value is INF:
        return True
    return isinstance(value, LogVector) and all(v != 0 for _, v in value.items)


@suite('term-totality')
def _term_totality(t):
    for _ in range(t.cfg.heavy_samples):
        term = t.sample.term(8)
        roll = t.sample.rng.random()
        x = INF if roll < 0.1 else ZERO if roll < 0.2 else t.sample.vector()
        try:
            ok = _canonical(evaluate(term, x))
        except Exception:
            logger.exception('evaluation raised')
            ok = False
        t.check(ok, term=term, x=x)


@suite('print-parse')
def _print_parse(t):
    for i in range(t.cfg.heavy_samples):
        node = t.sample.term(6) if i % 2 == 0 else t.sample.condition(3)
        text = format_node(node)
        again = parse(text)
        ok = again == node and format_node(again) == text and from_json(to_json(node)) == node
        t.check(ok, node=node)


@dataclass(frozen=True)
class ClosureLink:
    """One step beta_k -> (beta_(k+1), alpha_(k+1)) with its checks"""

    k: int
    beta: LogVector
    beta_next: LogVector
    alpha_next: LogVector
    s_ok: bool
    integral_ok: bool
    psi_ok: bool
    chi_ok: Optional[bool]

    @property
    def ok(self):
        return self.s_ok and self.integral_ok and self.psi_ok and self.chi_ok is not False

    def to_dict(self, psi_names=False):
        return {'k': self.k,
                'beta': format_vector(self.beta, psi_names),
                'beta_next': format_vector(self.beta_next, psi_names),
                'alpha_next': format_vector(self.alpha_next, psi_names),
                's': self.s_ok, 'integral': self.integral_ok,
                'psi': self.psi_ok, 'chi': self.chi_ok}


def closure_chain(n_max):
    """Walk beta_0 = e_0, beta_(k+1) = s(beta_k), alpha_(k+1) = integral(beta_k).

    Expected: beta_k = psi_k and alpha_(k+1) = -e_(k+1), with
    psi(alpha_k) = beta_k and chi(alpha_k) = alpha_(k+1).
    """
    if n_max < 1:
        raise ValueError(f'chain needs at least one step, got {n_max}')
    links = []
    beta = LogVector.unit(0)
    alpha = None
    for k in range(n_max):
        beta_next = succ(beta)
        alpha_next = integral(beta)
        s_ok = beta == psi_element(k) and beta_next == psi_element(k + 1)
        integral_ok = alpha_next == LogVector.unit(k + 1, -1)
        psi_ok = psi(alpha_next) == beta_next
        chi_ok = None if alpha is None else chi(alpha) == alpha_next
        links.append(ClosureLink(k, beta, beta_next, alpha_next,
                                 s_ok, integral_ok, psi_ok, chi_ok))
        beta, alpha = beta_next, alpha_next
    return links


@suite('closure-chain')
def _closure_chain(t):
    for link in closure_chain(CHAIN_LENGTH):
        t.check(link.ok, k=link.k)


def run_suite(name, cfg=None):
    """Run one suite, or every suite as a single combined report for 'all'"""
    cfg = cfg or GenConfig()
    if name == 'all':
        reports = run_suites(list(SUITES), cfg)
        failures = [dict(failure, suite=r.name) for r in reports for failure in r.failures]
        return SuiteReport('all', sum(r.cases for r in reports), failures,
                           sum(r.elapsed for r in reports), cfg.seed)
    if name not in SUITES:
        raise UnknownSuite(f'unknown suite {name!r}; known: {", ".join(SUITES)}, all')
    tally = _Tally(name, cfg)
    SUITES[name](tally)
    report = tally.report()
    logger.debug('%s: %d cases, %d failures in %.2fs', name, report.cases,
                 len(report.failures), report.elapsed)
    return report


def run_suites(names, cfg=None):
    cfg = cfg or GenConfig()
    if 'all' in names:
        names = list(SUITES)
    return [run_suite(name, cfg) for name in names]
