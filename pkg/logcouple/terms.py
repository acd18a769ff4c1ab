"""Terms and quantifier-free conditions in one free variable x"""
import functools
import logging
import os
import re
from dataclasses import dataclass
from fractions import Fraction

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedInput, VisitError

from logcouple.couple import pred, psi, psi_element, succ
from logcouple.exceptions import (ArityError, InvalidLiteral, TermSyntaxError,
                                  UnknownSymbol)
from logcouple.vector import (INF, ZERO, LogVector, Ordering, add, compare,
                              format_vector, negate, parse_rational,
                              parse_vector, scale)

logger = logging.getLogger(__name__)

RELATIONS = {'<': Ordering.LESS, '=': Ordering.EQUAL, '>': Ordering.GREATER}
UNARY_FUNCS = ['psi', 's', 'p']
DELTA_PATTERN = r"^d([1-9][0-9]*)$"
PSI_NAME_PATTERN = r"^psi_([0-9]+)$"


class Term:
    """Base class of term nodes"""


class Condition:
    """Base class of condition nodes"""


@dataclass(frozen=True)
class Zero(Term):
    pass


@dataclass(frozen=True)
class Infty(Term):
    pass


@dataclass(frozen=True)
class Var(Term):
    pass


@dataclass(frozen=True)
class Const(Term):
    value: LogVector


@dataclass(frozen=True)
class Add(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Neg(Term):
    arg: Term


@dataclass(frozen=True)
class Psi(Term):
    arg: Term


@dataclass(frozen=True)
class S(Term):
    arg: Term


@dataclass(frozen=True)
class P(Term):
    arg: Term


@dataclass(frozen=True)
class Delta(Term):
    n: int
    arg: Term

    def __post_init__(self):
        if self.n < 1:
            raise ArityError(f'd{self.n}: division needs a positive integer')


@dataclass(frozen=True)
class Atom(Condition):
    lhs: Term
    rel: str
    rhs: Term

    def __post_init__(self):
        if self.rel not in RELATIONS:
            raise UnknownSymbol(self.rel)


@dataclass(frozen=True)
class And(Condition):
    left: Condition
    right: Condition


@dataclass(frozen=True)
class Or(Condition):
    left: Condition
    right: Condition


@dataclass(frozen=True)
class Not(Condition):
    arg: Condition


UNARY_NODES = (Neg, Psi, S, P, Delta)
LEAF_NODES = (Zero, Infty, Var, Const)


def sub(left, right):
    """left - right, which is sugar for left + -(right)"""
    return Add(left, Neg(right))


def get_grammar():
    pth = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                       "terms.lark")
    with open(pth, "r") as fp:
        return fp.read()


@functools.lru_cache(maxsize=1)
def _parser():
    return Lark(get_grammar(), parser="lalr")


def parse(text):
    """Parse a term or a condition"""
    try:
        tree = _parser().parse(text)
    except UnexpectedInput as e:
        pos = getattr(e, 'pos_in_stream', None)
        if pos is None or pos < 0:
            pos = len(text)
        raise TermSyntaxError(str(e).strip().splitlines()[0], pos) from e
    try:
        return _BuildTree().transform(tree)
    except VisitError as e:
        raise e.orig_exc from None


def parse_term(text):
    node = parse(text)
    if not isinstance(node, Term):
        raise TermSyntaxError('expected a term, got a condition')
    return node


def parse_condition(text):
    node = parse(text)
    if not isinstance(node, Condition):
        raise TermSyntaxError('expected a condition, got a term')
    return node


@v_args(inline=True)
class _BuildTree(Transformer):
    """Transformer from the parse tree to Term and Condition nodes"""

    def start(self, node):
        return node

    def number(self, tok):
        if parse_rational(tok) != 0:
            raise TermSyntaxError(f'bare number {tok} is not a term; write a vector literal',
                                  tok.start_pos)
        return Zero()

    def name(self, tok):
        name = str(tok)
        if name == 'x':
            return Var()
        if name == 'inf':
            return Infty()
        m = re.match(PSI_NAME_PATTERN, name)
        if m:
            return Const(psi_element(int(m.group(1))))
        if name in UNARY_FUNCS or re.match(DELTA_PATTERN, name):
            raise ArityError(f'{name} takes one argument')
        raise UnknownSymbol(name)

    def call(self, tok, arg):
        name = str(tok)
        if name == 'psi':
            return Psi(arg)
        if name == 's':
            return S(arg)
        if name == 'p':
            return P(arg)
        m = re.match(DELTA_PATTERN, name)
        if m:
            return Delta(int(m.group(1)), arg)
        if name in ('x', 'inf') or re.match(PSI_NAME_PATTERN, name):
            raise ArityError(f'{name} takes no argument')
        raise UnknownSymbol(name)

    def neg(self, arg):
        return Neg(arg)

    def addop(self, tok):
        return str(tok)

    def sum(self, first, *rest):
        items = [first]
        for op, term in zip(rest[::2], rest[1::2]):
            items.append(term if op == '+' else Neg(term))
        result = items[-1]
        for item in reversed(items[:-1]):
            result = Add(item, result)
        return result

    def rational(self, tok):
        try:
            return parse_rational(tok)
        except InvalidLiteral as e:
            raise TermSyntaxError(str(e), tok.start_pos) from e

    def vector(self, *coords):
        return Const(LogVector(list(coords)))

    def comparison(self, lhs, rel, rhs):
        return Atom(lhs, str(rel), rhs)

    def and_(self, lhs, rhs):
        return And(lhs, rhs)

    def or_(self, lhs, rhs):
        return Or(lhs, rhs)

    def not_(self, arg):
        return Not(arg)


def evaluate(term, x):
    """Evaluate term at x; every operation is total through infinity"""
    if isinstance(term, Zero):
        return ZERO
    if isinstance(term, Infty):
        return INF
    if isinstance(term, Var):
        return x
    if isinstance(term, Const):
        return term.value
    if isinstance(term, Add):
        return add(evaluate(term.left, x), evaluate(term.right, x))
    if isinstance(term, Neg):
        return negate(evaluate(term.arg, x))
    if isinstance(term, Psi):
        return psi(evaluate(term.arg, x))
    if isinstance(term, S):
        return succ(evaluate(term.arg, x))
    if isinstance(term, P):
        return pred(evaluate(term.arg, x))
    if isinstance(term, Delta):
        return scale(Fraction(1, term.n), evaluate(term.arg, x))
    raise TypeError(f'not a term: {term!r}')


def eval_condition(cond, x):
    if isinstance(cond, Atom):
        order = compare(evaluate(cond.lhs, x), evaluate(cond.rhs, x))
        return order == RELATIONS[cond.rel]
    if isinstance(cond, And):
        return eval_condition(cond.left, x) and eval_condition(cond.right, x)
    if isinstance(cond, Or):
        return eval_condition(cond.left, x) or eval_condition(cond.right, x)
    if isinstance(cond, Not):
        return not eval_condition(cond.arg, x)
    raise TypeError(f'not a condition: {cond!r}')


def _format_operand(term):
    if isinstance(term, Add):
        return f'({format_term(term)})'
    return format_term(term)


def format_term(term):
    """Canonical text; parse(format_term(t)) == t"""
    if isinstance(term, Zero):
        return '0'
    if isinstance(term, Infty):
        return 'inf'
    if isinstance(term, Var):
        return 'x'
    if isinstance(term, Const):
        return format_vector(term.value)
    if isinstance(term, Add):
        # sums print along their right spine, which is how they parse
        parts = [_format_operand(term.left)]
        rest = term.right
        while isinstance(rest, Add):
            parts.append(_format_summand(rest.left))
            rest = rest.right
        parts.append(_format_summand(rest))
        return ''.join(parts)
    if isinstance(term, Neg):
        return f'-({format_term(term.arg)})'
    if isinstance(term, Psi):
        return f'psi({format_term(term.arg)})'
    if isinstance(term, S):
        return f's({format_term(term.arg)})'
    if isinstance(term, P):
        return f'p({format_term(term.arg)})'
    if isinstance(term, Delta):
        return f'd{term.n}({format_term(term.arg)})'
    raise TypeError(f'not a term: {term!r}')


def _format_summand(term):
    if isinstance(term, Neg):
        return f' - {_format_operand(term.arg)}'
    return f' + {_format_operand(term)}'


def format_condition(cond):
    if isinstance(cond, Atom):
        return f'{format_term(cond.lhs)} {cond.rel} {format_term(cond.rhs)}'
    if isinstance(cond, And):
        left = _group(cond.left, Or)
        right = _group(cond.right, (And, Or))
        return f'{left} & {right}'
    if isinstance(cond, Or):
        return f'{format_condition(cond.left)} | {_group(cond.right, Or)}'
    if isinstance(cond, Not):
        return f'!{_group(cond.arg, (And, Or))}'
    raise TypeError(f'not a condition: {cond!r}')


def _group(cond, kinds):
    text = format_condition(cond)
    return f'({text})' if isinstance(cond, kinds) else text


def format_node(node):
    if isinstance(node, Condition):
        return format_condition(node)
    return format_term(node)


def to_json(node):
    """JSON tree with node tags equal to the class names"""
    tag = type(node).__name__
    if isinstance(node, Const):
        return {'tag': tag, 'value': format_vector(node.value)}
    if isinstance(node, Delta):
        return {'tag': tag, 'n': node.n, 'args': [to_json(node.arg)]}
    if isinstance(node, Atom):
        return {'tag': tag, 'rel': node.rel,
                'args': [to_json(node.lhs), to_json(node.rhs)]}
    if isinstance(node, (Add, And, Or)):
        return {'tag': tag, 'args': [to_json(node.left), to_json(node.right)]}
    if isinstance(node, (Neg, Psi, S, P, Not)):
        return {'tag': tag, 'args': [to_json(node.arg)]}
    if isinstance(node, LEAF_NODES):
        return {'tag': tag}
    raise TypeError(f'not a term or condition: {node!r}')


_TAGS = {cls.__name__: cls for cls in
         (Zero, Infty, Var, Const, Add, Neg, Psi, S, P, Delta, Atom, And, Or, Not)}


def from_json(tree):
    tag = tree.get('tag')
    if tag not in _TAGS:
        raise UnknownSymbol(f'unknown node tag {tag!r}')
    cls = _TAGS[tag]
    args = [from_json(arg) for arg in tree.get('args', [])]
    if cls is Const:
        value = parse_vector(tree['value'])
        if value is INF:
            raise InvalidLiteral(tree['value'])
        return Const(value)
    if cls is Delta:
        return Delta(int(tree['n']), *args)
    if cls is Atom:
        return Atom(args[0], tree['rel'], args[1])
    return cls(*args)


def depth(term):
    if isinstance(term, LEAF_NODES):
        return 0
    if isinstance(term, Add):
        return 1 + max(depth(term.left), depth(term.right))
    return 1 + depth(term.arg)


def has_free_variable(term):
    if isinstance(term, Var):
        return True
    if isinstance(term, LEAF_NODES):
        return False
    if isinstance(term, Add):
        return has_free_variable(term.left) or has_free_variable(term.right)
    return has_free_variable(term.arg)


def atoms(cond):
    """Atoms of a condition, left to right"""
    if isinstance(cond, Atom):
        return [cond]
    if isinstance(cond, Not):
        return atoms(cond.arg)
    return atoms(cond.left) + atoms(cond.right)
