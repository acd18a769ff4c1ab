"""Exact ordered-group arithmetic on finitely supported rational vectors"""
import functools
import re
from enum import Enum
from fractions import Fraction

from logcouple.exceptions import InvalidLiteral

RATIONAL_PATTERN = r"^[+-]?\d+(/\d+)?$"


class Ordering(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def from_sign(cls, sign):
        if sign < 0:
            return cls.LESS
        if sign > 0:
            return cls.GREATER
        return cls.EQUAL

    def flip(self):
        return Ordering(-self.value)


class _Infinity:
    """The point at infinity: above every vector and absorbing under +"""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return 'INF'

    def __str__(self):
        return 'inf'

    def __hash__(self):
        return hash('logcouple.INF')

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __neg__(self):
        return self

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def _to_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise InvalidLiteral(str(value))
    return Fraction(value)


@functools.total_ordering
class LogVector:
    """Element of the direct sum of Q e_n, stored sparsely.

    Coordinates are kept as a sorted tuple of (index, Fraction) pairs with
    no zero entries, so equality of values is equality of representations.
    """

    __slots__ = ('_items', '_hash')

    def __init__(self, coords=None):
        if coords is None:
            coords = {}
        elif not isinstance(coords, dict):
            coords = dict(enumerate(coords))
        items = []
        for index, value in coords.items():
            if not isinstance(index, int) or index < 0:
                raise ValueError(f'coordinate index must be a natural number, got {index!r}')
            value = _to_fraction(value)
            if value != 0:
                items.append((index, value))
        items.sort()
        self._items = tuple(items)
        self._hash = None

    @classmethod
    def _from_items(cls, items):
        vec = cls.__new__(cls)
        vec._items = tuple(items)
        vec._hash = None
        return vec

    @classmethod
    def unit(cls, index, coeff=1):
        """e_index scaled by coeff"""
        return cls({index: coeff})

    @property
    def items(self):
        return self._items

    @property
    def support(self):
        return tuple(i for i, _ in self._items)

    @property
    def is_zero(self):
        return not self._items

    @property
    def lead_index(self):
        return self._items[0][0] if self._items else None

    @property
    def lead_coeff(self):
        return self._items[0][1] if self._items else Fraction(0)

    @property
    def max_index(self):
        """Largest index in the support, -1 for the zero vector"""
        return self._items[-1][0] if self._items else -1

    @property
    def sign(self):
        if not self._items:
            return 0
        return 1 if self._items[0][1] > 0 else -1

    def coord(self, index):
        for i, value in self._items:
            if i == index:
                return value
            if i > index:
                break
        return Fraction(0)

    def as_dict(self):
        return dict(self._items)

    def as_list(self):
        """Dense coordinates up to the last nonzero one"""
        out = [Fraction(0)] * (self.max_index + 1)
        for i, value in self._items:
            out[i] = value
        return out

    def __add__(self, other):
        if other is INF:
            return INF
        if not isinstance(other, LogVector):
            return NotImplemented
        merged = dict(self._items)
        for i, value in other._items:
            total = merged.get(i, 0) + value
            if total == 0:
                merged.pop(i, None)
            else:
                merged[i] = total
        return LogVector._from_items(sorted(merged.items()))

    def __neg__(self):
        return LogVector._from_items((i, -v) for i, v in self._items)

    def __sub__(self, other):
        if other is INF:
            return INF
        if not isinstance(other, LogVector):
            return NotImplemented
        return self + (-other)

    def __mul__(self, q):
        if isinstance(q, (LogVector, _Infinity, float)):
            return NotImplemented
        q = _to_fraction(q)
        if q == 0:
            return LogVector()
        return LogVector._from_items((i, q * v) for i, v in self._items)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LogVector):
            return NotImplemented
        return self._items == other._items

    def __lt__(self, other):
        if other is INF:
            return True
        if not isinstance(other, LogVector):
            return NotImplemented
        return (self - other).sign < 0

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._items)
        return self._hash

    def __bool__(self):
        return bool(self._items)

    def __repr__(self):
        return f'LogVector({format_vector(self)})'

    def __str__(self):
        return format_vector(self)


ZERO = LogVector()


class ArchClass:
    """Archimedean class of a vector: the zero class or a leading index"""

    __slots__ = ('lead',)

    def __init__(self, lead=None):
        self.lead = lead

    @property
    def is_zero_class(self):
        return self.lead is None

    def _key(self):
        # smaller leading index means larger class
        return (0, 0) if self.lead is None else (1, -self.lead)

    def __eq__(self, other):
        if not isinstance(other, ArchClass):
            return NotImplemented
        return self.lead == other.lead

    def __lt__(self, other):
        return self._key() < other._key()

    def __le__(self, other):
        return self._key() <= other._key()

    def __gt__(self, other):
        return self._key() > other._key()

    def __ge__(self, other):
        return self._key() >= other._key()

    def __hash__(self):
        return hash(('ArchClass', self.lead))

    def __repr__(self):
        if self.lead is None:
            return 'ClassOfZero'
        return f'LeadIndex({self.lead})'


CLASS_OF_ZERO = ArchClass()


def is_infinite(a):
    return a is INF


def add(a, b):
    if a is INF or b is INF:
        return INF
    return a + b


def negate(a):
    if a is INF:
        return INF
    return -a


def subtract(a, b):
    return add(a, negate(b))


def scale(q, a):
    """Multiply a by the rational q; infinity is fixed by every scalar"""
    if a is INF:
        return INF
    return a * q


def compare(a, b):
    if a is INF:
        return Ordering.EQUAL if b is INF else Ordering.GREATER
    if b is INF:
        return Ordering.LESS
    return Ordering.from_sign((a - b).sign)


def abs_value(a):
    return -a if a.sign < 0 else a


def arch_class(a):
    if a.is_zero:
        return CLASS_OF_ZERO
    return ArchClass(a.lead_index)


def arch_compare(a, b):
    """Compare archimedean classes: [a] < [b] iff n|a| < |b| for all n >= 1"""
    ca, cb = arch_class(a), arch_class(b)
    if ca == cb:
        return Ordering.EQUAL
    return Ordering.LESS if ca < cb else Ordering.GREATER


def multiple_bound(a, b):
    """A multiplier n with |a| <= n|b| whenever a and b share a leading index"""
    if a.is_zero or b.is_zero:
        return 1
    ratio = abs(a.lead_coeff) / abs(b.lead_coeff)
    return int(ratio.numerator // ratio.denominator) + 2


def smallest_multiple(a, b, bound=None):
    """Least n <= bound with |a| <= n|b| and |b| <= n|a|, or None"""
    if a.is_zero or b.is_zero:
        return None
    if bound is None:
        bound = max(multiple_bound(a, b), multiple_bound(b, a))
    abs_a, abs_b = abs_value(a), abs_value(b)

    def holds(n):
        return abs_a <= abs_b * n and abs_b <= abs_a * n

    # holds is monotone in n
    if not holds(bound):
        return None
    lo, hi = 1, bound
    while lo < hi:
        mid = (lo + hi) // 2
        if holds(mid):
            hi = mid
        else:
            lo = mid + 1
    return lo


def same_arch_class_by_multiples(a, b, bound=None):
    """The definitional test: exists n <= bound with |a| <= n|b| and |b| <= n|a|"""
    if a.is_zero or b.is_zero:
        return a.is_zero and b.is_zero
    return smallest_multiple(a, b, bound) is not None


def to_psi_basis(a):
    """Coefficients c with a = sum c_n psi_n, where c_n = r_n - r_{n+1}"""
    candidates = set()
    for i in a.support:
        candidates.add(i)
        if i > 0:
            candidates.add(i - 1)
    coeffs = {}
    for n in sorted(candidates):
        c = a.coord(n) - a.coord(n + 1)
        if c != 0:
            coeffs[n] = c
    return coeffs


def from_psi_basis(coeffs):
    """Rebuild sum c_n psi_n; coordinate i collects every c_n with n >= i"""
    if not coeffs:
        return ZERO
    coeffs = {n: _to_fraction(c) for n, c in coeffs.items()}
    top = max(coeffs)
    dense = {}
    running = Fraction(0)
    for i in range(top, -1, -1):
        running += coeffs.get(i, 0)
        dense[i] = running
    return LogVector(dense)


def parse_rational(text):
    text = text.strip()
    if not re.match(RATIONAL_PATTERN, text):
        raise InvalidLiteral(text)
    if '/' in text and int(text.split('/')[1]) == 0:
        raise InvalidLiteral(text)
    return Fraction(text)


def format_rational(q):
    return str(Fraction(q))


def parse_vector(text):
    """Parse `[r0, r1, ...]` or `inf`"""
    text = text.strip()
    if text == 'inf':
        return INF
    if not (text.startswith('[') and text.endswith(']')):
        raise InvalidLiteral(text)
    body = text[1:-1].strip()
    if not body:
        return ZERO
    return LogVector([parse_rational(part) for part in body.split(',')])


def format_vector(a, psi_names=False):
    """Vector literal text; psi_n elements optionally print by name"""
    if a is INF:
        return 'inf'
    if a.is_zero:
        return '[0]'
    if psi_names:
        level = psi_level(a)
        if level is not None:
            return f'psi_{level}'
    return '[' + ','.join(format_rational(r) for r in a.as_list()) + ']'


def psi_level(a):
    """n if a is psi_n = e_0 + ... + e_n, else None"""
    if a is INF:
        return None
    items = a.items
    if items and items[-1][0] == len(items) - 1 and all(v == 1 for _, v in items):
        return len(items) - 1
    return None
