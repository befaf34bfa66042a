"""p-adic digit arithmetic for a block of GL2 Weyl modules.

A block holding p**q simples indexes its standard modules by m in [1, p**q].
The index is carried by its shifted digits (s_1, ..., s_q), each in [1, p],
most significant first:

    m = (s_1 - 1) p**(q-1) + ... + (s_(q-1) - 1) p + s_q
"""
from collections import namedtuple


class WeylExtError(Exception):
    pass


class RangeError(WeylExtError, ValueError):

    def __init__(self, name, value, expected):
        super().__init__(name, value, expected)
        self.name = name
        self.value = value
        self.expected = expected

    def __str__(self):
        return '{} = {} is out of range (expected {})'.format(self.name, self.value, self.expected)


class DomainError(WeylExtError, ValueError):

    def __init__(self, operation, reason):
        super().__init__(operation, reason)
        self.operation = operation
        self.reason = reason

    def __str__(self):
        return '{}: {}'.format(self.operation, self.reason)


class ShapeError(WeylExtError, ValueError):

    def __init__(self, expected, actual):
        super().__init__(expected, actual)
        self.expected = expected
        self.actual = actual

    def __str__(self):
        return 'length mismatch: {} != {}'.format(self.expected, self.actual)


class InvariantViolation(WeylExtError, AssertionError):

    def __init__(self, what, details=None):
        super().__init__(what, details)
        self.what = what
        self.details = details

    def __str__(self):
        if self.details is None:
            return self.what
        return '{} ({})'.format(self.what, self.details)


BlockCoordinates = namedtuple('BlockCoordinates', ['p', 'q', 'm', 'digits'])


def check_prime(p):
    # primality itself is never tested
    if p < 2:
        raise RangeError('p', p, '>= 2')
    return p


def check_index(name, value, p, q=None):
    if value < 1:
        raise RangeError(name, value, '>= 1')
    if q is not None and value > p ** q:
        raise RangeError(name, value, '<= {}**{}'.format(p, q))
    return value


def ceil_div(a, b):
    return -(-a // b)


def trunc_div(a, b):
    """Integer division rounding toward zero, as C does."""
    quotient = abs(a) // abs(b)
    return quotient if (a >= 0) == (b > 0) else -quotient


def ceil_log(p, n):
    """Smallest e >= 0 with p**e >= n."""
    e, power = 0, 1
    while power < n:
        e += 1
        power *= p
    return e


def digits_of(p, q, m):
    check_prime(p)
    if q < 1:
        raise RangeError('q', q, '>= 1')
    check_index('m', m, p, q)
    rest = m - 1
    digits = []
    for _ in range(q):
        rest, digit = divmod(rest, p)
        digits.append(digit + 1)
    return BlockCoordinates(p, q, m, tuple(reversed(digits)))


def index_of(p, digits):
    check_prime(p)
    m = 0
    for position, digit in enumerate(digits):
        if not 1 <= digit <= p:
            raise RangeError('s_{}'.format(position + 1), digit, '[1, {}]'.format(p))
        m = m * p + digit - 1
    return m + 1


def minimal_q(p, m, l):
    check_prime(p)
    check_index('m', m, p)
    check_index('l', l, p)
    return max(1, ceil_log(p, max(m, l)))


def weight_deltas(s, t):
    if len(s) != len(t):
        raise ShapeError(len(s), len(t))
    return tuple(t_g - s_g for s_g, t_g in zip(s, t))


def parity_prefix(p, w):
    check_prime(p)
    prefix = [0]
    for w_f in w:
        if p == 2:
            prefix.append(w_f % 2)
        else:
            prefix.append((prefix[-1] + w_f) % 2)
    return tuple(prefix)


def delta_div(b, a):
    if a < 1:
        raise RangeError('a', a, '>= 1')
    return int(b % a == 0)


def reflected(p, s, t, start):
    """Whether t_g = p + 1 - s_g for every 1-based g in [start, len(s)]."""
    return all(t_g == p + 1 - s_g for s_g, t_g in zip(s[start - 1:], t[start - 1:]))
