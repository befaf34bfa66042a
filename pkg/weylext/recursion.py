"""Exact dimensions of Ext^k(Delta_m, Delta_l) through the memoized B and A
recursions and the four-term dimension formula.
"""
import itertools
from collections import namedtuple

from weylext import core
from weylext.utils import Memoized

BKey = namedtuple('BKey', ['h', 'l', 'v'])
AKey = namedtuple('AKey', ['h', 'k', 'w'])
DimBreakdown = namedtuple('DimBreakdown', ['d1', 'd2', 'd3', 'd4', 'total'])

ZERO = DimBreakdown(0, 0, 0, 0, 0)


def _check_key(key, vector):
    if key.h < 1:
        raise core.RangeError('h', key.h, '>= 1')
    if len(vector) != key.h:
        raise core.ShapeError(key.h, len(vector))


@Memoized
def _b(p, h, l, v):
    if v[0] < 0 or l < 0:
        return 0
    if h == 1:
        return int((l - v[0]) % (2 * (p - 1)) == 0 and v[0] <= p * l and l <= v[0])
    total = 0
    for d in range(min(v[0] // (2 * p), l // 2) + 1):
        total += _b(p, h - 1, l - 2 * d, (v[1] + p * (v[0] - 2 * d * p),) + v[2:])
    return total


def b_rec(p, key):
    key = BKey(key[0], key[1], tuple(key[2]))
    _check_key(key, key.v)
    return _b(core.check_prime(p), key.h, key.l, key.v)


def _a_base(p, k, w_1):
    matches = [u for u in (0, 1)
               if (k + u - w_1) % (2 * (p - 1)) == 0 and w_1 + 2 * (p - 1) * u <= p * (k + u) and k + u <= w_1]
    if len(matches) > 1:
        raise core.InvariantViolation('both base-case branches of A hold', (p, k, w_1))
    return len(matches)


@Memoized
def _a(p, h, k, w):
    if k < 0:
        return 0
    if h == 1:
        return _a_base(p, k, w[0])
    total = 0
    for u in (0, 1):
        lead = w[0] - 2 * u
        # a negative leading entry contributes the empty sum
        if lead < 0:
            continue
        # d beyond (k - u) / 2 leaves a negative degree
        for d in range(min(lead // (2 * p), (k - u) // 2) + 1):
            total += _a(p, h - 1, k - u - 2 * d, (w[1] + p * (lead - 2 * d * p),) + w[2:])
    return total


@Memoized
def _a_truncated(p, h, k, w):
    if h == 1:
        return _a_base(p, k, w[0])
    total = 0
    for u in (0, 1):
        lead = w[0] - 2 * u
        for d in range(core.trunc_div(lead, 2 * p) + 1):
            total += _a_truncated(p, h - 1, k - u - 2 * d, (w[1] + p * (lead - 2 * d * p),) + w[2:])
    return total


def a_rec(p, key):
    key = AKey(key[0], key[1], tuple(key[2]))
    _check_key(key, key.w)
    return _a(core.check_prime(p), key.h, key.k, key.w)


def a_rec_truncated(p, key):
    """A with its loop bound divided toward zero, so d = 0 still runs for a
    slightly negative leading entry.
    """
    key = AKey(key[0], key[1], tuple(key[2]))
    _check_key(key, key.w)
    return _a_truncated(core.check_prime(p), key.h, key.k, key.w)


def a_via_b(p, key):
    key = AKey(key[0], key[1], tuple(key[2]))
    _check_key(key, key.w)
    total = 0
    for u in itertools.product((0, 1), repeat=key.h):
        shifted = tuple(w_g - 2 * u_g for w_g, u_g in zip(key.w, u))
        total += b_rec(p, BKey(key.h, key.k - sum(u), shifted))
    return total


def block_data(p, m, l, q=None):
    core.check_prime(p)
    core.check_index('m', m, p)
    core.check_index('l', l, p)
    if q is None:
        q = core.minimal_q(p, m, l)
    else:
        if q < 1:
            raise core.RangeError('q', q, '>= 1')
        core.check_index('m', m, p, q)
        core.check_index('l', l, p, q)
    s = core.digits_of(p, q, m).digits
    t = core.digits_of(p, q, l).digits
    return q, s, t


def ext_dim(p, k, m, l, q=None):
    q, s, t = block_data(p, m, l, q)
    if not 0 <= k <= l - m:
        return ZERO
    w = core.weight_deltas(s, t)
    W = core.parity_prefix(p, w)
    d1 = _a(p, q, k, w)
    d2 = sum(_a(p, h, k, w[:h]) for h in range(1, q)
             if W[h] == 0 and w[h] == 1 and core.reflected(p, s, t, h + 2))
    d3 = int(k == 0 and w[0] == 1 and core.reflected(p, s, t, 2))
    d4 = sum(_a(p, h, k, w[:h]) for h in range(1, q)
             if W[h] == 1 and s[h] != p and core.reflected(p, s, t, h + 1))
    return DimBreakdown(d1, d2, d3, d4, d1 + d2 + d3 + d4)


def weight_vector(p, q, m, l):
    q, s, t = block_data(p, m, l, q)
    return core.weight_deltas(s, t)


def duality_partner(p, q, m, l):
    core.check_prime(p)
    core.check_index('m', m, p, q)
    core.check_index('l', l, p, q)
    return p ** q + 1 - l, p ** q + 1 - m
