"""p-adic partition functions.

q_p(D, d)  representations D = sum n_i p**i with sum n_i = d, n_i >= 0
r_p(M, d)  representations M = sum m_i p**i with d >= m_0 >= m_1 >= ... >= 0
r_p^h      the same with at most h + 1 parts, read from the top digit down
"""
from weylext import core
from weylext.utils import Memoized


@Memoized
def _q(p, D, d):
    if D < 0 or d < 0 or d > D:
        return 0
    if D == 0:
        return 1
    total = 0
    # n_0 is fixed mod p by D; the rest is a representation of (D - n_0) / p
    for n_0 in range(D % p, min(D, d) + 1, p):
        total += _q(p, (D - n_0) // p, d - n_0)
    return total


def q_p(p, D, d):
    return _q(core.check_prime(p), D, d)


def sigma_p(p, D):
    core.check_prime(p)
    if D < 0:
        raise core.RangeError('D', D, '>= 0')
    total = 0
    while D:
        D, digit = divmod(D, p)
        total += digit
    return total


@Memoized
def _r(p, M, d):
    if M < 0 or d < 0:
        return 0
    if M == 0:
        return 1
    total = 0
    for N in range(max(0, core.ceil_div(M - d, p)), M // p + 1):
        total += _r(p, N, M - N * p)
    return total


def r_p(p, M, d):
    return _r(core.check_prime(p), M, d)


def decreasing_representations(p, M, d):
    """Yield every (m_0, m_1, ...) with d >= m_0 >= m_1 >= ... > 0 and
    sum m_i p**i = M, trailing zeros dropped.
    """
    core.check_prime(p)
    if M < 0 or d < 0:
        return

    def extend(rest, bound, weight, prefix):
        if rest == 0:
            yield prefix
            return
        for part in range(min(bound, rest // weight), 0, -1):
            yield from extend(rest - part * weight, part, weight * p, prefix + (part,))

    yield from extend(M, d, 1, ())


@Memoized
def _r_h(p, M, d, h):
    if M < 0 or d < 0:
        return 0
    if h == 0:
        return int(M <= d)
    step = (p ** (h + 1) - 1) // (p - 1)
    total = 0
    for f in range(min(d, M // step) + 1):
        total += _r_h(p, M - f * step, d - f, h - 1)
    return total


def r_p_h(p, M, d, h):
    core.check_prime(p)
    if h < 0:
        raise core.RangeError('h', h, '>= 0')
    return _r_h(p, M, d, h)


def q_via_r(p, D, d):
    core.check_prime(p)
    if D < 0 or d < 0 or (D - d) % (p - 1):
        return 0
    return _r(p, (D - d) // (p - 1), d)


def b_explicit(p, h, l, v):
    """B through the closed formula over q_p; needs h > 1, every v_g <= p - 1,
    V = sum v_g p**(h-g) >= 0 and l >= 0.
    """
    core.check_prime(p)
    v = tuple(v)
    if h <= 1:
        raise core.DomainError('b_explicit', 'h = {} must exceed 1'.format(h))
    if len(v) != h:
        raise core.ShapeError(h, len(v))
    if any(v_g > p - 1 for v_g in v):
        raise core.DomainError('b_explicit', 'entries of {} must not exceed p - 1 = {}'.format(v, p - 1))
    if l < 0:
        raise core.DomainError('b_explicit', 'l = {} is negative'.format(l))
    V = 0
    for v_g in v:
        V = V * p + v_g
    if V < 0:
        raise core.DomainError('b_explicit', 'V = {} is negative'.format(V))
    if not core.delta_div(V - l, 2 * (p - 1)):
        return 0
    total = 0
    denominator = 2 * p * p
    for d in range(l // 2 + 1):
        rest = l - 2 * d
        for D in range(max(0, core.ceil_div(V - p * rest, denominator)), (V - rest) // denominator + 1):
            total += _q(p, D, d)
    return total


def default_m_max(p, d):
    return p ** (core.ceil_log(p, d + 1) + 3)


def z_scan(p, d, m_max=None):
    """Largest r_p(M, d) over 0 <= M <= m_max: a lower bound for Z_p(d)."""
    core.check_prime(p)
    if d < 0:
        raise core.RangeError('d', d, '>= 0')
    if m_max is None:
        m_max = default_m_max(p, d)
    if m_max < 0:
        raise core.RangeError('M_max', m_max, '>= 0')
    return max(_r(p, M, d) for M in range(m_max + 1))


def series(p, d, m_max):
    """(M, r_p(M, d)) for 0 <= M <= m_max."""
    core.check_prime(p)
    return [(M, _r(p, M, d)) for M in range(m_max + 1)]
