"""Lattice polytopes indexing a basis of Ext between Weyl modules, and two
independent enumerators of that basis used as oracles for the recursions.
"""
import itertools
from collections import namedtuple

from weylext import core

PolytopeElement4 = namedtuple('PolytopeElement4', ['s', 'j0', 'k0', 't'])
UpsilonElement = namedtuple('UpsilonElement', ['s', 'i', 'j', 'k', 'a', 'b', 't'])

S1, S2, S3 = 'S1', 'S2', 'S3'


def in_P_c(p, e):
    s, j0, k0, t = e
    if not 1 <= s <= t <= p:
        return False
    if not 0 <= j0 + k0 <= 1 or t - s != j0 + 2 * k0:
        return False
    return s != t or (j0 == 0 and k0 == 0)


def in_P_0(p, e):
    s, j0, k0, t = e
    if (s, j0, k0, t) == (p, 0, 0, 1):
        return False
    return 1 <= s <= p and 1 <= t <= p and s + t == p + 1 and j0 == 0 and k0 == 0


def in_P_M(p, e):
    s, j0, k0, t = e
    return (1 <= s <= p and 1 <= t <= p and j0 + 2 * k0 + 2 == t - 1 - s + p
            and 0 <= j0 + k0 + 2 <= 1)


def in_P_Mbar(p, e):
    return tuple(e) != (p, 0, -1, 1) and in_P_M(p, e)


def convert_ijk(p, j0, k0, a, b):
    i = -a - b
    if a >= b + 1:
        return i, j0 - (a - b - 1) * p + 1, k0 + (a - b - 1) * (p - 1)
    if a == b:
        return i, j0, k0
    if a == b - 1:
        return i, j0 + 1, k0
    raise core.DomainError('convert_ijk', 'a = {} < b - 1 = {}'.format(a, b - 1))


def _s1_parameter(p, v):
    """The u in {0, 1} witnessing membership of v in S1, or None."""
    s, i, j, k, a, b, t = v
    if not (1 <= s <= p and 1 <= t <= p and a >= b >= 0 and i == -a - b):
        return None
    c, w = a - b, t - s
    if c == 0 and w < 0:
        return None
    for u in (0, 1):
        if j != -p * c - w + 2 * u or k != (p - 1) * c + w - u:
            continue
        if u == 1 and c == 0 and w == 0:
            continue
        if u == 1 and c == 1 and w < 2 - p:
            continue
        return u
    return None


def in_S1(p, v):
    return _s1_parameter(p, v) is not None


def in_S2(p, v):
    s, i, j, k, a, b, t = v
    return (1 <= s <= p - 1 and t == p + 1 - s and a >= 0 and b == a + 1
            and i == -2 * a - 1 and j == 1 and k == 0)


def in_S3(p, v):
    s, i, j, k, a, b, t = v
    return 1 <= s <= p and (i, j, k, a, b) == (1, 1, 0, 0, 0) and t == p + 1 - s


def membership(p, v):
    return [tag for tag, test in ((S1, in_S1), (S2, in_S2), (S3, in_S3)) if test(p, v)]


def enumerate_upsilon(p, s, t, i):
    """All elements of S1, S2 and S3 with the given s, t and i components."""
    core.check_prime(p)
    if not (1 <= s <= p and 1 <= t <= p):
        raise core.RangeError('(s, t)', (s, t), 'both in [1, {}]'.format(p))
    result = []
    w = t - s
    if i <= 0:
        for b in range(-i // 2 + 1):
            a = -i - b
            c = a - b
            for u in (0, 1):
                v = UpsilonElement(s, i, -p * c - w + 2 * u, (p - 1) * c + w - u, a, b, t)
                if in_S1(p, v):
                    result.append(v)
    if i < 0 and i % 2 == 1:
        a = (-i - 1) // 2
        v = UpsilonElement(s, i, 1, 0, a, a + 1, t)
        if in_S2(p, v):
            result.append(v)
    if i == 1:
        v = UpsilonElement(s, 1, 1, 0, 0, 0, t)
        if in_S3(p, v):
            result.append(v)
    for v in result:
        if v.k < 0:
            raise core.InvariantViolation('negative k-component in the basis polytope', v)
    return result


def _block_digits(p, q, m, l):
    core.check_prime(p)
    s = core.digits_of(p, q, m).digits
    t = core.digits_of(p, q, l).digits
    return s, t


def check_chaining(basis_tuple):
    previous_j = 0
    for v in basis_tuple:
        if v.i != previous_j:
            raise core.InvariantViolation('broken chaining i_g = j_(g-1)', basis_tuple)
        previous_j = v.j
    return basis_tuple


def enumerate_basis(p, q, k, m, l):
    """Brute-force basis of Ext^k(Delta_m, Delta_l) by depth-first chaining."""
    s, t = _block_digits(p, q, m, l)
    result = []

    def extend(prefix, i, total):
        g = len(prefix)
        if g == q:
            if total == k:
                result.append(check_chaining(tuple(prefix)))
            return
        for v in enumerate_upsilon(p, s[g], t[g], i):
            # k-components are non-negative, so partial sums only grow
            if total + v.k <= k:
                prefix.append(v)
                extend(prefix, v.j, total + v.k)
                prefix.pop()

    if k >= 0:
        extend([], 0, 0)
    return result


def _regular_choices(p, w_g, parity, previous):
    """(u_g, c_g) pairs with (2u - w)/p <= c <= previous and c = parity mod 2."""
    for u in (0, 1):
        low = core.ceil_div(2 * u - w_g, p)
        for c in range(low, previous + 1):
            if (c - parity) % 2 == 0:
                yield u, c


def _regular_element(p, s_g, t_g, previous, u, c):
    w_g = t_g - s_g
    return UpsilonElement(s_g, -previous, -p * c - w_g + 2 * u, (p - 1) * c + w_g - u,
                          (c + previous) // 2, (previous - c) // 2, t_g)


def _s1_tail(p, s_g, t_g, previous):
    # c = 0, u = 1 = w
    return UpsilonElement(s_g, -previous, 1, 0, previous // 2, previous // 2, t_g)


def _s2_element(p, s_g, previous):
    return UpsilonElement(s_g, -previous, 1, 0, (previous - 1) // 2, (previous + 1) // 2, p + 1 - s_g)


def _s3_element(p, s_g):
    return UpsilonElement(s_g, 1, 1, 0, 0, 0, p + 1 - s_g)


def enumerate_cases(p, q, k, m, l):
    """The same basis as enumerate_basis, built from the (u_g, c_g)
    parameterisation of the three admissible case shapes instead of by
    chaining polytope fibres.
    """
    s, t = _block_digits(p, q, m, l)
    w = core.weight_deltas(s, t)
    W = core.parity_prefix(p, w)
    result = []
    if k < 0:
        return result

    def regular_prefixes(length):
        # states: (elements, previous = p c_(g-1) + w_(g-1) - 2 u_(g-1), partial k)
        states = [((), 0, 0)]
        for g in range(length):
            advanced = []
            for elements, previous, total in states:
                for u, c in _regular_choices(p, w[g], W[g], previous):
                    v = _regular_element(p, s[g], t[g], previous, u, c)
                    if total + v.k <= k:
                        advanced.append((elements + (v,), p * c + w[g] - 2 * u, total + v.k))
            states = advanced
        return states

    def emit(elements, total):
        if total == k:
            result.append(check_chaining(elements))

    # (1^q), with the alternative c_q = 0, u_q = 1 = w_q at the last position
    for elements, previous, total in regular_prefixes(q):
        emit(elements, total)
    if w[q - 1] == 1 and W[q - 1] == 0:
        for elements, previous, total in regular_prefixes(q - 1):
            emit(elements + (_s1_tail(p, s[q - 1], t[q - 1], previous),), total)

    for h in range(1, q):
        # (1^h 2 3^(q-h-1))
        if W[h] == 1 and s[h] <= p - 1 and core.reflected(p, s, t, h + 1):
            for elements, previous, total in regular_prefixes(h):
                tail = (_s2_element(p, s[h], previous),) + tuple(_s3_element(p, s_g) for s_g in s[h + 1:])
                emit(elements + tail, total)
        # (1^h 3^(q-h))
        if w[h - 1] == 1 and s[h - 1] <= p - 1 and W[h - 1] == 0 and core.reflected(p, s, t, h + 1):
            for elements, previous, total in regular_prefixes(h - 1):
                tail = ((_s1_tail(p, s[h - 1], t[h - 1], previous),)
                        + tuple(_s3_element(p, s_g) for s_g in s[h:]))
                emit(elements + tail, total)
    return result


def _image_of_construction(p, ab_bound):
    """Elements of the basis polytope built from the M-sets through convert_ijk,
    plus the adjoined S3 points, for 0 <= a, b <= ab_bound.
    """
    box = range(-2 * p - 2, 2 * p + 3)
    image = set()
    for s, t, j0, k0 in itertools.product(range(1, p + 1), range(1, p + 1), box, box):
        e = PolytopeElement4(s, j0, k0, t)
        for a, b in itertools.product(range(ab_bound + 1), repeat=2):
            if a == b:
                member = in_P_c(p, e)
            elif a == b - 1:
                member = in_P_0(p, e)
            elif a == b + 1:
                member = in_P_Mbar(p, e)
            elif a > b + 1:
                member = in_P_M(p, e)
            else:
                member = False
            if member:
                i, j, k = convert_ijk(p, j0, k0, a, b)
                image.add(UpsilonElement(s, i, j, k, a, b, t))
    for s in range(1, p + 1):
        image.add(UpsilonElement(s, 1, 1, 0, 0, 0, p + 1 - s))
    return image


def verify_decomposition(p, ab_bound=4):
    """Check on a bounded window that S1, S2 and S3 are pairwise disjoint and
    that their union is the image of the M-set construction.

    Every S-set forces i = -a - b or i = 1; j and k then range over the
    window's extreme values of the S1 parameterisation.
    """
    core.check_prime(p)
    if ab_bound < 1:
        raise core.RangeError('ab_bound', ab_bound, '>= 1')
    j_range = range(-(ab_bound + 1) * p, 3)
    k_range = range(0, (p - 1) * (ab_bound + 1) + 1)
    union = set()
    for s, t, a, b in itertools.product(range(1, p + 1), range(1, p + 1),
                                        range(ab_bound + 1), range(ab_bound + 1)):
        for i in sorted({-a - b, 1}):
            for j, k in itertools.product(j_range, k_range):
                v = UpsilonElement(s, i, j, k, a, b, t)
                tags = membership(p, v)
                if len(tags) > 1:
                    return False
                if tags:
                    union.add(v)
    return union == _image_of_construction(p, ab_bound)
