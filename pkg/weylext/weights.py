from collections import namedtuple

from weylext import core

WeightPair = namedtuple('WeightPair', ['lambda_', 'mu'])
BlockPosition = namedtuple('BlockPosition', ['m', 'e'])


class NotSameBlock:
    """The two weights lie in different blocks: every Ext-group vanishes."""

    def __repr__(self):
        return 'NOT_SAME_BLOCK'

    def __bool__(self):
        return False


NOT_SAME_BLOCK = NotSameBlock()


def block_position(p, wp):
    """Block indices of the Weyl modules with highest weights lambda and mu.

    The lambda-derived index is reported as e and the mu-derived one as m.
    """
    core.check_prime(p)
    lambda_, mu = wp
    if lambda_ < 0:
        raise core.RangeError('lambda', lambda_, '>= 0')
    if mu < 0:
        raise core.RangeError('mu', mu, '>= 0')
    while True:
        a, i = divmod(lambda_, p)
        b, j = divmod(mu, p)
        if i == p - 1 and j == p - 1:
            # Steinberg tensor factor; strip it and look at (a, b)
            lambda_, mu = a, b
            continue
        if i == p - 1 or j == p - 1:
            return NOT_SAME_BLOCK
        if (a - b) % 2 == 0 and i == j or (a - b) % 2 == 1 and i == p - 2 - j:
            return BlockPosition(m=b + 1, e=a + 1)
        return NOT_SAME_BLOCK
