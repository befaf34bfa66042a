"""Real-valued growth bounds for r_p, Z_p and Ext-dimensions.

Everything is evaluated with mpmath at WORKING_DPS significant digits, so
values far beyond the double range stay finite.
"""
from collections import namedtuple

import mpmath

from weylext import core

WORKING_DPS = 30
# series stop once the next term is below this fraction of the running sum
SERIES_TOLERANCE = mpmath.mpf('1e-15')
# infinite products stop once a factor is this close to 1
PRODUCT_TOLERANCE = mpmath.mpf('1e-15')

BoundValue = namedtuple('BoundValue', ['value', 'formula_id'])


def _series(first, ratio):
    total = term = mpmath.mpf(first)
    n = 0
    while True:
        n += 1
        factor = ratio(n)
        term *= factor
        total += term
        if factor < 1 and term <= SERIES_TOLERANCE * total:
            return total


def _product(factor):
    total = mpmath.mpf(1)
    j = 0
    while True:
        j += 1
        deviation = factor(j)
        total *= 1 + deviation
        if abs(deviation) < PRODUCT_TOLERANCE:
            return total


def _check_non_negative(operation, x):
    if x < 0:
        raise core.DomainError(operation, 'x = {} is negative'.format(x))


def sandwich_S_T(p, x):
    """Partial sums of S_p(x) = sum a_n x**n and T_p(x) = sum b_n x**n."""
    core.check_prime(p)
    _check_non_negative('sandwich_S_T', x)
    with mpmath.workdps(WORKING_DPS):
        x = mpmath.mpf(x)
        s = _series(mpmath.mpf(1) / 2, lambda n: x / (n * ((p + 1) ** n + 1)))
        t = _series(1, lambda n: x / (n * (p ** n - 1)))
        return BoundValue(+s, 'S_p'), BoundValue(+t, 'T_p')


def F_q_eval(q_base, x):
    if q_base < 2:
        raise core.DomainError('F_q', 'q = {} must be at least 2'.format(q_base))
    _check_non_negative('F_q', x)
    with mpmath.workdps(WORKING_DPS):
        x = mpmath.mpf(x)
        return BoundValue(+_series(1, lambda n: x / (n * mpmath.mpf(q_base) ** n)), 'F_q')


def F_bounds(q_base, x):
    if not x >= q_base >= 2:
        raise core.DomainError('F_bounds', 'need x >= q >= 2, got q = {}, x = {}'.format(q_base, x))
    with mpmath.workdps(WORKING_DPS):
        x = mpmath.mpf(x)
        log_x = mpmath.log(x, q_base)
        lower = mpmath.exp((log_x - 3) / 2 * mpmath.log(x) - mpmath.loggamma(log_x + 1))
        upper = mpmath.e * mpmath.power(q_base, mpmath.mpf(1) / 8) * mpmath.power(x, (log_x - 1) / 2)
        return BoundValue(+lower, 'F_q_lower'), BoundValue(+upper, 'F_q_upper')


def constants_C1_C2(p):
    core.check_prime(p)
    with mpmath.workdps(WORKING_DPS):
        c1 = _product(lambda j: -1 / mpmath.mpf((p + 1) ** j + 1)) / 2
        c2 = _product(lambda j: 1 / mpmath.mpf(p ** j - 1))
        return BoundValue(+c1, 'C1'), BoundValue(+c2, 'C2')


def _gamma_quotient(coefficient, n, base, shift):
    """coefficient * n**((log_base(n) + shift) / 2) / Gamma(log_base(n) + 1)"""
    log_n = mpmath.log(n, base)
    return coefficient * mpmath.exp((log_n + shift) / 2 * mpmath.log(n) - mpmath.loggamma(log_n + 1))


class Bound:
    name = None
    argument = None
    minimum = 0
    description = None

    def __init__(self, p):
        self.p = core.check_prime(p)

    def __call__(self, n):
        if n < self.minimum:
            raise core.DomainError(self.name, '{} = {} must be at least {}'.format(self.argument, n, self.minimum))
        with mpmath.workdps(WORKING_DPS):
            return BoundValue(+self.evaluate(mpmath.mpf(n)), self.name)

    def evaluate(self, n):
        raise NotImplementedError()

    def log_p(self, x):
        return mpmath.log(x, self.p)


class ZpLower(Bound):
    name = 'zp_lower'
    argument = 'd'
    minimum = 1
    description = 'Z_p(d) >= C1 d^((log_(p+1) d - 3)/2) / Gamma(log_(p+1) d + 1)'

    def evaluate(self, d):
        c1, _ = constants_C1_C2(self.p)
        return _gamma_quotient(c1.value, d, self.p + 1, -3)


class RddLower(ZpLower):
    name = 'rdd_lower'
    description = 'r_p(d,d) >= C1 d^((log_(p+1) d - 3)/2) / Gamma(log_(p+1) d + 1)'


class RddUpper(Bound):
    name = 'rdd_upper'
    argument = 'd'
    minimum = 1
    description = 'r_p(d,d) <= C2 d^((log_p d - 1)/2)'

    def evaluate(self, d):
        _, c2 = constants_C1_C2(self.p)
        return c2.value * mpmath.power(d, (self.log_p(d) - 1) / 2)


class ZpUpper(Bound):
    name = 'zp_upper'
    argument = 'd'
    description = 'Z_p(d) <= (log_p(d+1) + 3)^d'

    def evaluate(self, d):
        return mpmath.power(self.log_p(d + 1) + 3, d)


class ZpRecursiveUpper(Bound):
    name = 'zp_recursive_upper'
    argument = 'd'
    description = 'Z_p(d) <= 1 + (log_p d + 2) sum_(f<d) Z_p(f), iterated from Z_p(0) = 1'

    def evaluate(self, d):
        running_sum = mpmath.mpf(0)
        value = mpmath.mpf(1)
        for f in range(1, int(d) + 1):
            running_sum += value
            value = 1 + (self.log_p(f) + 2) * running_sum
        return value


class XLower(Bound):
    name = 'x_lower'
    argument = 'k'
    minimum = 10
    description = 'X_m(k) >= C1 k^(log_(p+1)(k)/2 - 6) / Gamma(log_(p+1) k + 1)'

    def evaluate(self, k):
        c1, _ = constants_C1_C2(self.p)
        return _gamma_quotient(c1.value, k, self.p + 1, -12)


class AUpper(Bound):
    name = 'a_upper'
    argument = 'k'
    description = 'A_(h,k) <= (k+1)^2 (32 log_p(k+1) + 96)^k'

    def evaluate(self, k):
        return (k + 1) ** 2 * mpmath.power(32 * self.log_p(k + 1) + 96, k)


class XUpper(Bound):
    name = 'x_upper'
    argument = 'k'
    description = 'X(k) <= (k+4)^3 (32 log_p(k+1) + 96)^k'

    def evaluate(self, k):
        return (k + 4) ** 3 * mpmath.power(32 * self.log_p(k + 1) + 96, k)


bounds = [ZpLower, ZpUpper, ZpRecursiveUpper, RddLower, RddUpper, XLower, XUpper, AUpper]


def get_bound(formula_id):
    for bound in bounds:
        if bound.name == formula_id:
            return bound
    raise KeyError(formula_id)


def evaluate_bound(formula_id, p, n):
    return get_bound(formula_id)(p)(n)


def bound_evaluators(p, n, argument):
    """Every bound over the given argument ('d' or 'k') whose domain holds n."""
    return [bound(p)(n) for bound in bounds if bound.argument == argument and n >= bound.minimum]


def lower_bound_witness(p, k, m):
    """Target index l for which dim Ext^k(Delta_m, Delta_l) is bounded below
    through r_p in the lower growth estimate.
    """
    core.check_prime(p)
    if k < 0:
        raise core.RangeError('k', k, '>= 0')
    core.check_index('m', m, p)
    if p == 2:
        return m + 16 * (k // 5) + k
    return m + 2 * p * (p * p - 1) * (k // 5) + 2 * (p - 1) * (k // 2)
