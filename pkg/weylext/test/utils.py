import sys
from contextlib import contextmanager
from io import StringIO


@contextmanager
def captured_output():
    new_out, new_err = StringIO(), StringIO()
    old_out, old_err = sys.stdout, sys.stderr
    try:
        sys.stdout, sys.stderr = new_out, new_err
        yield sys.stdout, sys.stderr
    finally:
        sys.stdout, sys.stderr = old_out, old_err


def block_pairs(p, q):
    size = p ** q
    for m in range(1, size + 1):
        for l in range(1, size + 1):
            yield m, l


def floor_log(p, n):
    """Largest h with p**h <= n, for n >= 1."""
    h, power = 0, p
    while power <= n:
        h += 1
        power *= p
    return h
