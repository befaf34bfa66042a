import functools
import multiprocessing
import time
import types
from collections import defaultdict

DEFAULT_CACHE_SIZE = 2 ** 20


class Timer:
    time_provider = time.time

    def __init__(self):
        self.duration = 0
        self.start = self.time_provider()

    def stop(self):
        self.duration = self.time_provider() - self.start
        return self.duration


class TimeRegister:
    executions = defaultdict(float)
    timer_class = Timer
    stack = []

    def __init__(self, method):
        self.method = method
        functools.update_wrapper(self, method)

    def __get__(self, obj, ownerClass=None):
        if obj is None:
            return self
        return types.MethodType(self, obj)

    def __call__(self, *args, **kwargs):
        if self.stack and self.stack[-1] == self.method:
            return self.method(*args, **kwargs)

        self.stack.append(self.method)
        time_reg = self.timer_class()
        try:
            return self.method(*args, **kwargs)
        finally:
            self.executions[self.method.__name__] += time_reg.stop()
            self.stack.pop()

    @classmethod
    def clean(cls):
        cls.executions.clear()
        cls.stack = []


class Memoized:
    """LRU memo cache for a pure recursion, registered so that every cache
    shares one entry cap and can be resized, cleared or inspected together.

    Recursive calls must go through the module-level name so that they hit
    the cache.
    """
    maxsize = DEFAULT_CACHE_SIZE
    registry = []

    def __init__(self, function):
        self.function = function
        self.cached = self._wrap(function, self.maxsize)
        functools.update_wrapper(self, function)
        self.registry.append(self)

    @staticmethod
    def _wrap(function, maxsize):
        if maxsize == 0:
            return function
        return functools.lru_cache(maxsize=maxsize)(function)

    def __call__(self, *args):
        return self.cached(*args)

    def cache_info(self):
        if hasattr(self.cached, 'cache_info'):
            return self.cached.cache_info()
        return None

    @classmethod
    def resize(cls, maxsize):
        if maxsize < 0:
            raise ValueError('cache size must be non-negative, got {}'.format(maxsize))
        cls.maxsize = maxsize
        for memo in cls.registry:
            memo.cached = cls._wrap(memo.function, maxsize)

    @classmethod
    def clean(cls):
        for memo in cls.registry:
            if hasattr(memo.cached, 'cache_clear'):
                memo.cached.cache_clear()

    @classmethod
    def stats(cls):
        result = {}
        for memo in cls.registry:
            info = memo.cache_info()
            if info is not None:
                result[memo.function.__qualname__] = {
                    'hits': info.hits,
                    'misses': info.misses,
                    'size': info.currsize,
                    'maxsize': info.maxsize,
                }
        return result


def _init_worker(cache_size):
    Memoized.resize(cache_size)


def map_cells(function, cells, jobs=1, cache_size=None):
    """Apply function to every cell, returning results in cell order.

    With more than one job the cells are spread over worker processes, each
    with its own caches.
    """
    cells = list(cells)
    if cache_size is None:
        cache_size = Memoized.maxsize
    if jobs <= 1 or len(cells) <= 1:
        return [function(cell) for cell in cells]
    chunksize = max(1, len(cells) // (4 * jobs))
    with multiprocessing.Pool(jobs, initializer=_init_worker, initargs=(cache_size,)) as pool:
        return pool.map(function, cells, chunksize)
