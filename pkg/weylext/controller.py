import csv
from collections import namedtuple

from weylext import polytopes, recursion, utils, views

Cell = namedtuple('Cell', ['p', 'q', 'k', 'm', 'e'])
Grid = namedtuple('Grid', ['p', 'q', 'ks'])
CheckResult = namedtuple('CheckResult', ['check', 'cell', 'expected', 'actual'])

CHECKS = ('oracle', 'cases', 'duality', 'q-stability')


def dimension_cell(cell):
    return recursion.ext_dim(cell.p, cell.k, cell.m, cell.e, cell.q).total


def a_cell(cell):
    return recursion.ext_dim(cell.p, cell.k, cell.m, cell.e, cell.q).d1


def check_cell(cell):
    """Compare the recursion against both enumerators, its dual cell and the
    next larger block, returning one CheckResult per check.
    """
    p, q, k, m, e = cell
    dimension = dimension_cell(cell)
    basis = polytopes.enumerate_basis(p, q, k, m, e)
    cases = polytopes.enumerate_cases(p, q, k, m, e)
    dual_m, dual_e = recursion.duality_partner(p, q, m, e)
    return [
        CheckResult('oracle', cell, len(basis), dimension),
        CheckResult('cases', cell, len(basis), len(cases) if sorted(cases) == sorted(basis) else None),
        CheckResult('duality', cell, dimension, dimension_cell(Cell(p, q, k, dual_m, dual_e))),
        CheckResult('q-stability', cell, dimension, dimension_cell(Cell(p, q + 1, k, m, e))),
    ]


def grid_cells(grid):
    size = grid.p ** grid.q
    return [Cell(grid.p, grid.q, k, m, e)
            for k in grid.ks for e in range(1, size + 1) for m in range(1, size + 1)]


class VerificationScore:

    def __init__(self):
        self.checks = CHECKS
        self.passed_checks = {check: 0 for check in CHECKS}
        self.failed_checks = {check: 0 for check in CHECKS}
        self.failures = []

    def add(self, result):
        if result.expected == result.actual:
            self.passed_checks[result.check] += 1
        else:
            self.failed_checks[result.check] += 1
            self.failures.append(result)

    @property
    def passed(self):
        return not self.failures


class VerificationController(views.ViewNotifier):

    def __init__(self, grid, views, jobs=1):
        super().__init__(views)
        self.grid = grid
        self.jobs = jobs
        self.score = None

    def run(self):
        cells = grid_cells(self.grid)
        self.notify_initialize(self.grid, len(cells))
        timer = utils.Timer()
        self.score = VerificationScore()
        for results in self.run_checks(cells):
            for result in results:
                self.score.add(result)
        self.notify_end(self.score, timer.stop())
        return self.score

    @utils.TimeRegister
    def run_checks(self, cells):
        return utils.map_cells(check_cell, cells, self.jobs)


class TableGenerator:
    """CSV table of dimensions over a block, rows e and columns m.

    With only_a every cell holds the first summand A(q,k) instead of the
    dimension, and the header says so.
    """
    CORNER = 'e\\m'
    A_HEADER = 'A(q,k)'

    def __init__(self, p, q, k, m=None, e=None, jobs=1, only_a=False):
        if m is not None and e is not None:
            raise ValueError('at most one of m and e can be fixed')
        self.p = p
        self.q = q
        self.k = k
        self.m = m
        self.e = e
        self.jobs = jobs
        self.only_a = only_a

    @property
    def size(self):
        return self.p ** self.q

    def cells(self):
        indices = range(1, self.size + 1)
        if self.m is not None:
            return [Cell(self.p, self.q, self.k, self.m, e) for e in indices]
        if self.e is not None:
            return [Cell(self.p, self.q, self.k, m, self.e) for m in indices]
        return [Cell(self.p, self.q, self.k, m, e) for e in indices for m in indices]

    @utils.TimeRegister
    def rows(self):
        cells = self.cells()
        # validates the fixed index before any worker starts
        if cells:
            recursion.block_data(self.p, cells[0].m, cells[0].e, self.q)
        dimensions = utils.map_cells(a_cell if self.only_a else dimension_cell, cells, self.jobs)
        indices = list(range(1, self.size + 1))
        value_header = self.A_HEADER if self.only_a else 'dim'
        if self.m is not None:
            return [['e', value_header]] + [[e, dimension] for e, dimension in zip(indices, dimensions)]
        if self.e is not None:
            return [['m', value_header]] + [[m, dimension] for m, dimension in zip(indices, dimensions)]
        rows = [[self.A_HEADER if self.only_a else self.CORNER] + indices]
        for e in indices:
            rows.append([e] + dimensions[(e - 1) * self.size:e * self.size])
        return rows

    def write(self, stream):
        write_csv(self.rows(), stream)


def write_csv(rows, stream):
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerows(rows)
