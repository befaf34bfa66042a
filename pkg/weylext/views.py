import sys
import traceback

import termcolor
import yaml

from weylext import utils


class ViewNotifier:
    PREFIX = 'notify_'

    def __init__(self, views):
        self.views = views

    def notify_all_views(self, notify, *args, **kwargs):
        for views in self.views:
            if hasattr(views, notify):
                attr = getattr(views, notify)
                attr(*args, **kwargs)

    def __getattr__(self, name):
        if name.startswith(ViewNotifier.PREFIX):
            notify = name[len(ViewNotifier.PREFIX):]
            return lambda *args, **kwargs: self.notify_all_views(notify, *args, **kwargs)
        else:
            raise AttributeError(name)


class QuietTextView:

    def __init__(self, colored_output=False):
        self.colored_output = colored_output

    def end(self, score, duration):
        if score.passed:
            verdict = self.decorate('PASSED', 'green', attrs=['bold'])
        else:
            verdict = self.decorate('FAILED', 'red', attrs=['bold'])
        self.level_print('Verification {}: {}'.format(self.time_format(duration), verdict))

    def invariant_violation(self, error):
        self.level_print(self.decorate('Internal check failed: ', 'red', attrs=['bold']) + str(error),
                         stream=sys.stderr)

    def level_print(self, msg, level=1, stream=None):
        if level == 1:
            prefix = self.decorate('[*]', 'blue')
        else:
            prefix = self.decorate('   -', 'cyan')
        print('{} {}'.format(prefix, msg), file=stream or sys.stdout)

    def decorate(self, text, color=None, on_color=None, attrs=None):
        if self.colored_output:
            return termcolor.colored(text, color, on_color, attrs)
        else:
            return text

    @staticmethod
    def time_format(time=None):
        if time is None:
            return '[    -    ]'
        else:
            return '[{:.5f} s]'.format(time)


class TextView(QuietTextView):

    def warning(self, message):
        self.level_print(self.decorate('Warning: ', 'yellow', attrs=['bold']) + message, stream=sys.stderr)

    def initialize(self, grid, number_of_cells):
        self.level_print('Start verification sweep:')
        self.level_print('p: {}, q: {}, k: {}'.format(grid.p, grid.q, format_range(grid.ks)), 2)
        self.level_print('cells: {}'.format(number_of_cells), 2)

    def end(self, score, duration):
        super().end(score, duration)
        for check in score.checks:
            passed, failed = score.passed_checks[check], score.failed_checks[check]
            status = self.decorate('ok', 'green') if not failed else self.decorate('failed', 'red')
            self.level_print('{}: {} passed, {} failed ({})'.format(check, passed, failed, status), 2)
        if score.failures:
            self.level_print(self.decorate('First counterexample:', 'red', attrs=['bold']))
            self.level_print(format_failure(score.failures[0]), 2)


class DebugView:

    def invariant_violation(self, error):
        print('\n' + ''.join(traceback.format_exception(type(error), error, error.__traceback__)), file=sys.stderr)

    def finish(self):
        for name, stats in sorted(utils.Memoized.stats().items()):
            print('[debug] cache {}: {hits} hits, {misses} misses, {size}/{maxsize} entries'.format(name, **stats),
                  file=sys.stderr)
        for name, duration in sorted(utils.TimeRegister.executions.items()):
            print('[debug] time {}: {:.5f} s'.format(name, duration), file=sys.stderr)


class YAMLReportView:

    def __init__(self, file_name):
        self.file_name = file_name
        self.grid = None
        self.number_of_cells = 0

    def initialize(self, grid, number_of_cells):
        self.grid = grid
        self.number_of_cells = number_of_cells

    def end(self, score, duration):
        with open(self.file_name, 'w') as report_file:
            yaml.dump({
                'grid': {'p': self.grid.p, 'q': self.grid.q, 'k': list(self.grid.ks)},
                'number_of_cells': self.number_of_cells,
                'passed': score.passed,
                'checks': {
                    check: {'passed': score.passed_checks[check], 'failed': score.failed_checks[check]}
                    for check in score.checks
                },
                'counterexamples': [failure_to_dict(failure) for failure in score.failures],
                'total_time': duration,
                'time_stats': dict(utils.TimeRegister.executions),
                'cache_stats': utils.Memoized.stats(),
            }, report_file, default_flow_style=False)


def format_range(values):
    values = list(values)
    if len(values) > 1 and values == list(range(values[0], values[-1] + 1)):
        return '{}..{}'.format(values[0], values[-1])
    return ', '.join(str(value) for value in values)


def format_failure(failure):
    cell = failure.cell
    return '{} at (p={}, q={}, k={}, m={}, e={}): expected {}, got {}'.format(
        failure.check, cell.p, cell.q, cell.k, cell.m, cell.e, failure.expected, failure.actual)


def failure_to_dict(failure):
    return {
        'check': failure.check,
        'cell': dict(failure.cell._asdict()),
        'expected': failure.expected,
        'actual': failure.actual,
    }
