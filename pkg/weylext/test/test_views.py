import os
import tempfile
import unittest

import yaml

from weylext import controller, core, views
from weylext.controller import Cell, CheckResult, Grid
from weylext.test.utils import captured_output
from weylext.views import DebugView, QuietTextView, TextView, YAMLReportView

COLOR_RED = 'red'


def failing_score():
    score = controller.VerificationScore()
    cell = Cell(3, 1, 1, 1, 2)
    score.add(CheckResult('oracle', cell, 1, 1))
    score.add(CheckResult('duality', cell, 1, 0))
    return score


class QuietTextViewTest(unittest.TestCase):

    @staticmethod
    def get_quiet_text_view(colored_output=False):
        return QuietTextView(colored_output=colored_output)

    def test_decorate_with_color(self):
        # given
        text_view = self.get_quiet_text_view(colored_output=True)
        text = 'weyl'
        expected_colored_text = '\x1b[31mweyl\x1b[0m'
        # when
        colored_text = text_view.decorate(text, color=COLOR_RED)
        # then
        self.assertEqual(expected_colored_text, colored_text)

    def test_decorate_without_color(self):
        text_view = self.get_quiet_text_view()

        self.assertEqual(text_view.decorate('weyl', color=COLOR_RED), 'weyl')

    def test_level_print(self):
        # given
        text_view = self.get_quiet_text_view()
        # when
        with captured_output() as (out, err):
            text_view.level_print('first')
            text_view.level_print('second', 2)
        # then
        self.assertEqual(out.getvalue(), '[*] first\n   - second\n')

    def test_time_format(self):
        self.assertEqual(QuietTextView.time_format(1.5), '[1.50000 s]')
        self.assertEqual(QuietTextView.time_format(), '[    -    ]')

    def test_end_verdict(self):
        # given
        text_view = self.get_quiet_text_view()
        # when
        with captured_output() as (out, err):
            text_view.end(controller.VerificationScore(), 0.5)
            text_view.end(failing_score(), 0.5)
        # then
        self.assertEqual(out.getvalue(), '[*] Verification [0.50000 s]: PASSED\n'
                                         '[*] Verification [0.50000 s]: FAILED\n')

    def test_quiet_view_has_no_warning(self):
        # given
        notifier = views.ViewNotifier([self.get_quiet_text_view()])
        # when
        with captured_output() as (out, err):
            notifier.notify_warning('careful')
        # then
        self.assertEqual(out.getvalue(), '')
        self.assertEqual(err.getvalue(), '')


class TextViewTest(unittest.TestCase):

    @staticmethod
    def get_text_view(colored_output=False):
        return TextView(colored_output=colored_output)

    def test_warning_goes_to_stderr(self):
        # given
        text_view = self.get_text_view()
        # when
        with captured_output() as (out, err):
            text_view.warning('careful')
        # then
        self.assertEqual(out.getvalue(), '')
        self.assertEqual(err.getvalue(), '[*] Warning: careful\n')

    def test_initialize(self):
        # given
        text_view = self.get_text_view()
        # when
        with captured_output() as (out, err):
            text_view.initialize(Grid(3, 2, (0, 1, 2)), 243)
        # then
        self.assertEqual(out.getvalue(), '[*] Start verification sweep:\n'
                                         '   - p: 3, q: 2, k: 0..2\n'
                                         '   - cells: 243\n')

    def test_end_reports_first_counterexample(self):
        # given
        text_view = self.get_text_view()
        # when
        with captured_output() as (out, err):
            text_view.end(failing_score(), 0.25)
        # then
        lines = out.getvalue().splitlines()
        self.assertEqual(lines[0], '[*] Verification [0.25000 s]: FAILED')
        self.assertIn('   - oracle: 1 passed, 0 failed (ok)', lines)
        self.assertIn('   - duality: 0 passed, 1 failed (failed)', lines)
        self.assertEqual(lines[-2], '[*] First counterexample:')
        self.assertEqual(lines[-1], '   - duality at (p=3, q=1, k=1, m=1, e=2): expected 1, got 0')

    def test_invariant_violation(self):
        # given
        text_view = self.get_text_view()
        # when
        with captured_output() as (out, err):
            text_view.invariant_violation(core.InvariantViolation('broken', (1, 2)))
        # then
        self.assertEqual(err.getvalue(), '[*] Internal check failed: broken ((1, 2))\n')


class DebugViewTest(unittest.TestCase):

    def test_finish_prints_to_stderr(self):
        with captured_output() as (out, err):
            DebugView().finish()

        self.assertEqual(out.getvalue(), '')
        self.assertIn('[debug] cache', err.getvalue())


class YAMLReportViewTest(unittest.TestCase):

    def setUp(self):
        handle, self.report_path = tempfile.mkstemp(suffix='.yaml')
        os.close(handle)

    def tearDown(self):
        os.remove(self.report_path)

    def test_report(self):
        # given
        report_view = YAMLReportView(self.report_path)
        report_view.initialize(Grid(3, 1, (1,)), 9)
        # when
        report_view.end(failing_score(), 0.25)
        # then
        with open(self.report_path) as report_file:
            report = yaml.safe_load(report_file)
        self.assertEqual(report['grid'], {'p': 3, 'q': 1, 'k': [1]})
        self.assertEqual(report['number_of_cells'], 9)
        self.assertFalse(report['passed'])
        self.assertEqual(report['checks']['duality'], {'passed': 0, 'failed': 1})
        self.assertEqual(report['counterexamples'], [{
            'check': 'duality',
            'cell': {'p': 3, 'q': 1, 'k': 1, 'm': 1, 'e': 2},
            'expected': 1,
            'actual': 0,
        }])


class FormatRangeTest(unittest.TestCase):

    def test_format_range(self):
        self.assertEqual(views.format_range([0, 1, 2, 3]), '0..3')
        self.assertEqual(views.format_range([1, 4]), '1, 4')
        self.assertEqual(views.format_range([5]), '5')
