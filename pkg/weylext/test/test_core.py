import unittest

from weylext import core


class DigitsTest(unittest.TestCase):

    def test_digits_of(self):
        self.assertEqual(core.digits_of(3, 2, 1).digits, (1, 1))
        self.assertEqual(core.digits_of(3, 2, 5).digits, (2, 2))
        self.assertEqual(core.digits_of(3, 2, 9).digits, (3, 3))

    def test_digits_of_keeps_block_data(self):
        coordinates = core.digits_of(2, 3, 6)

        self.assertEqual(coordinates, core.BlockCoordinates(2, 3, 6, (2, 1, 2)))

    def test_index_of(self):
        self.assertEqual(core.index_of(3, (1, 1)), 1)
        self.assertEqual(core.index_of(3, (2, 2)), 5)
        self.assertEqual(core.index_of(2, (2, 1, 2)), 6)

    def test_round_trip(self):
        for p, q in [(2, 1), (2, 4), (3, 3), (5, 2), (7, 2)]:
            for m in range(1, p ** q + 1):
                self.assertEqual(core.index_of(p, core.digits_of(p, q, m).digits), m)

    def test_padding(self):
        for p, q in [(2, 3), (3, 2), (5, 2)]:
            for m in range(1, p ** q + 1):
                self.assertEqual(core.digits_of(p, q + 1, m).digits, (1,) + core.digits_of(p, q, m).digits)

    def test_digits_of_out_of_range(self):
        with self.assertRaises(core.RangeError):
            core.digits_of(3, 2, 10)
        with self.assertRaises(core.RangeError):
            core.digits_of(3, 2, 0)

    def test_index_of_bad_digit(self):
        with self.assertRaises(core.RangeError) as context:
            core.index_of(3, (1, 4))

        self.assertEqual(context.exception.name, 's_2')
        self.assertEqual(context.exception.value, 4)

    def test_p_below_two(self):
        with self.assertRaises(core.RangeError):
            core.digits_of(1, 2, 1)

    def test_range_error_is_value_error(self):
        self.assertTrue(issubclass(core.RangeError, ValueError))
        self.assertEqual(str(core.RangeError('m', 0, '>= 1')), 'm = 0 is out of range (expected >= 1)')


class MinimalQTest(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(core.minimal_q(3, 1, 1), 1)
        self.assertEqual(core.minimal_q(3, 5, 9), 2)
        self.assertEqual(core.minimal_q(3, 1, 10), 3)

    def test_exact_powers(self):
        for p in [2, 3, 5, 7]:
            for q in range(1, 8):
                self.assertEqual(core.minimal_q(p, 1, p ** q), q)
                self.assertEqual(core.minimal_q(p, p ** q + 1, 1), q + 1)


class WeightDeltasTest(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(core.weight_deltas((1, 1), (1, 1)), (0, 0))
        self.assertEqual(core.weight_deltas((1, 1), (3, 3)), (2, 2))
        self.assertEqual(core.weight_deltas((3, 1), (1, 3)), (-2, 2))

    def test_length_mismatch(self):
        with self.assertRaises(core.ShapeError):
            core.weight_deltas((1, 1), (1,))

    def test_reconstruction(self):
        p, q = 3, 3
        for m in range(1, p ** q + 1):
            for l in range(1, p ** q + 1):
                w = core.weight_deltas(core.digits_of(p, q, m).digits, core.digits_of(p, q, l).digits)
                self.assertEqual(sum(w_g * p ** (q - g - 1) for g, w_g in enumerate(w)), l - m)


class ParityPrefixTest(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(core.parity_prefix(3, (2, 2)), (0, 0, 0))
        self.assertEqual(core.parity_prefix(3, (1, 2)), (0, 1, 1))
        self.assertEqual(core.parity_prefix(2, (1, 0)), (0, 1, 0))

    def test_sign_independence(self):
        self.assertEqual(core.parity_prefix(5, (-3, 1, -2)), core.parity_prefix(5, (3, -1, 2)))
        self.assertEqual(core.parity_prefix(5, (-3, 1, -2)), (0, 1, 0, 0))

    def test_values_are_residues(self):
        for w in [(-1, -1, -1), (4, -4, 3), (-2, 1, 0)]:
            for p in [2, 3, 5]:
                self.assertTrue(set(core.parity_prefix(p, w)) <= {0, 1})


class DeltaDivTest(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(core.delta_div(0, 4), 1)
        self.assertEqual(core.delta_div(-4, 4), 1)
        self.assertEqual(core.delta_div(3, 4), 0)
        self.assertEqual(core.delta_div(-3, 4), 0)

    def test_bad_modulus(self):
        with self.assertRaises(core.RangeError):
            core.delta_div(3, 0)


class IntegerHelpersTest(unittest.TestCase):

    def test_ceil_div(self):
        self.assertEqual(core.ceil_div(7, 2), 4)
        self.assertEqual(core.ceil_div(-7, 2), -3)
        self.assertEqual(core.ceil_div(6, 3), 2)

    def test_trunc_div(self):
        self.assertEqual(core.trunc_div(7, 2), 3)
        self.assertEqual(core.trunc_div(-7, 2), -3)
        self.assertEqual(core.trunc_div(-1, 6), 0)

    def test_ceil_log(self):
        self.assertEqual(core.ceil_log(2, 1), 0)
        self.assertEqual(core.ceil_log(2, 13), 4)
        self.assertEqual(core.ceil_log(3, 27), 3)

    def test_reflected(self):
        self.assertTrue(core.reflected(3, (1, 2), (3, 2), 1))
        self.assertFalse(core.reflected(3, (1, 2), (2, 2), 1))
        self.assertTrue(core.reflected(3, (1, 2), (2, 2), 2))
        self.assertTrue(core.reflected(3, (1, 2), (1, 1), 3))
