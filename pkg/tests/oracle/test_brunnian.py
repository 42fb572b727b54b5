# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

import time
import unittest

from hypothesis import given, settings
from strategies import covering_commutators

from gnk_braids.demos.worked_examples import PB6_BRUNNIAN, pb_generator, pb6_brunnian
from gnk_braids.oracle import is_brunnian, is_brunnian_async, is_brunnian_g3
from gnk_braids.utils.errors import PreconditionError
from gnk_braids.words import StrandSet, commutator, format_word, parse_word


class TestIsBrunnian(unittest.TestCase):
    def test_six_strand_commutator(self):
        beta = parse_word(PB6_BRUNNIAN, support=StrandSet.range(6))
        start = time.monotonic()
        report = is_brunnian(beta, 6)
        self.assertLess(time.monotonic() - start, 10.0)
        self.assertTrue(report.is_brunnian)
        self.assertFalse(report.word_checked)
        self.assertIsNone(report.word_trivial)
        self.assertEqual([s.strand for s in report.strands], [1, 2, 3, 4, 5, 6])
        self.assertEqual(report.failing_strands, [])

    def test_single_generator_on_two_strands(self):
        report = is_brunnian(parse_word("b(1,2)"), 2, check_word=True)
        self.assertTrue(report.is_brunnian)
        self.assertTrue(report.word_checked)
        self.assertFalse(report.word_trivial)

    def test_generator_missing_a_strand(self):
        report = is_brunnian(parse_word("b(1,2)", support=StrandSet.range(3)), 3)
        self.assertFalse(report.is_brunnian)
        self.assertEqual(report.failing_strands, [3])
        self.assertTrue(report.exact)

    def test_three_strand_commutator(self):
        beta = commutator(pb_generator(1, 2, 3), pb_generator(1, 3, 3))
        report = is_brunnian(beta, 3)
        self.assertTrue(report.is_brunnian)
        self.assertEqual(format_word(report.strands[2].deleted_word), "b(1,2) b(1,2)^-1")

    def test_trivial_word_is_brunnian(self):
        beta = parse_word("b(1,2) b(1,2)^-1", support=StrandSet.range(3))
        report = is_brunnian(beta, 3, check_word=True)
        self.assertTrue(report.is_brunnian)
        self.assertTrue(report.word_trivial)

    def test_whole_word_check_gives_up_on_long_braids(self):
        start = time.monotonic()
        report = is_brunnian(pb6_brunnian(), 6, check_word=True)
        self.assertLess(time.monotonic() - start, 30.0)
        self.assertTrue(report.is_brunnian)
        self.assertTrue(report.word_checked)
        self.assertIsNone(report.word_trivial)

    def test_whole_word_check_respects_cap(self):
        report = is_brunnian(parse_word("b(1,2)"), 2, check_word=True, max_symbols=4)
        self.assertTrue(report.word_checked)
        self.assertIsNone(report.word_trivial)

    def test_parallel_agrees_with_sequential(self):
        beta = pb6_brunnian()
        sequential = is_brunnian(beta, 6)
        parallel = is_brunnian(beta, 6, parallel=True)
        self.assertEqual(parallel.strands, sequential.strands)

    def test_preconditions(self):
        with self.assertRaises(PreconditionError):
            is_brunnian(parse_word("b(1,2)"), 3)
        with self.assertRaises(PreconditionError):
            is_brunnian(parse_word("a(1,2,3) a(1,2,3)"), 3)
        with self.assertRaises(PreconditionError):
            is_brunnian(parse_word("b(1,2)"), 1)

    @settings(max_examples=20)
    @given(covering_commutators())
    def test_covering_commutators(self, sample):
        beta, n = sample
        self.assertTrue(is_brunnian(beta, n).is_brunnian)


class TestIsBrunnianAsync(unittest.IsolatedAsyncioTestCase):
    async def test_reports_every_strand(self):
        report = await is_brunnian_async(pb6_brunnian(), 6)
        self.assertTrue(report.is_brunnian)
        self.assertEqual(len(report.strands), 6)
        self.assertIsNone(report.word_trivial)

    async def test_whole_word_check(self):
        w = parse_word("b(1,2) b(1,2)^-1")
        report = await is_brunnian_async(w, 2, check_word=True)
        self.assertTrue(report.word_trivial)

    async def test_failing_strand(self):
        w = parse_word("b(1,2) b(2,3)", support=StrandSet.range(3))
        report = await is_brunnian_async(w, 3)
        self.assertFalse(report.is_brunnian)
        self.assertEqual(report.failing_strands, [1, 3])


class TestIsBrunnianG3(unittest.TestCase):
    def test_empty_deletions(self):
        w = parse_word("a(1,2,3) a(1,2,3)")
        report = is_brunnian_g3(w)
        self.assertTrue(report.is_brunnian)
        self.assertFalse(report.exact)
        self.assertTrue(report.word_checked)
        self.assertTrue(report.word_trivial)

    def test_inconclusive(self):
        w = parse_word("a(1,2,3) a(1,2,4)")
        report = is_brunnian_g3(w)
        self.assertFalse(report.is_brunnian)
        self.assertIsNone(report.word_trivial)
        self.assertEqual(report.failing_strands, [3, 4])


if __name__ == "__main__":
    unittest.main()
