# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

import unittest

from hypothesis import given, settings
from strategies import braid_words

from gnk_braids.maps import RelabelMode, c_word, delete_strand_g3, delete_strand_pb, phi
from gnk_braids.utils.errors import PreconditionError
from gnk_braids.words import (
    StrandSet,
    concat,
    format_word,
    is_good_condition,
    parse_word,
    reduce_involutive,
    word_inverse,
)


class TestCWord(unittest.TestCase):
    def test_small_cases(self):
        self.assertEqual(format_word(c_word(3, 1, 2)), "a(1,2,3)")
        self.assertEqual(format_word(c_word(4, 2, 3)), "a(2,3,4) a(1,2,3)")
        self.assertEqual(format_word(c_word(5, 1, 3)), "a(1,3,4) a(1,3,5) a(1,2,3)")

    def test_length(self):
        for n in range(3, 8):
            for i in range(1, n):
                for j in range(i + 1, n + 1):
                    self.assertEqual(len(c_word(n, i, j)), n - 2)

    def test_bad_pair(self):
        for i, j in [(2, 2), (3, 2), (0, 2), (1, 5)]:
            with self.subTest(i=i, j=j), self.assertRaises(PreconditionError):
                c_word(4, i, j)

    def test_last_strand_deletion(self):
        for n in range(3, 8):
            for i in range(1, n):
                for j in range(i + 1, n + 1):
                    image = reduce_involutive(delete_strand_g3(c_word(n, i, j), n))
                    if j == n:
                        self.assertTrue(image.is_empty(), (n, i, j))
                    else:
                        self.assertEqual(image, c_word(n - 1, i, j), (n, i, j))

    def test_any_strand_deletion(self):
        for n in range(3, 8):
            for i in range(1, n):
                for j in range(i + 1, n + 1):
                    for m in range(1, n + 1):
                        image = delete_strand_g3(c_word(n, i, j), m, RelabelMode.COMPACT)
                        if m in (i, j):
                            self.assertTrue(image.is_empty(), (n, i, j, m))
                        else:
                            shifted = (i - (i > m), j - (j > m))
                            self.assertEqual(image, c_word(n - 1, *shifted), (n, i, j, m))


class TestPhi(unittest.TestCase):
    def test_first_generator(self):
        w = parse_word("b(1,2)", support=StrandSet.range(4))
        self.assertEqual(format_word(phi(w, 4)), "a(1,2,3) a(1,2,4) a(1,2,3) a(1,2,4)")

    def test_inverse_letter_is_reversed_image(self):
        w = parse_word("b(1,3)", support=StrandSet.range(4))
        forward = phi(w, 4, reduce=False)
        backward = phi(word_inverse(w), 4, reduce=False)
        self.assertEqual(backward.letters, tuple(reversed(forward.letters)))

    def test_nested_generator(self):
        w = parse_word("b(1,3)", support=StrandSet.range(3))
        # c_{1,2} = a(1,2,3) on both sides, c_{1,3} = a(1,2,3)
        self.assertEqual(
            format_word(phi(w, 3, reduce=False)), "a(1,2,3) a(1,2,3) a(1,2,3) a(1,2,3)"
        )
        self.assertTrue(phi(w, 3).is_empty())

    def test_support_must_be_full_range(self):
        w = parse_word("b(1,2)")
        with self.assertRaises(PreconditionError):
            phi(w, 3)
        with self.assertRaises(PreconditionError):
            phi(parse_word("a(1,2,3)"), 3)

    @given(braid_words())
    def test_image_is_in_good_condition(self, w):
        self.assertTrue(is_good_condition(phi(w, len(w.support), reduce=False)))

    @given(braid_words())
    def test_word_times_inverse(self, w):
        n = len(w.support)
        self.assertTrue(phi(concat(w, word_inverse(w)), n).is_empty())

    @settings(max_examples=200)
    @given(braid_words(max_size=12))
    def test_commutes_with_strand_deletion(self, w):
        n = len(w.support)
        image = phi(w, n)
        for m in range(1, n + 1):
            upstairs = reduce_involutive(delete_strand_g3(image, m, RelabelMode.COMPACT))
            downstairs = phi(delete_strand_pb(w, m, RelabelMode.COMPACT), n - 1)
            self.assertEqual(upstairs, downstairs, m)


if __name__ == "__main__":
    unittest.main()
