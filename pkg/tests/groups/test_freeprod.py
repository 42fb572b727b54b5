# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

import unittest

from hypothesis import given
from hypothesis import strategies as st

from gnk_braids.groups import FLetter, FWord, format_fword, freduce, is_trivial
from gnk_braids.utils.errors import FreeProductError

COMPLEMENT = (3, 4)


def bit_letters() -> st.SearchStrategy[FLetter]:
    return st.lists(st.integers(0, 1), min_size=2, max_size=2).map(
        lambda bits: FLetter.from_bits(COMPLEMENT, bits)
    )


def fwords() -> st.SearchStrategy[FWord]:
    return st.lists(bit_letters(), max_size=16).map(lambda xs: FWord.of(xs, COMPLEMENT))


class TestFLetter(unittest.TestCase):
    def test_format(self):
        self.assertEqual(str(FLetter.from_bits((1, 3, 5), (0, 1, 1))), "z(011)")
        self.assertEqual(str(FLetter.from_pairs((4, 5), ((1, 0), (0, 1)))), "z(10,01)")

    def test_bits_reduced_mod_two(self):
        self.assertEqual(FLetter.from_bits((3,), (3,)).values, ((1,),))

    def test_value_count_must_match_complement(self):
        with self.assertRaises(FreeProductError):
            FLetter((1, 2), ((0,),))

    def test_width(self):
        with self.assertRaises(FreeProductError):
            FLetter((1,), ((0, 1),), 1)
        with self.assertRaises(FreeProductError):
            FLetter((1,), ((0,),), 3)

    def test_at(self):
        letter = FLetter.from_bits((2, 5), (1, 0))
        self.assertEqual(letter.at(2), (1,))
        with self.assertRaises(FreeProductError):
            letter.at(3)


class TestFWord(unittest.TestCase):
    def test_mixed_complements(self):
        with self.assertRaises(FreeProductError):
            FWord.of([FLetter.from_bits((1,), (0,))], (2,))

    def test_identity_prints_as_one(self):
        self.assertEqual(format_fword(FWord(COMPLEMENT)), "1")

    def test_freduce_cascades(self):
        a = FLetter.from_bits(COMPLEMENT, (0, 0))
        b = FLetter.from_bits(COMPLEMENT, (1, 0))
        c = FLetter.from_bits(COMPLEMENT, (0, 1))
        w = FWord.of([a, b, c, c, b, a, c], COMPLEMENT)
        self.assertEqual(format_fword(freduce(w)), "z(01)")

    def test_alternating_word_is_reduced(self):
        a = FLetter.from_bits(COMPLEMENT, (0, 1))
        b = FLetter.from_bits(COMPLEMENT, (1, 0))
        w = FWord.of([a, b, a, b], COMPLEMENT)
        self.assertEqual(freduce(w), w)
        self.assertFalse(is_trivial(w))

    @given(fwords())
    def test_word_times_inverse_is_trivial(self, w):
        self.assertTrue(is_trivial(w + w.inverse()))

    @given(fwords())
    def test_reduced_form_has_no_adjacent_repeats(self, w):
        reduced = freduce(w)
        self.assertEqual(freduce(reduced), reduced)
        for x, y in zip(reduced.letters, reduced.letters[1:], strict=False):
            self.assertNotEqual(x, y)

    @given(fwords(), st.data())
    def test_normal_form_survives_inserted_squares(self, w, data):
        letters = list(w.letters)
        for _ in range(data.draw(st.integers(1, 5))):
            position = data.draw(st.integers(0, len(letters)))
            letter = data.draw(bit_letters())
            letters[position:position] = [letter, letter]
        padded = FWord.of(letters, COMPLEMENT)
        self.assertEqual(freduce(padded), freduce(w))

    @given(fwords(), fwords())
    def test_reduction_is_compatible_with_products(self, x, y):
        self.assertEqual(freduce(x + y), freduce(freduce(x) + freduce(y)))


if __name__ == "__main__":
    unittest.main()
