# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

import unittest

from hypothesis import given
from hypothesis import strategies as st
from strategies import good_condition_words, letters, words

from gnk_braids.utils.errors import WordError
from gnk_braids.words import (
    Letter,
    LetterKind,
    StrandSet,
    Word,
    commutator,
    concat,
    conjugate,
    is_good_condition,
    parse_word,
    reduce_involutive,
    word_inverse,
)


@st.composite
def doubled_words(draw, kind: LetterKind, n: int) -> Word:
    """Each drawn letter twice, shuffled, so every generator has even count."""
    base = draw(st.lists(letters(kind, n), max_size=6))
    body = draw(st.permutations(base + base))
    return Word(kind, StrandSet.range(n), tuple(body))


class TestLetter(unittest.TestCase):
    def test_indices_are_sorted(self):
        letter = Letter(LetterKind.G3, (3, 1, 2))
        self.assertEqual(letter.indices, (1, 2, 3))

    def test_arity_mismatch(self):
        with self.assertRaises(WordError):
            Letter(LetterKind.G2, (1, 2, 3))

    def test_repeated_index(self):
        with self.assertRaises(WordError):
            Letter(LetterKind.G3, (1, 1, 2))

    def test_parity_bit_required_only_for_parity_alphabets(self):
        with self.assertRaises(WordError):
            Letter(LetterKind.PG2, (1, 2))
        with self.assertRaises(WordError):
            Letter(LetterKind.G2, (1, 2), parity=0)
        with self.assertRaises(WordError):
            Letter(LetterKind.PG3, (1, 2, 3), parity=2)

    def test_sign_required_only_for_braids(self):
        with self.assertRaises(WordError):
            Letter(LetterKind.PB, (1, 2))
        with self.assertRaises(WordError):
            Letter(LetterKind.G2, (1, 2), sign=1)

    def test_inverse(self):
        b = Letter(LetterKind.PB, (1, 2), sign=1)
        self.assertEqual(b.inverse().sign, -1)
        self.assertTrue(b.cancels(b.inverse()))
        a = Letter(LetterKind.G2, (1, 2))
        self.assertIs(a.inverse(), a)
        self.assertTrue(a.cancels(a))

    def test_parity_bits_are_distinct_generators(self):
        a0 = Letter(LetterKind.PG2, (1, 2), parity=0)
        a1 = Letter(LetterKind.PG2, (1, 2), parity=1)
        self.assertFalse(a0.cancels(a1))


class TestStrandSet(unittest.TestCase):
    def test_labels_sorted_and_validated(self):
        self.assertEqual(StrandSet((3, 1, 2)).labels, (1, 2, 3))
        with self.assertRaises(WordError):
            StrandSet(())
        with self.assertRaises(WordError):
            StrandSet((0, 1))
        with self.assertRaises(WordError):
            StrandSet((1, 1))

    def test_without_and_complement(self):
        support = StrandSet.range(5)
        self.assertEqual(support.without(3).labels, (1, 2, 4, 5))
        self.assertEqual(support.complement((2, 4)), (1, 3, 5))
        self.assertFalse(support.without(3).is_contiguous())


class TestWord(unittest.TestCase):
    def test_letter_outside_support(self):
        with self.assertRaises(WordError):
            Word(LetterKind.G2, StrandSet.range(2), (Letter(LetterKind.G2, (1, 3)),))

    def test_mixed_alphabets(self):
        with self.assertRaises(WordError):
            Word(LetterKind.G2, StrandSet.range(3), (Letter(LetterKind.G3, (1, 2, 3)),))

    def test_concat_needs_matching_support(self):
        x = parse_word("a(1,2)", support=StrandSet.range(3))
        y = parse_word("a(1,2)", support=StrandSet.range(4))
        with self.assertRaises(WordError):
            concat(x, y)

    def test_reduce_involutive_cascades(self):
        w = parse_word("a(1,2) a(1,3) a(2,3) a(2,3) a(1,3) a(1,4)")
        self.assertEqual(str(reduce_involutive(w)), "a(1,2) a(1,4)")

    def test_reduce_braid_needs_opposite_signs(self):
        w = parse_word("b(1,2) b(1,2) b(1,3) b(1,3)^-1 b(1,2)^-1")
        self.assertEqual(str(reduce_involutive(w)), "b(1,2)")

    def test_good_condition(self):
        self.assertTrue(is_good_condition(parse_word("a(1,2) a(1,3) a(1,2) a(1,3)")))
        self.assertFalse(is_good_condition(parse_word("a(1,2) a(1,3) a(1,2)")))
        self.assertFalse(is_good_condition(parse_word("a(1,2:0) a(1,2:1)")))
        self.assertTrue(is_good_condition(parse_word("b(1,2) b(1,2)^-1")))

    def test_commutator_and_conjugate(self):
        x = parse_word("b(1,2)", support=StrandSet.range(3))
        y = parse_word("b(1,3)", support=StrandSet.range(3))
        self.assertEqual(str(commutator(x, y)), "b(1,2) b(1,3) b(1,2)^-1 b(1,3)^-1")
        self.assertEqual(str(conjugate(y, x)), "b(1,2) b(1,3) b(1,2)^-1")

    @given(words(LetterKind.PB))
    def test_word_times_inverse_reduces_to_identity(self, w):
        self.assertTrue(reduce_involutive(concat(w, word_inverse(w))).is_empty())

    @given(words(LetterKind.G3))
    def test_reduction_is_idempotent(self, w):
        once = reduce_involutive(w)
        self.assertEqual(reduce_involutive(once), once)
        self.assertLessEqual(len(once), len(w))

    @given(good_condition_words(LetterKind.PG2))
    def test_reduction_preserves_good_condition(self, w):
        self.assertTrue(is_good_condition(w))
        self.assertTrue(is_good_condition(reduce_involutive(w)))


class TestGoodConditionClosure(unittest.TestCase):
    @given(st.sampled_from(list(LetterKind)), st.integers(3, 5), st.data())
    def test_closed_under_products_inverses_and_conjugation(self, kind, n, data):
        u = data.draw(doubled_words(kind, n))
        v = data.draw(doubled_words(kind, n))
        g = u.with_letters(data.draw(st.lists(letters(kind, n), max_size=5)))
        self.assertTrue(is_good_condition(u))
        self.assertTrue(is_good_condition(concat(u, v)))
        self.assertTrue(is_good_condition(word_inverse(u)))
        self.assertTrue(is_good_condition(conjugate(u, g)))

    @given(good_condition_words(LetterKind.PG3), st.data())
    def test_relation_words(self, w, data):
        g = w.with_letters(data.draw(st.lists(letters(LetterKind.PG3, len(w.support)), max_size=5)))
        self.assertTrue(is_good_condition(word_inverse(w)))
        self.assertTrue(is_good_condition(conjugate(w, g)))
        self.assertTrue(is_good_condition(concat(w, w)))


if __name__ == "__main__":
    unittest.main()
