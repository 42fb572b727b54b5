# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

import unittest

from hypothesis import given
from hypothesis import strategies as st
from strategies import braid_words, good_condition_words, index_sets, letters

from gnk_braids.demos.worked_examples import G2_SQUARE, g52_commutator
from gnk_braids.groups import format_fword, freduce
from gnk_braids.invariants import mn_w2, mn_w3
from gnk_braids.maps import phi
from gnk_braids.utils.errors import PreconditionError
from gnk_braids.words import LetterKind, concat, parse_word


class TestMNW2(unittest.TestCase):
    def setUp(self):
        self.square = parse_word(G2_SQUARE)

    def test_crossing_values(self):
        self.assertEqual(format_fword(mn_w2(self.square, 1, 3)), "z(11) z(10)")

    def test_reduces_to_identity(self):
        self.assertEqual(format_fword(mn_w2(self.square, 1, 2, reduced=False)), "z(00) z(00)")
        self.assertEqual(format_fword(mn_w2(self.square, 1, 2)), "1")

    def test_label_order_is_irrelevant(self):
        self.assertEqual(mn_w2(self.square, 3, 1), mn_w2(self.square, 1, 3))

    def test_commutator_has_trivial_invariant(self):
        self.assertEqual(format_fword(mn_w2(g52_commutator(), 1, 2)), "1")

    def test_needs_good_condition(self):
        with self.assertRaises(PreconditionError):
            mn_w2(parse_word("a(1,2) a(1,3) a(1,2)"), 1, 2)

    def test_bad_labels(self):
        with self.assertRaises(PreconditionError):
            mn_w2(self.square, 1, 1)
        with self.assertRaises(PreconditionError):
            mn_w2(self.square, 1, 5)

    def test_wrong_alphabet(self):
        with self.assertRaises(PreconditionError):
            mn_w2(parse_word("a(1,2,3) a(1,2,3)"), 1, 2)

    @given(good_condition_words(LetterKind.G2), st.data())
    def test_one_letter_per_crossing(self, w, data):
        i, j = data.draw(index_sets(len(w.support), 2))
        value = mn_w2(w, i, j, reduced=False)
        pair = tuple(sorted((i, j)))
        self.assertEqual(len(value), sum(1 for x in w if x.indices == pair))
        self.assertEqual(value.complement, w.support.complement(pair))


class TestMNW3(unittest.TestCase):
    def test_pair_values(self):
        w = parse_word("a(1,2,3) a(1,2,4) a(1,2,3) a(1,2,4)")
        self.assertEqual(format_fword(mn_w3(w, 1, 2, 3)), "z(00) z(11)")
        self.assertEqual(format_fword(mn_w3(w, 1, 2, 4)), "z(11) z(00)")

    def test_absent_triple(self):
        w = parse_word("strands: 1,2,3,4\na(1,2,3) a(1,2,3)")
        self.assertEqual(format_fword(mn_w3(w, 2, 3, 4, reduced=False)), "1")
        self.assertEqual(format_fword(mn_w3(w, 1, 2, 3, reduced=False)), "z(00) z(00)")

    def test_needs_good_condition(self):
        with self.assertRaises(PreconditionError):
            mn_w3(parse_word("a(1,2,3) a(1,2,4)"), 1, 2, 3)

    @given(braid_words(max_n=5, max_size=6), st.data())
    def test_multiplicative_on_braid_images(self, u, data):
        n = len(u.support)
        v = u.with_letters(data.draw(st.lists(letters(LetterKind.PB, n), max_size=6)))
        i, j, k = data.draw(index_sets(n, 3))
        x, y = phi(u, n, reduce=False), phi(v, n, reduce=False)
        self.assertEqual(
            mn_w3(concat(x, y), i, j, k),
            freduce(mn_w3(x, i, j, k) + mn_w3(y, i, j, k)),
        )


if __name__ == "__main__":
    unittest.main()
