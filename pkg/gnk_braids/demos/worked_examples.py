# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

"""Worked examples recomputed from their raw inputs through the full pipeline."""

try:
    from typing import override
except ImportError:  # Python < 3.12
    from typing_extensions import override

from ..groups.freeprod import format_fword
from ..invariants.mn import mn_w2, mn_w3
from ..invariants.parity import parity_w2, parity_w3, w2_with_deleted_strand
from ..maps.base import RelabelMode
from ..maps.deletion import delete_strand_pb, project_g3_to_g2
from ..maps.embedding import phi
from ..maps.parity import f_parity, psi
from ..oracle.artin import is_trivial_braid
from ..oracle.brunnian import is_brunnian
from ..words.base import StrandSet, Word, commutator
from ..words.parser import format_word, parse_word
from .base import Demo, DemoResult

G2_SQUARE = "a(1,2) a(3,4) a(1,3) a(3,4) a(1,3) a(1,2)"
G2_X = "a(1,2) a(1,3) a(1,2) a(1,3)"
G2_Y = "a(2,3) a(3,5) a(2,3) a(3,5)"

G53_WORD = (
    "a(1,2,4) a(1,2,3) a(1,3,5) a(1,3,4) a(1,2,4) a(1,3,4) a(1,3,5) a(1,2,3) "
    "a(1,3,4) a(1,3,5) a(1,3,4) a(1,2,3) a(1,3,5) a(1,3,4) a(1,2,4) a(1,3,4) "
    "a(1,3,5) a(1,2,3) a(1,2,4) a(1,3,4) a(1,3,5) a(1,3,4)"
)
G53_BETA1 = (
    "a(2,4) a(2,3) a(3,5) a(3,4) a(2,4) a(3,4) a(3,5) a(2,3) a(3,4) a(3,5) a(3,4) "
    "a(2,3) a(3,5) a(3,4) a(2,4) a(3,4) a(3,5) a(2,3) a(2,4) a(3,4) a(3,5) a(3,4)"
)
G53_PSI5 = (
    "a(2,4:0) a(2,3:0) a(3,4:1) a(2,4:0) a(3,4:1) a(2,3:0) a(3,4:0) a(3,4:1) "
    "a(2,3:1) a(3,4:0) a(2,4:0) a(3,4:0) a(2,3:1) a(2,4:0) a(3,4:1) a(3,4:0)"
)

PB6_BRUNNIAN = (
    "b(1,2) b(1,4) b(1,2)^-1 b(1,4)^-1 b(1,6) b(1,4) b(1,2) b(1,4)^-1 b(1,2)^-1 b(1,6)^-1 "
    "b(1,3) b(1,5) b(1,3)^-1 b(1,5)^-1 b(1,6) b(1,2) b(1,4) b(1,2)^-1 b(1,4)^-1 b(1,6)^-1 "
    "b(1,4) b(1,2) b(1,4)^-1 b(1,2)^-1 b(1,5) b(1,3) b(1,5)^-1 b(1,3)^-1"
)
# The printed w^6_24 of the PB_6 example, kept only for the discrepancy note.
PB6_PRINTED_W24 = (
    "z(00) z(01) z(11) z(00) z(01) z(11) z(00) z(01) z(00) z(01) z(11) z(01)"
)

G3_F_WORD = (
    "a(1,2,4) a(2,4,5) a(1,2,4) a(2,4,5) a(2,3,4) a(2,4,5) a(2,3,4) a(2,4,5) "
    "a(2,4,5) a(1,2,4) a(2,4,5) a(1,2,4) a(2,4,5) a(2,3,4) a(2,4,5) a(2,3,4)"
)
G3_F_IMAGE = (
    "a(1,2,4:0) a(1,2,4:1) a(2,3,4:0) a(2,3,4:1) "
    "a(1,2,4:1) a(1,2,4:0) a(2,3,4:1) a(2,3,4:0)"
)


def pb_generator(i: int, j: int, n: int) -> Word:
    return parse_word(f"b({i},{j})", support=StrandSet.range(n))


def pb6_brunnian() -> Word:
    """[[[b12, b14], b16], [b13, b15]] in PB_6, built from its generators."""
    b = {j: pb_generator(1, j, 6) for j in range(2, 7)}
    return commutator(commutator(commutator(b[2], b[4]), b[6]), commutator(b[3], b[5]))


def g52_commutator() -> Word:
    support = StrandSet.range(5)
    x = parse_word(G2_X, support=support)
    y = parse_word(G2_Y, support=support)
    return commutator(x, y)


class Psi4Demo(Demo):
    @override
    def get_name(self) -> str:
        return "psi4"

    @override
    def get_description(self) -> str:
        return "psi_4 of a(1,2) a(3,4) a(1,3) a(3,4) a(1,3) a(1,2)"

    @override
    def run(self) -> DemoResult:
        result = self.new_result()
        image = psi(parse_word(G2_SQUARE), 4)
        result.check("psi_4", "a(1,2:0) a(1,3:1) a(1,3:0) a(1,2:0)", format_word(image))
        return result


class W124Demo(Demo):
    @override
    def get_name(self) -> str:
        return "w124"

    @override
    def get_description(self) -> str:
        return "w^4_12 = w^p_12 o psi_4 of the same word is z(0) z(1)"

    @override
    def run(self) -> DemoResult:
        result = self.new_result()
        w = parse_word(G2_SQUARE)
        result.check("w^4_12", "z(0) z(1)", format_fword(w2_with_deleted_strand(w, 1, 2, 4)))
        return result


class CommutatorG52Demo(Demo):
    @override
    def get_name(self) -> str:
        return "commutator-g52"

    @override
    def get_description(self) -> str:
        return "[X,Y] in G_5^2: trivial MN-invariant, nontrivial w^5_12"

    @override
    def run(self) -> DemoResult:
        result = self.new_result()
        beta = g52_commutator()
        result.check("length of [X,Y]", "16", len(beta))
        result.check("w_(1,2)", "1", format_fword(mn_w2(beta, 1, 2)))
        result.check(
            "psi_5",
            "a(1,2:0) a(1,3:0) a(1,2:0) a(1,3:0) a(2,3:0) a(2,3:1) "
            "a(1,3:0) a(1,2:0) a(1,3:0) a(1,2:0) a(2,3:1) a(2,3:0)",
            format_word(psi(beta, 5)),
        )
        result.check(
            "w^5_12",
            "z(00) z(10) z(00) z(10)",
            format_fword(w2_with_deleted_strand(beta, 1, 2, 5)),
        )
        return result


class G53Beta1Demo(Demo):
    @override
    def get_name(self) -> str:
        return "g53-beta1"

    @override
    def get_description(self) -> str:
        return "r_1 of a 22-letter G_5^3 word, labels preserved"

    @override
    def run(self) -> DemoResult:
        result = self.new_result()
        beta1 = project_g3_to_g2(parse_word(G53_WORD), 1, RelabelMode.PRESERVE)
        result.check("r_1", G53_BETA1, format_word(beta1))
        return result


class G53Psi5Demo(Demo):
    @override
    def get_name(self) -> str:
        return "g53-psi5"

    @override
    def get_description(self) -> str:
        return "psi_5 of r_1 of the G_5^3 word"

    @override
    def run(self) -> DemoResult:
        result = self.new_result()
        beta1 = project_g3_to_g2(parse_word(G53_WORD), 1, RelabelMode.PRESERVE)
        result.check("psi_5", G53_PSI5, format_word(psi(beta1, 5)))
        return result


class G53W245Demo(Demo):
    @override
    def get_name(self) -> str:
        return "g53-w245"

    @override
    def get_description(self) -> str:
        return "w^5_24 of r_1 of the G_5^3 word is 0101, so the word is nontrivial"

    @override
    def run(self) -> DemoResult:
        result = self.new_result()
        beta1 = project_g3_to_g2(parse_word(G53_WORD), 1, RelabelMode.PRESERVE)
        parity_word = psi(beta1, 5)
        per_crossing = parity_w2(parity_word, 2, 4, reduced=False)
        result.check("i_c(3) per crossing", "z(0) z(1) z(0) z(1)", format_fword(per_crossing))
        result.check(
            "w^5_24", "z(0) z(1) z(0) z(1)", format_fword(parity_w2(parity_word, 2, 4))
        )
        return result


class BrunnianPB6Demo(Demo):
    @override
    def get_name(self) -> str:
        return "brunnian-pb6"

    @override
    def get_description(self) -> str:
        return "[[[b12,b14],b16],[b13,b15]] becomes trivial after deleting any strand of PB_6"

    @override
    def run(self) -> DemoResult:
        result = self.new_result()
        beta = parse_word(PB6_BRUNNIAN, support=StrandSet.range(6))
        result.check("commutator expansion", PB6_BRUNNIAN, format_word(pb6_brunnian()))
        report = is_brunnian(beta, 6)
        result.check("p_k trivial for k = 1..6", "True", report.is_brunnian)
        return result


class BrunnianMN3Demo(Demo):
    @override
    def get_name(self) -> str:
        return "brunnian-mn3"

    @override
    def get_description(self) -> str:
        return "w_(i,j,k) of phi_6 of the Brunnian braid is trivial for all 20 triples"

    @override
    def run(self) -> DemoResult:
        result = self.new_result()
        image = phi(pb6_brunnian(), 6)
        result.check("phi_6 letters", "296", len(image))
        nontrivial = [
            f"({i},{j},{k})"
            for i in range(1, 7)
            for j in range(i + 1, 7)
            for k in range(j + 1, 7)
            if len(mn_w3(image, i, j, k)) > 0
        ]
        result.check("nontrivial triples", "none", ", ".join(nontrivial) or "none")
        return result


class BrunnianW246Demo(Demo):
    @override
    def get_name(self) -> str:
        return "brunnian-w246"

    @override
    def get_description(self) -> str:
        return "psi_6(r_1(phi_6(beta))) and w^6_24 for the Brunnian braid"

    @override
    def run(self) -> DemoResult:
        result = self.new_result()
        beta1 = project_g3_to_g2(phi(pb6_brunnian(), 6), 1, RelabelMode.PRESERVE)
        parity_word = psi(beta1, 6)
        crossings = sum(1 for letter in parity_word if letter.indices == (2, 4))
        w24 = parity_w2(parity_word, 2, 4)
        result.check("psi_6 letters", "188", len(parity_word))
        result.check("letters of type (2,4)", "46", crossings)
        result.check("w^6_24", "1", format_fword(w24))
        result.notes.append(
            "the printed example lists 40 letters of type (2,4) and "
            f"w^6_24 = {PB6_PRINTED_W24}; its printed 158-letter psi_6 word "
            "differs from the computed 188-letter word in scattered places"
        )
        return result


class S5FDemo(Demo):
    @override
    def get_name(self) -> str:
        return "s5-f"

    @override
    def get_description(self) -> str:
        return "f with strand 5 deleted, on a 16-letter G_5^3 word"

    @override
    def run(self) -> DemoResult:
        result = self.new_result()
        image = f_parity(parse_word(G3_F_WORD), 5)
        result.check("f", G3_F_IMAGE, format_word(image))
        return result


class S5W124pDemo(Demo):
    @override
    def get_name(self) -> str:
        return "s5-w124p"

    @override
    def get_description(self) -> str:
        return "w^p_124 of f(beta), per crossing at label 3"

    @override
    def run(self) -> DemoResult:
        result = self.new_result()
        image = f_parity(parse_word(G3_F_WORD), 5)
        per_crossing = parity_w3(image, 1, 2, 4, reduced=False)
        result.check("i_c(3) per crossing", "z(0) z(0) z(1) z(1)", format_fword(per_crossing))
        result.check("w^p_124", "1", format_fword(parity_w3(image, 1, 2, 4)))
        result.notes.append(
            "the printed example lists i_c(3) = 0,0,1,0 using N^0_134 = 1 at the fourth "
            "crossing, but f(beta) has no a(1,3,4) letter"
        )
        return result


class PB3ProjectionDemo(Demo):
    @override
    def get_name(self) -> str:
        return "pb3-projection"

    @override
    def get_description(self) -> str:
        return "p_3 of [b12, b13] is b12 b12^-1, and [b12, b13] is Brunnian in PB_3"

    @override
    def run(self) -> DemoResult:
        result = self.new_result()
        beta = commutator(pb_generator(1, 2, 3), pb_generator(1, 3, 3))
        projected = delete_strand_pb(beta, 3, RelabelMode.COMPACT)
        result.check("p_3", "b(1,2) b(1,2)^-1", format_word(projected))
        result.check("p_3 trivial", "True", is_trivial_braid(projected, 2))
        result.check("Brunnian", "True", is_brunnian(beta, 3).is_brunnian)
        return result
