"""
Tests for terms, evaluation, duality and the term parser
"""

import pytest

from kuratowski.algebra.parser import format_term, parse_term
from kuratowski.algebra.terms import (
    C,
    Generator,
    Iop,
    Join,
    K,
    Meet,
    dual,
    evaluate,
    g,
    join_all,
    meet_all,
    term_to_word,
    word_to_term,
)
from kuratowski.core.topology import PointSet, complement
from kuratowski.exceptions import ArityError, TermSyntaxError
from kuratowski.saturation.infinite import evens, odds

from .conftest import points


class TestTermStructure:
    """Test term construction, size and ordering"""

    def test_size(self):
        """Test size counts every node"""
        assert g(1).size == 1
        assert K(Meet(g(1), Iop(g(1)))).size == 5

    def test_order_by_size_then_kind(self):
        """Test smaller terms come first and kinds break ties"""
        ordered = sorted([Meet(g(1), g(1)), C(g(1)), Iop(g(1)), K(g(1)), g(2), g(1)])
        assert ordered == [g(1), g(2), K(g(1)), Iop(g(1)), C(g(1)), Meet(g(1), g(1))]

    def test_generator_count(self):
        """Test the highest generator index is reported"""
        assert Join(g(1), K(g(3))).generator_count == 3

    def test_words(self):
        """Test words map to unary chains and back"""
        term = word_to_term("ik")
        assert term == Iop(K(g(1)))
        assert term_to_word(term) == "ik"
        assert term_to_word(K(g(2))) is None
        assert term_to_word(Meet(g(1), g(1))) is None

    def test_meet_all_left_associates(self):
        """Test folding several terms"""
        assert meet_all([g(1), g(2), g(3)]) == Meet(Meet(g(1), g(2)), g(3))
        assert join_all([g(1)]) == g(1)


class TestEvaluation:
    """Test evaluating terms on spaces"""

    def test_prefix_space_values(self, prefix10):
        """Test closure and interior of the even points"""
        e = evens(10)
        o = odds(10)
        assert evaluate(K(g(1)), prefix10, [e]).points() == list(range(2, 11))
        assert evaluate(Iop(g(1)), prefix10, [e]).points() == []
        assert evaluate(Iop(K(g(1))), prefix10, [o]).points() == list(range(1, 11))

    def test_two_generators(self, vee):
        """Test generators bind in order"""
        a = points(vee, 1)
        b = points(vee, 3)
        assert evaluate(Meet(K(g(1)), K(g(2))), vee, [a, b]).points() == [2]
        assert evaluate(K(Meet(g(1), g(2))), vee, [a, b]).points() == []

    def test_boundary(self, vee):
        """Test k ^ kc is the closure minus the interior"""
        boundary = parse_term("k ^ kc")
        for bits in range(8):
            a = PointSet(bits, 3)
            expected = evaluate(K(g(1)), vee, [a]).bits & ~evaluate(Iop(g(1)), vee, [a]).bits
            assert evaluate(boundary, vee, [a]).bits == expected

    def test_unused_generators_allowed(self, sierpinski):
        """Test extra assigned sets are ignored"""
        a = points(sierpinski, 1)
        assert evaluate(C(g(1)), sierpinski, [a, a]).points() == [2]


class TestDuality:
    """Test the dual of a term"""

    def test_swaps_operations(self):
        """Test k and i, meet and join are exchanged"""
        assert dual(K(Meet(g(1), C(g(2))))) == Iop(Join(g(1), C(g(2))))

    def test_involution(self):
        """Test dual of dual is the term itself"""
        term = parse_term("k(g1 ^ i c g2) v g1")
        assert dual(dual(term)) == term

    def test_complement_law(self, vee):
        """Test dual(t)(A) is the complement of t(cA)"""
        term = parse_term("k(g1 ^ i k g1) v c g1")
        for bits in range(8):
            a = PointSet(bits, 3)
            lhs = evaluate(dual(term), vee, [a])
            rhs = complement(vee, evaluate(term, vee, [complement(vee, a)]))
            assert lhs == rhs


class TestParser:
    """Test parsing and printing terms"""

    def test_precedence(self):
        """Test meet binds tighter than join"""
        assert parse_term("g1 ^ g2 v g3") == Join(Meet(g(1), g(2)), g(3))
        assert parse_term("g1 v g2 ^ g3") == Join(g(1), Meet(g(2), g(3)))

    def test_unary_chain(self):
        """Test unary letters stack to the right"""
        assert parse_term("k(g1 ^ i k g1)") == K(Meet(g(1), Iop(K(g(1)))))

    def test_bare_words(self):
        """Test a bare word applies to g1 and I is g1"""
        assert parse_term("kik") == K(Iop(K(g(1))))
        assert parse_term("I ^ ki") == Meet(g(1), K(Iop(g(1))))
        assert parse_term("k") == K(g(1))

    def test_format(self):
        """Test printing uses minimal parentheses"""
        assert format_term(K(Meet(g(1), Iop(K(g(1)))))) == "k(g1 ^ i k g1)"
        assert format_term(Meet(g(1), Meet(g(2), g(3)))) == "g1 ^ (g2 ^ g3)"
        assert format_term(Meet(Join(g(1), g(2)), g(3))) == "(g1 v g2) ^ g3"
        assert format_term(Join(Meet(g(1), g(2)), g(3))) == "g1 ^ g2 v g3"

    def test_compact_format(self):
        """Test compact printing writes words over g1"""
        assert format_term(K(Meet(g(1), Iop(K(g(1))))), compact=True) == "k(I ^ ik)"
        assert format_term(g(1), compact=True) == "I"
        assert format_term(K(g(2)), compact=True) == "k g2"

    @pytest.mark.parametrize(
        "text",
        ["g1", "c g2", "k(g1 ^ i k g1)", "(g1 v g2) ^ g3", "g1 ^ (g2 ^ g3)", "i(k g1 v c k g2) ^ g1"],
    )
    def test_round_trip(self, text):
        """Test printing a parsed term gives the same text"""
        assert format_term(parse_term(text)) == text

    def test_str_uses_format(self):
        """Test str of a term"""
        assert str(C(K(g(1)))) == "c k g1"

    @pytest.mark.parametrize(
        "text, position",
        [
            ("g1 ^", 4),
            ("k(g1", 4),
            ("g1 $ g2", 3),
            ("g0", 0),
            ("g1 g2", 3),
            ("", 0),
            ("^ g1", 0),
        ],
    )
    def test_errors_report_position(self, text, position):
        """Test syntax errors carry the offending position"""
        with pytest.raises(TermSyntaxError) as info:
            parse_term(text)
        assert info.value.position == position


class TestGenerator:
    """Test generator validation"""

    def test_zero_index_rejected(self):
        """Test generators start at 1"""
        with pytest.raises(ArityError):
            Generator(0)

    def test_missing_assignment(self, sierpinski):
        """Test evaluating g2 with one set fails"""
        with pytest.raises(ArityError):
            evaluate(g(2), sierpinski, [points(sierpinski, 1)])
