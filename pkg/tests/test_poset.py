"""
Tests for operation orders, down-set lattices and Hasse emitters
"""

import json

import networkx as nx
import numpy as np
import pytest

from kuratowski.algebra.parser import parse_term
from kuratowski.algebra.terms import C, K, g
from kuratowski.exceptions import NotAntisymmetricError
from kuratowski.lattice.downsets import hereditary_subsets
from kuratowski.lattice.emitters import DotEmitter, JsonEmitter, MarkdownEmitter, emit_hasse, output_path
from kuratowski.lattice.figures import FigureTemplates, hasse_family
from kuratowski.lattice.poset import OperationPoset, build_order, hasse_from_leq, order_isomorphism


def poset_from_covers(labels, covers):
    """Order given by its covering pairs, without any evaluation"""
    graph = nx.DiGraph()
    graph.add_nodes_from(labels)
    graph.add_edges_from(covers)
    size = len(labels)
    leq = np.eye(size, dtype=bool)
    for a, lower in enumerate(labels):
        for b, upper in enumerate(labels):
            if nx.has_path(graph, lower, upper):
                leq[a, b] = True
    return OperationPoset(
        elements=[parse_term(label) for label in labels],
        leq=leq,
        hasse=hasse_from_leq(leq),
        labels=list(labels),
    )


@pytest.fixture
def ki7_poset():
    template = FigureTemplates.ki7()
    return poset_from_covers(template.labels, template.covers)


@pytest.fixture
def kimeet13_poset():
    template = FigureTemplates.kimeet13()
    return poset_from_covers(template.labels, template.covers)


class TestBuildOrder:
    """Test ordering terms by evaluation"""

    def test_ki7_small_bound(self):
        """Test the seven words give eight covers on spaces up to 3 points"""
        template = FigureTemplates.ki7()
        poset = build_order(template.terms, 3, labels=template.labels)
        assert poset.covers_by_label() == template.covers

    @pytest.mark.slow
    def test_ki7_default_bound(self):
        """Test the seven words at the default bound"""
        poset = hasse_family("ki7")
        assert poset.covers_by_label() == FigureTemplates.ki7().covers
        assert len(poset.hasse) == 8

    @pytest.mark.slow
    def test_kimeet13(self):
        """Test the thirteen meets give nineteen covers"""
        template = FigureTemplates.kimeet13()
        poset = hasse_family("kimeet13")
        assert poset.covers_by_label() == template.covers
        assert len(poset.hasse) == 19

    def test_extremes(self, ki7_poset):
        """Test i is the bottom and k the top"""
        assert [ki7_poset.labels[x] for x in ki7_poset.minimal()] == ["i"]
        assert [ki7_poset.labels[x] for x in ki7_poset.maximal()] == ["k"]

    def test_antichain(self):
        """Test I and cI are incomparable"""
        poset = build_order([g(1), C(g(1))], 2)
        assert poset.hasse == []
        assert poset.labels == ["I", "c"]

    def test_equal_terms_rejected(self):
        """Test kk and k collapse to one element"""
        with pytest.raises(NotAntisymmetricError) as info:
            build_order([K(K(g(1))), K(g(1))], 3)
        assert info.value.pair == ("kk", "k")

    def test_unknown_family(self):
        """Test asking for a missing family"""
        with pytest.raises(ValueError, match="Unknown family"):
            hasse_family("ki99")


class TestDownSets:
    """Test the hereditary subsets of a poset"""

    def test_ki7_has_fourteen(self, ki7_poset):
        """Test the seven-element order has fourteen down-sets"""
        lattice = hereditary_subsets(ki7_poset)
        assert lattice.total_count == 14
        assert lattice.nonempty_count == 13

    def test_single_element(self):
        """Test a one-element poset"""
        poset = build_order([g(1)], 1)
        lattice = hereditary_subsets(poset)
        assert lattice.total_count == 2
        assert lattice.nonempty_count == 1

    def test_two_antichain(self):
        """Test an antichain of two gives three nonempty down-sets"""
        lattice = hereditary_subsets(build_order([g(1), C(g(1))], 2))
        assert lattice.nonempty_count == 3
        assert lattice.to_poset().hasse == [(2, 0), (2, 1)]

    def test_every_element_is_a_down_set(self, ki7_poset):
        """Test each mask is closed downward"""
        lattice = hereditary_subsets(ki7_poset)
        for mask in lattice.elements:
            for x in lattice.members(mask):
                for y in range(len(ki7_poset)):
                    if ki7_poset.leq[y, x]:
                        assert mask >> y & 1

    def test_lattice_operations(self, ki7_poset):
        """Test union and intersection stay inside the lattice"""
        lattice = hereditary_subsets(ki7_poset)
        masks = set(lattice.elements)
        for a in masks:
            for b in masks:
                assert lattice.meet(a, b) in masks
                assert lattice.join(a, b) in masks

    def test_reverse_inclusion_matches_meets(self, ki7_poset, kimeet13_poset):
        """Test the nonempty down-sets, reversed, are the thirteen meets"""
        reversed_order = hereditary_subsets(ki7_poset).to_poset()
        assert sorted(reversed_order.labels) == sorted(kimeet13_poset.labels)
        assert reversed_order.covers_by_label() == FigureTemplates.kimeet13().covers
        assert order_isomorphism(reversed_order, kimeet13_poset) is not None

    def test_meet_lattice_has_thirty_five(self, kimeet13_poset):
        """Test the thirteen meets have thirty-five nonempty down-sets"""
        assert hereditary_subsets(kimeet13_poset).nonempty_count == 35

    def test_isomorphism_rejects_different_sizes(self, ki7_poset, kimeet13_poset):
        """Test posets of different size are not isomorphic"""
        assert order_isomorphism(ki7_poset, kimeet13_poset) is None


class TestEmitters:
    """Test Hasse diagram output"""

    def test_dot(self, ki7_poset):
        """Test the DOT digraph"""
        text = DotEmitter().emit(ki7_poset)
        lines = text.splitlines()
        assert lines[0] == "digraph hasse {"
        assert "  rankdir=BT;" in lines
        assert sum(1 for line in lines if "[label=" in line) == 7
        assert sum(1 for line in lines if "->" in line) == 8
        assert lines[-1] == "}"

    def test_json(self, kimeet13_poset):
        """Test the JSON node and cover lists"""
        data = json.loads(JsonEmitter().emit(kimeet13_poset))
        assert len(data["nodes"]) == 13
        assert len(data["covers"]) == 19

    def test_markdown(self):
        """Test the markdown table"""
        poset = build_order([g(1)], 1)
        lines = MarkdownEmitter().emit(poset).splitlines()
        assert lines == ["| # | element | covered by |", "|---|---|---|", "| 0 | `I` | - |"]

    def test_deterministic(self, ki7_poset):
        """Test repeated output is identical"""
        assert emit_hasse(ki7_poset, "dot") == emit_hasse(ki7_poset, "dot")

    def test_unknown_format(self, ki7_poset):
        """Test an unknown format name"""
        with pytest.raises(ValueError, match="Unknown format"):
            emit_hasse(ki7_poset, "svg")

    @pytest.mark.parametrize(
        "given, fmt, expected",
        [
            ("hasse", "dot", "hasse.dot"),
            ("hasse", "json", "hasse.json"),
            ("hasse", "md", "hasse.md"),
            ("hasse.txt", "md", "hasse.txt"),
        ],
    )
    def test_output_path(self, tmp_path, given, fmt, expected):
        """Test a bare name gets the format's suffix and an explicit one is kept"""
        assert output_path(tmp_path / given, fmt) == tmp_path / expected


class TestFourteenOrder:
    """Test the order on all fourteen unary operations"""

    @pytest.mark.slow
    def test_two_copies(self):
        """Test complementation splits the order into two components"""
        template = FigureTemplates.kic14()
        poset = build_order(template.terms, 5, labels=template.labels)
        components = list(nx.weakly_connected_components(poset.graph()))
        assert len(components) == 2
        assert sorted(len(component) for component in components) == [7, 7]
        assert len(poset.hasse) == 16
