from collections import Counter
from itertools import product

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dbtorus import (
    Alphabet,
    AlternatingSequence,
    EdgeCycle,
    InvalidCycle,
    InvalidInput,
    InvalidOrder,
    NotEulerian,
    build_alternating_graph,
    build_debruijn_graph,
    eulerian_cycle,
    generate_debruijn_sequence,
    glue_cycle,
    hamiltonian_cycle_alternating,
    is_debruijn_sequence,
    verify_alternating,
)
from dbtorus.graphs import (
    Digraph,
    Edge,
    alternating_words,
    is_eulerian_cycle,
    is_hamiltonian_cycle,
    line_digraph_matches_next_order,
    tensor_map_is_isomorphism,
)

from fixtures import ALT_ORDER3, ALT_ORDER5, ECYCLE_ORDER3, FIG2_CYCLE

AB = Alphabet(("a", "b"))
B01 = Alphabet(("0", "1"))


def alphabet(k, base="abcd"):
    return Alphabet(tuple(base[:k]))


def alt(text, a=AB, b=B01, order=None):
    return AlternatingSequence(tuple(text), a, b, order)


class TestCounts:
    @pytest.mark.parametrize("na,nb,n", list(product([1, 2, 3], [1, 2, 3], [0, 1, 2])))
    def test_sizes_and_degrees(self, na, nb, n):
        g = build_alternating_graph(alphabet(na), alphabet(nb, "012"), 2 * n + 1)
        assert len(g.vertices) == na ** (n + 1) * nb**n
        assert len(g.edges) == na ** (n + 2) * nb ** (n + 1)
        assert all(g.in_degree(v) == g.out_degree(v) == na * nb for v in range(len(g.vertices)))

    def test_order_one_is_multigraph(self):
        g = build_alternating_graph(Alphabet(("x", "y")), AB, 1)
        arcs = Counter((e.tail, e.head) for e in g.edges)
        assert set(arcs.values()) == {2} and len(arcs) == 4

    def test_debruijn_graph(self):
        g = build_debruijn_graph(B01, 2)
        assert len(g.vertices) == 4 and len(g.edges) == 8
        with pytest.raises(InvalidOrder):
            build_debruijn_graph(B01, 0)

    def test_even_order_rejected(self):
        with pytest.raises(InvalidOrder):
            build_alternating_graph(AB, B01, 2)
        with pytest.raises(InvalidOrder):
            alternating_words(AB, B01, 0)


class TestEulerian:
    @pytest.mark.parametrize("na,nb,n", list(product([1, 2, 3], [1, 2, 3], [0, 1, 2])))
    def test_covers_every_edge_once(self, na, nb, n):
        g = build_alternating_graph(alphabet(na), alphabet(nb, "012"), 2 * n + 1)
        c = eulerian_cycle(g)
        assert is_eulerian_cycle(g, c)

    def test_deterministic(self):
        g = build_alternating_graph(AB, B01, 3)
        assert eulerian_cycle(g) == eulerian_cycle(build_alternating_graph(AB, B01, 3))

    def test_networkx_agrees_on_existence(self):
        g = build_alternating_graph(AB, B01, 3)
        m = nx.MultiDiGraph()
        m.add_edges_from((e.tail, e.head) for e in g.edges)
        assert nx.is_eulerian(m)

    def test_unbalanced(self):
        g = Digraph(["u", "v"], [Edge(0, 1, "e")])
        with pytest.raises(NotEulerian):
            eulerian_cycle(g)

    def test_disconnected(self):
        g = Digraph(["u", "v"], [Edge(0, 0, "p"), Edge(1, 1, "q")])
        with pytest.raises(NotEulerian):
            eulerian_cycle(g)

    def test_no_edges(self):
        with pytest.raises(NotEulerian):
            eulerian_cycle(Digraph(["u"], []))

    def test_single_loop(self):
        g = build_alternating_graph(Alphabet(("a",)), Alphabet(("0",)), 1)
        d = glue_cycle(eulerian_cycle(g), g)
        assert "".join(d.symbols) == "a0" and verify_alternating(d, 3)

    def test_bad_cycle(self):
        g = build_alternating_graph(AB, B01, 1)
        with pytest.raises(InvalidCycle):
            EdgeCycle(()).check(g)
        with pytest.raises(InvalidCycle):
            EdgeCycle((99,)).check(g)
        broken = next(k for k, e in enumerate(g.edges) if e.head != e.tail)
        with pytest.raises(InvalidCycle):
            glue_cycle(EdgeCycle((broken,)), g)
        assert not is_eulerian_cycle(g, EdgeCycle((broken,)))


class TestGlue:
    def test_printed_order_five_sequence_from_printed_cycle(self):
        g = build_alternating_graph(AB, B01, 3)
        labels = g.edge_label_index()
        walk = [tuple(v) for v in ECYCLE_ORDER3]
        assert walk[0] == walk[-1] and len(walk) == 33
        edges = tuple(labels[u + v[-2:]] for u, v in zip(walk, walk[1:]))
        c = EdgeCycle(edges)
        assert is_eulerian_cycle(g, c)
        d = glue_cycle(c, g)
        assert "".join(d.symbols) == ALT_ORDER5
        assert verify_alternating(d)

    def test_printed_order_three_sequence_from_figure_cycle(self):
        xy = Alphabet(("x", "y"))
        g = build_alternating_graph(xy, AB, 1)
        # parallel edges carry distinct labels, so the listed triples pick edges
        labels = g.edge_label_index()
        c = EdgeCycle(tuple(labels[t] for t in FIG2_CYCLE))
        d = glue_cycle(c, g)
        rename = str.maketrans("xyab", "ab01")
        assert "".join(d.symbols).translate(rename) == ALT_ORDER3

    def test_needs_alternating_graph(self):
        g = build_debruijn_graph(B01, 2)
        with pytest.raises(InvalidInput):
            glue_cycle(eulerian_cycle(g), g)

    @given(st.integers(1, 3), st.integers(1, 3), st.integers(0, 2))
    @settings(max_examples=20, deadline=None)
    def test_glued_length_and_validity(self, na, nb, n):
        g = build_alternating_graph(alphabet(na), alphabet(nb, "012"), 2 * n + 1)
        d = glue_cycle(eulerian_cycle(g), g)
        assert len(d) == 2 * na ** (n + 2) * nb ** (n + 1)
        words = d.words_at_even_offsets(2 * n + 3)
        assert sorted(words) == sorted(e.label for e in g.edges)


class TestVerifyAlternating:
    def test_printed_sequences(self):
        assert verify_alternating(alt(ALT_ORDER3), 3)
        assert verify_alternating(alt(ALT_ORDER5), 5)

    def test_wrong_order(self):
        assert not verify_alternating(alt(ALT_ORDER3), 5)
        assert not verify_alternating(alt(ALT_ORDER3), 2)
        with pytest.raises(InvalidOrder):
            verify_alternating(alt(ALT_ORDER3))

    @pytest.mark.parametrize("text,order", [(ALT_ORDER3, 3), (ALT_ORDER5, 5)])
    def test_every_single_mutation_fails(self, text, order):
        for i, ch in enumerate(text):
            pool = "ab" if i % 2 == 0 else "01"
            for other in pool.replace(ch, ""):
                mutated = text[:i] + other + text[i + 1 :]
                assert not verify_alternating(alt(mutated), order)

    def test_b_started_words_may_repeat(self):
        words = alt(ALT_ORDER3).symbols
        odd = [tuple(words[(i + k) % 16] for k in range(3)) for i in range(1, 16, 2)]
        assert len(set(odd)) < len(odd)

    def test_rejects_bad_shape(self):
        with pytest.raises(InvalidInput):
            alt("a0a")
        with pytest.raises(InvalidInput):
            alt("0a0a")

    @given(st.lists(st.tuples(st.sampled_from("ab"), st.sampled_from("01")), min_size=8, max_size=8))
    def test_matches_counting_oracle(self, pairs):
        text = "".join(x + y for x, y in pairs)
        counts = Counter(
            "".join(text[(i + k) % 16] for k in range(3)) for i in range(0, 16, 2)
        )
        every = {"".join(w) for w in product("ab", "01", "ab")}
        expected = set(counts) == every and set(counts.values()) == {1}
        assert verify_alternating(alt(text), 3) == expected


class TestDeBruijnSequence:
    def test_binary_order_three_classes(self):
        found = set()
        for bits in product("01", repeat=8):
            s = "".join(bits)
            windows = {(s + s)[i : i + 3] for i in range(8)}
            if len(windows) == 8:
                found.add(min(s[i:] + s[:i] for i in range(8)))
        assert len(found) == 2
        g = "".join(generate_debruijn_sequence(B01, 3).symbols)
        assert min(g[i:] + g[:i] for i in range(8)) in found

    @pytest.mark.parametrize("k,n", [(1, 1), (2, 1), (2, 4), (3, 2), (3, 3), (4, 2)])
    def test_generated_sequences(self, k, n):
        a = alphabet(k)
        s = generate_debruijn_sequence(a, n)
        assert len(s) == k**n and is_debruijn_sequence(s, n)

    def test_order_must_be_positive(self):
        with pytest.raises(InvalidOrder):
            generate_debruijn_sequence(B01, 0)


def _nx_digraph(g):
    d = nx.DiGraph()
    d.add_nodes_from(g.vertices)
    d.add_edges_from((g.vertices[e.tail], g.vertices[e.head]) for e in g.edges)
    return d


class TestStructure:
    GRID = list(product([1, 2, 3], [1, 2, 3], [0, 1, 2]))

    @pytest.mark.parametrize("na,nb,n", GRID)
    def test_tensor_map(self, na, nb, n):
        assert tensor_map_is_isomorphism(alphabet(na), alphabet(nb, "012"), n)

    @pytest.mark.parametrize("na,nb,n", GRID)
    def test_line_digraph(self, na, nb, n):
        assert line_digraph_matches_next_order(alphabet(na), alphabet(nb, "012"), n)

    @pytest.mark.parametrize("na,nb,n", [(2, 2, 1), (3, 2, 1), (2, 3, 2)])
    def test_tensor_against_networkx(self, na, nb, n):
        a, b = alphabet(na), alphabet(nb, "012")
        prod = nx.tensor_product(
            _nx_digraph(build_debruijn_graph(a, n + 1)),
            _nx_digraph(build_debruijn_graph(b, n)),
        )
        g = build_alternating_graph(a, b, 2 * n + 1)
        mapped = {((u[0::2], u[1::2]), (v[0::2], v[1::2])) for u, v in _nx_digraph(g).edges}
        assert mapped == set(prod.edges)
        assert {(v[0::2], v[1::2]) for v in g.vertices} == set(prod.nodes)

    @pytest.mark.parametrize("na,nb,n", [(2, 2, 1), (3, 2, 1), (2, 2, 2)])
    def test_line_digraph_against_networkx(self, na, nb, n):
        a, b = alphabet(na), alphabet(nb, "012")
        lg = nx.line_graph(_nx_digraph(build_alternating_graph(a, b, 2 * n + 1)))
        renamed = {(u[0] + u[1][-2:], v[0] + v[1][-2:]) for u, v in lg.edges}
        nxt = _nx_digraph(build_alternating_graph(a, b, 2 * n + 3))
        assert renamed == set(nxt.edges)

    @pytest.mark.parametrize("na,nb,order", [(3, 2, 1), (1, 1, 3), (2, 2, 3), (2, 2, 5), (3, 2, 5), (2, 3, 7)])
    def test_hamiltonian(self, na, nb, order):
        a, b = alphabet(na), alphabet(nb, "012")
        g = build_alternating_graph(a, b, order)
        cyc = hamiltonian_cycle_alternating(a, b, order)
        assert is_hamiltonian_cycle(g, cyc)
        assert len(cyc) == len(set(cyc)) == len(g.vertices)

    def test_hamiltonian_order(self):
        with pytest.raises(InvalidOrder):
            hamiltonian_cycle_alternating(AB, B01, 4)

    def test_not_hamiltonian(self):
        g = build_alternating_graph(AB, B01, 3)
        assert not is_hamiltonian_cycle(g, list(g.vertices))


def test_dump_format():
    g = build_alternating_graph(Alphabet(("x", "y")), AB, 1)
    lines = g.dump().splitlines()
    assert len(lines) == 8
    assert lines[0] == "x\tx\txax"
    assert all(len(line.split("\t")) == 3 for line in lines)
