"""De Bruijn and alternating de Bruijn graphs, Eulerian cycles, gluing.

Graph vertices and edge labels are words: tuples of symbols. All graphs are
built in the declared alphabet order, so the Eulerian cycle found by
:func:`eulerian_cycle` (Hierholzer, smallest edge first, from vertex 0) is
reproducible run to run.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Hashable, Sequence
from dataclasses import dataclass
from itertools import product
from typing import NamedTuple

from .errors import InvalidCycle, InvalidInput, InvalidOrder, NotEulerian
from .words import Alphabet, CyclicString, Symbol, is_alternating_word

Word = tuple[Symbol, ...]


class Edge(NamedTuple):
    tail: int
    head: int
    label: Hashable


class Digraph:
    """Directed multigraph with labelled vertices and edges.

    ``alphabets`` and ``order`` are set by the constructors below so that
    :func:`glue_cycle` can recover the alternating alphabets of a cycle.
    """

    def __init__(
        self,
        vertices: Sequence[Hashable],
        edges: Sequence[Edge],
        *,
        alphabets: tuple[Alphabet, ...] = (),
        order: int | None = None,
    ):
        self.vertices = tuple(vertices)
        self.edges = tuple(Edge(*e) for e in edges)
        self.alphabets = alphabets
        self.order = order
        self._vindex = {v: i for i, v in enumerate(self.vertices)}
        if len(self._vindex) != len(self.vertices):
            raise InvalidInput("duplicate vertex labels")
        nv = len(self.vertices)
        out: list[list[int]] = [[] for _ in range(nv)]
        indeg = [0] * nv
        for k, e in enumerate(self.edges):
            if not (0 <= e.tail < nv and 0 <= e.head < nv):
                raise InvalidInput(f"edge {k} has an endpoint outside the vertex list")
            out[e.tail].append(k)
            indeg[e.head] += 1
        self._out = tuple(tuple(x) for x in out)
        self._indeg = tuple(indeg)

    def __repr__(self) -> str:
        return f"Digraph({len(self.vertices)} vertices, {len(self.edges)} edges)"

    def vertex_index(self, label: Hashable) -> int:
        return self._vindex[label]

    def out_edges(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def out_degree(self, v: int) -> int:
        return len(self._out[v])

    def in_degree(self, v: int) -> int:
        return self._indeg[v]

    def edge_label_index(self) -> dict[Hashable, int]:
        index = {e.label: k for k, e in enumerate(self.edges)}
        if len(index) != len(self.edges):
            raise InvalidInput("edge labels are not unique")
        return index

    def dump(self) -> str:
        """One ``FROM<TAB>TO<TAB>LABEL`` line per edge."""
        lines = []
        for e in self.edges:
            lines.append(
                f"{_fmt(self.vertices[e.tail])}\t{_fmt(self.vertices[e.head])}\t{_fmt(e.label)}"
            )
        return "\n".join(lines) + ("\n" if lines else "")


def _fmt(label: Hashable) -> str:
    if isinstance(label, tuple):
        if all(isinstance(x, tuple) for x in label):
            return ",".join(_fmt(x) for x in label)
        return "".join(map(str, label))
    return str(label)


@dataclass(frozen=True)
class EdgeCycle:
    """A closed walk given as edge indices into some :class:`Digraph`."""

    edges: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edges)

    def vertices(self, g: Digraph) -> list[int]:
        """Tail vertex of each edge, in walk order."""
        return [g.edges[k].tail for k in self.edges]

    def check(self, g: Digraph) -> None:
        if not self.edges:
            raise InvalidCycle("empty cycle")
        n = len(g.edges)
        for k in self.edges:
            if not 0 <= k < n:
                raise InvalidCycle(f"edge index {k} not in graph")
        for a, b in zip(self.edges, self.edges[1:] + self.edges[:1]):
            if g.edges[a].head != g.edges[b].tail:
                raise InvalidCycle(f"edge {a} does not lead into edge {b}")


@dataclass(frozen=True)
class AlternatingSequence:
    """Even-length cyclic string: ``a`` symbols at even positions, ``b`` at odd.

    ``order`` is the odd window length it is meant to be de Bruijn for, if any.
    """

    symbols: tuple[Symbol, ...]
    a: Alphabet
    b: Alphabet
    order: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if not self.symbols or len(self.symbols) % 2:
            raise InvalidInput("alternating sequence must have positive even length")
        for i, x in enumerate(self.symbols):
            if x not in (self.a if i % 2 == 0 else self.b):
                side = "A" if i % 2 == 0 else "B"
                raise InvalidInput(f"position {i}: {x!r} not in alphabet {side}")
        if self.order is not None and (self.order < 1 or self.order % 2 == 0):
            raise InvalidOrder(f"alternating order must be odd and >= 1, got {self.order}")

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return "".join(map(str, self.symbols))

    @property
    def a_letters(self) -> tuple[Symbol, ...]:
        return self.symbols[0::2]

    @property
    def b_letters(self) -> tuple[Symbol, ...]:
        return self.symbols[1::2]

    def words_at_even_offsets(self, length: int) -> list[Word]:
        """Cyclic substrings of ``length`` starting at positions 0, 2, 4, ..."""
        s = self.symbols
        n = len(s)
        return [tuple(s[(i + k) % n] for k in range(length)) for i in range(0, n, 2)]


def alternating_count(na: int, nb: int, n: int) -> int:
    """Number of alternating words of length ``2n+1``."""
    return na ** (n + 1) * nb**n


def alternating_words(a: Alphabet, b: Alphabet, order: int) -> list[Word]:
    """All alternating words of odd length ``order``, lexicographic."""
    if order < 1 or order % 2 == 0:
        raise InvalidOrder(f"alternating order must be odd and >= 1, got {order}")
    n = order // 2
    factors = [a.symbols if i % 2 == 0 else b.symbols for i in range(order)]
    words = list(product(*factors))
    assert len(words) == alternating_count(len(a), len(b), n)
    return words


def _debruijn_graph(a: Alphabet, n: int) -> Digraph:
    # n == 0 is the one-vertex bouquet of |A| loops; used internally only.
    vertices = list(a.words(n))
    index = {v: i for i, v in enumerate(vertices)}
    edges = []
    for i, u in enumerate(vertices):
        for x in a.symbols:
            label = u + (x,)
            edges.append(Edge(i, index[label[1:]], label))
    assert len(edges) == len(a) ** (n + 1)
    return Digraph(vertices, edges, alphabets=(a,), order=n)


def build_debruijn_graph(a: Alphabet, n: int) -> Digraph:
    """Vertices are the ``|A|**n`` words of length ``n``; edges the ``(n+1)``-words."""
    if n < 1:
        raise InvalidOrder(f"de Bruijn graph order must be >= 1, got {n}")
    return _debruijn_graph(a, n)


def build_alternating_graph(a: Alphabet, b: Alphabet, order: int) -> Digraph:
    """The alternating de Bruijn graph of odd ``order`` = 2n+1.

    Each edge is labelled with the alternating word of length 2n+3 obtained by
    gluing its endpoints on their shared 2n-1 symbols. For n = 0 the vertices
    are the symbols of ``a`` and ``x -> y`` carries one edge per symbol of ``b``.
    """
    if order < 1 or order % 2 == 0:
        raise InvalidOrder(f"alternating order must be odd and >= 1, got {order}")
    n = order // 2
    vertices = alternating_words(a, b, order)
    index = {v: i for i, v in enumerate(vertices)}
    edges = []
    for i, u in enumerate(vertices):
        for y in b.symbols:
            for x in a.symbols:
                label = u + (y, x)
                edges.append(Edge(i, index[label[2:]], label))
    nv, ne = len(vertices), len(edges)
    assert nv == alternating_count(len(a), len(b), n)
    assert ne == alternating_count(len(a), len(b), n + 1)
    return Digraph(vertices, edges, alphabets=(a, b), order=order)


def _is_connected_on_edges(g: Digraph) -> bool:
    parent = list(range(len(g.vertices)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in g.edges:
        ra, rb = find(e.tail), find(e.head)
        if ra != rb:
            parent[ra] = rb
    roots = {find(e.tail) for e in g.edges}
    return len(roots) <= 1


def eulerian_cycle(g: Digraph) -> EdgeCycle:
    """Closed walk through every edge once (Hierholzer).

    Starts at the first vertex carrying an edge and always takes the
    lowest-numbered unused out-edge.

    Raises:
        NotEulerian: if some vertex is unbalanced or the edges are disconnected.
    """
    if not g.edges:
        raise NotEulerian("graph has no edges")
    for v in range(len(g.vertices)):
        if g.in_degree(v) != g.out_degree(v):
            raise NotEulerian(
                f"vertex {g.vertices[v]!r}: indegree {g.in_degree(v)} != outdegree {g.out_degree(v)}"
            )
    if not _is_connected_on_edges(g):
        raise NotEulerian("edge-bearing vertices are not connected")

    start = next(v for v in range(len(g.vertices)) if g.out_degree(v))
    nxt = [0] * len(g.vertices)
    stack: list[tuple[int, int]] = [(start, -1)]
    circuit: list[int] = []
    while stack:
        v, via = stack[-1]
        out = g.out_edges(v)
        if nxt[v] < len(out):
            k = out[nxt[v]]
            nxt[v] += 1
            stack.append((g.edges[k].head, k))
        else:
            stack.pop()
            if via >= 0:
                circuit.append(via)
    circuit.reverse()
    assert len(circuit) == len(g.edges)
    return EdgeCycle(tuple(circuit))


def glue_cycle(c: EdgeCycle, g: Digraph) -> AlternatingSequence:
    """Glue the edge words of a closed walk into one cyclic alternating string.

    Consecutive edge labels overlap in all but two symbols, so the cyclic
    string is the first two symbols of each edge label in walk order. Its
    length-(order+2) substrings at even offsets are exactly the walk's edges.
    """
    if g.order is None or len(g.alphabets) != 2:
        raise InvalidInput("glue_cycle needs an alternating de Bruijn graph")
    c.check(g)
    symbols: list[Symbol] = []
    for k in c.edges:
        label = g.edges[k].label
        symbols.extend(label[:2])
    a, b = g.alphabets
    return AlternatingSequence(tuple(symbols), a, b, order=g.order + 2)


def verify_alternating(d: AlternatingSequence, order: int | None = None) -> bool:
    """True iff ``d`` is an alternating de Bruijn sequence of odd ``order``.

    Only the A-started words (even offsets) are constrained; words of the
    form B A B ... may repeat or be absent.
    """
    order = d.order if order is None else order
    if order is None:
        raise InvalidOrder("no order given and the sequence carries none")
    if order < 1 or order % 2 == 0:
        return False
    n = order // 2
    if len(d) != 2 * alternating_count(len(d.a), len(d.b), n):
        return False
    words = d.words_at_even_offsets(order)
    return len(set(words)) == len(words)


def generate_debruijn_sequence(a: Alphabet, n: int) -> CyclicString:
    """A de Bruijn sequence of order ``n`` from an Eulerian cycle of the order n-1 graph."""
    if n < 1:
        raise InvalidOrder(f"de Bruijn order must be >= 1, got {n}")
    g = _debruijn_graph(a, n - 1)
    cycle = eulerian_cycle(g)
    s = CyclicString(tuple(g.edges[k].label[0] for k in cycle.edges), a)
    assert len(s) == len(a) ** n
    return s


def tensor_product(g1: Digraph, g2: Digraph) -> Digraph:
    """Vertices ``V1 x V2``; one edge per pair of edges, labelled by the label pair."""
    n2 = len(g2.vertices)
    vertices = [(u, v) for u in g1.vertices for v in g2.vertices]
    edges = [
        Edge(e1.tail * n2 + e2.tail, e1.head * n2 + e2.head, (e1.label, e2.label))
        for e1 in g1.edges
        for e2 in g2.edges
    ]
    return Digraph(vertices, edges)


def line_digraph(g: Digraph) -> Digraph:
    """Vertices are the edges of ``g`` (by label); ``e1 -> e2`` iff head(e1) == tail(e2)."""
    vertices = [e.label for e in g.edges]
    edges = []
    for k1, e1 in enumerate(g.edges):
        for k2 in g.out_edges(e1.head):
            edges.append(Edge(k1, k2, (e1.label, g.edges[k2].label)))
    return Digraph(vertices, edges)


def tensor_map_is_isomorphism(a: Alphabet, b: Alphabet, n: int) -> bool:
    """Check the explicit map ``x1 y1 x2 ... x_{n+1} -> (x1..x_{n+1}, y1..y_n)``.

    It must biject the vertices and edges of the alternating graph of order
    2n+1 onto those of ``dB(A, n+1) (x) dB(B, n)`` and preserve incidence.
    """
    alt = build_alternating_graph(a, b, 2 * n + 1)
    prod = tensor_product(_debruijn_graph(a, n + 1), _debruijn_graph(b, n))

    def split(word: Word) -> tuple[Word, Word]:
        return word[0::2], word[1::2]

    vmap = [split(v) for v in alt.vertices]
    if len(set(vmap)) != len(vmap) or set(vmap) != set(prod.vertices):
        return False
    prod_edges = prod.edge_label_index()
    seen = set()
    for e in alt.edges:
        image = split(e.label)
        k = prod_edges.get(image)
        if k is None or k in seen:
            return False
        seen.add(k)
        pe = prod.edges[k]
        if prod.vertices[pe.tail] != vmap[e.tail] or prod.vertices[pe.head] != vmap[e.head]:
            return False
    return len(seen) == len(prod.edges)


def line_digraph_matches_next_order(a: Alphabet, b: Alphabet, n: int) -> bool:
    """L(AdeBG(A, B, 2n+1)) equals AdeBG(A, B, 2n+3) once edges are named by their words."""
    lg = line_digraph(build_alternating_graph(a, b, 2 * n + 1))
    nxt = build_alternating_graph(a, b, 2 * n + 3)
    if Counter(lg.vertices) != Counter(nxt.vertices):
        return False

    def arcs(g: Digraph) -> Counter:
        return Counter((g.vertices[e.tail], g.vertices[e.head]) for e in g.edges)

    return arcs(lg) == arcs(nxt)


def hamiltonian_cycle_alternating(a: Alphabet, b: Alphabet, order: int) -> list[Word]:
    """Hamiltonian cycle of the alternating graph of odd ``order``.

    The vertices of that graph are the edges of the graph two orders down,
    so an Eulerian cycle there, read edge by edge, visits each vertex once.
    At order 1 every ordered pair of vertices is joined and any listing works.
    """
    if order < 1 or order % 2 == 0:
        raise InvalidOrder(f"order must be odd and >= 1, got {order}")
    if order == 1:
        return [(x,) for x in a.symbols]
    lower = build_alternating_graph(a, b, order - 2)
    cycle = eulerian_cycle(lower)
    return [lower.edges[k].label for k in cycle.edges]


def is_hamiltonian_cycle(g: Digraph, cycle: Sequence[Hashable]) -> bool:
    if len(cycle) != len(g.vertices) or set(cycle) != set(g.vertices):
        return False
    arcs = {(g.vertices[e.tail], g.vertices[e.head]) for e in g.edges}
    return all((u, v) in arcs for u, v in zip(cycle, list(cycle[1:]) + list(cycle[:1])))


def is_eulerian_cycle(g: Digraph, c: EdgeCycle) -> bool:
    try:
        c.check(g)
    except InvalidCycle:
        return False
    return sorted(c.edges) == list(range(len(g.edges)))


__all__ = [
    "AlternatingSequence",
    "Digraph",
    "Edge",
    "EdgeCycle",
    "alternating_count",
    "alternating_words",
    "build_alternating_graph",
    "build_debruijn_graph",
    "eulerian_cycle",
    "generate_debruijn_sequence",
    "glue_cycle",
    "hamiltonian_cycle_alternating",
    "is_alternating_word",
    "is_eulerian_cycle",
    "is_hamiltonian_cycle",
    "line_digraph",
    "line_digraph_matches_next_order",
    "tensor_map_is_isomorphism",
    "tensor_product",
    "verify_alternating",
]
