"""Problem reductions and their brute-force oracles.

Two constructions live here. The first turns triangle detection in an
undirected graph into a length-acceptance question on a four-layer unary
acyclic NFA. The second turns the orthogonal-vectors problem into plain
NFA acceptance of one fixed input word over the alphabet {'0', '1'}.
Each construction ships with an independent brute-force decision
procedure used to certify it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .automata import Graph, Nfa
from .boolmat import BoolMatrix, mul

UNARY_LETTER = "a"
BITS = ("0", "1")


@dataclass(frozen=True)
class TriangleReduction:
    """Four-layer unary NFA built from a graph.

    State (j-1)*n + i is copy i of the graph's vertex set in layer j
    (layers 1..4); layer_of[state] gives that (layer, vertex) pair.
    A word of length target_length = n + 2 is accepted iff the graph
    has a triangle.
    """

    nfa: Nfa
    target_length: int
    layer_of: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class OvInstance:
    """Two lists of n boolean vectors of dimension d."""

    n: int
    d: int
    v: tuple[tuple[int, ...], ...]
    w: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1 or self.d < 1:
            raise ValueError(f"need n >= 1 and d >= 1, got n={self.n}, d={self.d}")
        object.__setattr__(self, "v", tuple(tuple(vec) for vec in self.v))
        object.__setattr__(self, "w", tuple(tuple(vec) for vec in self.w))
        for name, side in (("v", self.v), ("w", self.w)):
            if len(side) != self.n:
                raise ValueError(f"expected {self.n} {name}-vectors, got {len(side)}")
            for vec in side:
                if len(vec) != self.d or any(bit not in (0, 1) for bit in vec):
                    raise ValueError(f"{name}-vector {vec!r} is not a 0/1 vector of length {self.d}")


@dataclass(frozen=True)
class OvReduction:
    """Acyclic NFA plus the one input word it is meant to read.

    The word is 00w_1 00w_2 ... 00w_n and is accepted iff some pair
    (v_i, w_j) has boolean dot product zero. Landmark state ids:
    a_states[j-1] is the top-path drop-off point for block j, x fans out
    to the gadget starts, y collects gadget exits, b_states[j-1] is the
    bottom-path re-entry point after block j (j < n; block n ends on y).
    """

    nfa: Nfa
    input: str
    a_states: tuple[int, ...]
    x_state: int
    y_state: int
    b_states: tuple[int, ...]
    gadget_starts: tuple[int, ...]


def reduce_triangle(graph: Graph) -> TriangleReduction:
    """Build the four-layer unary NFA deciding triangle existence.

    Layer 1 and layer 4 carry forward chains over the vertex copies; every
    undirected edge {u, v} contributes both directed crossings u -> v and
    v -> u between consecutive layers 1->2, 2->3 and 3->4. The start is
    vertex 0's copy in layer 1 and the sole final state is vertex n-1's
    copy in layer 4, so the automaton has exactly 4n states and
    2(n-1) + 6m transitions.
    """
    n = graph.vertex_count
    transitions = set()
    for i in range(n - 1):
        transitions.add((i, UNARY_LETTER, i + 1))
        transitions.add((3 * n + i, UNARY_LETTER, 3 * n + i + 1))
    for u, v in graph.edges:
        for layer in range(3):
            transitions.add((layer * n + u, UNARY_LETTER, (layer + 1) * n + v))
            transitions.add((layer * n + v, UNARY_LETTER, (layer + 1) * n + u))
    nfa = Nfa(
        state_count=4 * n,
        alphabet=(UNARY_LETTER,),
        start=0,
        finals=frozenset({4 * n - 1}),
        transitions=transitions,
    )
    layer_of = tuple((q // n + 1, q % n) for q in range(4 * n))
    return TriangleReduction(nfa=nfa, target_length=n + 2, layer_of=layer_of)


def _graph_matrix(graph: Graph) -> BoolMatrix:
    rows = [0] * graph.vertex_count
    for u, v in graph.edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return BoolMatrix(graph.vertex_count, tuple(rows))


def has_triangle_matmul(graph: Graph) -> bool:
    """Cube the adjacency matrix and look for a 1 on the diagonal."""
    m = _graph_matrix(graph)
    cube = mul(mul(m, m), m)
    return any(cube.rows[i] >> i & 1 for i in range(cube.dim))


def has_triangle_brute(graph: Graph) -> bool:
    """Direct triple loop over vertex triples."""
    for i, j, k in combinations(range(graph.vertex_count), 3):
        if graph.has_edge(i, j) and graph.has_edge(j, k) and graph.has_edge(i, k):
            return True
    return False


def ov_brute(inst: OvInstance) -> bool:
    """Scan all pairs for a boolean-orthogonal (v_i, w_j)."""
    for vi in inst.v:
        for wj in inst.w:
            if not any(a and b for a, b in zip(vi, wj)):
                return True
    return False


def reduce_ov(inst: OvInstance) -> OvReduction:
    """Build the acyclic NFA that accepts 00w_1...00w_n iff a pair is orthogonal.

    Layout, with T = (n-1)(d+2) + 1:
      0 .. T-1          top path, every step on either symbol; a_j at
                        offset (j-1)(d+2)
      T                 x, reached from every a_j, fans out to gadgets
      T+1 .. T+n*d      gadget chains, d states each; step k of gadget i
                        requires input '0' where v_i[k] = 1 and accepts
                        either symbol where v_i[k] = 0; the last step
                        lands on y
      T+n*d+1           y, final (covers j = n), fans out to every b_j
      y+1 .. y+T        bottom path; b_j at offset (j-1)(d+2) + 1; its
                        last state is the other final

    Dropping off the top path at a_j, passing through x, running gadget i
    and re-entering at b_j consumes block j exactly, and the bottom walk
    consumes the rest, so every aligned orthogonal pair yields an
    accepting path and misaligned paths die or end off-final.
    """
    n, d = inst.n, inst.d
    block = d + 2
    top = (n - 1) * block + 1
    x = top
    gadget_starts = tuple(top + 1 + i * d for i in range(n))
    y = top + 1 + n * d
    bottom = y + 1
    transitions = set()
    for s in range(top - 1):
        for ch in BITS:
            transitions.add((s, ch, s + 1))
    a_states = tuple((j - 1) * block for j in range(1, n + 1))
    for a in a_states:
        for ch in BITS:
            transitions.add((a, ch, x))
    for g in gadget_starts:
        for ch in BITS:
            transitions.add((x, ch, g))
    for g, vec in zip(gadget_starts, inst.v):
        for pos, bit in enumerate(vec):
            dst = y if pos == d - 1 else g + pos + 1
            if bit:
                transitions.add((g + pos, "0", dst))
            else:
                for ch in BITS:
                    transitions.add((g + pos, ch, dst))
    b_states = tuple(bottom + (j - 1) * block + 1 for j in range(1, n))
    for b in b_states:
        for ch in BITS:
            transitions.add((y, ch, b))
    for s in range(bottom, bottom + top - 1):
        for ch in BITS:
            transitions.add((s, ch, s + 1))
    nfa = Nfa(
        state_count=bottom + top,
        alphabet=BITS,
        start=0,
        finals=frozenset({y, bottom + top - 1}),
        transitions=transitions,
    )
    # linear-size guarantee, documented constant c = 20
    assert nfa.state_count <= 10 * n * d + 3
    assert len(nfa.transitions) <= 20 * n * d
    word = "".join("00" + "".join(str(bit) for bit in wj) for wj in inst.w)
    return OvReduction(
        nfa=nfa,
        input=word,
        a_states=a_states,
        x_state=x,
        y_state=y,
        b_states=b_states,
        gadget_starts=gadget_starts,
    )
