"""Coefficient quivers, the monomial test and string / orientable-string classification."""
from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field

from .quiver import Representation

CQVertex = tuple[int, int]  # (quiver vertex, 1-based basis index)


@dataclass(frozen=True)
class CQArrow:
    label: str
    tail: CQVertex
    head: CQVertex


@dataclass(frozen=True)
class CoefficientQuiver:
    """Directed graph on the basis vectors of a representation.

    ``vertices`` are listed vertex by vertex in the declaration order of the
    base quiver, then by basis index.
    """

    q_vertices: tuple[int, ...]
    vertices: tuple[CQVertex, ...]
    arrows: tuple[CQArrow, ...]
    index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "index", {v: i for i, v in enumerate(self.vertices)})

    @property
    def labels(self) -> list[str]:
        return sorted({a.label for a in self.arrows})

    def basis_counts(self) -> tuple[int, ...]:
        counts = dict.fromkeys(self.q_vertices, 0)
        for qv, _ in self.vertices:
            counts[qv] += 1
        return tuple(counts[v] for v in self.q_vertices)

    def successors(self) -> list[list[int]]:
        out = [[] for _ in self.vertices]
        for a in self.arrows:
            out[self.index[a.tail]].append(self.index[a.head])
        return out

    def components(self) -> list[list[CQVertex]]:
        """Connected components of the underlying undirected graph, in vertex order."""
        adj = defaultdict(list)
        for a in self.arrows:
            adj[a.tail].append(a.head)
            adj[a.head].append(a.tail)
        seen, comps = set(), []
        for v in self.vertices:
            if v in seen:
                continue
            comp, queue = [], deque([v])
            seen.add(v)
            while queue:
                x = queue.popleft()
                comp.append(x)
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        queue.append(y)
            comps.append(sorted(comp, key=self.index.__getitem__))
        return comps

    def to_dot(self, name: str = "Q") -> str:
        lines = [f"digraph {name} {{"]
        for qv, b in self.vertices:
            lines.append(f'  "{qv}.{b}";')
        for a in self.arrows:
            lines.append(
                f'  "{a.tail[0]}.{a.tail[1]}" -> "{a.head[0]}.{a.head[1]}" [label="{a.label}"];'
            )
        lines.append("}")
        return "\n".join(lines) + "\n"


def check_monomial(rep: Representation) -> bool:
    """True iff each arrow matrix has at most one nonzero per row and per column."""
    for entries in rep.matrices.values():
        rows = [r for r, _, v in entries if v != 0]
        cols = [c for _, c, v in entries if v != 0]
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            return False
    return True


def build_coefficient_quiver(rep: Representation) -> CoefficientQuiver:
    q = rep.quiver
    vertices = tuple((v, b) for v, d in zip(q.vertices, rep.dims) for b in range(1, d + 1))
    arrows = []
    for a in q.arrows:
        for r, c, val in sorted(rep.matrices[a.label], key=lambda x: (x[1], x[0])):
            if val != 0:
                arrows.append(CQArrow(a.label, (a.source, c), (a.target, r)))
    return CoefficientQuiver(q.vertices, vertices, tuple(arrows))


@dataclass(frozen=True)
class Chain:
    """A chain component numbered s_1, s_2, ... from one endpoint to the other.

    ``steps[i]`` describes the arrow between ``vertices[i]`` and
    ``vertices[i + 1]`` as ``(label, forward)``, ``forward`` meaning it points
    from ``vertices[i]`` to ``vertices[i + 1]``.
    """

    vertices: tuple[CQVertex, ...]
    steps: tuple[tuple[str, bool], ...]


@dataclass(frozen=True)
class StringClassification:
    is_monomial: bool
    is_string: bool
    components: tuple[Chain, ...] = ()
    is_orientable: bool = False
    # component index -> True if the chain must be read backwards
    orientation: tuple[bool, ...] = ()
    label_directions: dict = field(default_factory=dict)


def chain_components(cq: CoefficientQuiver) -> list[Chain] | None:
    adj = defaultdict(list)  # vertex -> list of (arrow idx, neighbour)
    for i, a in enumerate(cq.arrows):
        if a.tail == a.head:
            return None
        adj[a.tail].append((i, a.head))
        adj[a.head].append((i, a.tail))
    if any(len(nb) > 2 for nb in adj.values()):
        return None
    chains = []
    for comp in cq.components():
        n_edges = sum(len(adj[v]) for v in comp) // 2
        if n_edges != len(comp) - 1:
            return None  # a cycle, possibly from parallel arrows
        if len(comp) == 1:
            chains.append(Chain((comp[0],), ()))
            continue
        ends = [v for v in comp if len(adj[v]) == 1]
        start = min(ends)
        verts, steps = [start], []
        prev_edge, cur = None, start
        while True:
            nxt = [(i, y) for i, y in adj[cur] if i != prev_edge]
            if not nxt:
                break
            i, y = nxt[0]
            a = cq.arrows[i]
            steps.append((a.label, a.tail == cur))
            verts.append(y)
            prev_edge, cur = i, y
        chains.append(Chain(tuple(verts), tuple(steps)))
    return chains


def orient_chains(chains: list[Chain]) -> tuple[bool, tuple[bool, ...], dict]:
    """Two-colour the bipartite graph of components and labels.

    Each step imposes flip(component) xor (not forward) == reversed(label).
    """
    edges = defaultdict(list)
    for ci, ch in enumerate(chains):
        for label, forward in ch.steps:
            parity = 0 if forward else 1
            edges[("c", ci)].append((("l", label), parity))
            edges[("l", label)].append((("c", ci), parity))
    value = {}
    for ci in range(len(chains)):
        root = ("c", ci)
        if root in value:
            continue
        value[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, parity in edges[x]:
                want = value[x] ^ parity
                if y not in value:
                    value[y] = want
                    queue.append(y)
                elif value[y] != want:
                    return False, (), {}
    flips = tuple(bool(value[("c", ci)]) for ci in range(len(chains)))
    directions = {k[1]: not v for k, v in value.items() if k[0] == "l"}
    return True, flips, directions


def classify_string(rep: Representation) -> StringClassification:
    """Decide whether ``rep`` is a string module in its given basis, and whether it is orientable.

    Orientability is decided globally: one traversal direction per chain and
    one direction per arrow label must make every coefficient-quiver arrow
    with that label point the same way.  ``label_directions[a]`` is True when
    arrows labelled ``a`` point from s_i to s_{i+1} after applying
    ``orientation``.
    """
    if not check_monomial(rep):
        return StringClassification(False, False)
    cq = build_coefficient_quiver(rep)
    chains = chain_components(cq)
    if chains is None:
        return StringClassification(True, False)
    ok, flips, directions = orient_chains(chains)
    return StringClassification(True, True, tuple(chains), ok, flips, directions)


def reversed_chain(ch: Chain) -> Chain:
    return Chain(
        tuple(reversed(ch.vertices)),
        tuple((label, not fwd) for label, fwd in reversed(ch.steps)),
    )
