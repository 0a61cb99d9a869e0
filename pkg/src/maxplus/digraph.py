"""Digraph analytics for max-plus matrices.

Associated digraphs, strongly connected components with per-component
girth and cyclicity, the aggregate maximal girth / cyclicity, and
elementary-cycle enumeration for small instances.

A caution on terminology: ``maximal_girth`` is the maximum over
components of the per-component girth (minimal cycle length), not the
lcm-of-girths quantity some texts call the girth of a reducible graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm
from typing import Iterable, Sequence

from .matrix import MaxPlusMatrix
from .semiring import BOTTOM, UNIT, MaxPlusScalar, otimes


class WeightedDigraph:
    """A digraph on nodes 0..n-1 with at most one exact-weight arc per pair."""

    __slots__ = ("n", "arcs", "_succ")

    def __init__(self, n: int, arcs: dict[tuple[int, int], MaxPlusScalar]):
        self.n = n
        for (i, j), w in arcs.items():
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"arc ({i},{j}) out of range for n={n}")
            if w.is_bottom:
                raise ValueError(f"arc ({i},{j}) must carry a finite weight")
        self.arcs = dict(arcs)
        succ: list[list[int]] = [[] for _ in range(n)]
        for i, j in sorted(arcs):
            succ[i].append(j)
        self._succ = succ

    def successors(self, i: int) -> list[int]:
        return self._succ[i]

    def weight(self, i: int, j: int) -> MaxPlusScalar:
        return self.arcs.get((i, j), BOTTOM)

    def subgraph(self, nodes: Iterable[int]) -> "WeightedDigraph":
        """Induced subgraph, keeping the original node numbering."""
        keep = set(nodes)
        arcs = {(i, j): w for (i, j), w in self.arcs.items() if i in keep and j in keep}
        return WeightedDigraph(self.n, arcs)


def associated_digraph(a: MaxPlusMatrix) -> WeightedDigraph:
    """Arcs at exactly the finite entries of the matrix."""
    arcs = {}
    for i, row in enumerate(a.raw()):
        for j, w in enumerate(row):
            if w is not None:
                arcs[(i, j)] = MaxPlusScalar(w)
    return WeightedDigraph(a.n, arcs)


@dataclass(frozen=True)
class SccInfo:
    """One strongly connected component with its cycle structure.

    girth is the minimal cycle length within the component and cyclicity
    the gcd of all cycle lengths; both are None for an acyclic (trivial,
    loop-free single-node) component.
    """

    nodes: frozenset[int]
    girth: int | None
    cyclicity: int | None


@dataclass(frozen=True)
class SccDecomposition:
    components: tuple[SccInfo, ...]

    def component_of(self, v: int) -> SccInfo:
        for comp in self.components:
            if v in comp.nodes:
                return comp
        raise KeyError(v)


def _tarjan(succ: Sequence[Sequence[int]], nodes: Iterable[int]) -> list[set[int]]:
    """Iterative Tarjan SCC over the given node subset."""
    nodeset = set(nodes)
    index: dict[int, int] = {}
    lowlink: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    sccs: list[set[int]] = []
    counter = 0

    for root in sorted(nodeset):
        if root in index:
            continue
        work = [(root, iter([w for w in succ[root] if w in nodeset]))]
        index[root] = lowlink[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = lowlink[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter([u for u in succ[w] if u in nodeset])))
                    advanced = True
                    break
                if w in on_stack:
                    lowlink[v] = min(lowlink[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
            if lowlink[v] == index[v]:
                comp = set()
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.add(w)
                    if w == v:
                        break
                sccs.append(comp)
    return sccs


def _component_girth(g: WeightedDigraph, comp: set[int]) -> int | None:
    """Minimal directed cycle length inside the component, by BFS per node."""
    best = None
    for s in comp:
        dist = {s: 0}
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for v in g.successors(u):
                    if v in comp and v not in dist:
                        dist[v] = dist[u] + 1
                        nxt.append(v)
            frontier = nxt
        for u, du in dist.items():
            if (u, s) in g.arcs:
                cand = du + 1
                if best is None or cand < best:
                    best = cand
    return best


def _component_cyclicity(g: WeightedDigraph, comp: set[int]) -> int | None:
    """gcd of cycle lengths via BFS level labels: gcd of level(u)+1-level(v)."""
    root = min(comp)
    level = {root: 0}
    frontier = [root]
    while frontier:
        nxt = []
        for u in frontier:
            for v in g.successors(u):
                if v in comp and v not in level:
                    level[v] = level[u] + 1
                    nxt.append(v)
        frontier = nxt
    result = 0
    for (i, j) in g.arcs:
        if i in comp and j in comp:
            result = gcd(result, level[i] + 1 - level[j])
    return result if result > 0 else None


def scc_decompose(g: WeightedDigraph, nodes: Iterable[int] | None = None) -> SccDecomposition:
    """Partition the node set (default: all nodes) into SCCs with girth/cyclicity."""
    node_iter = range(g.n) if nodes is None else nodes
    comps = []
    for comp in _tarjan(g._succ, node_iter):
        girth = _component_girth(g, comp)
        cyc = _component_cyclicity(g, comp) if girth is not None else None
        comps.append(SccInfo(nodes=frozenset(comp), girth=girth, cyclicity=cyc))
    comps.sort(key=lambda c: min(c.nodes))
    return SccDecomposition(components=tuple(comps))


def maximal_girth(d: SccDecomposition) -> int:
    """Max over components of the component girth; needs at least one cycle."""
    girths = [c.girth for c in d.components if c.girth is not None]
    if not girths:
        raise ValueError("maximal_girth undefined: the digraph is acyclic")
    return max(girths)


def global_cyclicity(d: SccDecomposition) -> int:
    """lcm of component cyclicities; rejects decompositions with acyclic parts."""
    cycs = []
    for c in d.components:
        if c.cyclicity is None:
            raise ValueError(f"acyclic component {sorted(c.nodes)} has no cyclicity")
        cycs.append(c.cyclicity)
    return lcm(*cycs)


@dataclass(frozen=True)
class Cycle:
    """An elementary cycle, canonically rotated to start at its least node."""

    nodes: tuple[int, ...]
    length: int
    weight: MaxPlusScalar


def enumerate_cycles(g: WeightedDigraph, max_n: int = 8, max_length: int | None = None) -> list[Cycle]:
    """All elementary cycles with their exact weights, for small instances.

    Enumerates by rooting each cycle at its least node (so every cycle is
    reported exactly once up to rotation).  Refuses instances with more
    than max_n nodes; optionally caps the cycle length.
    """
    if g.n > max_n:
        raise ValueError(f"instance too large for cycle enumeration: n={g.n} > {max_n}")
    cap = g.n if max_length is None else max_length
    cycles: list[Cycle] = []

    def dfs(root: int, path: list[int], on_path: set[int], weight: MaxPlusScalar) -> None:
        u = path[-1]
        for v in g.successors(u):
            if v == root and len(path) >= 1:
                cycles.append(
                    Cycle(tuple(path), len(path), otimes(weight, g.weight(u, root)))
                )
            elif v > root and v not in on_path and len(path) < cap:
                path.append(v)
                on_path.add(v)
                dfs(root, path, on_path, otimes(weight, g.weight(u, v)))
                on_path.discard(v)
                path.pop()

    for root in range(g.n):
        dfs(root, [root], {root}, UNIT)
    cycles.sort(key=lambda c: (c.length, c.nodes))
    return cycles


def to_dot(g: WeightedDigraph, critical_arcs: Iterable[tuple[int, int]] | None = None) -> str:
    """DOT rendering with critical arcs drawn bold red."""
    crit = set(critical_arcs or ())
    lines = ["digraph G {"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for (i, j) in sorted(g.arcs):
        attrs = [f'label="{g.arcs[(i, j)]}"']
        if (i, j) in crit:
            attrs.append("color=red")
            attrs.append("penwidth=2")
        lines.append(f"  {i} -> {j} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
