"""Relation graphs of normalized factorization sets.

Edges are stored as ``(u, v)`` vertex-id pairs meaning *u precedes v*: in some
member of the set, ``u`` is the more outer (left) component. Rendering as
``u ← v`` happens only in ``__str__`` and DOT output.
"""

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from math import prod

import structlog
from sympy.utilities.iterables import strongly_connected_components

from packages.collisions.factorizations import sigma
from packages.collisions.refine import NormalizedSet
from packages.core.errors import GraphTooSmallError, NotStronglyConnectedError

logger = structlog.get_logger()


@dataclass(frozen=True, slots=True, order=True)
class Vertex:
    """A basis entry; ``id`` is its position in the canonical member."""

    id: int
    value: int

    def __str__(self) -> str:
        return f"{self.value}#{self.id}"


@dataclass(frozen=True, slots=True)
class RelationGraph:
    """Directed graph on basis vertices; union of transitive tournaments."""

    vertices: tuple[Vertex, ...]
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        ids = {v.id for v in self.vertices}
        for u, v in self.edges:
            if u not in ids or v not in ids or u == v:
                raise ValueError(f"edge ({u}, {v}) does not join two distinct vertices")

    def __len__(self) -> int:
        return len(self.vertices)

    def __str__(self) -> str:
        arrows = ", ".join(
            f"{self.vertex(u)}←{self.vertex(v)}" for u, v in sorted(self.edges)
        )
        return f"RelationGraph([{', '.join(map(str, self.vertices))}]; {arrows})"

    @property
    def ids(self) -> list[int]:
        return [v.id for v in self.vertices]

    def vertex(self, vid: int) -> Vertex:
        for v in self.vertices:
            if v.id == vid:
                return v
        raise KeyError(vid)

    def precedes(self, u: Vertex, v: Vertex) -> bool:
        return (u.id, v.id) in self.edges

    def subgraph(self, ids: Iterable[int]) -> "RelationGraph":
        keep = set(ids)
        return RelationGraph(
            vertices=tuple(v for v in self.vertices if v.id in keep),
            edges=frozenset((u, v) for u, v in self.edges if u in keep and v in keep),
        )

    def is_transitive_path(self, order: Sequence[Vertex]) -> bool:
        """True iff ``order`` visits every vertex once and each earlier one precedes each later."""
        if sorted(v.id for v in order) != sorted(self.ids):
            return False
        return all(
            self.precedes(order[i], order[j])
            for i in range(len(order)) for j in range(i + 1, len(order))
        )

    def is_strongly_connected(self) -> bool:
        return len(strongly_connected_components((self.ids, sorted(self.edges)))) <= 1

    def to_dot(self, clustered: bool = True) -> str:
        """DOT text; with ``clustered`` each SCC becomes a cluster in chain order."""
        return to_dot(self, clustered=clustered)


@dataclass(frozen=True, slots=True)
class SccChain:
    """Strongly connected components, leftmost (outermost) first."""

    components: tuple[RelationGraph, ...]

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[RelationGraph]:
        return iter(self.components)


@dataclass(frozen=True, slots=True)
class SubgraphSplit:
    directed: frozenset[tuple[int, int]]
    undirected: frozenset[frozenset[int]]


@dataclass(frozen=True, slots=True)
class BubbleSortTrace:
    """States visited while bubble-sorting one transitive path into another."""

    states: tuple[tuple[Vertex, ...], ...]
    swaps: tuple[tuple[Vertex, Vertex], ...] = field(default=())

    def swaps_are_bidirectional(self, graph: RelationGraph) -> bool:
        return all(graph.precedes(a, b) and graph.precedes(b, a) for a, b in self.swaps)

    def states_are_transitive_paths(self, graph: RelationGraph) -> bool:
        return all(graph.is_transitive_path(state) for state in self.states)


def build_graph(normalized: NormalizedSet) -> RelationGraph:
    """Union of the tournaments of all members, on the canonical member's vertices."""
    canonical = normalized.canonical_member
    vertices = tuple(Vertex(id=i, value=value) for i, value in enumerate(canonical.parts))
    edges: set[tuple[int, int]] = set()
    for member in normalized.members:
        position = sigma(canonical, member)
        for i in range(len(vertices)):
            for j in range(len(vertices)):
                if position[i] < position[j]:
                    edges.add((i, j))
    graph = RelationGraph(vertices=vertices, edges=frozenset(edges))
    logger.debug("Built relation graph", vertices=len(vertices), edges=len(edges))
    return graph


def scc_chain(graph: RelationGraph) -> SccChain:
    """Split ``graph`` into SCCs ordered so cross edges run from earlier to later."""
    groups = strongly_connected_components((graph.ids, sorted(graph.edges)))
    groups = sorted(groups, key=min)
    return SccChain(components=tuple(graph.subgraph(group) for group in groups))


def split_subgraphs(graph: RelationGraph) -> SubgraphSplit:
    """Partition edges into unidirectional and bidirectional ones.

    Raises:
        NotStronglyConnectedError: If ``graph`` has more than one SCC.
    """
    _require_strongly_connected(graph)
    directed = frozenset((u, v) for u, v in graph.edges if (v, u) not in graph.edges)
    undirected = frozenset(
        frozenset((u, v)) for u, v in graph.edges if (v, u) in graph.edges
    )
    return SubgraphSplit(directed=directed, undirected=undirected)


def undirected_neighbors(graph: RelationGraph) -> dict[int, set[int]]:
    """Open neighborhoods in the bidirectional subgraph, keyed by vertex id."""
    split = split_subgraphs(graph)
    neighbors: dict[int, set[int]] = {vid: set() for vid in graph.ids}
    for pair in split.undirected:
        u, v = sorted(pair)
        neighbors[u].add(v)
        neighbors[v].add(u)
    return neighbors


def neighborhood_products(graph: RelationGraph) -> dict[Vertex, int]:
    """Product of the values in each vertex's bidirectional neighborhood.

    Raises:
        NotStronglyConnectedError: If ``graph`` has more than one SCC.
        GraphTooSmallError: If ``graph`` is a single vertex.
    """
    _require_strongly_connected(graph)
    if len(graph) < 2:
        raise GraphTooSmallError("neighborhoods are empty on a single vertex")
    neighbors = undirected_neighbors(graph)
    return {
        v: prod(graph.vertex(u).value for u in neighbors[v.id]) for v in graph.vertices
    }


def max_sink_order(graph: RelationGraph) -> tuple[Vertex, ...]:
    """MAX-SINK topological sorting of the directed subgraph of an SCC.

    Locally maximal vertices (value at least that of every bidirectional
    neighbor) are numbered 1..m by id. Every vertex gets a partition index:
    its own number if locally maximal, otherwise the first i whose neighborhood
    contains it and the next one's does not, otherwise the count of locally
    maximal vertices before it (0 and m mapped to 0 and m + 1). Depth-first
    search then walks from each vertex to the vertices that must precede it,
    always preferring lower partition index, then larger value, then lower id,
    and emits vertices in increasing finish time.

    Raises:
        NotStronglyConnectedError: If ``graph`` has more than one SCC.
        GraphTooSmallError: If ``graph`` is a single vertex.
    """
    _require_strongly_connected(graph)
    if len(graph) < 2:
        raise GraphTooSmallError("MAX-SINK needs at least two vertices")

    split = split_subgraphs(graph)
    neighbors = undirected_neighbors(graph)
    value = {v.id: v.value for v in graph.vertices}

    maxima = [
        vid for vid in graph.ids
        if all(value[vid] >= value[u] for u in neighbors[vid])
    ]
    m = len(maxima)
    partition: dict[int, int] = {vid: i for i, vid in enumerate(maxima, start=1)}
    for vid in graph.ids:
        if vid in partition:
            continue
        for i, top in enumerate(maxima, start=1):
            following = neighbors[maxima[i]] if i < m else set()
            if vid in neighbors[top] and vid not in following:
                partition[vid] = i
                break
        else:
            before = sum(1 for top in maxima if top < vid)
            partition[vid] = m + 1 if before == m else before

    def preference(vid: int) -> tuple[int, int, int]:
        return (partition[vid], -value[vid], vid)

    predecessors: dict[int, list[int]] = {vid: [] for vid in graph.ids}
    for u, v in split.directed:
        predecessors[v].append(u)

    finished: list[int] = []
    seen: set[int] = set()

    def visit(vid: int) -> None:
        seen.add(vid)
        for u in sorted(predecessors[vid], key=preference):
            if u not in seen:
                visit(u)
        finished.append(vid)

    for root in sorted(graph.ids, key=preference):
        if root not in seen:
            visit(root)

    return tuple(graph.vertex(vid) for vid in finished)


def transitive_hamiltonian_paths(graph: RelationGraph) -> list[tuple[Vertex, ...]]:
    """All vertex orders in which every vertex precedes every later one, by id order."""
    found: list[tuple[Vertex, ...]] = []

    def extend(path: list[Vertex], remaining: list[Vertex]) -> None:
        if not remaining:
            found.append(tuple(path))
            return
        for candidate in remaining:
            if all(graph.precedes(u, candidate) for u in path):
                extend(path + [candidate], [v for v in remaining if v != candidate])

    extend([], sorted(graph.vertices))
    return found


def bubble_sort_path(
    graph: RelationGraph, start: Sequence[Vertex], target: Sequence[Vertex]
) -> BubbleSortTrace:
    """Bubble-sort ``start`` into ``target`` by adjacent swaps, recording every state."""
    rank = {v.id: i for i, v in enumerate(target)}
    state = list(start)
    states = [tuple(state)]
    swaps: list[tuple[Vertex, Vertex]] = []
    changed = True
    while changed:
        changed = False
        for i in range(len(state) - 1):
            if rank[state[i].id] > rank[state[i + 1].id]:
                swaps.append((state[i], state[i + 1]))
                state[i], state[i + 1] = state[i + 1], state[i]
                states.append(tuple(state))
                changed = True
    return BubbleSortTrace(states=tuple(states), swaps=tuple(swaps))


def to_dot(graph: RelationGraph, clustered: bool = True) -> str:
    """Render ``graph`` as DOT.

    An edge ``u ← v`` is drawn ``v -> u``; a bidirectional pair is drawn once,
    from the lower id, with ``dir=both``.
    """
    lines = ["digraph relation {", "\trankdir=RL;"]
    if clustered:
        for index, component in enumerate(scc_chain(graph).components, start=1):
            lines.append(f"\tsubgraph cluster_{index} {{")
            lines.append(f'\t\tlabel="G{index}";')
            lines.extend(f"\t\t{_dot_node(v)}" for v in component.vertices)
            lines.append("\t}")
    else:
        lines.extend(f"\t{_dot_node(v)}" for v in graph.vertices)
    for u, v in sorted(graph.edges):
        if (v, u) in graph.edges:
            if u < v:
                lines.append(f"\tv{u} -> v{v} [dir=both];")
        else:
            lines.append(f"\tv{v} -> v{u};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_node(v: Vertex) -> str:
    return f'v{v.id} [label="{v}"];'


def _require_strongly_connected(graph: RelationGraph) -> None:
    if not graph.is_strongly_connected():
        raise NotStronglyConnectedError(f"{graph} has more than one strongly connected component")
