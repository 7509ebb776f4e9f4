"""Tree-like nodal curves as decorated dual graphs.

A curve is stored purely combinatorially: one vertex per irreducible
component (decorated with the geometric genus of its normalization and
its number of self-nodes) and one edge per node joining two distinct
components.  Tree-likeness (connected, acyclic, no multi-edges) is what
the ordering and balancing machinery relies on, so it is checked
explicitly by :func:`validate_curve` and demanded by every other
operation.
"""

from dataclasses import dataclass
from functools import cached_property

from .errors import (
    CycleDetected,
    Disconnected,
    IndexOutOfRange,
    MultiEdge,
    OrderingMismatch,
    ParseError,
)


@dataclass(frozen=True)
class Component:
    """One irreducible component: genus data only, no embedded geometry."""

    id: int
    geometric_genus: int = 0
    internal_nodes: int = 0

    def __post_init__(self):
        if self.id < 1:
            raise ParseError("component ids must be positive integers", field="components.id")
        if self.geometric_genus < 0 or self.internal_nodes < 0:
            raise ParseError("genus data must be nonnegative", field=f"components[{self.id}]")

    @property
    def arithmetic_genus(self) -> int:
        return self.geometric_genus + self.internal_nodes

    @property
    def is_rational(self) -> bool:
        return self.geometric_genus == 0 and self.internal_nodes == 0


@dataclass(frozen=True)
class TreeLikeCurve:
    """Decorated dual graph of a nodal curve.

    ``edges`` keeps the raw (normalized) pair list so that validation can
    still report duplicate edges; every operation other than
    :func:`validate_curve` requires the curve to be a tree.
    """

    components: tuple
    edges: tuple

    def __post_init__(self):
        comps = tuple(self.components)
        ids = [c.id for c in comps]
        if not ids:
            raise ParseError("a curve needs at least one component", field="components")
        if len(set(ids)) != len(ids):
            raise ParseError("component ids must be unique", field="components")
        known = set(ids)
        norm = []
        for e in self.edges:
            a, b = e
            if a not in known or b not in known:
                raise ParseError(f"edge {list(e)} references unknown component id", field="edges")
            norm.append((a, b) if a <= b else (b, a))
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "edges", tuple(norm))

    @cached_property
    def ids(self) -> tuple:
        return tuple(c.id for c in self.components)

    @cached_property
    def _by_id(self) -> dict:
        return {c.id: c for c in self.components}

    def component(self, comp_id: int) -> Component:
        try:
            return self._by_id[comp_id]
        except KeyError:
            raise IndexOutOfRange(f"no component with id {comp_id}") from None

    @cached_property
    def simple_edges(self) -> frozenset:
        return frozenset(e for e in self.edges if e[0] != e[1])

    @cached_property
    def neighbors(self) -> dict:
        adj = {i: set() for i in self.ids}
        for a, b in self.simple_edges:
            adj[a].add(b)
            adj[b].add(a)
        return {i: frozenset(v) for i, v in adj.items()}

    def degree(self, comp_id: int) -> int:
        self.component(comp_id)
        return len(self.neighbors[comp_id])

    @cached_property
    def _validation(self) -> "ValidationReport":
        return validate_curve(self)

    def require_valid(self) -> None:
        report = self._validation
        if not report.valid:
            code, detail = report.errors[0]
            raise {"CycleDetected": CycleDetected,
                   "Disconnected": Disconnected,
                   "MultiEdge": MultiEdge}[code](detail)


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    errors: tuple            # (code, detail) pairs
    n_components: int
    p_a: int | None          # arithmetic genus, only when the curve is a tree
    genus_at_least_two: bool | None


@dataclass(frozen=True)
class Ordering:
    """A component ordering with the one-branch property.

    ``perm[k]`` is the component id at order position k+1.  For every
    position i < N, all higher-positioned components lie in the single
    branch ``b_sets[i-1]`` of the curve minus component i, ``nu[i-1]`` is
    the position of the unique component of that branch adjacent to
    component i, and ``g_sets[i-1]`` is the complementary side (which
    contains component i).  Position N has ``g_sets[N-1]`` equal to the
    whole curve.
    """

    perm: tuple
    nu: tuple
    g_sets: tuple
    b_sets: tuple

    @property
    def n(self) -> int:
        return len(self.perm)

    @cached_property
    def _positions(self) -> dict:
        return {cid: k + 1 for k, cid in enumerate(self.perm)}

    def position(self, comp_id: int) -> int:
        try:
            return self._positions[comp_id]
        except KeyError:
            raise IndexOutOfRange(f"component {comp_id} is not in this ordering") from None

    def component_at(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"order index {i} out of range 1..{self.n}")
        return self.perm[i - 1]

    def boundary_edge(self, i: int):
        """The unique node joining G(i) and B(i), as an id pair; None at i = N."""
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"order index {i} out of range 1..{self.n}")
        if i == self.n:
            return None
        a, b = self.perm[i - 1], self.perm[self.nu[i - 1] - 1]
        return (a, b) if a <= b else (b, a)


def validate_curve(c: TreeLikeCurve) -> ValidationReport:
    """Check the tree axioms and report the arithmetic genus.

    Accepts iff the dual graph is connected and acyclic.  The genus
    hypothesis p_a >= 2 is reported, never enforced.
    """
    errors = []
    seen = set()
    for e in c.edges:
        if e[0] == e[1]:
            errors.append(("CycleDetected", f"edge {list(e)} joins a component to itself"))
        elif e in seen:
            errors.append(("MultiEdge", f"components {e[0]} and {e[1]} meet in more than one node"))
        seen.add(e)

    # union-find over the simple edges catches any remaining cycle
    parent = {i: i for i in c.ids}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in c.simple_edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            if not any(code == "CycleDetected" for code, _ in errors):
                errors.append(("CycleDetected", f"edge {[a, b]} closes a cycle"))
        else:
            parent[ra] = rb
    roots = {find(i) for i in c.ids}
    if len(roots) > 1:
        errors.append(("Disconnected", f"dual graph has {len(roots)} connected pieces"))

    valid = not errors
    p_a = sum(comp.arithmetic_genus for comp in c.components) if valid else None
    return ValidationReport(
        valid=valid,
        errors=tuple(errors),
        n_components=len(c.components),
        p_a=p_a,
        genus_at_least_two=(p_a >= 2) if valid else None,
    )


def arithmetic_genus(c: TreeLikeCurve) -> int:
    """Arithmetic genus of the whole curve: sum of the component genera.

    The tree shape contributes nothing (the edge-count correction
    vanishes), so this agrees with 1 - chi(O) for the trivial rank-1
    class.
    """
    c.require_valid()
    return sum(comp.arithmetic_genus for comp in c.components)


def _split_off(c: TreeLikeCurve, removed: int, seed: int) -> frozenset:
    """Ids of the connected piece of the curve minus ``removed`` containing ``seed``."""
    stack, seen = [seed], {seed}
    while stack:
        v = stack.pop()
        for w in c.neighbors[v]:
            if w != removed and w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def prune_ordering(c: TreeLikeCurve) -> Ordering:
    """Deterministic leaf-pruning order with the one-branch property.

    Leaves are peeled round by round: all current leaves, in increasing
    id order, then the leaves of what remains, and so on; the final
    surviving component takes position N.  Each removal records the
    unique surviving neighbor, which becomes nu at that position.
    """
    c.require_valid()
    ids = c.ids
    n = len(ids)
    if n == 1:
        only = ids[0]
        return Ordering(perm=(only,), nu=(), g_sets=(frozenset(ids),), b_sets=(frozenset(),))

    deg = {i: c.degree(i) for i in ids}
    alive = set(ids)
    perm = []
    parent = {}
    while len(alive) > 1:
        # one round: the current leaves, smallest id first; leaves of the
        # same round are never adjacent unless only two vertices remain
        for v in sorted(i for i in alive if deg[i] == 1):
            if len(alive) == 1:
                break
            w = next(u for u in c.neighbors[v] if u in alive)
            parent[v] = w
            perm.append(v)
            alive.discard(v)
            deg[w] -= 1
            deg[v] = 0
    perm.append(alive.pop())

    pos = {cid: k + 1 for k, cid in enumerate(perm)}
    nu = tuple(pos[parent[perm[k]]] for k in range(n - 1))
    everything = frozenset(ids)
    g_sets, b_sets = [], []
    for k in range(n - 1):
        b = _split_off(c, perm[k], parent[perm[k]])
        g_sets.append(everything - b)
        b_sets.append(b)
    g_sets.append(everything)
    b_sets.append(frozenset())
    return Ordering(perm=tuple(perm), nu=nu, g_sets=tuple(g_sets), b_sets=tuple(b_sets))


def decompose(c: TreeLikeCurve, ordering: Ordering, i: int):
    """Split the curve at order position i into (G(i), B(i), boundary node).

    Recomputed from the graph, not read off the ordering, so it can be
    cross-checked against the stored sets.  At i = N the whole curve is
    G and there is no boundary node.
    """
    c.require_valid()
    n = ordering.n
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"order index {i} out of range 1..{n}")
    if set(ordering.perm) != set(c.ids):
        raise OrderingMismatch("ordering does not belong to this curve")
    everything = frozenset(c.ids)
    if i == n:
        return everything, frozenset(), None
    y = ordering.perm[i - 1]
    anchor = ordering.perm[ordering.nu[i - 1] - 1]
    if anchor not in c.neighbors[y]:
        raise OrderingMismatch(f"nu({i}) is not adjacent to component {y}")
    b = _split_off(c, y, anchor)
    return everything - b, b, ordering.boundary_edge(i)


def verify_ordering(c: TreeLikeCurve, ordering: Ordering) -> None:
    """Check every ordering invariant against the curve; raise OrderingMismatch.

    For each position i < N this recomputes the connected pieces of the
    curve minus component i and confirms that the higher-positioned
    components occupy exactly one of them, that the stored G/B sets match,
    and that the two sides meet in a single node at nu(i).
    """
    n = len(c.ids)
    if sorted(ordering.perm) != sorted(c.ids):
        raise OrderingMismatch("perm is not a permutation of the curve's component ids")
    if len(ordering.nu) != n - 1 or len(ordering.g_sets) != n or len(ordering.b_sets) != n:
        raise OrderingMismatch("ordering tables have the wrong length")
    everything = frozenset(c.ids)
    if ordering.g_sets[n - 1] != everything or ordering.b_sets[n - 1] != frozenset():
        raise OrderingMismatch("position N must carry the whole curve")
    pos = {cid: k + 1 for k, cid in enumerate(ordering.perm)}
    for k in range(n - 1):
        i = k + 1
        y = ordering.perm[k]
        rest = [cid for cid in c.ids if cid != y]
        pieces = []
        unseen = set(rest)
        while unseen:
            piece = _split_off(c, y, next(iter(unseen)))
            pieces.append(piece)
            unseen -= piece
        high = [p for p in pieces if any(pos[v] > i for v in p)]
        if len(high) != 1:
            raise OrderingMismatch(
                f"position {i}: higher components occupy {len(high)} pieces, need exactly 1")
        b = high[0]
        if b != ordering.b_sets[k] or everything - b != ordering.g_sets[k]:
            raise OrderingMismatch(f"position {i}: stored G/B sets do not match the graph")
        crossing = [e for e in c.simple_edges
                    if (e[0] in b) != (e[1] in b)]
        if len(crossing) != 1:
            raise OrderingMismatch(f"position {i}: G and B meet in {len(crossing)} nodes")
        nu_i = ordering.nu[k]
        if nu_i <= i:
            raise OrderingMismatch(f"nu({i}) = {nu_i} is not greater than {i}")
        anchor = ordering.perm[nu_i - 1]
        if set(crossing[0]) != {y, anchor}:
            raise OrderingMismatch(f"position {i}: boundary node is not the edge to nu({i})")
