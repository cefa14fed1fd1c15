"""NAE-3-SAT to 3-coloring reduction on graphs of twin-width at most 4.

One triangle per clause, one path per variable with m base vertices
(one per clause column), parity-controlled single subdivisions between
consecutive occurrences, and a hub vertex adjacent to every path vertex.
The hub pins one color, so each variable path 2-colors and the parity of
occurrence distances makes equal colors mean equal signs.  A triangle is
3-colorable against its three path neighbors exactly when they are not
monochromatic, i.e. when the clause is NAE-satisfied.

Coordinates are 1-based (variable i, clause column j); slot names the
triangle corner for literal 1, 2 or 3.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cnf import (Assignment, CnfFormula, Dialect, literal_value,
                  nae_satisfies)
from .contraction import PartitionSequence, sequence_from_vertex_merges
from .errors import (DialectError, KTooSmallError, NotNaeSatisfyingError,
                     NotProperError, StructureError, TooManyColorsError)
from .oracles import Coloring, is_proper
from .trigraph import Trigraph, VertexRole

_SLOTS = ("u", "v", "w")


def subdivision_positions(formula: CnfFormula) -> set[tuple[int, int]]:
    """(variable, clause column) pairs whose incoming path edge is subdivided.

    Between consecutive occurrences the path distance must be even
    exactly when the signs agree; a single subdivision just before the
    later occurrence fixes the parity whenever the raw column gap has it
    wrong.
    """
    if formula.dialect is not Dialect.NAE_THREE_SAT:
        raise DialectError("subdivision positions are defined for NAE input")
    out: set[tuple[int, int]] = set()
    for i in range(1, formula.n_vars + 1):
        occ = formula.occurrences(i)
        for (j_prev, s_prev), (j_next, s_next) in zip(occ, occ[1:]):
            gap_even = (j_next - j_prev) % 2 == 0
            if gap_even != (s_prev == s_next):
                out.add((i, j_next))
    return out


@dataclass(frozen=True)
class ThreeColInstance:
    formula: CnfFormula
    n: int
    m: int
    graph: Trigraph
    subdivisions: frozenset[tuple[int, int]]
    path_orders: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        path_index = {}
        subdiv_index = {}
        for vid, role in self.graph.labels.items():
            if role.kind == "P":
                path_index[role.coords] = vid
            elif role.kind == "S":
                subdiv_index[role.coords] = vid
        object.__setattr__(self, "_path_index", path_index)
        object.__setattr__(self, "_subdiv_index", subdiv_index)

    def path_vertex(self, i: int, j: int) -> int:
        return self._path_index[(i, j)]

    def subdiv_vertex(self, i: int, j: int) -> int:
        return self._subdiv_index[(i, j)]

    def triangle(self, j: int, slot: str) -> int:
        base = sum(len(order) for order in self.path_orders)
        return base + 3 * (j - 1) + _SLOTS.index(slot)

    @property
    def z(self) -> int:
        return self.graph.n - 1


def build_3col(formula: CnfFormula) -> ThreeColInstance:
    """Build the triangle/path/hub graph for a NAE-3-SAT formula."""
    if formula.dialect is not Dialect.NAE_THREE_SAT:
        raise DialectError("the 3-coloring reduction takes NAE-3-SAT input")
    n, m = formula.n_vars, formula.n_clauses
    if n < 1 or m < 1:
        raise DialectError("need at least one variable and one clause")
    subdivisions = subdivision_positions(formula)

    labels: dict[int, VertexRole] = {}
    edges: list[tuple[int, int]] = []
    next_id = 0
    path_orders: list[tuple[int, ...]] = []
    path_at: dict[tuple[int, int], int] = {}
    for i in range(1, n + 1):
        order = []
        for j in range(1, m + 1):
            if (i, j) in subdivisions:
                labels[next_id] = VertexRole("S", (i, j))
                order.append(next_id)
                next_id += 1
            labels[next_id] = VertexRole("P", (i, j))
            path_at[(i, j)] = next_id
            order.append(next_id)
            next_id += 1
        edges.extend((u, v) for u, v in zip(order, order[1:]))
        path_orders.append(tuple(order))

    for j in range(1, m + 1):
        u, v, w = next_id, next_id + 1, next_id + 2
        for vid, slot in zip((u, v, w), _SLOTS):
            labels[vid] = VertexRole("T", (j, slot))
        edges.extend([(u, v), (v, w), (u, w)])
        next_id += 3
        for slot_id, lit in zip((u, v, w), formula.clauses[j - 1]):
            edges.append((slot_id, path_at[(abs(lit), j)]))

    hub = next_id
    labels[hub] = VertexRole("Z")
    for order in path_orders:
        edges.extend((hub, vid) for vid in order)

    graph = Trigraph(hub + 1, edges, (), labels)
    return ThreeColInstance(formula, n, m, graph, frozenset(subdivisions),
                            tuple(path_orders))


def build_3col_4sequence(inst: ThreeColInstance) -> PartitionSequence:
    """Four-stage width-4 contraction sequence for a built instance.

    Collapse each triangle, absorb subdivision vertices into their path
    vertices, fold all paths onto the first one column by column, then
    fold columns and triangles left and finish hub last.
    """
    merges: list[tuple[int, int]] = []
    for j in range(1, inst.m + 1):
        u, v, w = (inst.triangle(j, s) for s in _SLOTS)
        merges.append((u, v))
        merges.append((u, w))
    for i in range(1, inst.n + 1):
        for j in range(2, inst.m + 1):
            if (i, j) in inst.subdivisions:
                merges.append((inst.path_vertex(i, j), inst.subdiv_vertex(i, j)))
    for i in range(2, inst.n + 1):
        for j in range(1, inst.m + 1):
            merges.append((inst.path_vertex(1, j), inst.path_vertex(i, j)))
    for j in range(2, inst.m + 1):
        merges.append((inst.path_vertex(1, 1), inst.path_vertex(1, j)))
        merges.append((inst.triangle(1, "u"), inst.triangle(j, "u")))
    merges.append((inst.path_vertex(1, 1), inst.z))
    merges.append((inst.path_vertex(1, 1), inst.triangle(1, "u")))
    return sequence_from_vertex_merges(inst.graph.n, merges)


def threecol_coloring_from_assignment(inst: ThreeColInstance,
                                      assignment: Assignment) -> Coloring:
    """The canonical 3-coloring induced by a NAE-satisfying assignment.

    Hub gets 3; each path alternates 1/2 anchored so that occurrence
    vertices of true literals get 1; each triangle opposes its two
    lowest differing path neighbors and parks color 3 on the third.
    """
    if not nae_satisfies(inst.formula, assignment):
        raise NotNaeSatisfyingError("assignment does not NAE-satisfy the formula")
    colors = [0] * inst.graph.n
    colors[inst.z] = 3
    for i in range(1, inst.n + 1):
        j_star, sign = inst.formula.occurrences(i)[0]
        lit = i if sign else -i
        anchor_color = 1 if literal_value(lit, assignment) else 2
        order = inst.path_orders[i - 1]
        anchor_pos = order.index(inst.path_vertex(i, j_star))
        for pos, vid in enumerate(order):
            colors[vid] = anchor_color if (pos - anchor_pos) % 2 == 0 else 3 - anchor_color
    for j, clause in enumerate(inst.formula.clauses, start=1):
        neighbor = [colors[inst.path_vertex(abs(lit), j)] for lit in clause]
        a, b = next((a, b) for a, b in ((0, 1), (0, 2), (1, 2))
                    if neighbor[a] != neighbor[b])
        for slot in range(3):
            vid = inst.triangle(j, _SLOTS[slot])
            colors[vid] = 3 - neighbor[slot] if slot in (a, b) else 3
    return Coloring(tuple(colors), 3)


def threecol_assignment_from_coloring(inst: ThreeColInstance,
                                      col: Coloring) -> Assignment:
    """Extract a NAE-witness from any proper 3-coloring.

    Colors are permuted so the hub gets 3 and the first path vertex of
    variable 1 gets 1 (those two are adjacent, so always distinct); the
    paths then live in {1, 2} and occurrence colors read off signs.
    """
    if max(col.colors) > 3:
        raise TooManyColorsError(f"coloring uses color {max(col.colors)}, budget is 3")
    if not is_proper(inst.graph, col):
        raise NotProperError("coloring is not proper")
    c_hub = col.colors[inst.z]
    c_first = col.colors[inst.path_vertex(1, 1)]
    perm = {c_hub: 3, c_first: 1}
    perm.update({c: 2 for c in (1, 2, 3) if c not in perm})
    normalized = [perm[c] for c in col.colors]

    assignment: Assignment = {}
    for i in range(1, inst.n + 1):
        occ = inst.formula.occurrences(i)
        by_sign = {True: set(), False: set()}
        for j, sign in occ:
            by_sign[sign].add(normalized[inst.path_vertex(i, j)])
        if len(by_sign[True]) > 1 or len(by_sign[False]) > 1 or \
                (by_sign[True] and by_sign[True] == by_sign[False]):
            raise StructureError(f"occurrence colors of variable {i} violate parity")
        if by_sign[True]:
            assignment[i] = by_sign[True] == {1}
        else:
            assignment[i] = not (by_sign[False] == {1})
    if not nae_satisfies(inst.formula, assignment):
        raise StructureError("extracted assignment does not NAE-satisfy the formula")
    return assignment


@dataclass(frozen=True)
class LiftedInstance:
    """A k-colorability instance lifted from a 3-coloring one."""

    graph: Trigraph
    sequence: PartitionSequence
    k: int


def lift_to_k(inst: ThreeColInstance, k: int) -> LiftedInstance:
    """Add k-3 universal vertices; k-colorable iff the base is 3-colorable.

    Universal vertices are pairwise twins, so the emitted sequence
    merges them into one part first, replays the width-4 sequence on the
    base graph, and folds the universal part in last; the width bound is
    unchanged.
    """
    if k < 3:
        raise KTooSmallError(f"k must be at least 3, got {k}")
    base = inst.graph
    extra = k - 3
    total = base.n + extra
    edges = list(base.black)
    labels = dict(base.labels)
    for t in range(extra):
        vid = base.n + t
        labels[vid] = VertexRole("U", (t + 1,))
        edges.extend((vid, other) for other in range(vid))
    graph = Trigraph(total, edges, (), labels)

    base_seq = build_3col_4sequence(inst)
    merges = [(base.n, base.n + t) for t in range(1, extra)]
    merges.extend((s.a, s.b) for s in base_seq.steps)
    if extra > 0:
        merges.append((0, base.n))
    return LiftedInstance(graph, sequence_from_vertex_merges(total, merges), k)
