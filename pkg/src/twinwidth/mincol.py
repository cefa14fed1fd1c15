"""3-SAT to coloring-number reduction on graphs of twin-width at most 3.

The built graph has p = 2n + m blocks.  Two vertex-disjoint sides A and B
are the (2n-1)-th powers of paths on 2np vertices, split into blocks
A_1..A_p and B_1..B_p of 2n consecutive vertices each; every block is a
2n-clique and consecutive blocks overlap in a staircase pattern.  Block i
gets one apex vertex v_i whose non-neighbors inside A_i and B_i encode a
variable (blocks 1..2n) or a clause (blocks 2n+1..2n+m).  The graph is
2n-colorable exactly when the formula is satisfiable, and it always
admits a width-3 contraction sequence.

All accessors below take the 1-based coordinates used throughout the
block construction (block index i, offset j); vertex ids are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cnf import Assignment, CnfFormula, Dialect, literal_value, satisfies
from .contraction import PartitionSequence, sequence_from_vertex_merges
from .errors import (DialectError, NotProperError, NotSatisfyingError,
                     StructureError, TooFewVariablesError, TooManyColorsError)
from .oracles import Coloring, is_proper
from .trigraph import Trigraph, VertexRole


@dataclass(frozen=True)
class MinColInstance:
    formula: CnfFormula
    n: int
    m: int
    p: int
    graph: Trigraph

    @property
    def color_budget(self) -> int:
        return 2 * self.n

    # 1-based coordinates in, 0-based vertex ids out.
    def a(self, i: int, j: int) -> int:
        return (i - 1) * 2 * self.n + (j - 1)

    def b(self, i: int, j: int) -> int:
        return 2 * self.n * self.p + (i - 1) * 2 * self.n + (j - 1)

    def v(self, i: int) -> int:
        return 4 * self.n * self.p + (i - 1)


def build_mincol(formula: CnfFormula) -> MinColInstance:
    """Build the block graph for a 3-SAT formula with n >= 2 variables."""
    if formula.dialect is not Dialect.THREE_SAT:
        raise DialectError("the coloring-number reduction takes 3-SAT input")
    n, m = formula.n_vars, formula.n_clauses
    if n < 2:
        raise TooFewVariablesError("need at least two variables")
    p = 2 * n + m
    width = 2 * n
    side = width * p
    total = 4 * n * p + p

    def a(i, j):
        return (i - 1) * width + (j - 1)

    def b(i, j):
        return side + (i - 1) * width + (j - 1)

    def v(i):
        return 2 * side + (i - 1)

    edges: list[tuple[int, int]] = []

    # Each side is the (2n-1)-th power of a path: vertices at path
    # distance < 2n are adjacent.
    for offset in (0, side):
        for t in range(side):
            for d in range(1, width):
                if t + d < side:
                    edges.append((offset + t, offset + t + d))

    # Variable apexes: v_{2i-1} and v_{2i} miss three block vertices each.
    for i in range(1, n + 1):
        odd, even = 2 * i - 1, 2 * i
        missing_odd = {a(odd, 2 * i - 1), a(odd, 2 * i), b(odd, 2 * i - 1)}
        missing_even = {a(even, 2 * i - 1), a(even, 2 * i), b(even, 2 * i)}
        for block, missing in ((odd, missing_odd), (even, missing_even)):
            apex = v(block)
            for j in range(1, width + 1):
                for u in (a(block, j), b(block, j)):
                    if u not in missing:
                        edges.append((apex, u))

    # Clause apexes: keep most of B_i, pick one A_i vertex per literal
    # (column 2j-1 for a positive literal on x_j, column 2j for a
    # negative one).  Repeated literals collapse by set semantics.
    for c_idx, clause in enumerate(formula.clauses):
        block = 2 * n + c_idx + 1
        apex = v(block)
        skipped_b = {b(block, 2 * abs(lit)) for lit in clause}
        for j in range(1, width + 1):
            u = b(block, j)
            if u not in skipped_b:
                edges.append((apex, u))
        for lit in clause:
            column = 2 * abs(lit) - (1 if lit > 0 else 0)
            edges.append((apex, a(block, column)))

    labels = {}
    for i in range(1, p + 1):
        for j in range(1, width + 1):
            labels[a(i, j)] = VertexRole("A", (i, j))
            labels[b(i, j)] = VertexRole("B", (i, j))
        labels[v(i)] = VertexRole("V", (i,))

    graph = Trigraph(total, edges, (), labels)
    return MinColInstance(formula, n, m, p, graph)


def build_mincol_3sequence(inst: MinColInstance) -> PartitionSequence:
    """Two-stage width-3 contraction sequence for a built instance.

    Stage 1 collapses each block to a point, sweeping offsets left to
    right across all blocks.  Stage 2 folds all A-blocks together, all
    B-blocks together, and all apexes together, then merges the last
    three parts (A-part with B-part, then with the apex part).
    """
    merges: list[tuple[int, int]] = []
    for j in range(2, 2 * inst.n + 1):
        for i in range(1, inst.p + 1):
            merges.append((inst.a(i, 1), inst.a(i, j)))
            merges.append((inst.b(i, 1), inst.b(i, j)))
    for i in range(2, inst.p + 1):
        merges.append((inst.a(1, 1), inst.a(i, 1)))
        merges.append((inst.b(1, 1), inst.b(i, 1)))
        merges.append((inst.v(1), inst.v(i)))
    merges.append((inst.a(1, 1), inst.b(1, 1)))
    merges.append((inst.a(1, 1), inst.v(1)))
    return sequence_from_vertex_merges(inst.graph.n, merges)


def mincol_coloring_from_assignment(inst: MinColInstance, assignment: Assignment) -> Coloring:
    """The canonical 2n-coloring induced by a satisfying assignment.

    B-columns keep their offset as color; A-column pairs {2j-1, 2j} are
    straight when x_j is true and swapped when false; apex v_i takes
    color i on variable blocks and twice the variable index of the first
    satisfied literal on clause blocks.
    """
    if not satisfies(inst.formula, assignment):
        raise NotSatisfyingError("assignment does not satisfy the formula")
    n, p, width = inst.n, inst.p, 2 * inst.n
    colors = [0] * inst.graph.n
    for i in range(1, p + 1):
        for j in range(1, width + 1):
            colors[inst.b(i, j)] = j
        for j in range(1, n + 1):
            lo, hi = (2 * j - 1, 2 * j) if assignment[j] else (2 * j, 2 * j - 1)
            colors[inst.a(i, 2 * j - 1)] = lo
            colors[inst.a(i, 2 * j)] = hi
    for i in range(1, width + 1):
        colors[inst.v(i)] = i
    for c_idx, clause in enumerate(inst.formula.clauses):
        sat_var = next(abs(lit) for lit in clause if literal_value(lit, assignment))
        colors[inst.v(width + c_idx + 1)] = 2 * sat_var
    return Coloring(tuple(colors), width)


def mincol_assignment_from_coloring(inst: MinColInstance, col: Coloring) -> Assignment:
    """Extract a satisfying assignment from any proper <=2n-coloring.

    Normalizes by the unique color permutation that maps block B_1 to
    the identity pattern, then reads each variable off the orientation
    of its A-column pair.
    """
    width = 2 * inst.n
    if max(col.colors) > width:
        raise TooManyColorsError(
            f"coloring uses color {max(col.colors)}, budget is {width}")
    if not is_proper(inst.graph, col):
        raise NotProperError("coloring is not proper")
    perm = {}
    for j in range(1, width + 1):
        c = col.colors[inst.b(1, j)]
        if c in perm:
            raise NotProperError("two vertices of the B_1 clique share a color")
        perm[c] = j
    normalized = [perm[c] for c in col.colors]

    assignment: Assignment = {}
    for j in range(1, inst.n + 1):
        pair = {normalized[inst.a(1, 2 * j - 1)], normalized[inst.a(1, 2 * j)]}
        if pair != {2 * j - 1, 2 * j}:
            raise StructureError(f"A-column pair for variable {j} is {pair}")
        assignment[j] = normalized[inst.a(1, 2 * j - 1)] == 2 * j - 1
        for i in range(2, inst.p + 1):
            if normalized[inst.a(i, 2 * j - 1)] != normalized[inst.a(1, 2 * j - 1)]:
                raise StructureError(f"column colors depend on the block index at ({i},{j})")
    if not satisfies(inst.formula, assignment):
        raise StructureError("extracted assignment does not satisfy the formula")
    return assignment
