"""Brute-force ground truth at desk scale.

Exact coloring via branch-and-bound backtracking, exact twin-width via
memoized search over merge orders, and exhaustive 3-SAT / NAE-3-SAT
solving.  Every positive answer comes with a witness that the matching
checker accepts, and repeated runs return identical outputs.

Budgets count node expansions, never wall time.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cnf import Assignment, CnfFormula, Dialect
from .contraction import PartitionSequence, sequence_from_vertex_merges
from .errors import (BudgetExceeded, DialectError, RedEdgeError,
                     UncoloredError)
from .trigraph import Partition, Trigraph, max_red_degree, quotient


@dataclass(frozen=True)
class Coloring:
    """Total map vertex -> color; colors are 1-based and bounded by k."""

    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        for v, c in enumerate(self.colors):
            if not 1 <= c <= self.k:
                raise ValueError(f"vertex {v} has color {c}, outside 1..{self.k}")


def is_proper(g: Trigraph, col: Coloring) -> bool:
    """True iff no black edge is monochromatic.  Plain graphs only."""
    if g.red:
        raise RedEdgeError("propriety is defined for plain graphs (no red edges)")
    if len(col.colors) != g.n:
        raise UncoloredError(f"coloring has {len(col.colors)} entries, graph has {g.n} vertices")
    colors = col.colors
    return all(colors[u] != colors[v] for u, v in g.black)


def _base_order(g: Trigraph) -> list[int]:
    """Descending degree, ties by id."""
    return sorted(range(g.n), key=lambda v: (-len(g.black_adj[v]), v))


def greedy_coloring(g: Trigraph) -> Coloring:
    """First-fit along the base order; an upper bound for the chromatic number."""
    colors = [0] * g.n
    for v in _base_order(g):
        used = {colors[u] for u in g.black_adj[v] if colors[u]}
        c = 1
        while c in used:
            c += 1
        colors[v] = c
    k = max(colors, default=1)
    return Coloring(tuple(colors), max(k, 1))


def greedy_clique(g: Trigraph) -> list[int]:
    """A maximal clique grown greedily from several seeds; a lower bound witness."""
    order = _base_order(g)
    best: list[int] = []
    for seed in order[: min(g.n, 24)]:
        clique = [seed]
        adj = g.black_adj
        for v in order:
            if v != seed and all(v in adj[u] for u in clique):
                clique.append(v)
        if len(clique) > len(best):
            best = clique
    return best


def _color_search(g: Trigraph, k: int, budget: int | None) -> list[int] | None:
    """Backtracking k-coloring with conflict-directed backjumping.

    Selection: highest saturation (distinct colors on colored
    neighbors), ties by descending degree then id; a vertex with at
    most one color left is taken as soon as the scan meets it.
    Symmetry breaking: the first vertex colored gets color 1 and a new
    color may only be introduced as (current max + 1).  Every pruned
    color remembers the search level that pruned it, so a dead end
    jumps straight back to its deepest culprit instead of retrying
    unrelated decisions in between.  Returns 1-based colors, or None.
    """
    n = g.n
    if n == 0:
        return []
    if k <= 0:
        return None
    adj = [tuple(sorted(g.black_adj[v])) for v in range(n)]
    order = _base_order(g)
    colors = [0] * n
    forbidden = [0] * n
    saturation = [0] * n
    colored = [False] * n
    # contributor[v][bit]: level whose assignment forbade that color on v
    contributor: list[dict[int, int]] = [dict() for _ in range(n)]
    introducer = [-1] * (k + 1)  # level that first used each color
    forced = k - 1
    expansions = 0
    remaining = n
    full = (1 << k) - 1

    def blame(vertex: int, mask: int) -> set[int]:
        levels = set()
        bits = forbidden[vertex] & mask
        contrib = contributor[vertex]
        while bits:
            bit = bits & -bits
            bits ^= bit
            levels.add(contrib[bit])
        return levels

    def rec(depth: int, max_used: int):
        """True on success, else (jump level, culprit levels)."""
        nonlocal expansions, remaining
        if remaining == 0:
            return True
        v = -1
        best = -1
        for u in order:
            if not colored[u] and saturation[u] > best:
                best = saturation[u]
                v = u
                if best >= forced:
                    break
        mask = (1 << (max_used + 1 if max_used < k else k)) - 1
        allowed = ~forbidden[v] & mask
        conflict = blame(v, mask)
        if mask != full:
            # colors above max_used+1 were cut by symmetry, not by a
            # neighbor; the cut is owned by the deepest color introducer
            conflict.add(introducer[max_used])
        colored[v] = True
        remaining -= 1
        while allowed:
            bit = allowed & -allowed
            allowed ^= bit
            expansions += 1
            if budget is not None and expansions > budget:
                raise BudgetExceeded(f"coloring search exceeded {budget} expansions")
            color = bit.bit_length()
            colors[v] = color
            if color > max_used:
                introducer[color] = depth
            touched = []
            dead = -1
            for u in adj[v]:
                if not colored[u] and not forbidden[u] & bit:
                    forbidden[u] |= bit
                    saturation[u] += 1
                    contributor[u][bit] = depth
                    touched.append(u)
                    if saturation[u] == k:
                        dead = u
            if dead >= 0:
                jump, culprits = depth, blame(dead, full)
            else:
                result = rec(depth + 1, max_used if color <= max_used else color)
                if result is True:
                    return True
                jump, culprits = result
            for u in touched:
                forbidden[u] ^= bit
                saturation[u] -= 1
            if color > max_used:
                introducer[color] = -1
            if jump < depth:
                colors[v] = 0
                colored[v] = False
                remaining += 1
                return jump, culprits
            conflict |= culprits
            conflict.discard(depth)
        colors[v] = 0
        colored[v] = False
        remaining += 1
        if not conflict:
            return -1, conflict
        return max(conflict), conflict

    if rec(0, 0) is True:
        return colors
    return None


def is_k_colorable(g: Trigraph, k: int, budget: int | None = None
                   ) -> tuple[bool, Coloring | None]:
    """Exact k-colorability with a witness coloring on success."""
    if g.red:
        raise RedEdgeError("colorability is defined for plain graphs")
    if g.n == 0:
        return True, Coloring((), max(k, 0))
    if k <= 0:
        return False, None
    found = _color_search(g, k, budget)
    if found is None:
        return False, None
    return True, Coloring(tuple(found), k)


def chromatic_number(g: Trigraph, budget: int | None = None) -> int:
    """Exact chromatic number via bounds plus k-colorability searches."""
    if g.red:
        raise RedEdgeError("chromatic number is defined for plain graphs")
    if g.n == 0:
        return 0
    upper = greedy_coloring(g).k
    lower = max(1, len(greedy_clique(g)))
    for k in range(lower, upper):
        try:
            ok, _ = is_k_colorable(g, k, budget)
        except BudgetExceeded as exc:
            raise BudgetExceeded(str(exc), lower=k, upper=upper) from None
        if ok:
            return k
    return upper


def _greedy_merge_sequence(g: Trigraph) -> tuple[int, PartitionSequence]:
    """Merge the pair minimizing the next quotient's width; an upper bound."""
    n = g.n
    parts: list[frozenset[int]] = [frozenset([v]) for v in range(n)]
    merges = []
    width = max_red_degree(g)
    while len(parts) > 1:
        best = None
        for i in range(len(parts)):
            for j in range(i + 1, len(parts)):
                trial = [p for t, p in enumerate(parts) if t not in (i, j)]
                trial.append(parts[i] | parts[j])
                w = max_red_degree(quotient(g, Partition(n, trial)))
                key = (w, min(parts[i]), min(parts[j]))
                if best is None or key < best[0]:
                    best = (key, i, j)
        (w, _, _), i, j = best
        merges.append((min(parts[i]), min(parts[j])))
        merged = parts[i] | parts[j]
        parts = [p for t, p in enumerate(parts) if t not in (i, j)]
        parts.append(merged)
        parts.sort(key=min)
        width = max(width, w)
    return width, sequence_from_vertex_merges(n, merges)


def exact_twinwidth(g: Trigraph, budget: int | None = None
                    ) -> tuple[int, PartitionSequence]:
    """Exact twin-width with an optimal witness sequence.

    Iterative deepening on the width bound; each level runs a DFS over
    partitions, memoizing failed states on canonical part encodings.
    Intended for n <= 10.
    """
    n = g.n
    if n <= 1:
        return 0, PartitionSequence(n, ())
    upper, upper_seq = _greedy_merge_sequence(g)
    lower = max_red_degree(g)
    expansions = [0]

    def search(d: int) -> list[tuple[int, int]] | None:
        failed: set[tuple] = set()

        def dfs(parts: tuple[frozenset[int], ...]) -> list[tuple[int, int]] | None:
            if len(parts) == 1:
                return []
            key = tuple(sorted(tuple(sorted(p)) for p in parts))
            if key in failed:
                return None
            expansions[0] += 1
            if budget is not None and expansions[0] > budget:
                raise BudgetExceeded(
                    f"twin-width search exceeded {budget} expansions",
                    lower=d, upper=upper)
            for i in range(len(parts)):
                for j in range(i + 1, len(parts)):
                    trial = [p for t, p in enumerate(parts) if t not in (i, j)]
                    trial.append(parts[i] | parts[j])
                    trial.sort(key=min)
                    if max_red_degree(quotient(g, Partition(n, trial))) <= d:
                        rest = dfs(tuple(trial))
                        if rest is not None:
                            return [(min(parts[i]), min(parts[j]))] + rest
            failed.add(key)
            return None

        return dfs(tuple(frozenset([v]) for v in range(n)))

    for d in range(lower, upper):
        merges = search(d)
        if merges is not None:
            return d, sequence_from_vertex_merges(n, merges)
    return upper, upper_seq


def _solve_cnf(formula: CnfFormula, nae: bool) -> Assignment | None:
    """Backtracking over variables in index order, False before True.

    The first model found is the lexicographically smallest (False < True).
    """
    n = formula.n_vars
    clauses = formula.clauses
    occ: list[list[int]] = [[] for _ in range(n + 1)]
    for ci, clause in enumerate(clauses):
        for lit in clause:
            if ci not in occ[abs(lit)]:
                occ[abs(lit)].append(ci)
    values: list[bool | None] = [None] * (n + 1)

    def clause_dead(ci: int) -> bool:
        vals = []
        for lit in clauses[ci]:
            v = values[abs(lit)]
            if v is None:
                return False
            vals.append(v if lit > 0 else not v)
        if nae:
            return all(vals) or not any(vals)
        return not any(vals)

    def backtrack(var: int) -> Assignment | None:
        if var > n:
            return {v: values[v] for v in range(1, n + 1)}
        for choice in (False, True):
            values[var] = choice
            if not any(clause_dead(ci) for ci in occ[var]):
                model = backtrack(var + 1)
                if model is not None:
                    return model
        values[var] = None
        return None

    return backtrack(1)


def solve_sat(formula: CnfFormula) -> Assignment | None:
    """Lexicographically smallest satisfying assignment, or None."""
    if formula.dialect is not Dialect.THREE_SAT:
        raise DialectError("solve_sat expects the 3-SAT dialect")
    return _solve_cnf(formula, nae=False)


def solve_nae(formula: CnfFormula) -> Assignment | None:
    """Lexicographically smallest NAE-satisfying assignment, or None."""
    if formula.dialect is not Dialect.NAE_THREE_SAT:
        raise DialectError("solve_nae expects the NAE-3-SAT dialect")
    return _solve_cnf(formula, nae=True)
