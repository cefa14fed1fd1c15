"""On-disk formats: trigraphs, sequences, colorings, assignments, roles, DIMACS.

All vertex and variable ids are 1-based on disk and converted exactly
once here; writers emit a canonical ordering so a read/write cycle is
byte-exact.  Lines starting with '#' are comments in the native formats,
'c' lines in DIMACS.
"""

from __future__ import annotations

from .cnf import Clause, CnfFormula, Dialect
from .contraction import MergeStep, PartitionSequence
from .errors import ParseError
from .oracles import Coloring
from .trigraph import Trigraph, VertexRole


def _data_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


# --- trigraph text format -------------------------------------------------

def write_trigraph(g: Trigraph) -> str:
    lines = [f"tgf {g.n} {len(g.black)} {len(g.red)}"]
    for tag, edges in (("b", g.black), ("r", g.red)):
        lines.extend(f"{tag} {u + 1} {v + 1}" for u, v in sorted(edges))
    return "\n".join(lines) + "\n"


def read_trigraph(text: str) -> Trigraph:
    lines = _data_lines(text)
    if not lines or not lines[0].startswith("tgf"):
        raise ParseError("missing 'tgf' header")
    try:
        _, n, n_black, n_red = lines[0].split()
        n, n_black, n_red = int(n), int(n_black), int(n_red)
    except ValueError:
        raise ParseError(f"malformed header: {lines[0]!r}") from None
    black, red = [], []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 3 or parts[0] not in ("b", "r"):
            raise ParseError(f"malformed edge line: {line!r}")
        try:
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
        except ValueError:
            raise ParseError(f"malformed edge line: {line!r}") from None
        (black if parts[0] == "b" else red).append((u, v))
    if len(black) != n_black or len(red) != n_red:
        raise ParseError(
            f"header declares {n_black} black / {n_red} red edges, "
            f"found {len(black)} / {len(red)}")
    return Trigraph(n, black, red)


# --- contraction sequence format -------------------------------------------

def write_sequence(seq: PartitionSequence) -> str:
    lines = [f"seq {seq.n} {len(seq.steps)}"]
    lines.extend(f"m {s.a + 1} {s.b + 1}" for s in seq.steps)
    return "\n".join(lines) + "\n"


def read_sequence(text: str) -> PartitionSequence:
    lines = _data_lines(text)
    if not lines or not lines[0].startswith("seq"):
        raise ParseError("missing 'seq' header")
    try:
        _, n, n_steps = lines[0].split()
        n, n_steps = int(n), int(n_steps)
    except ValueError:
        raise ParseError(f"malformed header: {lines[0]!r}") from None
    steps = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 3 or parts[0] != "m":
            raise ParseError(f"malformed merge line: {line!r}")
        try:
            a, b = int(parts[1]) - 1, int(parts[2]) - 1
        except ValueError:
            raise ParseError(f"malformed merge line: {line!r}") from None
        steps.append(MergeStep(min(a, b), max(a, b)))
    if len(steps) != n_steps:
        raise ParseError(f"header declares {n_steps} steps, found {len(steps)}")
    return PartitionSequence(n, tuple(steps))


# --- coloring and assignment formats ----------------------------------------

def write_coloring(col: Coloring) -> str:
    lines = [f"{v + 1} {c}" for v, c in enumerate(col.colors)]
    return "\n".join(lines) + ("\n" if lines else "")


def read_coloring(text: str, k: int | None = None) -> Coloring:
    entries = {}
    for line in _data_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"malformed coloring line: {line!r}")
        entries[int(parts[0]) - 1] = int(parts[1])
    if sorted(entries) != list(range(len(entries))):
        raise ParseError("coloring vertex ids are not 1..n")
    colors = tuple(entries[v] for v in range(len(entries)))
    return Coloring(colors, k if k is not None else max(colors, default=0))


def write_assignment(assignment: dict[int, bool]) -> str:
    lines = [f"{v} {int(assignment[v])}" for v in sorted(assignment)]
    return "\n".join(lines) + ("\n" if lines else "")


def read_assignment(text: str) -> dict[int, bool]:
    out = {}
    for line in _data_lines(text):
        parts = line.split()
        if len(parts) != 2 or parts[1] not in ("0", "1"):
            raise ParseError(f"malformed assignment line: {line!r}")
        out[int(parts[0])] = parts[1] == "1"
    return out


# --- role file ---------------------------------------------------------------

def write_roles(g: Trigraph) -> str:
    lines = [f"{v + 1} {g.labels[v]}" for v in sorted(g.labels)]
    return "\n".join(lines) + ("\n" if lines else "")


def read_roles(text: str) -> dict[int, VertexRole]:
    out = {}
    for line in _data_lines(text):
        vid, _, role = line.partition(" ")
        out[int(vid) - 1] = VertexRole.parse(role)
    return out


# --- DIMACS CNF ----------------------------------------------------------------

def parse_dimacs_cnf(text: str, dialect: Dialect = Dialect.THREE_SAT) -> CnfFormula:
    """Parse 'p cnf n m' DIMACS with exactly-3-literal clauses.

    The dialect is chosen by the caller, never inferred from the file.
    """
    n_vars = n_clauses = None
    clauses: list[Clause] = []
    pending: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(f"malformed problem line: {line!r}")
            try:
                n_vars, n_clauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"malformed problem line: {line!r}") from None
            continue
        if n_vars is None:
            raise ParseError("clause line before the problem line")
        try:
            literals = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"malformed clause line: {line!r}") from None
        pending.extend(literals)
        while 0 in pending:
            cut = pending.index(0)
            clause = pending[:cut]
            pending = pending[cut + 1:]
            if len(clause) != 3:
                raise ParseError(f"clause {clause} does not have exactly 3 literals")
            clauses.append(tuple(clause))
    if n_vars is None:
        raise ParseError("missing problem line")
    if pending:
        raise ParseError(f"trailing literals without terminating 0: {pending}")
    if len(clauses) != n_clauses:
        raise ParseError(f"header declares {n_clauses} clauses, found {len(clauses)}")
    for clause in clauses:
        for lit in clause:
            if not 1 <= abs(lit) <= n_vars:
                raise ParseError(f"literal {lit} out of range for {n_vars} variables")
    return CnfFormula(n_vars, tuple(clauses), dialect)


def write_dimacs_cnf(formula: CnfFormula) -> str:
    lines = [f"p cnf {formula.n_vars} {formula.n_clauses}"]
    lines.extend(" ".join(map(str, clause)) + " 0" for clause in formula.clauses)
    return "\n".join(lines) + "\n"
