import random

import pytest

from reference import (all_graphs, brute_chromatic, brute_nae, brute_sat,
                       brute_twinwidth, random_cograph)
from twinwidth import (CnfFormula, Coloring, Dialect, chromatic_number,
                       exact_twinwidth, is_k_colorable, is_proper,
                       make_trigraph, nae_satisfies, random_formula, redify,
                       satisfies, solve_nae, solve_sat, verify_d_sequence)
from twinwidth.errors import (BudgetExceeded, DialectError, RedEdgeError,
                              UncoloredError)

K3 = make_trigraph(3, [(0, 1), (1, 2), (0, 2)])
C5 = make_trigraph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
K4 = make_trigraph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
P4 = make_trigraph(4, [(0, 1), (1, 2), (2, 3)])


def test_is_proper():
    assert is_proper(K3, Coloring((1, 2, 3), 3))
    assert not is_proper(K3, Coloring((1, 1, 2), 3))
    with pytest.raises(UncoloredError):
        is_proper(K3, Coloring((1, 2), 3))
    with pytest.raises(RedEdgeError):
        is_proper(make_trigraph(2, [], [(0, 1)]), Coloring((1, 2), 2))


def test_chromatic_examples():
    assert chromatic_number(C5) == 3
    assert chromatic_number(make_trigraph(5)) == 1
    assert chromatic_number(K4) == 4
    assert chromatic_number(make_trigraph(0)) == 0


def test_k_colorable_examples():
    ok, witness = is_k_colorable(K4, 3)
    assert not ok and witness is None
    ok, witness = is_k_colorable(make_trigraph(3, [(0, 1), (1, 2)]), 2)
    assert ok
    # middle vertex has the highest degree, so it is colored first
    assert witness.colors == (2, 1, 2)
    assert is_proper(make_trigraph(3, [(0, 1), (1, 2)]), witness)


def test_k_colorable_is_deterministic():
    g = make_trigraph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
    runs = {is_k_colorable(g, 3)[1].colors for _ in range(3)}
    assert len(runs) == 1


def test_chromatic_cross_check_small():
    for g in all_graphs(4):
        chi = chromatic_number(g)
        assert chi == brute_chromatic(g)
        assert is_k_colorable(g, chi)[0]
        assert chi == 1 or not is_k_colorable(g, chi - 1)[0]
    rng = random.Random(21)
    for n in (5, 6):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for _ in range(120):
            g = make_trigraph(n, [e for e in pairs if rng.random() < 0.45])
            chi = chromatic_number(g)
            assert chi == brute_chromatic(g)
            ok, witness = is_k_colorable(g, chi)
            assert ok and is_proper(g, witness)


def test_colorability_budget():
    with pytest.raises(BudgetExceeded):
        is_k_colorable(C5, 3, budget=1)
    with pytest.raises(BudgetExceeded) as exc:
        chromatic_number(C5, budget=1)
    assert exc.value.upper is not None


def test_exact_twinwidth_examples():
    assert exact_twinwidth(K4)[0] == 0
    k22 = make_trigraph(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert exact_twinwidth(k22)[0] == 0
    width, seq = exact_twinwidth(P4)
    assert width == 1
    assert verify_d_sequence(P4, seq, 1)[0]
    for g in all_graphs(3):
        assert exact_twinwidth(g)[0] == 0


def test_exact_twinwidth_cross_check():
    for g in all_graphs(4):
        width, seq = exact_twinwidth(g)
        assert width == brute_twinwidth(g)
        ok, _ = verify_d_sequence(g, seq, width)
        assert ok
    rng = random.Random(4)
    pairs = [(u, v) for u in range(5) for v in range(u + 1, 5)]
    for _ in range(60):
        g = make_trigraph(5, [e for e in pairs if rng.random() < 0.5])
        assert exact_twinwidth(g)[0] == brute_twinwidth(g)


def test_exact_twinwidth_on_trigraphs_with_red_edges():
    width, seq = exact_twinwidth(redify(P4))
    assert width >= 1
    assert verify_d_sequence(redify(P4), seq, width)[0]


def test_exact_twinwidth_budget():
    g = make_trigraph(7, [(i, (i + 1) % 7) for i in range(7)])
    with pytest.raises(BudgetExceeded) as exc:
        exact_twinwidth(g, budget=1)
    assert exc.value.upper is not None


def test_exact_twinwidth_cographs():
    rng = random.Random(17)
    for _ in range(25):
        g = random_cograph(rng.randint(1, 8), rng)
        width, seq = exact_twinwidth(g)
        assert width == 0
        assert verify_d_sequence(g, seq, 0)[0]


def test_solve_sat_examples():
    f = CnfFormula(1, ((1, 1, 1),), Dialect.THREE_SAT)
    assert solve_sat(f) == {1: True}
    f = CnfFormula(1, ((1, 1, 1), (-1, -1, -1)), Dialect.THREE_SAT)
    assert solve_sat(f) is None
    f = CnfFormula(3, ((1, -2, 3), (-1, 2, -3)), Dialect.THREE_SAT)
    model = solve_sat(f)
    assert model is not None and satisfies(f, model)
    assert satisfies(f, {1: False, 2: True, 3: True})


def test_solve_sat_lexicographic():
    rng = random.Random(31)
    for _ in range(60):
        n = rng.randint(2, 5)
        m = rng.randint(max(1, (n + 2) // 3), 6)
        f = random_formula(n, m, Dialect.THREE_SAT, rng)
        assert solve_sat(f) == brute_sat(f)


def test_solve_nae_examples():
    f = CnfFormula(3, ((1, 2, 3),), Dialect.NAE_THREE_SAT)
    assert solve_nae(f) == {1: False, 2: False, 3: True}
    f2 = CnfFormula(3, ((1, 2, 3), (-1, -2, -3)), Dialect.NAE_THREE_SAT)
    model = solve_nae(f2)
    assert model is not None and nae_satisfies(f2, model)


def test_solve_nae_matches_enumeration_and_complement_symmetry():
    rng = random.Random(41)
    for _ in range(60):
        n = rng.randint(3, 5)
        m = rng.randint(max(1, (n + 2) // 3), 5)
        f = random_formula(n, m, Dialect.NAE_THREE_SAT, rng)
        model = solve_nae(f)
        assert model == brute_nae(f)
        if model is not None:
            flipped = {v: not b for v, b in model.items()}
            assert nae_satisfies(f, flipped)
        # negating every literal preserves NAE-satisfiability
        negated = CnfFormula(
            f.n_vars, tuple(tuple(-l for l in c) for c in f.clauses), f.dialect)
        assert (solve_nae(negated) is None) == (model is None)


def test_solvers_are_repeatable():
    rng = random.Random(43)
    f = random_formula(4, 5, Dialect.THREE_SAT, rng)
    g = random_formula(5, 4, Dialect.NAE_THREE_SAT, rng)
    assert len({tuple(sorted((solve_sat(f) or {}).items())) for _ in range(3)}) == 1
    assert len({tuple(sorted((solve_nae(g) or {}).items())) for _ in range(3)}) == 1


def test_solve_nae_demo(nae_demo, nae_demo_assignment):
    assert nae_satisfies(nae_demo, nae_demo_assignment)
    model = solve_nae(nae_demo)
    assert model is not None and nae_satisfies(nae_demo, model)


def test_solver_dialect_guards():
    sat = CnfFormula(3, ((1, 2, 3),), Dialect.THREE_SAT)
    nae = CnfFormula(3, ((1, 2, 3),), Dialect.NAE_THREE_SAT)
    with pytest.raises(DialectError):
        solve_sat(nae)
    with pytest.raises(DialectError):
        solve_nae(sat)
