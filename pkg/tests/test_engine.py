from fractions import Fraction
from itertools import islice

import pytest
from hypothesis import given, settings, strategies as st

from murlab.engine import (
    Budget,
    EngineError,
    ParamPoint,
    PRESETS,
    candidate_params,
    complement_params,
    compute_mur,
    family_mur,
    mur_lower,
    mur_spread,
    mur_upper,
    regular_mur,
    spread_bounds,
    universal_matrix,
)
from murlab.graphs import (
    Graph,
    clique_isolated_apex,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty,
    path,
    petersen,
    star,
)
from murlab.matrices import rank_rational

FAST = Budget(grid_den=2, grid_num=2, random_points=20, algebraic=False)


def test_universal_matrix_examples():
    # A(K3) + (-1)I + 0J + 0D = A - I has rank 3; at (1,-1,0) only gamma shifts
    m = universal_matrix(complete(3), ParamPoint.rational(1, -1, 0))
    assert all(x == 0 for row in m for x in row)
    m = universal_matrix(disjoint_union([complete(2), empty(2)]), ParamPoint.rational(0, 0, 1))
    assert rank_rational(m) == 1
    m = universal_matrix(empty(3), ParamPoint.rational(0, 0, 0))
    assert all(x == 0 for row in m for x in row)


def test_preset_normalization():
    by_name = {p.name: p.normalized for p in PRESETS}
    assert by_name["adjacency"] == ParamPoint.rational(0, 0, 0)
    assert by_name["laplacian"] == ParamPoint.rational(0, 0, -1)
    assert by_name["seidel"] == ParamPoint.rational(
        Fraction(1, 2), Fraction(-1, 2), 0
    )
    assert by_name["complement_adjacency"] == ParamPoint.rational(1, -1, 0)


def test_complement_params_entrywise():
    g = path(4)
    p = ParamPoint.rational(2, 3, 5)
    q = complement_params(g, p)
    u = universal_matrix(g, p)
    uc = universal_matrix(g.complement(), q)
    assert all(
        uc[i][j] == -u[i][j] for i in range(g.n) for j in range(g.n)
    )


def test_complement_params_preserves_rank():
    g = cycle(5)
    p = ParamPoint.rational(Fraction(1, 3), Fraction(-2, 7), Fraction(1, 2))
    q = complement_params(g, p)
    assert rank_rational(universal_matrix(g, p)) == rank_rational(
        universal_matrix(g.complement(), q)
    )


def test_regular_mur():
    assert regular_mur(complete(5)) == 0
    assert regular_mur(cycle(5)) == 2
    assert regular_mur(cycle(6)) == 3
    assert regular_mur(petersen()) == 4
    # complement is K3 u K3, a union of two cliques
    assert regular_mur(complete_bipartite(3, 3)) == 1
    assert regular_mur(disjoint_union([cycle(4), cycle(4)])) == 3
    with pytest.raises(EngineError):
        regular_mur(path(4))


def test_family_mur():
    assert family_mur(complete(6))[0] == 0
    assert family_mur(disjoint_union([complete(3), complete(4)]))[0] == 1
    assert family_mur(disjoint_union([complete(2), complete(3), complete(4)]))[0] == 2
    assert family_mur(clique_isolated_apex(4, 3))[0] == 3
    assert family_mur(clique_isolated_apex(4, 4))[0] == 2
    assert family_mur(path(7))[0] == 5
    assert family_mur(disjoint_union([path(3), path(3)])) is None


def test_mur_lower_examples():
    assert mur_lower(path(6))[0] == 4
    assert mur_lower(disjoint_union([path(3), path(3)]))[0] == 3
    assert mur_lower(star(5))[0] == 1
    lo, cert, _ = mur_lower(disjoint_union([path(5), empty(1)]))
    assert lo == 4 and cert.kind == "path_forest"
    assert cert.data["variant"] == "single-path-plus-isolated"


def test_mur_upper_examples():
    assert mur_upper(cycle(6), FAST)[0] == 3
    assert mur_upper(complete(5), FAST)[0] == 0
    up, cert = mur_upper(disjoint_union([complete(3), empty(2)]), FAST)
    assert up == 1


def test_compute_mur_examples():
    assert compute_mur(path(6), FAST).value == 4
    assert compute_mur(cycle(7), FAST).value == 4
    assert compute_mur(disjoint_union([path(3), path(3)]), FAST).value == 3
    assert compute_mur(petersen(), FAST).value == 4
    assert compute_mur(clique_isolated_apex(4, 4), FAST).value == 2
    assert compute_mur(empty(0), FAST).value == 0


def test_compute_mur_without_family_shortcuts():
    for g in (cycle(6), complete_bipartite(3, 3), disjoint_union([cycle(4), cycle(4)])):
        exact = compute_mur(g)
        res = compute_mur(g, FAST, use_families=False)
        assert res.lower <= exact.value <= res.upper


def test_candidates_deterministic_and_deduplicated():
    g = cycle(5)
    b = Budget(random_points=30, seed=3)
    first = list(islice(candidate_params(g, b), 400))
    second = list(islice(candidate_params(g, b), 400))
    assert first == second
    keys = [(p.beta, p.gamma, p.delta) for p in first]
    assert len(keys) == len(set(keys))


def test_candidate_cap():
    g = cycle(5)
    assert len(list(candidate_params(g, Budget(max_candidates=10)))) == 10


def graphs_strategy(max_n=6):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n
        ).map(lambda pairs: Graph.from_edges(n, [(u, v) for u, v in pairs if u != v]))
    )


@settings(max_examples=40, deadline=None)
@given(graphs_strategy())
def test_bounds_are_ordered_and_within_range(g):
    res = compute_mur(g, FAST)
    assert 0 <= res.lower <= res.upper <= max(g.n - 2, 0)


@settings(max_examples=25, deadline=None)
@given(graphs_strategy(5), st.data())
def test_rank_never_below_certified_lower(g, data):
    lo, _, _ = mur_lower(g, FAST)
    fr = st.fractions(min_value=-6, max_value=6, max_denominator=4)
    p = ParamPoint(data.draw(fr), data.draw(fr), data.draw(fr))
    assert rank_rational(universal_matrix(g, p)) >= lo


def test_spread_bounds_formula():
    # P5 middle vertex: degree 2, n = 5
    assert spread_bounds(path(5), 2) == (-2, 4)
    # star center: degree 4, n = 5
    assert spread_bounds(star(5), 0) == (0, 2)


def test_mur_spread_examples():
    res = mur_spread(path(5), 0, FAST)
    assert res.value == 1
    res = mur_spread(star(5), 1, FAST)  # pendant vertex
    assert res.value == 0
    with pytest.raises(EngineError):
        mur_spread(path(5), 9, FAST)
    with pytest.raises(EngineError):
        mur_spread(empty(1), 0, FAST)


def test_mixed_algebraic_contexts_rejected():
    from murlab.algebraic import AlgebraicContext
    from murlab.polynomials import Poly

    a = AlgebraicContext(Poly((-2, 0, 1))).generator()
    b = AlgebraicContext(Poly((-3, 0, 1))).generator()
    with pytest.raises(EngineError):
        ParamPoint(a, b, Fraction(0))
