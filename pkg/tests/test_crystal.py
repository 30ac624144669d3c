import pytest

from fockforge import checks, crystal, grading
from fockforge.fock import FockSpaceParams
from fockforge.partitions import addable_removable, count_multipartitions, multipartitions


def test_small_moves():
    p = FockSpaceParams(2, 1, (0,), 4)
    assert crystal.tilde_f(0, ((),), p) == ((1,),)
    assert crystal.tilde_e(1, ((2, 1),), p) == ((2,),)
    # the other removable 1-node is not the one the signature rule picks
    assert crystal.tilde_f(1, ((1, 1),), p) is None
    assert crystal.tilde_f(1, ((2,),), p) == ((2, 1),)


def test_reduced_signature_cancels_r_then_a():
    word = [("A", 1), ("R", 2), ("A", 3), ("R", 4), ("R", 5), ("A", 6)]
    assert crystal.reduced_signature(word) == ([1], [4])


@pytest.mark.parametrize("order", crystal.ORDERS)
@pytest.mark.parametrize("charge", [(0, 0), (1, -1), (2, -2)])
def test_crystal_axioms(order, charge):
    p = FockSpaceParams(2, 2, charge, 6)
    for n in range(6):
        for mp in multipartitions(n, 2):
            for q in range(2):
                up = crystal.tilde_f(q, mp, p, order)
                if up is not None:
                    assert crystal.tilde_e(q, up, p, order) == mp
                eps, phi = crystal.epsilon_phi(q, mp, p, order)
                a, r = addable_removable(mp, p.charge, p.m, q)
                assert phi - eps == len(a) - len(r)


@pytest.mark.parametrize("order", crystal.ORDERS)
@pytest.mark.parametrize("m,ell,charge", [(2, 1, (0,)), (3, 1, (0,)), (2, 2, (1, -1)), (3, 2, (0, 0)), (2, 3, (1, 0, -1))])
def test_graph_matches_grading(order, m, ell, charge):
    p = FockSpaceParams(m, ell, charge, 6)
    g = crystal.build_graph(p, order)
    assert len(g.layers[0]) == 1
    for n in range(7):
        assert len(g.layers[n]) == count_multipartitions(n, ell)
        assert len(g.highest_weight_vertices(n)) == grading.hw_dim(n, p)
        table = grading.graded_dims(n, p)
        census = crystal.depth_census(g, n)
        assert sum(census.values()) == count_multipartitions(n, ell)
        assert census == {i: table.row_sum(i) for i in range(n + 1) if table.row_sum(i)}
        assert all(i <= n for i in census)


def test_exports_are_deterministic():
    p = FockSpaceParams(2, 2, (0, 1), 3)
    a, b = crystal.build_graph(p), crystal.build_graph(p)
    assert crystal.graph_json(a) == crystal.graph_json(b)
    assert a.to_dot() == b.to_dot()
    assert a.to_dot().startswith("digraph crystal {")


def test_unknown_order():
    with pytest.raises(ValueError):
        crystal.build_graph(FockSpaceParams(2, 1, (0,), 2), "diagonal")


def test_corrupted_order_is_caught(monkeypatch):
    """Sorting by |content| breaks the signature rule and the suite must notice."""
    monkeypatch.setitem(crystal.ORDER_KEYS, crystal.CONTENT_FIRST, lambda p, content: (abs(content), p))
    params = FockSpaceParams(2, 2, (0, 0), 5)
    assert checks.check_crystal_hw_count(params, crystal.CONTENT_FIRST) is not None
    results = checks.run_checks(params, crystal.CONTENT_FIRST)
    failed = [r for r in results if not r.ok]
    assert failed and failed[0].name == "crystal.hw_count"
