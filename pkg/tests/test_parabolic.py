"""Parabolics, grading elements and Hasse diagrams."""

from fractions import Fraction

import pytest

from bgg import parabolic as pmod
from bgg import weyl
from bgg.weyl import Root


def test_parabolic_validation():
    with pytest.raises(ValueError):
        pmod.parabolic(1, (1,))
    with pytest.raises(ValueError):
        pmod.parabolic(3, ())
    with pytest.raises(ValueError):
        pmod.parabolic(3, (0,))
    with pytest.raises(ValueError):
        pmod.parabolic(3, (4,))
    assert pmod.parabolic(4, (2, 2, 1)).crossed == (1, 2)


def test_levi_nilradical_partition():
    for n in (3, 4, 5):
        p = pmod.parabolic(n, (2,))
        levi = pmod.levi_roots(p)
        nil = pmod.nilradical_roots(p)
        assert len(nil) == 4 * (n - 2) + 3
        assert sorted(levi + nil) == sorted(weyl.positive_roots(n))
        assert not set(levi) & set(nil)


def test_grading_element():
    assert pmod.grading_element(pmod.parabolic(5, (2,))) == (1, 1, 0, 0, 0)
    assert pmod.grading_element(pmod.parabolic(5, (1,))) == (1, 0, 0, 0, 0)
    assert pmod.grading_element(pmod.parabolic(4, (1, 3))) == (2, 1, 1, 0)
    half = Fraction(1, 2)
    assert pmod.grading_element(pmod.parabolic(3, (3,))) == (half, half, half)


@pytest.mark.parametrize("crossed", [(1,), (2,), (3,), (1, 2), (2, 4), (4,)])
def test_grading_element_defining_property(crossed):
    """alpha(E) is 1 on crossed simple roots and 0 on the others."""
    n = 4
    p = pmod.parabolic(n, crossed)
    e = pmod.grading_element(p)
    for m, s in enumerate(weyl.simple_roots(n), start=1):
        value = sum(a * b for a, b in zip(s.vector(n), e))
        assert value == (1 if m in p.crossed else 0)


def test_nilradical_grading_degrees():
    """For crossed {2} the nilradical has degrees 1 and 2; degree 2 is
    spanned by b_1, b_2 and c_12."""
    for n in (3, 5):
        p = pmod.parabolic(n, (2,))
        e = pmod.grading_element(p)
        degrees = {}
        for r in pmod.nilradical_roots(p):
            degrees.setdefault(sum(a * b for a, b in zip(r.vector(n), e)), []).append(r)
        assert set(degrees) == {1, 2}
        assert sorted(degrees[2]) == sorted([Root("b", 1), Root("b", 2), Root("c", 1, 2)])
        assert len(degrees[1]) == 4 * (n - 2)


def test_conformal_weight_and_order_bound():
    p = pmod.parabolic(4, (2,))
    assert pmod.conformal_weight(weyl.rho(4), p) == 7
    assert pmod.order_bound((3, 2, 1, 0), (2, 1, 1, 0), p) == 2
    # half-integer grading element still produces exact values
    p3 = pmod.parabolic(3, (3,))
    assert pmod.conformal_weight((1, 1, 1), p3) == Fraction(3, 2)
    drop = pmod.order_bound((2, 2, 2), (2, 2, 0), p3)
    assert drop == 1 and isinstance(drop, int)
    with pytest.raises(ValueError):
        pmod.conformal_weight((1, 2), p)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_node_count_crossed2(n):
    hd = pmod.hasse_diagram(pmod.parabolic(n, (2,)))
    assert hd.node_count() == 2 * n * (n - 1)
    assert len({nd.weight for nd in hd.nodes}) == hd.node_count()


def test_node_count_crossed1():
    for n in (3, 4, 5):
        hd = pmod.hasse_diagram(pmod.parabolic(n, (1,)))
        assert hd.node_count() == 2 * n
        firsts = [nd.weight[0] for nd in hd.nodes]
        assert sorted(firsts) == sorted(
            list(range(1, n + 1)) + list(range(-n, 0))
        )


def test_full_flag_count():
    hd = pmod.hasse_diagram(pmod.parabolic(3, (1, 2, 3)))
    assert hd.node_count() == 48


def _levi_subgroup(n, crossed):
    p = pmod.parabolic(n, crossed)
    gens = [
        weyl.reflection(r, n)
        for r in weyl.simple_roots(n)
        if all(weyl.simple_coefficient(r, m, n) == 0 for m in p.crossed)
    ]
    group = {weyl.identity(n)}
    frontier = list(group)
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                c = weyl.compose(w, g)
                if c not in group:
                    group.add(c)
                    nxt.append(c)
        frontier = nxt
    return group


@pytest.mark.parametrize(
    "n,crossed", [(3, (2,)), (4, (2,)), (4, (1,)), (3, (3,)), (4, (1, 3))]
)
def test_nodes_are_minimal_coset_representatives(n, crossed):
    """Oracle: enumerate the full Weyl group, cut it into cosets under left
    multiplication by the Levi subgroup, and check that the diagram nodes
    are exactly the unique minimal-length coset members."""
    wl = _levi_subgroup(n, crossed)
    hd = pmod.hasse_diagram(pmod.parabolic(n, crossed))
    reps = {nd.element for nd in hd.nodes}
    seen = set()
    cosets = 0
    for w in weyl.all_elements(n):
        if w in seen:
            continue
        coset = {weyl.compose(u, w) for u in wl}
        seen |= coset
        cosets += 1
        lmin = min(weyl.length(v) for v in coset)
        mins = [u for u in coset if weyl.length(u) == lmin]
        assert len(mins) == 1
        assert set(coset) & reps == set(mins)
    assert cosets == hd.node_count()


def test_node_order_and_weights():
    hd = pmod.hasse_diagram(pmod.parabolic(4, (2,)))
    lengths = [nd.length for nd in hd.nodes]
    assert lengths == sorted(lengths)
    assert hd.nodes[0].element == weyl.identity(4)
    for nd in hd.nodes:
        assert nd.weight == weyl.standard_action(nd.element, weyl.rho(4))
        assert weyl.length(nd.element) == nd.length
        assert weyl.is_dominant(nd.weight, (2,), weyl.STRICTLY_FOR_LEVI)


def test_edges_match_arrow_oracle():
    hd = pmod.hasse_diagram(pmod.parabolic(3, (2,)))
    edges = {(e.source, e.target, e.root) for e in hd.edges}
    oracle = set()
    for i, a in enumerate(hd.nodes):
        for j, b in enumerate(hd.nodes):
            r = weyl.arrow(a.element, b.element)
            if r is not None:
                oracle.add((i, j, r))
    assert edges == oracle
    assert len(edges) == 16


@pytest.mark.parametrize("crossed", [(2,), (1,), (1, 3)])
def test_edge_orders_from_pairing(crossed):
    """The conformal drop along an edge factors as
    <source weight, alpha^vee> * alpha(E)."""
    p = pmod.parabolic(4, crossed)
    hd = pmod.hasse_diagram(p)
    e = pmod.grading_element(p)
    for edge in hd.edges:
        mu = hd.nodes[edge.source].weight
        grading = sum(a * b for a, b in zip(edge.root.vector(4), e))
        assert edge.order == weyl.pairing(mu, edge.root) * grading
        assert isinstance(edge.order, int) and edge.order >= 1
        assert (
            hd.nodes[edge.target].length == hd.nodes[edge.source].length + 1
        )


def test_custom_regular_base():
    base = (5, 3, 1)
    hd = pmod.hasse_diagram(pmod.parabolic(3, (2,)), base)
    for nd in hd.nodes:
        assert nd.weight == weyl.standard_action(nd.element, base)


def test_base_validation():
    p = pmod.parabolic(3, (2,))
    with pytest.raises(ValueError, match="orbit"):
        pmod.hasse_diagram(p, (2, 2, 1))
    with pytest.raises(ValueError, match="orbit"):
        pmod.hasse_diagram(p, (1, 2, 3))
    with pytest.raises(ValueError):
        pmod.hasse_diagram(p, (3, 2, 1, 0))
