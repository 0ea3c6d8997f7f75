"""Matrix realization of sp(2n), PBW straightening and singular vectors."""

import random
from fractions import Fraction

import numpy as np
import pytest

from bgg import verma, weyl
from bgg.weyl import Root


@pytest.fixture(scope="module")
def lie3():
    return verma.LieData(3)


@pytest.fixture(scope="module")
def lie4():
    return verma.LieData(4)


def test_basis_size(lie3, lie4):
    assert len(lie3._matrices) == 21  # dim sp(6)
    assert len(lie4._matrices) == 36  # dim sp(8)


def test_matrices_lie_in_sp(lie3):
    n = 3
    j = np.zeros((2 * n, 2 * n), dtype=np.int64)
    j[:n, n:] = np.eye(n, dtype=np.int64)
    j[n:, :n] = -np.eye(n, dtype=np.int64)
    for lab, m in lie3._matrices.items():
        assert np.array_equal(m.T @ j + j @ m, np.zeros_like(m)), lab


def test_e_y_h_triples(lie3):
    """[e_alpha, y_alpha] is the coroot, and alpha takes value 2 on it."""
    n = 3
    for root in weyl.positive_roots(n):
        e = lie3.matrix(("e", root))
        y = lie3.matrix(("y", root))
        h = e @ y - y @ e
        terms = lie3.bracket(("e", root), ("y", root))
        assert all(lab[0] == "h" for lab, _ in terms)
        recon = sum(c * lie3.matrix(lab) for lab, c in terms)
        assert np.array_equal(recon, h)
        # alpha(h_alpha) = 2, read off from [h_alpha, e_alpha] = alpha(h_alpha) e_alpha
        assert np.array_equal(h @ e - e @ h, 2 * e)


def test_specific_brackets(lie3):
    a13, a23, c23, b2 = Root("a", 1, 3), Root("a", 2, 3), Root("c", 2, 3), Root("b", 2)
    assert lie3.bracket(("y", c23), ("y", a23)) == ((("y", b2), 2),)
    assert lie3.bracket(("e", Root("a", 1, 2)), ("e", a23)) == ((("e", a13), 1),)
    assert lie3.bracket(("e", a13), ("e", Root("a", 1, 2))) == ()
    assert lie3.bracket(("h", 1), ("e", a13)) == ((("e", a13), 1),)
    assert lie3.bracket(("h", 3), ("e", a13)) == ((("e", a13), -1),)


def test_bracket_closure_exhaustive_sp6(lie3):
    """decompose() raises if a commutator ever leaves the span."""
    labels = sorted(lie3._matrices, key=repr)
    for x in labels:
        for y in labels:
            lie3.bracket(x, y)


def _bracket_elem(lie, dx, dy):
    out = {}
    for lx, cx in dx.items():
        for ly, cy in dy.items():
            for lz, cz in lie.bracket(lx, ly):
                v = out.get(lz, 0) + cx * cy * cz
                if v:
                    out[lz] = v
                else:
                    out.pop(lz, None)
    return out


def _jacobi_holds(lie, x, y, z):
    lhs = _bracket_elem(lie, {x: 1}, _bracket_elem(lie, {y: 1}, {z: 1}))
    for part in (
        _bracket_elem(lie, _bracket_elem(lie, {x: 1}, {y: 1}), {z: 1}),
        _bracket_elem(lie, {y: 1}, _bracket_elem(lie, {x: 1}, {z: 1})),
    ):
        for lab, c in part.items():
            v = lhs.get(lab, 0) - c
            if v:
                lhs[lab] = v
            else:
                lhs.pop(lab, None)
    return not lhs


def test_jacobi_sampled(lie4):
    labels = sorted(lie4._matrices, key=repr)
    rng = random.Random(11)
    for _ in range(500):
        x, y, z = (rng.choice(labels) for _ in range(3))
        assert _jacobi_holds(lie4, x, y, z)


def test_decompose_rejects_outside_sp(lie3):
    bad = np.zeros((6, 6), dtype=np.int64)
    bad[0, 0] = 1  # E_11 alone is not in sp(6)
    with pytest.raises(AssertionError):
        lie3.decompose(bad)


def test_lie_data_validation():
    with pytest.raises(ValueError):
        verma.LieData(1)


def test_simple_raising_labels():
    labels = verma.simple_raising_labels(3)
    assert labels == [
        ("e", Root("a", 1, 2)),
        ("e", Root("a", 2, 3)),
        ("e", Root("b", 3)),
    ]


# ---------------------------------------------------------------------------
# Levi modules


def test_levi_gl2_factor(lie4):
    mod = verma.LeviModule(4, (3, 1, 0, 0)).attach(lie4)
    assert not mod.has_standard
    assert mod.m == 2
    assert len(mod.basis) == 3
    assert mod.weight(0) == (3, 1, 0, 0)
    assert mod.weight(1) == (2, 2, 0, 0)
    assert mod.weight(2) == (1, 3, 0, 0)
    a12 = ("e", Root("a", 1, 2))
    ya12 = ("y", Root("a", 1, 2))
    assert mod.act(a12, 0) == []
    assert mod.act(a12, 1) == [(0, 1)]
    assert mod.act(a12, 2) == [(1, 2)]
    assert mod.act(ya12, 0) == [(1, 2)]
    assert mod.act(ya12, 1) == [(2, 1)]
    assert mod.act(ya12, 2) == []
    assert mod.act(("h", 1), 1) == [(1, 2)]
    assert mod.act(("h", 2), 1) == [(1, 2)]
    assert mod.act(("h", 3), 1) == []


def test_levi_standard_factor(lie4):
    mod = verma.LeviModule(4, (2, 1, 1, 0)).attach(lie4)
    assert mod.has_standard
    assert mod.v_dim == 4
    assert len(mod.basis) == 2 * 4  # (m+1) * v_dim with m = 1
    # t = 0, 1 are e_3, e_4; t = 2, 3 are f_3, f_4
    i_e3 = mod._index[(0, 0)]
    i_e4 = mod._index[(0, 1)]
    i_f3 = mod._index[(0, 2)]
    i_f4 = mod._index[(0, 3)]
    a34 = ("e", Root("a", 3, 4))
    assert mod.act(a34, i_e4) == [(i_e3, 1)]
    assert mod.act(a34, i_e3) == []
    assert mod.act(a34, i_f3) == [(i_f4, -1)]
    assert mod.weight(i_e3) == (2, 1, 1, 0)
    assert mod.weight(i_f4) == (2, 1, 0, -1)
    assert mod.act(("h", 3), i_e3) == [(i_e3, 1)]
    assert mod.act(("h", 4), i_f4) == [(i_f4, -1)]


def test_levi_module_validation():
    with pytest.raises(ValueError):
        verma.LeviModule(4, (1, 2, 0, 0))
    with pytest.raises(NotImplementedError):
        verma.LeviModule(4, (3, 1, 2, 0))


# ---------------------------------------------------------------------------
# PBW straightening


@pytest.fixture(scope="module")
def m3(lie3):
    return verma.GeneralizedVerma(3, (0, 0, 0), lie=lie3)


def test_letter_order(m3):
    names = [lab[1].label() for lab in m3.letters]
    assert names == ["a13", "a23", "c13", "c23", "b1", "b2", "c12"]


def test_highest_weight(m3):
    assert m3.weight_of(m3.highest()) == (0, 0, 0)
    assert m3.act(("e", Root("c", 1, 2)), m3.highest()) == {}
    assert m3.act(("e", Root("a", 1, 3)), m3.highest()) == {}


def test_pbw_commutator_identity(m3):
    """Y_c23 Y_a23 - Y_a23 Y_c23 = 2 Y_b2 as operators on the module."""
    c23, a23, b2 = Root("c", 2, 3), Root("a", 2, 3), Root("b", 2)
    lhs = m3.combine(
        [(1, (c23, a23), (0, None)), (-1, (a23, c23), (0, None))]
    )
    assert lhs == m3.monomial((b2,), (0, None), 2)


def test_monomials_are_normal_ordered(m3):
    c23, a13 = Root("c", 2, 3), Root("a", 1, 3)
    elem = m3.monomial((c23, a13), (0, None))
    for (word, _), coeff in elem.items():
        assert list(word) == sorted(word)
        assert isinstance(coeff, Fraction)


def test_act_respects_brackets(m3):
    """x.(y.v) - y.(x.v) = [x, y].v for mixed raising and lowering letters."""
    v = m3.monomial((Root("a", 2, 3), Root("b", 2)), (0, None))
    pairs = [
        (("e", Root("a", 2, 3)), ("y", Root("c", 2, 3))),
        (("e", Root("b", 3)), ("y", Root("c", 1, 3))),
        (("y", Root("a", 1, 3)), ("y", Root("c", 1, 2))),
        (("h", 2), ("y", Root("a", 2, 3))),
    ]
    for x, y in pairs:
        lhs = m3.act(x, m3.act(y, v))
        for key, c in m3.act(y, m3.act(x, v)).items():
            m3._add(lhs, key, -c)
        rhs = m3.zero()
        for z, zc in m3.lie.bracket(x, y):
            for key, c in m3.act(z, v).items():
                m3._add(rhs, key, zc * c)
        assert lhs == rhs


def test_term_weight(m3):
    a13 = Root("a", 1, 3)
    elem = m3.monomial((a13,), (0, None))
    assert m3.weight_of(elem) == (-1, 0, 1)
    mixed = m3.combine([(1, (a13,), (0, None)), (1, (Root("b", 1),), (0, None))])
    with pytest.raises(ValueError):
        m3.weight_of(mixed)


def test_degree_cap():
    mp = verma.GeneralizedVerma(3, (0, 0, 0), cap=1)
    with pytest.raises(OverflowError):
        mp.monomial((Root("a", 1, 3), Root("a", 2, 3)), (0, None))


def test_weight_space_consistency(m3):
    mu = (-2, -1, 1)
    space = m3.weight_space(mu)
    assert space
    assert len(space) == len(set(space))
    for key in space:
        assert m3.term_weight(key) == mu


def test_highest_vector_is_maximal(m3):
    ok, failures = m3.check_maximal(m3.highest())
    assert ok and failures == []
    assert m3.check_maximal(m3.zero()) == (False, [])


# ---------------------------------------------------------------------------
# the singular-vector catalogue


def test_rows_exist_for_all_cases():
    for n in (3, 4, 5, 6):
        for k in range(1, n):
            for sign in "+-":
                row = verma.singular_vector_row(n, k, sign)
                assert row.n == n and row.k == k and row.sign == sign
                assert len(row.lam) == n and len(row.mu) == n
    with pytest.raises(ValueError):
        verma.singular_vector_row(5, 0)
    with pytest.raises(ValueError):
        verma.singular_vector_row(5, 5)
    with pytest.raises(ValueError):
        verma.singular_vector_row(5, 2, "x")


@pytest.mark.parametrize("n", [3, 4])
def test_verify_first_operators(n):
    results = verma.verify_first_operators(n)
    assert len(results) == 2 * (n - 1)
    for r in results:
        assert r.d1_match, r.row.name
        assert r.weight_ok, r.row.name
        assert r.maximal_ok, (r.row.name, r.failures)
        assert r.kernel_dim == 1, r.row.name
        assert r.ok


def test_perturbed_rows_fail(lie4):
    for k in range(1, 4):
        for sign in "+-":
            row = verma.singular_vector_row(4, k, sign)
            r = verma.verify_row(row, lie4, perturb=True, kernel=False)
            assert not r.maximal_ok, row.name
            assert r.failures


def test_verification_result_flags(lie3):
    r = verma.verify_row(verma.singular_vector_row(3, 2, "+"), lie3)
    assert r.ok
    r.kernel_dim = 2
    assert not r.ok
