"""Block algebras, commutants, and the quantum graph axioms."""

import numpy as np
import pytest

import quantumgraphs as qg
from quantumgraphs.opspace import orthonormalize, subspace_sum
from quantumgraphs.qgraph import BlockAlgebra


def span_of(alg):
    return orthonormalize(alg.basis())


def test_block_algebra_dim_is_sum_of_squares():
    m = BlockAlgebra([(3, 1), (1, 2)])
    assert m.dim == 1 + 4
    assert m.ambient_dim == 5
    assert span_of(m).dim == m.dim


def test_full_and_diagonal():
    assert BlockAlgebra.full(3).dim == 9
    d = BlockAlgebra.diagonal(3)
    assert d.dim == 3
    assert span_of(d).contains(np.diag([1.0, 2.0, 3.0]).astype(complex))
    assert not span_of(d).contains(np.ones((3, 3), dtype=complex))


def test_commutant_of_full_is_scalars_and_of_diagonal_is_diagonal():
    cf = BlockAlgebra.full(3).commutant()
    assert cf.dim == 1
    assert span_of(cf).contains(np.eye(3, dtype=complex))
    cd = BlockAlgebra.diagonal(3).commutant()
    assert span_of(cd).equals_span(span_of(BlockAlgebra.diagonal(3)))


@pytest.mark.parametrize("blocks", [((2, 2),), ((1, 3),), ((3, 1), (1, 2))])
def test_commutant_elements_commute(blocks, haar):
    n = sum(a * b for a, b in blocks)
    m = BlockAlgebra(list(blocks), conjugator=haar(n, seed=n))
    prim = m.basis()
    comm = m.commutant().basis()
    worst = max(np.max(np.abs(a @ b - b @ a)) for a in prim for b in comm)
    assert worst < 1e-12
    # dimension count: multiplicities and block sizes trade places
    assert m.commutant().dim == sum(a * a for a, _ in blocks)


@pytest.mark.parametrize("blocks", [((2, 2),), ((1, 3),), ((3, 1), (1, 2))])
def test_double_commutant_returns(blocks, haar):
    n = sum(a * b for a, b in blocks)
    m = BlockAlgebra(list(blocks), conjugator=haar(n, seed=7 * n))
    again = m.commutant().commutant()
    assert span_of(again).equals_span(span_of(m))


def test_algebra_tensor_spans_kron_products():
    m1 = BlockAlgebra.diagonal(2)
    m2 = BlockAlgebra([(1, 2)])  # one M_2 block, ambient dimension 2
    t = m1.tensor(m2)
    assert t.ambient_dim == m1.ambient_dim * m2.ambient_dim
    assert t.dim == m1.dim * m2.dim
    ts = span_of(t)
    for a in m1.basis():
        for b in m2.basis():
            assert ts.contains(np.kron(a, b))


def test_tensor_commutant_consistency(haar):
    # (M1 (x) M2)' must equal M1' (x) M2'
    m1 = BlockAlgebra([(2, 1), (1, 1)], conjugator=haar(3, seed=1))
    m2 = BlockAlgebra.full(2)
    lhs = span_of(m1.tensor(m2).commutant())
    rhs = span_of(m1.commutant().tensor(m2.commutant()))
    assert lhs.equals_span(rhs)


def test_conjugated_by(haar):
    m = BlockAlgebra([(2, 2)])
    u = haar(4, seed=3)
    moved = m.conjugated_by(u)
    for a in m.basis():
        assert span_of(moved).contains(u.conj().T @ a @ u)


def test_block_algebra_validation(haar):
    with pytest.raises(ValueError):
        BlockAlgebra([(0, 2)])
    with pytest.raises(ValueError):
        BlockAlgebra([(2, 2)], conjugator=np.ones((4, 4)))
    with pytest.raises(ValueError):
        BlockAlgebra([(2, 2)], conjugator=haar(3, seed=0))


def test_from_classical_c5():
    g = qg.from_classical(qg.cycle(5))
    assert g.n == 5
    assert g.S.dim == 10  # one matrix unit per ordered edge
    e01 = np.zeros((5, 5), complex)
    e01[0, 1] = 1.0
    e02 = np.zeros((5, 5), complex)
    e02[0, 2] = 1.0
    assert g.S.contains(e01)
    assert not g.S.contains(e02)
    rep = qg.verify_quantum_graph(g)
    assert rep.passed, "\n%s" % rep
    assert rep.max_residual < 1e-12


def test_complete_quantum_graph_dimensions():
    kd = qg.complete_quantum_graph(BlockAlgebra.diagonal(4))
    assert kd.S.dim == 16 - 4
    kf = qg.complete_quantum_graph(BlockAlgebra.full(2))
    assert kf.S.dim == 4 - 1
    km = qg.complete_quantum_graph(BlockAlgebra([(2, 2)]))
    assert km.S.dim == 16 - 4  # commutant I2 (x) M2 has dimension 4
    for k in (kd, kf, km):
        rep = qg.verify_quantum_graph(k)
        assert rep.passed, "\n%s" % rep


def test_classical_embeddings_sit_inside_the_complete_graph():
    c4 = qg.from_classical(qg.cycle(4))
    complete = qg.complete_quantum_graph(BlockAlgebra.diagonal(4))
    assert qg.is_subgraph(c4, complete)
    assert not qg.is_subgraph(complete, c4)


def test_is_subgraph_rejects_mismatched_graphs():
    c4 = qg.from_classical(qg.cycle(4))
    c5 = qg.from_classical(qg.cycle(5))
    with pytest.raises(ValueError):
        qg.is_subgraph(c4, c5)
    full4 = qg.complete_quantum_graph(BlockAlgebra.full(4))
    with pytest.raises(ValueError):
        qg.is_subgraph(c4, full4)  # same dimension, different algebra


def test_verify_rejects_reflexive_edge_space():
    base = qg.from_classical(qg.complete(3))
    s_bad = subspace_sum(base.S, orthonormalize([np.eye(3, dtype=complex)]))
    rep = qg.verify_quantum_graph(qg.QuantumGraph(s_bad, base.M))
    assert not rep.passed
    assert any("orthogonal" in c.name for c in rep.failures())


def test_verify_rejects_non_bimodule():
    a = np.zeros((3, 3), complex)
    a[0, 1] = a[1, 2] = 1.0
    s = orthonormalize([a, a.conj().T])  # adjoint closed but E00 . a leaves it
    rep = qg.verify_quantum_graph(qg.QuantumGraph(s, BlockAlgebra.diagonal(3)))
    assert not rep.passed
    assert any("bimodule" in c.name for c in rep.failures())


def test_verify_rejects_non_adjoint_closed():
    a = np.zeros((2, 2), complex)
    a[0, 1] = 1.0
    rep = qg.verify_quantum_graph(
        qg.QuantumGraph(orthonormalize([a]), BlockAlgebra.diagonal(2)))
    assert not rep.passed


def test_conjugate_graph_preserves_axioms(haar):
    g = qg.complete_quantum_graph(BlockAlgebra([(2, 2)]))
    u = haar(4, seed=11)
    moved = qg.conjugate_graph(g, u)
    rep = qg.verify_quantum_graph(moved)
    assert rep.passed, "\n%s" % rep
    assert moved.S.dim == g.S.dim
    back = qg.conjugate_graph(moved, u.conj().T)
    assert back.S.equals_span(g.S)


def test_conjugate_graph_rejects_non_unitary():
    g = qg.from_classical(qg.complete(2))
    with pytest.raises(ValueError):
        qg.conjugate_graph(g, 2.0 * np.eye(2))
