"""Shared fixtures: the small graph corpus everything is exercised on.

Session scoped so the acceptance battery and the unit tests reuse the same
objects instead of rebuilding them per test.
"""

import numpy as np
import pytest

import quantumgraphs as qg


def make_classical_corpus():
    return {
        "K1": qg.complete(1),
        "K2": qg.complete(2),
        "K3": qg.complete(3),
        "P3": qg.path(3),
        "C4": qg.cycle(4),
        "C5": qg.cycle(5),
    }


@pytest.fixture(scope="session")
def classical_corpus():
    return make_classical_corpus()


@pytest.fixture(scope="session")
def quantum_corpus(classical_corpus):
    """Classical embeddings plus two genuinely noncommutative complete graphs."""
    out = [(name, qg.from_classical(g)) for name, g in classical_corpus.items()]
    out.append(("KQ_M2", qg.complete_quantum_graph(qg.BlockAlgebra.full(2))))
    out.append(("KQ_I2xM2", qg.complete_quantum_graph(qg.BlockAlgebra([(2, 2)]))))
    return out


@pytest.fixture(scope="session")
def random_pairs():
    # five seeded pairs on at most 6 vertices, mixed sizes and densities
    return [
        (qg.random_graph(4, 0.5, 1), qg.random_graph(5, 0.5, 2)),
        (qg.random_graph(5, 0.6, 3), qg.random_graph(6, 0.4, 4)),
        (qg.random_graph(6, 0.5, 5), qg.random_graph(6, 0.5, 6)),
        (qg.random_graph(3, 0.7, 7), qg.random_graph(6, 0.6, 8)),
        (qg.random_graph(6, 0.3, 9), qg.random_graph(4, 0.6, 10)),
    ]


@pytest.fixture(scope="session")
def bell2():
    return qg.bell_coloring(2)


@pytest.fixture(scope="session")
def bell3():
    return qg.bell_coloring(3)


@pytest.fixture(scope="session")
def c5_two_fold():
    """Exact 2-fold 5-coloring of C5 promoted to a projection certificate."""
    g = qg.cycle(5)
    value, witness = qg.bfold_exact(g, 2)
    assert value == 5
    return qg.to_local_cert(g, witness)


@pytest.fixture(scope="session")
def haar():
    """Deterministic pseudo-random unitaries, one per (n, seed)."""
    def build(n, seed=0):
        rng = np.random.default_rng(seed)
        m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        q, r = np.linalg.qr(m)
        return q * (np.diag(r) / np.abs(np.diag(r)))
    return build
