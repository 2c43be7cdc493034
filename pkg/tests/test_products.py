"""Quantum graph products and the classical cross-check."""

import numpy as np
import pytest

import quantumgraphs as qg
from quantumgraphs.opspace import orthonormalize, permute_systems
from quantumgraphs.products import (
    LEXICOGRAPHIC_NOTE, classical_crosscheck, product)


def embedded(g):
    return qg.from_classical(g)


def test_edge_space_dimension_matches_classical_edge_count():
    # |ordered edges of the classical product| is an independent oracle for
    # dim S of the quantum product of two embeddings, for every kind
    g, h = qg.cycle(5), qg.path(3)
    for kind in qg.PRODUCT_KINDS:
        p = product(embedded(g), embedded(h), kind)
        expected = 2 * qg.classical_product(g, h, kind).edge_count
        assert p.S.dim == expected, kind


def test_products_pass_axioms_smoke():
    pairs = [(qg.cycle(5), qg.complete(2)), (qg.path(3), qg.cycle(4))]
    for g, h in pairs:
        for kind in qg.PRODUCT_KINDS:
            p = product(embedded(g), embedded(h), kind)
            rep = qg.verify_quantum_graph(p)
            assert rep.passed, "%s\n%s" % (kind, rep)


def test_product_algebra_is_tensor_of_factors():
    g = qg.complete_quantum_graph(qg.BlockAlgebra.full(2))
    h = embedded(qg.complete(2))
    p = product(g, h, "strong")
    assert p.n == 4
    assert p.M.equals(g.M.tensor(h.M))


def test_containment_order_between_kinds():
    # right factor must not be complete or strong and lexicographic coincide
    g, h = embedded(qg.cycle(4)), embedded(qg.path(3))
    built = {kind: product(g, h, kind) for kind in qg.PRODUCT_KINDS}
    assert qg.is_subgraph(built["cartesian"], built["strong"])
    assert qg.is_subgraph(built["categorical"], built["strong"])
    assert qg.is_subgraph(built["strong"], built["lexicographic"])
    assert not qg.is_subgraph(built["lexicographic"], built["strong"])


def test_lexicographic_by_complete_equals_strong():
    g, h = embedded(qg.cycle(4)), embedded(qg.complete(2))
    lex = product(g, h, "lexicographic")
    strong = product(g, h, "strong")
    assert lex.S.equals_span(strong.S)


@pytest.mark.parametrize("kind", ["cartesian", "categorical", "strong"])
def test_symmetric_kinds_commute_up_to_leg_swap(kind):
    g, h = embedded(qg.cycle(5)), embedded(qg.path(3))
    gh = product(g, h, kind)
    hg = product(h, g, kind)
    swapped = orthonormalize([permute_systems(m, [5, 3], [1, 0])
                              for m in gh.S.basis], ambient_dim=15)
    assert swapped.equals_span(hg.S)


def test_lexicographic_is_not_symmetric():
    g, h = embedded(qg.cycle(5)), embedded(qg.complete(2))
    assert product(g, h, "lexicographic").S.dim == 50
    assert product(h, g, "lexicographic").S.dim == 70


def test_k1_is_neutral_where_it_should_be():
    k1 = embedded(qg.complete(1))
    h = embedded(qg.cycle(4))
    for kind in ("cartesian", "lexicographic", "strong"):
        p = product(k1, h, kind)
        assert p.S.equals_span(h.S), kind
    # the edgeless factor kills every categorical edge
    assert product(k1, h, "categorical").S.dim == 0


def test_product_with_noncommutative_factor():
    g = qg.complete_quantum_graph(qg.BlockAlgebra.full(2))
    h = embedded(qg.complete(2))
    for kind in qg.PRODUCT_KINDS:
        rep = qg.verify_quantum_graph(product(g, h, kind))
        assert rep.passed, "%s\n%s" % (kind, rep)
    assert product(g, h, "cartesian").S.dim == 3 * 2 + 1 * 2


def test_unknown_kind_rejected():
    g = embedded(qg.complete(2))
    with pytest.raises(ValueError):
        product(g, g, "modular")


def test_classical_crosscheck_passes_on_all_kinds():
    g, h = qg.cycle(5), qg.complete(2)
    for kind in qg.PRODUCT_KINDS:
        rep = classical_crosscheck(g, h, kind)
        assert rep.passed, "%s\n%s" % (kind, rep)
        assert rep.max_residual < 1e-9
    lex = classical_crosscheck(g, h, "lexicographic")
    assert any(LEXICOGRAPHIC_NOTE in note for note in lex.notes)


def test_classical_crosscheck_catches_a_wrong_identification():
    # the categorical edge space is not the cartesian one, so checking one
    # against the other must fail
    g, h = qg.cycle(5), qg.complete(2)
    quantum = product(embedded(g), embedded(h), "categorical")
    classical = qg.from_classical(qg.classical_product(g, h, "cartesian"))
    assert not quantum.S.equals_span(classical.S)
