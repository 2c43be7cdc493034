"""The four quantum graph products and their classical cross-check.

Every product carries the tensor algebra M_G (x) M_H and an edge space built
from tensor factors; on classical embeddings each one reduces to the familiar
graph product under the vertex-pair identification, which classical_crosscheck
verifies directly.
"""

from __future__ import annotations

import numpy as np

from .classical import ClassicalGraph, classical_product
from .opspace import DEFAULT_TOL, OperatorSubspace, orthonormalize
from .qgraph import QuantumGraph, from_classical
from .report import VerificationReport

PRODUCT_KINDS = ("cartesian", "categorical", "lexicographic", "strong")

#: Shown whenever a lexicographic product is reported: the second summand of
#: its edge space uses the left factor's commutant, S = S_G (x) B(H_H)
#: + M_G' (x) S_H, which is what the chi_b upper bound construction needs.
LEXICOGRAPHIC_NOTE = ("lexicographic product: edge space is "
                      "S_G (x) B(H_H) + M_G' (x) S_H "
                      "(left factor's commutant in the second summand)")


def _product_parts(g: QuantumGraph, h: QuantumGraph, kind: str):
    sg, sh = g.S, h.S
    mgp = g.M.commutant().basis()
    mhp = h.M.commutant().basis()
    if kind == "cartesian":
        return [sg.tensor(mhp), mgp.tensor(sh)]
    if kind == "categorical":
        return [sg.tensor(sh)]
    if kind == "lexicographic":
        return [sg.tensor(OperatorSubspace.full(h.n)), mgp.tensor(sh)]
    if kind == "strong":
        return [sg.tensor(mhp), mgp.tensor(sh), sg.tensor(sh)]
    raise ValueError("unknown product kind %r; expected one of %r"
                     % (kind, PRODUCT_KINDS))


def product(g: QuantumGraph, h: QuantumGraph, kind: str) -> QuantumGraph:
    """Build one of the four products of quantum graphs.

    The assembled spanning family is re-orthonormalized once at the end; for
    valid inputs its parts are already mutually orthogonal, so the computed
    dimension equals the exact counting formula for the kind.
    """
    parts = _product_parts(g, h, kind)
    n = g.n * h.n
    stacked = [b for part in parts for b in part.basis]
    s = orthonormalize(stacked, ambient_dim=n)
    return QuantumGraph(s, g.M.tensor(h.M))


def cartesian(g: QuantumGraph, h: QuantumGraph) -> QuantumGraph:
    """S = S_G (x) M_H' + M_G' (x) S_H."""
    return product(g, h, "cartesian")


def categorical(g: QuantumGraph, h: QuantumGraph) -> QuantumGraph:
    """S = S_G (x) S_H."""
    return product(g, h, "categorical")


def lexicographic(g: QuantumGraph, h: QuantumGraph) -> QuantumGraph:
    """S = S_G (x) B(H_H) + M_G' (x) S_H. Not symmetric in its factors."""
    return product(g, h, "lexicographic")


def strong(g: QuantumGraph, h: QuantumGraph) -> QuantumGraph:
    """S = S_G (x) M_H' + M_G' (x) S_H + S_G (x) S_H."""
    return product(g, h, "strong")


def pair_identification_unitary(ng: int, nh: int) -> np.ndarray:
    """Unitary sending delta_(v,a) (vertex index v*nh + a) to delta_v (x) delta_a.

    With both sides ordered lexicographically this is the identity matrix;
    it is still constructed explicitly so the cross-check does not depend on
    that coincidence.
    """
    n = ng * nh
    u = np.zeros((n, n), dtype=np.complex128)
    for v in range(ng):
        for a in range(nh):
            u[v * nh + a, v * nh + a] = 1.0
    return u


def classical_crosscheck(g: ClassicalGraph, h: ClassicalGraph, kind: str,
                         tol: float = DEFAULT_TOL) -> VerificationReport:
    """Check that the quantum product of classical embeddings is the
    embedding of the classical product.

    Conjugates the classical product's edge space and diagonal algebra by
    the vertex-pair identification unitary and reports mutual containment
    against the quantum side.
    """
    rep = VerificationReport("classical product cross-check (%s)" % kind)
    gq = from_classical(g)
    hq = from_classical(h)
    prod_q = product(gq, hq, kind)
    prod_c = from_classical(classical_product(g, h, kind))
    u = pair_identification_unitary(g.vertex_count, h.vertex_count)

    def conj(stack):
        if stack.shape[0] == 0:
            return stack
        return np.einsum("ij,xjk,kl->xil", u, stack, u.conj().T)

    s_c = conj(prod_c.S.basis)
    r1 = prod_q.S.max_residual(s_c)
    r2 = OperatorSubspace(prod_q.n, s_c).max_residual(prod_q.S.basis) \
        if prod_c.S.dim else (0.0 if prod_q.S.dim == 0 else 1.0)
    rep.add("edge_space_match", max(r1, r2), tol)

    alg_q = prod_q.M.basis()
    alg_c = conj(prod_c.M.basis().basis)
    r3 = alg_q.max_residual(alg_c)
    r4 = OperatorSubspace(prod_q.n, alg_c).max_residual(alg_q.basis)
    rep.add("algebra_match", max(r3, r4), tol)

    if prod_c.S.dim != prod_q.S.dim:
        rep.add("edge_space_dimension", 1.0, tol)
    else:
        rep.add("edge_space_dimension", 0.0, tol)
    if kind == "lexicographic":
        rep.notes.append(LEXICOGRAPHIC_NOTE)
    return rep
