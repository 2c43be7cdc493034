"""Coloring and homomorphism certificates with their verifiers and the
constructive transformations between them.

A coloring certificate is a family of projections P_a in M (x) M_d summing
(over b-subsets of products, for fold b) to the identity and killing the
edge space: P_a (X (x) I) P_a = 0. Ancilla dimension 1 certifies an ordinary
local coloring; any finite d > 1 certifies a quantum one. Commuting-operator
variants admit no finite-dimensional certificate and are out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .classical import BFoldAssignment, ClassicalGraph
from .opspace import (DEFAULT_TOL, OperatorSubspace, as_matrix, hs_norm,
                      permute_systems, projection_meet)
from .qgraph import BlockAlgebra, QuantumGraph
from .report import VerificationFailure, VerificationReport


@dataclass(frozen=True)
class ColoringCertificate:
    """Projections P_a on (graph space) (x) (ancilla), one per color.

    Zero projections are legal placeholders (some constructions retire a
    color); prune them with :meth:`active_colors` before counting.
    """

    graph_dim: int
    ancilla_dim: int
    fold: int
    projections: tuple

    def __post_init__(self):
        if self.graph_dim < 1 or self.ancilla_dim < 1:
            raise ValueError("dimensions must be positive")
        if self.fold < 1:
            raise ValueError("fold must be >= 1")
        d = self.graph_dim * self.ancilla_dim
        mats = []
        for p in self.projections:
            m = as_matrix(p)
            if m.shape != (d, d):
                raise ValueError("projection shape %r does not match %d x %d"
                                 % (m.shape, d, d))
            m = m.copy()
            m.flags.writeable = False
            mats.append(m)
        object.__setattr__(self, "projections", tuple(mats))

    @property
    def colors(self) -> int:
        return len(self.projections)

    @property
    def total_dim(self) -> int:
        return self.graph_dim * self.ancilla_dim

    @property
    def strategy_type(self) -> str:
        """'loc' for ancilla dimension 1, else 'q'."""
        return "loc" if self.ancilla_dim == 1 else "q"

    def active_colors(self, tol: float = DEFAULT_TOL) -> list:
        return [a for a, p in enumerate(self.projections) if hs_norm(p) > tol]

    def pruned(self, tol: float = DEFAULT_TOL):
        """Certificate without zero projections, plus the index map
        new color -> original color."""
        keep = self.active_colors(tol)
        cert = ColoringCertificate(self.graph_dim, self.ancilla_dim, self.fold,
                                   tuple(self.projections[a] for a in keep))
        return cert, keep

    def conjugated(self, u) -> "ColoringCertificate":
        """Certificate for the graph relabeled by the unitary u."""
        u = as_matrix(u)
        if u.shape != (self.graph_dim, self.graph_dim):
            raise ValueError("unitary does not match the graph leg")
        w = np.kron(u, np.eye(self.ancilla_dim))
        return ColoringCertificate(
            self.graph_dim, self.ancilla_dim, self.fold,
            tuple(w.conj().T @ p @ w for p in self.projections))


@dataclass(frozen=True)
class HomomorphismCertificate:
    """Kraus family F_i : H_src (x) H_anc -> H_dst witnessing a graph map.

    Conditions (checked by verify_homomorphism): sum_i F_i* F_i = I, every
    F_i (S_src (x) I) F_j* lands in S_dst, and every F_i (M_src' (x) I) F_j*
    lands in M_dst'.
    """

    source_dim: int
    target_dim: int
    ancilla_dim: int
    kraus: tuple

    def __post_init__(self):
        mats = []
        shape = (self.target_dim, self.source_dim * self.ancilla_dim)
        for f in self.kraus:
            m = as_matrix(f)
            if m.shape != shape:
                raise ValueError("Kraus shape %r does not match %r" % (m.shape, shape))
            m = m.copy()
            m.flags.writeable = False
            mats.append(m)
        object.__setattr__(self, "kraus", tuple(mats))


# ---------------------------------------------------------------------------
# verifiers

def _membership_space(m: BlockAlgebra, ancilla_dim: int) -> OperatorSubspace:
    return m.tensor(BlockAlgebra.full(ancilla_dim)).basis()


def _edge_with_ancilla(graph: QuantumGraph, ancilla_dim: int) -> np.ndarray:
    eye = np.eye(ancilla_dim)
    if graph.S.dim == 0:
        d = graph.n * ancilla_dim
        return np.zeros((0, d, d), dtype=np.complex128)
    return np.stack([np.kron(x, eye) for x in graph.S.basis])


def _projection_residual(stack: np.ndarray) -> float:
    if stack.shape[0] == 0:
        return 0.0
    idem = np.einsum("aij,ajk->aik", stack, stack) - stack
    herm = stack - np.conj(np.transpose(stack, (0, 2, 1)))
    return max(float(np.max(np.linalg.norm(idem, axis=(1, 2)))),
               float(np.max(np.linalg.norm(herm, axis=(1, 2)))))


def verify_coloring(graph: QuantumGraph, cert: ColoringCertificate,
                    tol: float = DEFAULT_TOL) -> VerificationReport:
    """Verify a fold-1 coloring certificate against a quantum graph."""
    if cert.fold != 1:
        raise ValueError("verify_coloring handles fold 1; use verify_bfold")
    _check_cert_graph(graph, cert)
    rep = VerificationReport("coloring certificate (%d colors, type %s)"
                             % (cert.colors, cert.strategy_type))
    p = np.stack(cert.projections)
    rep.add("projections", _projection_residual(p), tol)
    memb = _membership_space(graph.M, cert.ancilla_dim)
    rep.add("algebra_membership", memb.max_residual(p), tol)
    rep.add("sum_to_identity",
            hs_norm(p.sum(axis=0) - np.eye(cert.total_dim)), tol)
    rep.add("coloring_condition",
            _sandwich_residual(p, _edge_with_ancilla(graph, cert.ancilla_dim)),
            tol)
    return rep


def _sandwich_residual(projs: np.ndarray, edge_ops: np.ndarray) -> float:
    """max_a || P_a (X (x) I) P_a || over the edge basis."""
    if edge_ops.shape[0] == 0 or projs.shape[0] == 0:
        return 0.0
    worst = 0.0
    for p in projs:
        mid = np.einsum("ij,xjk,kl->xil", p, edge_ops, p)
        worst = max(worst, float(np.max(np.linalg.norm(mid, axis=(1, 2)))))
    return worst


def _pvm_products(projs, colors: int, fold: int):
    """Q_T = prod_{a in T} P_a for every b-subset T, factors in ascending
    order (order is immaterial once commutation holds)."""
    out = []
    for t in combinations(range(colors), fold):
        q = projs[t[0]]
        for a in t[1:]:
            q = q @ projs[a]
        out.append((t, q))
    return out


def verify_bfold(graph: QuantumGraph, cert: ColoringCertificate,
                 tol: float = DEFAULT_TOL) -> VerificationReport:
    """Verify a b-fold coloring certificate against a quantum graph.

    Beyond the fold-1 checks this verifies pairwise commutation, the
    partition of identity over b-subset products, the induced subset PVM
    (projections, orthogonality, and the Q_S (X (x) I) Q_T = 0 condition for
    overlapping subsets), and vanishing of (b+1)-fold products.
    """
    _check_cert_graph(graph, cert)
    b, c = cert.fold, cert.colors
    rep = VerificationReport("%d-fold coloring certificate (%d colors, type %s)"
                             % (b, c, cert.strategy_type))
    p = np.stack(cert.projections) if c else np.zeros(
        (0, cert.total_dim, cert.total_dim), dtype=np.complex128)
    rep.add("projections", _projection_residual(p), tol)
    memb = _membership_space(graph.M, cert.ancilla_dim)
    rep.add("algebra_membership", memb.max_residual(p), tol)

    comm = 0.0
    for i in range(c):
        for j in range(i + 1, c):
            comm = max(comm, hs_norm(p[i] @ p[j] - p[j] @ p[i]))
    rep.add("commutation", comm, tol)

    qfam = _pvm_products(p, c, b)
    total = sum((q for _, q in qfam),
                np.zeros((cert.total_dim, cert.total_dim), dtype=np.complex128))
    rep.add("partition_of_identity",
            hs_norm(total - np.eye(cert.total_dim)), tol)

    edge_ops = _edge_with_ancilla(graph, cert.ancilla_dim)
    rep.add("coloring_condition", _sandwich_residual(p, edge_ops), tol)

    if qfam:
        qstack = np.stack([q for _, q in qfam])
        rep.add("pvm_projections", _projection_residual(qstack), tol)
        ortho = 0.0
        qcol = 0.0
        for i, (s, qs) in enumerate(qfam):
            for j, (t, qt) in enumerate(qfam):
                if i < j:
                    ortho = max(ortho, hs_norm(qs @ qt))
                if i != j and set(s) & set(t) and edge_ops.shape[0]:
                    mid = np.einsum("ij,xjk,kl->xil", qs, edge_ops, qt)
                    qcol = max(qcol, float(np.max(np.linalg.norm(mid, axis=(1, 2)))))
        rep.add("pvm_orthogonality", ortho, tol)
        rep.add("pvm_coloring_condition", qcol, tol)

    long_res = 0.0
    if c > b:
        for t, q in _pvm_products(p, c, b + 1):
            long_res = max(long_res, hs_norm(q))
    rep.add("long_products_vanish", long_res, tol)
    return rep


def _check_cert_graph(graph: QuantumGraph, cert: ColoringCertificate) -> None:
    if graph.n != cert.graph_dim:
        raise ValueError("certificate graph dimension %d does not match graph %d"
                         % (cert.graph_dim, graph.n))


def verify_homomorphism(source: QuantumGraph, target: QuantumGraph,
                        cert: HomomorphismCertificate,
                        tol: float = DEFAULT_TOL) -> VerificationReport:
    """Verify a Kraus homomorphism certificate between quantum graphs."""
    if cert.source_dim != source.n or cert.target_dim != target.n:
        raise ValueError("certificate dimensions do not match the graphs")
    rep = VerificationReport("homomorphism certificate (%d Kraus, ancilla %d)"
                             % (len(cert.kraus), cert.ancilla_dim))
    fs = cert.kraus
    d_in = cert.source_dim * cert.ancilla_dim
    tp = sum(f.conj().T @ f for f in fs) - np.eye(d_in)
    rep.add("trace_preserving", hs_norm(tp), tol)

    eye = np.eye(cert.ancilla_dim)
    edge_ops = _edge_with_ancilla(source, cert.ancilla_dim)
    mapped = []
    for fi in fs:
        for fj in fs:
            if edge_ops.shape[0]:
                mapped.append(np.einsum("ij,xjk,kl->xil", fi, edge_ops,
                                        fj.conj().T))
    if mapped:
        rep.add("edge_space_mapped",
                target.S.max_residual(np.concatenate(mapped)), tol)
    else:
        rep.add("edge_space_mapped", 0.0, tol)

    src_comm = source.M.commutant().basis()
    dst_comm = target.M.commutant().basis()
    yi = np.stack([np.kron(y, eye) for y in src_comm.basis])
    mapped_c = [np.einsum("ij,xjk,kl->xil", fi, yi, fj.conj().T)
                for fi in fs for fj in fs]
    rep.add("commutant_mapped",
            dst_comm.max_residual(np.concatenate(mapped_c)), tol)
    return rep


# ---------------------------------------------------------------------------
# transformations between certificates

def pvm_from_bfold(cert: ColoringCertificate, tol: float = DEFAULT_TOL):
    """The subset PVM: list of (b-subset, Q_T) with Q_T = prod_{a in T} P_a.

    Requires pairwise commuting projections; raises otherwise.
    """
    p = cert.projections
    for i in range(cert.colors):
        for j in range(i + 1, cert.colors):
            if hs_norm(p[i] @ p[j] - p[j] @ p[i]) > tol:
                raise ValueError("projections %d and %d do not commute" % (i, j))
    return _pvm_products(p, cert.colors, cert.fold)


def bfold_from_pvm(family, colors: int, fold: int, graph_dim: int,
                   ancilla_dim: int) -> ColoringCertificate:
    """Rebuild projections from a subset family: P_a = sum_{T contains a} Q_T.

    ``family`` is an iterable of (subset, matrix); subsets not listed count
    as zero.
    """
    d = graph_dim * ancilla_dim
    projs = [np.zeros((d, d), dtype=np.complex128) for _ in range(colors)]
    for t, q in family:
        for a in t:
            if not 0 <= a < colors:
                raise ValueError("subset %r uses a color outside [0, %d)" % (t, colors))
            projs[a] = projs[a] + as_matrix(q)
    return ColoringCertificate(graph_dim, ancilla_dim, fold, tuple(projs))


def reduce_bfold(graph: QuantumGraph, cert: ColoringCertificate,
                 tol: float = DEFAULT_TOL):
    """Trade one fold for at least one color: a passing b-fold c-coloring
    yields a (b-1)-fold coloring on strictly fewer colors.

    Running intersections peel off a resolution of identity: with
    T_a = P_a (I - sum_{m < a} T_m), the differences P_a - T_a form the new
    certificate; color 0 always retires, and zero projections are pruned.
    Returns (certificate, mapping) where mapping[i] is the original color of
    new color i. The input is verified first and a failing input raises.
    """
    if cert.fold < 2:
        raise ValueError("reduce_bfold needs fold >= 2")
    rep = verify_bfold(graph, cert, tol)
    if not rep.passed:
        raise VerificationFailure("input certificate fails b-fold verification",
                                  rep, cert)
    p = cert.projections
    d = cert.total_dim
    eye = np.eye(d)
    tsum = np.zeros((d, d), dtype=np.complex128)
    reduced = []
    for a in range(cert.colors):
        t_a = p[a] @ (eye - tsum)
        tsum = tsum + t_a
        reduced.append(p[a] - t_a)
    out = ColoringCertificate(cert.graph_dim, cert.ancilla_dim, cert.fold - 1,
                              tuple(reduced))
    return out.pruned(tol)


def combine_bfold(graph: QuantumGraph, cert1: ColoringCertificate,
                  cert2: ColoringCertificate, tol: float = DEFAULT_TOL,
                  strict: bool = True):
    """Join two fold certificates on the same graph into a
    (b1+b2)-fold coloring on the disjoint union of the palettes.

    The subset PVMs are embedded with independent ancilla legs and met
    pairwise: Q_{S union (T+c1)} = (Q1_S tensored into legs (g, n1, n2))
    meet (Q2_T likewise). The meet need not distribute over the sums that
    rebuild the P_a, so the result is verified and returned together with
    its report; with ``strict`` a failing construction raises (the report
    and certificate stay attached to the exception).
    """
    if cert1.graph_dim != graph.n or cert2.graph_dim != graph.n:
        raise ValueError("certificates do not live on the given graph")
    q1 = pvm_from_bfold(cert1, tol)
    q2 = pvm_from_bfold(cert2, tol)
    n = graph.n
    d1, d2 = cert1.ancilla_dim, cert2.ancilla_dim
    c1, c2 = cert1.colors, cert2.colors
    fold = cert1.fold + cert2.fold
    eye1, eye2 = np.eye(d1), np.eye(d2)
    family = []
    for s, qs in q1:
        a_s = np.kron(qs, eye2)
        for t, qt in q2:
            b_t = permute_systems(np.kron(qt, eye1), [n, d2, d1], [0, 2, 1])
            subset = tuple(sorted(s + tuple(a + c1 for a in t)))
            family.append((subset, projection_meet(a_s, b_t, tol)))
    cert = bfold_from_pvm(family, c1 + c2, fold, n, d1 * d2)
    rep = verify_bfold(graph, cert, tol)
    if strict and not rep.passed:
        raise VerificationFailure("combined certificate fails verification "
                                  "(the subset meets did not recompose)",
                                  rep, cert)
    return cert, rep


def scale_bfold(graph: QuantumGraph, cert: ColoringCertificate, b: int,
                tol: float = DEFAULT_TOL, strict: bool = True):
    """b palette-disjoint copies of a 1-fold coloring, joined into a b-fold
    one. Returns (certificate, report) like combine_bfold."""
    if cert.fold != 1:
        raise ValueError("scale_bfold expects a 1-fold certificate")
    if b < 1:
        raise ValueError("fold must be >= 1")
    if b == 1:
        return cert, verify_bfold(graph, cert, tol)
    out, rep = combine_bfold(graph, cert, cert, tol, strict)
    for _ in range(b - 2):
        out, rep = combine_bfold(graph, out, cert, tol, strict)
    return out, rep


def lexicographic_coloring(certG: ColoringCertificate,
                           certH: ColoringCertificate) -> ColoringCertificate:
    """Compose a b-fold c-coloring of G with a 1-fold b-coloring of H into a
    1-fold c-coloring of the lexicographic product.

    Each subset Q_T of G's PVM is paired with H's projection number
    rank_T(a) (the 1-based position of the color a in the ascending order
    of T): P_a = sum_{T contains a} Q_T (x) P^H_{rank_T(a)}, with legs
    arranged as (G, H, ancilla_G, ancilla_H). The color count equals
    certG.colors.
    """
    b = certG.fold
    if certH.fold != 1:
        raise ValueError("the H certificate must be 1-fold")
    if certH.colors != b:
        raise ValueError("H needs exactly %d colors (the fold of G), got %d"
                         % (b, certH.colors))
    qfam = pvm_from_bfold(certG)
    mg, dg = certG.graph_dim, certG.ancilla_dim
    mh, dh = certH.graph_dim, certH.ancilla_dim
    dims = [mg, dg, mh, dh]
    n = mg * mh
    d_out = dg * dh
    projs = [np.zeros((n * d_out, n * d_out), dtype=np.complex128)
             for _ in range(certG.colors)]
    for t, q in qfam:
        for rank, a in enumerate(sorted(t)):
            block = permute_systems(np.kron(q, certH.projections[rank]),
                                    dims, [0, 2, 1, 3])
            projs[a] = projs[a] + block
    return ColoringCertificate(n, d_out, 1, tuple(projs))


def strong_coloring(certG: ColoringCertificate,
                    certH: ColoringCertificate) -> ColoringCertificate:
    """Product coloring of the strong product: one color per pair (a, b),
    projection P^G_a (x) P^H_b on legs (G, H, ancilla_G, ancilla_H).

    Also valid on the Cartesian product, whose edge space is contained in
    the strong one.
    """
    if certG.fold != 1 or certH.fold != 1:
        raise ValueError("strong_coloring expects 1-fold certificates")
    mg, dg = certG.graph_dim, certG.ancilla_dim
    mh, dh = certH.graph_dim, certH.ancilla_dim
    dims = [mg, dg, mh, dh]
    projs = []
    for pg in certG.projections:
        for ph in certH.projections:
            projs.append(permute_systems(np.kron(pg, ph), dims, [0, 2, 1, 3]))
    return ColoringCertificate(mg * mh, dg * dh, 1, tuple(projs))


def categorical_lift(certG: ColoringCertificate,
                     target_dim: int) -> ColoringCertificate:
    """Pull a coloring of G back along the first-factor projection of a
    categorical product: P_a (x) I on legs (G, H, ancilla)."""
    if certG.fold != 1:
        raise ValueError("categorical_lift expects a 1-fold certificate")
    mg, dg = certG.graph_dim, certG.ancilla_dim
    nh = int(target_dim)
    if nh < 1:
        raise ValueError("target dimension must be positive")
    dims = [mg, dg, nh]
    projs = [permute_systems(np.kron(p, np.eye(nh)), dims, [0, 2, 1])
             for p in certG.projections]
    return ColoringCertificate(mg * nh, dg, 1, tuple(projs))


# ---------------------------------------------------------------------------
# canonical witnesses

def bell_coloring(n: int) -> ColoringCertificate:
    """The n^2 rank-one projections onto the shifted maximally entangled
    states (I (x) X^j Z^k)|Omega>, a coloring of the complete graph on M_n.

    Works because <Omega_jk| (A (x) I) |Omega_jk> = Tr(A)/n vanishes on the
    traceless edge space.
    """
    n = int(n)
    if n < 1:
        raise ValueError("dimension must be positive")
    shift = np.zeros((n, n), dtype=np.complex128)
    for v in range(n):
        shift[(v + 1) % n, v] = 1.0
    clock = np.diag(np.exp(2j * np.pi * np.arange(n) / n))
    omega = np.zeros(n * n, dtype=np.complex128)
    for v in range(n):
        omega[v * n + v] = 1.0 / np.sqrt(n)
    eye = np.eye(n)
    projs = []
    for j in range(n):
        for k in range(n):
            w = np.linalg.matrix_power(shift, j) @ np.linalg.matrix_power(clock, k)
            vec = np.kron(eye, w) @ omega
            projs.append(np.outer(vec, vec.conj()))
    return ColoringCertificate(n, n, 1, tuple(projs))


def sabidussi_witness(g: QuantumGraph, h: QuantumGraph) -> HomomorphismCertificate:
    """Embedding of a factor into the Cartesian product.

    A single identity Kraus operator with the ancilla playing the right
    factor: X (x) I_anc is read as X (x) I_H, which lies in
    S_G (x) M_H' by construction. Exact for arbitrary quantum graphs.
    """
    d = g.n * h.n
    return HomomorphismCertificate(g.n, d, h.n,
                                   (np.eye(d, dtype=np.complex128),))


def hedetniemi_witness(g: QuantumGraph, h: QuantumGraph,
                       factor: int = 1) -> HomomorphismCertificate:
    """Projection of the categorical product onto one factor.

    Kraus family of slice maps: for the first factor, K_j = I_G (x) e_j*
    over the right factor's basis (no ancilla); symmetrically for the
    second.
    """
    ng, nh = g.n, h.n
    if factor == 1:
        fs = tuple(np.kron(np.eye(ng), np.eye(nh)[j][None, :])
                   for j in range(nh))
        return HomomorphismCertificate(ng * nh, ng, 1, fs)
    if factor == 2:
        fs = tuple(np.kron(np.eye(ng)[j][None, :], np.eye(nh))
                   for j in range(ng))
        return HomomorphismCertificate(ng * nh, nh, 1, fs)
    raise ValueError("factor must be 1 or 2")


def complete_lower_bound_extract(graph: QuantumGraph,
                                 cert: ColoringCertificate,
                                 tol: float = DEFAULT_TOL) -> VerificationReport:
    """Counting argument for complete graphs over a single-block algebra.

    For M = C (U (I_d (x) M_k) U*) and a passing b-fold certificate, the
    scaled partial traces R_a = (k/d) (Tr_graph (x) id)(P_a) (computed in
    the block's standard form) are projections summing to b k^2 I on the
    ancilla, which forces at least b * dim M = b k^2 colors. The report
    carries the idempotency, self-adjointness, and sum-rule residuals.
    """
    if len(graph.M.blocks) != 1:
        raise ValueError("extraction needs a single-block algebra, got %d blocks"
                         % len(graph.M.blocks))
    rep_in = verify_bfold(graph, cert, tol)
    if not rep_in.passed:
        raise VerificationFailure("certificate fails b-fold verification",
                                  rep_in, cert)
    d, k = graph.M.blocks[0]
    n, dn = graph.n, cert.ancilla_dim
    u = graph.M.conjugator
    rep = VerificationReport("complete graph lower bound extraction "
                             "(block (%d, %d), fold %d)" % (d, k, cert.fold))
    idem = herm = 0.0
    total = np.zeros((dn, dn), dtype=np.complex128)
    for p in cert.projections:
        if u is not None:
            w = np.kron(u, np.eye(dn))
            p = w.conj().T @ p @ w
        r = (k / d) * np.trace(p.reshape(n, dn, n, dn), axis1=0, axis2=2)
        idem = max(idem, hs_norm(r @ r - r))
        herm = max(herm, hs_norm(r - r.conj().T))
        total = total + r
    rep.add("idempotent", idem, tol)
    rep.add("self_adjoint", herm, tol)
    rep.add("sum_rule", hs_norm(total - cert.fold * k * k * np.eye(dn)), tol)
    rep.notes.append("a passing extraction forces colors >= fold * dim M = %d"
                     % (cert.fold * k * k))
    return rep


# ---------------------------------------------------------------------------
# classical bridge

def to_local_cert(graph: ClassicalGraph,
                  assignment: BFoldAssignment) -> ColoringCertificate:
    """Diagonal certificate of a classical b-fold coloring (ancilla 1)."""
    assignment.validate(graph)
    n = graph.vertex_count
    projs = []
    for a in range(assignment.palette_size):
        p = np.zeros((n, n), dtype=np.complex128)
        for v in range(n):
            if a in assignment.assignment[v]:
                p[v, v] = 1.0
        projs.append(p)
    return ColoringCertificate(n, 1, assignment.fold, tuple(projs))


def from_local_cert(graph: ClassicalGraph, cert: ColoringCertificate,
                    tol: float = DEFAULT_TOL) -> BFoldAssignment:
    """Read a diagonal ancilla-1 certificate back into a color assignment.

    Rejects non-diagonal projections, entries away from {0, 1}, and any
    assignment that is not a proper b-fold coloring of the graph.
    """
    if cert.ancilla_dim != 1:
        raise ValueError("not a local certificate: ancilla dimension %d"
                         % cert.ancilla_dim)
    if cert.graph_dim != graph.vertex_count:
        raise ValueError("certificate does not match the graph")
    n = graph.vertex_count
    sets = [set() for _ in range(n)]
    for a, p in enumerate(cert.projections):
        off = p - np.diag(np.diag(p))
        if hs_norm(off) > tol:
            raise ValueError("projection %d is not diagonal" % a)
        for v in range(n):
            x = p[v, v]
            if abs(x - 1.0) <= tol:
                sets[v].add(a)
            elif abs(x) > tol:
                raise ValueError("projection %d has entry %r away from 0/1 at "
                                 "vertex %d" % (a, x, v))
    out = BFoldAssignment(cert.colors, cert.fold,
                          tuple(frozenset(s) for s in sets))
    out.validate(graph)
    return out
