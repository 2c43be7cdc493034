"""Dense complex matrices and Hilbert-Schmidt subspace operations.

Matrices are plain numpy complex128 arrays. A subspace of M_n is stored as a
Hilbert-Schmidt-orthonormal basis stacked into a (dim, n, n) array. All inner
products use the unnormalized trace: <A, B> = Tr(B* A).
"""

from __future__ import annotations

from math import prod
from typing import Iterable, Sequence

import numpy as np

#: Default tolerance for residual checks.
DEFAULT_TOL = 1e-9

#: Singular values below this fraction of the largest are treated as zero
#: when deciding the rank of a spanning family.
RANK_CUTOFF = 1e-10


def as_matrix(x) -> np.ndarray:
    """Coerce ``x`` to a 2-d complex128 array."""
    m = np.asarray(x, dtype=np.complex128)
    if m.ndim != 2:
        raise ValueError("expected a matrix, got array of shape %r" % (m.shape,))
    return m


def adjoint(a) -> np.ndarray:
    return as_matrix(a).conj().T


def hs_inner(a, b) -> complex:
    """Hilbert-Schmidt pairing <a, b> = Tr(b* a).

    Conjugate-symmetric and sesquilinear (linear in ``a``).
    """
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape:
        raise ValueError("shape mismatch: %r vs %r" % (a.shape, b.shape))
    return complex(np.vdot(b, a))


def hs_norm(a) -> float:
    return float(np.linalg.norm(a))


class OperatorSubspace:
    """An operator subspace of M_n held as an HS-orthonormal basis.

    The constructor trusts its input basis; build one from an arbitrary
    spanning family with :func:`orthonormalize`. The zero subspace is a
    valid instance with an empty basis.
    """

    def __init__(self, ambient_dim: int, basis):
        n = int(ambient_dim)
        if n < 1:
            raise ValueError("ambient dimension must be positive")
        arr = np.array(basis, dtype=np.complex128, copy=True)
        if arr.size == 0:
            arr = arr.reshape(0, n, n)
        if arr.ndim != 3 or arr.shape[1:] != (n, n):
            raise ValueError("basis must be a stack of %d x %d matrices" % (n, n))
        arr.flags.writeable = False
        self.ambient_dim = n
        self.basis = arr
        self._flat = arr.reshape(arr.shape[0], n * n)

    @classmethod
    def zero(cls, n: int) -> "OperatorSubspace":
        return cls(n, np.zeros((0, n, n), dtype=np.complex128))

    @classmethod
    def full(cls, n: int) -> "OperatorSubspace":
        """All of M_n, spanned by the matrix units E_ij."""
        eye = np.eye(n * n, dtype=np.complex128)
        return cls(n, eye.reshape(n * n, n, n))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def __len__(self) -> int:
        return self.dim

    def __iter__(self):
        return iter(self.basis)

    def __getitem__(self, i):
        return self.basis[i]

    def __repr__(self):
        return "OperatorSubspace(dim=%d, ambient=%d)" % (self.dim, self.ambient_dim)

    def project(self, x) -> np.ndarray:
        """Orthogonal projection of a matrix onto the subspace."""
        x = as_matrix(x)
        self._check_ambient(x)
        coeff = x.reshape(-1) @ self._flat.conj().T
        return (coeff @ self._flat).reshape(x.shape)

    def residual(self, x) -> float:
        """HS distance from ``x`` to the subspace, relative to max(1, |x|)."""
        x = as_matrix(x)
        return float(hs_norm(x - self.project(x)) / max(1.0, hs_norm(x)))

    def contains(self, x, tol: float = DEFAULT_TOL) -> bool:
        return self.residual(x) <= tol

    def max_residual(self, stack) -> float:
        """Largest relative residual over a stack of matrices.

        The workhorse behind the verifiers: batched projection of the whole
        stack at once.
        """
        arr = np.asarray(stack, dtype=np.complex128)
        if arr.size == 0:
            return 0.0
        m = arr.reshape(-1, self.ambient_dim * self.ambient_dim)
        if self.dim:
            coeff = m @ self._flat.conj().T
            res = m - coeff @ self._flat
        else:
            res = m
        norms = np.linalg.norm(res, axis=1)
        scale = np.maximum(1.0, np.linalg.norm(m, axis=1))
        return float(np.max(norms / scale))

    def contains_subspace(self, other: "OperatorSubspace",
                          tol: float = DEFAULT_TOL) -> bool:
        self._check_same_ambient(other)
        return self.max_residual(other.basis) <= tol

    def equals_span(self, other: "OperatorSubspace",
                    tol: float = DEFAULT_TOL) -> bool:
        """Mutual containment within ``tol`` (dimension equality implied)."""
        return (self.dim == other.dim
                and self.contains_subspace(other, tol)
                and other.contains_subspace(self, tol))

    def is_adjoint_closed(self, tol: float = DEFAULT_TOL) -> bool:
        adj = np.conj(np.transpose(self.basis, (0, 2, 1)))
        return self.max_residual(adj) <= tol

    def sum_with(self, other: "OperatorSubspace") -> "OperatorSubspace":
        self._check_same_ambient(other)
        joined = np.concatenate([self.basis, other.basis], axis=0)
        return orthonormalize(joined, ambient_dim=self.ambient_dim)

    def tensor(self, other: "OperatorSubspace") -> "OperatorSubspace":
        """Span of pairwise Kronecker products; basis stays orthonormal."""
        n = self.ambient_dim * other.ambient_dim
        if self.dim == 0 or other.dim == 0:
            return OperatorSubspace.zero(n)
        prods = np.einsum("aij,bkl->abikjl", self.basis, other.basis)
        return OperatorSubspace(n, prods.reshape(self.dim * other.dim, n, n))

    def perp(self) -> "OperatorSubspace":
        """Orthogonal complement inside the full matrix space M_n."""
        n = self.ambient_dim
        if self.dim == 0:
            return OperatorSubspace.full(n)
        _, sing, vh = np.linalg.svd(self._flat, full_matrices=True)
        rank = int(np.sum(sing > RANK_CUTOFF * sing[0])) if sing.size else 0
        comp = vh[rank:]
        return OperatorSubspace(n, comp.reshape(-1, n, n))

    def _check_ambient(self, x):
        if x.shape != (self.ambient_dim, self.ambient_dim):
            raise ValueError("matrix shape %r does not match ambient dimension %d"
                             % (x.shape, self.ambient_dim))

    def _check_same_ambient(self, other):
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimensions differ: %d vs %d"
                             % (self.ambient_dim, other.ambient_dim))


def orthonormalize(mats: Iterable, ambient_dim: int | None = None,
                   cutoff: float = RANK_CUTOFF) -> OperatorSubspace:
    """HS-orthonormal basis of the span of a family of matrices.

    Rank comes from a singular-value cutoff relative to the largest singular
    value of the stacked, vectorized family (no sequential Gram-Schmidt). A
    family that is already orthonormal is returned unchanged, which makes the
    operation idempotent. The empty family gives the zero subspace and then
    requires ``ambient_dim``.
    """
    mats = [as_matrix(m) for m in mats]
    if not mats:
        if ambient_dim is None:
            raise ValueError("ambient_dim is required for an empty family")
        return OperatorSubspace.zero(ambient_dim)
    n = mats[0].shape[0]
    for m in mats:
        if m.shape != (n, n):
            raise ValueError("mixed matrix shapes in spanning family")
    if ambient_dim is not None and ambient_dim != n:
        raise ValueError("ambient_dim %d does not match matrices of size %d"
                         % (ambient_dim, n))
    flat = np.stack([m.reshape(-1) for m in mats])
    if len(mats) <= n * n:
        gram = flat @ flat.conj().T
        if np.max(np.abs(gram - np.eye(len(mats)))) <= 1e-12:
            return OperatorSubspace(n, np.stack(mats))
    _, sing, vh = np.linalg.svd(flat, full_matrices=False)
    rank = 0
    if sing.size and sing[0] > 0:
        rank = int(np.sum(sing > cutoff * sing[0]))
    return OperatorSubspace(n, vh[:rank].reshape(rank, n, n))


def subspace_sum(a: OperatorSubspace, b: OperatorSubspace) -> OperatorSubspace:
    return a.sum_with(b)


def subspace_tensor(a: OperatorSubspace, b: OperatorSubspace) -> OperatorSubspace:
    return a.tensor(b)


def subspace_perp(a: OperatorSubspace) -> OperatorSubspace:
    return a.perp()


def permute_systems(x, dims: Sequence[int], perm: Sequence[int]) -> np.ndarray:
    """Conjugate a matrix on a tensor product by a relabeling of the legs.

    ``dims`` are the leg dimensions in the current order and ``perm[i]`` is
    the new position of leg ``i`` (0-indexed). Applying a permutation and
    then its inverse returns the input exactly.
    """
    x = as_matrix(x)
    dims = [int(d) for d in dims]
    k = len(dims)
    n = prod(dims)
    if x.shape != (n, n):
        raise ValueError("matrix of shape %r does not match legs %r" % (x.shape, dims))
    if sorted(perm) != list(range(k)):
        raise ValueError("perm %r is not a permutation of 0..%d" % (list(perm), k - 1))
    inv = [0] * k
    for i, p in enumerate(perm):
        inv[p] = i
    axes = inv + [k + i for i in inv]
    return x.reshape(dims + dims).transpose(axes).reshape(n, n)


def is_projection(p, tol: float = DEFAULT_TOL) -> bool:
    """True iff ``p`` is self-adjoint and idempotent within ``tol`` (HS norm)."""
    p = as_matrix(p)
    if p.shape[0] != p.shape[1]:
        return False
    return (hs_norm(p @ p - p) <= tol
            and hs_norm(p - p.conj().T) <= tol)


def projection_meet(p, q, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Projection onto ran(p) intersect ran(q).

    Computed as the spectral projection of p + q for eigenvalues within
    ``tol`` of 2; exact for commuting inputs and robust for generic ones.
    """
    p = as_matrix(p)
    q = as_matrix(q)
    if p.shape != q.shape:
        raise ValueError("shape mismatch: %r vs %r" % (p.shape, q.shape))
    if not is_projection(p, tol) or not is_projection(q, tol):
        raise ValueError("projection_meet requires two projections")
    h = p + q
    h = (h + h.conj().T) / 2.0
    vals, vecs = np.linalg.eigh(h)
    sel = vals >= 2.0 - tol
    if not np.any(sel):
        return np.zeros_like(p)
    v = vecs[:, sel]
    return v @ v.conj().T
