"""Dense complex-matrix substrate: orthonormalization, rank decisions,
projectors, and seeded unitaries.

Every rank and subspace-equality decision downstream of this module reduces
to a Frobenius-distance test against one shared session tolerance, so that
lattice decisions stay mutually consistent.  Scalars are complex double
precision throughout; several constructions (notably the diag(i, 1) phase
map) do not exist over the reals.
"""

import numpy as np

DEFAULT_EPS = 1e-9

_session_eps = DEFAULT_EPS


def set_tolerance(eps):
    """Set the session tolerance used by all rank/inclusion decisions.

    Must satisfy 0 < eps < 1e-3.
    """
    global _session_eps
    _session_eps = _validated_eps(eps)
    return _session_eps


def get_tolerance():
    return _session_eps


def _validated_eps(eps):
    eps = float(eps)
    if not (0.0 < eps < 1e-3):
        raise ValueError(f"tolerance must lie in (0, 1e-3), got {eps}")
    return eps


def resolve_eps(eps=None):
    """Return the explicit tolerance if given, else the session default."""
    if eps is None:
        return _session_eps
    return _validated_eps(eps)


def as_complex_matrix(m):
    """Coerce to a 2-D complex128 array, rejecting non-finite entries."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim == 1:
        a = a[:, None]
    if a.ndim != 2:
        raise ValueError(f"expected a matrix, got array of ndim {a.ndim}")
    if a.size and not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
        raise ValueError("matrix entries must be finite")
    return a


def orthonormalize(m, eps=None):
    """Orthonormal basis for the column space of ``m``.

    Modified Gram-Schmidt with a second reorthogonalization sweep.  Columns
    whose residual norm after projection onto the earlier columns falls below
    eps * (largest input column norm) are dropped, so the returned column
    count is the numerical rank.  A matrix with zero columns (or all-zero
    columns) yields an (n, 0) basis.
    """
    eps = resolve_eps(eps)
    m = as_complex_matrix(m)
    n, k = m.shape
    if n < 1:
        raise ValueError("orthonormalize requires at least one row")
    if k == 0:
        return np.zeros((n, 0), dtype=np.complex128)
    col_norms = np.linalg.norm(m, axis=0)
    scale = float(col_norms.max())
    if scale == 0.0:
        return np.zeros((n, 0), dtype=np.complex128)
    threshold = eps * scale
    cols = []
    for j in range(k):
        v = m[:, j].copy()
        for _ in range(2):
            for q in cols:
                v -= q * (q.conj() @ v)
        nrm = np.linalg.norm(v)
        if nrm >= threshold:
            cols.append(v / nrm)
    if not cols:
        return np.zeros((n, 0), dtype=np.complex128)
    return np.column_stack(cols)


def projector(basis, eps=None):
    """Orthogonal projector B @ B^H onto the span of an orthonormal basis.

    The zero-column basis gives the zero projector.
    """
    eps = resolve_eps(eps)
    b = as_complex_matrix(basis)
    n, d = b.shape
    if d:
        gram = b.conj().T @ b
        if np.linalg.norm(gram - np.eye(d)) >= 10 * max(eps, 1e-12):
            raise ValueError("projector requires orthonormal columns")
    return b @ b.conj().T


def random_unitary(n, seed, eps=None):
    """Deterministic n x n unitary: orthonormalized seeded complex Gaussian."""
    if n < 1:
        raise ValueError("random_unitary requires n >= 1")
    rng = np.random.default_rng(seed)
    while True:
        z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        q = orthonormalize(z, eps)
        if q.shape[1] == n:  # Gaussian draws are full rank almost surely
            return q


def is_unitary(u, eps=None):
    eps = resolve_eps(eps)
    u = as_complex_matrix(u)
    n, m = u.shape
    if n != m:
        return False
    return np.linalg.norm(u.conj().T @ u - np.eye(n)) < 10 * max(eps, 1e-12)
