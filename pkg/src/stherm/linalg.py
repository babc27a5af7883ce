"""Dense complex Hermitian linear algebra.

Validation, a cyclic Jacobi eigensolver and matrix functions of Hermitian
operators.  Everything downstream (Gibbs states, entropies, channels) sits
on top of these three routines.
"""

from typing import Callable, NamedTuple

import numpy as np

HERMITICITY_TOL = 1e-10
MAX_SWEEPS = 100
OFFDIAG_THRESHOLD = 1e-14  # relative to the Frobenius norm of the input

from .errors import ConvergenceFailure, NonFiniteResult, NotHermitian, NotSquare


class EigenSystem(NamedTuple):
    eigenvalues: np.ndarray   # real, ascending
    eigenvectors: np.ndarray  # unitary, columns are eigenvectors


def validate_hermitian(m) -> np.ndarray:
    """Return ``m`` as a complex array after checking it is square Hermitian.

    Raises NotSquare or NotHermitian (the latter reports the largest
    asymmetry ``max |m - m^dag|``).
    """
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSquare(f"expected a square matrix, got shape {a.shape}")
    asym = np.max(np.abs(a - a.conj().T)) if a.size else 0.0
    if asym > HERMITICITY_TOL:
        raise NotHermitian(f"max asymmetry {asym:.3e} exceeds {HERMITICITY_TOL:.0e}")
    return a


def eigh(h, max_sweeps: int = MAX_SWEEPS) -> EigenSystem:
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Returns eigenvalues in ascending order and the matching orthonormal
    eigenvector columns.  Deterministic for a fixed input.
    """
    a = validate_hermitian(h).copy()
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    threshold = OFFDIAG_THRESHOLD * np.linalg.norm(a, "fro")
    for _ in range(max_sweeps):
        off = np.linalg.norm(a - np.diag(np.diag(a)), "fro")
        if off <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= threshold / max(n, 1):
                    continue
                _rotate(a, v, p, q)
    else:
        raise ConvergenceFailure(
            f"Jacobi sweeps exceeded {max_sweeps} without reaching threshold"
        )
    w = np.real(np.diag(a))
    order = np.argsort(w, kind="stable")
    return EigenSystem(w[order], v[:, order])


def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    """Apply one Jacobi rotation zeroing a[p, q] in place (a Hermitian)."""
    apq = a[p, q]
    app = a[p, p].real
    aqq = a[q, q].real
    r = abs(apq)
    phase = apq / r  # a[p,q] = r * phase
    tau = (aqq - app) / (2.0 * r)
    t = np.sign(tau) / (abs(tau) + np.hypot(1.0, tau)) if tau != 0 else 1.0
    c = 1.0 / np.hypot(1.0, t)
    s = t * c
    # 2x2 unitary W = diag(1, conj(phase)) @ [[c, s], [-s, c]]
    w = np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]])
    a[:, [p, q]] = a[:, [p, q]] @ w
    a[[p, q], :] = w.conj().T @ a[[p, q], :]
    # exact zeros on the eliminated pair, real diagonal
    a[p, q] = 0.0
    a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real
    v[:, [p, q]] = v[:, [p, q]] @ w


def func_of_hermitian(h, f: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
    """Apply a real scalar map to a Hermitian matrix through its spectrum.

    Computes ``V f(Lambda) V^dag``; raises NonFiniteResult if any f(lambda)
    is nan/inf.
    """
    w, vecs = eigh(h)
    with np.errstate(all="ignore"):
        fw = np.asarray(f(w), dtype=float)
    if not np.all(np.isfinite(fw)):
        raise NonFiniteResult(f"f produced non-finite values on spectrum {w}")
    return (vecs * fw) @ vecs.conj().T
