"""Gamma-matrix representations of Cl(1,3) and the blade-matrix dictionary.

Two standard 4x4 complex representations are provided:

* ``chiral``:   gamma^0 off-diagonal identity blocks, gamma^k = [[0,-s_k],[s_k,0]]
* ``standard``: gamma^0 = diag(1,1,-1,-1),            gamma^k = [[0,s_k],[-s_k,0]]

Each representation carries the full dictionary of 16 blade matrices (products
of lower-index gammas in canonical order), giving an algebra isomorphism
between multivectors and 4x4 matrices in both directions.
"""

from __future__ import annotations

import numpy as np

from .algebra import BLADES, DIM, METRIC_SIGNS, Multivector

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=np.complex128),
    np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    np.array([[1, 0], [0, -1]], dtype=np.complex128),
)

_I2 = np.eye(2, dtype=np.complex128)
_Z2 = np.zeros((2, 2), dtype=np.complex128)


def _block(a, b, c, d) -> np.ndarray:
    return np.block([[a, b], [c, d]])


class GammaRep:
    """One gamma-matrix representation with its blade dictionary."""

    def __init__(self, tag: str, gamma_upper: np.ndarray) -> None:
        self.tag = tag
        self.upper = gamma_upper  # shape (4, 4, 4); index = spacetime index
        lower = gamma_upper.copy()
        for k in range(4):
            lower[k] = METRIC_SIGNS[k] * gamma_upper[k]
        self.lower = lower
        g = self.upper
        self.gamma5 = 1j * g[0] @ g[1] @ g[2] @ g[3]

        blades = np.empty((DIM, 4, 4), dtype=np.complex128)
        for n, idx in enumerate(BLADES):
            m = np.eye(4, dtype=np.complex128)
            for i in idx:
                m = m @ self.lower[i]
            blades[n] = m
        self.blades = blades
        self.pseudoscalar = blades[-1]

        # 16x16 change of basis: vec(blade matrices) are linearly independent
        basis = blades.reshape(DIM, 16).T
        self._to_coeffs = np.linalg.inv(basis)

    def mv_to_matrix(self, mv: Multivector) -> np.ndarray:
        return np.tensordot(mv.coeffs, self.blades, axes=(0, 0))

    def matrix_to_mv(self, matrix: np.ndarray, tol: float | None = None) -> Multivector:
        m = np.asarray(matrix, dtype=np.complex128)
        if m.shape != (4, 4):
            raise ValueError("expected a 4x4 matrix")
        coeffs = self._to_coeffs @ m.reshape(16)
        if tol is not None:
            rebuilt = np.tensordot(coeffs, self.blades, axes=(0, 0))
            err = np.linalg.norm(rebuilt - m)
            if err > tol * max(1.0, np.linalg.norm(m)):
                raise ValueError(f"matrix does not lie in the blade span (residual {err:g})")
        return Multivector(coeffs)


def _build_chiral() -> GammaRep:
    g = np.empty((4, 4, 4), dtype=np.complex128)
    g[0] = _block(_Z2, _I2, _I2, _Z2)
    for k in range(3):
        g[k + 1] = _block(_Z2, -PAULI[k], PAULI[k], _Z2)
    return GammaRep("chiral", g)


def _build_standard() -> GammaRep:
    g = np.empty((4, 4, 4), dtype=np.complex128)
    g[0] = np.diag([1, 1, -1, -1]).astype(np.complex128)
    for k in range(3):
        g[k + 1] = _block(_Z2, PAULI[k], -PAULI[k], _Z2)
    return GammaRep("standard", g)


_REPS: dict[str, GammaRep] = {}


def gamma_rep(tag: str) -> GammaRep:
    """Look up a representation by tag ('chiral' or 'standard')."""
    if tag not in ("chiral", "standard"):
        raise ValueError(f"unknown representation tag {tag!r}; use 'chiral' or 'standard'")
    if tag not in _REPS:
        _REPS[tag] = _build_chiral() if tag == "chiral" else _build_standard()
    return _REPS[tag]


# Hermitian involution taking chiral matrices to standard ones and back:
# U gamma_chiral U = gamma_standard with U^2 = 1.
SIMILARITY = _block(_I2, _I2, _I2, -_I2) / np.sqrt(2.0)


def chiral_to_standard(matrix: np.ndarray) -> np.ndarray:
    return SIMILARITY @ matrix @ SIMILARITY


def standard_to_chiral(matrix: np.ndarray) -> np.ndarray:
    return SIMILARITY @ matrix @ SIMILARITY
