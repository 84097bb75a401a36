"""Lounesto classification of spinors by the zero pattern of their covariants.

The six classes are decided by which of (sigma, omega, K, S) vanish; the
current J never vanishes for a physical spinor.  Classes 1-3 are the regular
(Dirac) sectors, classes 4-6 the singular ones: flag-dipole, flagpole
(Majorana/ELKO), and dipole (Weyl).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import Multivector, PSEUDOSCALAR
from .bilinears import BilinearSet, minkowski_square, pq_operators


class NullSpinorError(ValueError):
    """Every covariant vanished: the input is the zero spinor."""


class BilinearInconsistencyError(ValueError):
    """The zero pattern (J nonzero, everything else zero) is not realizable."""


@dataclass(frozen=True)
class LounestoClass:
    """Classification verdict with its supporting witness pattern."""

    label: int
    regular: bool
    witness: dict
    marginal: bool
    marginal_fields: tuple

    def __int__(self) -> int:
        return self.label


def _magnitudes(b: BilinearSet) -> dict:
    return {
        "sigma": abs(b.sigma),
        "omega": abs(b.omega),
        "K": float(np.linalg.norm(b.K)),
        "S": float(np.linalg.norm(b.S)),
    }


def classify(b: BilinearSet, tol: float = 1e-10) -> LounestoClass:
    """Assign the Lounesto class of a bilinear set.

    Zero tests compare against ``tol * max(1, J^0)``; quantities landing
    within a factor 10 of that threshold (either side) set the marginal flag.
    """
    mags = _magnitudes(b)
    jnorm = float(np.linalg.norm(b.J))
    threshold = tol * max(1.0, abs(b.J[0]))

    if jnorm <= threshold and all(v <= threshold for v in mags.values()):
        raise NullSpinorError("all bilinear covariants vanish; cannot classify the zero spinor")

    nz = {k: v > threshold for k, v in mags.items()}
    marginal_fields = tuple(
        k for k, v in mags.items() if threshold / 10.0 < v < threshold * 10.0
    )

    if nz["sigma"] or nz["omega"]:
        if nz["sigma"] and nz["omega"]:
            label = 1
        elif nz["sigma"]:
            label = 2
        else:
            label = 3
        regular = True
    else:
        if nz["K"] and nz["S"]:
            label = 4
        elif nz["S"]:
            label = 5
        elif nz["K"]:
            label = 6
        else:
            raise BilinearInconsistencyError(
                "sigma = omega = 0 with K = S = 0 but J != 0: no spinor produces this pattern"
            )
        regular = False

    return LounestoClass(
        label=label,
        regular=regular,
        witness=nz,
        marginal=bool(marginal_fields),
        marginal_fields=marginal_fields,
    )


def is_singular(b: BilinearSet, tol: float = 1e-10) -> bool:
    """True when both sigma and omega vanish (classes 4-6)."""
    threshold = tol * max(1.0, abs(b.J[0]))
    return abs(b.sigma) <= threshold and abs(b.omega) <= threshold


def verify_class_relations(b: BilinearSet, label: int) -> dict:
    """Residuals of the structural identities specific to one class.

    Always returned as absolute Frobenius/Euclidean residuals; which ones are
    exactly zero is part of each class's defining structure:

    * classes 4-6: J and K are null (``J_square``, ``K_square``);
    * class 2:     P/(2 sigma) idempotent, P = e0123 K Q / sigma, and the spin
                   projector (1 - i e0123 K / sigma)/2 commutes with P/(2 sigma);
    * class 3:     P^2 = 0 and P = Q K / omega (the product order matters:
                   K Q / omega equals -P);
    * class 1:     K Q = -(omega + sigma e0123) P, the general identity that
                   the class-2 and class-3 relations specialize.
    """
    p, q = pq_operators(b)
    jmv = b.current_vector()
    kmv = b.axial_vector()
    out: dict = {}

    if label in (4, 5, 6):
        out["J_square"] = abs(minkowski_square(jmv))
        out["K_square"] = abs(minkowski_square(kmv))
        return out

    if label == 2:
        e = p / (2.0 * b.sigma)
        out["idempotent"] = (e * e - e).norm()
        out["p_from_kq"] = (PSEUDOSCALAR * kmv * q / b.sigma - p).norm()
        spin_proj = (Multivector.scalar(1.0) - (PSEUDOSCALAR * kmv) * (1j / b.sigma)) / 2.0
        out["spin_projector_commutes"] = (e * spin_proj - spin_proj * e).norm()
    elif label == 3:
        out["p_squared"] = (p * p).norm()
        out["p_from_qk"] = (q * kmv / b.omega - p).norm()
    elif label == 1:
        inv = (Multivector.scalar(b.omega) - PSEUDOSCALAR * b.sigma) / (
            b.omega**2 + b.sigma**2
        )
        out["p_plus_inv_kq"] = (p + inv * (kmv * q)).norm()
    else:
        raise ValueError(f"label must be 1..6, got {label}")
    return out
