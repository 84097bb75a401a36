"""Conditions for a regular Dirac spinor to be mappable onto an ELKO.

The conditions are bilinear constraints on the four components psi_r.  Every
residual is computed twice: once with complex arithmetic (Re/Im of psi_i*
psi_j) and once with explicitly real arithmetic on the split components
psi_r = a_r + i b_r; the two routes must agree to rounding, which is itself a
contract of this module.

A shared block of four constraints applies to all classes; one extra
constraint each selects class 2 and class 3, and class 1 requires both.  The
shared block's last line and the class-3 extra differ by the single term
2 Im(psi_3* psi_4); that gap is surfaced in the report rather than resolved.

Note the shared block forces the chiral-representation sigma to vanish, so
spinors satisfying it in classes 1 or 2 exist only with standard
(Dirac-basis) components; the formulas themselves act on the raw component
4-tuple and are representation-agnostic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bilinears import SpinorC4, bilinears
from .classify import classify

SHARED_CONDITION_COUNT = 4


class SingularSpinorError(ValueError):
    """Mappability is defined for regular spinors (classes 1-3) only."""


def _re(u: complex, v: complex) -> float:
    return float((np.conj(u) * v).real)


def _im(u: complex, v: complex) -> float:
    return float((np.conj(u) * v).imag)


def _shared_complex(c: np.ndarray) -> np.ndarray:
    return np.array(
        [
            _re(c[0], c[2]),
            _re(c[1], c[3]),
            _re(c[1], c[2]) + _re(c[0], c[3]),
            _im(c[0], c[3]) - _im(c[1], c[2]) - 2.0 * _im(c[2], c[3]) - 2.0 * _im(c[0], c[1]),
        ]
    )


def _shared_components(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    re = lambda i, j: a[i] * a[j] + b[i] * b[j]
    im = lambda i, j: a[i] * b[j] - b[i] * a[j]
    return np.array(
        [
            re(0, 2),
            re(1, 3),
            re(1, 2) + re(0, 3),
            im(0, 3) - im(1, 2) - 2.0 * im(2, 3) - 2.0 * im(0, 1),
        ]
    )


@dataclass(frozen=True)
class ConditionReport:
    """All mapping-condition residuals for one spinor, both arithmetic routes."""

    shared: np.ndarray
    extra_class2: float
    extra_class3: float
    shared_components: np.ndarray
    extra_class2_components: float
    extra_class3_components: float
    table_rows: dict
    line3_vs_class3_gap: float
    scale: float

    def route_disagreement(self) -> float:
        """Largest gap between the complex and component arithmetic routes."""
        gaps = [
            float(np.max(np.abs(self.shared - self.shared_components))),
            abs(self.extra_class2 - self.extra_class2_components),
            abs(self.extra_class3 - self.extra_class3_components),
        ]
        return max(gaps)

    def satisfied(self, label: int, tol: float = 1e-10) -> bool:
        """Whether the condition set selecting ``label`` holds at tolerance."""
        threshold = tol * self.scale
        shared_ok = bool(np.all(self.shared <= threshold))
        if label == 2:
            return shared_ok and self.extra_class2 <= threshold
        if label == 3:
            return shared_ok and self.extra_class3 <= threshold
        if label == 1:
            return (
                shared_ok
                and self.extra_class2 <= threshold
                and self.extra_class3 <= threshold
            )
        raise ValueError("mappability is defined for labels 1, 2 and 3")


def elko_map_conditions(psi: SpinorC4) -> ConditionReport:
    """Evaluate every mapping condition on the raw components of ``psi``."""
    c = psi.components
    a = c.real
    b = c.imag

    shared = _shared_complex(c)
    extra2 = _re(c[0], c[3]) + _im(c[1], c[2])
    extra3 = _im(c[0], c[3]) - _im(c[1], c[2]) - 2.0 * _im(c[0], c[1])

    shared_comp = _shared_components(a, b)
    re = lambda i, j: a[i] * a[j] + b[i] * b[j]
    im = lambda i, j: a[i] * b[j] - b[i] * a[j]
    extra2_comp = re(0, 3) + im(1, 2)
    extra3_comp = im(0, 3) - im(1, 2) - 2.0 * im(0, 1)

    # per-class residual rows in the split-component form
    row_a = a[1] * (a[2] - b[2]) + b[1] * (a[2] + b[2])  # Re - Im of psi_2* psi_3
    row_b = a[2] * b[3] - b[2] * a[3]  # Im of psi_3* psi_4
    table_rows = {
        1: (abs(row_a), abs(row_b)),
        2: (abs(row_b), abs(shared_comp[2])),
        3: (abs(row_a), abs(shared_comp[3])),
    }

    return ConditionReport(
        shared=np.abs(shared),
        extra_class2=abs(extra2),
        extra_class3=abs(extra3),
        shared_components=np.abs(shared_comp),
        extra_class2_components=abs(extra2_comp),
        extra_class3_components=abs(extra3_comp),
        table_rows=table_rows,
        line3_vs_class3_gap=abs(2.0 * _im(c[2], c[3])),
        scale=max(1.0, float(np.vdot(c, c).real)),
    )


def mappability(psi: SpinorC4, tol: float = 1e-10) -> dict:
    """Per-class mappability verdicts for a regular spinor.

    Returns ``{"class": label, 1: bool, 2: bool, 3: bool}``.  Raises
    SingularSpinorError when the spinor is singular (classes 4-6), where the
    conditions do not apply.
    """
    label = classify(bilinears(psi), tol=tol).label
    if label not in (1, 2, 3):
        raise SingularSpinorError(
            f"spinor is class {label}; mapping conditions apply to classes 1-3"
        )
    report = elko_map_conditions(psi)
    return {
        "class": label,
        1: report.satisfied(1, tol),
        2: report.satisfied(2, tol),
        3: report.satisfied(3, tol),
    }
