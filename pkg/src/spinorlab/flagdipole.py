"""Flag-dipole spinors from direction elements, and their frame geometry.

A spatial unit 1-vector u (u^2 = -1, no time component) turns any invertible
even element Psi into the singular spinor Psi (1 + gamma_0 u)/2.  The class is
decided by u's third axis alone: u parallel to e3 gives a dipole (class 6),
u in the e1-e2 plane gives a flagpole (class 5), anything else a flag-dipole
(class 4).  For class 4 the covariants organize into a frame (J, s, h) with

    K = h J,   S_bold = J wedge s,   J . s = 0,   h^2 = 1 + s^2,

where h = <u e3>_0 is the Minkowski pairing with the third axis.  The complex
combination Z = J (1 + i s + i h e0123) squares to zero and is annihilated by
(1 + i s + i h e0123) from the left and (1 - i s - i h e0123) from the right.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    BLADE_GRADES,
    BLADE_INDEX,
    E3,
    GRADE_2_PAIRS,
    PSEUDOSCALAR,
    Multivector,
    lcontract,
    wedge,
)
from .bilinears import BilinearSet, SpinorC4, minkowski_square
from .gamma import gamma_rep
from .hopf import even_to_column

_IDX_VEC = [BLADE_INDEX[(i,)] for i in range(4)]


def direction_element(components3) -> Multivector:
    """Spatial unit 1-vector from 3 components (normalized if needed)."""
    comp = np.asarray(components3, dtype=np.float64)
    if comp.shape != (3,):
        raise ValueError("a spatial direction needs 3 components")
    norm = float(np.linalg.norm(comp))
    if norm == 0.0:
        raise ValueError("the zero vector is not a direction")
    return Multivector.vector(np.concatenate(([0.0], comp / norm)))


def validate_direction(u: Multivector, tol: float = 1e-10) -> None:
    """Check u is a real grade-1 spatial unit vector (u^2 = -1)."""
    if u.is_complex:
        raise ValueError("direction elements are real multivectors")
    off_grade = np.linalg.norm(np.where(BLADE_GRADES == 1, 0, u.coeffs))
    if off_grade > tol:
        raise ValueError("direction element must be a pure 1-vector")
    if abs(u.coeffs[_IDX_VEC[0]]) > tol:
        raise ValueError("direction element must have no time component")
    square = float((u * u).scalar_part().real)
    if abs(square + 1.0) > tol:
        raise ValueError(f"direction element must square to -1, got {square:g}")


def elko_mixture_direction(angle: float) -> Multivector:
    """The one-parameter family e1 cos(angle) + (i3 e3) sin(angle).

    The unit spatial bivector i3 = -e2 e3 rotates e3 into e2, so the whole
    family lies in the e1-e2 plane and every member produces class 5.
    """
    i3 = -Multivector.blade(2, 3)
    return Multivector.blade(1) * float(np.cos(angle)) + (i3 * E3) * float(np.sin(angle))


def direction_class(u: Multivector, tol: float = 1e-10) -> int:
    """Expected Lounesto class for the direction: 6, 5, or 4 by the e3 axis."""
    validate_direction(u, tol)
    u3 = abs(float(u.coeffs[_IDX_VEC[3]]))
    if abs(u3 - 1.0) <= tol:
        return 6
    if u3 <= tol:
        return 5
    return 4


def is_admissible_flag_dipole_direction(u: Multivector, tol: float = 1e-10) -> bool:
    return direction_class(u, tol) == 4


def projection_spinor(psi_even: Multivector, u: Multivector, tol: float = 1e-10) -> SpinorC4:
    """Column spinor of Psi (1 + gamma_0 u)/2 in the standard representation."""
    validate_direction(u, tol)
    e0 = Multivector.blade(0)
    projected = psi_even * ((Multivector.scalar(1.0) + e0 * u) * 0.5)
    return even_to_column(projected, tol)


def doran_h(u: Multivector) -> float:
    """The axial-to-current ratio of the direction: the pairing <u e3>_0."""
    return float(lcontract(u, E3).scalar_part().real)


@dataclass(frozen=True)
class FlagDipoleFrame:
    """Frame (J, s, h): null current, flag direction, axial ratio."""

    J: Multivector
    s: Multivector
    h: float
    consistent: bool = True

    def hs_residual(self) -> float:
        """Residual of h^2 = 1 + s^2 (s^2 the Minkowski square of s)."""
        return abs(self.h**2 - 1.0 - minkowski_square(self.s))

    def null_residual(self) -> float:
        return abs(minkowski_square(self.J))

    def orthogonality_residual(self) -> float:
        return abs(float(lcontract(self.J, self.s).scalar_part().real))


def synthetic_frame(J: Multivector, s: Multivector, h: float, tol: float = 1e-9) -> FlagDipoleFrame:
    """Build a frame from raw parts, validating nullity and orthogonality.

    ``h`` is accepted as given; frames violating h^2 = 1 + s^2 are flagged
    via ``consistent=False`` rather than rejected.
    """
    jsq = abs(minkowski_square(J))
    scale = max(1.0, J.norm() ** 2)
    if jsq > tol * scale:
        raise ValueError(f"J must be null, got J^2 = {jsq:g}")
    ortho = abs(float(lcontract(J, s).scalar_part().real))
    if ortho > tol * max(1.0, J.norm() * s.norm()):
        raise ValueError(f"s must be orthogonal to J, got J.s = {ortho:g}")
    frame = FlagDipoleFrame(J=J, s=s, h=float(h))
    consistent = frame.hs_residual() <= tol * max(1.0, h**2)
    return FlagDipoleFrame(J=J, s=s, h=float(h), consistent=consistent)


def frame_from_bilinears(b: BilinearSet, tol: float = 1e-9) -> FlagDipoleFrame:
    """Extract (J, s, h) from a class-4 bilinear set.

    h is the component ratio K/J read at J's dominant entry; s solves
    S_bold = J wedge s with J . s = 0 in the least-squares sense, taking the
    minimum-norm representative of the null gauge family s -> s + c J.
    """
    jmv = b.current_vector()
    lead = int(np.argmax(np.abs(b.J)))
    if abs(b.J[lead]) <= tol:
        raise ValueError("current J vanishes; not a flag-dipole bilinear set")
    h = float(b.K[lead] / b.J[lead])

    # wedge matrix: rows = 6 bivector coefficients of J ^ s plus 1 row for J . s
    rows = np.zeros((7, 4))
    target = np.zeros(7)
    for r, pair in enumerate(GRADE_2_PAIRS):
        for c in range(4):
            basis = np.zeros(4)
            basis[c] = 1.0
            w = wedge(jmv, Multivector.vector(basis))
            rows[r, c] = w.coeffs[BLADE_INDEX[pair]]
        target[r] = 2.0 * b.S[r]
    for c in range(4):
        basis = np.zeros(4)
        basis[c] = 1.0
        rows[6, c] = float(lcontract(jmv, Multivector.vector(basis)).scalar_part().real)
    solution, *_ = np.linalg.lstsq(rows, target, rcond=None)
    smv = Multivector.vector(solution)

    frame = FlagDipoleFrame(J=jmv, s=smv, h=h)
    consistent = frame.hs_residual() <= tol * max(1.0, h**2)
    return FlagDipoleFrame(J=jmv, s=smv, h=h, consistent=consistent)


def type4_boomerang(frame: FlagDipoleFrame, tol: float = 1e-9) -> Multivector:
    """The complex aggregate Z = J (1 + i s + i h e0123) of a class-4 frame."""
    if frame.null_residual() > tol * max(1.0, frame.J.norm() ** 2):
        raise ValueError("frame violates the null-current invariant")
    if frame.orthogonality_residual() > tol * max(1.0, frame.J.norm() * frame.s.norm()):
        raise ValueError("frame violates J . s = 0")
    one = Multivector.scalar(1.0 + 0.0j)
    tail = one + frame.s * 1j + PSEUDOSCALAR * (1j * frame.h)
    return frame.J * tail


def annihilator_residuals(frame: FlagDipoleFrame, z: Multivector | None = None) -> dict:
    """Relative residuals of the annihilation identities of Z.

    ``left`` uses (1 + i s + i h e0123) Z, ``right`` uses Z (1 - i s - i h e0123);
    both vanish for an hs-consistent frame.  ``opposite_sign_left`` evaluates
    the same left product with the h term negated, which does NOT vanish for
    h != 0 and is reported as a diagnostic of the sign convention.
    """
    if z is None:
        z = type4_boomerang(frame)
    znorm = max(1e-300, z.norm())
    one = Multivector.scalar(1.0 + 0.0j)
    plus = one + frame.s * 1j + PSEUDOSCALAR * (1j * frame.h)
    minus = one - frame.s * 1j - PSEUDOSCALAR * (1j * frame.h)
    flipped = one + frame.s * 1j - PSEUDOSCALAR * (1j * frame.h)
    return {
        "z_squared": (z * z).norm() / znorm**2,
        "left": (plus * z).norm() / znorm,
        "right": (z * minus).norm() / znorm,
        "opposite_sign_left": (flipped * z).norm() / znorm,
    }


def sigma_projector_matrix(s: Multivector, h: float, sign: int) -> np.ndarray:
    """The 4x4 half-projector matrix (1 -/+ i (s + h e0123)) / 2.

    The operator term s + h e0123 has a purely real diagonal, so halving is
    exact and the two signs sum to the identity matrix bit for bit.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    rep = gamma_rep("standard")
    op = rep.mv_to_matrix(s) + h * rep.pseudoscalar
    return 0.5 * (np.eye(4, dtype=np.complex128) - sign * 1j * op)


def sigma_projector(psi: SpinorC4, s: Multivector, h: float, sign: int) -> SpinorC4:
    """Apply the half-projector (1 -/+ i (s + h e0123)) / 2 to a column spinor.

    This is the column form of Psi -> (Psi +/- (s + h e0123) Psi gamma_1 gamma_2)/2,
    using that right multiplication by gamma_1 gamma_2 acts as -i on the ideal.
    The matrices of the two signs sum to the identity exactly; each member is
    idempotent precisely when h^2 = 1 + s^2 (Minkowski square).
    """
    if psi.rep != "standard":
        raise ValueError("the projector dictionary is tied to the standard representation")
    half = sigma_projector_matrix(s, h, sign)
    return SpinorC4(half @ psi.components, "standard")


def projector_idempotency_residual(s: Multivector, h: float) -> float:
    """Frobenius residual of the projector squaring to itself."""
    half = sigma_projector_matrix(s, h, +1)
    return float(np.linalg.norm(half @ half - half))


def class_limit(u: Multivector, which: str, ts=(1.0, 0.1, 0.01, 0.0), psi_even: Multivector | None = None):
    """Degenerate a class-4 direction along a parametrized path.

    ``which = "h->0"`` scales the e3 component to zero (flagpole limit,
    class 5 at t=0); ``which = "s->0"`` scales the in-plane part to zero
    (dipole limit, class 6 at t=0).  At t=1 the input direction is
    reproduced exactly.  Returns a list of (t, direction, spinor) triples.
    """
    validate_direction(u)
    if psi_even is None:
        psi_even = Multivector.scalar(1.0)
    u1, u2, u3 = (float(u.coeffs[_IDX_VEC[k]]) for k in (1, 2, 3))
    plane = float(np.hypot(u1, u2))
    if which == "h->0":
        if plane == 0.0:
            raise ValueError("direction is purely axial; no h->0 path from it")
    elif which == "s->0":
        if u3 == 0.0:
            raise ValueError("direction is purely in-plane; no s->0 path from it")
    else:
        raise ValueError("which must be 'h->0' or 's->0'")

    out = []
    for t in ts:
        if which == "h->0":
            axial = t * u3
            scale = np.sqrt(max(0.0, 1.0 - axial**2)) / plane
            comp = np.array([u1 * scale, u2 * scale, axial])
        else:
            in_plane = t * plane
            axial = np.sign(u3) * np.sqrt(max(0.0, 1.0 - in_plane**2))
            if plane == 0.0:
                comp = np.array([0.0, 0.0, axial])
            else:
                comp = np.array([u1 * t, u2 * t, axial])
        direction = direction_element(comp)
        out.append((float(t), direction, projection_spinor(psi_even, direction)))
    return out
