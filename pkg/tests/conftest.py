"""Shared helpers for the test suite."""

import numpy as np

from spinorlab import Multivector, SpinorC4


def random_spinor(rng, rep="chiral", scale=1.0):
    comp = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    return SpinorC4(scale * comp, rep)


def random_unit_spinor(rng, rep="standard"):
    comp = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    return SpinorC4(comp / np.linalg.norm(comp), rep)


def random_multivector(rng, complex_coeffs=False, scale=1.0):
    c = rng.standard_normal(16)
    if complex_coeffs:
        c = c + 1j * rng.standard_normal(16)
    return Multivector(scale * c)


def random_even(rng):
    """Random real element of the even subalgebra (an operator spinor)."""
    from spinorlab.algebra import BLADE_GRADES

    c = rng.standard_normal(16) * (BLADE_GRADES % 2 == 0)
    return Multivector(c)


def phase_align(candidate, reference):
    """Rotate ``candidate`` by the global phase that best matches ``reference``."""
    inner = np.vdot(candidate, reference)
    if abs(inner) == 0.0:
        return candidate
    return candidate * (inner / abs(inner))
