"""End-to-end batteries pinning every advertised numerical guarantee.

Each test sweeps a large seeded population through one public workflow and
asserts the documented tolerance, so a regression anywhere in the algebra,
the classifiers or the converters trips at least one battery.
"""

import time

import numpy as np
import pytest

from conftest import phase_align, random_even, random_spinor, random_unit_spinor
from spinorlab import (
    DegenerateProbeError,
    Multivector,
    Quaternion,
    SpinorC4,
    WeylC2,
    aggregate,
    annihilator_residuals,
    bilinears,
    charge_conjugation,
    class_limit,
    classify,
    column_to_even,
    column_to_quaternions,
    dirac_from_left,
    dirac_with_phase,
    direction_element,
    doran_h,
    elko_boost,
    elko_map_conditions,
    elko_quartet,
    elko_rest,
    even_to_column,
    even_to_ideal,
    fierz_residuals,
    frame_from_bilinears,
    generalized_fierz_residuals,
    helicity_eigenspinor,
    hopf_map,
    ideal_to_column,
    instanton_obstruction,
    is_boomerang,
    mappability,
    projection_spinor,
    quaternions_to_column,
    reconstruct,
    sigma_projector_matrix,
    weyl_spinor,
)

# one-parameter families through the three regular classes, standard representation
FAMILY = {
    1: lambda a, b: np.array([a, 0, 1j * b, 0]),
    2: lambda a, b: np.array([a * (1 + 0.4j), b * (1 + 0.4j), 0, 0]),
    3: lambda a, b: np.array([1j * a, 1j * b, a, b]),
}


def random_admissible(rng):
    while True:
        raw = rng.standard_normal(3)
        raw /= np.linalg.norm(raw)
        if 0.05 < abs(raw[2]) < 0.95:
            return direction_element(raw)


def random_unit_quaternion(rng):
    c = rng.standard_normal(4)
    return Quaternion(*(c / np.linalg.norm(c)))


def closed_form_current(alpha, beta):
    return np.array(
        [
            2 * (abs(alpha) ** 2 + abs(beta) ** 2),
            (-2 * (alpha * np.conj(beta) + np.conj(alpha) * beta)).real,
            (-2j * (alpha * np.conj(beta) - np.conj(alpha) * beta)).real,
            -2 * (abs(alpha) ** 2 - abs(beta) ** 2),
        ]
    )


def closed_form_spin(alpha, beta):
    return np.array(
        [
            (beta**2 - alpha**2).real,
            (alpha**2 + beta**2).imag,
            2 * (alpha * beta).real,
            -2 * (alpha * beta).imag,
            -(alpha**2 + beta**2).real,
            (alpha**2 - beta**2).imag,
        ]
    )


def boost_factor(pair, pnorm, m):
    energy = np.hypot(m, pnorm)
    half = np.sqrt((energy + m) / (2 * m))
    ratio = pnorm / (energy + m)
    return half * (1 - ratio) if pair == "-+" else half * (1 + ratio)


def test_fierz_identities_hold_across_a_mixed_thousand_within_budget():
    rng = np.random.default_rng(111)
    spinors = []
    for _ in range(600):
        rep = "chiral" if rng.random() < 0.5 else "standard"
        spinors.append(random_spinor(rng, rep, scale=rng.uniform(0.2, 4.0)))
    for _ in range(150):
        phi = WeylC2(rng.standard_normal(2) + 1j * rng.standard_normal(2))
        spinors.append(elko_rest(phi, "self" if rng.random() < 0.5 else "anti").spinor)
    for lam in elko_quartet():
        for pnorm in np.linspace(0.1, 2.0, 13):
            spinors.append(elko_boost(lam, [0, 0, pnorm], 1.0).spinor)
    for _ in range(98):
        phi = WeylC2(rng.standard_normal(2) + 1j * rng.standard_normal(2))
        spinors.append(weyl_spinor(phi, "left" if rng.random() < 0.5 else "right"))
    for _ in range(100):
        spinors.append(projection_spinor(random_even(rng), random_admissible(rng)))
    assert len(spinors) == 1000

    start = time.monotonic()
    for psi in spinors:
        b = bilinears(psi)
        scale = max(1.0, float(b.J[0]) ** 2)
        assert np.max(fierz_residuals(b)) < 1e-10 * scale
        z = aggregate(b)
        worst = np.max(generalized_fierz_residuals(z, b, psi.rep))
        assert worst < 1e-9 * max(1.0, scale**1.5)
    assert time.monotonic() - start < 5.0


def test_eigenspinor_quartet_keeps_closed_form_covariants_under_boosts():
    m = 1.0
    for lam in elko_quartet():
        sign = 1.0 if lam.conjugacy == "self" else -1.0
        alpha, beta = lam.phi.components
        for pnorm in [0.0, *np.linspace(0.05, 2.0, 20)]:
            if pnorm == 0.0:
                cur, factor = lam, 1.0
            else:
                cur = elko_boost(lam, [0, 0, pnorm], m)
                factor = boost_factor(lam.pair, pnorm, m)
            b = bilinears(cur.spinor)
            assert classify(b).label == 5
            bound = 1e-10 * b.J[0]
            assert abs(b.sigma) < bound
            assert abs(b.omega) < bound
            assert np.max(np.abs(b.K)) < bound
            np.testing.assert_allclose(
                b.J, closed_form_current(factor * alpha, factor * beta), atol=1e-12
            )
            np.testing.assert_allclose(
                b.S, sign * closed_form_spin(factor * alpha, factor * beta), atol=1e-12
            )


def test_self_conjugate_eigenspinors_are_conjugation_fixed_points():
    for lam in elko_quartet():
        if lam.conjugacy != "self":
            continue
        for pnorm in [0.0, 0.3, 0.9, 1.7, 2.5]:
            cur = lam if pnorm == 0.0 else elko_boost(lam, [0, 0, pnorm], 1.0)
            image = charge_conjugation(cur.spinor)
            np.testing.assert_allclose(image.components, cur.components, atol=1e-12)
    rng = np.random.default_rng(112)
    for _ in range(100):
        psi = random_spinor(rng, "chiral", scale=rng.uniform(0.2, 3.0))
        twice = charge_conjugation(charge_conjugation(psi))
        np.testing.assert_allclose(twice.components, psi.components, atol=1e-12)


def test_every_class_has_a_witness_and_projections_fill_class_four():
    phi = helicity_eigenspinor((0.0, 0.0, 1.0), +1)
    p = np.array([0.3, -0.2, 0.5])
    witnesses = {
        1: dirac_with_phase(phi, p, 1.3, delta=0.7),
        2: dirac_from_left(phi, p, 1.3),
        3: dirac_with_phase(phi, p, 1.3, delta=np.pi / 2),
        4: projection_spinor(
            Multivector.scalar(1.0),
            direction_element([0.3, 0.4, np.sqrt(1 - 0.25)]),
        ),
        5: elko_rest(phi, "self").spinor,
        6: weyl_spinor(WeylC2(np.array([1.0, -0.5j])), "left"),
    }
    for label, psi in witnesses.items():
        assert classify(bilinears(psi)).label == label

    rng = np.random.default_rng(113)
    for _ in range(50):
        u = random_admissible(rng)
        b = bilinears(projection_spinor(random_even(rng), u))
        assert classify(b).label == 4
        residual = np.linalg.norm(b.K - doran_h(u) * b.J)
        assert residual < 1e-9 * max(1.0, np.linalg.norm(b.J))


def test_degeneration_paths_terminate_and_half_projectors_split_the_identity():
    u = direction_element([0.3, 0.4, np.sqrt(1 - 0.25)])
    h_path = [classify(bilinears(psi)).label for _, _, psi in class_limit(u, "h->0")]
    s_path = [classify(bilinears(psi)).label for _, _, psi in class_limit(u, "s->0")]
    assert h_path[-1] == 5
    assert s_path[-1] == 6

    rng = np.random.default_rng(114)
    for _ in range(25):
        b = bilinears(projection_spinor(random_even(rng), random_admissible(rng)))
        frame = frame_from_bilinears(b)
        total = sigma_projector_matrix(frame.s, frame.h, +1) + sigma_projector_matrix(
            frame.s, frame.h, -1
        )
        assert np.array_equal(total, np.eye(4, dtype=complex))


def test_projected_frames_are_annihilated_and_real_aggregates_self_adjoint():
    rng = np.random.default_rng(115)
    for _ in range(20):
        b = bilinears(projection_spinor(random_even(rng), random_admissible(rng)))
        residuals = annihilator_residuals(frame_from_bilinears(b))
        assert residuals["z_squared"] < 1e-11
        assert residuals["left"] < 1e-11
        assert residuals["right"] < 1e-11
    for _ in range(50):
        comp = rng.standard_normal(4) * rng.uniform(0.3, 2.0)
        rep = "chiral" if rng.random() < 0.5 else "standard"
        z = aggregate(bilinears(SpinorC4(comp.astype(complex), rep)))
        assert is_boomerang(z)


def test_reconstruction_recovers_spinors_up_to_phase_and_rejects_kernel_probes():
    rng = np.random.default_rng(116)
    for _ in range(100):
        rep = "chiral" if rng.random() < 0.5 else "standard"
        psi = random_spinor(rng, rep)
        psi = psi.scaled(1.0 / np.linalg.norm(psi.components))
        z = aggregate(bilinears(psi))
        for _ in range(10):
            rebuilt = reconstruct(z, random_spinor(rng, rep))
            aligned = phase_align(rebuilt.components, psi.components)
            assert np.linalg.norm(aligned - psi.components) < 1e-8

    z = aggregate(bilinears(SpinorC4([1, 0, 0, 0], "standard")))
    with pytest.raises(DegenerateProbeError):
        reconstruct(z, SpinorC4([0, 1, 0, 0], "standard"))


def test_unit_columns_reach_unit_points_with_rigid_fibers_and_tight_round_trips():
    rng = np.random.default_rng(118)
    for _ in range(500):
        point = hopf_map(column_to_quaternions(random_unit_spinor(rng)))
        assert abs(point.norm() - 1.0) < 1e-10
    for _ in range(5):
        pair = column_to_quaternions(random_unit_spinor(rng))
        base = hopf_map(pair).as_array()
        for _ in range(20):
            moved = hopf_map(pair.right_multiplied(random_unit_quaternion(rng)))
            np.testing.assert_allclose(moved.as_array(), base, atol=1e-12)
    for _ in range(50):
        psi = random_unit_spinor(rng)
        back = quaternions_to_column(column_to_quaternions(psi))
        assert np.linalg.norm(back.components - psi.components) < 1e-13
        even = column_to_even(psi)
        assert np.linalg.norm(even_to_column(even).components - psi.components) < 1e-13
        xi = even_to_ideal(even)
        assert np.linalg.norm(ideal_to_column(xi).components - psi.components) < 1e-13


def test_current_norm_is_bounded_below_while_eigenspinors_sit_off_the_sphere():
    rng = np.random.default_rng(117)
    for _ in range(1000):
        psi = random_unit_spinor(rng)
        report = instanton_obstruction(psi)
        assert report["J_norm"] > 1e-3
        b = bilinears(psi)
        # the time component alone keeps the current away from zero
        assert np.linalg.norm(b.J) >= b.J[0] > 1.0 - 1e-12

    for lam in elko_quartet():
        for pnorm in [0.0, 0.4, 1.1, 2.0]:
            cur = lam if pnorm == 0.0 else elko_boost(lam, [0, 0, pnorm], 1.0)
            report = instanton_obstruction(cur.spinor)
            norm2 = np.linalg.norm(cur.components) ** 2
            assert abs(report["sigma_bilinear"]) < 1e-12 * max(1.0, norm2)
            assert report["J_norm"] > 1e-3


def test_mapping_routes_agree_and_only_constructed_families_pass():
    rng = np.random.default_rng(119)
    hits = 0
    for _ in range(1000):
        psi = random_spinor(rng, "standard", scale=rng.uniform(0.2, 3.0))
        report = elko_map_conditions(psi)
        assert report.route_disagreement() < 1e-12 * report.scale
        if any(report.satisfied(k) for k in (1, 2, 3)):
            hits += 1
    assert hits / 1000 < 0.01

    rng = np.random.default_rng(120)
    for label in (1, 2, 3):
        for _ in range(5):
            a, b = rng.uniform(0.3, 2.0, size=2) * rng.choice([-1.0, 1.0], size=2)
            psi = SpinorC4(FAMILY[label](a, b), "standard")
            assert elko_map_conditions(psi).satisfied(label)
            assert mappability(psi)[label] is True
