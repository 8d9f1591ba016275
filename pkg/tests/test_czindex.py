"""Tests for the Conley-Zehnder and Hörmander indices."""

import math

import numpy as np
import pytest

from symplectic_index.core.czindex import (
    compute_hormander,
    cz_lagrangian,
    cz_periodic,
    graph_path,
    hormander,
    hormander_signature,
    monodromy_gap,
)
from symplectic_index.core.errors import CrossingError, ErrorCode, LinearAlgebraError
from symplectic_index.core.maslov import conjugate_path, evaluate_path
from symplectic_index.core.symlin import (
    SympSpace,
    complex_conjugation,
    horizontal,
    random_lagrangian,
    vertical,
)
from symplectic_index.models.report import IndexFlavor

from .helpers import line, rotation_spec


@pytest.mark.unit
class TestLagrangianFlavor:
    def test_half_turn(self) -> None:
        report = cz_lagrangian(rotation_spec(math.pi, 1.0))
        assert report.value_twice == 2
        assert report.convention_tag is IndexFlavor.LAGRANGIAN
        assert [c.kind for c in report.crossings] == ["start", "end"]

    def test_quarter_turn_is_half(self) -> None:
        assert cz_lagrangian(rotation_spec(math.pi / 2, 1.0)).index == "1/2"

    def test_transverse_reference(self) -> None:
        # e^{iπt/2}ℝ meets iℝ only at t = 1
        report = cz_lagrangian(rotation_spec(math.pi / 2, 1.0), reference=vertical(SympSpace.standard(1)))
        assert report.value_twice == 1

    def test_anti_symplectic_conjugation_flips_sign(self) -> None:
        spec = rotation_spec(math.pi, 1.0)
        flipped = conjugate_path(spec, complex_conjugation(spec.space).entries)
        assert cz_lagrangian(flipped).value_twice == -2

    def test_report_carries_duration(self) -> None:
        assert cz_lagrangian(rotation_spec(math.pi, 2.5)).duration == pytest.approx(2.5)


@pytest.mark.unit
class TestPeriodicFlavor:
    def test_graph_path_traces_graph(self) -> None:
        spec = rotation_spec(math.pi / 2, 2.0)
        carrier = graph_path(spec)
        assert carrier.space.dim == 4
        value = evaluate_path(carrier, 1.0).entries
        assert np.allclose(value[:2, :2], evaluate_path(spec, 1.0).entries)
        assert np.allclose(value[2:, 2:], np.eye(2))

    def test_quarter_speed_over_two(self) -> None:
        report = cz_periodic(rotation_spec(math.pi / 2, 2.0), require_nondegenerate=True)
        assert report.value_twice == 2
        assert report.convention_tag is IndexFlavor.PERIODIC

    def test_full_loop(self) -> None:
        assert cz_periodic(rotation_spec(2 * math.pi, 1.0)).value_twice == 4

    def test_iterated_loop_is_additive(self) -> None:
        assert cz_periodic(rotation_spec(2 * math.pi, 3.0)).value_twice == 12

    def test_degenerate_monodromy_raises_when_required(self) -> None:
        spec = rotation_spec(math.pi, 2.0)
        assert monodromy_gap(spec) == pytest.approx(0.0, abs=1e-9)
        with pytest.raises(CrossingError) as exc:
            cz_periodic(spec, require_nondegenerate=True)
        assert exc.value.code is ErrorCode.DEGENERATE_ENDPOINT

    def test_nondegenerate_monodromy_gap(self) -> None:
        assert monodromy_gap(rotation_spec(math.pi / 2, 2.0)) == pytest.approx(2.0)


@pytest.mark.unit
class TestHormander:
    def test_rotated_pair(self, plane: SympSpace) -> None:
        value = hormander(horizontal(plane), vertical(plane), line(math.pi / 4), line(3 * math.pi / 4))
        assert value == 1

    def test_coincident_ends_vanish(self, plane: SympSpace) -> None:
        report = compute_hormander(horizontal(plane), vertical(plane), line(0.4), line(0.4))
        assert report.value_twice == 0
        assert report.attempts == 1

    def test_equal_first_pair_vanishes(self, plane: SympSpace) -> None:
        assert hormander(horizontal(plane), horizontal(plane), line(0.4), line(1.9)) == 0

    def test_antisymmetry_in_the_first_pair(self, plane: SympSpace) -> None:
        forward = hormander(horizontal(plane), vertical(plane), line(math.pi / 4), line(3 * math.pi / 4))
        backward = hormander(vertical(plane), horizontal(plane), line(math.pi / 4), line(3 * math.pi / 4))
        assert forward == -backward

    def test_seeded_draws_are_reproducible(self) -> None:
        space = SympSpace.standard(2)
        frames = [random_lagrangian(space, np.random.default_rng(k)) for k in range(4)]
        first = compute_hormander(*frames, np.random.default_rng(9))
        second = compute_hormander(*frames, np.random.default_rng(9))
        assert first == second

    def test_signature_formula_needs_transversality(self, plane: SympSpace) -> None:
        with pytest.raises(LinearAlgebraError) as exc:
            hormander_signature(horizontal(plane), vertical(plane), vertical(plane))
        assert exc.value.code is ErrorCode.TRANSVERSALITY


@pytest.mark.property
class TestHormanderProperties:
    @pytest.mark.parametrize("n", [1, 2])
    @pytest.mark.parametrize("trial", range(4))
    def test_signature_formula_agrees(self, n: int, trial: int) -> None:
        rng = np.random.default_rng([0x4011, n, trial])
        space = SympSpace.standard(n)
        first, second, third = (random_lagrangian(space, rng) for _ in range(3))
        expected = hormander_signature(first, second, third)
        assert hormander(first, second, second, third, rng) == expected

    @pytest.mark.parametrize("trial", range(3))
    def test_cocycle(self, trial: int) -> None:
        rng = np.random.default_rng([0xC0C, trial])
        space = SympSpace.standard(1)
        a, b, c, d, e = (random_lagrangian(space, rng) for _ in range(5))
        assert hormander(a, b, c, d, rng) + hormander(a, b, d, e, rng) == hormander(a, b, c, e, rng)

