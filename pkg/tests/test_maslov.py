"""Tests for symplectic paths, crossings and the Robbin-Salamon index."""

import math

import numpy as np
import pytest
from pytest_mock import MockerFixture

from symplectic_index.core.errors import CrossingError, ErrorCode, LinearAlgebraError, SymplecticIndexError
from symplectic_index.core.maslov import (
    Crossing,
    CrossingKind,
    HalfInteger,
    LagrangianPath,
    Segment,
    SymplecticPathSpec,
    compute_maslov_pair,
    concatenate,
    crossing_form,
    direct_sum,
    evaluate_path,
    find_crossings,
    left_multiply,
    maslov_index,
    maslov_index_pair,
    perturb,
    random_path,
    rescale,
    restrict,
    reverse,
    sample_path,
)
from symplectic_index.core.symlin import (
    SympSpace,
    frame_direct_sum,
    horizontal,
    is_symplectic,
    random_lagrangian,
    random_symplectic,
    vertical,
)

from .helpers import line, rotation_matrix, rotation_spec


@pytest.mark.unit
class TestHalfInteger:
    def test_text(self) -> None:
        assert str(HalfInteger(3)) == "3/2"
        assert str(HalfInteger(-4)) == "-2"
        assert str(HalfInteger(0)) == "0"

    def test_arithmetic_is_exact(self) -> None:
        total = HalfInteger(1) + HalfInteger(1) - 1
        assert total == 0
        assert (HalfInteger(3) * 2).twice == 6
        assert -HalfInteger(1) == -0.5

    def test_from_float_residual(self) -> None:
        assert HalfInteger.from_float(1.5000000001).twice == 3
        with pytest.raises(SymplecticIndexError) as exc:
            HalfInteger.from_float(1.3)
        assert exc.value.code is ErrorCode.RESIDUAL


@pytest.mark.unit
class TestEvaluatePath:
    def test_start(self) -> None:
        assert np.allclose(evaluate_path(rotation_spec(math.pi, 1.0), 0.0).entries, np.eye(2))

    def test_half_turn_is_minus_identity(self) -> None:
        assert np.allclose(evaluate_path(rotation_spec(math.pi, 1.0), 1.0).entries, -np.eye(2))

    def test_quarter_turn(self) -> None:
        value = evaluate_path(rotation_spec(math.pi, 1.0), 0.5).entries
        assert np.allclose(value, rotation_matrix(math.pi / 2))

    def test_out_of_range(self) -> None:
        with pytest.raises(LinearAlgebraError) as exc:
            evaluate_path(rotation_spec(math.pi, 1.0), 1.5)
        assert exc.value.code is ErrorCode.OUT_OF_RANGE

    def test_values_stay_symplectic(self, rng: np.random.Generator) -> None:
        spec = random_path(SympSpace.standard(2), rng)
        for t in np.linspace(0.0, spec.duration, 9):
            assert is_symplectic(evaluate_path(spec, float(t)), tol=1e-8)

    def test_asymmetric_generator_rejected(self) -> None:
        with pytest.raises(LinearAlgebraError) as exc:
            Segment(np.array([[0.0, 1.0], [0.0, 0.0]]), 1.0)
        assert exc.value.code is ErrorCode.ASYMMETRIC_FORM

    def test_nonpositive_duration_rejected(self) -> None:
        with pytest.raises(LinearAlgebraError):
            Segment(np.eye(2), 0.0)

    def test_sample_path_hits_breakpoints(self) -> None:
        segments = (Segment(math.pi * np.eye(2), 1.0), Segment(0.5 * math.pi * np.eye(2), 0.5))
        spec = SymplecticPathSpec(SympSpace.standard(1), segments)
        times, values = sample_path(spec, 64)
        assert times[0] == 0.0
        assert times[-1] == pytest.approx(1.5)
        assert np.any(np.isclose(times, 1.0, atol=1e-12))
        assert np.all(np.diff(times) > 0)
        for k in (0, len(times) // 3, len(times) - 1):
            assert np.allclose(values[k], evaluate_path(spec, float(times[k])).entries, atol=1e-9)


@pytest.mark.unit
class TestPathAlgebra:
    def test_concatenate_requires_matching_endpoint(self) -> None:
        with pytest.raises(LinearAlgebraError):
            concatenate(rotation_spec(math.pi, 0.5), rotation_spec(math.pi, 0.5))

    def test_restrict_then_concatenate(self) -> None:
        spec = rotation_spec(math.pi, 1.0)
        glued = concatenate(restrict(spec, 0.0, 0.3), restrict(spec, 0.3, 1.0))
        assert np.allclose(glued.end_matrix, spec.end_matrix)

    def test_reverse_ends_at_start(self) -> None:
        spec = rotation_spec(0.7, 2.0)
        assert np.allclose(reverse(spec).end_matrix, np.eye(2))

    def test_rescale_keeps_image(self) -> None:
        spec = rotation_spec(math.pi, 1.0)
        stretched = rescale(spec, 2.0)
        assert stretched.duration == pytest.approx(2.0)
        assert np.allclose(evaluate_path(stretched, 1.0).entries, evaluate_path(spec, 0.5).entries)

    def test_perturb_keeps_start_and_duration(self) -> None:
        spec = rotation_spec(math.pi, 1.0)
        moved = perturb(spec, 1e-4, np.diag([1.0, 2.0]))
        assert moved.duration == pytest.approx(1.0)
        assert np.allclose(moved.start_matrix, np.eye(2))

    def test_direct_sum_merges_breakpoints(self) -> None:
        first = SymplecticPathSpec(SympSpace.standard(1), (Segment(np.eye(2), 0.4), Segment(-np.eye(2), 0.6)))
        summed = direct_sum(first, rotation_spec(1.0, 1.0))
        assert summed.space.dim == 4
        assert np.allclose(summed.breakpoints, [0.0, 0.4, 1.0])


@pytest.mark.unit
class TestCrossings:
    def test_constant_transverse_path_has_none(self, plane: SympSpace) -> None:
        path = LagrangianPath.constant(horizontal(plane))
        assert find_crossings(path, vertical(plane)) == []

    def test_half_turn_crosses_at_both_ends(self, plane: SympSpace) -> None:
        path = LagrangianPath(rotation_spec(math.pi, 1.0), horizontal(plane))
        crossings = find_crossings(path, horizontal(plane))
        assert [c.kind for c in crossings] == [CrossingKind.START, CrossingKind.END]
        assert all(c.regular and c.dimension == 1 for c in crossings)

    def test_full_turn_adds_an_interior_crossing(self, plane: SympSpace) -> None:
        path = LagrangianPath(rotation_spec(math.pi, 2.0), horizontal(plane))
        times = [c.time for c in find_crossings(path, horizontal(plane))]
        assert times == pytest.approx([0.0, 1.0, 2.0], abs=1e-7)

    def test_crossing_form_of_rotation(self, plane: SympSpace) -> None:
        path = LagrangianPath(rotation_spec(math.pi, 1.0), horizontal(plane))
        form = crossing_form(path, horizontal(plane), 0.0)
        assert form.matrix[0, 0] == pytest.approx(math.pi)

    def test_crossing_form_of_reversed_rotation(self, plane: SympSpace) -> None:
        path = LagrangianPath(rotation_spec(-math.pi, 1.0), horizontal(plane))
        form = crossing_form(path, horizontal(plane), 0.0)
        assert form.matrix[0, 0] == pytest.approx(-math.pi)

    def test_crossing_form_of_constant_path_vanishes(self, plane: SympSpace) -> None:
        path = LagrangianPath.constant(horizontal(plane))
        form = crossing_form(path, horizontal(plane), 0.5)
        assert np.allclose(form.matrix, 0.0)

    def test_crossing_form_needs_an_intersection(self, plane: SympSpace) -> None:
        path = LagrangianPath.constant(horizontal(plane))
        with pytest.raises(CrossingError) as exc:
            crossing_form(path, vertical(plane), 0.5)
        assert exc.value.code is ErrorCode.EMPTY_INTERSECTION

    def test_crossing_form_is_complement_independent(self, plane: SympSpace) -> None:
        path = LagrangianPath(rotation_spec(math.pi, 1.0), horizontal(plane))
        default = crossing_form(path, horizontal(plane), 0.0)
        other = crossing_form(path, horizontal(plane), 0.0, complement=line(1.2))
        assert np.allclose(other.matrix, default.matrix)

    def test_constant_full_intersection_is_irregular(self, plane: SympSpace) -> None:
        path = LagrangianPath.constant(horizontal(plane))
        with pytest.raises(CrossingError) as exc:
            find_crossings(path, horizontal(plane))
        assert exc.value.code is ErrorCode.IRREGULAR_CROSSING


@pytest.mark.unit
class TestMaslovIndex:
    def test_constant_transverse_path(self, plane: SympSpace) -> None:
        assert maslov_index(LagrangianPath.constant(horizontal(plane)), vertical(plane)) == 0

    def test_half_turn(self, plane: SympSpace) -> None:
        path = LagrangianPath(rotation_spec(math.pi, 1.0), horizontal(plane))
        assert maslov_index(path, horizontal(plane)).twice == 2

    def test_full_turn(self, plane: SympSpace) -> None:
        path = LagrangianPath(rotation_spec(math.pi, 2.0), horizontal(plane))
        assert maslov_index(path, horizontal(plane)).twice == 4

    def test_single_endpoint_counts_half(self, plane: SympSpace) -> None:
        path = LagrangianPath(rotation_spec(math.pi / 2, 1.0), horizontal(plane))
        assert str(maslov_index(path, horizontal(plane))) == "1/2"

    def test_split_and_reverse(self, plane: SympSpace) -> None:
        spec = rotation_spec(math.pi, 1.0)
        real = horizontal(plane)

        def mu(carrier: SymplecticPathSpec) -> int:
            return maslov_index(LagrangianPath(carrier, real), real).twice

        assert mu(restrict(spec, 0.0, 0.5)) + mu(restrict(spec, 0.5, 1.0)) == mu(spec)
        assert mu(reverse(restrict(spec, 0.0, 0.5))) == -1

    def test_pair_reduces_to_fixed_reference(self, plane: SympSpace) -> None:
        moving = LagrangianPath(rotation_spec(math.pi, 2.0), horizontal(plane))
        fixed = LagrangianPath.constant(horizontal(plane), 2.0)
        assert maslov_index_pair(moving, fixed) == maslov_index(moving, horizontal(plane))

    def test_pair_of_counter_rotating_lines(self, plane: SympSpace) -> None:
        first = LagrangianPath(rotation_spec(math.pi, 1.0), horizontal(plane))
        second = LagrangianPath(rotation_spec(-math.pi, 1.0), vertical(plane))
        result = compute_maslov_pair(first, second)
        assert [c.time for c in result.crossings] == pytest.approx([0.25, 0.75], abs=1e-7)
        # relative form π - (-π) is positive at both
        assert result.value.twice == 4

    def test_identical_pair_is_irregular(self, plane: SympSpace) -> None:
        path = LagrangianPath(rotation_spec(math.pi, 1.0), horizontal(plane))
        with pytest.raises(CrossingError) as exc:
            maslov_index_pair(path, path)
        assert exc.value.code is ErrorCode.IRREGULAR_CROSSING

    def test_weights_off_the_half_lattice_are_rejected(self, plane: SympSpace, mocker: MockerFixture) -> None:
        path = LagrangianPath(rotation_spec(math.pi, 1.0), horizontal(plane))
        mocker.patch.object(Crossing, "weight", new_callable=mocker.PropertyMock, return_value=0.3)
        with pytest.raises(SymplecticIndexError) as exc:
            maslov_index(path, horizontal(plane))
        assert exc.value.code is ErrorCode.RESIDUAL

    def test_weights_within_tolerance_round(self, plane: SympSpace, mocker: MockerFixture) -> None:
        path = LagrangianPath(rotation_spec(math.pi, 1.0), horizontal(plane))
        mocker.patch.object(Crossing, "weight", new_callable=mocker.PropertyMock, return_value=0.5 + 1e-9)
        assert maslov_index(path, horizontal(plane)).twice == 2


@pytest.mark.property
class TestMaslovProperties:
    @pytest.fixture(params=[1, 2])
    def setup(self, request: pytest.FixtureRequest):
        space = SympSpace.standard(request.param)
        rng = np.random.default_rng([7, request.param])
        spec = random_path(space, rng, total=1.0)
        return space, rng, spec, random_lagrangian(space, rng), random_lagrangian(space, rng)

    def test_symplectic_invariance(self, setup) -> None:
        space, rng, spec, seed, reference = setup
        g = random_symplectic(space, rng).entries
        before = maslov_index(LagrangianPath(spec, seed), reference)
        after = maslov_index(LagrangianPath(left_multiply(spec, g), seed), reference.pushed(g))
        assert before == after

    def test_reparametrization(self, setup) -> None:
        _, _, spec, seed, reference = setup
        assert maslov_index(LagrangianPath(rescale(spec, 3.0), seed), reference) == maslov_index(
            LagrangianPath(spec, seed), reference
        )

    def test_reversal(self, setup) -> None:
        _, _, spec, seed, reference = setup
        forward = maslov_index(LagrangianPath(spec, seed), reference)
        assert maslov_index(LagrangianPath(reverse(spec), seed), reference) == -forward

    def test_direct_sum(self, setup) -> None:
        _, rng, spec, seed, reference = setup
        other = rotation_spec(math.pi, spec.duration)
        plane = other.space
        summed = maslov_index(
            LagrangianPath(direct_sum(spec, other), frame_direct_sum(seed, horizontal(plane))),
            frame_direct_sum(reference, line(0.3)),
        )
        first = maslov_index(LagrangianPath(spec, seed), reference)
        second = maslov_index(LagrangianPath(other, horizontal(plane)), line(0.3))
        assert summed == first + second
