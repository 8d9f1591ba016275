"""Tests for symplectic linear algebra."""

import math

import numpy as np
import pytest

from symplectic_index.core.errors import ErrorCode, LinearAlgebraError
from symplectic_index.core.symlin import (
    AntiSymplecticMap,
    LagrangianFrame,
    QuadraticForm,
    SymplecticMatrix,
    SympSpace,
    complex_conjugation,
    conjugate_symplectic,
    diagonal,
    graph_lagrangian,
    horizontal,
    intersection_basis,
    intersection_dimension,
    is_symplectic,
    lagrangian_complement,
    random_lagrangian,
    random_symplectic,
    random_transverse_complement,
    signature,
    swap_involution,
    transversality,
    vertical,
)

from .helpers import line, rotation_matrix


@pytest.mark.unit
class TestIsSymplectic:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_identity(self, n: int) -> None:
        assert is_symplectic(np.eye(2 * n))

    @pytest.mark.parametrize("angle", [0.0, 0.3, math.pi / 2, 2.5, -1.0])
    def test_planar_rotations(self, angle: float) -> None:
        assert is_symplectic(rotation_matrix(angle))

    def test_scaling_is_not_symplectic(self) -> None:
        assert not is_symplectic(np.diag([2.0, 1.0]))

    def test_odd_dimension_rejected(self) -> None:
        with pytest.raises(LinearAlgebraError) as exc:
            is_symplectic(np.eye(3))
        assert exc.value.code is ErrorCode.DIMENSION_MISMATCH

    def test_space_mismatch_rejected(self) -> None:
        with pytest.raises(LinearAlgebraError):
            is_symplectic(np.eye(2), SympSpace.standard(2))

    def test_random_symplectic_has_unit_determinant(self, rng: np.random.Generator) -> None:
        matrix = random_symplectic(SympSpace.standard(2), rng).entries
        assert is_symplectic(matrix, tol=1e-8)
        assert np.linalg.det(matrix) == pytest.approx(1.0, abs=1e-8)


@pytest.mark.unit
class TestSympSpace:
    def test_standard_form_pairs_e1_with_i_e1(self, plane: SympSpace) -> None:
        e1 = np.array([1.0, 0.0])
        i_e1 = plane.form_inverse @ e1
        assert plane.omega(e1, i_e1) == pytest.approx(1.0)

    def test_doubled_space_has_reversed_second_block(self, plane: SympSpace) -> None:
        doubled = plane.doubled()
        assert doubled.dim == 4
        assert doubled.block_signs == (1, -1)
        assert np.allclose(doubled.form_matrix[2:, 2:], -plane.form_matrix)

    def test_nonpositive_dimension_rejected(self) -> None:
        with pytest.raises(LinearAlgebraError):
            SympSpace.standard(0)

    def test_symplectic_matrix_rejects_scaling(self, plane: SympSpace) -> None:
        with pytest.raises(LinearAlgebraError) as exc:
            SymplecticMatrix(np.diag([2.0, 1.0]), plane)
        assert exc.value.code is ErrorCode.NOT_SYMPLECTIC

    def test_inverse(self, rng: np.random.Generator) -> None:
        space = SympSpace.standard(2)
        m = random_symplectic(space, rng)
        assert np.allclose((m @ m.inverse()).entries, np.eye(4), atol=1e-9)


@pytest.mark.unit
class TestLagrangians:
    def test_graph_of_identity_is_diagonal(self, plane: SympSpace) -> None:
        graph = graph_lagrangian(np.eye(2))
        assert intersection_dimension(graph, diagonal(plane.doubled())) == 2

    def test_graph_of_quarter_turn_is_isotropic(self) -> None:
        graph = graph_lagrangian(rotation_matrix(math.pi / 2))
        columns = graph.columns
        assert np.allclose(columns[:2, 0], rotation_matrix(math.pi / 2)[:, 0])
        assert np.allclose(columns.T @ graph.space.form_matrix @ columns, 0.0)

    def test_graph_of_non_symplectic_matrix_rejected(self) -> None:
        with pytest.raises(LinearAlgebraError):
            graph_lagrangian(np.diag([2.0, 1.0]))

    def test_non_isotropic_frame_rejected(self) -> None:
        with pytest.raises(LinearAlgebraError) as exc:
            LagrangianFrame(np.array([[1.0, 0.0], [0.0, 0.0], [0.0, 1.0], [0.0, 0.0]]), SympSpace.standard(2))
        assert exc.value.code is ErrorCode.NOT_LAGRANGIAN

    def test_intersection_dimension_examples(self, plane: SympSpace) -> None:
        real = horizontal(plane)
        assert intersection_dimension(real, real) == 1
        assert intersection_dimension(real, vertical(plane)) == 0
        assert intersection_dimension(real, line(math.pi / 4)) == 0

    def test_intersection_basis_of_coinciding_lines(self) -> None:
        basis = intersection_basis(line(0.7), line(0.7 + math.pi))
        assert basis.shape == (2, 1)
        assert abs(float(basis[:, 0] @ np.array([math.cos(0.7), math.sin(0.7)]))) == pytest.approx(1.0)

    def test_transversality_of_axes(self, plane: SympSpace) -> None:
        assert transversality(horizontal(plane), vertical(plane)) == pytest.approx(1.0)
        assert transversality(horizontal(plane), horizontal(plane)) == pytest.approx(0.0, abs=1e-12)

    @pytest.mark.parametrize("n", [1, 2])
    def test_complement_of_real_subspace_is_imaginary(self, n: int) -> None:
        space = SympSpace.standard(n)
        complement = lagrangian_complement(horizontal(space))
        assert intersection_dimension(complement, vertical(space)) == n
        assert intersection_dimension(complement, horizontal(space)) == 0

    def test_complement_of_graph(self) -> None:
        graph = graph_lagrangian(rotation_matrix(math.pi / 2))
        complement = lagrangian_complement(graph)
        assert intersection_dimension(graph, complement) == 0

    def test_random_transverse_complement(self, rng: np.random.Generator) -> None:
        frame = random_lagrangian(SympSpace.standard(2), rng)
        other = random_transverse_complement(frame, rng)
        assert transversality(frame, other) > 1e-3


@pytest.mark.unit
class TestSignature:
    def test_identity(self) -> None:
        result = signature(np.eye(3))
        assert result.signature == 3
        assert result.nondegenerate

    def test_hyperbolic_form(self) -> None:
        result = signature(np.array([[0.0, -2.0], [-2.0, 0.0]]))
        assert (result.positive, result.negative, result.signature) == (1, 1, 0)

    def test_zero_form_reports_degeneracy(self) -> None:
        result = signature(np.zeros((2, 2)))
        assert result.degenerate == 2

    def test_zero_form_rejected_when_nondegeneracy_required(self) -> None:
        with pytest.raises(LinearAlgebraError) as exc:
            signature(np.zeros((2, 2)), require_nondegenerate=True)
        assert exc.value.code is ErrorCode.DEGENERATE

    def test_asymmetric_form_rejected(self) -> None:
        with pytest.raises(LinearAlgebraError) as exc:
            QuadraticForm(np.array([[0.0, 1.0], [0.0, 0.0]]))
        assert exc.value.code is ErrorCode.ASYMMETRIC_FORM

    def test_signature_is_congruence_invariant(self, rng: np.random.Generator) -> None:
        form = QuadraticForm(np.diag([1.0, -2.0, 3.0]))
        transform = rng.normal(size=(3, 3)) + 3 * np.eye(3)
        assert signature(form.congruent(transform)).signature == signature(form).signature == 1


@pytest.mark.unit
class TestInvolutions:
    def test_conjugating_identity(self, plane: SympSpace) -> None:
        assert np.allclose(conjugate_symplectic(complex_conjugation(plane), np.eye(2)).entries, np.eye(2))

    def test_conjugation_reverses_rotation(self, plane: SympSpace) -> None:
        result = conjugate_symplectic(complex_conjugation(plane), rotation_matrix(0.8))
        assert np.allclose(result.entries, rotation_matrix(-0.8))

    def test_identity_is_not_anti_symplectic(self, plane: SympSpace) -> None:
        with pytest.raises(LinearAlgebraError) as exc:
            AntiSymplecticMap(np.eye(2), plane)
        assert exc.value.code is ErrorCode.NOT_ANTI_SYMPLECTIC

    def test_swap_fixes_the_diagonal(self, plane: SympSpace) -> None:
        doubled = plane.doubled()
        swap = swap_involution(doubled)
        fixed = diagonal(doubled)
        assert intersection_dimension(fixed, fixed.pushed(swap.entries)) == 2

    def test_swap_needs_doubled_space(self) -> None:
        with pytest.raises(LinearAlgebraError):
            swap_involution(SympSpace.standard(1))
