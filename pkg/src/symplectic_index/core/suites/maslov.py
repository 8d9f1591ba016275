"""Rotation oracles and randomized Maslov index properties."""

import logging
import math
from typing import Callable, Dict, List, Tuple

import numpy as np

from ..czindex import cz_lagrangian, cz_periodic
from ..maslov import (
    CrossingKind,
    LagrangianPath,
    Segment,
    SymplecticPathSpec,
    crossing_form,
    direct_sum,
    find_crossings,
    left_multiply,
    maslov_index,
    random_path,
    rescale,
    restrict,
    reverse,
)
from ..symlin import (
    LagrangianFrame,
    SympSpace,
    frame_direct_sum,
    horizontal,
    random_lagrangian,
    random_symplectic,
    random_transverse_complement,
    signature,
)
from .base import FixedCaseSuite, TrialContext, TrialOutcome, VerificationSuite


logger = logging.getLogger(__name__)


def rotation(angular_speed: float, duration: float) -> SymplecticPathSpec:
    """t ↦ e^{i·angular_speed·t} on ℂ, as a one-segment path."""
    space = SympSpace.standard(1)
    return SymplecticPathSpec(space, (Segment(angular_speed * np.eye(2), duration),))


def _line_index(spec: SymplecticPathSpec, tol: float, grid: int) -> int:
    real_line = horizontal(spec.space)
    return maslov_index(LagrangianPath(spec, real_line), real_line, tol, grid).twice


# name -> (twice the expected value, twice the computed value)
_ORACLES: Dict[str, Tuple[int, Callable[[float, int], int]]] = {
    "line_half_turn": (2, lambda tol, grid: _line_index(rotation(math.pi, 1.0), tol, grid)),
    "line_full_turn": (4, lambda tol, grid: _line_index(rotation(math.pi, 2.0), tol, grid)),
    "cz_lagrangian_quarter": (
        1,
        lambda tol, grid: cz_lagrangian(rotation(math.pi / 2, 1.0), tol=tol, grid=grid).value_twice,
    ),
    "cz_periodic_quarter": (
        2,
        lambda tol, grid: cz_periodic(rotation(math.pi / 2, 2.0), tol=tol, grid=grid).value_twice,
    ),
    "cz_periodic_loop": (
        4,
        lambda tol, grid: cz_periodic(rotation(2 * math.pi, 1.0), tol=tol, grid=grid).value_twice,
    ),
    # the same loop run three times
    "cz_periodic_loop_x3": (
        12,
        lambda tol, grid: cz_periodic(rotation(2 * math.pi, 3.0), tol=tol, grid=grid).value_twice,
    ),
}


class RotationOracleSuite(FixedCaseSuite):
    """Closed-form indices of planar rotation paths."""

    name = "rotation_oracles"

    def cases(self) -> List[str]:
        return list(_ORACLES)

    def run_trial(self, index: int, context: TrialContext) -> TrialOutcome:
        case = self.cases()[index]
        expected, compute = _ORACLES[case]
        actual = compute(self.numerics.tol, self.numerics.grid)
        return TrialOutcome.compare(
            {case: actual == expected},
            {"expected_twice": expected, "actual_twice": actual},
        )


class MaslovPropertySuite(VerificationSuite):
    """
    Structural properties of the Robbin-Salamon index on random paths.

    Each trial draws a path F on [0, 1], a seed Lagrangian and a reference
    V, then checks concatenation additivity, symplectic invariance,
    reparametrization invariance, reversal antisymmetry, direct-sum
    additivity and complement independence of one crossing form.
    """

    name = "maslov_properties"
    per_dimension = True
    default_trials = 100

    def run_trial(self, index: int, context: TrialContext) -> TrialOutcome:
        tol, grid = self.numerics.tol, self.numerics.grid
        space = SympSpace.standard(context.n or 1)
        rng = context.rng

        spec = context.adjust(random_path(space, rng, total=1.0))
        seed = random_lagrangian(space, rng)
        reference = random_lagrangian(space, rng)

        def mu(
            carrier: SymplecticPathSpec,
            start: LagrangianFrame = seed,
            target: LagrangianFrame = reference,
        ) -> int:
            return maslov_index(LagrangianPath(carrier, start), target, tol, grid).twice

        whole = mu(spec)
        split = float(rng.uniform(0.2, 0.8))
        pieces = mu(restrict(spec, 0.0, split)) + mu(restrict(spec, split, spec.duration))

        g = random_symplectic(space, rng).entries
        moved = mu(left_multiply(spec, g), seed, reference.pushed(g))

        stretched = mu(rescale(spec, 2.0))
        # reverse(F) starts at F(T); the seed is unchanged
        backwards = mu(reverse(spec))

        line = SympSpace.standard(1)
        other = random_path(line, rng, total=spec.duration)
        other_seed = random_lagrangian(line, rng)
        other_reference = random_lagrangian(line, rng)
        summed = mu(
            direct_sum(spec, other),
            frame_direct_sum(seed, other_seed),
            frame_direct_sum(reference, other_reference),
        )
        other_index = mu(other, other_seed, other_reference)

        checks = {
            "concatenation": whole == pieces,
            "symplectic_invariance": whole == moved,
            "reparametrization": whole == stretched,
            "reversal": whole == -backwards,
            "direct_sum": summed == whole + other_index,
            "complement_independence": self._complement_independent(spec, seed, reference, context),
        }
        values = {"mu_twice": whole, "split_sum_twice": pieces, "reversed_twice": backwards}
        return TrialOutcome.compare(checks, values)

    def _complement_independent(
        self,
        spec: SymplecticPathSpec,
        seed: LagrangianFrame,
        reference: LagrangianFrame,
        context: TrialContext,
    ) -> bool:
        """Crossing form at the first interior crossing, for two complements, in one basis."""
        path = LagrangianPath(spec, seed)
        crossings = [
            c
            for c in find_crossings(path, reference, self.numerics.tol, self.numerics.grid)
            if c.kind is CrossingKind.INTERIOR
        ]
        if not crossings:
            return True
        t0 = crossings[0].time
        logger.debug(f"Comparing crossing forms at t = {t0:.6f}")
        other = random_transverse_complement(path.frame_at(t0), context.rng)
        default_form = crossing_form(path, reference, t0, tol=self.numerics.tol)
        other_form = crossing_form(path, reference, t0, complement=other, tol=self.numerics.tol)
        margin = self.numerics.nondegeneracy_margin
        scale = max(1.0, float(np.max(np.abs(default_form.matrix))))
        same_form = bool(
            np.allclose(default_form.matrix, other_form.matrix, atol=math.sqrt(self.numerics.tol) * scale)
        )
        same_signature = signature(default_form, margin).signature == signature(other_form, margin).signature
        if not same_form:
            logger.debug(f"Crossing forms differ at t = {t0:.6f} (signatures agree: {same_signature})")
        return same_form and same_signature
