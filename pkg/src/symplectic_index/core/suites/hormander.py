"""Randomized Hörmander index identities."""

import numpy as np

from ..czindex import compute_hormander, hormander_signature
from ..symlin import LagrangianFrame, SympSpace, random_lagrangian
from .base import TrialContext, TrialOutcome, VerificationSuite


def _child(rng: np.random.Generator) -> np.random.Generator:
    return np.random.default_rng(rng.integers(0, 2**32, size=4))


class HormanderSuite(VerificationSuite):
    """
    Both Hörmander identities, path independence and the signature formula.

    A trial draws five Lagrangians A, B, C, D, D′; every index uses its own
    auxiliary generator so two evaluations of the same s follow different
    paths.
    """

    name = "hormander"
    per_dimension = True
    default_trials = 100

    def _s(self, a: LagrangianFrame, b: LagrangianFrame, c: LagrangianFrame, d: LagrangianFrame,
           rng: np.random.Generator) -> int:
        report = compute_hormander(
            a, b, c, d,
            rng=_child(rng),
            tol=self.numerics.tol,
            grid=self.numerics.grid,
            attempts=self.numerics.hormander_attempts,
        )
        return report.value_twice

    def run_trial(self, index: int, context: TrialContext) -> TrialOutcome:
        space = SympSpace.standard(context.n or 1)
        rng = context.rng
        a, b, c, d, d_prime = (random_lagrangian(space, rng) for _ in range(5))

        s_abcd = self._s(a, b, c, d, rng)
        s_abcd_again = self._s(a, b, c, d, rng)
        left_first = self._s(a, b, a, c, rng)
        right_first = self._s(c, b, a, c, rng)
        s_abcd_prime = self._s(a, b, c, d_prime, rng)
        s_abd_prime_d = self._s(a, b, d_prime, d, rng)

        path_based = self._s(a, b, b, d, rng)
        formula = hormander_signature(a, b, d, tol=self.numerics.nondegeneracy_margin).twice

        checks = {
            "first_identity": left_first == right_first,
            "second_identity": s_abcd - s_abcd_prime == s_abd_prime_d,
            "path_independence": s_abcd == s_abcd_again,
            "signature_formula": formula == path_based,
        }
        values = {
            "s_twice": s_abcd,
            "s_other_path_twice": s_abcd_again,
            "signature_twice": formula,
        }
        return TrialOutcome.compare(checks, values)
