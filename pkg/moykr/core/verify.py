"""
Verification service: runs every closed-form and invariance check over the configured
ranges and reports pass/fail per group.
"""

import logging
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..config import Config, PivotOrder
from ..exceptions import MoyKrError, UndefinedCompositeError, UsageError
from ..models.results import VerificationGroup, VerificationReport
from .adm import adm_check
from .closure_homology import (
    close_complex,
    closed_euler,
    euler,
    homology,
    hopf_expanded,
    kr_poincare_from_complex,
    kr_poincare_torus2,
    partial_close_one_strand,
    trefoil_closed_form,
)
from .diagram import BraidWord, Sign, close
from .homfly import (
    HomflyLadder,
    bracket_identities,
    homfly_braiding,
    homfly_compose,
    homfly_partial_trace,
    homfly_skein_difference,
    homfly_to_jones,
    homfly_torus2,
    homfly_torus2_closed_form,
    mirror_zeta,
    z_variable,
)
from .kr import (
    KRComplex,
    check_invariants,
    compose,
    gaussian_eliminate,
    identity_complex,
    same_graded_summands,
    sigma_complex,
    torus2_complex,
    zigzag_complex,
)
from .moy_eval import (
    LadderElement,
    braiding,
    evaluate_closed,
    jones,
    jones_torus2,
    ladder_mul,
    partial_trace,
    sigma_power,
    sigma_power_closed_form,
    skein_difference,
)
from .morphisms import BasisMor, compose_basis
from .ring import Q_VARS, LaurentPoly, exact_div, q_binomial, q_integer, q_power


logger = logging.getLogger(__name__)

GROUPS = ("ring", "morphism_algebra", "moy", "homfly", "reidemeister", "normal_form",
          "kr_poincare", "euler", "adm")


class _Checks:
    """Collects the outcome of the checks of one group."""

    def __init__(self, name: str):
        self.name = name
        self.count = 0
        self.failures: List[str] = []
        self.notes: List[str] = []

    def check(self, condition: bool, description: str) -> None:
        self.count += 1
        if not condition:
            logger.debug("[%s] failed: %s", self.name, description)
            self.failures.append(description)

    def attempt(self, description: str, func: Callable[[], bool]) -> None:
        """Run a check whose computation may itself raise."""
        try:
            outcome = func()
        except MoyKrError as e:
            self.count += 1
            self.failures.append(f"{description}: {e}")
            return
        self.check(outcome, description)

    def note(self, text: str) -> None:
        self.notes.append(text)

    def result(self) -> VerificationGroup:
        return VerificationGroup(
            name=self.name,
            passed=not self.failures,
            checks=self.count,
            failures=self.failures,
            notes=self.notes,
        )


def _torus_braid(k: int) -> BraidWord:
    return BraidWord(width=2, letters=(1,) * k)


class Verifier:
    """Runs the verification groups with ranges taken from a Config."""

    def __init__(self, config: Optional[Config] = None):
        self.config = config or Config()
        self._torus_cache: Dict[Tuple[int, int, PivotOrder], KRComplex] = {}

    def _levels(self, top: Optional[int] = None) -> range:
        return range(2, (top or self.config.verify_max_level) + 1)

    def _crossings(self, top: Optional[int] = None) -> range:
        return range(1, (top or self.config.verify_max_crossings) + 1)

    def _torus(self, k: int, n: int, order: Optional[PivotOrder] = None) -> KRComplex:
        order = PivotOrder(order or self.config.pivot_order)
        key = (k, n, order)
        if key not in self._torus_cache:
            self._torus_cache[key] = torus2_complex(
                k, n, order=order, check=self.config.check_invariants
            )
        return self._torus_cache[key]

    def run(self, groups: Optional[Sequence[str]] = None) -> VerificationReport:
        """Run the named groups, all of them by default.

        Raises:
            UsageError: If a group name is unknown.
        """
        names = list(groups) if groups else list(GROUPS)
        unknown = [name for name in names if name not in GROUPS]
        if unknown:
            raise UsageError(f"Unknown verification group(s): {', '.join(unknown)}")
        results = []
        for name in names:
            logger.info("Running verification group %s", name)
            group = getattr(self, f"verify_{name}")()
            logger.info("Group %s: %s (%d checks)", name, "pass" if group.passed else "FAIL",
                        group.checks)
            results.append(group)
        return VerificationReport(groups=results)

    def run_all(self) -> VerificationReport:
        return self.run()

    # Groups

    def verify_ring(self) -> VerificationGroup:
        checks = _Checks("ring")
        for m in range(0, self.config.ring_max_level + 1):
            bracket = q_integer(m)
            checks.check(bracket.evaluate_at_one() == m, f"[{m}] at q=1 is {m}")
            checks.check(bracket.is_palindromic(), f"[{m}] is palindromic")
            if m >= 2:
                checks.check(
                    bracket == q_integer(2) * q_integer(m - 1) - q_integer(m - 2),
                    f"[{m}] = [2][{m - 1}] - [{m - 2}]",
                )
                checks.check(
                    bracket == q_power(1 - m) + q_power(1) * q_integer(m - 1),
                    f"[{m}] = q^{1 - m} + q[{m - 1}]",
                )
        checks.check(q_binomial(4, 2).evaluate_at_one() == 6, "[4 choose 2] at q=1 is 6")
        checks.check(q_binomial(5, 0) == LaurentPoly.one(Q_VARS), "[5 choose 0] = 1")
        checks.check(
            exact_div(1 - q_power(4), 1 + q_power(2)) == 1 - q_power(2),
            "(1 - q^4) / (1 + q^2) = 1 - q^2",
        )
        return checks.result()

    def verify_morphism_algebra(self) -> VerificationGroup:
        checks = _Checks("morphism_algebra")
        checks.check(compose_basis(BasisMor.CHI1, BasisMor.CHI0) is None, "chi1 chi0 = 0")
        checks.check(compose_basis(BasisMor.CHI0, BasisMor.CHI1) is BasisMor.ALPHA,
                     "chi0 chi1 = alpha")
        for outer, inner in ((BasisMor.ALPHA, BasisMor.CHI0), (BasisMor.CHI1, BasisMor.ALPHA),
                             (BasisMor.ALPHA, BasisMor.ALPHA), (BasisMor.GAMMA, BasisMor.ALPHA),
                             (BasisMor.ALPHA, BasisMor.GAMMA)):
            checks.check(compose_basis(outer, inner) is None,
                         f"{outer.value} {inner.value} = 0")
        for kind in BasisMor:
            checks.check(compose_basis(kind, BasisMor.ONE) is kind, f"{kind.value} 1 = {kind.value}")
        for outer, inner in ((BasisMor.GAMMA, BasisMor.CHI0), (BasisMor.CHI1, BasisMor.GAMMA),
                             (BasisMor.GAMMA, BasisMor.GAMMA)):
            try:
                compose_basis(outer, inner)
                checks.check(False, f"{outer.value} {inner.value} is left undefined")
            except UndefinedCompositeError:
                checks.check(True, f"{outer.value} {inner.value} is left undefined")
        checks.check(BasisMor.CHI0.degree + BasisMor.CHI1.degree == BasisMor.ALPHA.degree,
                     "deg chi0 + deg chi1 = deg alpha")
        return checks.result()

    def verify_moy(self) -> VerificationGroup:
        checks = _Checks("moy")
        one = LaurentPoly.one(Q_VARS)
        for n in self._levels():
            plus, minus = braiding(Sign.PLUS, n), braiding(Sign.MINUS, n)
            checks.check(ladder_mul(plus, minus) == LadderElement.identity(),
                         f"n={n}: sigma+ sigma- = id2")
            checks.check(
                skein_difference(n) == LadderElement.identity().scale(q_power(-1) - q_power(1)),
                f"n={n}: skein relation",
            )
            checks.check(partial_trace(plus, n) == one, f"n={n}: sigma+ traces to id1")
            checks.check(partial_trace(minus, n) == one, f"n={n}: sigma- traces to id1")
            checks.check(partial_trace(LadderElement.wide(), n) == q_integer(n - 1),
                         f"n={n}: closing one strand of S gives [n-1]")
            checks.check(
                jones(BraidWord(width=2, letters=(1, 1, -1)), n)
                == jones(BraidWord(width=2, letters=(1,)), n),
                f"n={n}: canceling pair leaves the invariant unchanged",
            )
            for k in self._crossings():
                checks.check(sigma_power(k, n) == sigma_power_closed_form(k, n),
                             f"n={n}, k={k}: (sigma+)^k closed form")
                expected = jones_torus2(k, n)
                braid = _torus_braid(k)
                checks.check(jones(braid, n) == expected, f"n={n}, k={k}: ladder Jones")
                checks.attempt(f"n={n}, k={k}: closed diagram word evaluation",
                               lambda: evaluate_closed(close(braid), n) == expected)
        return checks.result()

    def verify_homfly(self) -> VerificationGroup:
        checks = _Checks("homfly")
        for n in self._levels(self.config.homfly_max_level):
            for identity, holds in bracket_identities(n).items():
                checks.check(holds, f"n={n}: {identity}")
            plus, minus = homfly_braiding(Sign.PLUS, n), homfly_braiding(Sign.MINUS, n)
            checks.check(homfly_compose(plus, minus) == HomflyLadder.identity(n),
                         f"n={n}: sigma+ sigma- = id2")
            checks.check(
                homfly_skein_difference(n) == HomflyLadder.identity(n).scale(z_variable()),
                f"n={n}: alpha sigma+ - alpha^-1 sigma- = z id2",
            )
            checks.check(homfly_partial_trace(plus) == 1, f"n={n}: sigma+ traces to 1")
            checks.check(homfly_partial_trace(minus) == 1, f"n={n}: sigma- traces to 1")
            for k in self._crossings(self.config.homfly_max_crossings):
                value = homfly_torus2(k, n)
                checks.check(value == homfly_torus2_closed_form(k, n),
                             f"n={n}, k={k}: HOMFLY-PT closed form")
                checks.check(mirror_zeta(value) == value,
                             f"n={n}, k={k}: depends on zeta only through z")
                if n <= self.config.verify_max_level:
                    checks.check(homfly_to_jones(value, n) == jones_torus2(k, n),
                                 f"n={n}, k={k}: specializes to the Jones polynomial")
        return checks.result()

    def verify_reidemeister(self) -> VerificationGroup:
        checks = _Checks("reidemeister")
        strand = {(0, 0): 1}
        for n in self._levels():
            for sign in Sign:
                crossing = sigma_complex(sign, n)
                checks.attempt(f"n={n}: sigma{sign.value} is a complex",
                               lambda: check_invariants(crossing) is None)
                checks.attempt(
                    f"n={n}: closing one strand of sigma{sign.value} gives one strand",
                    lambda: homology(partial_close_one_strand(crossing, n)) == strand,
                )
            checks.attempt(
                f"n={n}: sigma+ sigma- reduces to Id2",
                lambda: gaussian_eliminate(
                    compose(sigma_complex(Sign.PLUS, n), sigma_complex(Sign.MINUS, n),
                            check=self.config.check_invariants),
                    self.config.pivot_order,
                ) == identity_complex(),
            )
            checks.attempt(
                f"n={n}: sigma- sigma+ reduces to Id2",
                lambda: gaussian_eliminate(
                    compose(sigma_complex(Sign.MINUS, n), sigma_complex(Sign.PLUS, n),
                            check=self.config.check_invariants),
                    self.config.pivot_order,
                ) == identity_complex(),
            )
        return checks.result()

    def verify_normal_form(self) -> VerificationGroup:
        checks = _Checks("normal_form")
        for n in self._levels():
            for k in self._crossings(self.config.normal_form_max_crossings):
                checks.attempt(f"n={n}, k={k}: reduced complex is the zigzag",
                               lambda: self._torus(k, n) == zigzag_complex(k, n))
                checks.attempt(
                    f"n={n}, k={k}: pivot order does not change the summands",
                    lambda: same_graded_summands([self._torus(k, n, order)
                                                  for order in PivotOrder]),
                )
        return checks.result()

    def verify_kr_poincare(self) -> VerificationGroup:
        checks = _Checks("kr_poincare")
        for n in self._levels():
            for k in self._crossings():
                h, poincare = kr_poincare_from_complex(self._torus(k, n), n)
                checks.check(poincare == kr_poincare_torus2(k, n),
                             f"n={n}, k={k}: Poincaré polynomial closed form")
                checks.check(all(dim > 0 for dim in h.values()),
                             f"n={n}, k={k}: dimensions are positive")
                if k % 2 and k > 1:
                    checks.check(all(hdeg != 1 for hdeg, _ in h),
                                 f"n={n}, k={k}: homology vanishes in degree 1")
            unreduced = compose(sigma_complex(Sign.PLUS, n), sigma_complex(Sign.PLUS, n))
            checks.attempt(
                f"n={n}: closure homology survives elimination",
                lambda: homology(close_complex(unreduced, n))
                == kr_poincare_from_complex(self._torus(2, n), n)[0],
            )
        for n in range(2, self.config.scale_max_level + 1):
            checks.check(
                kr_poincare_from_complex(self._torus(2, n), n)[1] == hopf_expanded(n),
                f"n={n}: Hopf link",
            )
            checks.check(
                kr_poincare_from_complex(self._torus(3, n), n)[1] == trefoil_closed_form(n),
                f"n={n}: trefoil",
            )
        return checks.result()

    def verify_euler(self) -> VerificationGroup:
        checks = _Checks("euler")
        for n in self._levels():
            for k in self._crossings():
                expected = jones_torus2(k, n)
                checks.check(euler(kr_poincare_torus2(k, n)) == expected,
                             f"n={n}, k={k}: Poincaré polynomial at t=-1")
                checks.check(closed_euler(self._torus(k, n), n) == expected,
                             f"n={n}, k={k}: Euler characteristic of the closed complex")
                if k >= 2:
                    unreduced = compose(sigma_complex(Sign.PLUS, n), self._torus(k - 1, n))
                    checks.check(closed_euler(unreduced, n) == expected,
                                 f"n={n}, k={k}: Euler characteristic before elimination")
        return checks.result()

    def verify_adm(self) -> VerificationGroup:
        checks = _Checks("adm")
        for comparison in adm_check(self.config.adm_max_crossings, self.config.adm_max_level):
            label = f"n={comparison.n}, k={comparison.k}"
            if comparison.confirmed:
                checks.check(comparison.matches, f"{label}: bracket-ring representative")
            elif not comparison.matches:
                checks.note(f"{label}: representative {comparison.realized} differs from "
                            f"{comparison.expected}")
        return checks.result()
