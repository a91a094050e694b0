"""Registry and runner of the exact identity checks behind ``qjf verify``.

Checks are grouped in suites (forms, genfun, invariants, inversion). Each
check is a callable taking a :class:`VerifyContext` and returning a list of
:class:`CheckReport`. The runner executes checks concurrently and reports
them in registration order.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional

import numpy as np

from modules.qseries.qseries import QSeries, XSeries
from modules.ring_core.coefficient_rings import ULAURENTS
from modules.ring_core.ufraction import UFraction
from modules.ring_core.ulaurent import ULaurent
from modules.verification.check_report import (
    CheckReport,
    compare_series,
    compare_values,
)
from utils.qjf_logger import qjf_log

SUITES = ("forms", "genfun", "invariants", "inversion")


@dataclass(frozen=True)
class VerifyContext:
    order: int
    t_order: int
    x_order: int
    seed: int = 20240611


@dataclass(frozen=True)
class VerifyCheck:
    suite: str
    name: str
    run: Callable[[VerifyContext], List[CheckReport]]


@dataclass
class VerifyResult:
    suite: str
    context: VerifyContext
    reports: List[CheckReport] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(1 for r in self.reports if r.passed)

    @property
    def failed(self) -> int:
        return len(self.reports) - self.passed

    @property
    def all_passed(self) -> bool:
        return self.failed == 0

    def lines(self) -> List[str]:
        out = [r.summary() for r in self.reports]
        out.append(
            f"{self.passed} passed, {self.failed} failed "
            f"(suite {self.suite}, order {self.context.order})"
        )
        return out


# -- forms --------------------------------------------------------------


def _heat_equation(ctx: VerifyContext) -> List[CheckReport]:
    from modules.forms.theta_engine import ThetaEngine

    order = 2 * ctx.order
    residual = ThetaEngine(order).heat_residual()
    zero = QSeries.zero(residual.ring, residual.order)
    return [compare_series("heat equation", residual, zero, order)]


def _theta_sum_product(ctx: VerifyContext) -> List[CheckReport]:
    from modules.forms.theta_engine import ThetaArgument, ThetaEngine

    order = 2 * ctx.order
    engine = ThetaEngine(order)
    reports = []
    # both share the m^(-1/2) q^(1/8) prefactor
    for argument in ThetaArgument:
        reports.append(
            compare_series(
                f"theta sum = product ({argument.name})",
                engine.theta_from_sum(argument).body,
                engine.theta(argument).body,
                order,
            )
        )
    return reports


def _indefinite_theta(ctx: VerifyContext) -> List[CheckReport]:
    from modules.forms.indefinite_theta import (
        a_from_heat_equation,
        a_from_theta,
        a_lattice_sum,
    )

    lattice = a_lattice_sum(ctx.order)
    return [
        compare_series(
            "A lattice sum = theta form", lattice, a_from_theta(ctx.order)
        ),
        compare_series(
            "A lattice sum = heat form",
            lattice,
            a_from_heat_equation(ctx.order),
        ),
    ]


def _zagier(ctx: VerifyContext) -> List[CheckReport]:
    from modules.forms.zagier_check import zagier_identity_check

    order = min(ctx.order, 6)
    return [zagier_identity_check(order, 2 * order)]


def _form_constructions(ctx: VerifyContext) -> List[CheckReport]:
    from modules.forms.form_series import (
        phi_10_1_product,
        phi_10_1_quotient,
        tilde_delta_product,
        tilde_delta_quotient,
        tilde_dg2_sum,
        tilde_dg2_theta,
    )

    order = ctx.order
    return [
        compare_series(
            "tildeDelta product = theta quotient",
            tilde_delta_product(order),
            tilde_delta_quotient(order),
            order,
        ),
        compare_series(
            "phi_10_1 product = theta quotient",
            phi_10_1_product(order),
            phi_10_1_quotient(order),
            order,
        ),
        compare_series(
            "tildeDG2 sum = theta form",
            tilde_dg2_sum(order),
            tilde_dg2_theta(order),
            order,
        ),
    ]


# -- genfun -------------------------------------------------------------


def _a_constructions(ctx: VerifyContext) -> List[CheckReport]:
    from modules.genfun.genfun_engine import A_CONSTRUCTIONS, GenFunEngine

    engine = GenFunEngine(ctx.order, ctx.t_order)
    reference = engine.series_A("divisor").series
    return [
        compare_series(
            f"A {construction} = A divisor",
            engine.series_A(construction).series,
            reference,
            ctx.order,
            ctx.t_order,
        )
        for construction in A_CONSTRUCTIONS
        if construction != "divisor"
    ]


def _h_and_x(ctx: VerifyContext) -> List[CheckReport]:
    from modules.genfun.change_of_variable import x_of_q
    from modules.genfun.genfun_engine import GenFunEngine

    engine = GenFunEngine(ctx.order, ctx.t_order)
    a = engine.series_A().series
    h = engine.series_H().series
    x = engine.series_X("compose").series
    return [
        compare_series("D H = A", h.D(), a, ctx.order),
        compare_series(
            "x(X) = H", x_of_q(ctx.order).compose(x), h, ctx.order
        ),
        compare_series(
            "X compose = X genus",
            x,
            engine.series_X("genus").series,
            ctx.order,
        ),
    ]


def _t_equal_u(ctx: VerifyContext) -> List[CheckReport]:
    from modules.forms.form_series import tilde_delta_product, tilde_dg2_sum
    from modules.genfun.genfun_engine import GenFunEngine, at_t_equal_u

    engine = GenFunEngine(ctx.order, ctx.t_order)
    dg2 = tilde_dg2_sum(ctx.order)
    return [
        compare_series(
            "A/x at t = u = D tildeDG2",
            at_t_equal_u(engine.series_A().series, divide_by_x=True),
            dg2.D(),
            ctx.order,
        ),
        compare_series(
            "H/x at t = u = tildeDG2",
            at_t_equal_u(engine.series_H().series, divide_by_x=True),
            dg2,
            ctx.order,
        ),
        compare_series(
            "xK at t = u = 1/tildeDelta",
            at_t_equal_u(engine.series_xK().series),
            tilde_delta_product(ctx.order + 2).inverse(),
            ctx.order,
        ),
    ]


def _k_spot_values(ctx: VerifyContext) -> List[CheckReport]:
    from modules.genfun.genfun_engine import GenFunEngine

    k = GenFunEngine(ctx.order, ctx.t_order).series_K().series
    polar = k.coeff(-1)
    reports = []
    for n in range(min(5, ctx.t_order - 1)):
        reports.append(
            compare_values(
                f"K q^-1 t^{n + 1} = [{n + 1}]_y",
                polar.coefficient(n + 1),
                ULaurent.quantum_integer(n + 1),
            )
        )
    return reports


def _euler(ctx: VerifyContext) -> List[CheckReport]:
    from modules.genfun.euler_specializations import euler_checks, mpt_check

    reports = euler_checks(ctx.order, ctx.t_order)
    for k in range(1, 4):
        reports.append(mpt_check(k, min(ctx.order, 8)))
    return reports


def _vanishing(ctx: VerifyContext) -> List[CheckReport]:
    from modules.genfun.ktrivial import Surface, vanishing_check

    order = min(ctx.order, 6)
    return [
        vanishing_check(surface, k, order)
        for surface in Surface
        for k in range(5)
    ]


# -- invariants ---------------------------------------------------------


def _fg_properties(ctx: VerifyContext) -> List[CheckReport]:
    from modules.genfun.genfun_engine import GenFunEngine
    from modules.invariants.fg_formula import abelian_fg, fg_series

    reports = []
    bad = [
        g
        for g in range(2, ctx.order + 2)
        if not (
            abelian_fg(g).is_symmetric()
            and abelian_fg(g).vanishes_at_t_equal_u()
            and abelian_fg(g).support_is_valid()
        )
    ]
    reports.append(
        CheckReport(
            "f_g symmetric, zero at t = u, support in divisors",
            not bad,
            ctx.order,
            (bad[0] - 1, 0, 0) if bad else None,
        )
    )
    f2 = abelian_fg(2).value
    reports.append(
        compare_values("f_2 at t^1", f2.coefficient(1), ULaurent.one())
    )
    reports.append(
        compare_values(
            "f_2 at t^0", f2.coefficient(0), -ULaurent({1: 1, -1: 1})
        )
    )
    reports.append(
        compare_series(
            "sum f_g q^(g-1) = A",
            fg_series(ctx.order),
            GenFunEngine(ctx.order, ctx.t_order).series_A().series,
            ctx.order,
        )
    )
    return reports


def _ratio(num: ULaurent, den: ULaurent, scale=1) -> UFraction:
    return UFraction(num, den) * Fraction(scale)


def _p_polynomials(ctx: VerifyContext) -> List[CheckReport]:
    from modules.invariants.s_polynomials import P_poly, ZPolynomial

    y = ULaurent.y()
    ym1, yp1 = y - 1, y + 1
    half_ratio = _ratio(yp1, ym1, Fraction(-1, 2))
    expected = {
        0: ZPolynomial([UFraction.one()]),
        1: ZPolynomial([UFraction.zero(), UFraction.one()]),
        2: ZPolynomial(
            [UFraction.zero(), half_ratio, UFraction.constant(Fraction(1, 2))]
        ),
        3: ZPolynomial(
            [
                UFraction.zero(),
                _ratio(y * y + y * 4 + 1, ym1**2, Fraction(1, 3)),
                half_ratio,
                UFraction.constant(Fraction(1, 6)),
            ]
        ),
        4: ZPolynomial(
            [
                UFraction.zero(),
                _ratio(y**3 + y * y * 9 + y * 9 + 1, ym1**3, Fraction(-1, 4)),
                _ratio(y * y * 11 + y * 38 + 11, ym1**2, Fraction(1, 24)),
                _ratio(yp1, ym1, Fraction(-1, 4)),
                UFraction.constant(Fraction(1, 24)),
            ]
        ),
    }
    reports = []
    for n, poly in expected.items():
        computed = P_poly(n)
        passed = computed == poly
        reports.append(
            CheckReport(
                f"P_{n} displayed values",
                passed,
                n,
                None,
                "" if passed else repr(computed),
            )
        )
    return reports


def _abelian_cross(ctx: VerifyContext) -> List[CheckReport]:
    from modules.invariants.refined_invariants import refined_invariants
    from modules.invariants.thm_higher import thm_higher_A

    gmax = min(ctx.order + 1, 8)
    order = gmax - 1
    reports = []
    for g in range(2, gmax + 1):
        values = refined_invariants("abelian", g, 0, order)
        for i, invariant in enumerate(values):
            h = g - i
            if h < 2:
                reports.append(
                    compare_values(
                        f"abelian g = {g} N^{i} vanishes",
                        invariant.value,
                        ULaurent.zero(),
                    )
                )
                continue
            reports.append(
                compare_values(
                    f"abelian g = {g} N^{i} = closed form h = {h}",
                    invariant.value,
                    thm_higher_A(h, order).coeff(g - 1),
                )
            )
    return reports


def _k3_cross(ctx: VerifyContext) -> List[CheckReport]:
    from modules.forms.form_series import tilde_delta_quotient
    from modules.invariants.refined_invariants import k3_xK_polynomiality
    from modules.invariants.thm_higher import thm_higher_K
    from modules.invariants.x_expansion import x_expand

    gmax = min(ctx.order, 8)
    reports = []
    for g in range(0, gmax + 1):
        p = k3_xK_polynomiality(g, max(g, 1), 2 * g + 6)
        values = x_expand(p, g + 1)
        for h in range(g + 1):
            reports.append(
                compare_values(
                    f"K3 g = {g} N^{g - h} = closed form h = {h}",
                    values[g - h],
                    thm_higher_K(h, max(g, 1)).coeff(g - 1),
                )
            )
    order = min(ctx.order, 8)
    reports.append(
        compare_series(
            "K3 h = 0 series = 1/tildeDelta",
            thm_higher_K(0, order),
            tilde_delta_quotient(order + 2).inverse(),
            order,
        )
    )
    return reports


def _numconj(ctx: VerifyContext) -> List[CheckReport]:
    from modules.genfun.ktrivial import Surface
    from modules.invariants.refined_invariants import (
        numconj_series,
        refined_invariants,
    )

    order = min(ctx.order, 5)
    reports = []
    for surface in Surface:
        for k in range(4):
            top = numconj_series(surface, k, order)
            failure = None
            for g in range(max(2 - surface.chi, 0), order + 2):
                delta = surface.delta(g, k)
                if delta < 0:
                    expected = ULaurent.zero()
                else:
                    values = refined_invariants(surface, g, k, order)
                    expected = values[delta].value
                if top.coeff(g - 1) != expected:
                    failure = (g - 1, 0, 0)
                    break
            reports.append(
                CheckReport(
                    f"top terms {surface.value} k = {k}",
                    failure is None,
                    order,
                    failure,
                )
            )
    return reports


def _euler_invariants(ctx: VerifyContext) -> List[CheckReport]:
    from modules.genfun.ktrivial import Surface
    from modules.invariants.refined_invariants import euler_invariants_check

    order = min(ctx.order, 5)
    return [
        euler_invariants_check(surface, k, order)
        for surface in Surface
        for k in range(3)
    ]


# -- inversion ----------------------------------------------------------


def _change_of_variable(ctx: VerifyContext) -> List[CheckReport]:
    from modules.genfun.change_of_variable import inversion_checks

    return inversion_checks(ctx.x_order)


def _lagrange(ctx: VerifyContext) -> List[CheckReport]:
    from modules.invariants.lagrange_checks import (
        binom_identity_check,
        z2_inversion_check,
    )

    return z2_inversion_check(ctx.x_order) + binom_identity_check(
        ctx.x_order
    )


def random_unit_series(rng, order: int) -> XSeries:
    """x + sum_{n >= 2} c_n x^n with random Laurent coefficients."""
    terms = {1: ULaurent.one()}
    for n in range(2, order + 1):
        exponents = rng.integers(-2, 3, size=2)
        values = rng.integers(-5, 6, size=2)
        dens = rng.integers(1, 4, size=2)
        terms[n] = ULaurent(
            {
                int(e): Fraction(int(v), int(d))
                for e, v, d in zip(exponents, values, dens)
            }
        )
    return XSeries(ULAURENTS, terms, order)


def _random_inversion(ctx: VerifyContext) -> List[CheckReport]:
    rng = np.random.default_rng(ctx.seed)
    order = min(ctx.x_order, 8)
    reports = []
    for trial in range(3):
        f = random_unit_series(rng, order)
        g = f.comp_inverse()
        identity = XSeries.gen(ULAURENTS, order)
        reports.append(
            compare_series(
                f"random f(f^-1) = x (seed {ctx.seed}, trial {trial})",
                f.compose(g),
                identity,
                order,
            )
        )
    return reports


REGISTRY: List[VerifyCheck] = [
    VerifyCheck("forms", "heat equation", _heat_equation),
    VerifyCheck("forms", "theta sum and product", _theta_sum_product),
    VerifyCheck("forms", "indefinite theta", _indefinite_theta),
    VerifyCheck("forms", "zagier identity", _zagier),
    VerifyCheck("forms", "form constructions", _form_constructions),
    VerifyCheck("genfun", "A constructions", _a_constructions),
    VerifyCheck("genfun", "H and X", _h_and_x),
    VerifyCheck("genfun", "t = u specializations", _t_equal_u),
    VerifyCheck("genfun", "K spot values", _k_spot_values),
    VerifyCheck("genfun", "euler specializations", _euler),
    VerifyCheck("genfun", "vanishing", _vanishing),
    VerifyCheck("invariants", "f_g properties", _fg_properties),
    VerifyCheck("invariants", "P polynomials", _p_polynomials),
    VerifyCheck("invariants", "abelian closed forms", _abelian_cross),
    VerifyCheck("invariants", "K3 closed forms", _k3_cross),
    VerifyCheck("invariants", "top terms", _numconj),
    VerifyCheck("invariants", "euler numbers", _euler_invariants),
    VerifyCheck("inversion", "change of variable", _change_of_variable),
    VerifyCheck("inversion", "lagrange inversion", _lagrange),
    VerifyCheck("inversion", "random inversion", _random_inversion),
]


def checks_for(suite: str) -> List[VerifyCheck]:
    if suite == "all":
        return list(REGISTRY)
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite}")
    return [c for c in REGISTRY if c.suite == suite]


def _run_one(check: VerifyCheck, ctx: VerifyContext) -> List[CheckReport]:
    try:
        reports = check.run(ctx)
        qjf_log.debug(f"{check.suite}/{check.name}: {len(reports)} reports")
        return reports
    except Exception as e:
        qjf_log.error(f"verify {check.name} error: {e}")
        return [CheckReport(check.name, False, ctx.order, None, str(e))]


class VerifySuite:
    """Runs the registered checks of a suite on a thread pool."""

    def __init__(
        self,
        suite: str = "all",
        workers: int = 4,
        checks: Optional[List[VerifyCheck]] = None,
    ) -> None:
        try:
            self.suite = suite
            self.workers = max(1, workers)
            self.checks = checks if checks is not None else checks_for(suite)
        except Exception as e:
            qjf_log.error(f"VerifySuite __init__ error: {e}")
            raise e

    def __enter__(self) -> "VerifySuite":
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        pass

    def run(self, ctx: VerifyContext) -> VerifyResult:
        try:
            qjf_log.info(
                f"verify {self.suite}: {len(self.checks)} checks at order "
                f"{ctx.order} with {self.workers} workers"
            )
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                futures = [
                    pool.submit(_run_one, check, ctx) for check in self.checks
                ]
                grouped = [future.result() for future in futures]
            result = VerifyResult(self.suite, ctx)
            for reports in grouped:
                result.reports.extend(reports)
            qjf_log.info(
                f"verify {self.suite}: {result.passed} passed, "
                f"{result.failed} failed"
            )
            return result
        except Exception as e:
            qjf_log.error(f"VerifySuite run error: {e}")
            raise e


def run_suite(
    suite: str, ctx: VerifyContext, workers: int = 4
) -> VerifyResult:
    return VerifySuite(suite, workers).run(ctx)


__all__ = [
    "SUITES",
    "REGISTRY",
    "VerifyContext",
    "VerifyCheck",
    "VerifyResult",
    "VerifySuite",
    "checks_for",
    "random_unit_series",
    "run_suite",
]
