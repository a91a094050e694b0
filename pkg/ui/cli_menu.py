import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import List, Optional, TextIO, Tuple

from modules.ring_core.errors import ConfigError
from settings.settings_file import SettingsManager
from ui.series_serializer import (
    FORMATS,
    serialize_invariants,
    serialize_series,
)
from utils.filer import Filer
from utils.qjf_logger import qjf_log

COMMANDS = ("series", "table", "ninv", "verify", "settings")
GENFUN_NAMES = ("A", "K", "xK", "H", "X")
FORM_NAMES = ("theta", "G2", "Delta", "phi101", "tildeDelta", "tildeDG2")
SERIES_NAMES = GENFUN_NAMES + FORM_NAMES
SURFACES = ("abelian", "k3")
VARIANTS = ("point-conditions", "hyperplane")
VERIFY_SUITES = ("all", "forms", "genfun", "invariants", "inversion")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2


def u_from_y(y_spec: str) -> Fraction:
    """u = +sqrt(y) for y the square of a positive rational."""
    try:
        y = Fraction(y_spec)
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"--y expects a rational, got {y_spec!r}")
    if y <= 0:
        raise ConfigError(f"--y must be positive, got {y}")
    num, den = isqrt(y.numerator), isqrt(y.denominator)
    if num * num != y.numerator or den * den != y.denominator:
        raise ConfigError(f"y = {y} is not the square of a rational")
    return Fraction(num, den)


@dataclass
class RunConfig:
    """Resolved options of one invocation; flags win over settings."""

    command: str
    order: int
    t_order: int
    x_order: int
    fmt: str = "text"
    name: str = "A"
    y_spec: str = "formal"
    fast: bool = False
    surface: str = "abelian"
    k: int = 0
    g: Optional[int] = None
    gmax: Optional[int] = None
    variant: str = "point-conditions"
    output: Optional[str] = None
    seed: int = 20240611
    suite: str = "all"
    history: Optional[int] = None
    workers: int = 4
    record_runs: bool = True
    assignment: Optional[Tuple[str, str]] = None

    def validate(self) -> "RunConfig":
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command}")
        if self.order < 1:
            raise ConfigError(f"--order must be at least 1, got {self.order}")
        if self.t_order < 1 or self.x_order < 1:
            raise ConfigError("--t-order and the x-order must be positive")
        if self.fmt not in FORMATS:
            raise ConfigError(f"unknown format {self.fmt}")
        if self.surface not in SURFACES:
            raise ConfigError(f"unknown surface {self.surface}")
        if self.variant not in VARIANTS:
            raise ConfigError(f"unknown variant {self.variant}")
        if self.k < 0:
            raise ConfigError(f"--k must be non-negative, got {self.k}")
        if self.command == "series" and self.name not in SERIES_NAMES:
            raise ConfigError(f"unknown series {self.name}")
        if self.fast and self.y_spec != "1":
            raise ConfigError("--fast needs --y1")
        if self.y_spec not in ("formal", "1"):
            u_from_y(self.y_spec)
        if self.command == "ninv" and self.g is None:
            raise ConfigError("ninv needs --g")
        if self.command == "verify":
            if self.suite not in VERIFY_SUITES:
                raise ConfigError(f"unknown suite {self.suite}")
            if self.t_order < 2 * self.order + 4:
                raise ConfigError(
                    f"verify at order {self.order} needs --t-order >= "
                    f"{2 * self.order + 4}"
                )
        return self

    @classmethod
    def from_args(
        cls, args: argparse.Namespace, settings: SettingsManager
    ) -> "RunConfig":
        def option(attr, key):
            value = getattr(args, attr, None)
            return settings.get_typed(key) if value is None else value

        order = option("order", "default_order")
        t_order = getattr(args, "t_order", None)
        if t_order is None:
            # the default window grows with the q-order
            t_order = max(settings.get_typed("default_t_order"), 2 * order + 4)
        y_spec = "formal"
        if getattr(args, "y1", False):
            y_spec = "1"
        elif getattr(args, "y", None) is not None:
            y_spec = args.y
        return cls(
            command=args.command,
            order=order,
            t_order=t_order,
            x_order=option("x_order", "default_x_order"),
            fmt=option("format", "default_format"),
            name=getattr(args, "name", "A"),
            y_spec=y_spec,
            fast=getattr(args, "fast", False),
            surface=getattr(args, "surface", "abelian"),
            k=getattr(args, "k", 0),
            g=getattr(args, "g", None),
            gmax=getattr(args, "gmax", None),
            variant=getattr(args, "variant", "point-conditions"),
            output=getattr(args, "output", None),
            seed=option("seed", "verify_seed"),
            suite=getattr(args, "suite", "all"),
            history=getattr(args, "history", None),
            workers=settings.get_typed("verify_workers"),
            record_runs=settings.get_typed("record_verify_runs"),
            assignment=getattr(args, "assignment", None),
        ).validate()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qjf",
        description="Exact q-series of chi_y genera of relative Hilbert "
        "schemes on abelian and K3 surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, output=True):
        p.add_argument("--order", type=int, help="q-order G")
        p.add_argument("--t-order", type=int, dest="t_order")
        p.add_argument("--x-order", type=int, dest="x_order")
        p.add_argument("--format", choices=FORMATS)
        if output:
            p.add_argument("--output", help="write to a file instead")

    series = sub.add_parser("series", help="emit a named series")
    common(series)
    series.add_argument("--name", choices=SERIES_NAMES, default="A")
    y_group = series.add_mutually_exclusive_group()
    y_group.add_argument("--y1", action="store_true", help="evaluate at y=1")
    y_group.add_argument("--y", help="evaluate at a rational square y")
    series.add_argument(
        "--fast", action="store_true", help="closed forms at y = 1"
    )

    table = sub.add_parser("table", help="N^i table over a range of genera")
    common(table)
    table.add_argument("--surface", choices=SURFACES, default="abelian")
    table.add_argument("--k", type=int, default=0)
    table.add_argument("--gmax", type=int)
    table.add_argument(
        "--variant", choices=VARIANTS, default="point-conditions"
    )

    ninv = sub.add_parser("ninv", help="N^i of a single genus")
    common(ninv)
    ninv.add_argument("--surface", choices=SURFACES, default="abelian")
    ninv.add_argument("--g", type=int, required=True)
    ninv.add_argument("--k", type=int, default=0)

    verify = sub.add_parser("verify", help="run the identity checks")
    common(verify, output=False)
    verify.add_argument("--suite", choices=VERIFY_SUITES, default="all")
    verify.add_argument("--seed", type=int)
    verify.add_argument(
        "--history", type=int, help="print the last N recorded runs"
    )

    stored = sub.add_parser("settings", help="list or change stored settings")
    stored.add_argument(
        "--set",
        nargs=2,
        metavar=("KEY", "VALUE"),
        dest="assignment",
        help="store VALUE under KEY before listing",
    )
    return parser


class CLIMenu:
    """Dispatches a RunConfig to the engines and emits the artifact."""

    def __init__(
        self, settings: SettingsManager, stdout: Optional[TextIO] = None
    ) -> None:
        try:
            self.settings = settings
            self.stdout = stdout or sys.stdout
        except Exception as e:
            qjf_log.error(f"CLIMenu __init__ error: {e}")
            raise e

    def __enter__(self) -> "CLIMenu":
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        self.settings.close()

    def emit(self, config: RunConfig, text: str) -> None:
        if config.output:
            extension = "txt" if config.fmt == "text" else config.fmt
            with Filer() as filer:
                path = filer.write_artifact(config.output, text, extension)
            qjf_log.info(f"wrote {path}")
        else:
            self.stdout.write(text)

    def compute_series(self, config: RunConfig):
        try:
            from modules.genfun.euler_specializations import (
                Y1_NAMES,
                series_at_y1,
                specialize_u,
            )

            if config.fast:
                if config.name not in Y1_NAMES:
                    raise ConfigError(f"no y = 1 fast path for {config.name}")
                return series_at_y1(config.name, config.order, config.t_order)
            series = self._exact_series(config)
            if config.y_spec == "1":
                return specialize_u(series, 1)
            if config.y_spec != "formal":
                return specialize_u(series, u_from_y(config.y_spec))
            return series
        except Exception as e:
            qjf_log.error(f"CLIMenu compute_series error: {e}")
            raise e

    def _exact_series(self, config: RunConfig):
        if config.name in GENFUN_NAMES:
            from modules.genfun.genfun_engine import GenFunEngine

            with GenFunEngine(config.order, config.t_order) as engine:
                return engine.series(config.name).series
        from modules.forms.form_series import FormsEngine
        from modules.forms.theta_engine import ThetaEngine

        if config.name == "theta":
            return ThetaEngine(config.order).theta_hat()
        with FormsEngine(config.order) as forms:
            builders = {
                "G2": forms.eisenstein_g2,
                "Delta": forms.discriminant,
                "phi101": forms.phi_10_1,
                "tildeDelta": forms.tilde_delta,
                "tildeDG2": forms.tilde_dg2,
            }
            return builders[config.name]().series

    def run_series(self, config: RunConfig) -> int:
        try:
            series = self.compute_series(config)
            label = config.name if config.y_spec == "formal" else (
                f"{config.name} at y = {config.y_spec}"
            )
            self.emit(config, serialize_series(label, series, config.fmt))
            return EXIT_OK
        except Exception as e:
            qjf_log.error(f"CLIMenu run_series error: {e}")
            raise e

    def run_table(self, config: RunConfig) -> int:
        try:
            from modules.genfun.ktrivial import ktrivial_genfun
            from modules.invariants.refined_invariants import InvariantsEngine

            gmax = config.order if config.gmax is None else config.gmax
            order = max(gmax - 1, 1)
            if config.variant == "hyperplane":
                series = ktrivial_genfun(
                    config.surface,
                    config.k,
                    "hyperplane",
                    order,
                    times_x=True,
                ).series
                name = f"{config.surface} hyperplane k = {config.k}"
                self.emit(config, serialize_series(name, series, config.fmt))
                return EXIT_OK
            with InvariantsEngine(order) as engine:
                table = engine.table(config.surface, config.k, gmax)
            self.emit(
                config,
                serialize_invariants(
                    config.surface, config.k, table, config.fmt
                ),
            )
            return EXIT_OK
        except Exception as e:
            qjf_log.error(f"CLIMenu run_table error: {e}")
            raise e

    def run_ninv(self, config: RunConfig) -> int:
        try:
            from modules.invariants.refined_invariants import (
                refined_invariants,
            )

            values = refined_invariants(config.surface, config.g, config.k)
            self.emit(
                config,
                serialize_invariants(
                    config.surface, config.k, {config.g: values}, config.fmt
                ),
            )
            return EXIT_OK
        except Exception as e:
            qjf_log.error(f"CLIMenu run_ninv error: {e}")
            raise e

    def run_verify(self, config: RunConfig) -> int:
        try:
            if config.history is not None:
                for row in self.settings.verify_history(config.history):
                    run_at, suite, order, passed, failed = row
                    self.stdout.write(
                        f"{run_at} {suite} order {order}: "
                        f"{passed} passed, {failed} failed\n"
                    )
                return EXIT_OK
            from modules.verification.verify_suite import (
                VerifyContext,
                run_suite,
            )

            ctx = VerifyContext(
                config.order, config.t_order, config.x_order, config.seed
            )
            result = run_suite(config.suite, ctx, config.workers)
            self.stdout.write("\n".join(result.lines()) + "\n")
            if config.record_runs:
                self.settings.record_verify_run(
                    config.suite, config.order, result.passed, result.failed
                )
            return EXIT_OK if result.all_passed else EXIT_FAILED
        except Exception as e:
            qjf_log.error(f"CLIMenu run_verify error: {e}")
            raise e

    def run_settings(self, config: RunConfig) -> int:
        try:
            from settings.settings_list import DefaultSettings

            if config.assignment is not None:
                key, value = config.assignment
                self.settings.set_value(key, value)
                qjf_log.info(f"stored {key} = {value}")
            for setting in DefaultSettings(self.settings.hostname).settings:
                value = self.settings.get_value(setting.key)
                self.stdout.write(
                    f"{setting.label} ({setting.key}) = {value}"
                    f"  # {setting.description}\n"
                )
            return EXIT_OK
        except Exception as e:
            qjf_log.error(f"CLIMenu run_settings error: {e}")
            raise e

    def run(self, config: RunConfig) -> int:
        handlers = {
            "series": self.run_series,
            "table": self.run_table,
            "ninv": self.run_ninv,
            "verify": self.run_verify,
            "settings": self.run_settings,
        }
        return handlers[config.command](config)


def run_cli(
    argv: Optional[List[str]] = None,
    settings: Optional[SettingsManager] = None,
    stdout: Optional[TextIO] = None,
) -> int:
    """Parse argv, run the command and return the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_CONFIG if e.code else EXIT_OK
    settings = settings or SettingsManager()
    try:
        config = RunConfig.from_args(args, settings)
        with CLIMenu(settings, stdout) as menu:
            return menu.run(config)
    except ConfigError as e:
        qjf_log.error(f"invalid configuration: {e}")
        return EXIT_CONFIG
    except Exception as e:
        qjf_log.critical(f"qjf {args.command} failed: {e}")
        return EXIT_FAILED


__all__ = [
    "COMMANDS",
    "SERIES_NAMES",
    "RunConfig",
    "CLIMenu",
    "build_parser",
    "run_cli",
    "u_from_y",
]
