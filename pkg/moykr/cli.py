"""
Command-line interface for moykr.

Usage:
    moykr jones --n 3 --k 4
    moykr homfly --braid "w=2: 1 1 1" --spec-jones
    moykr kr --n 2 --k 2 --format json
    moykr table --n-range 2..4 --k-range 1..5
    moykr verify [GROUP ...]

Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence, Tuple

import pydantic

from .config import COMPUTATION_COMMANDS, Command, Config, OutputFormat, PivotOrder, RunConfig
from .core.closure_homology import (
    Bigrading,
    euler,
    homology_table,
    kr_poincare_from_complex,
    kr_poincare_unknot,
)
from .core.diagram import BraidWord, parse_braid
from .core.homfly import homfly, homfly_to_jones, homfly_torus2
from .core.kr import KRComplex, identity_complex, render, torus2_complex
from .core.moy_eval import jones, jones_torus2
from .core.ring import LaurentPoly
from .core.verify import GROUPS, Verifier
from .exceptions import (
    ConfigurationError,
    MoyKrError,
    UnsupportedWidthError,
    UsageError,
    VerificationError,
)
from .models.results import CommandOutput, HomologyEntry, KRResult, TableRow


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

Handled = Tuple[int, Any, str]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="moykr",
        description="Jones, HOMFLY-PT and Khovanov-Rozansky invariants of 2-strand braid links",
    )
    parser.add_argument("command", choices=[c.value for c in Command])
    parser.add_argument("groups", nargs="*",
                        help=f"Verification groups to run (verify only): {', '.join(GROUPS)}")
    parser.add_argument("--n", type=int, default=None, help="Level n >= 2")
    parser.add_argument("--k", type=int, default=None, help="Crossings of the (2, k) torus link")
    parser.add_argument("--braid", default=None, help='Braid text, e.g. "w=2: 1 1 1"')
    parser.add_argument("--format", dest="output_format", default=OutputFormat.TEXT.value,
                        choices=[f.value for f in OutputFormat])
    parser.add_argument("--n-range", default="2..4", help="Levels for table, A..B")
    parser.add_argument("--k-range", default="1..4", help="Crossings for table, A..B")
    parser.add_argument("--spec-jones", action="store_true",
                        help="Check the HOMFLY-PT value against the level-n Jones polynomial")
    parser.add_argument("--config", default=None, help="JSON engine configuration file")
    parser.add_argument("--log-level", default=None, help="Log level for the moykr logger")
    parser.add_argument("--pivot-order", default=None, choices=[p.value for p in PivotOrder])
    return parser


def load_config(args: argparse.Namespace) -> Config:
    """Engine configuration from --config, with flag overrides."""
    config = Config.from_file(args.config) if args.config else Config()
    if args.log_level:
        config.log_level = args.log_level
    if args.pivot_order:
        config.pivot_order = PivotOrder(args.pivot_order)
    return config


def build_run_config(args: argparse.Namespace, config: Config) -> RunConfig:
    command = Command(args.command)
    if args.groups and command is not Command.VERIFY:
        raise UsageError(f"Unexpected arguments for {command.value}: {' '.join(args.groups)}")
    k = args.k
    if k is None and args.braid is None and command in COMPUTATION_COMMANDS:
        k = config.default_crossings
    return RunConfig(
        command=command,
        n=args.n if args.n is not None else config.default_level,
        k=k,
        braid=args.braid,
        output_format=args.output_format,
        n_range=args.n_range,
        k_range=args.k_range,
        spec_jones=args.spec_jones,
    )


# Commands

def _braid(run_config: RunConfig) -> Optional[BraidWord]:
    return parse_braid(run_config.braid) if run_config.braid is not None else None


def _jones(run_config: RunConfig, config: Config) -> Handled:
    b = _braid(run_config)
    value = jones(b, run_config.n) if b is not None else jones_torus2(run_config.k, run_config.n)
    return EXIT_OK, str(value), str(value)


def _homfly(run_config: RunConfig, config: Config) -> Handled:
    n = run_config.n
    b = _braid(run_config)
    value = homfly(b, n) if b is not None else homfly_torus2(run_config.k, n)
    if not run_config.spec_jones:
        return EXIT_OK, str(value), str(value)
    specialized = homfly_to_jones(value, n)
    expected = jones(b, n) if b is not None else jones_torus2(run_config.k, n)
    matches = specialized == expected
    if not matches:
        logger.error("HOMFLY-PT specialization %s differs from %s", specialized, expected)
    result = {"homfly": str(value), "jones": str(specialized), "matches": matches}
    text = f"homfly: {value}\njones: {specialized}\nmatches: {'yes' if matches else 'no'}"
    return (EXIT_OK if matches else EXIT_FAILURE), result, text


def braid_complex(b: BraidWord, n: int, config: Config) -> KRComplex:
    """Reduced complex of a positive 2-strand braid.

    Raises:
        UnsupportedWidthError: If the braid does not have two strands.
        UsageError: If the braid has negative crossings.
    """
    if b.width != 2:
        raise UnsupportedWidthError(width=b.width)
    if not b.is_positive():
        raise UsageError("Khovanov-Rozansky complexes are built for positive braids only")
    if not b.letters:
        return identity_complex()
    return torus2_complex(len(b.letters), n, order=config.pivot_order,
                          check=config.check_invariants)


def _summary(complex_text: str, h: Dict[Bigrading, int], poincare: LaurentPoly) -> KRResult:
    return KRResult(
        complex=complex_text,
        euler=str(euler(poincare)),
        homology=[HomologyEntry(hdeg=hdeg, qdeg=q, dim=dim) for hdeg, q, dim in homology_table(h)],
        poincare=str(poincare),
    )


def kr_result(c: KRComplex, n: int) -> KRResult:
    """Homology, Poincaré polynomial and Euler characteristic of the closure of ``c``."""
    return _summary(render(c), *kr_poincare_from_complex(c, n))


def unknot_kr_result(n: int) -> KRResult:
    """The closure of the empty braid on one strand."""
    return _summary("deg 0: Id1{0}", *kr_poincare_unknot(n))


def torus_kr_result(k: int, n: int, config: Config) -> KRResult:
    c = torus2_complex(k, n, order=config.pivot_order, check=config.check_invariants)
    return kr_result(c, n)


def _kr(run_config: RunConfig, config: Config) -> Handled:
    n = run_config.n
    b = _braid(run_config)
    if b is not None and b.width == 1:
        result = unknot_kr_result(n)
    elif b is not None:
        result = kr_result(braid_complex(b, n, config), n)
    else:
        result = torus_kr_result(run_config.k, n, config)
    lines = [result.complex, "homology (hdeg qdeg dim):"]
    lines += [f"  {e.hdeg} {e.qdeg} {e.dim}" for e in result.homology]
    lines += [f"poincare: {result.poincare}", f"euler: {result.euler}"]
    return EXIT_OK, result.to_dict(), "\n".join(lines)


def _table(run_config: RunConfig, config: Config) -> Handled:
    (n_low, n_high), (k_low, k_high) = run_config.n_range, run_config.k_range
    rows = [
        TableRow(n=n, k=k, poincare=torus_kr_result(k, n, config).poincare)
        for n in range(n_low, n_high + 1)
        for k in range(k_low, k_high + 1)
    ]
    text = "\n".join(f"n={row.n} k={row.k}: {row.poincare}" for row in rows)
    return EXIT_OK, [row.to_dict() for row in rows], text


def _verify(run_config: RunConfig, config: Config, groups: Sequence[str] = ()) -> Handled:
    report = Verifier(config).run(groups or None)
    lines = []
    for group in report.groups:
        lines.append(f"{group.name}: {'pass' if group.passed else 'FAIL'} ({group.checks} checks)")
        lines += [f"  failed: {failure}" for failure in group.failures]
        lines += [f"  note: {note}" for note in group.notes]
    code = EXIT_OK
    try:
        report.raise_for_failures()
    except VerificationError as e:
        logger.error("%s", e)
        code = EXIT_FAILURE
    return code, report.to_dict(), "\n".join(lines)


_HANDLERS = {
    Command.JONES: _jones,
    Command.HOMFLY: _homfly,
    Command.KR: _kr,
    Command.TABLE: _table,
}


def run(run_config: RunConfig, config: Optional[Config] = None,
        groups: Sequence[str] = ()) -> Tuple[int, str]:
    """Execute one command and render its output.

    Returns:
        The exit code and the rendered output.
    """
    config = config or Config()
    if run_config.command is Command.VERIFY:
        code, result, text = _verify(run_config, config, groups)
    else:
        code, result, text = _HANDLERS[run_config.command](run_config, config)
    if run_config.output_format is OutputFormat.JSON:
        output = CommandOutput(command=run_config.command.value, params=run_config.params(),
                               result=result)
        return code, output.to_json()
    return code, text


def configure_logging(config: Config) -> None:
    """Console logging for the moykr logger; the library itself installs no handlers."""
    logging.basicConfig(format=LOG_FORMAT)
    logging.getLogger("moykr").setLevel(config.log_level)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if not e.code else EXIT_USAGE

    try:
        config = load_config(args)
        configure_logging(config)
        run_config = build_run_config(args, config)
        code, text = run(run_config, config, args.groups)
    except (UsageError, ConfigurationError, pydantic.ValidationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except MoyKrError as e:
        logger.error("Computation failed: %s", e)
        return EXIT_FAILURE

    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
