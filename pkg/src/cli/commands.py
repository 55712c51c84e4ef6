"""
Command Implementations
Each cmd_* takes the parsed arguments and returns a process exit code:
0 pass, 1 check failure, 2 parse error, 3 domain error, 4 solver non-convergence
"""

import logging
import sys
from typing import Dict, List, Optional

from src.config.settings import get_settings
from src.database import SessionLocal, init_db
from src.divergence.alpha_divergence import alpha_divergence
from src.lp.embedding import alpha_embed, duality_map, order_to_alpha
from src.lp.lp_space import schatten_norm
from src.projection.alpha_projection import alpha_project
from src.projection.certificates import optimality_residuals
from src.projection.solver import SolverOptions, project_Dp
from src.quasientropy.modular import alpha_via_quasientropy, modular_spectrum, quasi_entropy
from src.reports.report_generator import ReportGenerator, encode_value
from src.reports.reproducibility import ReproducibilityChecker
from src.utils.codec import (
    convex_set_from_dict,
    functional_from_dict,
    functional_to_dict,
    load_functional,
    lp_vector_from_dict,
    lp_vector_to_dict,
)
from src.utils.errors import (
    EXIT_CHECK_FAILED,
    EXIT_OK,
    EXIT_SOLVER_ERROR,
    NCGeomError,
)
from src.utils.file_utils import FileUtils
from src.verification.checks import CHECKS
from src.verification.property_suite import PropertySuite
from src.verification.suite_config import load_suite_config
from .parser import build_parser

logger = logging.getLogger(__name__)

ORACLE_TOL = 1e-9


def _arg(args, name: str, default=None):
    value = getattr(args, name, None)
    return default if value is None else value


def emit(result: Dict, args) -> None:
    """Print a JSON result (17 significant digits) or write it to --out"""
    text = encode_value(result)
    out = _arg(args, "out")
    if out:
        FileUtils.write_text(text + "\n", out)
        print(f"✅ Result written: {out}", file=sys.stderr)
    else:
        print(text)


def cmd_divergence(args) -> int:
    phi = load_functional(args.phi)
    psi = load_functional(args.psi)
    value = alpha_divergence(phi, psi, args.alpha)
    result = {"value": value.value, "lower_bound": value.lower_bound}
    if args.oracle:
        oracle = alpha_via_quasientropy(phi, psi, args.alpha)
        scale = 1.0 + max(abs(oracle), abs(value.value))
        result["oracle_value"] = oracle
        result["agreement"] = abs(oracle - value.value) / scale <= _arg(args, "tol", ORACLE_TOL)
    emit(result, args)
    return EXIT_OK


def _solver_options(args) -> SolverOptions:
    settings = get_settings()
    return SolverOptions(
        tolerance=_arg(args, "tol", settings.solver_tol),
        max_iter=_arg(args, "max_iter", settings.solver_max_iter),
        seed=_arg(args, "seed"),
        certificate_samples=_arg(args, "samples", settings.certificate_samples),
    )


def cmd_project(args) -> int:
    data = FileUtils.load_json(args.y)
    C = convex_set_from_dict(FileUtils.load_json(args.set_file))
    options = _solver_options(args)
    seed = _arg(args, "seed", 0)

    if isinstance(data, dict) and "p" in data:
        y = lp_vector_from_dict(data)
        result = project_Dp(y, C, options)
        output = result.to_dict()
        output["x_m"] = lp_vector_to_dict(result.x_m)
        output["certificates"] = optimality_residuals(
            result.x_m, y, C, samples=options.certificate_samples, seed=seed
        )
    else:
        psi = functional_from_dict(data)
        alpha = _arg(args, "alpha", order_to_alpha(C.order))
        projection = alpha_project(psi, C, alpha, options, samples=options.certificate_samples, seed=seed)
        result = projection.result
        output = projection.to_dict()
        output["alpha"] = alpha
        output["x_m"] = lp_vector_to_dict(result.x_m)
        output["omega_m"] = functional_to_dict(projection.omega_m)
        output["certificates"] = optimality_residuals(
            result.x_m, alpha_embed(psi, alpha), C, samples=options.certificate_samples, seed=seed
        )

    emit(output, args)
    if not result.converged:
        print(f"⚠️  Solver did not converge (kkt residual {result.kkt_residual:.3e})", file=sys.stderr)
        return EXIT_SOLVER_ERROR
    return EXIT_OK


def cmd_embed(args) -> int:
    omega = load_functional(args.omega)
    x = alpha_embed(omega, args.alpha)
    result = lp_vector_to_dict(x)
    result["norm"] = schatten_norm(x)
    if args.dual:
        result["dual"] = lp_vector_to_dict(duality_map(x))
    emit(result, args)
    return EXIT_OK


def _function_argument(raw: str):
    if raw.endswith(".json"):
        return FileUtils.load_json(raw)
    return raw


def cmd_spectrum(args) -> int:
    phi = load_functional(args.phi)
    psi = load_functional(args.psi)
    result = modular_spectrum(phi, psi, strict=args.strict).to_dict()
    if args.function:
        result["function"] = args.function
        result["quasi_entropy"] = quasi_entropy(
            _function_argument(args.function), phi, psi, strict=args.strict
        )
    emit(result, args)
    return EXIT_OK


def _default_report_path(config) -> str:
    suffix = "csv" if config.format == "csv" else "jsonl"
    return f"{get_settings().report_dir}/suite_seed{config.seed}.{suffix}"


def cmd_verify(args) -> int:
    if args.list_checks:
        for name in sorted(CHECKS):
            print(name)
        return EXIT_OK

    config = load_suite_config(
        args.config,
        seed=_arg(args, "seed"),
        tolerance_override=_arg(args, "tol"),
        checks=args.checks,
        workers=args.workers,
        output=_arg(args, "out"),
        format=_arg(args, "format"),
    )
    report = PropertySuite(config).run()

    out = config.output or _default_report_path(config)
    ReportGenerator().write(report.rows, out, config.format, summary=report.summary())

    if args.record or args.compare_baseline:
        _archive(report, record=args.record, compare=args.compare_baseline)

    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def _archive(report, record: bool, compare: bool) -> Optional[Dict]:
    init_db()
    db = SessionLocal()
    try:
        checker = ReproducibilityChecker(db)
        comparison = checker.check(report) if compare else None
        if record:
            checker.record(report)
        return comparison
    finally:
        db.close()


COMMANDS = {
    "divergence": cmd_divergence,
    "project": cmd_project,
    "embed": cmd_embed,
    "spectrum": cmd_spectrum,
    "verify": cmd_verify,
}


def run_command(args) -> int:
    """Dispatch and map toolkit errors onto exit codes"""
    try:
        return COMMANDS[args.command](args)
    except NCGeomError as e:
        print(f"❌ Error: {e}", file=sys.stderr)
        logger.debug("command failed", exc_info=True)
        return e.exit_code


def main(argv: List[str] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if getattr(args, "verbose", False) else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    return run_command(args)
