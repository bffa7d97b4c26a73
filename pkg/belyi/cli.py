# Description: Command-line entry point: dessin tools, the icosahedral catalog and the verification suites.
import argparse
import json
import logging
import re
import sys
from pathlib import Path
from typing import Optional, Sequence

from belyi.config import Settings, get_settings
from belyi.dessin import (
    are_isomorphic,
    automorphism_group,
    dual,
    from_document,
    genus,
    passport,
    quotient,
    to_document,
)
from belyi.enums import ExitCode, Suite
from belyi.exceptions import BelyiError
from belyi.icosa_catalog import build_diagram, build_i0, build_i4, diagram_dot, family_json, quotient_family
from belyi.perm_core import Permutation
from belyi.suites import VerificationReport, run_suite

logger = logging.getLogger(__name__)

_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> list[list[int]]:
    """
    Parse cycle notation such as "(1 2)(3 4 5)" or "(1,2)(3,4,5)" into 1-based cycles.

    >>> parse_cycles("(1 2)(3,4,5)")
    [[1, 2], [3, 4, 5]]
    """
    cycles = []
    for body in _CYCLE.findall(text):
        try:
            cycle = [int(token) for token in re.split(r"[\s,]+", body.strip()) if token]
        except ValueError:
            raise argparse.ArgumentTypeError(f"invalid cycle {body!r} in {text!r}") from None
        if cycle:
            cycles.append(cycle)
    if not cycles and text.strip() not in ("", "()"):
        raise argparse.ArgumentTypeError(f"no cycles in {text!r}")
    return cycles


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--verbose", action="store_true", help="log at DEBUG level")
    return common


def _verify_flags(common: argparse.ArgumentParser) -> argparse.ArgumentParser:
    verify = argparse.ArgumentParser(add_help=False, parents=[common])
    verify.add_argument("--tol", type=float, default=None, help="numeric tolerance (default 1e-8)")
    verify.add_argument("--record", action="store_true", help="store verification runs in the database")
    return verify


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    verify = _verify_flags(common)
    parser = argparse.ArgumentParser(prog="belyi", description="Verify Belyi maps and quotients of Bring's curve")
    commands = parser.add_subparsers(dest="command", required=True)

    dessin_parser = commands.add_parser("dessin", help="inspect dessins given as JSON documents")
    dessin_commands = dessin_parser.add_subparsers(dest="action", required=True)
    info = dessin_commands.add_parser("info", parents=[common], help="passport, genus and automorphisms")
    info.add_argument("--file", type=Path, required=True)
    dual_parser = dessin_commands.add_parser("dual", parents=[common], help="the dual dessin")
    dual_parser.add_argument("--file", type=Path, required=True)
    quotient_parser = dessin_commands.add_parser("quotient", parents=[common], help="quotient by automorphisms")
    quotient_parser.add_argument("--file", type=Path, required=True)
    quotient_parser.add_argument("--gen", type=parse_cycles, action="append", default=[],
                                 help='automorphism in cycle notation, e.g. "(1 2)(3 4)"; repeatable')
    iso = dessin_commands.add_parser("iso", parents=[common], help="decide isomorphism of two dessins")
    iso.add_argument("--file", type=Path, required=True)
    iso.add_argument("--other", type=Path, required=True)

    catalog_parser = commands.add_parser("catalog", help="the icosahedral dessins and their quotients")
    catalog_commands = catalog_parser.add_subparsers(dest="action", required=True)
    catalog_commands.add_parser("build", parents=[common], help="I0 and I4")
    catalog_commands.add_parser("family", parents=[common], help="the nine quotients of I4")
    diagram = catalog_commands.add_parser("diagram", parents=[common], help="quotient diagram as DOT")
    diagram.add_argument("--output", type=Path, default=None)

    for name, help_text in (
        ("verify-belyi", "exact checks of the quotient Belyi maps"),
        ("verify-curves", "exact checks of the quotient curve equations"),
        ("verify-bring", "numeric checks on Bring's curve"),
        ("all", "every check"),
    ):
        command = commands.add_parser(name, parents=[verify], help=help_text)
        if name in ("verify-bring", "all"):
            command.add_argument("--samples", type=int, default=None)
            command.add_argument("--seed", type=int, default=None)
    return parser


_SUITES = {
    "verify-belyi": Suite.BELYI,
    "verify-curves": Suite.CURVES,
    "verify-bring": Suite.BRING,
    "all": Suite.ALL,
}


def _settings(args: argparse.Namespace) -> Settings:
    overrides = {
        "tolerance": args.tol,
        "samples": getattr(args, "samples", None),
        "seed": getattr(args, "seed", None),
    }
    return get_settings().model_copy(update={k: v for k, v in overrides.items() if v is not None})


def _load(path: Path):
    return from_document(json.loads(path.read_text()))


def _emit(payload, as_json: bool, text: str) -> None:
    print(json.dumps(payload, indent=2) if as_json else text)


def _record(suite: Suite, report: VerificationReport) -> None:
    from belyi.crud import create_run
    from belyi.database import SessionLocal, engine
    from belyi.models import Base

    Base.metadata.create_all(bind=engine)
    with SessionLocal() as db:
        run = create_run(db=db, suite=suite, report=report)
        logger.info("stored verification run %d", run.id)


def _dessin_command(args: argparse.Namespace) -> ExitCode:
    d = _load(args.file)
    if args.action == "info":
        p = passport(d)
        payload = {"n": d.n_darts, "genus": genus(d), "passport": str(p), **p.as_lists(),
                   "automorphism_order": automorphism_group(d).order}
        text = f"genus {payload['genus']}, passport {p}\nautomorphism group of order {payload['automorphism_order']}"
        _emit(payload, args.json, text)
    elif args.action == "dual":
        document = to_document(dual(d))
        _emit(document, True, "")
    elif args.action == "quotient":
        generators = [Permutation.from_cycles(cycles, d.n_darts) for cycles in args.gen]
        _emit(to_document(quotient(d, generators)), True, "")
    else:
        verdict = are_isomorphic(d, _load(args.other))
        _emit({"isomorphic": verdict}, args.json, "isomorphic" if verdict else "not isomorphic")
    return ExitCode.OK


def _catalog_command(args: argparse.Namespace) -> ExitCode:
    if args.action == "build":
        payload = {}
        for name, d in (("I0", build_i0()), ("I4", build_i4())):
            payload[name] = {"passport": passport(d).compact(), "genus": genus(d),
                             "automorphism_order": automorphism_group(d).order}
        text = "\n".join(f"{name}: passport {v['passport']}, genus {v['genus']}, |Aut| = {v['automorphism_order']}"
                         for name, v in payload.items())
        _emit(payload, args.json, text)
    elif args.action == "family":
        nodes = family_json(quotient_family())
        text = "\n".join(f"I4/{n['group']}: {n['darts']} darts, genus {n['genus']}, passport {n['passport']}"
                         for n in nodes)
        _emit(nodes, args.json, text)
    else:
        dot = diagram_dot(build_diagram())
        if args.output is None:
            sys.stdout.write(dot)
        else:
            args.output.write_text(dot)
    return ExitCode.OK


def _verify_command(args: argparse.Namespace) -> ExitCode:
    suite = _SUITES[args.command]
    report = run_suite(suite, _settings(args))
    _emit(report.as_dict(), args.json, report.text())
    if args.record:
        _record(suite, report)
    return ExitCode.OK if report.passed else ExitCode.FAILURE


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the command line and return its exit code.

    Explanation:
    Exit code 0 means every selected check passed, 1 means a verification failed, and 2 means a usage error or
        unreadable input.

    Args:
        - argv (Sequence[str] | None): Arguments without the program name. Defaults to ``sys.argv[1:]``.

    Returns:
        - int: The exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    try:
        if args.command == "dessin":
            return _dessin_command(args)
        if args.command == "catalog":
            return _catalog_command(args)
        return _verify_command(args)
    except (BelyiError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return ExitCode.USAGE


if __name__ == "__main__":
    sys.exit(main())
