"""Command line front end.

Exit status: 0 for an affirmative result, 1 for a negative verdict, 2 for
bad input. Results go to stdout, logs and error messages to stderr.
"""
import argparse
import logging
import sys
from typing import List, Optional, Sequence

from dependency_injector import providers

from app import config
from app.container import Container
from app.domain.atom import Sign, Signature
from app.domain.catalog import Catalog
from app.domain.errors import MoleculeError
from app.domain.verdict import Verdict
from app.services.molecule_serializers import MoleculeSerializer
from app.services.oracle import OracleService
from app.services.worked_examples import verify_worked_examples

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT_ERROR = 2


def _signature_flags(parser: argparse.ArgumentParser, caps_required: bool = False):
    parser.add_argument("--factors", type=int, help="number of globe factors (default: arity of the first atom)")
    parser.add_argument("--twists", help="twist parities t1,..,tN (default all 0)")
    parser.add_argument("--caps", required=caps_required, help="dimension caps c1,..,cN for a finite product")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="molecules",
        description="Check, compose, decompose and enumerate molecules in products of globes",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log algorithm steps to stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser("check", help="molecule verdict for a subcomplex")
    _signature_flags(check)
    check.add_argument("--explicit", action="store_true", help="use the explicit condition list")
    check.add_argument("subcomplex")

    boundary = commands.add_parser("boundary", help="d_p of a molecule with the given sign")
    _signature_flags(boundary)
    boundary.add_argument("-p", type=int, required=True)
    boundary.add_argument("--sign", choices=["-", "+"], default="-")
    boundary.add_argument("subcomplex")

    for name, help_text in (("source", "d_p^- of a molecule"), ("target", "d_p^+ of a molecule")):
        sub = commands.add_parser(name, help=help_text)
        _signature_flags(sub)
        sub.add_argument("-p", type=int, required=True)
        sub.add_argument("subcomplex")

    compose = commands.add_parser("compose", help="x #_p y")
    _signature_flags(compose)
    compose.add_argument("-p", type=int, required=True)
    compose.add_argument("left")
    compose.add_argument("right")

    decompose = commands.add_parser("decompose", help="expression tree of atoms for a molecule")
    _signature_flags(decompose)
    decompose.add_argument("subcomplex")

    project = commands.add_parser("project", help="projection dropping one factor")
    _signature_flags(project)
    project.add_argument("--axis", type=int, required=True, help="factor to drop, numbered from 1")
    project.add_argument("--level", type=int, required=True)
    project.add_argument("subcomplex")

    enumerate_ = commands.add_parser("enumerate", help="molecules of u x v x w within caps, by construction")
    enumerate_.add_argument("--caps", required=True, help="a,b,c")
    enumerate_.add_argument("--mode", choices=["signed", "capped"], default="capped")
    enumerate_.add_argument("--output", help="write a catalog file instead of printing")

    oracle_enumerate = commands.add_parser("oracle-enumerate", help="molecules of a finite product by brute force")
    oracle_enumerate.add_argument("--caps", required=True)
    oracle_enumerate.add_argument("--twists")
    oracle_enumerate.add_argument("--max-atomsets", type=int, help="worklist bound (default ORACLE_MAX_ATOMSETS)")
    oracle_enumerate.add_argument("--check-axioms", action="store_true", help="also check the category axioms")
    oracle_enumerate.add_argument("--output", help="write a catalog file instead of printing")

    oracle_check = commands.add_parser("oracle-check", help="brute-force molecule verdict on a finite product")
    _signature_flags(oracle_check, caps_required=True)
    oracle_check.add_argument("--max-atomsets", type=int)
    oracle_check.add_argument("subcomplex")

    commands.add_parser(
        "verify-paper-examples", aliases=["verify-examples"], help="reproduce every worked example"
    )
    return parser


def _ints(text: Optional[str]) -> List[int]:
    if not text:
        return []
    return [int(part) for part in text.split(",")]


def _signature(args, *texts: str) -> Signature:
    factors = args.factors
    if factors is None:
        for text in texts:
            atoms = MoleculeSerializer.parse_atoms(text)
            if atoms:
                factors = atoms[0].arity
                break
        else:
            raise MoleculeError("cannot infer the number of factors from an empty subcomplex; pass --factors")
    return MoleculeSerializer.parse_signature(factors, args.twists, args.caps)


def _print_verdict(verdict: Verdict) -> int:
    print(verdict.describe())
    for line in verdict.explain():
        print(line)
    return EXIT_OK if verdict else EXIT_NEGATIVE


def _emit_catalog(catalog: Catalog, output: Optional[str], container: Container) -> int:
    if output:
        path = container.catalog_files_repository().write(catalog, output)
        print(f"{len(catalog.entries)} entries written to {path}")
        return EXIT_OK
    sys.stdout.write(container.catalog_files_repository().dumps(catalog))
    return EXIT_OK


def dispatch(args, container: Container) -> int:
    serializer = container.molecule_serializer()
    service = container.molecule_service()
    command = args.command

    if command in ("verify-paper-examples", "verify-examples"):
        results = verify_worked_examples()
        for name, ok in results:
            print(f"{'ok  ' if ok else 'FAIL'} {name}")
        return EXIT_OK if all(ok for _, ok in results) else EXIT_NEGATIVE

    if command == "enumerate":
        catalog = container.enumeration_service().enumerate3(_ints(args.caps), mode=args.mode)
        return _emit_catalog(catalog, args.output, container)

    if command in ("oracle-enumerate", "oracle-check") and args.max_atomsets:
        container.oracle_service.override(providers.Singleton(OracleService, max_atomsets=args.max_atomsets))

    if command == "oracle-enumerate":
        oracle = container.oracle_service()
        caps, twists = _ints(args.caps), _ints(args.twists)
        catalog = oracle.enumerate(caps, twists)
        if args.check_axioms:
            report = oracle.check_axioms(caps, twists)
            for axiom in sorted(report.checked):
                logger.info("axiom %s: %d instances", axiom, report.checked[axiom])
            for axiom, message in sorted(report.failures.items()):
                print(f"axiom {axiom} fails: {message}", file=sys.stderr)
            if not report.ok:
                return EXIT_NEGATIVE
        return _emit_catalog(catalog, args.output, container)

    if command == "compose":
        signature = _signature(args, args.left, args.right)
        left = serializer.parse_subcomplex(args.left, signature)
        right = serializer.parse_subcomplex(args.right, signature)
        print(serializer.format_subcomplex(service.compose(left, args.p, right)))
        return EXIT_OK

    x = serializer.parse_subcomplex(args.subcomplex, _signature(args, args.subcomplex))
    if command == "check":
        return _print_verdict(service.check(x, explicit=args.explicit))
    if command == "oracle-check":
        ok = container.oracle_service().is_molecule(x)
        print("molecule" if ok else "not-molecule: oracle")
        return EXIT_OK if ok else EXIT_NEGATIVE
    if command == "boundary":
        result = service.boundary(x, args.p, Sign.from_symbol(args.sign))
    elif command == "source":
        result = service.source(x, args.p)
    elif command == "target":
        result = service.target(x, args.p)
    elif command == "decompose":
        print(serializer.format_expr(service.decompose(x)))
        return EXIT_OK
    elif command == "project":
        result = service.project(x, args.axis - 1, args.level)
    else:
        raise MoleculeError(f"unknown command {command!r}")
    print(serializer.format_subcomplex(result))
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None, container: Optional[Container] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else config.LOG_LEVEL, stream=sys.stderr)
    container = container or Container()
    try:
        return dispatch(args, container)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
